//! Seeded random generators for the verification suites. All randomness
//! flows from one ChaCha stream per suite run, so reports are
//! reproducible from the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mnov_core::dectree::DecTree;
use mnov_core::genidx::{self, GenPoly};
use mnov_core::magnov::MagmaTerm;
use mnov_core::spdeidx::{self, NormalWord, SpdePoly, WordLetter};
use mnov_core::{Gen, Letter, MultiIdx, Poly, Scalar};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn nat(&mut self, max: u32) -> u32 {
        self.rng.gen_range(0..=max)
    }

    /// Nonzero rational with small numerator and denominator.
    pub fn scalar(&mut self) -> Scalar {
        let num = loop {
            let n = self.rng.gen_range(-4i64..=4);
            if n != 0 {
                break n;
            }
        };
        Scalar::ratio(num, self.rng.gen_range(1i64..=3))
    }

    /// Coordinate letter in `ℕ^{d+1}` with total weight at most
    /// `max_weight` (zero weight included).
    pub fn coord_letter(&mut self, dims: usize, max_weight: u32) -> Letter {
        let weight = self.nat(max_weight);
        let mut coords = vec![0u32; dims + 1];
        for _ in 0..weight {
            let i = self.index(dims + 1);
            coords[i] += 1;
        }
        Letter::coord(coords)
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.index(xs.len())]
    }

    /// Random combination of basis elements drawn from per-degree pools:
    /// one or two terms with small rational coefficients.
    pub fn poly_from_pools<M: Ord + Clone>(&mut self, pools: &[Vec<M>]) -> Poly<M> {
        let mut out = Poly::zero();
        let terms = self.rng.gen_range(1..=2usize);
        for _ in 0..terms {
            let pool = loop {
                let p = self.pick(pools);
                if !p.is_empty() {
                    break p;
                }
            };
            let m = self.pick(pool).clone();
            out.add_term(m, self.scalar());
        }
        out
    }

    /// Random canonical decorated tree with exactly `vertices` vertices.
    pub fn dec_tree(
        &mut self,
        letters: &[Letter],
        labels: &[Gen],
        dims: usize,
        x_cap: u32,
        vertices: u32,
    ) -> DecTree {
        let noise = *self.pick(labels);
        let mut x_exp = MultiIdx::new();
        for i in 0..=dims {
            let e = self.nat(x_cap);
            x_exp.add(i as u32, e);
        }
        let mut children = Vec::new();
        let mut remaining = vertices - 1;
        while remaining > 0 {
            let size = self.rng.gen_range(1..=remaining);
            let sub = self.dec_tree(letters, labels, dims, x_cap, size);
            children.push((self.pick(letters).clone(), sub));
            remaining -= size;
        }
        DecTree::node(x_exp, children, noise)
    }

    /// Random raw word of the given length over capped coordinate
    /// letters and partial symbols.
    pub fn raw_word(&mut self, dims: usize, weight_cap: u32, len: usize) -> Vec<WordLetter> {
        (0..len)
            .map(|_| {
                if self.rng.gen_bool(0.5) {
                    WordLetter::Partial(self.index(dims + 1) as u32)
                } else {
                    WordLetter::Deriv(self.coord_letter(dims, weight_cap))
                }
            })
            .collect()
    }

    /// Random SPDE variable polynomial with small words.
    pub fn spde_variable_poly(&mut self, dims: usize, weight_cap: u32) -> SpdePoly {
        let mut derivs = MultiIdx::new();
        for _ in 0..self.nat(2) {
            derivs.add(self.coord_letter(dims, weight_cap), 1);
        }
        let mut partials = MultiIdx::new();
        for _ in 0..self.nat(2) {
            partials.add(self.index(dims + 1) as u32, 1);
        }
        let mut mono = MultiIdx::new();
        mono.add(
            spdeidx::SpdeVar::new(Gen(0), NormalWord::new(derivs, partials)),
            1,
        );
        if self.rng.gen_bool(0.5) {
            mono.add(spdeidx::SpdeVar::bare(Gen(0)), self.nat(1) + 1);
        }
        Poly::term(mono, self.scalar())
    }

    /// Random magmatic term with exactly `leaves` leaves.
    pub fn magma_term(&mut self, letters: &[Letter], labels: &[Gen], leaves: u32) -> MagmaTerm {
        if leaves == 1 {
            return MagmaTerm::leaf(*self.pick(labels));
        }
        let left = self.rng.gen_range(1..leaves);
        let l = self.magma_term(letters, labels, left);
        let r = self.magma_term(letters, labels, leaves - left);
        MagmaTerm::node(self.pick(letters).clone(), l, r)
    }
}
