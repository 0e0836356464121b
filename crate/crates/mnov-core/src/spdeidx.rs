//! SPDE multi-indices: a mixed word algebra in derivative letters
//! `n ∈ ℕ^{d+1}` and partial symbols `d_i`, subject to
//! `d_i n = n_i (n - e_i) + n d_i` with each group commuting internally;
//! formal variables `z_{(l,α)}` linear in the word argument; the
//! derivation families `D^{(n)}` and `∂_i`; the populated condition; and
//! a desk-scale report comparing the generated span against the populated
//! monomial count.

use alloc::vec::Vec;

use crate::algebra::MultiPreLie;
use crate::letter::{Gen, Letter};
use crate::linalg::Span;
use crate::multiidx::MultiIdx;
use crate::poly::{apply_derivation, Poly};
use crate::scalar::Scalar;

/// One symbol of a raw word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum WordLetter {
    /// A derivative letter `n ∈ ℕ^{d+1}`.
    Deriv(Letter),
    /// A partial symbol `d_i`.
    Partial(u32),
}

/// Word in normal form: the commuting derivative letters first, then the
/// commuting partial symbols, both as multisets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct NormalWord {
    pub derivs: MultiIdx<Letter>,
    pub partials: MultiIdx<u32>,
}

impl NormalWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(derivs: MultiIdx<Letter>, partials: MultiIdx<u32>) -> Self {
        NormalWord { derivs, partials }
    }

    /// `|α|`: the number of derivative letters, ignoring partials.
    pub fn letter_count(&self) -> u32 {
        self.derivs.total()
    }

    /// The word with the derivative letter `n` prepended; prepending
    /// commutes past the other derivative letters, so no correction
    /// terms arise.
    pub fn prepend_deriv(&self, n: &Letter) -> NormalWord {
        NormalWord {
            derivs: self.derivs.added_one(n.clone()),
            partials: self.partials.clone(),
        }
    }

    /// The raw symbol sequence of the normal word.
    pub fn to_raw(&self) -> Vec<WordLetter> {
        let mut out: Vec<WordLetter> = Vec::new();
        out.extend(self.derivs.expanded().cloned().map(WordLetter::Deriv));
        out.extend(self.partials.expanded().copied().map(WordLetter::Partial));
        out
    }
}

/// Redex selection order; both must give the same normal form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RedexOrder {
    Leftmost,
    Rightmost,
}

/// Rewrites a raw word into a combination of normal words, moving every
/// partial symbol to the right of every derivative letter. Each crossing
/// `d_i n` costs the correction `n_i (n - e_i)`, which is dropped when
/// `n_i = 0`.
pub fn word_normal_form(w: &[WordLetter]) -> Poly<NormalWord> {
    word_normal_form_with(w, RedexOrder::Leftmost)
}

pub fn word_normal_form_with(w: &[WordLetter], order: RedexOrder) -> Poly<NormalWord> {
    let mut out = Poly::zero();
    let mut stack: Vec<(Vec<WordLetter>, Scalar)> = alloc::vec![(w.to_vec(), Scalar::one())];
    while let Some((word, coeff)) = stack.pop() {
        let redex = find_redex(&word, order);
        match redex {
            None => {
                let mut derivs = MultiIdx::new();
                let mut partials = MultiIdx::new();
                for sym in &word {
                    match sym {
                        WordLetter::Deriv(n) => derivs.add(n.clone(), 1),
                        WordLetter::Partial(i) => partials.add(*i, 1),
                    }
                }
                out.add_term(NormalWord { derivs, partials }, coeff);
            }
            Some(i) => {
                let (di, n) = match (&word[i], &word[i + 1]) {
                    (WordLetter::Partial(di), WordLetter::Deriv(n)) => (*di, n.clone()),
                    _ => unreachable!("redex positions hold a partial followed by a letter"),
                };
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                stack.push((swapped, coeff.clone()));
                let ni = n.coord_get(di as usize);
                if ni > 0 {
                    let mut contracted = word.clone();
                    let decremented = n
                        .decremented(di as usize)
                        .expect("nonzero coordinate can be decremented");
                    contracted.splice(i..=i + 1, [WordLetter::Deriv(decremented)]);
                    stack.push((contracted, &coeff * &Scalar::from_int(ni as i64)));
                }
            }
        }
    }
    out
}

fn find_redex(word: &[WordLetter], order: RedexOrder) -> Option<usize> {
    let is_redex = |i: usize| {
        matches!(
            (&word[i], &word[i + 1]),
            (WordLetter::Partial(_), WordLetter::Deriv(_))
        )
    };
    if word.len() < 2 {
        return None;
    }
    match order {
        RedexOrder::Leftmost => (0..word.len() - 1).find(|&i| is_redex(i)),
        RedexOrder::Rightmost => (0..word.len() - 1).rev().find(|&i| is_redex(i)),
    }
}

/// Variable `z_{(l,α)}` with `α` a normal word; general word arguments
/// expand linearly over this basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SpdeVar {
    pub label: Gen,
    pub word: NormalWord,
}

impl SpdeVar {
    pub fn new(label: Gen, word: NormalWord) -> Self {
        SpdeVar { label, word }
    }

    /// Bare generator variable `z_{(l,∅)}`.
    pub fn bare(label: Gen) -> Self {
        SpdeVar::new(label, NormalWord::empty())
    }
}

pub type SpdeMonomial = MultiIdx<SpdeVar>;
pub type SpdePoly = Poly<SpdeMonomial>;

/// `1 · z_{(l,α)}` as a polynomial.
pub fn var_poly(label: Gen, word: NormalWord) -> SpdePoly {
    Poly::unit(MultiIdx::single(SpdeVar::new(label, word)))
}

/// The derivation `D^{(n)}`: sends `z_{(l,α)}` to `z_{(l,nα)}`. There is
/// no combinatorial factor; the multiplicity lives in the word.
pub fn derivation(n: &Letter, p: &SpdePoly) -> SpdePoly {
    apply_derivation(
        &|v: &SpdeVar| var_poly(v.label, v.word.prepend_deriv(n)),
        p,
    )
}

/// The derivation `∂_i`: sends `z_{(l,α)}` to `z_{(l,d_i α)}` and expands
/// the prefix through the word relations, generally producing a sum.
pub fn partial(i: u32, p: &SpdePoly) -> SpdePoly {
    apply_derivation(
        &|v: &SpdeVar| {
            let mut raw = alloc::vec![WordLetter::Partial(i)];
            raw.extend(v.word.to_raw());
            word_normal_form(&raw).map_basis(|w| var_poly(v.label, w.clone()))
        },
        p,
    )
}

/// `p ▷_n q = p · D^{(n)}(q)`.
pub fn product(n: &Letter, p: &SpdePoly, q: &SpdePoly) -> SpdePoly {
    p.mul_poly(&derivation(n, q))
}

/// `Σ (1 - |α|)·β(l,α) = 1`, with `|α|` counting derivative letters only.
/// Well defined on the quotient because the word relations are
/// homogeneous in `|α|`.
pub fn is_populated(m: &SpdeMonomial) -> bool {
    let weight: i64 = m
        .iter()
        .map(|(v, e)| (1 - v.word.letter_count() as i64) * e as i64)
        .sum();
    weight == 1
}

/// The canonical multi-Novikov structure on SPDE multi-index polynomials.
#[derive(Clone, Copy, Default, Debug)]
pub struct SpdeAlgebra;

impl MultiPreLie for SpdeAlgebra {
    type Elem = SpdePoly;

    fn generator(&self, g: Gen) -> SpdePoly {
        var_poly(g, NormalWord::empty())
    }

    fn graft(&self, a: &Letter, x: &SpdePoly, y: &SpdePoly) -> SpdePoly {
        product(a, x, y)
    }

    fn add(&self, x: &SpdePoly, y: &SpdePoly) -> SpdePoly {
        x + y
    }

    fn sub(&self, x: &SpdePoly, y: &SpdePoly) -> SpdePoly {
        x - y
    }

    fn scale(&self, x: &SpdePoly, c: &Scalar) -> SpdePoly {
        x.scaled(c)
    }

    fn zero(&self) -> SpdePoly {
        Poly::zero()
    }
}

/// All partial multisets over indices `0..=dims` with each index used at
/// most `cap` times.
pub fn partial_multisets(dims: usize, cap: u32) -> Vec<MultiIdx<u32>> {
    let mut out = Vec::new();
    fn rec(i: usize, dims: usize, cap: u32, current: &MultiIdx<u32>, out: &mut Vec<MultiIdx<u32>>) {
        if i > dims {
            out.push(current.clone());
            return;
        }
        for take in 0..=cap {
            let mut next = current.clone();
            next.add(i as u32, take);
            rec(i + 1, dims, cap, &next, out);
        }
    }
    rec(0, dims, cap, &MultiIdx::new(), &mut out);
    out.sort();
    out
}

/// The generator family `z_{(l, d^k)}`: the orbit of the bare generators
/// under the partial symbols, truncated by the per-index cap.
pub fn capped_generators(labels: &[Gen], dims: usize, partial_cap: u32) -> Vec<SpdeVar> {
    let mut out = Vec::new();
    for label in labels {
        for partials in partial_multisets(dims, partial_cap) {
            out.push(SpdeVar::new(
                *label,
                NormalWord::new(MultiIdx::new(), partials),
            ));
        }
    }
    out.sort();
    out
}

/// All populated monomials of the given degree whose variables use
/// derivative letters from `letters` and capped partial multisets.
pub fn enumerate_populated_capped(
    degree: u32,
    letters: &[Letter],
    labels: &[Gen],
    dims: usize,
    partial_cap: u32,
) -> Vec<SpdeMonomial> {
    if degree == 0 {
        return Vec::new();
    }
    let target_weight = degree - 1;
    let mut vars: Vec<SpdeVar> = Vec::new();
    for label in labels {
        for derivs in crate::genidx::words_up_to(letters, target_weight) {
            for partials in partial_multisets(dims, partial_cap) {
                vars.push(SpdeVar::new(
                    *label,
                    NormalWord::new(derivs.clone(), partials),
                ));
            }
        }
    }
    vars.sort();
    let mut out = Vec::new();
    fn rec(
        vars: &[SpdeVar],
        degree: u32,
        weight: u32,
        current: &SpdeMonomial,
        out: &mut Vec<SpdeMonomial>,
    ) {
        if degree == 0 {
            if weight == 0 {
                out.push(current.clone());
            }
            return;
        }
        match vars.split_first() {
            None => {}
            Some((v, rest)) => {
                let wl = v.word.letter_count();
                let max_take = if wl == 0 { degree } else { degree.min(weight / wl) };
                for take in 0..=max_take {
                    let mut next = current.clone();
                    next.add(v.clone(), take);
                    rec(rest, degree - take, weight - take * wl, &next, out);
                }
            }
        }
    }
    rec(&vars, degree, target_weight, &MultiIdx::new(), &mut out);
    out.sort();
    out
}

/// One degree row of the generated-span comparison.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenerationRow {
    pub degree: u32,
    pub span_dim: usize,
    pub populated_count: usize,
}

impl GenerationRow {
    pub fn is_equal(&self) -> bool {
        self.span_dim == self.populated_count
    }
}

/// Report of [`free_generation_check`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenerationReport {
    pub rows: Vec<GenerationRow>,
}

impl GenerationReport {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(GenerationRow::is_equal)
    }
}

/// Compares, degree by degree, the dimension of the span generated from
/// the capped generators under the products `▷_n` against the number of
/// populated monomials in the capped graded component.
pub fn free_generation_check(
    max_degree: u32,
    letters: &[Letter],
    labels: &[Gen],
    dims: usize,
    partial_cap: u32,
) -> GenerationReport {
    let generators: Vec<SpdePoly> = capped_generators(labels, dims, partial_cap)
        .into_iter()
        .map(|v| Poly::unit(MultiIdx::single(v)))
        .collect();
    let mut rows = Vec::new();
    // components[k] holds a basis of the degree-(k+1) span component.
    let mut components: Vec<Vec<SpdePoly>> = Vec::new();
    for degree in 1..=max_degree {
        let mut span = Span::new();
        if degree == 1 {
            for g in &generators {
                span.insert(g);
            }
        } else {
            for left_deg in 1..degree {
                let right_deg = degree - left_deg;
                for p in &components[left_deg as usize - 1] {
                    for q in &components[right_deg as usize - 1] {
                        for n in letters {
                            span.insert(&product(n, p, q));
                        }
                    }
                }
            }
        }
        let populated_count =
            enumerate_populated_capped(degree, letters, labels, dims, partial_cap).len();
        rows.push(GenerationRow {
            degree,
            span_dim: span.dim(),
            populated_count,
        });
        components.push(span.basis().cloned().collect());
    }
    GenerationReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> Gen {
        Gen(0)
    }

    fn letter(v: &[u32]) -> Letter {
        Letter::coord(v.to_vec())
    }

    fn word_of(raw: &[WordLetter]) -> Poly<NormalWord> {
        word_normal_form(raw)
    }

    #[test]
    fn normal_word_stays_put() {
        let w = [
            WordLetter::Deriv(letter(&[1, 0])),
            WordLetter::Partial(0),
        ];
        let nf = word_of(&w);
        assert_eq!(nf.num_terms(), 1);
        let (word, coeff) = nf.iter().next().unwrap();
        assert!(coeff.is_one());
        assert_eq!(word.letter_count(), 1);
    }

    #[test]
    fn crossing_with_correction() {
        // d_0 · (1,0) = (1,0)·d_0 + (0,0)
        let w = [
            WordLetter::Partial(0),
            WordLetter::Deriv(letter(&[1, 0])),
        ];
        let nf = word_of(&w);
        let swapped = NormalWord::new(
            MultiIdx::single(letter(&[1, 0])),
            MultiIdx::single(0),
        );
        let contracted = NormalWord::new(MultiIdx::single(letter(&[0, 0])), MultiIdx::new());
        assert_eq!(nf.coeff(&swapped), Scalar::one());
        assert_eq!(nf.coeff(&contracted), Scalar::one());
        assert_eq!(nf.num_terms(), 2);
    }

    #[test]
    fn crossing_without_correction() {
        // d_0 · (0,1) = (0,1)·d_0, the correction vanishes
        let w = [
            WordLetter::Partial(0),
            WordLetter::Deriv(letter(&[0, 1])),
        ];
        let nf = word_of(&w);
        assert_eq!(nf.num_terms(), 1);
    }

    #[test]
    fn letter_count_is_invariant() {
        let w = [
            WordLetter::Partial(1),
            WordLetter::Deriv(letter(&[2, 1])),
            WordLetter::Partial(0),
            WordLetter::Deriv(letter(&[1, 1])),
        ];
        for (word, _) in word_of(&w).iter() {
            assert_eq!(word.letter_count(), 2);
        }
    }

    #[test]
    fn derivation_examples() {
        let n = letter(&[1, 0]);
        let bare = var_poly(l(), NormalWord::empty());
        let dn = derivation(&n, &bare);
        assert_eq!(
            dn,
            var_poly(l(), NormalWord::new(MultiIdx::single(n.clone()), MultiIdx::new()))
        );
        // Repeating the letter accumulates in the word without a factor.
        let dnn = derivation(&n, &dn);
        assert_eq!(
            dnn,
            var_poly(l(), NormalWord::new(MultiIdx::with(n.clone(), 2), MultiIdx::new()))
        );
        assert!(derivation(&n, &Poly::one()).is_zero());
    }

    #[test]
    fn partial_examples() {
        let bare = var_poly(l(), NormalWord::empty());
        assert_eq!(
            partial(0, &bare),
            var_poly(l(), NormalWord::new(MultiIdx::new(), MultiIdx::single(0)))
        );
        // ∂_0 z_{(l,(1,0))} = z_{(l,(1,0)d_0)} + z_{(l,(0,0))}
        let v = var_poly(
            l(),
            NormalWord::new(MultiIdx::single(letter(&[1, 0])), MultiIdx::new()),
        );
        let got = partial(0, &v);
        assert_eq!(got.num_terms(), 2);
        // ∂_0 z_{(l,(0,1))} has no correction.
        let v2 = var_poly(
            l(),
            NormalWord::new(MultiIdx::single(letter(&[0, 1])), MultiIdx::new()),
        );
        assert_eq!(partial(0, &v2).num_terms(), 1);
    }

    #[test]
    fn product_examples() {
        let n = letter(&[1, 0]);
        let bare = var_poly(l(), NormalWord::empty());
        let got = product(&n, &bare, &bare);
        assert_eq!(got.num_terms(), 1);
        let (mono, _) = got.iter().next().unwrap();
        assert_eq!(mono.total(), 2);
        assert!(is_populated(mono));
        // unit ▷ p = D(p), p ▷ unit = 0.
        assert_eq!(product(&n, &Poly::one(), &bare), derivation(&n, &bare));
        assert!(product(&n, &bare, &Poly::one()).is_zero());
    }

    #[test]
    fn populated_examples() {
        assert!(is_populated(&MultiIdx::single(SpdeVar::bare(l()))));
        let with_partial = SpdeVar::new(
            l(),
            NormalWord::new(MultiIdx::new(), MultiIdx::single(0)),
        );
        assert!(is_populated(&MultiIdx::single(with_partial)));
        let with_letter = SpdeVar::new(
            l(),
            NormalWord::new(MultiIdx::single(letter(&[0, 0])), MultiIdx::new()),
        );
        assert!(!is_populated(&MultiIdx::single(with_letter)));
    }

    #[test]
    fn generation_check_tiny() {
        // d = 0, letter values capped at 1, partial cap 1.
        let letters = crate::letter::coord_letters(0, 1);
        let report = free_generation_check(2, &letters, &[l()], 0, 1);
        assert!(report.all_equal(), "{report:?}");
        assert_eq!(report.rows[0].span_dim, 2);
        assert_eq!(report.rows[1].span_dim, 8);
    }
}
