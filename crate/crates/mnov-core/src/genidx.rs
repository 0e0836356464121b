//! General multi-indices: formal variables `z_{(l,w)}` indexed by a
//! generator label and a commutative letter word, the derivation family
//! `D^{(n)}`, the products they induce, the populated condition and the
//! enumeration of populated monomials.

use alloc::vec::Vec;

use crate::algebra::MultiPreLie;
use crate::letter::{Gen, Letter};
use crate::multiidx::MultiIdx;
use crate::poly::{apply_derivation, Poly};
use crate::scalar::Scalar;

/// Variable `z_{(l,w)}`: generator label plus a commutative word in
/// letters. Ordered by label, then by word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenVar {
    pub label: Gen,
    pub word: MultiIdx<Letter>,
}

impl GenVar {
    pub fn new(label: Gen, word: MultiIdx<Letter>) -> Self {
        GenVar { label, word }
    }

    /// Bare generator variable `z_{(l,∅)}`.
    pub fn bare(label: Gen) -> Self {
        GenVar::new(label, MultiIdx::new())
    }

    /// Word length `|w|`.
    pub fn word_len(&self) -> u32 {
        self.word.total()
    }
}

pub type GenMonomial = MultiIdx<GenVar>;
pub type GenPoly = Poly<GenMonomial>;

/// `1 · z_{(l,w)}` as a polynomial.
pub fn var_poly(label: Gen, word: MultiIdx<Letter>) -> GenPoly {
    Poly::unit(MultiIdx::single(GenVar::new(label, word)))
}

/// Image of a single variable under `D^{(n)}`:
/// `z_{(l,w)} ↦ (w(n)+1) · z_{(l,nw)}`.
fn derivation_var(n: &Letter, v: &GenVar) -> GenPoly {
    let factor = Scalar::from_int(v.word.get(n) as i64 + 1);
    Poly::term(
        MultiIdx::single(GenVar::new(v.label, v.word.added_one(n.clone()))),
        factor,
    )
}

/// The derivation `D^{(n)}`, extended to polynomials by the Leibniz rule.
pub fn derivation(n: &Letter, p: &GenPoly) -> GenPoly {
    apply_derivation(&|v: &GenVar| derivation_var(n, v), p)
}

/// `p ▷_n q = p · D^{(n)}(q)`, bilinear.
pub fn product(n: &Letter, p: &GenPoly, q: &GenPoly) -> GenPoly {
    p.mul_poly(&derivation(n, q))
}

/// `Σ (1 - |w|)·β(l,w)` over the variables of the monomial.
pub fn populated_weight(m: &GenMonomial) -> i64 {
    m.iter()
        .map(|(v, e)| (1 - v.word_len() as i64) * e as i64)
        .sum()
}

/// Populated condition selecting the monomials that come from trees.
pub fn is_populated(m: &GenMonomial) -> bool {
    populated_weight(m) == 1
}

/// Label multiplicities of a monomial (its `ℕ^X` multidegree).
pub fn label_multiset(m: &GenMonomial) -> MultiIdx<Gen> {
    let mut out = MultiIdx::new();
    for (v, e) in m.iter() {
        out.add(v.label, e);
    }
    out
}

/// Total letter multiplicities of a monomial (its `ℕ^A` multidegree).
pub fn letter_multiset(m: &GenMonomial) -> MultiIdx<Letter> {
    let mut out = MultiIdx::new();
    for (v, e) in m.iter() {
        for (a, c) in v.word.iter() {
            out.add(a.clone(), c * e);
        }
    }
    out
}

/// All commutative words over `letters` with length at most `max_len`.
pub fn words_up_to(letters: &[Letter], max_len: u32) -> Vec<MultiIdx<Letter>> {
    let mut out = Vec::new();
    fn rec(
        letters: &[Letter],
        remaining: u32,
        current: &MultiIdx<Letter>,
        out: &mut Vec<MultiIdx<Letter>>,
    ) {
        match letters.split_first() {
            None => out.push(current.clone()),
            Some((l, rest)) => {
                for take in 0..=remaining {
                    let mut next = current.clone();
                    next.add(l.clone(), take);
                    rec(rest, remaining - take, &next, out);
                }
            }
        }
    }
    rec(letters, max_len, &MultiIdx::new(), &mut out);
    out.sort();
    out
}

/// All populated monomials of the given degree over finite letter and
/// label sets, each exactly once, in the order induced by the variable
/// order.
pub fn enumerate_populated(degree: u32, letters: &[Letter], labels: &[Gen]) -> Vec<GenMonomial> {
    if degree == 0 {
        return Vec::new();
    }
    // Degree-n populated monomials carry total word length n-1.
    let target_weight = degree - 1;
    let mut vars: Vec<GenVar> = Vec::new();
    for label in labels {
        for word in words_up_to(letters, target_weight) {
            vars.push(GenVar::new(*label, word));
        }
    }
    vars.sort();
    let mut out = Vec::new();
    fn rec(
        vars: &[GenVar],
        degree: u32,
        weight: u32,
        current: &GenMonomial,
        out: &mut Vec<GenMonomial>,
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
                let wl = v.word_len();
                let max_take = if wl == 0 {
                    degree
                } else {
                    degree.min(weight / wl)
                };
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

/// The canonical multi-Novikov structure on general multi-index
/// polynomials.
#[derive(Clone, Copy, Default, Debug)]
pub struct GenAlgebra;

impl MultiPreLie for GenAlgebra {
    type Elem = GenPoly;

    fn generator(&self, g: Gen) -> GenPoly {
        var_poly(g, MultiIdx::new())
    }

    fn graft(&self, a: &Letter, x: &GenPoly, y: &GenPoly) -> GenPoly {
        product(a, x, y)
    }

    fn add(&self, x: &GenPoly, y: &GenPoly) -> GenPoly {
        x + y
    }

    fn sub(&self, x: &GenPoly, y: &GenPoly) -> GenPoly {
        x - y
    }

    fn scale(&self, x: &GenPoly, c: &Scalar) -> GenPoly {
        x.scaled(c)
    }

    fn zero(&self) -> GenPoly {
        Poly::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Letter {
        Letter::sym(0)
    }

    fn l() -> Gen {
        Gen(0)
    }

    /// `z_k` in the one-letter dictionary `z_k = z_{(l, a^k)}`.
    fn zk(k: u32) -> GenVar {
        GenVar::new(l(), MultiIdx::with(a(), k))
    }

    fn zk_poly(k: u32) -> GenPoly {
        Poly::unit(MultiIdx::single(zk(k)))
    }

    #[test]
    fn derivation_on_variables() {
        // D^(a) z_{(l,∅)} = z_{(l,a)}
        assert_eq!(derivation(&a(), &zk_poly(0)), zk_poly(1));
        // D^(a) z_{(l,a)} = 2 z_{(l,aa)}
        assert_eq!(
            derivation(&a(), &zk_poly(1)),
            zk_poly(2).scaled(&Scalar::from_int(2))
        );
        // The unit monomial is killed.
        assert!(derivation(&a(), &Poly::one()).is_zero());
    }

    #[test]
    fn ode_products() {
        let z0 = zk_poly(0);
        let z1 = zk_poly(1);
        // z0 ▷ z0 = z0 z1
        assert_eq!(product(&a(), &z0, &z0), z0.mul_poly(&z1));
        // z1 ▷ z0 = z1^2
        assert_eq!(product(&a(), &z1, &z0), z1.mul_poly(&z1));
        // z0 ▷ z1 = 2 z0 z2
        assert_eq!(
            product(&a(), &z0, &z1),
            z0.mul_poly(&zk_poly(2)).scaled(&Scalar::from_int(2))
        );
    }

    #[test]
    fn populated_examples() {
        assert!(is_populated(&MultiIdx::single(zk(0))));
        assert!(!is_populated(&MultiIdx::single(zk(1))));
        let m = MultiIdx::from_entries([(zk(0), 2), (zk(2), 1)]);
        assert!(is_populated(&m));
        // Both sign conventions of the populated condition agree.
        let dual: i64 = m
            .iter()
            .map(|(v, e)| (-1 + v.word_len() as i64) * e as i64)
            .sum();
        assert_eq!(dual, -1);
    }

    #[test]
    fn populated_counts_are_partition_numbers() {
        // One letter, one label: degree-n count is p(n-1).
        let letters = [a()];
        let labels = [l()];
        let expected = [1usize, 1, 2, 3, 5, 7, 11];
        for (i, want) in expected.iter().enumerate() {
            let got = enumerate_populated(i as u32 + 1, &letters, &labels);
            assert_eq!(got.len(), *want, "degree {}", i + 1);
            assert!(got.iter().all(is_populated));
        }
    }

    #[test]
    fn populated_count_two_letters() {
        let letters = [Letter::sym(0), Letter::sym(1)];
        let labels = [l()];
        assert_eq!(enumerate_populated(3, &letters, &labels).len(), 6);
    }

    #[test]
    fn products_preserve_populated() {
        let letters = [Letter::sym(0), Letter::sym(1)];
        let labels = [Gen(0), Gen(1)];
        for p in enumerate_populated(2, &letters, &labels) {
            for q in enumerate_populated(2, &letters, &labels) {
                for n in &letters {
                    let prod = product(n, &Poly::unit(p.clone()), &Poly::unit(q.clone()));
                    assert!(prod.iter().all(|(m, _)| is_populated(m)));
                }
            }
        }
    }
}
