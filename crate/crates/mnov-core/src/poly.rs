//! Canonicalized linear combinations over an ordered basis, and the
//! Leibniz extension of derivations to polynomial algebras.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::multiidx::MultiIdx;
use crate::scalar::Scalar;

/// Finitely supported linear combination of basis elements `B` with
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Poly<B: Ord>(BTreeMap<B, Scalar>);

impl<B: Ord> Default for Poly<B> {
    fn default() -> Self {
        Poly(BTreeMap::new())
    }
}

impl<B: Ord + Clone> Poly<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · b`, canonicalized.
    pub fn term(b: B, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(b, c);
        p
    }

    /// `1 · b`.
    pub fn unit(b: B) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (b, c) in terms {
            p.add_term(b, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.0.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.0.iter()
    }

    /// Largest basis element present, with its coefficient.
    pub fn leading(&self) -> Option<(&B, &Scalar)> {
        self.0.iter().next_back()
    }

    /// Adds `c · b` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&b) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.0.remove(&b);
                }
            }
            None => {
                self.0.insert(b, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), -c);
        }
    }

    /// `c · self`; the zero scalar yields the zero polynomial.
    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly(self.0.iter().map(|(b, x)| (b.clone(), x * c)).collect())
    }

    /// Linear extension of a map on basis elements.
    pub fn map_basis<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> Poly<B2>) -> Poly<B2> {
        let mut out = Poly::zero();
        for (b, c) in self.iter() {
            out.add_assign(&f(b).scaled(c));
        }
        out
    }
}

impl<B: Ord + Clone> Add for &Poly<B> {
    type Output = Poly<B>;
    fn add(self, rhs: &Poly<B>) -> Poly<B> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for &Poly<B> {
    type Output = Poly<B>;
    fn sub(self, rhs: &Poly<B>) -> Poly<B> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl<B: Ord + Clone> Neg for &Poly<B> {
    type Output = Poly<B>;
    fn neg(self) -> Poly<B> {
        self.scaled(&-Scalar::one())
    }
}

impl<B: Ord + Clone> Mul<&Scalar> for &Poly<B> {
    type Output = Poly<B>;
    fn mul(self, rhs: &Scalar) -> Poly<B> {
        self.scaled(rhs)
    }
}

impl<K: Ord + Clone> Poly<MultiIdx<K>> {
    /// The unit monomial with coefficient one.
    pub fn one() -> Self {
        Self::unit(MultiIdx::new())
    }

    /// Commutative product, extended bilinearly from pointwise sums of
    /// exponent maps.
    pub fn mul_poly(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.iter() {
            for (n, d) in other.iter() {
                out.add_term(m.sum(n), c * d);
            }
        }
        out
    }
}

/// A rule sending each variable to a polynomial; [`apply_derivation`]
/// extends it to the whole polynomial algebra by the Leibniz rule.
pub trait Derivation<V: Ord + Clone> {
    fn var_image(&self, v: &V) -> Poly<MultiIdx<V>>;
}

impl<V: Ord + Clone, F: Fn(&V) -> Poly<MultiIdx<V>>> Derivation<V> for F {
    fn var_image(&self, v: &V) -> Poly<MultiIdx<V>> {
        self(v)
    }
}

/// Leibniz extension: on a monomial `∏ v_i^{e_i}` returns
/// `Σ_i e_i · v_i^{e_i-1} ∏_{j≠i} v_j^{e_j} · d(v_i)`.
pub fn apply_derivation<V: Ord + Clone>(
    d: &impl Derivation<V>,
    p: &Poly<MultiIdx<V>>,
) -> Poly<MultiIdx<V>> {
    let mut out = Poly::zero();
    for (mono, coeff) in p.iter() {
        for (v, e) in mono.iter() {
            let rest = mono.removed_one(v).expect("key taken from the monomial itself");
            let image = d.var_image(v);
            let factor = coeff * &Scalar::from_int(e as i64);
            for (im, ic) in image.iter() {
                out.add_term(rest.sum(im), &factor * ic);
            }
        }
    }
    out
}

/// All monomials over `vars` of total degree exactly `degree`, in
/// deterministic order.
pub fn monomials_of_degree<V: Ord + Clone>(vars: &[V], degree: u32) -> Vec<MultiIdx<V>> {
    let mut out = Vec::new();
    let mut current = MultiIdx::new();
    fn rec<V: Ord + Clone>(
        vars: &[V],
        remaining: u32,
        current: &mut MultiIdx<V>,
        out: &mut Vec<MultiIdx<V>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        match vars.split_first() {
            None => {}
            Some((v, rest)) => {
                for take in (0..=remaining).rev() {
                    let mut next = current.clone();
                    next.add(v.clone(), take);
                    rec(rest, remaining - take, &mut next, out);
                }
            }
        }
    }
    rec(vars, degree, &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(name: &'static str) -> Poly<MultiIdx<&'static str>> {
        Poly::unit(MultiIdx::single(name))
    }

    #[test]
    fn addition_cancels() {
        let b = var("b");
        let p = &b.scaled(&Scalar::from_int(2)) + &b.scaled(&Scalar::from_int(-2));
        assert!(p.is_zero());
        let q = &b + &b;
        assert_eq!(q, b.scaled(&Scalar::from_int(2)));
    }

    #[test]
    fn mixed_addition() {
        let b1 = var("b1");
        let b2 = var("b2");
        let p = &b1.scaled(&Scalar::ratio(1, 2)) + &b2;
        let q = b1.scaled(&Scalar::ratio(1, 2));
        let sum = &p + &q;
        assert_eq!(sum, &b1 + &b2);
    }

    #[test]
    fn scaling() {
        let b = var("b");
        assert!(b.scaled(&Scalar::zero()).is_zero());
        assert_eq!(b.scaled(&Scalar::one()), b);
        let two_b = b.scaled(&Scalar::from_int(2));
        assert_eq!(two_b.scaled(&Scalar::ratio(1, 2)), b);
    }

    #[test]
    fn monomial_multiplication() {
        let z0 = var("z0");
        let z1 = var("z1");
        let unit = Poly::one();
        assert_eq!(unit.mul_poly(&z0), z0);
        let sq = z0.mul_poly(&z0);
        assert_eq!(sq, Poly::unit(MultiIdx::with("z0", 2)));
        let m = z0.mul_poly(&z1).mul_poly(&z1);
        let expected = Poly::unit(MultiIdx::from_entries([("z0", 1), ("z1", 2)]));
        assert_eq!(m, expected);
    }

    #[test]
    fn leibniz_on_square() {
        // d(x) = y applied to x^2 gives 2xy.
        let d = |v: &&'static str| {
            if *v == "x" {
                var("y")
            } else {
                Poly::zero()
            }
        };
        let x2 = Poly::unit(MultiIdx::with("x", 2));
        let got = apply_derivation(&d, &x2);
        let expected = Poly::term(
            MultiIdx::from_entries([("x", 1), ("y", 1)]),
            Scalar::from_int(2),
        );
        assert_eq!(got, expected);
        // Any derivation kills the unit monomial.
        assert!(apply_derivation(&d, &Poly::one()).is_zero());
    }

    #[test]
    fn ode_derivation_example() {
        // D(z_k) = (k+1) z_{k+1} applied to z0 z1 gives z1^2 + 2 z0 z2.
        let d = |v: &u32| Poly::term(MultiIdx::single(v + 1), Scalar::from_int(*v as i64 + 1));
        let p = Poly::unit(MultiIdx::from_entries([(0u32, 1), (1u32, 1)]));
        let got = apply_derivation(&d, &p);
        let mut expected = Poly::unit(MultiIdx::with(1u32, 2));
        expected.add_term(
            MultiIdx::from_entries([(0u32, 1), (2u32, 1)]),
            Scalar::from_int(2),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn monomial_enumeration() {
        let ms = monomials_of_degree(&["x", "y"], 2);
        assert_eq!(ms.len(), 3);
        let all_deg2 = ms.iter().all(|m| m.total() == 2);
        assert!(all_deg2);
    }
}
