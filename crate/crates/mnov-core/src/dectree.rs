//! Planar decorated trees and their canonical quotient.
//!
//! Raw trees carry an ordered factor list at each node (monomial symbols
//! `X_i` and planted subtrees `I_a(τ)`) closed by a noise label. The
//! quotient makes the planted factors commute, makes the `X_i` commute,
//! and moves every `X_i` leftwards past a planted factor at the cost of a
//! correction with a decremented edge decoration. Canonical trees store
//! the `X` content as an exponent vector and the planted children as a
//! sorted multiset.

use alloc::vec::Vec;

use crate::algebra::MultiPreLie;
use crate::letter::{Gen, Letter};
use crate::multiidx::MultiIdx;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::spdeidx::{self, NormalWord, SpdeMonomial, SpdePoly, WordLetter};

/// Canonical decorated tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DecTree {
    /// Exponent vector of the `X_i` factors at this node.
    pub x_exp: MultiIdx<u32>,
    /// Planted children `I_a(τ)`, kept sorted.
    pub children: Vec<(Letter, DecTree)>,
    /// Noise label closing the node.
    pub noise: Gen,
}

impl DecTree {
    /// Bare noise `Ξ_l`.
    pub fn leaf(noise: Gen) -> Self {
        DecTree {
            x_exp: MultiIdx::new(),
            children: Vec::new(),
            noise,
        }
    }

    /// Node constructor; sorts the children into canonical order.
    pub fn node(x_exp: MultiIdx<u32>, mut children: Vec<(Letter, DecTree)>, noise: Gen) -> Self {
        children.sort();
        DecTree {
            x_exp,
            children,
            noise,
        }
    }

    pub fn vertex_count(&self) -> u32 {
        1 + self
            .children
            .iter()
            .map(|(_, c)| c.vertex_count())
            .sum::<u32>()
    }
}

/// One factor of a raw planar node.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RawFactor {
    X(u32),
    Planted(Letter, RawTree),
}

/// Planar decorated tree before the quotient: an ordered factor list
/// closed by a noise label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RawTree {
    pub factors: Vec<RawFactor>,
    pub noise: Gen,
}

impl RawTree {
    pub fn leaf(noise: Gen) -> Self {
        RawTree {
            factors: Vec::new(),
            noise,
        }
    }

    /// Planar embedding of a canonical tree, `X` factors leftmost.
    pub fn from_canonical(t: &DecTree) -> Self {
        let mut factors: Vec<RawFactor> =
            t.x_exp.expanded().map(|i| RawFactor::X(*i)).collect();
        for (a, c) in &t.children {
            factors.push(RawFactor::Planted(a.clone(), RawTree::from_canonical(c)));
        }
        RawTree {
            factors,
            noise: t.noise,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum NfFactor {
    X(u32),
    Planted(Letter, DecTree),
}

/// Rewrites a raw tree into a combination of canonical trees: subtrees
/// first, then every `X_i` is pushed left past the planted factors,
/// `I_a(τ) X_i = X_i I_a(τ) + I_{a-e_i}(τ)`, the correction dropped when
/// `a_i = 0`.
pub fn normal_form(t: &RawTree) -> Poly<DecTree> {
    let mut combos: Vec<(Vec<NfFactor>, Scalar)> = alloc::vec![(Vec::new(), Scalar::one())];
    for f in &t.factors {
        match f {
            RawFactor::X(i) => {
                for (fs, _) in combos.iter_mut() {
                    fs.push(NfFactor::X(*i));
                }
            }
            RawFactor::Planted(a, sub) => {
                let sub_nf = normal_form(sub);
                let mut next = Vec::with_capacity(combos.len() * sub_nf.num_terms());
                for (fs, c) in &combos {
                    for (s, d) in sub_nf.iter() {
                        let mut fs2 = fs.clone();
                        fs2.push(NfFactor::Planted(a.clone(), s.clone()));
                        next.push((fs2, c * d));
                    }
                }
                combos = next;
            }
        }
    }
    let mut out = Poly::zero();
    let mut stack = combos;
    while let Some((factors, coeff)) = stack.pop() {
        let redex = (0..factors.len().saturating_sub(1)).find(|&i| {
            matches!(
                (&factors[i], &factors[i + 1]),
                (NfFactor::Planted(..), NfFactor::X(_))
            )
        });
        match redex {
            None => {
                let mut x_exp = MultiIdx::new();
                let mut children = Vec::new();
                for f in factors {
                    match f {
                        NfFactor::X(i) => x_exp.add(i, 1),
                        NfFactor::Planted(a, s) => children.push((a, s)),
                    }
                }
                out.add_term(DecTree::node(x_exp, children, t.noise), coeff);
            }
            Some(i) => {
                let (a, sub, xi) = match (&factors[i], &factors[i + 1]) {
                    (NfFactor::Planted(a, s), NfFactor::X(xi)) => (a.clone(), s.clone(), *xi),
                    _ => unreachable!("redex shape checked above"),
                };
                let mut swapped = factors.clone();
                swapped.swap(i, i + 1);
                stack.push((swapped, coeff.clone()));
                if let Some(dec) = a.decremented(xi as usize) {
                    let mut contracted = factors.clone();
                    contracted.splice(i..=i + 1, [NfFactor::Planted(dec, sub)]);
                    stack.push((contracted, coeff.clone()));
                }
            }
        }
    }
    out
}

/// Grafting `σ ▷_n τ`: the sum over the vertices of `τ` of attaching the
/// planted child `I_n(σ)` there. `X` factors are untouched.
pub fn graft(n: &Letter, scion: &DecTree, target: &DecTree) -> Poly<DecTree> {
    let mut out = Poly::zero();
    let mut at_root = target.children.clone();
    at_root.push((n.clone(), scion.clone()));
    out.add_term(
        DecTree::node(target.x_exp.clone(), at_root, target.noise),
        Scalar::one(),
    );
    for idx in 0..target.children.len() {
        let (edge, child) = &target.children[idx];
        for (sub, c) in graft(n, scion, child).iter() {
            let mut children = target.children.clone();
            children[idx] = (edge.clone(), sub.clone());
            out.add_term(
                DecTree::node(target.x_exp.clone(), children, target.noise),
                c.clone(),
            );
        }
    }
    out
}

/// Bilinear extension of [`graft`].
pub fn graft_poly(n: &Letter, scion: &Poly<DecTree>, target: &Poly<DecTree>) -> Poly<DecTree> {
    let mut out = Poly::zero();
    for (s, c) in scion.iter() {
        for (t, d) in target.iter() {
            out.add_assign(&graft(n, s, t).scaled(&(c * d)));
        }
    }
    out
}

/// Symmetry factor `S(τ) = k! · Π m_j! · Π S(τ_i)` with `m_j` the
/// multiplicities of the distinct planted children.
pub fn symmetry_factor(t: &DecTree) -> Scalar {
    let mut acc = Scalar::one();
    for (_, e) in t.x_exp.iter() {
        acc *= &Scalar::factorial(e);
    }
    let mut i = 0;
    while i < t.children.len() {
        let mut j = i;
        while j < t.children.len() && t.children[j] == t.children[i] {
            j += 1;
        }
        acc *= &Scalar::factorial((j - i) as u32);
        i = j;
    }
    for (_, c) in &t.children {
        acc *= &symmetry_factor(c);
    }
    acc
}

/// The multi-index of a canonical tree: each vertex contributes the
/// variable `z_{(l, a_1⋯a_m d^k)}` built from its incoming edge letters
/// and its `X` exponent; the tree maps to the product over vertices.
/// This is the quotient morphism onto SPDE multi-indices.
pub fn multiindex(t: &DecTree) -> SpdeMonomial {
    let mut derivs = MultiIdx::new();
    for (a, _) in &t.children {
        derivs.add(a.clone(), 1);
    }
    let var = spdeidx::SpdeVar::new(t.noise, NormalWord::new(derivs, t.x_exp.clone()));
    let mut mono = MultiIdx::single(var);
    for (_, c) in &t.children {
        mono = mono.sum(&multiindex(c));
    }
    mono
}

/// Linear extension of [`multiindex`].
pub fn multiindex_poly(p: &Poly<DecTree>) -> SpdePoly {
    p.map_basis(|t| Poly::unit(multiindex(t)))
}

/// Elementary differential of a raw planar tree: each node applies its
/// factor operators to the noise symbol in list order (the first factor
/// is the outermost derivative), with `X_j ↦ d_j` and `I_a ↦ a`; the
/// resulting word is normalized and the subtree differentials multiply
/// in.
pub fn differential(t: &RawTree) -> SpdePoly {
    let mut word: Vec<WordLetter> = Vec::new();
    let mut subtree_parts: Vec<SpdePoly> = Vec::new();
    for f in &t.factors {
        match f {
            RawFactor::X(i) => word.push(WordLetter::Partial(*i)),
            RawFactor::Planted(a, sub) => {
                word.push(WordLetter::Deriv(a.clone()));
                subtree_parts.push(differential(sub));
            }
        }
    }
    let mut acc = spdeidx::word_normal_form(&word)
        .map_basis(|w| spdeidx::var_poly(t.noise, w.clone()));
    for part in subtree_parts {
        acc = acc.mul_poly(&part);
    }
    acc
}

/// The grafting multi-pre-Lie structure on canonical decorated trees.
#[derive(Clone, Copy, Default, Debug)]
pub struct TreeAlgebra;

impl MultiPreLie for TreeAlgebra {
    type Elem = Poly<DecTree>;

    fn generator(&self, g: Gen) -> Poly<DecTree> {
        Poly::unit(DecTree::leaf(g))
    }

    fn graft(&self, a: &Letter, x: &Poly<DecTree>, y: &Poly<DecTree>) -> Poly<DecTree> {
        graft_poly(a, x, y)
    }

    fn add(&self, x: &Poly<DecTree>, y: &Poly<DecTree>) -> Poly<DecTree> {
        x + y
    }

    fn sub(&self, x: &Poly<DecTree>, y: &Poly<DecTree>) -> Poly<DecTree> {
        x - y
    }

    fn scale(&self, x: &Poly<DecTree>, c: &Scalar) -> Poly<DecTree> {
        x.scaled(c)
    }

    fn zero(&self) -> Poly<DecTree> {
        Poly::zero()
    }
}

/// All canonical trees with the given number of vertices over finite
/// decoration sets: edge letters from `letters`, noises from `labels`,
/// `X` exponents over indices `0..=dims` capped per index.
pub fn enumerate_trees(
    vertices: u32,
    letters: &[Letter],
    labels: &[Gen],
    dims: usize,
    x_cap: u32,
) -> Vec<DecTree> {
    assert!(vertices >= 1);
    let x_options = spdeidx::partial_multisets(dims, x_cap);
    let mut by_size: Vec<Vec<DecTree>> = Vec::with_capacity(vertices as usize + 1);
    by_size.push(Vec::new());
    for v in 1..=vertices {
        // Planted options of each smaller size, as a sorted pool.
        let mut pool: Vec<(u32, (Letter, DecTree))> = Vec::new();
        for s in 1..v {
            for t in &by_size[s as usize] {
                for a in letters {
                    pool.push((s, (a.clone(), t.clone())));
                }
            }
        }
        pool.sort_by(|x, y| x.1.cmp(&y.1));
        let mut trees = Vec::new();
        let mut chosen: Vec<(Letter, DecTree)> = Vec::new();
        for noise in labels {
            for x_exp in &x_options {
                pick_children(
                    &pool,
                    0,
                    v - 1,
                    &mut chosen,
                    &mut |children: &[(Letter, DecTree)]| {
                        trees.push(DecTree::node(x_exp.clone(), children.to_vec(), *noise));
                    },
                );
            }
        }
        trees.sort();
        by_size.push(trees);
    }
    by_size.pop().expect("built up to the requested size")
}

fn pick_children(
    pool: &[(u32, (Letter, DecTree))],
    start: usize,
    remaining: u32,
    chosen: &mut Vec<(Letter, DecTree)>,
    emit: &mut impl FnMut(&[(Letter, DecTree)]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for i in start..pool.len() {
        let (size, item) = &pool[i];
        if *size > remaining {
            continue;
        }
        chosen.push(item.clone());
        pick_children(pool, i, remaining - size, chosen, emit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(i: u32) -> Gen {
        Gen(i)
    }

    fn letter(v: &[u32]) -> Letter {
        Letter::coord(v.to_vec())
    }

    fn planted(a: &[u32], t: RawTree) -> RawFactor {
        RawFactor::Planted(letter(a), t)
    }

    #[test]
    fn already_canonical() {
        // X_i I_a(σ) Ξ_l stays put.
        let raw = RawTree {
            factors: alloc::vec![
                RawFactor::X(0),
                planted(&[1, 0], RawTree::leaf(l(0))),
            ],
            noise: l(0),
        };
        let nf = normal_form(&raw);
        assert_eq!(nf.num_terms(), 1);
        let (t, c) = nf.iter().next().unwrap();
        assert!(c.is_one());
        assert_eq!(t.x_exp, MultiIdx::single(0));
        assert_eq!(t.children.len(), 1);
    }

    #[test]
    fn worked_two_term_normal_form() {
        // I_b(Ξ_l) X_i Ξ_l = X_i I_b(Ξ_l) Ξ_l + I_{b-e_i}(Ξ_l) Ξ_l for b = (1,0), i = 0.
        let raw = RawTree {
            factors: alloc::vec![
                planted(&[1, 0], RawTree::leaf(l(0))),
                RawFactor::X(0),
            ],
            noise: l(0),
        };
        let nf = normal_form(&raw);
        let first = DecTree::node(
            MultiIdx::single(0),
            alloc::vec![(letter(&[1, 0]), DecTree::leaf(l(0)))],
            l(0),
        );
        let second = DecTree::node(
            MultiIdx::new(),
            alloc::vec![(letter(&[0, 0]), DecTree::leaf(l(0)))],
            l(0),
        );
        assert_eq!(nf.num_terms(), 2);
        assert!(nf.coeff(&first).is_one());
        assert!(nf.coeff(&second).is_one());
    }

    #[test]
    fn vanishing_correction() {
        // a_i = 0 leaves only the swap.
        let raw = RawTree {
            factors: alloc::vec![
                planted(&[0, 1], RawTree::leaf(l(0))),
                RawFactor::X(0),
            ],
            noise: l(0),
        };
        assert_eq!(normal_form(&raw).num_terms(), 1);
    }

    #[test]
    fn graft_counts_vertices() {
        let xi_l = DecTree::leaf(l(0));
        let xi_m = DecTree::leaf(l(1));
        let a = letter(&[0, 0]);
        let single = graft(&a, &xi_l, &xi_m);
        assert_eq!(single.num_terms(), 1);
        // Grafting onto a two-vertex tree gives two trees.
        let b = letter(&[1, 0]);
        let two = DecTree::node(
            MultiIdx::new(),
            alloc::vec![(b.clone(), DecTree::leaf(l(1)))],
            l(2),
        );
        let grafted = graft(&a, &xi_l, &two);
        assert_eq!(grafted.num_terms(), 2);
        for (t, c) in grafted.iter() {
            assert!(c.is_one());
            assert_eq!(t.vertex_count(), 3);
        }
        // X factors are untouched.
        let xk = DecTree::node(MultiIdx::with(0, 2), Vec::new(), l(0));
        let g = graft(&a, &xi_l, &xk);
        assert_eq!(g.num_terms(), 1);
        let (t, _) = g.iter().next().unwrap();
        assert_eq!(t.x_exp, MultiIdx::with(0, 2));
        assert_eq!(t.children.len(), 1);
    }

    #[test]
    fn symmetry_factors() {
        let xi = DecTree::leaf(l(0));
        assert!(symmetry_factor(&xi).is_one());
        let a = letter(&[0, 0]);
        let repeated = DecTree::node(
            MultiIdx::new(),
            alloc::vec![(a.clone(), xi.clone()), (a.clone(), xi.clone())],
            l(1),
        );
        assert_eq!(symmetry_factor(&repeated), Scalar::from_int(2));
        let x_squared = DecTree::node(MultiIdx::with(0, 2), Vec::new(), l(0));
        assert_eq!(symmetry_factor(&x_squared), Scalar::from_int(2));
    }

    #[test]
    fn multiindex_examples() {
        let xi = DecTree::leaf(l(0));
        assert_eq!(
            multiindex(&xi),
            MultiIdx::single(spdeidx::SpdeVar::bare(l(0)))
        );
        // I_a(Ξ_m) Ξ_l -> z_{(l,a)} z_{(m,∅)}
        let a = letter(&[1, 0]);
        let t = DecTree::node(
            MultiIdx::new(),
            alloc::vec![(a.clone(), DecTree::leaf(l(1)))],
            l(0),
        );
        let mono = multiindex(&t);
        assert_eq!(mono.total(), 2);
        assert!(spdeidx::is_populated(&mono));
    }

    #[test]
    fn tree_count_matches_euler_transform() {
        // Decorated rooted trees with G vertex labels and A edge labels:
        // t(1) = G, t(v) = G * h(v-1) with h the multiset counting of
        // planted subtrees, computed by the Euler-transform recurrence.
        let letters = [letter(&[0]), letter(&[1])];
        let labels = [l(0)];
        let dims = 0usize;
        let x_cap = 1u32;
        let g = labels.len() as u64 * 2; // two X-exponent choices
        let a = letters.len() as u64;
        let max = 5u32;
        let mut t = alloc::vec![0u64; max as usize + 1];
        let mut h = alloc::vec![0u64; max as usize];
        h[0] = 1;
        t[1] = g;
        for v in 2..=max as usize {
            let m = v - 1;
            // sigma(k) = sum over divisors j of k of j * a * t(j)
            let mut hm = 0u64;
            for k in 1..=m {
                let mut sigma = 0u64;
                for j in 1..=k {
                    if k % j == 0 {
                        sigma += j as u64 * a * t[j];
                    }
                }
                hm += sigma * h[m - k];
            }
            h[m] = hm / m as u64;
            t[v] = g * h[m];
        }
        for v in 1..=max {
            let got = enumerate_trees(v, &letters, &labels, dims, x_cap).len() as u64;
            assert_eq!(got, t[v as usize], "vertex count {v}");
        }
    }
}
