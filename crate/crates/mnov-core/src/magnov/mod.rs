//! Free multi-magmatic terms and the combinatorics of the free
//! multi-Novikov algebra: right-normed decomposition, the rotation
//! correspondence with planar rooted trees, the
//! left-leaning/ordered/normal classification, basis enumeration, and two
//! independent normal-form algorithms (rewriting and exact linear solve).

mod freeness;
mod rewrite;

pub use freeness::{ComponentStats, FreenessSolver};
pub use rewrite::{rewrite_normal_form, Normalizer};

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::algebra::MultiPreLie;
use crate::letter::{Gen, Letter};
use crate::multiidx::MultiIdx;
use crate::poly::Poly;

/// Monomial of the free multi-magmatic algebra: a planar binary tree with
/// internal vertices labelled by letters and leaves by generators.
/// `Node(a, l, r)` denotes `l ▷_a r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MagmaTerm {
    Leaf(Gen),
    Node(Letter, Box<MagmaTerm>, Box<MagmaTerm>),
}

impl MagmaTerm {
    pub fn leaf(g: Gen) -> Self {
        MagmaTerm::Leaf(g)
    }

    pub fn node(a: Letter, left: MagmaTerm, right: MagmaTerm) -> Self {
        MagmaTerm::Node(a, Box::new(left), Box::new(right))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, MagmaTerm::Leaf(_))
    }

    /// Number of leaves.
    pub fn degree(&self) -> u32 {
        match self {
            MagmaTerm::Leaf(_) => 1,
            MagmaTerm::Node(_, l, r) => l.degree() + r.degree(),
        }
    }

    /// Multiset of leaf labels, in planar order irrelevant.
    pub fn leaf_multiset(&self) -> MultiIdx<Gen> {
        let mut out = MultiIdx::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut MultiIdx<Gen>) {
        match self {
            MagmaTerm::Leaf(g) => out.add(*g, 1),
            MagmaTerm::Node(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    /// Multiset of internal-vertex letters.
    pub fn letter_multiset(&self) -> MultiIdx<Letter> {
        let mut out = MultiIdx::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut MultiIdx<Letter>) {
        if let MagmaTerm::Node(a, l, r) = self {
            out.add(a.clone(), 1);
            l.collect_letters(out);
            r.collect_letters(out);
        }
    }
}

/// Right-normed decomposition `r(y_1,a_1,…,y_n,a_n;z)`: the factors
/// peeled off the right spine in outermost-first order, with the
/// rightmost leaf as tail.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RightNormed {
    pub factors: Vec<(MagmaTerm, Letter)>,
    pub tail: Gen,
}

impl RightNormed {
    /// Reassembles the factors right-to-left onto the tail,
    /// reconstructing the original term exactly.
    pub fn reassemble(&self) -> MagmaTerm {
        reassemble_spine(&self.factors, self.tail)
    }
}

pub(crate) fn reassemble_spine(factors: &[(MagmaTerm, Letter)], tail: Gen) -> MagmaTerm {
    let mut acc = MagmaTerm::leaf(tail);
    for (y, a) in factors.iter().rev() {
        acc = MagmaTerm::node(a.clone(), y.clone(), acc);
    }
    acc
}

/// Peels the right spine of a term.
pub fn right_normed(t: &MagmaTerm) -> RightNormed {
    let mut factors = Vec::new();
    let mut cur = t;
    loop {
        match cur {
            MagmaTerm::Leaf(g) => {
                return RightNormed {
                    factors,
                    tail: *g,
                }
            }
            MagmaTerm::Node(a, l, r) => {
                factors.push(((**l).clone(), a.clone()));
                cur = r;
            }
        }
    }
}

/// Planar rooted tree with generator-labelled vertices and
/// letter-labelled edges; the image of the rotation correspondence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedTree {
    pub label: Gen,
    pub children: Vec<(Letter, RootedTree)>,
}

impl RootedTree {
    pub fn vertex(label: Gen) -> Self {
        RootedTree {
            label,
            children: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> u32 {
        1 + self.children.iter().map(|(_, c)| c.vertex_count()).sum::<u32>()
    }
}

/// Rotation correspondence: each right spine collapses onto its
/// rightmost leaf, which becomes a vertex; the left child of an internal
/// vertex hangs off that vertex through an edge carrying the vertex's
/// letter.
pub fn knuth_rotation(t: &MagmaTerm) -> RootedTree {
    let spine = right_normed(t);
    RootedTree {
        label: spine.tail,
        children: spine
            .factors
            .iter()
            .map(|(y, a)| (a.clone(), knuth_rotation(y)))
            .collect(),
    }
}

/// Inverse rotation; `knuth_rotation_inv(knuth_rotation(t)) = t`.
pub fn knuth_rotation_inv(r: &RootedTree) -> MagmaTerm {
    let factors: Vec<(MagmaTerm, Letter)> = r
        .children
        .iter()
        .map(|(a, c)| (knuth_rotation_inv(c), a.clone()))
        .collect();
    reassemble_spine(&factors, r.label)
}

/// Successively stricter classes of right-normed products; `Normal`
/// terms form the basis of the free multi-Novikov algebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TermClass {
    NotLeftLeaning,
    LeftLeaning,
    Ordered,
    Normal,
}

/// One stage of a left-leaning staircase: the whole level is
/// `r(·, letters[0], young[0], letters[1], …, young[n-2], letters[n-1]; tail)`
/// with the head occupying the first factor slot.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Level {
    letters: Vec<Letter>,
    young: Vec<Gen>,
    tail: Gen,
}

impl Level {
    fn arity(&self) -> usize {
        self.letters.len()
    }

    /// Comparison key between consecutive levels: arity, tail label,
    /// then the letter word.
    fn signature(&self) -> (usize, Gen, &[Letter]) {
        (self.arity(), self.tail, &self.letters)
    }
}

/// Levels of a left-leaning product, outermost first, together with the
/// innermost head generator. `None` when the term is not left-leaning.
fn decompose_levels(t: &MagmaTerm) -> Option<(Vec<Level>, Gen)> {
    let mut levels = Vec::new();
    let mut cur = t.clone();
    loop {
        if let MagmaTerm::Leaf(g) = cur {
            return Some((levels, g));
        }
        let spine = right_normed(&cur);
        let mut young = Vec::with_capacity(spine.factors.len().saturating_sub(1));
        for (y, _) in &spine.factors[1..] {
            match y {
                MagmaTerm::Leaf(g) => young.push(*g),
                MagmaTerm::Node(..) => return None,
            }
        }
        let letters = spine.factors.iter().map(|(_, a)| a.clone()).collect();
        let head = spine.factors[0].0.clone();
        levels.push(Level {
            letters,
            young,
            tail: spine.tail,
        });
        cur = head;
    }
}

fn is_sorted<T: Ord>(xs: &[T]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

/// Classifies a term as the strongest of
/// not-left-leaning / left-leaning / ordered / normal.
///
/// Ordered uses the non-strict level comparison: the signature
/// (arity, tail, letter word) must be non-decreasing from the outermost
/// level inwards. Normal additionally requires the leaf sequence, read
/// innermost level first, to be non-decreasing.
pub fn classify(t: &MagmaTerm) -> TermClass {
    let Some((levels, head)) = decompose_levels(t) else {
        return TermClass::NotLeftLeaning;
    };
    let letters_sorted = levels.iter().all(|l| is_sorted(&l.letters));
    let chain_ok = levels
        .windows(2)
        .all(|w| w[0].signature() <= w[1].signature());
    if !(letters_sorted && chain_ok) {
        return TermClass::LeftLeaning;
    }
    // Leaves in planar reading order: the innermost head first, then each
    // level's young factors from the innermost level outwards.
    let mut leaves = Vec::new();
    leaves.push(head);
    for level in levels.iter().rev() {
        leaves.extend(level.young.iter().copied());
    }
    if is_sorted(&leaves) {
        TermClass::Normal
    } else {
        TermClass::Ordered
    }
}

/// Largest leaf of a normal term, i.e. the last one in reading order.
pub(crate) fn max_leaf(t: &MagmaTerm) -> Gen {
    let (levels, head) = decompose_levels(t).expect("normal term expected");
    for level in &levels {
        if let Some(g) = level.young.last() {
            return *g;
        }
    }
    head
}

/// All magmatic monomials of the given degree over finite letter and
/// generator sets, in deterministic order.
pub fn enumerate_terms(degree: u32, letters: &[Letter], gens: &[Gen]) -> Vec<MagmaTerm> {
    assert!(degree >= 1);
    let mut by_degree: Vec<Vec<MagmaTerm>> = Vec::with_capacity(degree as usize + 1);
    by_degree.push(Vec::new());
    by_degree.push(gens.iter().map(|g| MagmaTerm::leaf(*g)).collect());
    for n in 2..=degree {
        let mut terms = Vec::new();
        for i in 1..n {
            for a in letters {
                for left in &by_degree[i as usize] {
                    for right in &by_degree[(n - i) as usize] {
                        terms.push(MagmaTerm::node(a.clone(), left.clone(), right.clone()));
                    }
                }
            }
        }
        terms.sort();
        by_degree.push(terms);
    }
    by_degree.pop().expect("built up to the requested degree")
}

/// All normal terms of the given degree: the basis of the degree-n
/// component of the free multi-Novikov algebra.
pub fn enumerate_normal(degree: u32, letters: &[Letter], gens: &[Gen]) -> Vec<MagmaTerm> {
    enumerate_terms(degree, letters, gens)
        .into_iter()
        .filter(|t| classify(t) == TermClass::Normal)
        .collect()
}

/// Structural evaluation into any multi-pre-Lie realization:
/// `Leaf(x) ↦ generator x`, `Node(a,u,v) ↦ eval(u) ▷_a eval(v)`.
pub fn eval<A: MultiPreLie>(t: &MagmaTerm, alg: &A) -> A::Elem {
    match t {
        MagmaTerm::Leaf(g) => alg.generator(*g),
        MagmaTerm::Node(a, l, r) => {
            let lv = eval(l, alg);
            let rv = eval(r, alg);
            alg.graft(a, &lv, &rv)
        }
    }
}

/// Linear extension of [`eval`] to combinations of terms.
pub fn eval_poly<A: MultiPreLie>(p: &Poly<MagmaTerm>, alg: &A) -> A::Elem {
    let mut acc = alg.zero();
    for (t, c) in p.iter() {
        let v = eval(t, alg);
        acc = alg.add(&acc, &alg.scale(&v, c));
    }
    acc
}

/// The free multi-magmatic algebra itself, as a realization; useful for
/// checking the defining identities fail here while holding after
/// rewriting.
#[derive(Clone, Copy, Default, Debug)]
pub struct FreeMagma;

impl MultiPreLie for FreeMagma {
    type Elem = Poly<MagmaTerm>;

    fn generator(&self, g: Gen) -> Poly<MagmaTerm> {
        Poly::unit(MagmaTerm::leaf(g))
    }

    fn graft(&self, a: &Letter, x: &Poly<MagmaTerm>, y: &Poly<MagmaTerm>) -> Poly<MagmaTerm> {
        let mut out = Poly::zero();
        for (u, c) in x.iter() {
            for (v, d) in y.iter() {
                out.add_term(MagmaTerm::node(a.clone(), u.clone(), v.clone()), c * d);
            }
        }
        out
    }

    fn add(&self, x: &Poly<MagmaTerm>, y: &Poly<MagmaTerm>) -> Poly<MagmaTerm> {
        x + y
    }

    fn sub(&self, x: &Poly<MagmaTerm>, y: &Poly<MagmaTerm>) -> Poly<MagmaTerm> {
        x - y
    }

    fn scale(&self, x: &Poly<MagmaTerm>, c: &crate::scalar::Scalar) -> Poly<MagmaTerm> {
        x.scaled(c)
    }

    fn zero(&self) -> Poly<MagmaTerm> {
        Poly::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genidx::{self, GenAlgebra, GenPoly};
    use crate::multiidx::MultiIdx;
    use crate::scalar::Scalar;

    fn a() -> Letter {
        Letter::sym(0)
    }

    fn b() -> Letter {
        Letter::sym(1)
    }

    fn x() -> Gen {
        Gen(0)
    }

    fn y() -> Gen {
        Gen(1)
    }

    fn lf(g: Gen) -> MagmaTerm {
        MagmaTerm::leaf(g)
    }

    fn nd(l: Letter, u: MagmaTerm, v: MagmaTerm) -> MagmaTerm {
        MagmaTerm::node(l, u, v)
    }

    /// z_k in the one-letter dictionary.
    fn zk(k: u32) -> GenPoly {
        genidx::var_poly(x(), MultiIdx::with(a(), k))
    }

    #[test]
    fn right_normed_examples() {
        let t = lf(x());
        let rn = right_normed(&t);
        assert!(rn.factors.is_empty());
        assert_eq!(rn.tail, x());
        assert_eq!(rn.reassemble(), t);

        let t = nd(a(), lf(x()), lf(y()));
        let rn = right_normed(&t);
        assert_eq!(rn.factors, alloc::vec![(lf(x()), a())]);
        assert_eq!(rn.tail, y());
        assert_eq!(rn.reassemble(), t);

        // (x ▷_a x) ▷_b y peels a single level.
        let inner = nd(a(), lf(x()), lf(x()));
        let t = nd(b(), inner.clone(), lf(y()));
        let rn = right_normed(&t);
        assert_eq!(rn.factors, alloc::vec![(inner, b())]);
        assert_eq!(rn.tail, y());
        assert_eq!(rn.reassemble(), t);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(knuth_rotation(&lf(x())), RootedTree::vertex(x()));

        // x ▷_a y: root y with one child x through edge a.
        let t = nd(a(), lf(x()), lf(y()));
        let r = knuth_rotation(&t);
        assert_eq!(r.label, y());
        assert_eq!(r.children.len(), 1);
        assert_eq!(r.children[0].0, a());
        assert_eq!(r.children[0].1, RootedTree::vertex(x()));

        // The corolla: x ▷_a (x ▷_a x) has a root with two children.
        let t = nd(a(), lf(x()), nd(a(), lf(x()), lf(x())));
        let r = knuth_rotation(&t);
        assert_eq!(r.children.len(), 2);
        assert_eq!(r.vertex_count(), 3);
        assert_eq!(knuth_rotation_inv(&r), t);
    }

    #[test]
    fn rotation_round_trip_exhaustive() {
        let letters = [a(), b()];
        let gens = [x(), y()];
        for degree in 1..=5 {
            for t in enumerate_terms(degree, &letters, &gens) {
                let r = knuth_rotation(&t);
                assert_eq!(r.vertex_count(), t.degree());
                assert_eq!(knuth_rotation_inv(&r), t);
            }
        }
    }

    #[test]
    fn classify_examples() {
        // The corolla is normal.
        let corolla = nd(a(), lf(x()), nd(a(), lf(x()), lf(x())));
        assert_eq!(classify(&corolla), TermClass::Normal);
        // The chain is normal under the non-strict level comparison.
        let chain = nd(a(), nd(a(), lf(x()), lf(x())), lf(x()));
        assert_eq!(classify(&chain), TermClass::Normal);
        // A non-generator young factor breaks left-leaning.
        let bad = nd(a(), lf(x()), nd(a(), nd(a(), lf(x()), lf(x())), lf(x())));
        assert_eq!(classify(&bad), TermClass::NotLeftLeaning);
        // Unsorted letters are left-leaning but not ordered.
        let unsorted = nd(b(), lf(x()), nd(a(), lf(x()), lf(x())));
        assert_eq!(classify(&unsorted), TermClass::LeftLeaning);
        // Decreasing leaves are ordered but not normal.
        let decreasing = nd(a(), lf(y()), nd(a(), lf(x()), lf(x())));
        assert_eq!(classify(&decreasing), TermClass::Ordered);
        // (x ▷_a (x ▷_a x)) ▷_a x: outer arity 1 under inner arity 2
        // respects the staircase, so the term is normal.
        let planted_corolla = nd(a(), corolla, lf(x()));
        assert_eq!(classify(&planted_corolla), TermClass::Normal);
        // (x ▷_a x) ▷_a (x ▷_a x): outer arity 2 over inner arity 1
        // violates the staircase condition.
        let top_heavy = nd(
            a(),
            nd(a(), lf(x()), lf(x())),
            nd(a(), lf(x()), lf(x())),
        );
        assert_eq!(classify(&top_heavy), TermClass::LeftLeaning);
    }

    #[test]
    fn normal_counts_match_partitions() {
        let letters = [a()];
        let gens = [x()];
        let expected = [1usize, 1, 2, 3, 5, 7, 11];
        for (i, want) in expected.iter().enumerate() {
            let got = enumerate_normal(i as u32 + 1, &letters, &gens).len();
            assert_eq!(got, *want, "degree {}", i + 1);
        }
    }

    #[test]
    fn normal_counts_match_populated_counts() {
        for (num_letters, num_gens) in [(1u32, 1u32), (1, 2), (2, 1), (2, 2)] {
            let letters = crate::letter::sym_alphabet(num_letters);
            let gens = crate::letter::gen_set(num_gens);
            for degree in 1..=4 {
                let normal = enumerate_normal(degree, &letters, &gens).len();
                let populated = genidx::enumerate_populated(degree, &letters, &gens).len();
                assert_eq!(
                    normal, populated,
                    "degree {degree}, {num_letters} letters, {num_gens} labels"
                );
            }
        }
    }

    #[test]
    fn eval_examples() {
        let alg = GenAlgebra;
        assert_eq!(eval(&lf(x()), &alg), zk(0));
        // x ▷_a x = z_0 z_1
        let t = nd(a(), lf(x()), lf(x()));
        assert_eq!(eval(&t, &alg), zk(0).mul_poly(&zk(1)));
        // x ▷_a (x ▷_a x) = z_0 z_1^2 + 2 z_0^2 z_2
        let t = nd(a(), lf(x()), t);
        let expected = &zk(0).mul_poly(&zk(1)).mul_poly(&zk(1))
            + &zk(0)
                .mul_poly(&zk(0))
                .mul_poly(&zk(2))
                .scaled(&Scalar::from_int(2));
        assert_eq!(eval(&t, &alg), expected);
    }

    #[test]
    fn rewrite_fixes_normal_terms() {
        let mut nf = Normalizer::new();
        let letters = [a(), b()];
        let gens = [x(), y()];
        for degree in 1..=4 {
            for t in enumerate_normal(degree, &letters, &gens) {
                assert_eq!(nf.normal_form(&t), Poly::unit(t.clone()));
            }
        }
    }

    #[test]
    fn rewrite_is_sound_under_evaluation() {
        let mut nf = Normalizer::new();
        let alg = GenAlgebra;
        let letters = [a(), b()];
        let gens = [x(), y()];
        for degree in 1..=4 {
            for t in enumerate_terms(degree, &letters, &gens) {
                let rewritten = nf.normal_form(&t);
                assert_eq!(
                    eval_poly(&rewritten, &alg),
                    eval(&t, &alg),
                    "term {t:?} rewrote to {rewritten:?}"
                );
            }
        }
    }

    #[test]
    fn rewrite_agrees_with_solve_small() {
        let mut nf = Normalizer::new();
        let mut solver = FreenessSolver::new();
        let letters = [a(), b()];
        let gens = [x(), y()];
        for degree in 1..=4 {
            for t in enumerate_terms(degree, &letters, &gens) {
                let rewritten = nf.normal_form(&t);
                let solved = solver.solve_normal_form(&t).expect("component invertible");
                assert_eq!(rewritten, solved, "term {t:?}");
            }
        }
    }

    #[test]
    fn solve_examples() {
        let mut solver = FreenessSolver::new();
        let chain = nd(a(), nd(a(), lf(x()), lf(x())), lf(x()));
        assert_eq!(
            solver.solve_normal_form(&chain).unwrap(),
            Poly::unit(chain.clone())
        );
        let corolla = nd(a(), lf(x()), nd(a(), lf(x()), lf(x())));
        assert_eq!(
            solver.solve_normal_form(&corolla).unwrap(),
            Poly::unit(corolla.clone())
        );
    }

    #[test]
    fn express_in_generators_examples() {
        let mut solver = FreenessSolver::new();
        // z_0 is the bare generator.
        let z0 = genidx::GenVar::bare(x());
        let expr = solver
            .express_in_generators(&MultiIdx::single(z0.clone()))
            .unwrap();
        assert_eq!(expr, Poly::unit(lf(x())));
        // z_0 z_1 = x ▷_a x.
        let z1 = genidx::GenVar::new(x(), MultiIdx::single(a()));
        let m = MultiIdx::from_entries([(z0.clone(), 1), (z1, 1)]);
        let expr = solver.express_in_generators(&m).unwrap();
        assert_eq!(expr, Poly::unit(nd(a(), lf(x()), lf(x()))));
        // z_0^2 z_2 = 1/2 (corolla - chain).
        let z2 = genidx::GenVar::new(x(), MultiIdx::with(a(), 2));
        let m = MultiIdx::from_entries([(z0, 2), (z2, 1)]);
        let expr = solver.express_in_generators(&m).unwrap();
        let corolla = nd(a(), lf(x()), nd(a(), lf(x()), lf(x())));
        let chain = nd(a(), nd(a(), lf(x()), lf(x())), lf(x()));
        let expected = Poly::from_terms([
            (corolla, Scalar::ratio(1, 2)),
            (chain, Scalar::ratio(-1, 2)),
        ]);
        assert_eq!(expr, expected);
        // Round trip through evaluation.
        assert_eq!(eval_poly(&expr, &GenAlgebra), Poly::unit(m));
        // Non-populated input is rejected.
        let z1 = genidx::GenVar::new(x(), MultiIdx::single(a()));
        let err = solver.express_in_generators(&MultiIdx::single(z1));
        assert_eq!(err, Err(crate::error::Error::NotPopulated));
    }

    #[test]
    fn multi_novikov_identities_vanish_after_eval() {
        // The three defining identities evaluate to zero in the
        // multi-index realization.
        let alg = GenAlgebra;
        let xs = [zk(0), zk(1), &zk(0).mul_poly(&zk(0)) + &zk(2)];
        for p in &xs {
            for q in &xs {
                for r in &xs {
                    for la in [a(), b()] {
                        for lb in [a(), b()] {
                            let i1 = identity_exchange_args(&alg, p, q, r, &la, &lb);
                            let i2 = identity_exchange_letters(&alg, p, q, r, &la, &lb);
                            let i3 = identity_right_commute(&alg, p, q, r, &la, &lb);
                            assert!(i1.is_zero() && i2.is_zero() && i3.is_zero());
                        }
                    }
                }
            }
        }
    }

    fn identity_exchange_args<A: crate::algebra::MultiPreLie>(
        alg: &A,
        x: &A::Elem,
        y: &A::Elem,
        z: &A::Elem,
        la: &Letter,
        lb: &Letter,
    ) -> A::Elem {
        let lhs = alg.sub(
            &alg.graft(lb, &alg.graft(la, x, y), z),
            &alg.graft(la, x, &alg.graft(lb, y, z)),
        );
        let rhs = alg.sub(
            &alg.graft(lb, &alg.graft(la, y, x), z),
            &alg.graft(la, y, &alg.graft(lb, x, z)),
        );
        alg.sub(&lhs, &rhs)
    }

    fn identity_exchange_letters<A: crate::algebra::MultiPreLie>(
        alg: &A,
        x: &A::Elem,
        y: &A::Elem,
        z: &A::Elem,
        la: &Letter,
        lb: &Letter,
    ) -> A::Elem {
        let lhs = alg.sub(
            &alg.graft(lb, &alg.graft(la, x, y), z),
            &alg.graft(la, x, &alg.graft(lb, y, z)),
        );
        let rhs = alg.sub(
            &alg.graft(la, &alg.graft(lb, x, y), z),
            &alg.graft(lb, x, &alg.graft(la, y, z)),
        );
        alg.sub(&lhs, &rhs)
    }

    fn identity_right_commute<A: crate::algebra::MultiPreLie>(
        alg: &A,
        x: &A::Elem,
        y: &A::Elem,
        z: &A::Elem,
        la: &Letter,
        lb: &Letter,
    ) -> A::Elem {
        alg.sub(
            &alg.graft(lb, &alg.graft(la, x, y), z),
            &alg.graft(la, &alg.graft(lb, x, z), y),
        )
    }
}
