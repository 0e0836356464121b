//! Rewriting a magmatic term into the normal-term basis modulo the
//! multi-Novikov identities.
//!
//! The procedure mirrors the spanning arguments: adjacent letter swaps
//! and adjacent argument swaps each cost two correction terms with a
//! merged factor (strictly smaller in the (degree, leaves, spine-length)
//! measure), while right-commutativity exchanges the outer level with the
//! head's top level without corrections. A term is finished when its
//! levels form a staircase with sorted letters and a globally sorted leaf
//! sequence.
//!
//! Every step is an instance of one of the three defining identities, so
//! the result is congruent to the input by construction; soundness is
//! checked independently through the multi-index evaluation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::letter::{Gen, Letter};
use crate::poly::Poly;
use crate::scalar::Scalar;

use super::{
    classify, max_leaf, reassemble_spine, right_normed, MagmaTerm, TermClass,
};

type Factors = Vec<(MagmaTerm, Letter)>;

/// Hard cap on elementary steps; hitting it means the reduction measure
/// failed to decrease, which is a bug worth a loud panic.
const STEP_LIMIT: u64 = 100_000_000;

/// Bound on the spine recursion depth, for the same purpose: a loop in
/// the reduction should abort the run instead of overflowing the stack.
const DEPTH_LIMIT: u32 = 10_000;

/// Memoized normal-form rewriter.
pub struct Normalizer {
    memo: BTreeMap<MagmaTerm, Poly<MagmaTerm>>,
    active: BTreeSet<MagmaTerm>,
    steps: u64,
    depth: u32,
}

impl Default for Normalizer {
    fn default() -> Self {
        Self::new()
    }
}

impl Normalizer {
    pub fn new() -> Self {
        Normalizer {
            memo: BTreeMap::new(),
            active: BTreeSet::new(),
            steps: 0,
            depth: 0,
        }
    }

    /// Combination of normal terms congruent to `t` modulo the ideal of
    /// the multi-Novikov identities.
    pub fn normal_form(&mut self, t: &MagmaTerm) -> Poly<MagmaTerm> {
        if let Some(p) = self.memo.get(t) {
            return p.clone();
        }
        assert!(
            self.active.insert(t.clone()),
            "rewriting revisited a term already under reduction"
        );
        let result = self.compute(t);
        self.active.remove(t);
        debug_assert!(
            result.iter().all(|(u, _)| classify(u) == TermClass::Normal),
            "rewriting produced a non-normal term"
        );
        self.memo.insert(t.clone(), result.clone());
        result
    }

    /// Linear extension to combinations of terms.
    pub fn normal_form_poly(&mut self, p: &Poly<MagmaTerm>) -> Poly<MagmaTerm> {
        let mut out = Poly::zero();
        for (t, c) in p.iter() {
            let nf = self.normal_form(t);
            out.add_assign(&nf.scaled(c));
        }
        out
    }

    fn compute(&mut self, t: &MagmaTerm) -> Poly<MagmaTerm> {
        if t.is_leaf() {
            return Poly::unit(t.clone());
        }
        let spine = right_normed(t);
        // Normalize every factor first, then expand multilinearly.
        let mut combos: Vec<(Factors, Scalar)> = alloc::vec![(Vec::new(), Scalar::one())];
        for (y, a) in &spine.factors {
            let nf = self.normal_form(y);
            let mut next = Vec::with_capacity(combos.len() * nf.num_terms());
            for (fs, c) in &combos {
                for (u, d) in nf.iter() {
                    let mut fs2 = fs.clone();
                    fs2.push((u.clone(), a.clone()));
                    next.push((fs2, c * d));
                }
            }
            combos = next;
        }
        let mut out = Poly::zero();
        for (fs, c) in combos {
            let p = self.spine_nf(fs, spine.tail);
            out.add_assign(&p.scaled(&c));
        }
        out
    }

    /// Normal form of `r(fs; tail)`, all factors already normal.
    fn spine_nf(&mut self, fs: Factors, tail: Gen) -> Poly<MagmaTerm> {
        self.depth += 1;
        assert!(
            self.depth < DEPTH_LIMIT,
            "rewriting recursion failed to descend in the reduction measure"
        );
        let out = self.spine_nf_inner(fs, tail);
        self.depth -= 1;
        out
    }

    fn spine_nf_inner(&mut self, fs: Factors, tail: Gen) -> Poly<MagmaTerm> {
        self.steps += 1;
        assert!(self.steps < STEP_LIMIT, "rewriting step limit exceeded");
        if fs.is_empty() {
            return Poly::unit(MagmaTerm::leaf(tail));
        }
        // Letters ascending along the spine.
        if let Some(i) = (0..fs.len() - 1).find(|&i| fs[i].1 > fs[i + 1].1) {
            return self.letter_swap(fs, tail, i);
        }
        // Large factors to the front by degree, generators ascending.
        if let Some(i) =
            (0..fs.len() - 1).find(|&i| factor_key(&fs[i].0) > factor_key(&fs[i + 1].0))
        {
            return self.factor_swap(fs, tail, i);
        }
        if fs[0].0.is_leaf() {
            // Every factor is a generator: a single sorted level.
            return Poly::unit(reassemble_spine(&fs, tail));
        }
        // A second large factor is folded away by a level exchange.
        if fs.len() >= 2 && !fs[1].0.is_leaf() {
            return self.top_exchange(fs, tail);
        }
        let head = &fs[0].0;
        let hs = right_normed(head);
        let outer_letters: Vec<Letter> = fs.iter().map(|(_, a)| a.clone()).collect();
        let head_letters: Vec<Letter> = hs.factors.iter().map(|(_, a)| a.clone()).collect();
        let outer_sig = (fs.len(), tail, outer_letters);
        let head_sig = (hs.factors.len(), hs.tail, head_letters);
        if outer_sig > head_sig {
            return self.top_exchange(fs, tail);
        }
        if fs.len() >= 2 {
            let boundary = match &fs[1].0 {
                MagmaTerm::Leaf(g) => *g,
                MagmaTerm::Node(..) => unreachable!("second factor checked to be a leaf"),
            };
            if max_leaf(head) > boundary {
                return self.leaf_exchange(fs, tail);
            }
        }
        let term = reassemble_spine(&fs, tail);
        debug_assert_eq!(classify(&term), TermClass::Normal);
        Poly::unit(term)
    }

    /// Swaps the letters at spine positions `i`, `i+1`:
    /// `x ▷_a (y ▷_b R) = x ▷_b (y ▷_a R) + (x ▷_a y) ▷_b R - (x ▷_b y) ▷_a R`.
    fn letter_swap(&mut self, fs: Factors, tail: Gen, i: usize) -> Poly<MagmaTerm> {
        let a = fs[i].1.clone();
        let b = fs[i + 1].1.clone();
        let x = fs[i].0.clone();
        let y = fs[i + 1].0.clone();
        let mut primary = fs.clone();
        primary[i].1 = b.clone();
        primary[i + 1].1 = a.clone();
        let mut out = self.spine_nf(primary, tail);
        let plus = MagmaTerm::node(a.clone(), x.clone(), y.clone());
        let minus = MagmaTerm::node(b.clone(), x, y);
        out.add_assign(&self.merged(&fs, tail, i, plus, b));
        out.sub_assign(&self.merged(&fs, tail, i, minus, a));
        out
    }

    /// Swaps the factors at spine positions `i`, `i+1`, letters staying
    /// in place:
    /// `x ▷_a (y ▷_b R) = y ▷_a (x ▷_b R) + (x ▷_a y) ▷_b R - (y ▷_a x) ▷_b R`.
    fn factor_swap(&mut self, fs: Factors, tail: Gen, i: usize) -> Poly<MagmaTerm> {
        let a = fs[i].1.clone();
        let b = fs[i + 1].1.clone();
        let x = fs[i].0.clone();
        let y = fs[i + 1].0.clone();
        let mut primary = fs.clone();
        primary[i].0 = y.clone();
        primary[i + 1].0 = x.clone();
        let mut out = self.spine_nf(primary, tail);
        let plus = MagmaTerm::node(a.clone(), x.clone(), y.clone());
        let minus = MagmaTerm::node(a, y, x);
        out.add_assign(&self.merged(&fs, tail, i, plus, b.clone()));
        out.sub_assign(&self.merged(&fs, tail, i, minus, b));
        out
    }

    /// Spine with positions `i`, `i+1` replaced by the merged factor
    /// under `letter`, fully normalized. The merged factor has strictly
    /// smaller degree than the whole term.
    fn merged(
        &mut self,
        fs: &Factors,
        tail: Gen,
        i: usize,
        merged: MagmaTerm,
        letter: Letter,
    ) -> Poly<MagmaTerm> {
        let nf = self.normal_form(&merged);
        let mut out = Poly::zero();
        for (u, c) in nf.iter() {
            let mut fs2: Factors = Vec::with_capacity(fs.len() - 1);
            fs2.extend_from_slice(&fs[..i]);
            fs2.push((u.clone(), letter.clone()));
            fs2.extend_from_slice(&fs[i + 2..]);
            out.add_assign(&self.spine_nf(fs2, tail).scaled(c));
        }
        out
    }

    /// Right-commutativity exchange `(x ▷_c y) ▷_a z = (x ▷_a z) ▷_c y`
    /// between the outer level and the head's top level. No corrections;
    /// the inner part has strictly smaller degree and is re-normalized.
    fn top_exchange(&mut self, fs: Factors, tail: Gen) -> Poly<MagmaTerm> {
        let a1 = fs[0].1.clone();
        let hs = right_normed(&fs[0].0);
        let (h_head, c1) = hs.factors[0].clone();
        let mut inner_fs: Factors = Vec::with_capacity(fs.len());
        inner_fs.push((h_head, a1));
        inner_fs.extend_from_slice(&fs[1..]);
        let inner = reassemble_spine(&inner_fs, tail);
        let inner_nf = self.normal_form(&inner);
        let mut out = Poly::zero();
        for (p, c) in inner_nf.iter() {
            let mut wrapped: Factors = Vec::with_capacity(hs.factors.len());
            wrapped.push((p.clone(), c1.clone()));
            wrapped.extend_from_slice(&hs.factors[1..]);
            out.add_assign(&self.spine_nf(wrapped, hs.tail).scaled(c));
        }
        out
    }

    /// Exchanges the head's largest leaf with the smallest outer young
    /// factor, strictly reducing the leaf-sequence inversions.
    ///
    /// The largest leaf is first rotated to the front of the head's
    /// spine (argument swaps with their corrections), then carried across
    /// the junction by an exchange, a swap against the outer young
    /// factor, and an exchange back:
    ///
    /// `r(r(g,c_1,R';z'), a_1, y_2, S; z)
    ///    = r(r(y_2,c_1,R';z'), a_1, g, S; z) + corrections`
    fn leaf_exchange(&mut self, fs: Factors, tail: Gen) -> Poly<MagmaTerm> {
        let a1 = fs[0].1.clone();
        let a2 = fs[1].1.clone();
        let y2 = fs[1].0.clone();
        debug_assert!(y2.is_leaf(), "outer young factors are generators here");
        let hs = right_normed(&fs[0].0);
        let m = hs.factors.len();
        debug_assert!(m >= 2, "leaf exchange needs a young factor in the head");
        let mut out = Poly::zero();
        // Rotate the head's last young factor to the front.
        let mut hfs = hs.factors.clone();
        for j in (0..m - 1).rev() {
            let c_j = hfs[j].1.clone();
            let c_k = hfs[j + 1].1.clone();
            let x = hfs[j].0.clone();
            let y = hfs[j + 1].0.clone();
            let plus = MagmaTerm::node(c_j.clone(), x.clone(), y.clone());
            let minus = MagmaTerm::node(c_j.clone(), y.clone(), x.clone());
            for (positive, merged_factor) in [(true, plus), (false, minus)] {
                let mut head_fs: Factors = Vec::with_capacity(m - 1);
                head_fs.extend_from_slice(&hfs[..j]);
                head_fs.push((merged_factor, c_k.clone()));
                head_fs.extend_from_slice(&hfs[j + 2..]);
                let head_variant = reassemble_spine(&head_fs, hs.tail);
                let mut full = fs.clone();
                full[0] = (head_variant, a1.clone());
                let term = reassemble_spine(&full, tail);
                let nf = self.normal_form(&term);
                if positive {
                    out.add_assign(&nf);
                } else {
                    out.sub_assign(&nf);
                }
            }
            // Swap the factors, letters staying in place.
            hfs[j].0 = y;
            hfs[j + 1].0 = x;
        }
        let (moved, c1) = hfs[0].clone();
        debug_assert!(moved.is_leaf(), "rotated factor must be a generator");
        // Primary path: the outer young factor becomes the new head of
        // the head, the moved leaf joins the outer young factors.
        let mut new_head_fs: Factors = Vec::with_capacity(m);
        new_head_fs.push((y2.clone(), c1.clone()));
        new_head_fs.extend_from_slice(&hfs[1..]);
        let new_head = reassemble_spine(&new_head_fs, hs.tail);
        let head_nf = self.normal_form(&new_head);
        for (h, c) in head_nf.iter() {
            let mut outer: Factors = Vec::with_capacity(fs.len());
            outer.push((h.clone(), a1.clone()));
            outer.push((moved.clone(), a2.clone()));
            outer.extend_from_slice(&fs[2..]);
            out.add_assign(&self.spine_nf(outer, tail).scaled(c));
        }
        // Corrections of the swap against the outer young factor, still
        // wrapped under the exchange; they merge two generators and so
        // carry strictly fewer leaves.
        let plus = MagmaTerm::node(a1.clone(), moved.clone(), y2.clone());
        let minus = MagmaTerm::node(a1, y2, moved);
        for (positive, merged_factor) in [(true, plus), (false, minus)] {
            let mut inner_fs: Factors = Vec::with_capacity(fs.len() - 1);
            inner_fs.push((merged_factor, a2.clone()));
            inner_fs.extend_from_slice(&fs[2..]);
            let inner = reassemble_spine(&inner_fs, tail);
            let mut whole_fs: Factors = Vec::with_capacity(m);
            whole_fs.push((inner, c1.clone()));
            whole_fs.extend_from_slice(&hfs[1..]);
            let term = reassemble_spine(&whole_fs, hs.tail);
            let nf = self.normal_form(&term);
            if positive {
                out.add_assign(&nf);
            } else {
                out.sub_assign(&nf);
            }
        }
        out
    }
}

/// Sort key on spine factors: large factors first by descending degree,
/// then a fixed structural order; generators end up ascending.
fn factor_key(t: &MagmaTerm) -> (Reverse<u32>, &MagmaTerm) {
    (Reverse(t.degree()), t)
}

/// Normal form of a single term with a fresh memo table.
pub fn rewrite_normal_form(t: &MagmaTerm) -> Poly<MagmaTerm> {
    Normalizer::new().normal_form(t)
}
