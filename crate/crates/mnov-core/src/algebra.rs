//! Common interface for the multi-pre-Lie realizations and the
//! multi-symmetric brace recursion built on top of it.

use alloc::vec::Vec;

use crate::error::Error;
use crate::letter::{Gen, Letter};
use crate::scalar::Scalar;

/// A linear space with generators and a family of grafting products
/// `x ▷_a y` indexed by letters.
///
/// Elements are linear combinations, so sums, differences and rational
/// scaling are part of the interface; the products are understood to be
/// bilinear.
pub trait MultiPreLie {
    type Elem: Clone + Eq;

    fn generator(&self, g: Gen) -> Self::Elem;

    /// `x ▷_a y`.
    fn graft(&self, a: &Letter, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn scale(&self, x: &Self::Elem, c: &Scalar) -> Self::Elem;

    fn zero(&self) -> Self::Elem;
}

/// Defect of the argument-exchange identity
/// `(x▷_a y)▷_b z − x▷_a(y▷_b z) − (y▷_a x)▷_b z + y▷_a(x▷_b z)`;
/// zero in every multi-Novikov realization.
pub fn defect_arg_exchange<A: MultiPreLie>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
    a: &Letter,
    b: &Letter,
) -> A::Elem {
    let lhs = alg.sub(
        &alg.graft(b, &alg.graft(a, x, y), z),
        &alg.graft(a, x, &alg.graft(b, y, z)),
    );
    let rhs = alg.sub(
        &alg.graft(b, &alg.graft(a, y, x), z),
        &alg.graft(a, y, &alg.graft(b, x, z)),
    );
    alg.sub(&lhs, &rhs)
}

/// Defect of the letter-exchange identity
/// `(x▷_a y)▷_b z − x▷_a(y▷_b z) − (x▷_b y)▷_a z + x▷_b(y▷_a z)`.
pub fn defect_letter_exchange<A: MultiPreLie>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
    a: &Letter,
    b: &Letter,
) -> A::Elem {
    let lhs = alg.sub(
        &alg.graft(b, &alg.graft(a, x, y), z),
        &alg.graft(a, x, &alg.graft(b, y, z)),
    );
    let rhs = alg.sub(
        &alg.graft(a, &alg.graft(b, x, y), z),
        &alg.graft(b, x, &alg.graft(a, y, z)),
    );
    alg.sub(&lhs, &rhs)
}

/// Defect of right-commutativity `(x▷_a y)▷_b z − (x▷_b z)▷_a y`.
pub fn defect_right_commute<A: MultiPreLie>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
    a: &Letter,
    b: &Letter,
) -> A::Elem {
    alg.sub(
        &alg.graft(b, &alg.graft(a, x, y), z),
        &alg.graft(a, &alg.graft(b, x, z), y),
    )
}

/// Defect of the multi-pre-Lie identity
/// `(x▷_a y)▷_b z − x▷_a(y▷_b z) − (y▷_b x)▷_a z + y▷_b(x▷_a z)`;
/// zero in every multi-pre-Lie realization, grafting on trees included.
pub fn defect_pre_lie<A: MultiPreLie>(
    alg: &A,
    x: &A::Elem,
    y: &A::Elem,
    z: &A::Elem,
    a: &Letter,
    b: &Letter,
) -> A::Elem {
    let lhs = alg.sub(
        &alg.graft(b, &alg.graft(a, x, y), z),
        &alg.graft(a, x, &alg.graft(b, y, z)),
    );
    let rhs = alg.sub(
        &alg.graft(a, &alg.graft(b, y, x), z),
        &alg.graft(b, y, &alg.graft(a, x, z)),
    );
    alg.sub(&lhs, &rhs)
}

/// Orientation of the unary brace base case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BraceBase {
    /// `{x; y}_a = y ▷_a x`: braces of generators form corollas rooted at
    /// `x`, and the multidifferential realization gives
    /// `∂_{a_1}…∂_{a_n}(x)·y_1…y_n`. This is the default.
    ArgumentsOntoHead,
    /// `{x; y}_a = x ▷_a y`, kept for comparison only.
    HeadOntoArguments,
}

/// Multi-symmetric brace `{x; y_1,…,y_n}_{a_1,…,a_n}`.
///
/// Recursion: the top argument is grafted onto the smaller brace, minus
/// the sum of braces where it is grafted onto one of the other arguments
/// instead.
pub fn brace<A: MultiPreLie>(
    alg: &A,
    x: &A::Elem,
    args: &[A::Elem],
    letters: &[Letter],
) -> Result<A::Elem, Error> {
    brace_with(alg, x, args, letters, BraceBase::ArgumentsOntoHead)
}

pub fn brace_with<A: MultiPreLie>(
    alg: &A,
    x: &A::Elem,
    args: &[A::Elem],
    letters: &[Letter],
    base: BraceBase,
) -> Result<A::Elem, Error> {
    if args.len() != letters.len() || args.is_empty() {
        return Err(Error::ArityMismatch {
            args: args.len(),
            letters: letters.len(),
        });
    }
    if args.len() == 1 {
        return Ok(match base {
            BraceBase::ArgumentsOntoHead => alg.graft(&letters[0], &args[0], x),
            BraceBase::HeadOntoArguments => alg.graft(&letters[0], x, &args[0]),
        });
    }
    let (last, init) = args.split_last().expect("nonempty");
    let (last_letter, init_letters) = letters.split_last().expect("nonempty");
    let inner = brace_with(alg, x, init, init_letters, base)?;
    let mut acc = alg.graft(last_letter, last, &inner);
    for i in 0..init.len() {
        let mut replaced: Vec<A::Elem> = init.to_vec();
        replaced[i] = alg.graft(last_letter, last, &init[i]);
        let correction = brace_with(alg, x, &replaced, init_letters, base)?;
        acc = alg.sub(&acc, &correction);
    }
    Ok(acc)
}
