//! Error type shared by the algebraic operations.

use core::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// The evaluation matrix of normal terms failed to be invertible on a
    /// graded component. This would contradict the freeness theorems, so
    /// it is surfaced loudly instead of being patched over.
    SingularSystem {
        degree: u32,
    },
    /// The monomial does not satisfy the populated condition.
    NotPopulated,
    /// Brace called with mismatched argument and letter counts.
    ArityMismatch {
        args: usize,
        letters: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularSystem { degree } => write!(
                f,
                "singular evaluation system in the degree-{degree} component"
            ),
            Error::NotPopulated => write!(f, "monomial is not populated"),
            Error::ArityMismatch { args, letters } => write!(
                f,
                "brace arity mismatch: {args} arguments vs {letters} letters"
            ),
        }
    }
}

impl core::error::Error for Error {}
