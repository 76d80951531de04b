//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the symbolic kernel.
///
/// Internal invariants (things that cannot happen for well-formed inputs)
/// panic instead; these variants are the spec-visible failure modes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `(1+T)^alpha` was asked of a series whose constant term is not 1 or
    /// which has a principal part.
    NonUnitConstantTerm,
    /// A Laurent-series coefficient was requested beyond the truncation
    /// order; the caller must re-run with a higher order.
    InsufficientOrder { needed: i64, have: i64 },
    /// Zero pivot in a triangular solve.
    SingularDiagonal { index: usize },
    /// `so_N` is only supported for `N >= 3`.
    UnsupportedRank { n: usize },
    /// A matrix expected to be skew-symmetric is not.
    NotSkew,
    /// A matrix expected to satisfy `A^t B + B A = 0` does not.
    NotInSo,
    /// A matrix expected to satisfy `g^t B g = B` does not.
    NotOrthogonal,
    /// Total Pfaffians need even dimension.
    OddPfaffian { n: usize },
    /// An operation received a polynomial containing variables outside its
    /// declared universe (e.g. symmetrization of a non-`so` polynomial).
    ForbiddenVariables { context: &'static str },
    /// Parameter vectors of the wrong length, mismatched forms, etc.
    BadInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitConstantTerm => {
                write!(f, "series power needs constant term exactly 1")
            }
            Error::InsufficientOrder { needed, have } => write!(
                f,
                "truncation order {have} cannot determine coefficient {needed} exactly"
            ),
            Error::SingularDiagonal { index } => {
                write!(f, "zero diagonal entry at row {index} in triangular solve")
            }
            Error::UnsupportedRank { n } => write!(f, "so_{n} is not supported (need N >= 3)"),
            Error::NotSkew => write!(f, "matrix is not skew-symmetric"),
            Error::NotInSo => write!(f, "matrix does not satisfy A^t B + B A = 0"),
            Error::NotOrthogonal => write!(f, "matrix does not preserve the bilinear form"),
            Error::OddPfaffian { n } => write!(f, "total Pfaffian undefined for odd size {n}"),
            Error::ForbiddenVariables { context } => {
                write!(f, "polynomial contains variables not allowed in {context}")
            }
            Error::BadInput(msg) => write!(f, "{msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
