//! Exact-arithmetic computer algebra for the graded dual pair of rings
//! spanned by noncommutative symmetric functions and quasisymmetric
//! functions, together with the fragment of ordinary symmetric functions
//! needed to cross-check them.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is organized around three layers:
//!
//! * [`compositions`] — integer compositions, the subset bijection, the
//!   three involutions, refinement, and the scalar statistics that appear
//!   as change-of-basis coefficients.
//! * [`polyreal`] — truncated polynomial realizations in finitely many
//!   noncommuting (or commuting) variables. This layer is the ground
//!   truth: every abstract identity in the crate can be checked against
//!   literal polynomial arithmetic here.
//! * [`nsym`], [`qsym`], [`transmat`], [`walls`] — abstract elements with
//!   five bases on each side, change of basis, involutions, the duality
//!   pairing, composition-indexed transition matrices, and the brick
//!   tabloid / wall combinatorial models.
//!
//! The [`verify`] module bundles the identity suites into reports, which
//! the `nsymkit` command-line tool exposes.

pub mod compositions;
pub mod notation;
pub mod nsym;
pub mod polyreal;
pub mod qsym;
pub mod rational;
pub mod report;
pub mod transmat;
pub mod verify;
pub mod walls;

pub use compositions::{Composition, Partition, SubsetOfRange};
pub use nsym::{NSymBasis, NSymElem};
pub use polyreal::{CAlgebra, CPoly, NcAlgebra, NcPoly};
pub use qsym::{QSymBasis, QSymElem};
pub use rational::Rat;
pub use transmat::TransitionMatrix;
pub use walls::{BrickTabloid, IndexedWall, Wall};

use std::fmt;

/// Errors reported by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A composition part was zero or negative where a strong composition
    /// was required.
    InvalidPart(String),
    /// A subset member fell outside the ambient range `[1, n-1]`.
    SubsetOutOfRange { member: i64, n: u32 },
    /// Two subsets with different ambient `n` were combined.
    AmbientMismatch { left: u32, right: u32 },
    /// The finer composition does not refine the coarser one. `course`
    /// names the first part of the coarser composition that cannot be
    /// assembled, when that is known.
    NotARefinement {
        finer: String,
        coarser: String,
        course: Option<usize>,
    },
    /// Two compositions were expected to have equal size.
    SizeMismatch { left: u32, right: u32 },
    /// A statistic of the empty composition was requested.
    EmptyComposition(String),
    /// Polynomials over different variable counts were combined.
    VariableMismatch { left: usize, right: usize },
    /// A product or generator would exceed the configured degree cap.
    DegreeCapExceeded { degree: usize, cap: usize },
    /// The membership test needs at least as many variables as the degree.
    UnsoundVariableCount { vars: usize, degree: usize },
    /// The polynomial is not homogeneous of the stated degree.
    NotHomogeneous { expected: usize },
    /// The polynomial is not symmetric, so it has no expansion in a
    /// symmetric-function basis.
    NotSymmetric(String),
    /// An exact linear solve hit a singular system. This indicates an
    /// internal error for the systems this crate constructs.
    SingularSystem(String),
    /// Matrix dimensions do not agree.
    DimensionMismatch { left: usize, right: usize },
    /// Text input could not be parsed. `pos` is a byte offset.
    Parse { pos: usize, msg: String },
    /// An unknown basis or generator tag.
    UnknownBasis(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPart(s) => write!(f, "invalid composition part: {s}"),
            Error::SubsetOutOfRange { member, n } => {
                write!(f, "subset member {member} outside [1, {}]", n.saturating_sub(1))
            }
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient size mismatch: n={left} vs n={right}")
            }
            Error::NotARefinement { finer, coarser, course } => match course {
                Some(i) => write!(
                    f,
                    "{finer} does not refine {coarser}: course {i} cannot be assembled"
                ),
                None => write!(f, "{finer} does not refine {coarser}"),
            },
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: |left|={left} vs |right|={right}")
            }
            Error::EmptyComposition(op) => {
                write!(f, "{op} is undefined for the empty composition")
            }
            Error::VariableMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            Error::DegreeCapExceeded { degree, cap } => {
                write!(f, "degree {degree} exceeds the configured cap {cap}")
            }
            Error::UnsoundVariableCount { vars, degree } => write!(
                f,
                "membership test with {vars} variables is unsound for degree {degree}"
            ),
            Error::NotHomogeneous { expected } => {
                write!(f, "polynomial is not homogeneous of degree {expected}")
            }
            Error::NotSymmetric(s) => write!(f, "polynomial is not symmetric: {s}"),
            Error::SingularSystem(s) => write!(f, "singular linear system: {s}"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "matrix dimension mismatch: {left} vs {right}")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::UnknownBasis(s) => write!(f, "unknown basis or generator: {s}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
