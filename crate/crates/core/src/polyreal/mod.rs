//! Truncated polynomial realizations in finitely many noncommuting or
//! commuting variables.
//!
//! This layer is the crate's ground truth. Abstract identities elsewhere
//! are verified by realizing both sides as honest polynomials, truncated
//! to `m` variables and a configurable total-degree cap, and comparing
//! coefficients exactly. For degree-`n` questions the truncation is
//! faithful as soon as `m >= n`, because every descent pattern of a
//! length-`n` word is realizable with `n` distinct variable indices.

mod c;
mod lambda;
mod nc;

pub use c::{CAlgebra, CGenerator, CPoly, Exponents};
pub use lambda::{ExpansionSolver, SymExpansion, SymFamily};
pub use nc::{Membership, NcAlgebra, NcGenerator, NcPoly, Word};

/// Default variable count and degree cap for freshly constructed
/// algebras.
pub const DEFAULT_VARS: usize = 8;
pub const DEFAULT_CAP: usize = 8;
