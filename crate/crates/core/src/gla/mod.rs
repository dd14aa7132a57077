//! Graded Lie algebras by structure constants.

mod algebra;
mod derivations;
mod space;

pub use algebra::{is_fundamental, make_gla, BracketEntry, FundamentalReport, GradedLieAlgebra};
pub use derivations::degree_zero_derivations;
pub use space::{BasisIndex, GradedVectorSpace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlaError {
    #[error("invalid graded space: {0}")]
    InvalidSpace(String),
    #[error("basis index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("grading violation: [{left}, {right}] has a component in degree {found}, expected only degree {expected}")]
    GradingViolation {
        left: String,
        right: String,
        expected: i32,
        found: i32,
    },
    #[error("Jacobi identity fails on ({}, {}, {}) with residual [{}]", triple[0], triple[1], triple[2], residual.join(", "))]
    JacobiViolation { triple: [String; 3], residual: Vec<String> },
    #[error("[{0}, {0}] is declared nonzero")]
    SelfBracket(String),
    #[error("conflicting declarations for [{left}, {right}]")]
    ConflictingEntry { left: String, right: String },
    #[error("expected degrees in [-k, 0], found degree {max_degree}")]
    DegreeWindow { max_degree: i32 },
    #[error("degree-zero part is not a Lie algebra of derivations: {0}")]
    NotClosed(String),
}

#[cfg(test)]
mod tests;
