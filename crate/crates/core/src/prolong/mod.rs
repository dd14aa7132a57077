//! Universal prolongation of a fundamental graded Lie algebra.
//!
//! Elements of degree `m >= 1` are stored as degree-`m` linear maps from the
//! negative part into the truncation below `m`: for each negative degree `j`
//! a block `Hom(g^j, g^{j+m})`, with images written in the basis of the layer
//! they land in. Evaluating such an element on a negative vector is then just
//! a matrix-vector product, and that evaluation is the bracket with the
//! negative part.

mod algebra;
mod partial;

pub use algebra::{
    prolong_step, universal_prolongation, Element, ProlongationResult, ProlongationStatus,
    ProlongedAlgebra, RelationFailure, ShapeBlock, ShapeLayout,
};
pub use partial::{
    partial_operator, tor_complement, verify_partial_kernel, FhLayout, HomBlock, KernelCheck,
    OperatorBlock, PartialOperator, TorBlock, TorLayout,
};

use thiserror::Error;

use crate::gla::{FundamentalReport, GlaError};

/// Degree at which the engine stops when no finite height shows up.
pub const DEFAULT_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProlongError {
    #[error("algebra is not fundamental: {}", .0.violations.join("; "))]
    NotFundamental(FundamentalReport),
    #[error("base algebra must live in degrees [-k, 0], found degree {max_degree}")]
    DegreeWindow { max_degree: i32 },
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("layer of degree {degree} has not been computed")]
    LayerMissing { degree: i32 },
    #[error("a zero layer in degree {degree} was followed by a nonzero layer")]
    GuardFailed { degree: usize },
    #[error("cap must be at least 1")]
    BadCap,
    #[error(transparent)]
    Gla(#[from] GlaError),
}
