//! Exact dense linear algebra over the rationals.
//!
//! Every rank, kernel and subspace decision in this crate goes through this
//! module. Arithmetic is done with arbitrary precision fractions, so there is
//! no tolerance anywhere: a rank is a rank.

mod blocks;
mod echelon;
mod matrix;
mod rational;
mod subspace;

pub use blocks::{BlockSubspace, SubspaceBlock};
pub use echelon::{complement_basis, image_basis, inverse, kernel_basis, rank, rref, Rref};
pub use matrix::Matrix;
pub use rational::{format_rational, parse_rational, q, qr, Rational};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis vectors are linearly dependent")]
    LinearlyDependent,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
}
