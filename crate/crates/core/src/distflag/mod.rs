//! Distributions spanned by polynomial vector fields, analysed at rational
//! points.
//!
//! Every rank decision here is made by evaluating fields at a point and
//! doing exact linear algebra on the values. Properties that should hold on
//! a neighbourhood (regularity, integrability) are probed at a base point and
//! at a few seeded sample points nearby; they are not proved.

mod fibration;
mod flag;
mod model;
mod poly;
mod symbol;
mod vf;

pub use fibration::{pp_from_fibrations, Fibration, FibrationDiagnostics};
pub use flag::{levi_and_cauchy, regularity_probe, weak_derived_flag, FlagReport, LeviCauchy};
pub use model::{gr_tautological_fixture, DistributionModel};
pub use poly::Polynomial;
pub use symbol::{symbol_at_point, PointSymbol};
pub use vf::{lie_bracket_vf, PolyVectorField};

use thiserror::Error;

use crate::gla::GlaError;
use crate::pseudoprod::PseudoError;

/// Seed for sample points unless the caller picks another.
pub const DEFAULT_SEED: u64 = 0x7a_6e_61_6b;

/// Number of sample points unless the caller picks another.
pub const DEFAULT_SAMPLES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generators are linearly dependent at the base point")]
    DependentGenerators,
    #[error("distribution is not bracket-generating: flag ranks {dims:?} in dimension {n_vars}")]
    NotBracketGenerating { dims: Vec<usize>, n_vars: usize },
    #[error("base point could not be confirmed regular: {0}")]
    RegularityUnknown(String),
    #[error("E and F intersect at the base point: rank {combined} < {e_dim} + {f_dim}")]
    NotTransverse {
        e_dim: usize,
        f_dim: usize,
        combined: usize,
    },
    #[error("{family} is not integrable at ({}): bracket of generators {} and {} leaves the span", point.join(", "), witness.0, witness.1)]
    IntegrabilityFailed {
        family: String,
        point: Vec<String>,
        witness: (usize, usize),
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Gla(#[from] GlaError),
    #[error(transparent)]
    Pseudo(#[from] PseudoError),
}

/// Sample-point settings for the neighbourhood probes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probe {
    pub samples: usize,
    pub seed: u64,
}

impl Default for Probe {
    fn default() -> Self {
        Probe {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}
