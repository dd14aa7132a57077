//! Pseudo-product symbols: a negatively graded algebra whose degree -1 layer
//! splits into two abelian subspaces `e ⊕ f`.
//!
//! The degree-zero part attached to a symbol consists of the grading
//! preserving derivations that keep `e` and `f` invariant; the analysis then
//! prolongs `g^- ⊕ g^0` and reports its height.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::exactla::{format_rational, inverse, kernel_basis, Matrix, Rational, Subspace};
use crate::gla::{degree_zero_derivations, is_fundamental, FundamentalReport, GlaError, GradedLieAlgebra};
use crate::prolong::{universal_prolongation, ProlongError, ProlongationResult, ProlongationStatus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PseudoError {
    #[error("symbol algebra must have degrees [-k, -1], found maximum degree {max_degree}")]
    WrongWindow { max_degree: i32 },
    #[error("subspace of dimension {found} does not live in degree -1 (dimension {expected})")]
    WrongAmbient { expected: usize, found: usize },
    #[error("e and f do not split degree -1: dim e = {e_dim}, dim f = {f_dim}, dim (e + f) = {sum_dim}, degree -1 has dimension {total}")]
    NotDirectSum {
        e_dim: usize,
        f_dim: usize,
        sum_dim: usize,
        total: usize,
    },
    #[error("{which} is not abelian: basis vectors {} and {} have nonzero bracket", witness.0, witness.1)]
    NotAbelian { which: String, witness: (usize, usize) },
    #[error(transparent)]
    Gla(#[from] GlaError),
    #[error(transparent)]
    Prolong(#[from] ProlongError),
}

/// A validated pseudo-product symbol.
#[derive(Clone, Debug)]
pub struct PseudoProductSymbol {
    minus: GradedLieAlgebra,
    e: Subspace,
    f: Subspace,
}

/// Bracket of two degree -1 vectors given in the local coordinates of that
/// degree, returned in global coordinates.
fn bracket_minus_one(g: &GradedLieAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let range = g.space().range(-1);
    let embed = |x: &[Rational]| {
        let mut out = vec![Rational::zero(); g.dim()];
        out[range.clone()].clone_from_slice(x);
        out
    };
    g.bracket(&embed(u), &embed(v))
}

fn check_abelian(g: &GradedLieAlgebra, s: &Subspace, which: &str) -> Result<(), PseudoError> {
    let basis = s.basis();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if bracket_minus_one(g, &basis[i], &basis[j]).iter().any(|c| !c.is_zero()) {
                return Err(PseudoError::NotAbelian {
                    which: which.to_string(),
                    witness: (i, j),
                });
            }
        }
    }
    Ok(())
}

/// Validating constructor; `e` and `f` are subspaces of degree -1 in its
/// local coordinates.
pub fn make_pp_symbol(
    minus: GradedLieAlgebra,
    e: Subspace,
    f: Subspace,
) -> Result<PseudoProductSymbol, PseudoError> {
    let max = minus.space().max_degree();
    if max != -1 {
        return Err(PseudoError::WrongWindow { max_degree: max });
    }
    let total = minus.space().dim(-1);
    for s in [&e, &f] {
        if s.ambient_dim() != total {
            return Err(PseudoError::WrongAmbient {
                expected: total,
                found: s.ambient_dim(),
            });
        }
    }
    let sum_dim = e.sum(&f).dim();
    if sum_dim != total || e.dim() + f.dim() != total {
        return Err(PseudoError::NotDirectSum {
            e_dim: e.dim(),
            f_dim: f.dim(),
            sum_dim,
            total,
        });
    }
    check_abelian(&minus, &e, "e")?;
    check_abelian(&minus, &f, "f")?;
    Ok(PseudoProductSymbol { minus, e, f })
}

impl PseudoProductSymbol {
    pub fn minus(&self) -> &GradedLieAlgebra {
        &self.minus
    }

    pub fn e(&self) -> &Subspace {
        &self.e
    }

    pub fn f(&self) -> &Subspace {
        &self.f
    }

    /// The same symbol with the roles of `e` and `f` exchanged.
    pub fn swapped(&self) -> PseudoProductSymbol {
        PseudoProductSymbol {
            minus: self.minus.clone(),
            e: self.f.clone(),
            f: self.e.clone(),
        }
    }

    /// Re-express the symbol in a new basis of degree -1 (columns of `p` in
    /// old coordinates). Other degrees keep their bases.
    pub fn change_basis(&self, p: &Matrix) -> Result<PseudoProductSymbol, PseudoError> {
        let inv = inverse(p).ok_or_else(|| GlaError::InvalidSpace("change of basis is singular".into()))?;
        let mut changes = BTreeMap::new();
        changes.insert(-1, p.clone());
        let minus = self.minus.transform(&changes)?;
        let map = |s: &Subspace| Subspace::span(s.ambient_dim(), s.basis().iter().map(|v| inv.mul_vec(v)));
        make_pp_symbol(minus, map(&self.e), map(&self.f))
    }
}

/// Degree-zero derivations of `g^-` preserving `e` and `f`, as matrices on
/// the coordinates of the negative part.
pub fn compute_g0_pp(s: &PseudoProductSymbol) -> Vec<Matrix> {
    degree_zero_derivations(&s.minus, &[s.e.clone(), s.f.clone()])
}

/// Levi map at symbol level and its kernel, the characteristic space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviReport {
    pub nondegenerate: bool,
    pub ch_dim: usize,
    pub ch: Subspace,
    pub witness: Option<Vec<Rational>>,
}

/// `Ch = {u ∈ g^{-1} : [u, g^{-1}] = 0}` as the kernel of
/// `u ↦ ad(u): g^{-1} → g^{-2}`.
pub fn levi_nondegenerate(minus: &GradedLieAlgebra) -> LeviReport {
    let space = minus.space();
    let d1 = space.dim(-1);
    let d2 = if space.min_degree() <= -2 { space.dim(-2) } else { 0 };
    let r1 = space.range(-1);
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d1]; d1 * d2];
    if d2 > 0 {
        let r2 = space.range(-2);
        for u in 0..d1 {
            for v in 0..d1 {
                for (i, c) in minus.bracket_basis(r1.start + u, r1.start + v) {
                    rows[v * d2 + (i - r2.start)][u] += c;
                }
            }
        }
    }
    let ch = kernel_basis(&Matrix::from_rows(d1, rows));
    LeviReport {
        nondegenerate: ch.is_zero(),
        ch_dim: ch.dim(),
        witness: ch.basis().first().cloned(),
        ch,
    }
}

/// Whether `Ch = (Ch ∩ e) + (Ch ∩ f)`.
pub fn ch_decomposition_check(s: &PseudoProductSymbol) -> bool {
    let ch = levi_nondegenerate(&s.minus).ch;
    let split = ch.intersection(&s.e).sum(&ch.intersection(&s.f));
    split.same_span(&ch)
}

#[derive(Clone, Debug)]
pub struct PPReport {
    pub g0_dim: usize,
    pub fundamental: FundamentalReport,
    pub levi_nondegenerate: bool,
    pub ch_dim: usize,
    pub ch_decomposition: bool,
    pub prolongation: ProlongationResult,
}

/// Height or cap marker, in a form that serializes cleanly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Height {
    Finite(i32),
    CapReached(usize),
}

impl PPReport {
    pub fn height(&self) -> Height {
        match self.prolongation.status {
            ProlongationStatus::Finite { height } => Height::Finite(height),
            ProlongationStatus::CapReached { cap } => Height::CapReached(cap),
        }
    }

    pub fn dims_by_degree(&self) -> &[(i32, usize)] {
        &self.prolongation.dims_by_degree
    }
}

/// `g^- ⊕ g^0` for the symbol, with `g^0` from [`compute_g0_pp`].
pub fn pp_algebra(s: &PseudoProductSymbol) -> Result<GradedLieAlgebra, PseudoError> {
    let g0 = compute_g0_pp(s);
    Ok(GradedLieAlgebra::with_degree_zero(&s.minus, &g0, None)?)
}

pub fn analyze_pp(s: &PseudoProductSymbol, cap: Option<usize>) -> Result<PPReport, PseudoError> {
    let full = pp_algebra(s)?;
    let fundamental = is_fundamental(&full)?;
    let levi = levi_nondegenerate(&s.minus);
    let prolongation = universal_prolongation(&full, cap)?;
    Ok(PPReport {
        g0_dim: full.space().dim(0),
        fundamental,
        levi_nondegenerate: levi.nondegenerate,
        ch_dim: levi.ch_dim,
        ch_decomposition: ch_decomposition_check(s),
        prolongation,
    })
}

/// Coordinates of a degree -1 vector, formatted for reports.
pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}
