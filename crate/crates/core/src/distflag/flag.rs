use serde::Serialize;

use super::model::{rank_at, sample_points, values_at};
use super::{lie_bracket_vf, DistributionModel, PolyVectorField, Probe};
use crate::exactla::{complement_basis, kernel_basis, rank, Matrix, Rational, Subspace};

/// Ranks of the weak derived flag `D_{-1} ⊂ D_{-2} ⊂ ...` at the base point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagReport {
    pub dims: Vec<usize>,
    pub depth: usize,
    pub bracket_generating: bool,
    /// False only when `max_depth` cut the computation short.
    pub stabilized: bool,
}

pub(crate) struct FlagLevels {
    /// `levels[i]` holds the fields added at step `i + 1`; level 0 is the
    /// generators.
    pub levels: Vec<Vec<PolyVectorField>>,
    pub dims: Vec<usize>,
    pub stabilized: bool,
}

/// Level `i + 1` consists of the brackets `[g, h]` of generators `g` with
/// fields `h` of level `i`. Levels are kept while the rank at `point` grows.
pub(crate) fn flag_levels(gens: &[PolyVectorField], point: &[Rational], max_depth: usize) -> FlagLevels {
    let n = point.len();
    let mut levels = vec![gens.to_vec()];
    let mut dims = vec![rank_at(gens, point)];
    let mut all: Vec<PolyVectorField> = gens.to_vec();
    loop {
        if *dims.last().unwrap() == n {
            return FlagLevels { levels, dims, stabilized: true };
        }
        if levels.len() >= max_depth {
            return FlagLevels { levels, dims, stabilized: false };
        }
        let mut next: Vec<PolyVectorField> = Vec::new();
        for g in gens {
            for h in levels.last().unwrap() {
                let b = lie_bracket_vf(g, h).expect("fields share one coordinate system");
                if !b.is_zero() && !next.contains(&b) {
                    next.push(b);
                }
            }
        }
        let mut extended = all.clone();
        extended.extend(next.iter().cloned());
        let r = rank_at(&extended, point);
        if r == *dims.last().unwrap() {
            return FlagLevels { levels, dims, stabilized: true };
        }
        all = extended;
        dims.push(r);
        levels.push(next);
    }
}

/// The weak derived flag at the base point. `max_depth` defaults to the
/// number of variables, which never cuts a strictly growing flag short.
pub fn weak_derived_flag(m: &DistributionModel, max_depth: Option<usize>) -> FlagReport {
    let max_depth = max_depth.unwrap_or(m.n_vars()).max(1);
    let fl = flag_levels(m.generators(), m.base_point(), max_depth);
    FlagReport {
        depth: fl.dims.len(),
        bracket_generating: *fl.dims.last().unwrap() == m.n_vars(),
        stabilized: fl.stabilized,
        dims: fl.dims,
    }
}

/// Levi map `u ↦ (v ↦ [u, v] mod D)` at a point, in generator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviCauchy {
    pub levi_rank: usize,
    pub ch_dim: usize,
    /// Kernel of the Levi map, in coordinates relative to the generators.
    pub ch: Subspace,
    pub witness: Option<Vec<Rational>>,
}

pub(crate) fn levi_at(gens: &[PolyVectorField], point: &[Rational]) -> LeviCauchy {
    let n = point.len();
    let r = gens.len();
    let d = values_at(gens, point);
    let d_span = Subspace::span(n, (0..r).map(|c| d.column(c)));
    let quotient = complement_basis(&d_span);
    let q = quotient.dim();
    // Coordinates in the basis [D values | complement units]; the last q
    // entries give the class modulo D.
    let mut frame: Vec<Vec<Rational>> = d_span.basis().to_vec();
    frame.extend(quotient.basis().iter().cloned());
    let frame = Subspace::new(n, frame).expect("complement completes a basis");
    let mut rows = vec![vec![Rational::from_integer(0.into()); r]; r * q];
    for u in 0..r {
        for v in 0..r {
            let value = lie_bracket_vf(&gens[u], &gens[v]).expect("same variables").eval(point);
            let coords = frame.coordinates(&value).expect("frame spans the tangent space");
            for (t, c) in coords[n - q..].iter().enumerate() {
                rows[v * q + t][u] = c.clone();
            }
        }
    }
    let chi = Matrix::from_rows(r, rows);
    let ch = kernel_basis(&chi);
    LeviCauchy {
        levi_rank: rank(&chi),
        ch_dim: ch.dim(),
        witness: ch.basis().first().cloned(),
        ch,
    }
}

/// Levi rank and Cauchy characteristic dimension at the base point.
pub fn levi_and_cauchy(m: &DistributionModel) -> LeviCauchy {
    levi_at(m.generators(), m.base_point())
}

fn signature(m: &DistributionModel, point: &[Rational]) -> Option<(Vec<usize>, usize)> {
    if rank_at(m.generators(), point) < m.rank() {
        return None;
    }
    let fl = flag_levels(m.generators(), point, m.n_vars());
    Some((fl.dims, levi_at(m.generators(), point).levi_rank))
}

/// Compare flag ranks and Levi rank at seeded sample points with those at
/// the base point. Agreement is evidence of regularity, not a proof.
pub fn regularity_probe(m: &DistributionModel, probe: Probe) -> bool {
    let base = signature(m, m.base_point());
    sample_points(m.base_point(), probe)
        .iter()
        .all(|p| signature(m, p) == base)
}
