use num_traits::Zero;

use super::flag::{flag_levels, regularity_probe, FlagReport};
use super::{lie_bracket_vf, DistError, DistributionModel, PolyVectorField, Probe};
use crate::exactla::{rank, Matrix, Rational, Subspace};
use crate::gla::{make_gla, BasisIndex, BracketEntry, GradedLieAlgebra, GradedVectorSpace};

/// The symbol algebra at the base point together with the fields chosen to
/// represent its basis.
#[derive(Clone, Debug)]
pub struct PointSymbol {
    pub algebra: GradedLieAlgebra,
    pub flag: FlagReport,
    /// Representative field for each basis vector, in the algebra's global
    /// order (most negative degree first).
    pub basis_fields: Vec<PolyVectorField>,
    /// Brackets `[L_i, L_j]` whose value at the base point leaves
    /// `D_{-(i+j)}`. The weak derived flag is used regardless; these record
    /// where it fails to be a Tanaka filtration at the point.
    pub discrepancies: Vec<String>,
}

/// Structure constants of `⊕ D_{-i} / D_{-i+1}` at the base point. The
/// adapted basis takes the generators for degree -1 and then, level by level,
/// the first bracket fields (in generation order) whose values are new.
pub fn symbol_at_point(m: &DistributionModel, probe: Probe) -> Result<PointSymbol, DistError> {
    let n = m.n_vars();
    let point = m.base_point();
    let fl = flag_levels(m.generators(), point, n);
    if *fl.dims.last().unwrap() != n {
        return Err(DistError::NotBracketGenerating {
            dims: fl.dims,
            n_vars: n,
        });
    }
    if !regularity_probe(m, probe) {
        return Err(DistError::RegularityUnknown(format!(
            "flag or Levi ranks at one of {} sample points differ from the base point",
            probe.samples
        )));
    }
    let depth = fl.levels.len();

    // Adapted basis, in level order.
    let mut chosen: Vec<(usize, PolyVectorField)> = Vec::new();
    let mut values: Vec<Vec<Rational>> = Vec::new();
    for (level, fields) in fl.levels.iter().enumerate() {
        for f in fields {
            let v = f.eval(point);
            let mut trial = values.clone();
            trial.push(v.clone());
            if rank(&Matrix::from_columns(n, &trial)) == trial.len() {
                values = trial;
                chosen.push((level + 1, f.clone()));
            }
        }
    }
    let frame = Subspace::new(n, values).expect("chosen values are independent");
    let level_dims: Vec<usize> = (1..=depth)
        .map(|l| chosen.iter().filter(|(lv, _)| *lv == l).count())
        .collect();

    let space = GradedVectorSpace::new(-(depth as i32), level_dims.iter().rev().cloned().collect())?;
    // Chosen fields are in level order; index within the level gives the offset.
    let mut index: Vec<BasisIndex> = Vec::with_capacity(n);
    let mut seen = vec![0usize; depth + 1];
    for (level, _) in &chosen {
        index.push(BasisIndex::new(-(*level as i32), seen[*level]));
        seen[*level] += 1;
    }

    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let (la, fa) = &chosen[a];
            let (lb, fb) = &chosen[b];
            let target = la + lb;
            let value = lie_bracket_vf(fa, fb)?.eval(point);
            let coords = frame.coordinates(&value).expect("frame spans the tangent space");
            let result: Vec<(BasisIndex, Rational)> = coords
                .into_iter()
                .enumerate()
                .filter(|(s, c)| !c.is_zero() && chosen[*s].0 == target)
                .map(|(s, c)| (index[s], c))
                .collect();
            if !result.is_empty() {
                entries.push(BracketEntry {
                    left: index[a],
                    right: index[b],
                    result,
                });
            }
        }
    }

    let mut discrepancies = Vec::new();
    let tagged: Vec<(usize, usize, &PolyVectorField)> = fl
        .levels
        .iter()
        .enumerate()
        .flat_map(|(l, fs)| fs.iter().enumerate().map(move |(i, f)| (l + 1, i, f)))
        .collect();
    for (x, &(li, i, fi)) in tagged.iter().enumerate() {
        for &(lj, j, fj) in &tagged[x + 1..] {
            let value = lie_bracket_vf(fi, fj)?.eval(point);
            let coords = frame.coordinates(&value).expect("frame spans the tangent space");
            let worst = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(s, _)| chosen[s].0)
                .max();
            if let Some(level) = worst {
                if level > li + lj {
                    discrepancies.push(format!(
                        "bracket of field {i} of level {li} with field {j} of level {lj} reaches level {level}"
                    ));
                }
            }
        }
    }

    let mut names = vec![String::new(); n];
    let mut basis_fields = vec![PolyVectorField::zero(n); n];
    for (s, (level, f)) in chosen.iter().enumerate() {
        let g = space.index(index[s])?;
        names[g] = format!("v{}_{}", level, index[s].offset + 1);
        basis_fields[g] = f.clone();
    }
    let algebra = make_gla(space, Some(names), &entries)?;
    let flag = FlagReport {
        depth,
        bracket_generating: true,
        stabilized: fl.stabilized,
        dims: fl.dims,
    };
    Ok(PointSymbol {
        algebra,
        flag,
        basis_fields,
        discrepancies,
    })
}
