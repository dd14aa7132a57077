use num_traits::Zero;
use serde::Serialize;

use super::model::{rank_at, sample_points};
use super::{lie_bracket_vf, symbol_at_point, DistError, DistributionModel, PolyVectorField, Probe};
use crate::exactla::{format_rational, Rational, Subspace};
use crate::pseudoprod::{make_pp_symbol, PseudoProductSymbol};

/// Two families of fields: `E` and `F` are meant to be the tangent spaces of
/// the fibres of two fibrations, so each should be integrable and they should
/// meet only in zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fibration {
    pub var_names: Vec<String>,
    pub e_fields: Vec<PolyVectorField>,
    pub f_fields: Vec<PolyVectorField>,
    pub base_point: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationDiagnostics {
    /// Points at which integrability of both families was checked.
    pub points_checked: Vec<Vec<String>>,
    pub limitation: String,
    pub discrepancies: Vec<String>,
}

fn check_integrable(
    family: &str,
    fields: &[PolyVectorField],
    points: &[Vec<Rational>],
) -> Result<(), DistError> {
    for point in points {
        let span = Subspace::span(point.len(), fields.iter().map(|f| f.eval(point)));
        for a in 0..fields.len() {
            for b in a + 1..fields.len() {
                let value = lie_bracket_vf(&fields[a], &fields[b])?.eval(point);
                if value.iter().any(|c| !c.is_zero()) && !span.contains(&value) {
                    return Err(DistError::IntegrabilityFailed {
                        family: family.to_string(),
                        point: point.iter().map(format_rational).collect(),
                        witness: (a, b),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Pseudo-product symbol of `D = E + F` at the base point: `e` is spanned by
/// the `E` generators in degree -1 and `f` by the `F` generators.
pub fn pp_from_fibrations(
    fib: &Fibration,
    probe: Probe,
) -> Result<(PseudoProductSymbol, FibrationDiagnostics), DistError> {
    let point = &fib.base_point;
    let (ne, nf) = (fib.e_fields.len(), fib.f_fields.len());
    for family in [&fib.e_fields, &fib.f_fields] {
        if family.iter().any(|f| f.n_vars() != point.len()) {
            return Err(DistError::DimensionMismatch("field and base point dimensions differ".into()));
        }
        if family.is_empty() || rank_at(family, point) < family.len() {
            return Err(DistError::DependentGenerators);
        }
    }
    let mut all = fib.e_fields.clone();
    all.extend(fib.f_fields.iter().cloned());
    let combined = rank_at(&all, point);
    if combined < ne + nf {
        return Err(DistError::NotTransverse {
            e_dim: ne,
            f_dim: nf,
            combined,
        });
    }

    let mut points = vec![point.clone()];
    points.extend(sample_points(point, probe));
    check_integrable("E", &fib.e_fields, &points)?;
    check_integrable("F", &fib.f_fields, &points)?;

    let model = DistributionModel::new(fib.var_names.clone(), all, point.clone())?;
    let sym = symbol_at_point(&model, probe)?;
    // Degree -1 basis vectors are the generators in order: E first, then F.
    let d1 = ne + nf;
    let unit = |i: usize| -> Vec<Rational> {
        (0..d1)
            .map(|j| Rational::from_integer(((i == j) as i64).into()))
            .collect()
    };
    let e = Subspace::span(d1, (0..ne).map(unit));
    let f = Subspace::span(d1, (ne..d1).map(unit));
    let symbol = make_pp_symbol(sym.algebra, e, f)?;
    let diagnostics = FibrationDiagnostics {
        points_checked: points
            .iter()
            .map(|p| p.iter().map(format_rational).collect())
            .collect(),
        limitation: "integrability is checked only at the listed points".into(),
        discrepancies: sym.discrepancies,
    };
    Ok((symbol, diagnostics))
}
