use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{DistError, Polynomial, PolyVectorField, Probe};
use crate::exactla::{rank, Matrix, Rational};

/// A distribution given by generating fields that are independent at a base
/// point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionModel {
    var_names: Vec<String>,
    generators: Vec<PolyVectorField>,
    base_point: Vec<Rational>,
}

impl DistributionModel {
    pub fn new(
        var_names: Vec<String>,
        generators: Vec<PolyVectorField>,
        base_point: Vec<Rational>,
    ) -> Result<Self, DistError> {
        let n = var_names.len();
        if base_point.len() != n {
            return Err(DistError::DimensionMismatch(format!(
                "base point has {} coordinates for {n} variables",
                base_point.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.n_vars() != n) {
            return Err(DistError::DimensionMismatch(format!(
                "generator on {} variables in a model with {n} variables",
                g.n_vars()
            )));
        }
        if generators.is_empty() || rank_at(&generators, &base_point) < generators.len() {
            return Err(DistError::DependentGenerators);
        }
        Ok(DistributionModel {
            var_names,
            generators,
            base_point,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn generators(&self) -> &[PolyVectorField] {
        &self.generators
    }

    pub fn base_point(&self) -> &[Rational] {
        &self.base_point
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

/// Values of the fields at `point`, as matrix columns.
pub(crate) fn values_at(fields: &[PolyVectorField], point: &[Rational]) -> Matrix {
    let columns: Vec<Vec<Rational>> = fields.iter().map(|f| f.eval(point)).collect();
    Matrix::from_columns(point.len(), &columns)
}

pub(crate) fn rank_at(fields: &[PolyVectorField], point: &[Rational]) -> usize {
    rank(&values_at(fields, point))
}

/// Seeded points `base + δ` with every offset a nonzero rational `a / b`,
/// `|a| <= b <= 100`.
pub(crate) fn sample_points(base: &[Rational], probe: Probe) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(probe.seed);
    (0..probe.samples)
        .map(|_| {
            base.iter()
                .map(|x| {
                    let den: i64 = rng.gen_range(1..=100);
                    let mut num: i64 = rng.gen_range(1..=den);
                    if rng.gen_bool(0.5) {
                        num = -num;
                    }
                    x + Rational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect()
        })
        .collect()
}

/// The contact system of first-order jets of maps `Q^m → Q^c`: variables
/// `z^i`, `w^k`, `p^k_i` (in that order, `p` with `k` major), generators
/// `∂/∂z^i + Σ_k p^k_i ∂/∂w^k` followed by all `∂/∂p^k_i`, base point the
/// origin.
pub fn gr_tautological_fixture(m: usize, c: usize) -> DistributionModel {
    assert!(m >= 1 && c >= 1, "need m, c >= 1");
    let n = m + c + m * c;
    let mut names: Vec<String> = (1..=m).map(|i| format!("z{i}")).collect();
    names.extend((1..=c).map(|k| format!("w{k}")));
    names.extend((1..=c).flat_map(|k| (1..=m).map(move |i| format!("p{k}_{i}"))));
    let p_index = |k: usize, i: usize| m + c + k * m + i;
    let mut gens = Vec::new();
    for i in 0..m {
        let mut comps = vec![Polynomial::zero(n); n];
        comps[i] = Polynomial::constant(n, Rational::from_integer(1.into()));
        for k in 0..c {
            comps[m + k] = Polynomial::variable(n, p_index(k, i));
        }
        gens.push(PolyVectorField::new(comps));
    }
    for k in 0..c {
        for i in 0..m {
            gens.push(PolyVectorField::partial(n, p_index(k, i)));
        }
    }
    let origin = vec![Rational::from_integer(0.into()); n];
    DistributionModel::new(names, gens, origin).expect("fixture generators are independent")
}
