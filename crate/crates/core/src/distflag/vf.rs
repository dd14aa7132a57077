use super::{DistError, Polynomial};
use crate::exactla::Rational;

/// A vector field `Σ_a X^a ∂_a` with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVectorField {
    components: Vec<Polynomial>,
}

impl PolyVectorField {
    /// All components must have the same number of variables, equal to their
    /// count.
    pub fn new(components: Vec<Polynomial>) -> Self {
        let n = components.len();
        assert!(
            components.iter().all(|c| c.n_vars() == n),
            "vector field components must be polynomials in {n} variables"
        );
        PolyVectorField { components }
    }

    pub fn try_new(components: Vec<Polynomial>) -> Result<Self, DistError> {
        let n = components.len();
        if let Some(c) = components.iter().find(|c| c.n_vars() != n) {
            return Err(DistError::DimensionMismatch(format!(
                "component in {} variables for a field with {n} components",
                c.n_vars()
            )));
        }
        Ok(PolyVectorField { components })
    }

    pub fn zero(n_vars: usize) -> Self {
        PolyVectorField::new(vec![Polynomial::zero(n_vars); n_vars])
    }

    /// The coordinate field `∂_i`.
    pub fn partial(n_vars: usize, i: usize) -> Self {
        let mut c = vec![Polynomial::zero(n_vars); n_vars];
        c[i] = Polynomial::constant(n_vars, Rational::from_integer(1.into()));
        PolyVectorField::new(c)
    }

    pub fn n_vars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }

    pub fn add(&self, other: &PolyVectorField) -> PolyVectorField {
        PolyVectorField::new(self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect())
    }

    pub fn scale(&self, factor: &Rational) -> PolyVectorField {
        PolyVectorField::new(self.components.iter().map(|a| a.scale(factor)).collect())
    }

    /// `X(f) = Σ_b X^b ∂_b f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let n = self.n_vars();
        let mut out = Polynomial::zero(n);
        for (b, xb) in self.components.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            out = out.add(&xb.mul(&f.derivative(b)));
        }
        out
    }
}

/// `[X, Y]^a = Σ_b (X^b ∂_b Y^a - Y^b ∂_b X^a)`.
pub fn lie_bracket_vf(x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField, DistError> {
    if x.n_vars() != y.n_vars() {
        return Err(DistError::DimensionMismatch(format!(
            "bracket of fields on {} and {} variables",
            x.n_vars(),
            y.n_vars()
        )));
    }
    let components = x
        .components
        .iter()
        .zip(&y.components)
        .map(|(xa, ya)| x.apply(ya).sub(&y.apply(xa)))
        .collect();
    Ok(PolyVectorField::new(components))
}
