use num_traits::{One, Zero};

use super::echelon::reduce_rows;
use super::matrix::Matrix;
use super::rational::Rational;
use super::LinAlgError;

/// A linear subspace of `Q^n` given by an explicit basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    /// Checked constructor: vectors must have the ambient length and be
    /// linearly independent.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        for v in &basis {
            if v.len() != ambient_dim {
                return Err(LinAlgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        let (_, pivots) = reduce_rows(basis.clone(), ambient_dim);
        if pivots.len() != basis.len() {
            return Err(LinAlgError::LinearlyDependent);
        }
        Ok(Subspace { ambient_dim, basis })
    }

    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<Vec<Rational>>) -> Self {
        debug_assert!(basis.iter().all(|v| v.len() == ambient_dim));
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut e = vec![Rational::zero(); ambient_dim];
                e[i] = Rational::one();
                e
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    /// Span of arbitrary (possibly dependent) vectors. The basis returned is
    /// the nonzero part of the reduced row echelon form, so equal spans give
    /// equal bases.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient_dim, "vector length does not match ambient dimension");
        }
        let (mut reduced, pivots) = reduce_rows(rows, ambient_dim);
        reduced.truncate(pivots.len());
        Subspace {
            ambient_dim,
            basis: reduced,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Rational>> {
        self.basis
    }

    /// Basis vectors as the rows of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, self.basis.clone())
    }

    /// Same span with the canonical (reduced echelon) basis.
    pub fn canonical(&self) -> Subspace {
        Subspace::span(self.ambient_dim, self.basis.clone())
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length does not match ambient dimension");
        let k = self.dim();
        // Augmented system [B^T | v].
        let rows: Vec<Vec<Rational>> = (0..self.ambient_dim)
            .map(|r| {
                let mut row: Vec<Rational> = self.basis.iter().map(|b| b[r].clone()).collect();
                row.push(v[r].clone());
                row
            })
            .collect();
        let (reduced, pivots) = reduce_rows(rows, k + 1);
        if pivots.last() == Some(&k) {
            return None;
        }
        let mut coords = vec![Rational::zero(); k];
        for (row, &p) in pivots.iter().enumerate() {
            coords[p] = reduced[row][k].clone();
        }
        Some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let (p, r) = (self.dim(), other.dim());
        if p == 0 || r == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // Solve Σ a_i u_i - Σ b_j w_j = 0.
        let columns: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()))
            .collect();
        let relations = super::kernel_basis(&Matrix::from_columns(self.ambient_dim, &columns));
        let vectors = relations.basis().iter().map(|coeffs| {
            let mut x = vec![Rational::zero(); self.ambient_dim];
            for (a, u) in coeffs[..p].iter().zip(&self.basis) {
                if a.is_zero() {
                    continue;
                }
                for (xi, ui) in x.iter_mut().zip(u) {
                    *xi += a * ui;
                }
            }
            x
        });
        Subspace::span(self.ambient_dim, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.sum(other).dim() == other.dim()
    }

    /// Equality of spans by double inclusion.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rejects_dependent_basis() {
        assert_eq!(
            Subspace::new(2, vec![v(&[1, 2]), v(&[2, 4])]),
            Err(LinAlgError::LinearlyDependent)
        );
        assert!(matches!(
            Subspace::new(2, vec![v(&[1, 2, 3])]),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::new(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::new(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[0, 5, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = Subspace::new(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let c = a.coordinates(&v(&[2, 5, 3])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(a.coordinates(&v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(2, vec![v(&[2, 2]), v(&[1, 1])]);
        let b = Subspace::span(2, vec![v(&[-3, -3])]);
        assert_eq!(a, b);
        assert!(a.same_span(&b));
    }
}
