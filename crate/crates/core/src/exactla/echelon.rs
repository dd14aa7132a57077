use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::{bit_size, Rational};
use super::subspace::Subspace;

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Gauss-Jordan elimination. Among the candidate pivots of a column the one
/// with the fewest bits is chosen; the reduced form itself is unique, so the
/// choice only affects intermediate growth.
pub fn rref(m: &Matrix) -> Rref {
    let (rows, pivot_cols) = reduce_rows(m.to_rows(), m.cols());
    let rank = pivot_cols.len();
    Rref {
        reduced: Matrix::from_rows(m.cols(), rows),
        pivot_cols,
        rank,
    }
}

pub(crate) fn reduce_rows(mut a: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let n_rows = a.len();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == n_rows {
            break;
        }
        let best = (pivot_row..n_rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| bit_size(&a[r][col]));
        let Some(best) = best else { continue };
        a.swap(best, pivot_row);

        let inv = Rational::one() / &a[pivot_row][col];
        if !inv.is_one() {
            for x in a[pivot_row][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let support: Vec<usize> = (col..cols).filter(|&j| !a[pivot_row][j].is_zero()).collect();
        let pivot = std::mem::take(&mut a[pivot_row]);
        for (r, row) in a.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                row[j] -= &factor * &pivot[j];
            }
        }
        a[pivot_row] = pivot;
        pivot_cols.push(col);
        pivot_row += 1;
    }
    (a, pivot_cols)
}

pub fn rank(m: &Matrix) -> usize {
    reduce_rows(m.to_rows(), m.cols()).1.len()
}

/// Basis of `{x : Mx = 0}` made of the free-variable vectors read off the
/// reduced form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let (rows, pivots) = reduce_rows(m.to_rows(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                let x = &rows[row][free];
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            v
        })
        .collect();
    Subspace::from_independent(cols, basis)
}

/// Column space of `m`, as the nonzero rows of the reduced form of `mᵀ`.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::span(m.rows(), (0..m.cols()).map(|c| m.column(c)))
}

/// The coordinate complement: `e_j` for every column `j` that is not a pivot
/// of the echelon form of `s`'s basis.
pub fn complement_basis(s: &Subspace) -> Subspace {
    let n = s.ambient_dim();
    let (_, pivots) = reduce_rows(s.basis().to_vec(), n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            e
        })
        .collect();
    Subspace::from_independent(n, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, qr};

    #[test]
    fn identity_has_full_rank() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.reduced, Matrix::identity(2));
    }

    #[test]
    fn proportional_rows() {
        let r = rref(&Matrix::from_int_rows(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.reduced, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn hand_elimination_example() {
        let r = rref(&Matrix::from_int_rows(&[&[0, 1, 1], &[1, 0, 1]]));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.reduced, Matrix::from_int_rows(&[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn empty_matrix_is_rank_zero() {
        assert_eq!(rref(&Matrix::zeros(0, 0)).rank, 0);
        assert_eq!(rref(&Matrix::zeros(0, 3)).rank, 0);
        assert_eq!(kernel_basis(&Matrix::zeros(0, 3)).dim(), 3);
        assert_eq!(kernel_basis(&Matrix::zeros(2, 0)).dim(), 0);
    }

    #[test]
    fn fractional_pivots() {
        let m = Matrix::from_rows(2, vec![vec![qr(1, 3), q(1)], vec![q(2), qr(-1, 2)]]);
        assert_eq!(rref(&m).reduced, Matrix::identity(2));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
        let k = kernel_basis(&Matrix::from_int_rows(&[&[1, 1]]));
        assert_eq!(k.basis(), &[vec![q(-1), q(1)]]);
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn complement_examples() {
        let e0 = Subspace::new(2, vec![vec![q(1), q(0)]]).unwrap();
        assert_eq!(complement_basis(&e0).basis(), &[vec![q(0), q(1)]]);
        let diag = Subspace::new(2, vec![vec![q(1), q(1)]]).unwrap();
        let c = complement_basis(&diag);
        assert_eq!(c.basis(), &[vec![q(0), q(1)]]);
        assert_eq!(diag.sum(&c).dim(), 2);
        assert_eq!(complement_basis(&Subspace::full(3)).dim(), 0);
    }

    #[test]
    fn image_of_rank_one_map() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4], &[0, 0]]);
        let im = image_basis(&m);
        assert_eq!(im.ambient_dim(), 3);
        assert_eq!(im.dim(), 1);
        assert!(im.contains(&[q(1), q(2), q(0)]));
    }
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.rows();
    assert_eq!(n, m.cols(), "inverse of a non-square matrix");
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let (reduced, pivots) = reduce_rows(rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_rows(
        n,
        reduced.into_iter().map(|row| row[n..].to_vec()).collect(),
    ))
}

#[cfg(test)]
mod inverse_tests {
    use super::*;

    #[test]
    fn inverts_and_detects_singular() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(inverse(&Matrix::from_int_rows(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(inverse(&Matrix::zeros(0, 0)), Some(Matrix::zeros(0, 0)));
    }
}
