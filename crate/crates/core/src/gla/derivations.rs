use num_traits::Zero;

use super::GradedLieAlgebra;
use crate::exactla::{kernel_basis, Matrix, Rational, Subspace};

/// All grading-preserving derivations `h` of the negative part of `g`, as
/// matrices on the negative part's coordinates, that in addition satisfy
/// `h(P) ⊂ P` for every listed subspace `P` of degree `-1` (given in the
/// local coordinates of that degree).
pub fn degree_zero_derivations(g: &GradedLieAlgebra, preserved: &[Subspace]) -> Vec<Matrix> {
    let space = g.space();
    let m = space.minus_dim();
    let minus_one = space.range(-1);

    // Unknowns: entries h[r][c] with r and c in the same degree.
    let unknowns: Vec<(usize, usize)> = (space.min_degree()..=-1)
        .flat_map(|d| {
            let r = space.range(d);
            r.clone().flat_map(move |row| r.clone().map(move |col| (row, col)))
        })
        .collect();

    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
    let annihilators: Vec<(Vec<Vec<Rational>>, Vec<Vec<Rational>>)> = preserved
        .iter()
        .map(|p| {
            assert_eq!(p.ambient_dim(), minus_one.len(), "preserved subspace must live in degree -1");
            (p.basis().to_vec(), kernel_basis(&p.basis_matrix()).into_basis())
        })
        .collect();
    let preserve_rows: usize = annihilators.iter().map(|(b, a)| b.len() * a.len()).sum();

    let n_rows = pairs.len() * m + preserve_rows;
    let mut columns = Vec::with_capacity(unknowns.len());
    for &(r, c) in &unknowns {
        let mut col = vec![Rational::zero(); n_rows];
        // h([a,b]) - [h a, b] - [a, h b] with h = E_{rc}
        for (p, &(a, b)) in pairs.iter().enumerate() {
            let block = &mut col[p * m..(p + 1) * m];
            for (s, coeff) in g.bracket_basis(a, b) {
                if *s == c {
                    block[r] += coeff;
                }
            }
            if a == c {
                for (s, coeff) in g.bracket_basis(r, b) {
                    block[*s] -= coeff;
                }
            }
            if b == c {
                for (s, coeff) in g.bracket_basis(a, r) {
                    block[*s] -= coeff;
                }
            }
        }
        // alpha . h(p) for p in P, alpha in ann(P)
        let mut row = pairs.len() * m;
        for (basis, ann) in &annihilators {
            for p in basis {
                for alpha in ann {
                    if minus_one.contains(&r) && minus_one.contains(&c) {
                        let pc = &p[c - minus_one.start];
                        let ar = &alpha[r - minus_one.start];
                        if !pc.is_zero() && !ar.is_zero() {
                            col[row] += ar * pc;
                        }
                    }
                    row += 1;
                }
            }
        }
        columns.push(col);
    }

    let kernel = kernel_basis(&Matrix::from_columns(n_rows, &columns));
    kernel
        .basis()
        .iter()
        .map(|v| {
            let mut h = Matrix::zeros(m, m);
            for (x, &(r, c)) in v.iter().zip(&unknowns) {
                if !x.is_zero() {
                    h[(r, c)] = x.clone();
                }
            }
            h
        })
        .collect()
}
