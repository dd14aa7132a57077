//! Built-in example algebras, symbols and vector field models.
//!
//! These are the objects behind `tanaka fixtures`; tests and examples build
//! them directly from here.

use crate::distflag::{gr_tautological_fixture, DistributionModel, Fibration, Polynomial, PolyVectorField};
use crate::exactla::{q, qr, Matrix, Rational, Subspace};
use crate::gla::{make_gla, BasisIndex, BracketEntry, GradedLieAlgebra, GradedVectorSpace};
use crate::pseudoprod::{make_pp_symbol, PseudoProductSymbol};

fn entry(left: (i32, usize), right: (i32, usize), result: &[((i32, usize), Rational)]) -> BracketEntry {
    BracketEntry {
        left: BasisIndex::new(left.0, left.1),
        right: BasisIndex::new(right.0, right.1),
        result: result
            .iter()
            .map(|((d, o), c)| (BasisIndex::new(*d, *o), c.clone()))
            .collect(),
    }
}

fn names(list: &[&str]) -> Option<Vec<String>> {
    Some(list.iter().map(|s| s.to_string()).collect())
}

/// Three-dimensional Heisenberg algebra: degree -1 spanned by `x, y`,
/// degree -2 by `z`, and `[x, y] = z`.
pub fn heisenberg() -> GradedLieAlgebra {
    let space = GradedVectorSpace::new(-2, vec![1, 2]).unwrap();
    make_gla(
        space,
        names(&["z", "x", "y"]),
        &[entry((-1, 0), (-1, 1), &[((-2, 0), q(1))])],
    )
    .unwrap()
}

/// `Q^n` concentrated in degree -1.
pub fn abelian(n: usize) -> GradedLieAlgebra {
    let space = GradedVectorSpace::new(-1, vec![n]).unwrap();
    make_gla(space, Some((1..=n).map(|i| format!("e{i}")).collect()), &[]).unwrap()
}

/// Elementary matrix `E_{rc}` of size `n`.
fn unit(n: usize, r: usize, c: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(r, c)] = q(1);
    m
}

fn gl_names(n: usize) -> Vec<String> {
    (1..=n).flat_map(|r| (1..=n).map(move |c| format!("E{r}{c}"))).collect()
}

fn with_zero(minus: &GradedLieAlgebra, mats: &[Matrix], zero_names: Vec<String>) -> GradedLieAlgebra {
    let m = minus.space().minus_dim();
    let all = minus.names()[..m].iter().cloned().chain(zero_names).collect();
    GradedLieAlgebra::with_degree_zero(minus, mats, Some(all)).unwrap()
}

/// `Q^2 ⊕ gl(2)` with the standard action.
pub fn gl_symbol() -> GradedLieAlgebra {
    let mats: Vec<Matrix> = (0..2).flat_map(|r| (0..2).map(move |c| unit(2, r, c))).collect();
    with_zero(&abelian(2), &mats, gl_names(2))
}

fn so3_basis() -> Vec<Matrix> {
    [(1, 2), (0, 2), (0, 1)]
        .iter()
        .map(|&(i, j)| unit(3, i, j).sub(&unit(3, j, i)))
        .collect()
}

/// `Q^3 ⊕ so(3)`.
pub fn so_symbol() -> GradedLieAlgebra {
    with_zero(&abelian(3), &so3_basis(), vec!["L23".into(), "L13".into(), "L12".into()])
}

/// `Q^3 ⊕ co(3)`, that is `so(3)` plus the grading element.
pub fn co_symbol() -> GradedLieAlgebra {
    let mut mats = so3_basis();
    mats.push(Matrix::identity(3));
    with_zero(&abelian(3), &mats, vec!["L23".into(), "L13".into(), "L12".into(), "I".into()])
}

/// Heisenberg algebra with `gl(2)` acting on `⟨x, y⟩` and on `z` by the
/// trace: the conformal symplectic algebra of the contact grading.
pub fn heisenberg_csp() -> GradedLieAlgebra {
    // coordinates (z, x, y)
    let mats: Vec<Matrix> = (0..2)
        .flat_map(|r| (0..2).map(move |c| (r, c)))
        .map(|(r, c)| {
            let mut h = unit(3, r + 1, c + 1);
            if r == c {
                h[(0, 0)] = q(1);
            }
            h
        })
        .collect();
    with_zero(&heisenberg(), &mats, gl_names(2))
}

fn lines(dim: usize, vectors: &[&[i64]]) -> Subspace {
    Subspace::new(dim, vectors.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect()).unwrap()
}

/// Symbol of the point geometry of `y'' = 0`: Heisenberg with `e = ⟨x⟩` and
/// `f = ⟨y⟩`.
pub fn ode2_pp() -> PseudoProductSymbol {
    make_pp_symbol(heisenberg(), lines(2, &[&[1, 0]]), lines(2, &[&[0, 1]])).unwrap()
}

/// `Q^2` split into its two coordinate lines; Levi degenerate.
pub fn split_abelian_pp() -> PseudoProductSymbol {
    make_pp_symbol(abelian(2), lines(2, &[&[1, 0]]), lines(2, &[&[0, 1]])).unwrap()
}

/// Symbol of first-order jet space `J^1(Q^m, Q^c)` with its vertical and
/// horizontal splitting. Degree -1 lists `x_1..x_m` then `p^k_i`; degree -2
/// is `w_1..w_c`; `[p^k_i, x_j] = δ_ij w_k`. `e` is the `p` block, `f` the
/// `x` block.
pub fn jet_pp(m: usize, c: usize) -> PseudoProductSymbol {
    assert!(m >= 1 && c >= 1);
    let d1 = m + m * c;
    let space = GradedVectorSpace::new(-2, vec![c, d1]).unwrap();
    let mut entries = Vec::new();
    for k in 0..c {
        for i in 0..m {
            let p = m + k * m + i;
            entries.push(entry((-1, i), (-1, p), &[((-2, k), q(-1))]));
        }
    }
    let mut all_names: Vec<String> = (1..=c).map(|k| format!("w{k}")).collect();
    all_names.extend((1..=m).map(|i| format!("x{i}")));
    all_names.extend((1..=c).flat_map(|k| (1..=m).map(move |i| format!("p{k}_{i}"))));
    let minus = make_gla(space, Some(all_names), &entries).unwrap();
    let unit_vec = |i: usize| -> Vec<Rational> { (0..d1).map(|j| if i == j { q(1) } else { q(0) }).collect() };
    let e = Subspace::new(d1, (m..d1).map(unit_vec).collect()).unwrap();
    let f = Subspace::new(d1, (0..m).map(unit_vec).collect()).unwrap();
    make_pp_symbol(minus, e, f).unwrap()
}

fn var(n: usize, i: usize) -> Polynomial {
    Polynomial::variable(n, i)
}

fn constant(n: usize, c: Rational) -> Polynomial {
    Polynomial::constant(n, c)
}

fn field(components: Vec<Polynomial>) -> PolyVectorField {
    PolyVectorField::new(components)
}

fn model(names: &[&str], fields: Vec<PolyVectorField>) -> DistributionModel {
    let n = names.len();
    DistributionModel::new(
        names.iter().map(|s| s.to_string()).collect(),
        fields,
        vec![q(0); n],
    )
    .unwrap()
}

/// Contact distribution `⟨∂x, ∂y + x ∂z⟩` on `Q^3`.
pub fn contact_vf() -> DistributionModel {
    let n = 3;
    let one = constant(n, q(1));
    let zero = Polynomial::zero(n);
    model(
        &["x", "y", "z"],
        vec![
            field(vec![one.clone(), zero.clone(), zero.clone()]),
            field(vec![zero.clone(), one, var(n, 0)]),
        ],
    )
}

/// Engel distribution `⟨∂x, ∂y + x ∂z + x²/2 ∂w⟩` on `Q^4`.
pub fn engel_vf() -> DistributionModel {
    let n = 4;
    let one = constant(n, q(1));
    let zero = Polynomial::zero(n);
    let half_x2 = var(n, 0).mul(&var(n, 0)).scale(&qr(1, 2));
    model(
        &["x", "y", "z", "w"],
        vec![
            field(vec![one.clone(), zero.clone(), zero.clone(), zero.clone()]),
            field(vec![zero.clone(), one, var(n, 0), half_x2]),
        ],
    )
}

/// The tautological distribution on the Grassmannian bundle in jet
/// coordinates, split into its vertical (`∂p`) and horizontal parts.
pub fn jet_fibration(m: usize, c: usize) -> Fibration {
    let taut = gr_tautological_fixture(m, c);
    let (horizontal, vertical) = taut.generators().split_at(m);
    Fibration {
        var_names: taut.var_names().to_vec(),
        e_fields: vertical.to_vec(),
        f_fields: horizontal.to_vec(),
        base_point: taut.base_point().to_vec(),
    }
}

/// `E = ⟨∂x⟩`, `F = ⟨∂y⟩` on `Q^2`.
pub fn plane_fibration() -> Fibration {
    let n = 2;
    let one = constant(n, q(1));
    let zero = Polynomial::zero(n);
    Fibration {
        var_names: vec!["x".into(), "y".into()],
        e_fields: vec![field(vec![one.clone(), zero.clone()])],
        f_fields: vec![field(vec![zero, one])],
        base_point: vec![q(0), q(0)],
    }
}

/// `E = ⟨∂x⟩`, `F = ⟨∂y, ∂z + x y ∂w⟩` on `Q^4`. `F` is involutive along
/// `x = 0`, so the base point passes and sampled points expose the failure.
pub fn twisted_fibration() -> Fibration {
    let n = 4;
    let one = constant(n, q(1));
    let zero = Polynomial::zero(n);
    Fibration {
        var_names: vec!["x".into(), "y".into(), "z".into(), "w".into()],
        e_fields: vec![field(vec![one.clone(), zero.clone(), zero.clone(), zero.clone()])],
        f_fields: vec![
            field(vec![zero.clone(), one.clone(), zero.clone(), zero.clone()]),
            field(vec![zero.clone(), zero, one, var(n, 0).mul(&var(n, 1))]),
        ],
        base_point: vec![q(0); 4],
    }
}
