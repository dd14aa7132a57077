use super::*;
use crate::exactla::{q, Matrix, Rational};
use crate::fixtures;
use num_traits::Zero;

fn heisenberg_space() -> GradedVectorSpace {
    GradedVectorSpace::new(-2, vec![1, 2]).unwrap()
}

fn e(degree: i32, offset: usize) -> BasisIndex {
    BasisIndex::new(degree, offset)
}

#[test]
fn heisenberg_is_valid() {
    let g = make_gla(
        heisenberg_space(),
        None,
        &[BracketEntry {
            left: e(-1, 0),
            right: e(-1, 1),
            result: vec![(e(-2, 0), q(1))],
        }],
    )
    .unwrap();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                assert!(g.jacobi_residual(a, b, c).iter().all(Zero::is_zero));
            }
        }
    }
    // global order is (z, x, y)
    assert_eq!(g.bracket_basis(1, 2), &[(0, q(1))]);
    assert_eq!(g.bracket_basis(2, 1), &[(0, q(-1))]);
}

#[test]
fn abelian_with_empty_table() {
    let g = make_gla(GradedVectorSpace::new(-1, vec![4]).unwrap(), None, &[]).unwrap();
    assert!(g.is_abelian());
}

#[test]
fn bracket_outside_window_is_grading_violation() {
    let err = make_gla(
        heisenberg_space(),
        None,
        &[
            BracketEntry {
                left: e(-1, 0),
                right: e(-1, 1),
                result: vec![(e(-2, 0), q(1))],
            },
            BracketEntry {
                left: e(-1, 0),
                right: e(-2, 0),
                result: vec![(e(-1, 0), q(1))],
            },
        ],
    )
    .unwrap_err();
    assert!(matches!(err, GlaError::GradingViolation { expected: -3, found: -1, .. }), "{err}");
}

#[test]
fn broken_jacobi_is_reported() {
    // [a, b] = a, [a, v] = v, [b, v] = 0: the triple (a, b, v) leaves v.
    let space = GradedVectorSpace::new(-1, vec![1, 2]).unwrap();
    let err = make_gla(
        space,
        Some(vec!["v".into(), "a".into(), "b".into()]),
        &[
            BracketEntry { left: e(0, 0), right: e(0, 1), result: vec![(e(0, 0), q(1))] },
            BracketEntry { left: e(0, 0), right: e(-1, 0), result: vec![(e(-1, 0), q(1))] },
        ],
    )
    .unwrap_err();
    match err {
        GlaError::JacobiViolation { triple, residual } => {
            assert_eq!(triple, ["v".to_string(), "a".to_string(), "b".to_string()]);
            assert_eq!(residual, vec!["1", "0", "0"]);
        }
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn self_bracket_and_conflicts_rejected() {
    let space = heisenberg_space();
    let err = make_gla(
        space.clone(),
        None,
        &[BracketEntry { left: e(-1, 0), right: e(-1, 0), result: vec![(e(-2, 0), q(1))] }],
    )
    .unwrap_err();
    assert!(matches!(err, GlaError::SelfBracket(_)));
    let err = make_gla(
        space,
        None,
        &[
            BracketEntry { left: e(-1, 0), right: e(-1, 1), result: vec![(e(-2, 0), q(1))] },
            BracketEntry { left: e(-1, 1), right: e(-1, 0), result: vec![(e(-2, 0), q(1))] },
        ],
    )
    .unwrap_err();
    assert!(matches!(err, GlaError::ConflictingEntry { .. }));
}

#[test]
fn bracket_is_bilinear_and_antisymmetric() {
    let g = fixtures::heisenberg();
    let x = vec![q(0), q(1), q(0)];
    let y = vec![q(0), q(0), q(1)];
    assert_eq!(g.bracket(&x, &y), vec![q(1), q(0), q(0)]);
    let u = vec![q(3), q(-2), q(5)];
    assert!(g.bracket(&u, &u).iter().all(Zero::is_zero));
    let ab = fixtures::abelian(3);
    assert!(ab.bracket(&[q(1), q(2), q(3)], &[q(4), q(5), q(6)]).iter().all(Zero::is_zero));
}

#[test]
fn heisenberg_with_gl2_is_fundamental() {
    let report = is_fundamental(&fixtures::heisenberg_csp()).unwrap();
    assert!(report.is_fundamental(), "{:?}", report.violations);
}

#[test]
fn degenerate_bracket_not_generated() {
    let g = make_gla(heisenberg_space(), None, &[]).unwrap();
    let report = is_fundamental(&g).unwrap();
    assert!(!report.generated_by_minus_one);
    assert!(report.adjoint_injective_on_g0);
}

#[test]
fn central_degree_zero_element_not_injective() {
    let mats = vec![Matrix::identity(2), Matrix::zeros(2, 2)];
    // The zero matrix makes the family dependent, so build the algebra by hand.
    assert!(GradedLieAlgebra::with_degree_zero(&fixtures::abelian(2), &mats, None).is_err());
    let space = GradedVectorSpace::new(-1, vec![2, 2]).unwrap();
    let g = make_gla(
        space,
        None,
        &[
            BracketEntry { left: e(0, 0), right: e(-1, 0), result: vec![(e(-1, 0), q(1))] },
            BracketEntry { left: e(0, 0), right: e(-1, 1), result: vec![(e(-1, 1), q(1))] },
        ],
    )
    .unwrap();
    let report = is_fundamental(&g).unwrap();
    assert!(!report.adjoint_injective_on_g0);
    assert!(report.generated_by_minus_one);
    assert_eq!(report.violations.len(), 1);
}

#[test]
fn positive_degrees_rejected_by_fundamental_check() {
    let space = GradedVectorSpace::new(-1, vec![1, 0, 1]).unwrap();
    let g = make_gla(space, None, &[]).unwrap();
    assert!(matches!(is_fundamental(&g), Err(GlaError::DegreeWindow { max_degree: 1 })));
}

#[test]
fn derivations_of_free_two_step() {
    // free 2-step nilpotent on 2 generators is Heisenberg; its degree-zero
    // derivations are gl(2) and the result is fundamental.
    let ders = degree_zero_derivations(&fixtures::heisenberg(), &[]);
    assert_eq!(ders.len(), 4);
    let g = GradedLieAlgebra::with_degree_zero(&fixtures::heisenberg(), &ders, None).unwrap();
    assert!(is_fundamental(&g).unwrap().is_fundamental());
    // abelian: all of gl(n)
    assert_eq!(degree_zero_derivations(&fixtures::abelian(3), &[]).len(), 9);
}

#[test]
fn grading_holds_for_fixture_algebras() {
    for g in [
        fixtures::heisenberg(),
        fixtures::heisenberg_csp(),
        fixtures::gl_symbol(),
        fixtures::so_symbol(),
        fixtures::co_symbol(),
    ] {
        let s = g.space();
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                let target = s.degree_of(a) + s.degree_of(b);
                for (i, _) in g.bracket_basis(a, b) {
                    assert_eq!(s.degree_of(*i), target);
                }
            }
        }
    }
}

#[test]
fn transform_preserves_structure() {
    let g = fixtures::heisenberg();
    let p = Matrix::from_rows(2, vec![vec![q(2), q(1)], vec![q(0), q(1)]]);
    let h = g.transform(&[(-1, p)].into_iter().collect()).unwrap();
    // [2x, x + y] = 2z
    assert_eq!(h.bracket_basis(1, 2), &[(0, q(2))]);
    let _: Vec<Rational> = h.bracket(&[q(0), q(1), q(0)], &[q(0), q(0), q(1)]);
}
