//! Prolongation checked against a brute-force solver and the kernel identity.

mod common;

use common::oracle::{compare_with_engine, g0_dimension, OracleProlongation};
use tanaka::exactla::q;
use tanaka::fixtures;
use tanaka::gla::GradedLieAlgebra;
use tanaka::prolong::{
    partial_operator, tor_complement, universal_prolongation, verify_partial_kernel, ProlongError,
    ProlongationStatus, ProlongedAlgebra,
};
use tanaka::pseudoprod::{compute_g0_pp, pp_algebra};

fn agree_with_oracle(g: &GradedLieAlgebra, top: usize) {
    let mut engine = ProlongedAlgebra::new(g.clone()).unwrap();
    engine.ensure_layers(top).unwrap();
    let mut oracle = OracleProlongation::new(g);
    for _ in 0..top {
        oracle.extend();
    }
    assert!(oracle.self_consistent());
    compare_with_engine(&engine, &oracle, top).unwrap();
}

#[test]
fn so3_is_rigid() {
    let r = universal_prolongation(&fixtures::so_symbol(), None).unwrap();
    assert_eq!(r.status, ProlongationStatus::Finite { height: 0 });
    assert_eq!(r.total_dim(), Some(6));
    agree_with_oracle(&fixtures::so_symbol(), 2);
}

#[test]
fn co3_is_conformal() {
    let r = universal_prolongation(&fixtures::co_symbol(), None).unwrap();
    assert_eq!(r.status, ProlongationStatus::Finite { height: 1 });
    assert_eq!(r.dims_by_degree, vec![(-1, 3), (0, 4), (1, 3)]);
    assert_eq!(r.total_dim(), Some(10));
    agree_with_oracle(&fixtures::co_symbol(), 3);
}

#[test]
fn gl2_never_stops() {
    let r = universal_prolongation(&fixtures::gl_symbol(), Some(4)).unwrap();
    assert_eq!(r.status, ProlongationStatus::CapReached { cap: 4 });
    // Polynomial vector fields on the plane, homogeneous of degree m + 1.
    assert_eq!(r.dims_by_degree, vec![(-1, 2), (0, 4), (1, 6), (2, 8), (3, 10), (4, 12)]);
    assert_eq!(r.total_dim(), None);
    agree_with_oracle(&fixtures::gl_symbol(), 3);
}

#[test]
fn contact_csp_matches_oracle() {
    let r = universal_prolongation(&fixtures::heisenberg_csp(), Some(3)).unwrap();
    assert_eq!(r.status, ProlongationStatus::CapReached { cap: 3 });
    assert_eq!(r.dims_by_degree, vec![(-2, 1), (-1, 2), (0, 4), (1, 6), (2, 9), (3, 12)]);
    agree_with_oracle(&fixtures::heisenberg_csp(), 3);
}

#[test]
fn zero_degree_zero_part_has_height_minus_one() {
    let r = universal_prolongation(&fixtures::heisenberg(), None).unwrap();
    assert_eq!(r.status, ProlongationStatus::Finite { height: -1 });
    assert_eq!(r.total_dim(), Some(3));
}

#[test]
fn zero_cap_is_rejected() {
    assert!(matches!(
        universal_prolongation(&fixtures::so_symbol(), Some(0)),
        Err(ProlongError::BadCap)
    ));
}

#[test]
fn pseudo_product_algebras_match_oracle() {
    for s in [fixtures::ode2_pp(), fixtures::split_abelian_pp(), fixtures::jet_pp(1, 2)] {
        agree_with_oracle(&pp_algebra(&s).unwrap(), 3);
    }
}

#[test]
fn pseudo_product_g0_matches_brute_force() {
    for s in [
        fixtures::ode2_pp(),
        fixtures::split_abelian_pp(),
        fixtures::jet_pp(1, 2),
        fixtures::jet_pp(2, 1),
        fixtures::jet_pp(2, 2),
    ] {
        let preserved = vec![s.e().basis().to_vec(), s.f().basis().to_vec()];
        assert_eq!(compute_g0_pp(&s).len(), g0_dimension(s.minus(), &preserved));
    }
}

#[test]
fn kernel_identity_and_complement() {
    for g in [fixtures::so_symbol(), fixtures::co_symbol(), pp_algebra(&fixtures::ode2_pp()).unwrap()] {
        let mut a = ProlongedAlgebra::new(g).unwrap();
        a.ensure_layers(5).unwrap();
        for n in 0..=4 {
            let check = verify_partial_kernel(&a, n).unwrap();
            assert!(check.holds(), "n = {n}: {check:?}");
            let op = partial_operator(&a, n).unwrap();
            let w = tor_complement(&a, n).unwrap();
            assert_eq!(w.dim() + op.rank(), op.codomain.dim);
            assert!(op.is_complement(&w));
        }
    }
}

#[test]
fn block_operator_matches_dense_form() {
    let mut a = ProlongedAlgebra::new(fixtures::heisenberg_csp()).unwrap();
    a.ensure_layers(2).unwrap();
    let op = partial_operator(&a, 1).unwrap();
    let dense = op.to_dense();
    let x: Vec<_> = (0..op.domain.dim).map(|i| q((i as i64 % 5) - 2)).collect();
    assert_eq!(op.apply(&x), dense.mul_vec(&x));
    assert_eq!(op.rank(), tanaka::exactla::rank(&dense));
}

#[test]
fn corrupted_layer_is_caught() {
    let mut a = ProlongedAlgebra::new(pp_algebra(&fixtures::ode2_pp()).unwrap()).unwrap();
    a.ensure_layers(2).unwrap();
    let shape_dim = a.shape(1).unwrap().dim;
    let layer = a.layer(1).unwrap().clone();
    let stray = (0..shape_dim)
        .map(|i| {
            let mut v = vec![q(0); shape_dim];
            v[i] = q(1);
            v
        })
        .find(|v| !layer.contains(v))
        .expect("layer is proper");
    let mut basis = layer.basis().to_vec();
    basis.push(stray);
    let bad = a.with_layer_replaced(1, basis).unwrap();
    assert!(!bad.relation_failures(1).unwrap().is_empty());
    assert!(!verify_partial_kernel(&bad, 0).unwrap().holds());

    // Dropping a vector breaks the other inclusion.
    let short = a.with_layer_replaced(1, layer.basis()[1..].to_vec()).unwrap();
    let check = verify_partial_kernel(&short, 0).unwrap();
    assert!(check.expected_in_kernel && !check.kernel_in_expected);
}
