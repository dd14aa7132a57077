//! Acceptance checks. Each criterion prints one PASS or FAIL line with its
//! elapsed time; a criterion that exceeds its time bound fails. All checks
//! are exact, so there are no numeric tolerances.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::oracle::{compare_with_engine, OracleProlongation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tanaka::cli::{fixture_document, run, sample_fixture_names, RunConfig};
use tanaka::distflag::{
    gr_tautological_fixture, levi_and_cauchy, lie_bracket_vf, pp_from_fibrations, symbol_at_point, Polynomial,
    PolyVectorField, Probe,
};
use tanaka::exactla::{q, Subspace};
use tanaka::fixtures;
use tanaka::gla::{is_fundamental, GradedLieAlgebra};
use tanaka::prolong::{
    partial_operator, tor_complement, universal_prolongation, verify_partial_kernel, ProlongationStatus,
    ProlongedAlgebra,
};
use tanaka::pseudoprod::{analyze_pp, ch_decomposition_check, levi_nondegenerate, pp_algebra, PseudoProductSymbol};

const CAP: usize = 10;

/// A short account of what was checked, or why the criterion failed.
type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fibration_symbols() -> Vec<(String, PseudoProductSymbol)> {
    [(1, 1), (2, 1), (1, 2)]
        .into_iter()
        .map(|(m, c)| {
            let (s, _) = pp_from_fibrations(&fixtures::jet_fibration(m, c), Probe::default()).unwrap();
            (format!("jet-fibration-{m}-{c}"), s)
        })
        .collect()
}

fn pp_fixtures() -> Vec<(String, PseudoProductSymbol)> {
    let mut out = vec![
        ("ode2-pp".to_string(), fixtures::ode2_pp()),
        ("split-abelian-pp".to_string(), fixtures::split_abelian_pp()),
    ];
    for (m, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        out.push((format!("jet-pp-{m}-{c}"), fixtures::jet_pp(m, c)));
    }
    out.extend(fibration_symbols());
    out
}

/// Every algebra the prolongation is run on: symbols with their degree-zero
/// parts and the algebras of the pseudo-product fixtures.
fn algebra_fixtures() -> Vec<(String, GradedLieAlgebra)> {
    let mut out = vec![
        ("heisenberg".to_string(), fixtures::heisenberg()),
        ("abelian-2".to_string(), fixtures::abelian(2)),
        ("so-symbol".to_string(), fixtures::so_symbol()),
        ("co-symbol".to_string(), fixtures::co_symbol()),
        ("gl-symbol".to_string(), fixtures::gl_symbol()),
        ("heisenberg-csp".to_string(), fixtures::heisenberg_csp()),
    ];
    for (name, s) in pp_fixtures() {
        out.push((name, pp_algebra(&s).unwrap()));
    }
    out
}

/// Highest `n` for which the kernel identity is checked.
fn top_n(status: &ProlongationStatus) -> usize {
    match *status {
        ProlongationStatus::Finite { height } => ((height + 2).max(0) as usize).min(CAP),
        ProlongationStatus::CapReached { cap } => cap,
    }
}

fn kernel_identity() -> Outcome {
    let (mut fixtures, mut checks) = (0, 0);
    for (name, g) in algebra_fixtures() {
        fixtures += 1;
        let r = universal_prolongation(&g, Some(CAP)).map_err(|e| format!("{name}: {e}"))?;
        let n_max = top_n(&r.status);
        let mut a = r.algebra;
        a.ensure_layers(n_max + 1).map_err(|e| e.to_string())?;
        for n in 0..=n_max {
            let check = verify_partial_kernel(&a, n).map_err(|e| format!("{name}: {e}"))?;
            ensure(check.holds(), || format!("{name}, n = {n}: {check:?}"))?;
            checks += 1;
        }
    }
    Ok(format!("{fixtures} fixtures, {checks} degrees"))
}

fn oracle_agrees(name: &str, g: &GradedLieAlgebra, top: usize) -> Result<(), String> {
    let mut engine = ProlongedAlgebra::new(g.clone()).map_err(|e| e.to_string())?;
    engine.ensure_layers(top).map_err(|e| e.to_string())?;
    let mut oracle = OracleProlongation::new(g);
    for _ in 0..top {
        oracle.extend();
    }
    ensure(oracle.self_consistent(), || format!("{name}: oracle inconsistent"))?;
    compare_with_engine(&engine, &oracle, top).map_err(|e| format!("{name}: {e}"))
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for (name, g) in algebra_fixtures() {
        let r = universal_prolongation(&g, Some(CAP)).map_err(|e| e.to_string())?;
        let (Some(total), ProlongationStatus::Finite { height }) = (r.total_dim(), &r.status) else {
            continue;
        };
        if total > 12 {
            continue;
        }
        // One degree past the height so the vanishing layer is compared too.
        oracle_agrees(&name, &g, (*height + 1).max(1) as usize)?;
        compared += 1;
    }
    ensure(compared >= 5, || format!("only {compared} fixtures compared"))?;
    Ok(format!("{compared} fixtures"))
}

fn classical_heights() -> Outcome {
    let so = universal_prolongation(&fixtures::so_symbol(), Some(CAP)).map_err(|e| e.to_string())?;
    ensure(so.status == ProlongationStatus::Finite { height: 0 }, || format!("so(3): {:?}", so.status))?;
    let co = universal_prolongation(&fixtures::co_symbol(), Some(CAP)).map_err(|e| e.to_string())?;
    ensure(co.status == ProlongationStatus::Finite { height: 1 }, || format!("co(3): {:?}", co.status))?;
    ensure(co.algebra.dim(1) == Some(3) && co.total_dim() == Some(10), || {
        format!("co(3): {:?}", co.dims_by_degree)
    })?;
    let ode = analyze_pp(&fixtures::ode2_pp(), Some(CAP)).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = ode.dims_by_degree().iter().map(|(_, d)| *d).collect();
    ensure(dims == [1, 2, 2, 2, 1], || format!("ode: {dims:?}"))?;
    ensure(ode.prolongation.status == ProlongationStatus::Finite { height: 2 }, || {
        format!("ode: {:?}", ode.prolongation.status)
    })?;
    ensure(ode.prolongation.total_dim() == Some(8), || "ode total".into())?;
    Ok("so(3), co(3), ode".into())
}

fn infinite_cases() -> Outcome {
    for (name, g) in [("gl-symbol", fixtures::gl_symbol()), ("heisenberg-csp", fixtures::heisenberg_csp())] {
        let r = universal_prolongation(&g, Some(CAP)).map_err(|e| e.to_string())?;
        ensure(r.status == ProlongationStatus::CapReached { cap: CAP }, || format!("{name}: {:?}", r.status))?;
        ensure(r.dims_by_degree.iter().all(|(_, d)| *d > 0), || format!("{name}: {:?}", r.dims_by_degree))?;
    }
    let split = analyze_pp(&fixtures::split_abelian_pp(), Some(CAP)).map_err(|e| e.to_string())?;
    ensure(split.prolongation.status == ProlongationStatus::CapReached { cap: CAP }, || {
        format!("split: {:?}", split.prolongation.status)
    })?;
    ensure(split.dims_by_degree().iter().all(|(_, d)| *d == 2), || {
        format!("split: {:?}", split.dims_by_degree())
    })?;
    oracle_agrees("split-abelian-pp", &pp_algebra(&fixtures::split_abelian_pp()).unwrap(), CAP)?;
    oracle_agrees("gl-symbol", &fixtures::gl_symbol(), 5)?;
    oracle_agrees("heisenberg-csp", &fixtures::heisenberg_csp(), 4)?;
    Ok("gl(2), csp, split; oracle to degrees 5, 4, 10".into())
}

fn nondegenerate_pseudo_products_are_finite() -> Outcome {
    let mut seen = 0;
    for (name, s) in pp_fixtures() {
        let full = pp_algebra(&s).map_err(|e| e.to_string())?;
        let generating = is_fundamental(&full).map_err(|e| e.to_string())?.generated_by_minus_one;
        if !generating || !levi_nondegenerate(s.minus()).nondegenerate {
            continue;
        }
        seen += 1;
        let r = analyze_pp(&s, Some(CAP)).map_err(|e| e.to_string())?;
        ensure(matches!(r.prolongation.status, ProlongationStatus::Finite { .. }), || {
            format!("{name}: {:?}", r.prolongation.status)
        })?;
    }
    ensure(seen >= 6, || format!("only {seen} symbols qualified"))?;
    Ok(format!("{seen} symbols"))
}

fn ch_decomposition() -> Outcome {
    let all = pp_fixtures();
    for (name, s) in &all {
        ensure(ch_decomposition_check(s), || name.clone())?;
    }
    Ok(format!("{} symbols", all.len()))
}

fn tautological_ch_is_horizontal() -> Outcome {
    for (m, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let model = gr_tautological_fixture(m, c);
        let lc = levi_and_cauchy(&model);
        let r = model.rank();
        // The vertical generators are the `∂/∂p` fields, listed after the first `m`.
        let vertical = Subspace::span(
            r,
            (m..r).map(|i| (0..r).map(|j| q((i == j) as i64)).collect::<Vec<_>>()),
        );
        let meet = lc.ch.intersection(&vertical).dim();
        ensure(meet == 0, || format!("({m},{c}): Ch meets the vertical in dimension {meet}"))?;
    }
    Ok("(m, c) in (1,1), (1,2), (2,1), (2,2)".into())
}

fn jet_fibration_is_levi_nondegenerate() -> Outcome {
    let fib = fixtures::jet_fibration(1, 1);
    let (s, _) = pp_from_fibrations(&fib, Probe::default()).map_err(|e| e.to_string())?;
    let symbol_level = levi_nondegenerate(s.minus());
    let mut all = fib.e_fields.clone();
    all.extend(fib.f_fields.iter().cloned());
    let model = tanaka::distflag::DistributionModel::new(fib.var_names.clone(), all, fib.base_point.clone())
        .map_err(|e| e.to_string())?;
    let field_level = levi_and_cauchy(&model);
    ensure(symbol_level.ch_dim == 0, || format!("symbol ch_dim {}", symbol_level.ch_dim))?;
    ensure(field_level.ch_dim == symbol_level.ch_dim, || {
        format!("field-level ch_dim {} vs symbol {}", field_level.ch_dim, symbol_level.ch_dim)
    })?;
    Ok("ch_dim 0 at both levels".into())
}

fn graded_jacobi(name: &str, g: &GradedLieAlgebra) -> Result<(), String> {
    let n = g.dim();
    let space = g.space();
    for a in 0..n {
        for b in 0..n {
            let target = space.degree_of(a) + space.degree_of(b);
            for (t, _) in g.bracket_basis(a, b) {
                ensure(space.degree_of(*t) == target, || format!("{name}: [{a},{b}] leaves degree {target}"))?;
            }
            for c in 0..n {
                ensure(g.jacobi_residual(a, b, c).iter().all(|x| *x == q(0)), || {
                    format!("{name}: Jacobi fails on ({a},{b},{c})")
                })?;
            }
        }
    }
    Ok(())
}

fn random_field(rng: &mut ChaCha8Rng, n: usize) -> PolyVectorField {
    let comps = (0..n)
        .map(|_| {
            let mut p = Polynomial::zero(n);
            for _ in 0..rng.gen_range(0..4) {
                let mut exps = vec![0u32; n];
                for _ in 0..rng.gen_range(0..=2) {
                    exps[rng.gen_range(0..n)] += 1;
                }
                p = p.add(&Polynomial::monomial(exps, q(rng.gen_range(-3..=3))));
            }
            p
        })
        .collect();
    PolyVectorField::new(comps)
}

fn structural() -> Outcome {
    // Jacobi and grading on base algebras and computed symbols.
    for (name, g) in algebra_fixtures() {
        graded_jacobi(&name, &g)?;
    }
    for (name, m) in [
        ("contact-vf", fixtures::contact_vf()),
        ("engel-vf", fixtures::engel_vf()),
        ("gr-taut-2-2", gr_tautological_fixture(2, 2)),
    ] {
        let s = symbol_at_point(&m, Probe::default()).map_err(|e| format!("{name}: {e}"))?;
        graded_jacobi(name, &s.algebra)?;
    }
    // Jacobi with two negative arguments is the derivation rule on each layer.
    for (name, g) in algebra_fixtures() {
        let r = universal_prolongation(&g, Some(4)).map_err(|e| e.to_string())?;
        for m in 1..=r.algebra.computed_degree() {
            let fails = r.algebra.relation_failures(m).map_err(|e| e.to_string())?;
            ensure(fails.is_empty(), || format!("{name}: derivation rule fails in degree {m}"))?;
        }
    }
    // Vector-field bracket identities on seeded random fields.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let (x, y, z) = (random_field(&mut rng, n), random_field(&mut rng, n), random_field(&mut rng, n));
        let b = |u: &PolyVectorField, v: &PolyVectorField| lie_bracket_vf(u, v).unwrap();
        ensure(b(&x, &y).add(&b(&y, &x)).is_zero(), || "bracket not antisymmetric".into())?;
        let jac = b(&x, &b(&y, &z)).add(&b(&y, &b(&z, &x))).add(&b(&z, &b(&x, &y)));
        ensure(jac.is_zero(), || "bracket fails Jacobi".into())?;
    }
    // Complements of the image of ∂.
    for (name, g) in algebra_fixtures() {
        let mut a = ProlongedAlgebra::new(g).map_err(|e| e.to_string())?;
        a.ensure_layers(4).map_err(|e| e.to_string())?;
        for n in 0..=3 {
            let op = partial_operator(&a, n).map_err(|e| e.to_string())?;
            let w = tor_complement(&a, n).map_err(|e| e.to_string())?;
            ensure(op.rank() + w.dim() == op.codomain.dim && op.is_complement(&w), || {
                format!("{name}, n = {n}: complement is not a direct summand")
            })?;
        }
    }
    // Byte-identical machine reports.
    for name in sample_fixture_names() {
        let (command, doc) = fixture_document(&name).map_err(|e| e.message)?;
        let text = serde_json::to_string(&doc).unwrap();
        let config = RunConfig::new(command);
        ensure(run(&config, &text).report == run(&config, &text).report, || {
            format!("{name}: report differs between runs")
        })?;
    }
    Ok("algebras, symbols, layers, 40 random triples, complements, reports".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("kernel identity for the partial operator", 10, kernel_identity),
        ("prolongation agrees with the brute-force oracle", 30, oracle_equivalence),
        ("classical finite heights", 5, classical_heights),
        ("classical infinite cases reach the cap", 60, infinite_cases),
        ("nondegenerate pseudo-products are finite", 60, nondegenerate_pseudo_products_are_finite),
        ("characteristic space splits along e and f", 10, ch_decomposition),
        ("tautological Ch meets the vertical trivially", 5, tautological_ch_is_horizontal),
        ("jet fibration is Levi-nondegenerate", 10, jet_fibration_is_levi_nondegenerate),
        ("structural identities and determinism", 60, structural),
    ];
    let mut failed = 0;
    for (name, bound, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|what| {
            ensure(elapsed <= Duration::from_secs(bound), || format!("exceeded {bound} s")).map(|()| what)
        });
        match outcome {
            Ok(what) => println!("PASS {name}: {what} ({:.2} s, bound {bound} s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({:.2} s, bound {bound} s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
