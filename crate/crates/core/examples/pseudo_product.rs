//! Analyze pseudo-product symbols: the degree-zero algebra preserving the
//! splitting, Levi nondegeneracy and the prolongation.
//!
//! Run with `cargo run --example pseudo_product`.

use tanaka::fixtures;
use tanaka::pseudoprod::{analyze_pp, compute_g0_pp, Height, PseudoProductSymbol};

fn describe(label: &str, s: &PseudoProductSymbol) -> Result<(), Box<dyn std::error::Error>> {
    let report = analyze_pp(s, Some(6))?;
    println!("{label}");
    println!("  dim e = {}, dim f = {}", s.e().dim(), s.f().dim());
    println!("  degree-zero part: {} derivations", compute_g0_pp(s).len());
    println!("  Levi nondegenerate: {}, characteristic dimension {}", report.levi_nondegenerate, report.ch_dim);
    let dims: Vec<String> = report.dims_by_degree().iter().map(|(d, n)| format!("{d}:{n}")).collect();
    println!("  dims by degree: {}", dims.join(" "));
    match report.height() {
        Height::Finite(h) => println!("  finite, height {h}"),
        Height::CapReached(cap) => println!("  still growing at degree {cap}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    describe("y'' = 0", &fixtures::ode2_pp())?;
    describe("jets Q^2 -> Q", &fixtures::jet_pp(2, 1))?;
    // Swapping the roles of e and f gives the same algebra.
    describe("jets Q^2 -> Q, halves swapped", &fixtures::jet_pp(2, 1).swapped())?;
    describe("Q^2 split into lines", &fixtures::split_abelian_pp())?;
    Ok(())
}
