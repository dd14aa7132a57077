//! Derived flag, Levi form and symbol algebra of polynomial distributions
//! written as text.
//!
//! Run with `cargo run --example distribution_symbol`.

use tanaka::distflag::{
    levi_and_cauchy, regularity_probe, symbol_at_point, weak_derived_flag, DistributionModel, Polynomial,
    PolyVectorField, Probe,
};
use tanaka::exactla::q;

fn model(vars: &[&str], fields: &[&[&str]]) -> Result<DistributionModel, Box<dyn std::error::Error>> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let mut gens = Vec::new();
    for f in fields {
        let comps = f.iter().map(|c| Polynomial::parse(c, &names)).collect::<Result<Vec<_>, _>>()?;
        gens.push(PolyVectorField::new(comps));
    }
    let origin = vec![q(0); names.len()];
    Ok(DistributionModel::new(names, gens, origin)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Engel distribution on Q^4.
    let engel = model(&["x", "y", "z", "w"], &[&["1", "0", "0", "0"], &["0", "1", "x", "z"]])?;
    let flag = weak_derived_flag(&engel, None);
    println!("Engel flag dims {:?}, bracket generating: {}", flag.dims, flag.bracket_generating);
    let lc = levi_and_cauchy(&engel);
    println!("Levi rank {}, characteristic dimension {}", lc.levi_rank, lc.ch_dim);
    println!("regular near the origin: {}", regularity_probe(&engel, Probe::default()));

    let sym = symbol_at_point(&engel, Probe::default())?;
    let g = &sym.algebra;
    println!("symbol algebra, basis {:?}", g.names());
    for entry in g.entries() {
        let (a, b) = (g.space().index(entry.left)?, g.space().index(entry.right)?);
        let rhs: Vec<String> = entry
            .result
            .iter()
            .map(|(t, c)| format!("{c}*{}", g.name(g.space().index(*t).unwrap())))
            .collect();
        println!("  [{}, {}] = {}", g.name(a), g.name(b), rhs.join(" + "));
    }

    // The rank of [X, Y] jumps along x = 0, which the probe notices.
    let singular = model(&["x", "y", "z"], &[&["1", "0", "0"], &["0", "1", "x^2"]])?;
    println!("x^2 model regular near the origin: {}", regularity_probe(&singular, Probe::default()));
    Ok(())
}
