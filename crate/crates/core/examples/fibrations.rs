//! Pseudo-product symbols from a pair of transverse fibrations, and a pair
//! whose second family is not integrable.
//!
//! Run with `cargo run --example fibrations`.

use tanaka::distflag::{pp_from_fibrations, Probe};
use tanaka::fixtures;
use tanaka::pseudoprod::analyze_pp;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, c) in [(1, 1), (2, 1), (1, 2)] {
        let (symbol, diag) = pp_from_fibrations(&fixtures::jet_fibration(m, c), Probe::default())?;
        let report = analyze_pp(&symbol, Some(6))?;
        println!(
            "jets Q^{m} -> Q^{c}: Levi nondegenerate {}, dims {:?}, checked at {} points",
            report.levi_nondegenerate,
            report.dims_by_degree(),
            diag.points_checked.len()
        );
    }

    match pp_from_fibrations(&fixtures::twisted_fibration(), Probe::default()) {
        Ok(_) => println!("twisted pair accepted"),
        Err(e) => println!("twisted pair rejected: {e}"),
    }
    Ok(())
}
