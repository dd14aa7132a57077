//! Prolong a few classical symbols and verify the result through the kernel
//! of the partial operator.
//!
//! Run with `cargo run --example prolong_symbols`.

use tanaka::fixtures;
use tanaka::prolong::{tor_complement, universal_prolongation, verify_partial_kernel, ProlongationStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("Q^3 with so(3)", fixtures::so_symbol()),
        ("Q^3 with co(3)", fixtures::co_symbol()),
        ("Q^2 with gl(2)", fixtures::gl_symbol()),
        ("Heisenberg with csp(2)", fixtures::heisenberg_csp()),
    ];
    for (label, g) in cases {
        let r = universal_prolongation(&g, Some(5))?;
        let status = match r.status {
            ProlongationStatus::Finite { height } => format!("finite, height {height}"),
            ProlongationStatus::CapReached { cap } => format!("no vanishing layer up to degree {cap}"),
        };
        println!("{label}: {status}");
        for (degree, dim) in &r.dims_by_degree {
            println!("  g^{degree}: {dim}");
        }
        if let Some(total) = r.total_dim() {
            println!("  total dimension {total}");
        }

        let check = verify_partial_kernel(&r.algebra, 0)?;
        let w = tor_complement(&r.algebra, 0)?;
        println!(
            "  ker of the degree-one operator: {} (expected {}), complement of the image: {}",
            check.kernel_dim,
            check.expected_dim,
            w.dim()
        );
    }
    Ok(())
}
