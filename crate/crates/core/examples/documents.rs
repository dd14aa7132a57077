//! Drive the command layer in-process: fetch a fixture document, edit it,
//! and run the matching command on it.
//!
//! Run with `cargo run --example documents`.

use tanaka::cli::{fixture_document, run, OutputFormat, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (command, mut doc) = fixture_document("co-symbol").map_err(|e| e.message)?;
    println!("{}", serde_json::to_string_pretty(&doc)?);

    let mut config = RunConfig::new(command);
    config.cap = 4;
    config.output = OutputFormat::Text;
    let out = run(&config, &doc.to_string());
    println!("exit {}\n{}", out.exit_code, out.report);

    // Drop the brackets: the degree-zero part no longer acts and validation fails.
    doc["brackets"] = serde_json::json!([]);
    let out = run(&config, &doc.to_string());
    println!("exit {}\n{}", out.exit_code, out.report);
    Ok(())
}
