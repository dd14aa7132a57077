//! The `tanaka` command-line driver, as a library function.
//!
//! [`run`] takes a parsed configuration and the input document text and
//! returns an exit code with the report. Exit codes: 0 success, 2 the input
//! is well formed but mathematically rejected, 3 the input does not parse or
//! does not match its schema.

mod catalog;
pub mod documents;

pub use catalog::{fixture_document, sample_fixture_names, CATALOG};

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::distflag::{
    levi_and_cauchy, pp_from_fibrations, regularity_probe, symbol_at_point, weak_derived_flag, DistError,
    Probe, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use crate::gla::{is_fundamental, GlaError, GradedLieAlgebra};
use crate::prolong::{
    partial_operator, universal_prolongation, verify_partial_kernel, ProlongError, ProlongationResult,
    ProlongationStatus, DEFAULT_CAP,
};
use crate::pseudoprod::{analyze_pp, levi_nondegenerate, PseudoError, PseudoProductSymbol};
use documents::{
    fibration_from_doc, gla_from_doc, gla_to_doc, model_from_doc, parse_json, pp_from_doc, pp_to_doc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SCHEMA: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckGla,
    Prolong,
    Pseudo,
    DistFlag,
    DistSymbol,
    DistPp,
    Fixtures,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckGla => "check-gla",
            Command::Prolong => "prolong",
            Command::Pseudo => "pseudo",
            Command::DistFlag => "dist-flag",
            Command::DistSymbol => "dist-symbol",
            Command::DistPp => "dist-pp",
            Command::Fixtures => "fixtures",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// Catalog entry for `fixtures`.
    pub fixture: Option<String>,
    pub list: bool,
    pub cap: usize,
    pub samples: usize,
    pub seed: u64,
    pub output: OutputFormat,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            fixture: None,
            list: false,
            cap: DEFAULT_CAP,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            output: OutputFormat::Machine,
        }
    }

    fn probe(&self) -> Probe {
        Probe {
            samples: self.samples,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub report: String,
}

/// A failure with its exit code and a structured description.
#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub exit_code: i32,
    pub kind: String,
    pub message: String,
    pub details: Value,
}

impl CliError {
    pub fn schema(message: impl Into<String>) -> Self {
        CliError {
            exit_code: EXIT_SCHEMA,
            kind: "SchemaError".into(),
            message: message.into(),
            details: Value::Null,
        }
    }

    pub fn validation(kind: &str, message: impl Into<String>, details: Value) -> Self {
        CliError {
            exit_code: EXIT_VALIDATION,
            kind: kind.into(),
            message: message.into(),
            details,
        }
    }

    pub fn unknown_fixture(name: &str) -> Self {
        CliError {
            exit_code: EXIT_SCHEMA,
            kind: "UnknownFixture".into(),
            message: format!("no fixture named `{name}`; see `tanaka fixtures --list`"),
            details: json!({ "name": name }),
        }
    }

    pub fn from_gla(e: GlaError) -> Self {
        let message = e.to_string();
        match e {
            GlaError::GradingViolation {
                left,
                right,
                expected,
                found,
            } => CliError::validation(
                "GradingViolation",
                message,
                json!({ "left": left, "right": right, "expected_degree": expected, "found_degree": found }),
            ),
            GlaError::JacobiViolation { triple, residual } => CliError::validation(
                "JacobiViolation",
                message,
                json!({ "triple": triple, "residual": residual }),
            ),
            GlaError::SelfBracket(name) => {
                CliError::validation("SelfBracket", message, json!({ "element": name }))
            }
            GlaError::ConflictingEntry { left, right } => {
                CliError::validation("ConflictingEntry", message, json!({ "left": left, "right": right }))
            }
            GlaError::NotClosed(_) => CliError::validation("NotClosed", message, Value::Null),
            GlaError::DegreeWindow { max_degree } => CliError {
                exit_code: EXIT_SCHEMA,
                kind: "DegreeWindow".into(),
                message,
                details: json!({ "max_degree": max_degree }),
            },
            GlaError::InvalidSpace(_) | GlaError::IndexOutOfRange(_) => CliError::schema(message),
        }
    }

    pub fn from_prolong(e: ProlongError) -> Self {
        let message = e.to_string();
        match e {
            ProlongError::NotFundamental(report) => CliError::validation(
                "NotFundamental",
                message,
                serde_json::to_value(report).unwrap_or(Value::Null),
            ),
            ProlongError::DegreeWindow { max_degree } => CliError {
                exit_code: EXIT_SCHEMA,
                kind: "DegreeWindow".into(),
                message,
                details: json!({ "max_degree": max_degree }),
            },
            ProlongError::BadCap => CliError::schema(message),
            ProlongError::Gla(g) => CliError::from_gla(g),
            other => CliError::validation("InternalCheckFailed", other.to_string(), Value::Null),
        }
    }

    pub fn from_pseudo(e: PseudoError) -> Self {
        let message = e.to_string();
        match e {
            PseudoError::NotDirectSum {
                e_dim,
                f_dim,
                sum_dim,
                total,
            } => CliError::validation(
                "NotDirectSum",
                message,
                json!({ "e_dim": e_dim, "f_dim": f_dim, "sum_dim": sum_dim, "degree_minus_one_dim": total }),
            ),
            PseudoError::NotAbelian { which, witness } => CliError::validation(
                "NotAbelian",
                message,
                json!({ "subspace": which, "witness": [witness.0, witness.1] }),
            ),
            PseudoError::WrongWindow { .. } | PseudoError::WrongAmbient { .. } => CliError::schema(message),
            PseudoError::Gla(g) => CliError::from_gla(g),
            PseudoError::Prolong(p) => CliError::from_prolong(p),
        }
    }

    pub fn from_dist(e: DistError) -> Self {
        let message = e.to_string();
        match e {
            DistError::Parse(_) | DistError::DimensionMismatch(_) => CliError::schema(message),
            DistError::DependentGenerators => CliError::validation("DependentGenerators", message, Value::Null),
            DistError::NotBracketGenerating { dims, n_vars } => CliError::validation(
                "NotBracketGenerating",
                message,
                json!({ "dims": dims, "n_vars": n_vars }),
            ),
            DistError::RegularityUnknown(_) => CliError::validation("RegularityUnknown", message, Value::Null),
            DistError::NotTransverse {
                e_dim,
                f_dim,
                combined,
            } => CliError::validation(
                "NotTransverse",
                message,
                json!({ "e_dim": e_dim, "f_dim": f_dim, "combined_rank": combined }),
            ),
            DistError::IntegrabilityFailed {
                family,
                point,
                witness,
            } => CliError::validation(
                "IntegrabilityFailed",
                message,
                json!({ "family": family, "point": point, "witness": [witness.0, witness.1] }),
            ),
            DistError::Gla(g) => CliError::from_gla(g),
            DistError::Pseudo(p) => CliError::from_pseudo(p),
        }
    }
}

/// `[[degree, dim], ...]` in increasing degree.
fn dims_value(dims: &[(i32, usize)]) -> Value {
    json!(dims.iter().map(|(d, n)| [*d as i64, *n as i64]).collect::<Vec<_>>())
}

fn status_value(status: &ProlongationStatus) -> Value {
    match status {
        ProlongationStatus::Finite { height } => json!({ "kind": "finite", "height": height }),
        ProlongationStatus::CapReached { cap } => json!({ "kind": "cap_reached", "cap": cap }),
    }
}

fn fundamental_checks(g: &GradedLieAlgebra) -> Result<Value, CliError> {
    let r = is_fundamental(g).map_err(CliError::from_gla)?;
    Ok(json!({
        "generated_by_degree_minus_one": r.generated_by_minus_one,
        "adjoint_injective_on_degree_zero": r.adjoint_injective_on_g0,
        "violations": r.violations,
    }))
}

/// Per-degree checks on a finished prolongation: the derivation rule on all
/// pairs, the kernel identity for `∂`, and the complement of its image.
fn prolongation_checks(
    result: &ProlongationResult,
    cap: usize,
) -> Result<(Value, Value, Vec<String>), CliError> {
    let mut algebra = result.algebra.clone();
    let top_n = match result.status {
        ProlongationStatus::Finite { height } => ((height + 2).max(0) as usize).min(cap),
        ProlongationStatus::CapReached { cap } => cap,
    };
    algebra.ensure_layers(top_n + 1).map_err(CliError::from_prolong)?;
    let mut ranks = Vec::new();
    let mut relation_ok = true;
    let mut kernel_ok = true;
    let mut complement_ok = true;
    let mut failures: Vec<String> = Vec::new();
    for m in 1..=algebra.computed_degree() {
        for f in algebra.relation_failures(m).map_err(CliError::from_prolong)? {
            relation_ok = false;
            failures.push(format!(
                "degree {} basis vector {} fails the derivation rule on ({}, {})",
                f.degree, f.basis_vector, f.left, f.right
            ));
        }
    }
    for n in 0..=top_n {
        let op = partial_operator(&algebra, n).map_err(CliError::from_prolong)?;
        let check = verify_partial_kernel(&algebra, n).map_err(CliError::from_prolong)?;
        let w = op.image().complement();
        let direct = op.is_complement(&w);
        if !check.holds() {
            kernel_ok = false;
            failures.push(format!("kernel identity fails for n = {n}: {check:?}"));
        }
        if !direct {
            complement_ok = false;
            failures.push(format!("complement of the image is not direct for n = {n}"));
        }
        ranks.push(json!({
            "n": n,
            "domain_dim": op.domain.dim,
            "rank": op.rank(),
            "kernel_dim": check.kernel_dim,
            "tor_dim": op.codomain.dim,
            "complement_dim": w.dim(),
        }));
    }
    let checks = json!({
        "relation_all_pairs": relation_ok,
        "partial_kernel_identity": kernel_ok,
        "complement_direct_sum": complement_ok,
    });
    Ok((Value::Array(ranks), checks, failures))
}

fn run_check_gla(input: &str) -> Result<Value, CliError> {
    let g = gla_from_doc(&parse_json(input)?)?;
    Ok(json!({
        "dims_by_degree": dims_value(&g.space().dims_map().into_iter().collect::<Vec<_>>()),
        "dim": g.dim(),
        "abelian": g.is_abelian(),
        "checks": { "grading": true, "jacobi": true },
        "fundamental": fundamental_checks(&g)?,
    }))
}

fn run_prolong(config: &RunConfig, input: &str) -> Result<Value, CliError> {
    let g = gla_from_doc(&parse_json(input)?)?;
    let result = universal_prolongation(&g, Some(config.cap)).map_err(CliError::from_prolong)?;
    let (ranks, checks, failures) = prolongation_checks(&result, config.cap)?;
    Ok(json!({
        "diagnostics": failures,
        "status": status_value(&result.status),
        "dims_by_degree": dims_value(&result.dims_by_degree),
        "total_dim": result.total_dim(),
        "partial_ranks": ranks,
        "checks": checks,
    }))
}

fn run_pseudo(config: &RunConfig, input: &str) -> Result<Value, CliError> {
    pseudo_body(config, &pp_from_doc(&parse_json(input)?)?)
}

fn pseudo_body(config: &RunConfig, s: &PseudoProductSymbol) -> Result<Value, CliError> {
    let report = analyze_pp(s, Some(config.cap)).map_err(CliError::from_pseudo)?;
    let swapped = analyze_pp(&s.swapped(), Some(config.cap)).map_err(CliError::from_pseudo)?;
    let finite = matches!(report.prolongation.status, ProlongationStatus::Finite { .. });
    let generated = report.fundamental.generated_by_minus_one;
    let (ranks, mut checks, failures) = prolongation_checks(&report.prolongation, config.cap)?;
    let extra = checks.as_object_mut().expect("checks are an object");
    extra.insert("ch_decomposition".into(), json!(report.ch_decomposition));
    extra.insert(
        "finite_when_levi_nondegenerate".into(),
        json!(!(generated && report.levi_nondegenerate) || finite),
    );
    extra.insert(
        "swap_symmetry".into(),
        json!(swapped.dims_by_degree() == report.dims_by_degree()),
    );
    Ok(json!({
        "diagnostics": failures,
        "g0_dim": report.g0_dim,
        "levi_nondegenerate": report.levi_nondegenerate,
        "ch_dim": report.ch_dim,
        "fundamental": serde_json::to_value(&report.fundamental).unwrap_or(Value::Null),
        "status": status_value(&report.prolongation.status),
        "dims_by_degree": dims_value(report.dims_by_degree()),
        "total_dim": report.prolongation.total_dim(),
        "partial_ranks": ranks,
        "checks": checks,
    }))
}

fn run_dist_flag(config: &RunConfig, input: &str) -> Result<Value, CliError> {
    let m = model_from_doc(&parse_json(input)?)?;
    let flag = weak_derived_flag(&m, None);
    let levi = levi_and_cauchy(&m);
    Ok(json!({
        "flag": serde_json::to_value(&flag).unwrap_or(Value::Null),
        "levi_rank": levi.levi_rank,
        "ch_dim": levi.ch_dim,
        "regular_at_samples": regularity_probe(&m, config.probe()),
        "samples": config.samples,
        "checks": {
            "dims_increasing": flag.dims.windows(2).all(|w| w[0] < w[1]),
            "bracket_generating_matches_dims": flag.bracket_generating == (flag.dims.last() == Some(&m.n_vars())),
        },
    }))
}

fn run_dist_symbol(config: &RunConfig, input: &str) -> Result<Value, CliError> {
    let m = model_from_doc(&parse_json(input)?)?;
    let sym = symbol_at_point(&m, config.probe()).map_err(CliError::from_dist)?;
    let fundamental = is_fundamental(&sym.algebra).map_err(CliError::from_gla)?;
    let symbol_levi = levi_nondegenerate(&sym.algebra);
    let field_levi = levi_and_cauchy(&m);
    Ok(json!({
        "symbol": serde_json::to_value(gla_to_doc(&sym.algebra)).unwrap_or(Value::Null),
        "flag": serde_json::to_value(&sym.flag).unwrap_or(Value::Null),
        "filtration_discrepancies": sym.discrepancies,
        "checks": {
            "grading": true,
            "jacobi": true,
            "generated_by_degree_minus_one": fundamental.generated_by_minus_one,
            "levi_verdicts_agree": symbol_levi.nondegenerate == (field_levi.ch_dim == 0),
        },
    }))
}

fn run_dist_pp(config: &RunConfig, input: &str) -> Result<Value, CliError> {
    let fib = fibration_from_doc(&parse_json(input)?)?;
    let (symbol, diagnostics) = pp_from_fibrations(&fib, config.probe()).map_err(CliError::from_dist)?;
    let mut body = pseudo_body(config, &symbol)?;
    let obj = body.as_object_mut().expect("reports are objects");
    obj.insert("symbol".into(), serde_json::to_value(pp_to_doc(&symbol)).unwrap_or(Value::Null));
    obj.insert(
        "fibration_diagnostics".into(),
        serde_json::to_value(&diagnostics).unwrap_or(Value::Null),
    );
    Ok(body)
}

fn run_fixtures(config: &RunConfig) -> Result<Value, CliError> {
    if config.list {
        let entries: Vec<Value> = CATALOG
            .iter()
            .map(|(name, about)| json!({ "name": name, "description": about }))
            .collect();
        return Ok(Value::Array(entries));
    }
    let name = config
        .fixture
        .as_deref()
        .ok_or_else(|| CliError::schema("give a fixture name or --list"))?;
    Ok(fixture_document(name)?.1)
}

/// Render a report as indented `key: value` lines.
fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if v.is_object() || (v.is_array() && v.as_array().unwrap().iter().any(|x| x.is_object())) {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_text(v, indent + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}{k}: {}", inline(v));
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if item.is_object() {
                    let _ = writeln!(out, "{pad}-");
                    render_text(item, indent + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}- {}", inline(item));
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", inline(other));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn finish(config: &RunConfig, exit_code: i32, body: Value) -> RunOutcome {
    let report = match config.output {
        OutputFormat::Machine => {
            let mut s = serde_json::to_string_pretty(&body).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            render_text(&body, 0, &mut s);
            s
        }
    };
    RunOutcome { exit_code, report }
}

/// Run one command on the given input text (ignored by `fixtures`).
pub fn run(config: &RunConfig, input: &str) -> RunOutcome {
    if config.cap == 0 {
        let e = CliError::schema("--cap must be at least 1");
        return finish(config, e.exit_code, error_body(config, &e));
    }
    let result = match config.command {
        Command::CheckGla => run_check_gla(input),
        Command::Prolong => run_prolong(config, input),
        Command::Pseudo => run_pseudo(config, input),
        Command::DistFlag => run_dist_flag(config, input),
        Command::DistSymbol => run_dist_symbol(config, input),
        Command::DistPp => run_dist_pp(config, input),
        Command::Fixtures => run_fixtures(config),
    };
    match result {
        Ok(body) => {
            if config.command == Command::Fixtures {
                // Documents are always JSON so that they can be fed back in.
                let report = match (&body, config.output) {
                    (Value::Array(items), OutputFormat::Text) => items
                        .iter()
                        .map(|e| format!("{:<20} {}\n", inline(&e["name"]), inline(&e["description"])))
                        .collect(),
                    _ => serde_json::to_string_pretty(&body).expect("documents serialize") + "\n",
                };
                return RunOutcome {
                    exit_code: EXIT_OK,
                    report,
                };
            }
            let mut body = body;
            let passed = body
                .get("checks")
                .and_then(Value::as_object)
                .is_none_or(|c| c.values().all(|v| v.as_bool() != Some(false)));
            let obj = body.as_object_mut().expect("reports are objects");
            obj.insert("command".into(), json!(config.command.name()));
            obj.insert("ok".into(), json!(passed));
            finish(config, if passed { EXIT_OK } else { EXIT_VALIDATION }, body)
        }
        Err(e) => finish(config, e.exit_code, error_body(config, &e)),
    }
}

fn error_body(config: &RunConfig, e: &CliError) -> Value {
    json!({
        "command": config.command.name(),
        "ok": false,
        "error": {
            "kind": e.kind,
            "message": e.message,
            "details": e.details,
        },
    })
}
