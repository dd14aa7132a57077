use serde_json::Value;

use super::documents::{fibration_to_doc, gla_to_doc, model_to_doc, pp_to_doc};
use super::{CliError, Command};
use crate::distflag::gr_tautological_fixture;
use crate::fixtures;

/// Catalog entries as listed by `fixtures --list`. `m`, `n`, `c` stand for
/// positive integers.
pub const CATALOG: &[(&str, &str)] = &[
    ("heisenberg", "three-dimensional Heisenberg algebra"),
    ("heisenberg-csp", "Heisenberg algebra with its conformal symplectic degree-zero part"),
    ("abelian-n", "Q^n in degree -1"),
    ("gl-symbol", "Q^2 with gl(2) in degree zero"),
    ("so-symbol", "Q^3 with so(3) in degree zero"),
    ("co-symbol", "Q^3 with co(3) in degree zero"),
    ("ode2-pp", "pseudo-product symbol of y'' = 0"),
    ("split-abelian-pp", "Q^2 split into coordinate lines"),
    ("jet-pp-m-c", "pseudo-product symbol of first-order jets Q^m -> Q^c"),
    ("contact-vf", "contact distribution on Q^3"),
    ("engel-vf", "Engel distribution on Q^4"),
    ("gr-taut-m-c", "tautological distribution in jet coordinates"),
    ("jet-fibration", "vertical and horizontal fibrations of first-order jets Q -> Q"),
    ("jet-fibration-m-c", "the same for jets Q^m -> Q^c"),
    ("plane-fibration", "coordinate fibrations of Q^2"),
    ("twisted-fibration", "a non-integrable F, caught at sample points"),
];

fn numbers(rest: &str, count: usize) -> Option<Vec<usize>> {
    let parts: Vec<usize> = rest
        .split('-')
        .map(|p| p.parse().ok().filter(|v: &usize| (1..=8).contains(v)))
        .collect::<Option<_>>()?;
    (parts.len() == count).then_some(parts)
}

fn to_value<T: serde::Serialize>(doc: &T) -> Value {
    serde_json::to_value(doc).expect("documents serialize")
}

/// The document for a catalog entry and the command that validates it.
pub fn fixture_document(name: &str) -> Result<(Command, Value), CliError> {
    let doc = match name {
        "heisenberg" => (Command::CheckGla, to_value(&gla_to_doc(&fixtures::heisenberg()))),
        "heisenberg-csp" => (Command::Prolong, to_value(&gla_to_doc(&fixtures::heisenberg_csp()))),
        "gl-symbol" => (Command::Prolong, to_value(&gla_to_doc(&fixtures::gl_symbol()))),
        "so-symbol" => (Command::Prolong, to_value(&gla_to_doc(&fixtures::so_symbol()))),
        "co-symbol" => (Command::Prolong, to_value(&gla_to_doc(&fixtures::co_symbol()))),
        "ode2-pp" => (Command::Pseudo, to_value(&pp_to_doc(&fixtures::ode2_pp()))),
        "split-abelian-pp" => (Command::Pseudo, to_value(&pp_to_doc(&fixtures::split_abelian_pp()))),
        "contact-vf" => (Command::DistSymbol, to_value(&model_to_doc(&fixtures::contact_vf()))),
        "engel-vf" => (Command::DistSymbol, to_value(&model_to_doc(&fixtures::engel_vf()))),
        "jet-fibration" => (Command::DistPp, to_value(&fibration_to_doc(&fixtures::jet_fibration(1, 1)))),
        "plane-fibration" => (Command::DistPp, to_value(&fibration_to_doc(&fixtures::plane_fibration()))),
        "twisted-fibration" => (Command::DistPp, to_value(&fibration_to_doc(&fixtures::twisted_fibration()))),
        _ => {
            let unknown = || CliError::unknown_fixture(name);
            if let Some(rest) = name.strip_prefix("abelian-") {
                let n = numbers(rest, 1).ok_or_else(unknown)?;
                (Command::CheckGla, to_value(&gla_to_doc(&fixtures::abelian(n[0]))))
            } else if let Some(rest) = name.strip_prefix("jet-pp-") {
                let v = numbers(rest, 2).ok_or_else(unknown)?;
                (Command::Pseudo, to_value(&pp_to_doc(&fixtures::jet_pp(v[0], v[1]))))
            } else if let Some(rest) = name.strip_prefix("gr-taut-") {
                let v = numbers(rest, 2).ok_or_else(unknown)?;
                (Command::DistFlag, to_value(&model_to_doc(&gr_tautological_fixture(v[0], v[1]))))
            } else if let Some(rest) = name.strip_prefix("jet-fibration-") {
                let v = numbers(rest, 2).ok_or_else(unknown)?;
                (Command::DistPp, to_value(&fibration_to_doc(&fixtures::jet_fibration(v[0], v[1]))))
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(doc)
}

/// Concrete instances of every catalog pattern, used for round-trip checks.
pub fn sample_fixture_names() -> Vec<String> {
    let mut out = Vec::new();
    for (name, _) in CATALOG {
        match *name {
            "abelian-n" => out.push("abelian-3".to_string()),
            "jet-pp-m-c" => out.extend(["jet-pp-1-1", "jet-pp-1-2", "jet-pp-2-1"].map(String::from)),
            "gr-taut-m-c" => out.extend(["gr-taut-1-1", "gr-taut-1-2", "gr-taut-2-1", "gr-taut-2-2"].map(String::from)),
            "jet-fibration-m-c" => out.push("jet-fibration-2-1".to_string()),
            other => out.push(other.to_string()),
        }
    }
    out
}
