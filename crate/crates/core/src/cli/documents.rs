//! JSON documents read and written by the command-line driver.
//!
//! Rationals are written as strings (`"-1/2"`); integers are also accepted
//! on input. Degrees are object keys, so they are strings as well.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::distflag::{DistributionModel, Fibration, Polynomial, PolyVectorField};
use crate::exactla::{format_rational, parse_rational, Rational, Subspace};
use crate::gla::{make_gla, BasisIndex, BracketEntry, GradedLieAlgebra, GradedVectorSpace};
use crate::pseudoprod::{make_pp_symbol, PseudoProductSymbol};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    pub fn from_rational(q: &Rational) -> Self {
        Number::Text(format_rational(q))
    }

    pub fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Number::Int(i) => Ok(Rational::from_integer((*i).into())),
            Number::Text(s) => parse_rational(s).map_err(|e| CliError::schema(e.to_string())),
        }
    }
}

/// A basis vector, by name or by `(degree, offset)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisRef {
    Name(String),
    Index { degree: i32, offset: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub left: BasisRef,
    pub right: BasisRef,
    pub result: Vec<(BasisRef, Number)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlaDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub degrees: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub degrees: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    pub e_basis: Vec<Vec<Number>>,
    pub f_basis: Vec<Vec<Number>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorFieldDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub n_vars: usize,
    pub var_names: Vec<String>,
    pub fields: Vec<Vec<String>>,
    pub base_point: Vec<Number>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub n_vars: usize,
    pub var_names: Vec<String>,
    #[serde(rename = "E_fields")]
    pub e_fields: Vec<Vec<String>>,
    #[serde(rename = "F_fields")]
    pub f_fields: Vec<Vec<String>>,
    pub base_point: Vec<Number>,
}

fn check_kind(kind: &Option<String>, expected: &str) -> Result<(), CliError> {
    match kind {
        Some(k) if k != expected => Err(CliError::schema(format!(
            "document kind `{k}` where `{expected}` was expected"
        ))),
        _ => Ok(()),
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::schema(format!("invalid document: {e}")))
}

fn parse_degree(key: &str) -> Result<i32, CliError> {
    key.trim()
        .parse()
        .map_err(|_| CliError::schema(format!("degree key `{key}` is not an integer")))
}

fn build_gla(
    degrees: &BTreeMap<String, usize>,
    basis_names: &Option<BTreeMap<String, Vec<String>>>,
    brackets: &[BracketDoc],
) -> Result<GradedLieAlgebra, CliError> {
    let mut dims = BTreeMap::new();
    for (k, d) in degrees {
        if dims.insert(parse_degree(k)?, *d).is_some() {
            return Err(CliError::schema(format!("degree {k} listed twice")));
        }
    }
    if dims.is_empty() {
        return Err(CliError::schema("no degrees given"));
    }
    let space = GradedVectorSpace::from_map(&dims).map_err(CliError::from_gla)?;
    let mut names: Vec<String> = (0..space.total_dim())
        .map(|g| {
            let b = space.basis_index(g);
            format!("g{}[{}]", b.degree, b.offset)
        })
        .collect();
    if let Some(given) = basis_names {
        for (k, list) in given {
            let d = parse_degree(k)?;
            if d < space.min_degree() || d > space.max_degree() || list.len() != space.dim(d) {
                return Err(CliError::schema(format!(
                    "basis_names for degree {d} do not match its dimension"
                )));
            }
            for (o, name) in list.iter().enumerate() {
                names[space.range(d).start + o] = name.clone();
            }
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for n in &names {
        if !seen.insert(n) {
            return Err(CliError::schema(format!("basis name `{n}` used twice")));
        }
    }
    let resolve = |r: &BasisRef| -> Result<BasisIndex, CliError> {
        match r {
            BasisRef::Name(n) => names
                .iter()
                .position(|x| x == n)
                .map(|g| space.basis_index(g))
                .ok_or_else(|| CliError::schema(format!("unknown basis vector `{n}`"))),
            BasisRef::Index { degree, offset } => {
                let b = BasisIndex::new(*degree, *offset);
                space.index(b).map_err(CliError::from_gla)?;
                Ok(b)
            }
        }
    };
    let mut entries = Vec::new();
    for br in brackets {
        let mut result = Vec::new();
        for (r, c) in &br.result {
            result.push((resolve(r)?, c.to_rational()?));
        }
        entries.push(BracketEntry {
            left: resolve(&br.left)?,
            right: resolve(&br.right)?,
            result,
        });
    }
    make_gla(space, Some(names), &entries).map_err(CliError::from_gla)
}

pub fn gla_from_doc(doc: &GlaDoc) -> Result<GradedLieAlgebra, CliError> {
    check_kind(&doc.kind, "gla")?;
    build_gla(&doc.degrees, &doc.basis_names, &doc.brackets)
}

fn gla_parts(
    g: &GradedLieAlgebra,
) -> (BTreeMap<String, usize>, BTreeMap<String, Vec<String>>, Vec<BracketDoc>) {
    let space = g.space();
    let degrees = space
        .degrees()
        .filter(|&d| space.dim(d) > 0)
        .map(|d| (d.to_string(), space.dim(d)))
        .collect();
    let names = space
        .degrees()
        .filter(|&d| space.dim(d) > 0)
        .map(|d| (d.to_string(), g.names()[space.range(d)].to_vec()))
        .collect();
    let name_of = |b: BasisIndex| BasisRef::Name(g.name(space.index(b).expect("own basis")).to_string());
    let brackets = g
        .entries()
        .into_iter()
        .map(|e| BracketDoc {
            left: name_of(e.left),
            right: name_of(e.right),
            result: e
                .result
                .iter()
                .map(|(b, c)| (name_of(*b), Number::from_rational(c)))
                .collect(),
        })
        .collect();
    (degrees, names, brackets)
}

pub fn gla_to_doc(g: &GradedLieAlgebra) -> GlaDoc {
    let (degrees, names, brackets) = gla_parts(g);
    GlaDoc {
        kind: Some("gla".into()),
        degrees,
        basis_names: Some(names),
        brackets,
    }
}

fn subspace_from(vectors: &[Vec<Number>], dim: usize, which: &str) -> Result<Subspace, CliError> {
    let mut basis = Vec::new();
    for v in vectors {
        if v.len() != dim {
            return Err(CliError::schema(format!(
                "{which} vector has {} entries, degree -1 has dimension {dim}",
                v.len()
            )));
        }
        basis.push(v.iter().map(Number::to_rational).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Subspace::span(dim, basis))
}

fn vectors_of(s: &Subspace) -> Vec<Vec<Number>> {
    s.basis()
        .iter()
        .map(|v| v.iter().map(Number::from_rational).collect())
        .collect()
}

pub fn pp_from_doc(doc: &PseudoDoc) -> Result<PseudoProductSymbol, CliError> {
    check_kind(&doc.kind, "pseudo")?;
    let g = build_gla(&doc.degrees, &doc.basis_names, &doc.brackets)?;
    let d1 = g.space().dim(-1);
    let e = subspace_from(&doc.e_basis, d1, "e_basis")?;
    let f = subspace_from(&doc.f_basis, d1, "f_basis")?;
    if e.dim() != doc.e_basis.len() || f.dim() != doc.f_basis.len() {
        return Err(CliError::validation(
            "NotDirectSum",
            "e_basis or f_basis vectors are linearly dependent",
            serde_json::Value::Null,
        ));
    }
    make_pp_symbol(g, e, f).map_err(CliError::from_pseudo)
}

pub fn pp_to_doc(s: &PseudoProductSymbol) -> PseudoDoc {
    let (degrees, names, brackets) = gla_parts(s.minus());
    PseudoDoc {
        kind: Some("pseudo".into()),
        degrees,
        basis_names: Some(names),
        brackets,
        e_basis: vectors_of(s.e()),
        f_basis: vectors_of(s.f()),
    }
}

fn fields_from(texts: &[Vec<String>], names: &[String]) -> Result<Vec<PolyVectorField>, CliError> {
    texts
        .iter()
        .map(|comps| {
            if comps.len() != names.len() {
                return Err(CliError::schema(format!(
                    "field has {} components for {} variables",
                    comps.len(),
                    names.len()
                )));
            }
            let polys = comps
                .iter()
                .map(|c| Polynomial::parse(c, names).map_err(CliError::from_dist))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PolyVectorField::new(polys))
        })
        .collect()
}

fn fields_to(fields: &[PolyVectorField], names: &[String]) -> Vec<Vec<String>> {
    fields
        .iter()
        .map(|f| f.components().iter().map(|p| p.format(names)).collect())
        .collect()
}

fn check_vars(n_vars: usize, names: &[String], point: &[Number]) -> Result<Vec<Rational>, CliError> {
    if names.len() != n_vars || point.len() != n_vars {
        return Err(CliError::schema(format!(
            "n_vars is {n_vars} but {} names and {} base point coordinates are given",
            names.len(),
            point.len()
        )));
    }
    point.iter().map(Number::to_rational).collect()
}

pub fn model_from_doc(doc: &VectorFieldDoc) -> Result<DistributionModel, CliError> {
    check_kind(&doc.kind, "vector-fields")?;
    let point = check_vars(doc.n_vars, &doc.var_names, &doc.base_point)?;
    let fields = fields_from(&doc.fields, &doc.var_names)?;
    DistributionModel::new(doc.var_names.clone(), fields, point).map_err(CliError::from_dist)
}

pub fn model_to_doc(m: &DistributionModel) -> VectorFieldDoc {
    VectorFieldDoc {
        kind: Some("vector-fields".into()),
        n_vars: m.n_vars(),
        var_names: m.var_names().to_vec(),
        fields: fields_to(m.generators(), m.var_names()),
        base_point: m.base_point().iter().map(Number::from_rational).collect(),
    }
}

pub fn fibration_from_doc(doc: &FibrationDoc) -> Result<Fibration, CliError> {
    check_kind(&doc.kind, "fibration")?;
    let point = check_vars(doc.n_vars, &doc.var_names, &doc.base_point)?;
    Ok(Fibration {
        var_names: doc.var_names.clone(),
        e_fields: fields_from(&doc.e_fields, &doc.var_names)?,
        f_fields: fields_from(&doc.f_fields, &doc.var_names)?,
        base_point: point,
    })
}

pub fn fibration_to_doc(f: &Fibration) -> FibrationDoc {
    FibrationDoc {
        kind: Some("fibration".into()),
        n_vars: f.var_names.len(),
        var_names: f.var_names.clone(),
        e_fields: fields_to(&f.e_fields, &f.var_names),
        f_fields: fields_to(&f.f_fields, &f.var_names),
        base_point: f.base_point.iter().map(Number::from_rational).collect(),
    }
}
