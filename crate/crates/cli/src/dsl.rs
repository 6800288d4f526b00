//! Diagram DSL and the other textual inputs.
//!
//! ```text
//! TYPE := [A-G] INTEGER
//! SPEC := TYPE ("x" TYPE)*
//! ```
//!
//! `A2xA1` is the disjoint union of `A2` and `A1`, nodes numbered
//! consecutively from the left.

use std::fs;

use flagtype_core::{CartanError, CartanMatrix, CartanType, Family};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub fn parse_types(spec: &str) -> Result<Vec<CartanType>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(CliError::Input("empty diagram spec".into()));
    }
    spec.split('x').map(parse_type).collect()
}

fn parse_type(token: &str) -> Result<CartanType, CliError> {
    let bad = || {
        CliError::Input(format!(
            "bad diagram token `{token}` (expected e.g. A3 or G2)"
        ))
    };
    let mut chars = token.chars();
    let family = chars
        .next()
        .filter(char::is_ascii_uppercase)
        .and_then(Family::from_letter)
        .ok_or_else(bad)?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let rank: usize = digits.parse().map_err(|_| bad())?;
    CartanType::new(family, rank)
        .map_err(|e| CliError::Input(format!("bad diagram token `{token}`: {e}")))
}

pub fn types_label(types: &[CartanType]) -> String {
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

pub fn matrix_of_types(types: &[CartanType]) -> CartanMatrix {
    let blocks: Vec<CartanMatrix> = types.iter().map(|t| t.cartan_matrix()).collect();
    CartanMatrix::direct_sum(&blocks).expect("catalog blocks are valid")
}

/// `@path` reads the file; anything else is taken literally.
pub fn read_arg(s: &str) -> Result<String, CliError> {
    match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e)),
        None => Ok(s.to_string()),
    }
}

/// A bare array of rows or `{"matrix": rows}`; errors name the entry.
pub fn parse_matrix_rows(text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let bad = |what: String| CliError::Input(format!("bad matrix: {what}"));
    let value: Value = serde_json::from_str(text.trim()).map_err(|e| bad(e.to_string()))?;
    let rows = match &value {
        Value::Object(o) => o
            .get("matrix")
            .ok_or_else(|| bad("missing key \"matrix\"".into()))?,
        v => v,
    };
    let rows = rows
        .as_array()
        .ok_or_else(|| bad("expected an array of rows".into()))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row
                .as_array()
                .ok_or_else(|| bad(format!("row {} is not an array", i + 1)))?;
            row.iter()
                .enumerate()
                .map(|(j, x)| {
                    x.as_i64().ok_or_else(|| {
                        bad(format!(
                            "entry ({},{}) = {x} is not an integer",
                            i + 1,
                            j + 1
                        ))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn parse_matrix(text: &str) -> Result<CartanMatrix, CliError> {
    Ok(CartanMatrix::new(&parse_matrix_rows(text)?)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkedJson {
    pub diagram: String,
    #[serde(default)]
    pub marked: Option<Vec<usize>>,
}

/// Node lists: `1,4`, `1 4` or `[1,4]`.
pub fn parse_nodes(s: &str) -> Result<Vec<usize>, CliError> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .filter(|&i| i > 0)
                .ok_or_else(|| CliError::Input(format!("bad node `{t}` (nodes are 1-based)")))
        })
        .collect()
}

pub fn parse_word(tokens: &[String]) -> Result<Vec<usize>, CliError> {
    tokens
        .iter()
        .map(|t| parse_nodes(t))
        .try_fold(Vec::new(), |mut acc, part| {
            acc.extend(part?);
            Ok(acc)
        })
}

impl From<CartanError> for CliError {
    fn from(e: CartanError) -> Self {
        CliError::Input(e.to_string())
    }
}
