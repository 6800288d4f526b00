//! Serialized report shapes. Field order here is the key order on output.

use flagtype_core::cartan::Component;
use flagtype_core::linalg::Rational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Integers stay numbers when they fit in `i64`; everything else is a
/// `"p/q"` (or big-integer) string.
pub fn rational(r: &Rational) -> Value {
    let s = r.to_string();
    s.parse::<i64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

pub fn rationals(v: &[Rational]) -> Vec<Value> {
    v.iter().map(rational).collect()
}

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub cartan_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub nodes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induction: Option<Vec<StepJson>>,
}

impl ComponentJson {
    pub fn of(c: &Component) -> Self {
        Self {
            cartan_type: c.cartan_type.map(|t| t.to_string()),
            kind: (c.kind != flagtype_core::Kind::Finite).then(|| c.kind.to_string()),
            nodes: c.nodes.clone(),
            dimension: None,
            kernel: c.kernel.clone(),
            induction: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ViolationJson {
    pub nodes: Vec<usize>,
    pub kind: String,
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<i64>>,
    pub components: Vec<ComponentJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationJson>,
}

#[derive(Debug, Serialize)]
pub struct FiltrationJson {
    pub k: usize,
    pub j: usize,
    pub l: usize,
}

#[derive(Debug, Serialize)]
pub struct RootsReport {
    pub rank: usize,
    pub count: usize,
    pub roots: Vec<Vec<i64>>,
    pub heights: Vec<i64>,
    pub anticanonical: Vec<Value>,
    pub filtration: Vec<FiltrationJson>,
}

#[derive(Debug, Serialize)]
pub struct CoefficientJson {
    pub node: usize,
    pub coefficient: i64,
}

#[derive(Debug, Serialize)]
pub struct DimReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    pub marked: Vec<usize>,
    pub dimension: usize,
    pub full_dimension: usize,
    pub ample_weight: Vec<i64>,
    pub relative_canonical: Vec<CoefficientJson>,
}

#[derive(Debug, Serialize)]
pub struct ChainReport {
    pub dimension: usize,
    pub saturated: bool,
    pub reduced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct HeckeWordsReport {
    pub word: Vec<usize>,
    pub length: usize,
    pub count: usize,
    pub reduced_words: Vec<Vec<usize>>,
}

/// `{"I": [...], "i": k}`.
#[derive(Debug, Serialize)]
pub struct StepJson {
    #[serde(rename = "I")]
    pub marked: Vec<usize>,
    #[serde(rename = "i")]
    pub node: usize,
}

#[derive(Debug, Serialize)]
pub struct InductReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    pub start: Vec<usize>,
    pub sequence: Option<Vec<StepJson>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FtInput {
    pub intersection_matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize)]
pub struct FtReportJson {
    pub verdict: String,
    pub components: Vec<ComponentJson>,
    pub dimension_bound: Option<usize>,
    pub affine_witness: Option<Vec<i64>>,
    pub consistency: String,
    pub violation: Option<ViolationJson>,
}

#[derive(Debug, Serialize)]
pub struct Pic2Report {
    pub nu: [u32; 2],
    #[serde(rename = "type")]
    pub class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invalid: Option<String>,
    pub degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basechange: Option<[[Value; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminants: Option<[Option<Value>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cos_identity: Option<bool>,
    pub admissible_degrees: Vec<u32>,
}

#[derive(Debug, Serialize)]
pub struct EdgeJson {
    pub nodes: [usize; 2],
    pub multiplicity: u8,
    pub arrow_to: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct DiagramReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    pub edges: Vec<EdgeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marked: Option<Vec<usize>>,
}
