//! File formats and command implementations behind the `flagtype` binary.
//!
//! Every command returns an [`Output`] carrying the text to print and the
//! process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or a finite / consistent verdict |
//! | 1 | input error (parse, I/O, out-of-range node or letter) |
//! | 2 | the input contradicts finiteness (affine or indefinite) |
//! | 3 | an intersection matrix no rank-two contraction can realize |
//!
//! JSON is compact with keys in a fixed order; node indices are 1-based and
//! rationals are printed as integers or `"p/q"` strings.

pub mod commands;
pub mod dot;
pub mod dsl;
pub mod report;

use flagtype_core::CartanMatrix;

pub use commands::*;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("{0}")]
    NotFinite(String),
    #[error("{0}")]
    NotRealizable(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(..) => 1,
            CliError::NotFinite(_) => 2,
            CliError::NotRealizable(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

/// Global options shared by all subcommands.
#[derive(Debug, Clone, Default)]
pub struct Request {
    pub format: Format,
    pub matrix: Option<String>,
    pub diagram: Option<String>,
    pub mark: Option<String>,
}

/// A resolved diagram: the matrix, its DSL name when it came from one, and
/// the marking if any was given.
#[derive(Debug, Clone)]
pub struct DiagramSpec {
    pub matrix: CartanMatrix,
    pub label: Option<String>,
    pub marked: Option<Vec<usize>>,
}

impl DiagramSpec {
    fn from_source(text: &str) -> Result<Self, CliError> {
        let text = dsl::read_arg(text)?;
        let t = text.trim();
        if t.starts_with('{') {
            if let Ok(md) = serde_json::from_str::<dsl::MarkedJson>(t) {
                let mut spec = Self::from_dsl(&md.diagram)?;
                spec.marked = md.marked;
                return Ok(spec);
            }
        }
        if t.starts_with('[') || t.starts_with('{') {
            return Ok(Self {
                matrix: dsl::parse_matrix(t)?,
                label: None,
                marked: None,
            });
        }
        Self::from_dsl(t)
    }

    fn from_dsl(text: &str) -> Result<Self, CliError> {
        let types = dsl::parse_types(text)?;
        Ok(Self {
            matrix: dsl::matrix_of_types(&types),
            label: Some(dsl::types_label(&types)),
            marked: None,
        })
    }

    /// The marking, checked against the rank.
    pub fn checked_marking(&self) -> Result<Option<Vec<usize>>, CliError> {
        self.marked
            .as_deref()
            .map(|m| self.matrix.check_nodes(m).map_err(CliError::from))
            .transpose()
    }
}

impl Request {
    /// Exactly one of the positional spec, `--diagram` and `--matrix` must be
    /// present; `--mark` overrides a marking given inside the spec.
    pub fn resolve(&self, positional: Option<&str>) -> Result<DiagramSpec, CliError> {
        let mut spec = match (positional, self.diagram.as_deref(), self.matrix.as_deref()) {
            (Some(s), None, None) | (None, Some(s), None) => DiagramSpec::from_source(s)?,
            (None, None, Some(s)) => DiagramSpec {
                matrix: dsl::parse_matrix(&dsl::read_arg(s)?)?,
                label: None,
                marked: None,
            },
            (None, None, None) => {
                return Err(CliError::Input(
                    "no diagram given (pass a spec such as A3, --diagram or --matrix)".into(),
                ))
            }
            _ => {
                return Err(CliError::Input(
                    "give only one of a positional spec, --diagram and --matrix".into(),
                ))
            }
        };
        if let Some(m) = &self.mark {
            spec.marked = Some(dsl::parse_nodes(m)?);
        }
        Ok(spec)
    }
}
