//! Operator files and builtin operators.
//!
//! A file lists the nonzero `R^{kl}_{ij}` with 0-based indices:
//! `{"dim": 2, "q": "4", "entries": [[0, 0, 0, 0, "4"], ...]}`.

use std::fmt;
use std::fs;
use std::path::Path;

use qhom_core::arith::Scalar;
use qhom_core::operators::{make_flip, make_standard, make_standard_q, make_super, make_super_q, make_superflip, HeckeOp};
use qhom_core::Error;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    pub dim: usize,
    pub q: String,
    pub entries: Vec<(usize, usize, usize, usize, String)>,
}

impl OperatorFile {
    pub fn from_operator(op: &HeckeOp) -> Self {
        OperatorFile {
            dim: op.dim(),
            q: op.q().to_string(),
            entries: op.entries().into_iter().map(|(i, j, k, l, v)| (i, j, k, l, v.to_string())).collect(),
        }
    }

    /// Parses the scalars and validates the Hecke and Yang–Baxter equations.
    pub fn to_operator(&self) -> Result<HeckeOp, LoadError> {
        let q: Scalar = self.q.parse().map_err(|e| LoadError::Parse(format!("q: {e}")))?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for (i, j, k, l, v) in &self.entries {
            let v: Scalar = v.parse().map_err(|e| LoadError::Parse(format!("entry ({i},{j},{k},{l}): {e}")))?;
            entries.push((*i, *j, *k, *l, v));
        }
        HeckeOp::from_entries(self.dim, q, &entries).map_err(|e| match e {
            Error::DimensionMismatch { .. } => LoadError::Parse(e.to_string()),
            other => LoadError::Invalid(other),
        })
    }
}

/// Why an operator could not be obtained.
#[derive(Debug)]
pub enum LoadError {
    Io(String),
    Parse(String),
    /// The operator parsed but fails a defining identity.
    Invalid(Error),
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(m) => write!(f, "{m}"),
            LoadError::Parse(m) => write!(f, "parse error: {m}"),
            LoadError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LoadError {}

pub fn load(path: &Path) -> Result<HeckeOp, LoadError> {
    let text = fs::read_to_string(path).map_err(|e| LoadError::Io(format!("{}: {e}", path.display())))?;
    let file: OperatorFile = serde_json::from_str(&text).map_err(|e| LoadError::Parse(format!("{}: {e}", path.display())))?;
    file.to_operator()
}

/// Names accepted in place of a file: `std<d>`, `super<r><s>`, `flip<d>`,
/// `superflip<r><s>`, `scalar` (the 1-dimensional standard operator).
pub fn builtin(name: &str, q: &Scalar) -> Option<Result<HeckeOp, Error>> {
    let digits = |s: &str| -> Option<Vec<usize>> { s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect() };
    let standard = |d: usize| match q.rational_sqrt() {
        Some(p) => make_standard(d, &p),
        None => make_standard_q(d, q),
    };
    if name == "scalar" {
        return Some(standard(1));
    }
    if let Some(rest) = name.strip_prefix("superflip") {
        return match digits(rest)?.as_slice() {
            [r, s] if r + s > 0 => Some(Ok(make_superflip(*r, *s))),
            _ => None,
        };
    }
    if let Some(rest) = name.strip_prefix("super") {
        return match digits(rest)?.as_slice() {
            [r, s] if r + s > 0 => Some(match q.rational_sqrt() {
                Some(p) => make_super(*r, *s, &p),
                None => make_super_q(*r, *s, q),
            }),
            _ => None,
        };
    }
    if let Some(rest) = name.strip_prefix("flip") {
        return match digits(rest)?.as_slice() {
            [d] if *d > 0 => Some(Ok(make_flip(*d))),
            _ => None,
        };
    }
    if let Some(rest) = name.strip_prefix("std") {
        return match digits(rest)?.as_slice() {
            [d] if *d > 0 => Some(standard(*d)),
            _ => None,
        };
    }
    None
}

/// A path if it exists, else a builtin name; `q` only affects builtins.
pub fn resolve(spec: &str, q: &Scalar) -> Result<HeckeOp, LoadError> {
    let path = Path::new(spec);
    if path.exists() {
        return load(path);
    }
    match builtin(spec, q) {
        Some(op) => op.map_err(LoadError::Invalid),
        None => Err(LoadError::Io(format!("{spec}: no such file or builtin operator"))),
    }
}
