//! JSON documents for matrices and instances.
//!
//! A matrix is stored as `{"dim": n, "scalar": "rational", "entries": [[..]]}`
//! with every entry a string (`"p/q"`, `"p/q+r/s i"` or a residue), which
//! round-trips exactly.

use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::{Scalar, ScalarKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub dim: usize,
    pub scalar: ScalarKind,
    pub entries: Vec<Vec<String>>,
}

impl From<&SquareMatrix> for MatrixDoc {
    fn from(m: &SquareMatrix) -> Self {
        MatrixDoc {
            dim: m.dim(),
            scalar: m.kind(),
            entries: m.rows().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        }
    }
}

impl TryFrom<MatrixDoc> for SquareMatrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self> {
        if doc.entries.len() != doc.dim || doc.entries.iter().any(|r| r.len() != doc.dim) {
            return Err(Error::Parse(format!("entries do not form a {0}x{0} grid", doc.dim)));
        }
        let rows = doc
            .entries
            .iter()
            .map(|r| r.iter().map(|e| Scalar::parse(doc.scalar, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SquareMatrix::from_rows(rows)
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDoc::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(d)?;
        SquareMatrix::try_from(doc).map_err(serde::de::Error::custom)
    }
}

/// A generated problem instance as stored on disk. Invariants of the typed
/// wrappers (quads, pairs) are re-checked when the instance is loaded into
/// them, not here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Instance {
    Quad { a: SquareMatrix, b: SquareMatrix, c: SquareMatrix, d: SquareMatrix },
    Pair { a: SquareMatrix, b: SquareMatrix, n: usize },
    Matrix { a: SquareMatrix },
    Ring { dim: usize, modulus: u64 },
}

impl Instance {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }
}

pub fn matrix_to_json(m: &SquareMatrix) -> String {
    serde_json::to_string(m).expect("matrices always serialize")
}

pub fn matrix_from_json(s: &str) -> Result<SquareMatrix> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
