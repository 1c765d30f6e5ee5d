//! Witness and verification-report records shared by every module.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Which side an operation works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessSide {
    Left,
    Right,
    TwoSided,
}

impl From<Side> for WitnessSide {
    fn from(s: Side) -> Self {
        match s {
            Side::Left => WitnessSide::Left,
            Side::Right => WitnessSide::Right,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Regular,
    PiRegular,
    StronglyPiRegular,
    Drazin,
    Group,
    GeneralizedDrazin,
}

/// An inverse candidate together with what it claims to witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub candidate: SquareMatrix,
    pub side: WitnessSide,
    pub kind: WitnessKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

impl Witness {
    pub fn new(candidate: SquareMatrix, side: impl Into<WitnessSide>, kind: WitnessKind, index: Option<usize>) -> Result<Self> {
        if kind == WitnessKind::Group && index != Some(1) {
            return Err(Error::InvariantViolation(format!(
                "group witness must carry index 1, got {index:?}"
            )));
        }
        Ok(Witness { candidate, side: side.into(), kind, index })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Per-trial verification record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance_id: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub indices: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// The instance matrices, so a failing record reproduces on its own.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub inputs: BTreeMap<String, SquareMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_micros: Option<u64>,
}

impl VerificationReport {
    pub fn new(instance_id: impl Into<String>) -> Self {
        VerificationReport {
            instance_id: instance_id.into(),
            checks: Vec::new(),
            witness: None,
            indices: BTreeMap::new(),
            notes: Vec::new(),
            inputs: BTreeMap::new(),
            elapsed_micros: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed });
        self
    }

    pub fn index(&mut self, name: impl Into<String>, value: impl TryInto<i64>) -> &mut Self {
        let v = value.try_into().unwrap_or(i64::MAX);
        self.indices.insert(name.into(), v);
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn input(&mut self, name: impl Into<String>, m: &SquareMatrix) -> &mut Self {
        self.inputs.insert(name.into(), m.clone());
        self
    }

    /// True when at least one check ran and none failed.
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str())
    }

    /// One JSON record, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let r: Self = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
        if r.checks.is_empty() {
            return Err(Error::Parse(format!("report `{}` has no checks", r.instance_id)));
        }
        Ok(r)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.instance_id)?;
        for c in &self.checks {
            write!(f, " {}={}", c.name, if c.passed { "ok" } else { "FAILED" })?;
        }
        Ok(())
    }
}
