//! Verification campaigns over the constructions in `osdrazin`.
//!
//! A campaign runs one registered theorem id for a number of seeded trials
//! and folds the per-trial [`VerificationReport`]s into an [`Aggregate`].

pub mod campaign;
pub mod instance;
pub mod registry;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use osdrazin::ScalarKind;

pub use campaign::{aggregate, run_campaign, Aggregate, CampaignOutcome};
pub use instance::{gen_instance, verify_instance, GenParams};
pub use registry::{lookup, TheoremEntry, REGISTRY};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown theorem id `{0}` (see `osdrazin list`)")]
    UnknownTheorem(String),

    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Io(String),

    #[error(transparent)]
    Core(#[from] osdrazin::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownTheorem(_) | CliError::Usage(_) => ExitStatus::Usage as i32,
            CliError::Io(_) | CliError::Core(_) => ExitStatus::Failure as i32,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Pass = 0,
    Failure = 1,
    Usage = 2,
    Budget = 3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub theorem: String,
    pub trials: u64,
    pub dim: usize,
    pub scalar: ScalarKind,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_seconds: Option<u64>,
}

impl CampaignConfig {
    pub fn new(theorem: impl Into<String>) -> Self {
        CampaignConfig {
            theorem: theorem.into(),
            trials: 100,
            dim: 3,
            scalar: ScalarKind::Rational,
            seed: 0,
            family: None,
            budget_seconds: None,
        }
    }

    pub fn validate(&self) -> CliResult<&'static TheoremEntry> {
        let entry = lookup(&self.theorem).ok_or_else(|| CliError::UnknownTheorem(self.theorem.clone()))?;
        if self.trials == 0 {
            return Err(CliError::Usage("--trials must be at least 1".into()));
        }
        if self.dim == 0 {
            return Err(CliError::Usage("--dim must be at least 1".into()));
        }
        if self.budget_seconds == Some(0) {
            return Err(CliError::Usage("--budget-seconds must be positive".into()));
        }
        entry.scalars.admit(self.scalar, entry.id)?;
        Ok(entry)
    }
}
