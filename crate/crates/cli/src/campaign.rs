//! Running campaigns and folding per-trial records into an aggregate.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use osdrazin::par::map_trials_until;
use osdrazin::{Side, VerificationReport};

use crate::registry::{Family, TrialCtx};
use crate::{CampaignConfig, CliResult, ExitStatus};

/// Summary of a campaign. Contains no timings, so identical configs give
/// byte-identical aggregates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregate {
    pub theorem: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<CampaignConfig>,
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    /// Trials not started because the time budget ran out.
    pub skipped: u64,
    /// Failure count per check name.
    pub failed_checks: BTreeMap<String, u64>,
    /// Per index name, how often each value was observed.
    pub indices: BTreeMap<String, BTreeMap<i64, u64>>,
    pub notes: BTreeMap<String, u64>,
    /// Failing records in full.
    pub counterexamples: Vec<VerificationReport>,
}

impl Aggregate {
    pub fn status(&self) -> ExitStatus {
        if self.failed > 0 {
            ExitStatus::Failure
        } else if self.skipped > 0 {
            ExitStatus::Budget
        } else {
            ExitStatus::Pass
        }
    }

    pub fn to_structured(&self) -> String {
        serde_json::to_string_pretty(self).expect("aggregates always serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = match self.status() {
            ExitStatus::Pass => "PASS",
            ExitStatus::Budget => "BUDGET EXCEEDED",
            _ => "FAIL",
        };
        let _ = writeln!(out, "{}: {verdict}", self.theorem);
        if let Some(c) = &self.config {
            let family = c.family.as_deref().unwrap_or("default");
            let _ = writeln!(out, "  config: dim {} scalar {} seed {} family {family}", c.dim, c.scalar, c.seed);
        }
        let _ = writeln!(
            out,
            "  trials {}: passed {}, failed {}, skipped {}",
            self.trials, self.passed, self.failed, self.skipped
        );
        for (name, hist) in &self.indices {
            let values: Vec<String> = hist.iter().map(|(v, n)| format!("{v} x{n}")).collect();
            let _ = writeln!(out, "  index {name}: {}", values.join(", "));
        }
        for (name, n) in &self.failed_checks {
            let _ = writeln!(out, "  failed check {name}: {n}");
        }
        for (note, n) in &self.notes {
            let _ = writeln!(out, "  note x{n}: {note}");
        }
        for r in &self.counterexamples {
            let _ = writeln!(out, "  counterexample {r}");
            for note in &r.notes {
                let _ = writeln!(out, "    note: {note}");
            }
            for (name, m) in &r.inputs {
                let _ = writeln!(out, "    {name} = {m}");
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "    witness = {}", w.candidate);
            }
        }
        out
    }
}

/// Folds records into an aggregate. `skipped` counts trials that never ran.
pub fn aggregate(theorem: &str, config: Option<CampaignConfig>, records: &[VerificationReport], skipped: u64) -> Aggregate {
    let mut agg = Aggregate {
        theorem: theorem.to_string(),
        config,
        trials: records.len() as u64 + skipped,
        passed: 0,
        failed: 0,
        skipped,
        failed_checks: BTreeMap::new(),
        indices: BTreeMap::new(),
        notes: BTreeMap::new(),
        counterexamples: Vec::new(),
    };
    for r in records {
        if r.passed() {
            agg.passed += 1;
        } else {
            agg.failed += 1;
            for name in r.failed_checks() {
                *agg.failed_checks.entry(name.to_string()).or_default() += 1;
            }
            let mut r = r.clone();
            r.elapsed_micros = None;
            agg.counterexamples.push(r);
        }
        for (name, v) in &r.indices {
            *agg.indices.entry(name.clone()).or_default().entry(*v).or_default() += 1;
        }
        for note in &r.notes {
            *agg.notes.entry(note.clone()).or_default() += 1;
        }
    }
    agg
}

pub struct CampaignOutcome {
    pub aggregate: Aggregate,
    /// Per-trial records in trial order.
    pub records: Vec<VerificationReport>,
    pub elapsed: Duration,
}

impl CampaignOutcome {
    pub fn status(&self) -> ExitStatus {
        self.aggregate.status()
    }
}

/// Runs every trial of `cfg` and aggregates. A construction error inside a
/// trial is a failed trial, not an error of the campaign.
pub fn run_campaign(cfg: &CampaignConfig) -> CliResult<CampaignOutcome> {
    let entry = cfg.validate()?;
    let family = Family::resolve(entry.generator, cfg)?;
    let trials = family.trial_count(cfg.trials);
    let start = Instant::now();
    let deadline = cfg.budget_seconds.map(|s| start + Duration::from_secs(s));
    let side = entry.side.unwrap_or(Side::Left);
    let results = map_trials_until(trials, deadline, |trial| {
        let ctx = TrialCtx { cfg, family: &family, side, trial };
        let mut rep = VerificationReport::new(format!("{}#{trial}", entry.id));
        if let Err(e) = (entry.run)(&ctx, &mut rep) {
            rep.check("construction", false);
            rep.note(format!("error: {e}"));
        }
        rep
    });
    let skipped = results.iter().filter(|r| r.is_none()).count() as u64;
    let records: Vec<VerificationReport> = results.into_iter().flatten().collect();
    let aggregate = aggregate(entry.id, Some(cfg.clone()), &records, skipped);
    Ok(CampaignOutcome { aggregate, records, elapsed: start.elapsed() })
}

/// Reads JSON-lines records and aggregates them per theorem id, taken from
/// the part of each `instance_id` before `#`.
pub fn aggregate_records(text: &str) -> CliResult<Vec<Aggregate>> {
    let mut groups: BTreeMap<String, Vec<VerificationReport>> = BTreeMap::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let r = VerificationReport::from_json_line(line)?;
        let id = r.instance_id.split('#').next().unwrap_or_default().to_string();
        groups.entry(id).or_default().push(r);
    }
    Ok(groups.iter().map(|(id, rs)| aggregate(id, None, rs, 0)).collect())
}
