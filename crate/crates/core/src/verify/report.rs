//! Per-trial outcomes folded into per-check records, ordered by check id.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Multivector;
use crate::identity::IdentityRecord;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    PaperMismatch,
}

/// Asserted checks fail the run; reported ones are published claims whose
/// disagreement with the oracle is data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Asserted,
    Reported,
}

/// One check evaluated on one trial input.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub check: String,
    pub formula: String,
    pub kind: Kind,
    pub matches: bool,
    pub residual: String,
    pub witness: String,
}

impl Outcome {
    pub fn flag(check: impl Into<String>, formula: &str, kind: Kind, ok: bool, detail: String, witness: &str) -> Self {
        Outcome {
            check: check.into(),
            formula: formula.to_string(),
            kind,
            matches: ok,
            residual: if ok { "0".into() } else { detail },
            witness: witness.to_string(),
        }
    }

    pub fn compare<S: Scalar>(
        check: impl Into<String>,
        formula: &str,
        kind: Kind,
        lhs: &Multivector<S>,
        rhs: &Multivector<S>,
        witness: &str,
    ) -> Self {
        let r = lhs - rhs;
        Outcome {
            check: check.into(),
            formula: formula.to_string(),
            kind,
            matches: r.is_zero(),
            residual: if r.is_zero() {
                "0".into()
            } else {
                format!("{r} (lhs {lhs}, rhs {rhs})")
            },
            witness: witness.to_string(),
        }
    }

    pub fn identity(check: impl Into<String>, rec: &IdentityRecord, kind: Kind, witness: &str) -> Self {
        Outcome {
            check: check.into(),
            formula: rec.formula.to_string(),
            kind,
            matches: rec.matches,
            residual: if rec.matches {
                "0".into()
            } else {
                format!("{} (lhs {}, rhs {})", rec.residual, rec.lhs, rec.rhs)
            },
            witness: match rec.index {
                Some(mu) => format!("{witness}; mu = {mu}"),
                None => witness.to_string(),
            },
        }
    }
}

/// Observations that are neither pass nor fail, counted by value.
#[derive(Clone, Debug)]
pub struct Tally {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Default)]
pub struct TrialResult {
    pub outcomes: Vec<Outcome>,
    pub tallies: Vec<Tally>,
}

impl TrialResult {
    pub fn push(&mut self, o: Outcome) {
        self.outcomes.push(o);
    }

    pub fn tally(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.tallies.push(Tally {
            key: key.into(),
            value: value.into(),
        });
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    #[serde(rename = "paper_ref")]
    pub formula: String,
    pub status: Status,
    pub trials: usize,
    pub failures: usize,
    /// Residual of the first failing trial, or "0".
    pub residual: String,
    /// Input of the first failing trial, or of the first trial.
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub paper_mismatch: usize,
}

impl Summary {
    fn add(&mut self, s: Status) {
        self.records += 1;
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::PaperMismatch => self.paper_mismatch += 1,
        }
    }

    fn merge(&mut self, other: &Summary) {
        self.records += other.records;
        self.pass += other.pass;
        self.fail += other.fail;
        self.paper_mismatch += other.paper_mismatch;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub signature: String,
    pub trials: usize,
    pub records: Vec<CheckRecord>,
    /// Counted observations, e.g. the constants fitted to a formula.
    pub ledger: BTreeMap<String, BTreeMap<String, usize>>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn record(&self, check: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check == check)
    }
}

struct Acc {
    formula: String,
    kind: Kind,
    trials: usize,
    failures: usize,
    first: (String, String),
    first_failure: Option<(String, String)>,
}

/// Folds trial results, given in trial order, into a report.
pub fn assemble(suite: &str, signature: String, trials: &[TrialResult]) -> SuiteReport {
    let mut acc: BTreeMap<String, Acc> = BTreeMap::new();
    let mut ledger: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for t in trials {
        for o in &t.outcomes {
            let a = acc.entry(o.check.clone()).or_insert_with(|| Acc {
                formula: o.formula.clone(),
                kind: o.kind,
                trials: 0,
                failures: 0,
                first: (o.residual.clone(), o.witness.clone()),
                first_failure: None,
            });
            a.trials += 1;
            if !o.matches {
                a.failures += 1;
                a.first_failure
                    .get_or_insert_with(|| (o.residual.clone(), o.witness.clone()));
            }
        }
        for tally in &t.tallies {
            *ledger
                .entry(tally.key.clone())
                .or_default()
                .entry(tally.value.clone())
                .or_default() += 1;
        }
    }
    let mut summary = Summary::default();
    let records = acc
        .into_iter()
        .map(|(check, a)| {
            let status = match (a.failures, a.kind) {
                (0, _) => Status::Pass,
                (_, Kind::Asserted) => Status::Fail,
                (_, Kind::Reported) => Status::PaperMismatch,
            };
            summary.add(status);
            let (residual, witness) = a.first_failure.unwrap_or(a.first);
            CheckRecord {
                check,
                formula: a.formula,
                status,
                trials: a.trials,
                failures: a.failures,
                residual,
                witness,
            }
        })
        .collect();
    SuiteReport {
        suite: suite.to_string(),
        signature,
        trials: trials.len(),
        records,
        ledger,
        summary,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub suite: String,
    pub signature: String,
    pub trials: usize,
    pub seed: u64,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, suites: Vec<SuiteReport>) -> Self {
        let mut summary = Summary::default();
        for s in &suites {
            summary.merge(&s.summary);
        }
        Report {
            config,
            suites,
            summary,
        }
    }

    /// No asserted check failed.
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_markdown(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "# verify: {} in Cl({}), {} trials, seed {}, degree {}\n",
            c.suite, c.signature, c.trials, c.seed, c.degree
        );
        for s in &self.suites {
            out.push_str(&format!(
                "\n## {} (Cl({}), {} trials)\n\n",
                s.suite, s.signature, s.trials
            ));
            out.push_str("| check | status | failures | formula | residual |\n|---|---|---|---|---|\n");
            for r in &s.records {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::PaperMismatch => "paper_mismatch",
                };
                out.push_str(&format!(
                    "| {} | {} | {}/{} | {} | {} |\n",
                    r.check,
                    status,
                    r.failures,
                    r.trials,
                    r.formula.replace('|', "\\|"),
                    r.residual.replace('|', "\\|")
                ));
            }
            for (key, counts) in &s.ledger {
                let parts: Vec<String> = counts.iter().map(|(v, n)| format!("{v}: {n}")).collect();
                out.push_str(&format!("\n- {key}: {}\n", parts.join(", ")));
            }
        }
        let m = &self.summary;
        out.push_str(&format!(
            "\nrecords: {}, pass: {}, fail: {}, paper_mismatch: {}\n",
            m.records, m.pass, m.fail, m.paper_mismatch
        ));
        out
    }
}
