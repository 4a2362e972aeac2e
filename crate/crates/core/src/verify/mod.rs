//! Seeded identity sweeps behind `cliffsplit verify`.
//!
//! Every trial draws from its own ChaCha8 stream keyed by (seed, suite,
//! trial), trials run in parallel, and records are folded in trial order and
//! sorted by check id, so a report depends on the configuration alone.

pub mod random;
pub mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rayon::prelude::*;

use crate::algebra::Signature;
use crate::error::{Error, Result};
use report::{assemble, ConfigEcho, TrialResult};
pub use report::{CheckRecord, Kind, Outcome, Report, Status, SuiteReport, Summary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Projectors,
    Products,
    Metric,
    Hodge,
    Calculus,
    Dual,
    Dirac,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Projectors,
        Suite::Products,
        Suite::Metric,
        Suite::Hodge,
        Suite::Calculus,
        Suite::Dual,
        Suite::Dirac,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Projectors => "projectors",
            Suite::Products => "products",
            Suite::Metric => "metric",
            Suite::Hodge => "hodge",
            Suite::Calculus => "calculus",
            Suite::Dual => "dual",
            Suite::Dirac => "dirac",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }

    fn index(self) -> u64 {
        self as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Used by every suite except dirac, which lives in Cl(1,3).
    pub signature: Signature,
    pub trials: usize,
    pub seed: u64,
    /// Maximal total degree of random polynomial fields.
    pub degree: u32,
}

impl SuiteConfig {
    pub fn new(suite: Suite, signature: Signature, trials: usize, seed: u64, degree: u32) -> Result<Self> {
        if trials == 0 {
            return Err(Error::Unsupported("trials must be at least 1".into()));
        }
        let needs_time = suite
            .expand()
            .iter()
            .any(|s| matches!(s, Suite::Calculus | Suite::Dual));
        if needs_time && signature.p() == 0 {
            return Err(Error::Unsupported(format!(
                "suite {suite} needs a 1-form with n^2 = 1, which Cl(0,{}) lacks",
                signature.q()
            )));
        }
        if needs_time && signature.dim() > 4 {
            return Err(Error::Unsupported("field suites support dimension at most 4".into()));
        }
        Ok(SuiteConfig {
            suite,
            signature,
            trials,
            seed,
            degree,
        })
    }
}

fn trial_rng(seed: u64, suite: Suite, trial: usize) -> random::Rng8 {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&suite.index().to_le_bytes());
    key[16..24].copy_from_slice(&(trial as u64).to_le_bytes());
    random::Rng8::from_seed(key)
}

fn signature_text(sig: Signature) -> String {
    format!("{},{}", sig.p(), sig.q())
}

pub fn run_suite(cfg: &SuiteConfig, suite: Suite) -> SuiteReport {
    let sig = match suite {
        Suite::Dirac => Signature::spacetime(),
        _ => cfg.signature,
    };
    let ctx = suites::Context::new(sig, cfg.degree);
    let results: Vec<TrialResult> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(cfg.seed, suite, t);
            let mut out = TrialResult::default();
            if let Err(e) = ctx.run(suite, t, &mut rng, &mut out) {
                out.push(Outcome::flag(
                    format!("{suite}.runtime_error"),
                    "no algebra error",
                    Kind::Asserted,
                    false,
                    e.to_string(),
                    &format!("trial {t}"),
                ));
            }
            out
        })
        .collect();
    assemble(suite.name(), signature_text(sig), &results)
}

pub fn run(cfg: &SuiteConfig) -> Report {
    let suites = cfg.suite.expand().into_iter().map(|s| run_suite(cfg, s)).collect();
    Report::new(
        ConfigEcho {
            suite: cfg.suite.name().into(),
            signature: signature_text(cfg.signature),
            trials: cfg.trials,
            seed: cfg.seed,
            degree: cfg.degree,
        },
        suites,
    )
}
