//! Numeric and symbolic verification runs and their reports.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use pfaff_core::random::rng_for;
use pfaff_core::Ring;
use rayon::prelude::*;
use serde::Serialize;

use crate::registry::{Identity, Outcome, Shape};
use crate::{CliError, CliResult};

/// Draws allowed per trial before it is reported as a failure.
pub const MAX_DRAWS: u32 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Symbolic,
}

/// One line of the machine-readable report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub identity: &'static str,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub trial: u64,
    pub shape: Shape,
    pub resamples: u32,
    pub residual: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub shape: Shape,
    pub records: Vec<TrialRecord>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records.iter().filter(|r| !r.ok)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn resamples(&self) -> u64 {
        self.records.iter().map(|r| u64::from(r.resamples)).sum()
    }

    /// One JSON object per trial, in trial order. Timing is left out so that
    /// equal runs give equal bytes.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let failures = self.failures().count();
        let shape = serde_json::to_string(&self.shape).expect("shape serializes");
        match self.mode {
            Mode::Numeric => writeln!(
                out,
                "{}: {} trials, {} failures, {} resampled draws (seed {}, shape {shape}, {:.2?})",
                self.identity,
                self.records.len(),
                failures,
                self.resamples(),
                self.seed.unwrap_or_default(),
                self.elapsed
            ),
            Mode::Symbolic => writeln!(
                out,
                "{}: symbolic residual is {} (shape {shape}, {:.2?})",
                self.identity,
                if failures == 0 { "the zero polynomial" } else { "NONZERO" },
                self.elapsed
            ),
        }
        .unwrap();
        for r in self.failures() {
            writeln!(out, "  trial {}: residual {}", r.trial, r.residual).unwrap();
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct NumericOptions {
    pub trials: u64,
    pub seed: u64,
    /// Worker threads; `None` lets the pool pick.
    pub workers: Option<usize>,
}

fn run_trial(ident: &Identity, shape: &Shape, seed: u64, trial: u64) -> CliResult<TrialRecord> {
    let mut rng = rng_for(seed, trial);
    let mut resamples = 0;
    let (residual, ok) = loop {
        if resamples == MAX_DRAWS {
            break (format!("no admissible instance in {MAX_DRAWS} draws"), false);
        }
        match ident.numeric_trial(shape, &mut rng)? {
            Outcome::Residual(r) => break (r.to_string(), r.is_zero()),
            Outcome::Resample => resamples += 1,
        }
    };
    Ok(TrialRecord {
        identity: ident.name,
        mode: Mode::Numeric,
        seed: Some(seed),
        trial,
        shape: shape.clone(),
        resamples,
        residual,
        ok,
    })
}

pub fn run_numeric(ident: &'static Identity, shape: &Shape, opts: NumericOptions) -> CliResult<VerificationReport> {
    let start = Instant::now();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = opts.workers {
        if w == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        pool = pool.num_threads(w);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let records: Vec<CliResult<TrialRecord>> =
        pool.install(|| (0..opts.trials).into_par_iter().map(|t| run_trial(ident, shape, opts.seed, t)).collect());
    let records = records.into_iter().collect::<CliResult<Vec<_>>>()?;
    Ok(VerificationReport {
        identity: ident.name,
        mode: Mode::Numeric,
        seed: Some(opts.seed),
        shape: shape.clone(),
        records,
        elapsed: start.elapsed(),
    })
}

pub fn run_symbolic(ident: &'static Identity, shape: &Shape) -> CliResult<VerificationReport> {
    let start = Instant::now();
    let residual = ident.symbolic(shape)?;
    let record = TrialRecord {
        identity: ident.name,
        mode: Mode::Symbolic,
        seed: None,
        trial: 0,
        shape: shape.clone(),
        resamples: 0,
        ok: residual.is_zero(),
        residual: residual.to_string(),
    };
    Ok(VerificationReport {
        identity: ident.name,
        mode: Mode::Symbolic,
        seed: None,
        shape: shape.clone(),
        records: vec![record],
        elapsed: start.elapsed(),
    })
}
