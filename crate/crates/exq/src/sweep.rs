//! Bound sweeps and rotation dumps.

use std::io::Write;

use exq_core::bounds::{sweep_instance, BoundReport};
use exq_core::hadamard::build_expanded;
use exq_core::quant::QuantScheme;
use exq_core::Tensor;
use serde::Serialize;

use crate::error::{ExqError, Result, Stage, StageExt};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepSpec {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub scheme: QuantScheme,
    pub seeds: u64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.m < self.n {
            return Err(ExqError::Config(format!("m = {} < n = {}", self.m, self.n)));
        }
        if self.d < self.n {
            return Err(ExqError::Config(format!(
                "d = {} < n = {}: the calibration matrix cannot have full column rank",
                self.d, self.n
            )));
        }
        Ok(())
    }
}

/// CSV row of a bound sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BoundRow {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub delta: f64,
    pub term_max_proj: f64,
    pub term_energy: f64,
    pub bound: f64,
    pub empirical: f64,
    pub satisfied: bool,
    pub realized_delta: f64,
    pub satisfied_realized: bool,
}

impl From<&BoundReport> for BoundRow {
    fn from(r: &BoundReport) -> Self {
        Self {
            seed: r.seed,
            n: r.n,
            m: r.m,
            delta: r.delta,
            term_max_proj: r.term_max_proj,
            term_energy: r.term_energy,
            bound: r.bound,
            empirical: r.empirical,
            satisfied: r.satisfied,
            realized_delta: r.realized_delta,
            satisfied_realized: r.satisfied_realized(),
        }
    }
}

/// Seeds `0..seeds` of one `(n, m, d)` configuration.
pub fn run_bound_sweep(spec: &SweepSpec) -> Result<Vec<BoundReport>> {
    spec.validate()?;
    (0..spec.seeds)
        .map(|s| sweep_instance(s, spec.n, spec.m, spec.d, spec.scheme).stage(Stage::Bounds))
        .collect()
}

pub fn write_bound_csv<W: Write>(out: W, rows: &[BoundReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(BoundRow::from(r))?;
    }
    w.flush().map_err(|e| ExqError::Csv(e.into()))
}

/// `BoundViolation` when any row fails its bound.
pub fn check_violations(rows: &[BoundReport]) -> Result<()> {
    let violations = rows.iter().filter(|r| !r.satisfied).count();
    if violations > 0 {
        return Err(ExqError::BoundViolation {
            violations,
            total: rows.len(),
        });
    }
    Ok(())
}

/// The materialized `n×m` expanded rotation.
pub fn expanded_matrix(n: usize, m: usize) -> Result<Tensor> {
    if m < n || n == 0 {
        return Err(ExqError::Config(format!("need m ≥ n ≥ 1, got n = {n}, m = {m}")));
    }
    Ok(build_expanded(n, m)?.materialize())
}

/// Plain CSV, one matrix row per line.
pub fn write_matrix_csv<W: Write>(out: W, t: &Tensor) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    for r in 0..t.rows() {
        w.write_record(t.row(r).iter().map(|v| format!("{v:e}")))?;
    }
    w.flush().map_err(|e| ExqError::Csv(e.into()))
}
