//! Report and frontier CSVs.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{ExqError, Result};

/// One experiment row. The header is the field order below.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub run_id: String,
    pub params: u64,
    pub volume_bits: u64,
    pub expansion_ratio_model: f64,
    pub expansion_ratio_layer: f64,
    pub perplexity: f64,
    pub mean_layer_mse: f64,
    pub wall_seconds: f64,
}

pub const REPORT_HEADER: [&str; 8] = [
    "run_id",
    "params",
    "volume_bits",
    "expansion_ratio_model",
    "expansion_ratio_layer",
    "perplexity",
    "mean_layer_mse",
    "wall_seconds",
];

impl ExperimentReport {
    /// Equal in everything except timing.
    pub fn same_result(&self, other: &Self) -> bool {
        Self {
            wall_seconds: 0.0,
            ..self.clone()
        } == Self {
            wall_seconds: 0.0,
            ..other.clone()
        }
    }
}

pub fn write_reports<W: Write>(out: W, rows: &[ExperimentReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(REPORT_HEADER)?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| ExqError::Csv(e.into()))
}

pub fn read_reports<R: Read>(input: R) -> Result<Vec<ExperimentReport>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(REPORT_HEADER) {
        return Err(ExqError::Format(format!(
            "report header must be {}",
            REPORT_HEADER.join(",")
        )));
    }
    let rows = r.deserialize().collect::<std::result::Result<Vec<ExperimentReport>, _>>()?;
    for row in &rows {
        if !row.perplexity.is_finite() {
            return Err(ExqError::Format(format!("{}: perplexity is not finite", row.run_id)));
        }
    }
    Ok(rows)
}

/// `a` dominates `b` when it is strictly smaller in both volume and perplexity.
fn dominates(a: &ExperimentReport, b: &ExperimentReport) -> bool {
    a.volume_bits < b.volume_bits && a.perplexity < b.perplexity
}

/// Rows no other row dominates, sorted by volume (then perplexity, then input
/// order). Ties and duplicates are kept.
pub fn pareto_frontier(rows: &[ExperimentReport]) -> Vec<ExperimentReport> {
    let mut keep: Vec<(usize, &ExperimentReport)> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !rows.iter().any(|o| dominates(o, r)))
        .collect();
    keep.sort_by(|(ia, a), (ib, b)| {
        a.volume_bits
            .cmp(&b.volume_bits)
            .then(a.perplexity.total_cmp(&b.perplexity))
            .then(ia.cmp(ib))
    });
    keep.into_iter().map(|(_, r)| r.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(id: &str, volume: u64, ppl: f64) -> ExperimentReport {
        ExperimentReport {
            run_id: id.into(),
            params: 1,
            volume_bits: volume,
            expansion_ratio_model: 1.0,
            expansion_ratio_layer: 1.0,
            perplexity: ppl,
            mean_layer_mse: 0.0,
            wall_seconds: 0.5,
        }
    }

    #[test]
    fn csv_round_trip_keeps_header_and_values() {
        let rows = vec![row("a", 10, 3.25), row("b", 20, 1.0 / 3.0)];
        let mut buf = Vec::new();
        write_reports(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with(&REPORT_HEADER.join(",")));
        assert_eq!(read_reports(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn empty_report_still_has_a_header() {
        let mut buf = Vec::new();
        write_reports(&mut buf, &[]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().trim(), REPORT_HEADER.join(","));
    }

    #[test]
    fn wrong_header_is_rejected() {
        let bad = "run_id,params\nx,1\n";
        assert!(matches!(read_reports(bad.as_bytes()), Err(ExqError::Format(_))));
        let garbage = format!("{}\nx,notanumber,1,1,1,1,1,1\n", REPORT_HEADER.join(","));
        assert!(matches!(read_reports(garbage.as_bytes()), Err(ExqError::Csv(_))));
    }

    #[test]
    fn same_result_ignores_timing() {
        let a = row("a", 1, 2.0);
        let mut b = a.clone();
        b.wall_seconds = 99.0;
        assert!(a.same_result(&b));
        b.perplexity = 2.5;
        assert!(!a.same_result(&b));
    }
}
