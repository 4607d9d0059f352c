//! Experiment configuration (JSON).

use std::fs;
use std::path::{Path, PathBuf};

use exq_core::quant::SchemeFamily;
use serde::{Deserialize, Serialize};

use crate::error::{ExqError, Result};

/// Initial residual rotation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum R1Init {
    Identity,
    #[default]
    Hadamard,
    /// Hadamard start refined by Cayley descent (square R2 is refined too).
    Cayley,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibConfig {
    pub tokens_path: PathBuf,
    #[serde(default = "default_calib_samples")]
    pub n_samples: usize,
    #[serde(default = "default_seq_len")]
    pub seq_len: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CayleyConfig {
    #[serde(default = "default_cayley_iters")]
    pub iters: usize,
    #[serde(default = "default_cayley_lr")]
    pub lr: f64,
    #[serde(default = "default_cayley_samples")]
    pub n_samples: usize,
}

impl Default for CayleyConfig {
    fn default() -> Self {
        Self {
            iters: default_cayley_iters(),
            lr: default_cayley_lr(),
            n_samples: default_cayley_samples(),
        }
    }
}

/// Held-out evaluation tokens. When absent, evaluation uses whatever follows
/// the calibration windows in the calibration file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    pub tokens_path: PathBuf,
    #[serde(default = "default_seq_len")]
    pub seq_len: usize,
}

fn default_calib_samples() -> usize {
    128
}
fn default_seq_len() -> usize {
    2048
}
fn default_cayley_iters() -> usize {
    100
}
fn default_cayley_lr() -> f64 {
    1.5
}
fn default_cayley_samples() -> usize {
    800
}
fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub model_path: PathBuf,
    pub scheme: SchemeFamily,
    #[serde(default = "yes")]
    pub use_gptq: bool,
    #[serde(default)]
    pub act_order: bool,
    #[serde(default)]
    pub r1: R1Init,
    /// Value head width after R2; `head_dim` gives a square rotation.
    #[serde(default)]
    pub r2_expanded_dim: Option<usize>,
    /// Down-projection width after R4; `d_ffn` gives a square rotation.
    #[serde(default)]
    pub r4_expanded_dim: Option<usize>,
    pub calib: CalibConfig,
    #[serde(default)]
    pub cayley: CayleyConfig,
    #[serde(default)]
    pub eval: Option<EvalConfig>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub run_id: Option<String>,
    /// Where to write the quantized model, if anywhere.
    #[serde(default)]
    pub output_path: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| ExqError::io(path, e))?;
        let cfg: Self = serde_json::from_str(&text)?;
        cfg.validate_shape()?;
        Ok(cfg)
    }

    /// Checks that do not need the model or token files.
    pub fn validate_shape(&self) -> Result<()> {
        if self.calib.n_samples == 0 || self.calib.seq_len < 2 {
            return Err(ExqError::Config(
                "calibration needs at least one sample of two or more tokens".into(),
            ));
        }
        if let Some(e) = &self.eval {
            if e.seq_len < 2 {
                return Err(ExqError::Config("evaluation seq_len must be at least 2".into()));
            }
        }
        if self.r1 == R1Init::Cayley && !(self.cayley.lr > 0.0 && self.cayley.n_samples > 0) {
            return Err(ExqError::Config("cayley needs a positive lr and samples".into()));
        }
        Ok(())
    }

    /// Run label: the explicit one, or one derived from the knobs.
    pub fn label(&self) -> String {
        if let Some(id) = &self.run_id {
            return id.clone();
        }
        let r1 = match self.r1 {
            R1Init::Identity => "id",
            R1Init::Hadamard => "had",
            R1Init::Cayley => "cay",
        };
        let dim = |d: Option<usize>| d.map_or("none".to_string(), |d| d.to_string());
        format!(
            "{}-{}-{}-r2_{}-r4_{}-s{}",
            self.scheme.as_str(),
            if self.use_gptq { "gptq" } else { "rtn" },
            r1,
            dim(self.r2_expanded_dim),
            dim(self.r4_expanded_dim),
            self.seed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_fill_in() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{"model_path":"m.exq","scheme":"int4","calib":{"tokens_path":"t.bin"}}"#,
        )
        .unwrap();
        assert!(cfg.use_gptq);
        assert!(!cfg.act_order);
        assert_eq!(cfg.r1, R1Init::Hadamard);
        assert_eq!(cfg.calib.n_samples, 128);
        assert_eq!(cfg.calib.seq_len, 2048);
        assert_eq!(cfg.cayley, CayleyConfig { iters: 100, lr: 1.5, n_samples: 800 });
        assert_eq!(cfg.label(), "int4-gptq-had-r2_none-r4_none-s0");
    }

    #[test]
    fn bad_values_are_config_errors() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{"model_path":"m","scheme":"mxfp4","calib":{"tokens_path":"t","seq_len":1}}"#,
        )
        .unwrap();
        assert!(matches!(cfg.validate_shape(), Err(ExqError::Config(_))));
        assert!(serde_json::from_str::<ExperimentConfig>(
            r#"{"model_path":"m","scheme":"int8","calib":{"tokens_path":"t"}}"#
        )
        .is_err());
    }
}
