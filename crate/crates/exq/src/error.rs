use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

/// Pipeline stage an error came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Load,
    Fold,
    R1,
    R2,
    R4,
    Calibrate,
    Cayley,
    Quantize,
    Eval,
    Bounds,
    Generate,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Load => "load",
            Stage::Fold => "fold",
            Stage::R1 => "r1",
            Stage::R2 => "r2",
            Stage::R4 => "r4",
            Stage::Calibrate => "calibrate",
            Stage::Cayley => "cayley",
            Stage::Quantize => "quantize",
            Stage::Eval => "eval",
            Stage::Bounds => "bounds",
            Stage::Generate => "generate",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum ExqError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed file: {0}")]
    Format(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("[{stage}] {source}")]
    Stage {
        stage: Stage,
        #[source]
        source: exq_core::Error,
    },
    #[error(transparent)]
    Core(#[from] exq_core::Error),
    #[error("{violations} of {total} bound checks violated")]
    BoundViolation { violations: usize, total: usize },
}

pub type Result<T> = std::result::Result<T, ExqError>;

impl ExqError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        ExqError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// Process exit code: 2 configuration/input, 3 bound violation, 4 numeric.
    pub fn exit_code(&self) -> i32 {
        use exq_core::Error as E;
        let core = match self {
            ExqError::BoundViolation { .. } => return 3,
            ExqError::Stage { source, .. } | ExqError::Core(source) => source,
            _ => return 2,
        };
        match core {
            E::CholeskyFailure(_)
            | E::Singular
            | E::NonFinite(_)
            | E::Divergence { .. }
            | E::NonOrthogonal(_) => 4,
            _ => 2,
        }
    }
}

/// Attach a stage tag to core errors.
pub trait StageExt<T> {
    fn stage(self, stage: Stage) -> Result<T>;
}

impl<T> StageExt<T> for std::result::Result<T, exq_core::Error> {
    fn stage(self, stage: Stage) -> Result<T> {
        self.map_err(|source| ExqError::Stage { stage, source })
    }
}
