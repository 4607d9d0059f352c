//! Files, experiment pipeline and sweeps around `exq-core`.

pub mod config;
pub mod container;
pub mod error;
pub mod generate;
pub mod model_io;
pub mod pipeline;
pub mod report;
pub mod sweep;

pub use error::{ExqError, Result};
