//! Post-training model expansion through online incoherence processing.
//!
//! The crate is `no_std` (it needs `alloc`) and holds all of the numeric work:
//! dense linear algebra, expanded Hadamard rotations, INT4/MXFP4 quantizers,
//! GPTQ, a tiny Llama-style decoder with rotation rewrites, Cayley rotation
//! optimization, and checks of the nullspace and GPTQ error-bound identities.
//! File formats and the command line live in the `exq` crate.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod cayley;
pub mod error;
pub mod gptq;
pub mod hadamard;
pub mod model;
pub mod numerics;
pub mod quant;

pub use error::{Error, Result};
pub use numerics::Tensor;
