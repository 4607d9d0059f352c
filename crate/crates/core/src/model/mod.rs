//! Tiny Llama-style decoder, rotation rewrites and whole-model quantization.

pub mod config;
pub mod fixture;
pub mod graph;
pub mod quantize;
pub mod rewrite;

pub use config::{expansion_param_delta, ExpansionDims, TinyLlmConfig};
pub use fixture::{generate_model, sample_tokens, FixtureSpec};
pub use graph::{
    log_prob, nll_sum, perplexity, rms_norm, Decoder, InputSite, Layer, LinearKind, LmHead,
    ModelGraph, RotationPlan,
};
pub use quantize::{
    capture_layer_inputs, layer_mse, layer_mses, linear_name, mean_layer_mse, quantize_model,
    Captures, QuantizeOptions, QuantizedModel,
};
pub use rewrite::{
    apply_r4, expand_r2, expand_r4, fold_norm_weights, merge_r1, merge_value_rotation,
};
