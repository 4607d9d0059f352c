//! fold → R1 → R2/R4 → calibration → (Cayley) → quantization → evaluation.

use std::time::Instant;

use exq_core::cayley::{optimize, r1_terms, r2_terms, CayleyOptions, GridQuantizer, RotationObjective};
use exq_core::hadamard::hadamard_rotation;
use exq_core::model::{
    capture_layer_inputs, expand_r2, expand_r4, fold_norm_weights, mean_layer_mse, merge_r1,
    merge_value_rotation, perplexity, quantize_model, LinearKind, ModelGraph, QuantizeOptions,
    QuantizedModel,
};
use exq_core::quant::{volume_bits, GroupAxis, SchemeFamily, VolumeItem};
use exq_core::Tensor;

use crate::config::{CayleyConfig, ExperimentConfig, R1Init};
use crate::container::read_tokens;
use crate::error::{ExqError, Result, Stage, StageExt};
use crate::model_io::{load_model, save_quantized};
use crate::report::ExperimentReport;

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineOptions {
    pub family: SchemeFamily,
    pub use_gptq: bool,
    pub act_order: bool,
    pub r1: R1Init,
    pub r2_dim: Option<usize>,
    pub r4_dim: Option<usize>,
    pub calib_samples: usize,
    pub calib_seq_len: usize,
    pub cayley: CayleyConfig,
    pub eval_seq_len: usize,
}

impl PipelineOptions {
    pub fn from_config(cfg: &ExperimentConfig) -> Self {
        Self {
            family: cfg.scheme,
            use_gptq: cfg.use_gptq,
            act_order: cfg.act_order,
            r1: cfg.r1,
            r2_dim: cfg.r2_expanded_dim,
            r4_dim: cfg.r4_expanded_dim,
            calib_samples: cfg.calib.n_samples,
            calib_seq_len: cfg.calib.seq_len,
            cayley: cfg.cayley,
            eval_seq_len: cfg.eval.as_ref().map_or(cfg.calib.seq_len, |e| e.seq_len),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOutcome {
    /// Float model after every rewrite.
    pub rewritten: ModelGraph,
    pub quantized: QuantizedModel,
    pub params: u64,
    pub volume_bits: u64,
    pub expansion_ratio_model: f64,
    pub expansion_ratio_layer: f64,
    pub perplexity: f64,
    pub mean_layer_mse: f64,
    /// Cayley objective traces (R1 then R2), when optimized.
    pub cayley_traces: Vec<Vec<f64>>,
}

fn cayley_opts(c: &CayleyConfig) -> CayleyOptions {
    CayleyOptions {
        iters: c.iters,
        lr: c.lr,
        ..CayleyOptions::default()
    }
}

/// Storage of the quantized model: 4-bit linears with their scales, BF16
/// embedding and norms. The LM head is excluded, as in the parameter count.
pub fn model_volume_bits(model: &ModelGraph, family: SchemeFamily) -> u64 {
    let mut items = vec![VolumeItem::bf16(
        (model.embedding.data().len() + model.final_norm.len()) as u64,
    )];
    for l in &model.layers {
        items.push(VolumeItem::bf16((l.attn_norm.len() + l.mlp_norm.len()) as u64));
        for k in LinearKind::ALL {
            let (r, c) = l.linear(k).shape();
            items.push(VolumeItem::weight_matrix(r, c, family, GroupAxis::Column));
        }
    }
    volume_bits(&items)
}

/// Largest `m/n` over the expanded rotations (1 when nothing is expanded).
pub fn layer_ratio(model: &ModelGraph) -> f64 {
    [&model.plan.r2, &model.plan.r4]
        .into_iter()
        .flatten()
        .map(|r| r.m() as f64 / r.n() as f64)
        .fold(1.0, f64::max)
}

/// Applies the rotation plan to a float model.
pub fn rewrite(
    model: &ModelGraph,
    calib_tokens: &[u32],
    opts: &PipelineOptions,
    traces: &mut Vec<Vec<f64>>,
) -> Result<ModelGraph> {
    let d = model.config.d_model;
    let hd = model.config.head_dim;
    let mut g = fold_norm_weights(model);
    let cayley_samples = opts.cayley.n_samples;
    match opts.r1 {
        R1Init::Identity => {}
        R1Init::Hadamard => {
            g = merge_r1(&g, &hadamard_rotation(d).stage(Stage::R1)?).stage(Stage::R1)?;
        }
        R1Init::Cayley => {
            let cap = capture_layer_inputs(&g, calib_tokens, cayley_samples, opts.calib_seq_len)
                .stage(Stage::Cayley)?;
            let obj = RotationObjective::new(
                r1_terms(&g, &cap).stage(Stage::Cayley)?,
                GridQuantizer(opts.family),
            )
            .stage(Stage::Cayley)?;
            let init = hadamard_rotation(d).stage(Stage::R1)?;
            let st = optimize(&obj, &init, cayley_opts(&opts.cayley)).stage(Stage::Cayley)?;
            traces.push(st.objective_trace);
            g = merge_r1(&g, &st.r).stage(Stage::R1)?;
        }
    }
    if let Some(m2) = opts.r2_dim {
        if m2 < hd {
            return Err(ExqError::Config(format!("r2 dim {m2} below head_dim {hd}")));
        }
        if m2 == hd && opts.r1 == R1Init::Cayley {
            let cap = capture_layer_inputs(&g, calib_tokens, cayley_samples, opts.calib_seq_len)
                .stage(Stage::Cayley)?;
            let obj = RotationObjective::new(
                r2_terms(&g, &cap).stage(Stage::Cayley)?,
                GridQuantizer(opts.family),
            )
            .stage(Stage::Cayley)?;
            let init = hadamard_rotation(hd).stage(Stage::R2)?;
            let st = optimize(&obj, &init, cayley_opts(&opts.cayley)).stage(Stage::Cayley)?;
            traces.push(st.objective_trace);
            g = merge_value_rotation(&g, &st.r).stage(Stage::R2)?;
        } else {
            g = expand_r2(&g, m2).stage(Stage::R2)?;
        }
    }
    if let Some(m4) = opts.r4_dim {
        if m4 < model.config.d_ffn {
            return Err(ExqError::Config(format!(
                "r4 dim {m4} below d_ffn {}",
                model.config.d_ffn
            )));
        }
        g = expand_r4(&g, m4).stage(Stage::R4)?;
    }
    Ok(g)
}

/// Runs the whole pipeline in memory.
pub fn run_pipeline(
    model: &ModelGraph,
    calib_tokens: &[u32],
    eval_tokens: &[u32],
    opts: &PipelineOptions,
) -> Result<PipelineOutcome> {
    let mut traces = Vec::new();
    let g = rewrite(model, calib_tokens, opts, &mut traces)?;
    let cap = capture_layer_inputs(&g, calib_tokens, opts.calib_samples, opts.calib_seq_len)
        .stage(Stage::Calibrate)?;
    let qopts = QuantizeOptions {
        family: opts.family,
        use_gptq: opts.use_gptq,
        act_order: opts.act_order,
    };
    let q = quantize_model(&g, qopts, Some(&cap)).stage(Stage::Quantize)?;
    let ppl = perplexity(&q.graph, eval_tokens, opts.eval_seq_len).stage(Stage::Eval)?;
    let mse = mean_layer_mse(&g, &q, &cap).stage(Stage::Eval)?;
    let params = q.graph.count_params();
    Ok(PipelineOutcome {
        params,
        volume_bits: model_volume_bits(&q.graph, opts.family),
        expansion_ratio_model: params as f64 / model.config.param_count() as f64,
        expansion_ratio_layer: layer_ratio(&g),
        perplexity: ppl,
        mean_layer_mse: mse,
        cayley_traces: traces,
        rewritten: g,
        quantized: q,
    })
}

/// Tokens for evaluation: the eval file, or the tail of the calibration file
/// after the calibration windows.
fn eval_tokens(cfg: &ExperimentConfig, calib: &[u32]) -> Result<Vec<u32>> {
    if let Some(e) = &cfg.eval {
        return read_tokens(&e.tokens_path);
    }
    let used = cfg.calib.n_samples * cfg.calib.seq_len;
    if calib.len() < used + 2 {
        return Err(ExqError::Config(format!(
            "no evaluation tokens: calibration uses {used} of {} tokens and no eval file is set",
            calib.len()
        )));
    }
    Ok(calib[used..].to_vec())
}

/// Loads the files named by `cfg`, runs the pipeline, writes the quantized
/// model if requested and returns the report row.
pub fn run_quantize(cfg: &ExperimentConfig) -> Result<(ExperimentReport, PipelineOutcome)> {
    cfg.validate_shape()?;
    let start = Instant::now();
    let model = load_model(&cfg.model_path)?;
    let calib = read_tokens(&cfg.calib.tokens_path)?;
    let eval = eval_tokens(cfg, &calib)?;
    let out = run_pipeline(&model, &calib, &eval, &PipelineOptions::from_config(cfg))?;
    if let Some(path) = &cfg.output_path {
        save_quantized(path, &out.quantized)?;
    }
    let report = ExperimentReport {
        run_id: cfg.label(),
        params: out.params,
        volume_bits: out.volume_bits,
        expansion_ratio_model: out.expansion_ratio_model,
        expansion_ratio_layer: out.expansion_ratio_layer,
        perplexity: out.perplexity,
        mean_layer_mse: out.mean_layer_mse,
        wall_seconds: start.elapsed().as_secs_f64(),
    };
    Ok((report, out))
}

/// Rotation matrices that a rewritten model carries, densified.
pub fn dense_rotations(model: &ModelGraph) -> Vec<(&'static str, Tensor)> {
    let mut out = Vec::new();
    if let Some(r) = &model.plan.r1 {
        out.push(("r1", r.clone()));
    }
    if let Some(r) = &model.plan.r2 {
        out.push(("r2", r.materialize()));
    }
    if let Some(r) = &model.plan.r4 {
        out.push(("r4", r.materialize()));
    }
    out
}
