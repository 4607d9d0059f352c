use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::config::TinyLlmConfig;
use super::graph::{Layer, LmHead, ModelGraph, RotationPlan};
use crate::error::Result;
use crate::numerics::Tensor;

/// Random-weight generation knobs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FixtureSpec {
    /// Fraction of residual and FFN channels to amplify.
    pub outlier_frac: f64,
    pub outlier_gain: f64,
    pub embedding_std: f64,
    /// Spread of the RMSNorm weights around 1.
    pub norm_jitter: f64,
}

impl Default for FixtureSpec {
    fn default() -> Self {
        Self {
            outlier_frac: 0.01,
            outlier_gain: 20.0,
            embedding_std: 0.05,
            norm_jitter: 0.1,
        }
    }
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, std: f64) -> Tensor {
    Tensor::from_fn(rows, cols, |_, _| {
        let z: f64 = StandardNormal.sample(rng);
        std * z
    })
}

fn norm_weight<R: Rng + ?Sized>(rng: &mut R, d: usize, jitter: f64) -> Vec<f64> {
    (0..d)
        .map(|_| {
            let z: f64 = StandardNormal.sample(rng);
            1.0 + jitter * z
        })
        .collect()
}

/// `ceil(frac·n)` distinct channels, or none when `frac` is zero.
pub fn outlier_channels<R: Rng + ?Sized>(rng: &mut R, n: usize, frac: f64) -> Vec<usize> {
    let k = ((frac * n as f64).ceil() as usize).min(n);
    rand::seq::index::sample(rng, n, k).into_vec()
}

fn scale_cols(t: &mut Tensor, cols: &[usize], gain: f64) {
    for r in 0..t.rows() {
        let row = t.row_mut(r);
        for &c in cols {
            row[c] *= gain;
        }
    }
}

/// Untrained decoder with injected outlier channels: a fraction of the
/// residual dimensions (embedding columns) and of the FFN hidden dimensions
/// (`w_up` columns) are multiplied by the gain.
pub fn generate_model<R: Rng + ?Sized>(
    config: &TinyLlmConfig,
    spec: &FixtureSpec,
    rng: &mut R,
) -> Result<ModelGraph> {
    config.validate()?;
    let c = config;
    let d = c.d_model;
    let mut embedding = gaussian(rng, c.vocab_size, d, spec.embedding_std);
    let resid_outliers = outlier_channels(rng, d, spec.outlier_frac);
    scale_cols(&mut embedding, &resid_outliers, spec.outlier_gain);
    let in_std = 1.0 / (d as f64).sqrt();
    let mut layers = Vec::with_capacity(c.n_layers);
    for _ in 0..c.n_layers {
        let attn_norm = norm_weight(rng, d, spec.norm_jitter);
        let wq = gaussian(rng, d, c.n_heads * c.head_dim, in_std);
        let wk = gaussian(rng, d, c.n_kv_heads * c.head_dim, in_std);
        let wv = gaussian(rng, d, c.n_kv_heads * c.head_dim, in_std);
        let wo = gaussian(rng, c.n_heads * c.head_dim, d, 0.5 * in_std);
        let mlp_norm = norm_weight(rng, d, spec.norm_jitter);
        let w_gate = gaussian(rng, d, c.d_ffn, in_std);
        let mut w_up = gaussian(rng, d, c.d_ffn, in_std);
        let ffn_outliers = outlier_channels(rng, c.d_ffn, spec.outlier_frac);
        scale_cols(&mut w_up, &ffn_outliers, spec.outlier_gain);
        let w_down = gaussian(rng, c.d_ffn, d, 0.5 / (c.d_ffn as f64).sqrt());
        layers.push(Layer {
            attn_norm,
            wq,
            wk,
            wv,
            wo,
            mlp_norm,
            w_gate,
            w_up,
            w_down,
        });
    }
    let final_norm = norm_weight(rng, d, spec.norm_jitter);
    let lm_head = if c.tied_embeddings {
        LmHead::Tied
    } else {
        LmHead::Separate(gaussian(rng, d, c.vocab_size, in_std))
    };
    let model = ModelGraph {
        config: c.clone(),
        embedding,
        layers,
        final_norm,
        lm_head,
        plan: RotationPlan::default(),
        act_quant: None,
    };
    model.validate()?;
    Ok(model)
}

/// Draws an index from unnormalized log-weights.
fn sample_logits<R: Rng + ?Sized>(rng: &mut R, logits: &[f64]) -> u32 {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = logits.iter().map(|l| (l - max).exp()).collect();
    let total: f64 = weights.iter().sum();
    let mut u = rng.random::<f64>() * total;
    for (i, w) in weights.iter().enumerate() {
        if u < *w {
            return i as u32;
        }
        u -= w;
    }
    (weights.len() - 1) as u32
}

/// Synthetic corpus drawn from the model itself: `n_seqs` sequences of
/// `seq_len` tokens, each starting from a uniform token.
pub fn sample_tokens<R: Rng + ?Sized>(
    model: &ModelGraph,
    n_seqs: usize,
    seq_len: usize,
    rng: &mut R,
) -> Result<Vec<u32>> {
    let vocab = model.config.vocab_size as u32;
    let mut out = Vec::with_capacity(n_seqs * seq_len);
    for _ in 0..n_seqs {
        let mut dec = model.decoder();
        let mut tok = rng.random_range(0..vocab);
        for i in 0..seq_len {
            out.push(tok);
            if i + 1 < seq_len {
                let logits = dec.step(tok)?;
                tok = sample_logits(rng, &logits);
            }
        }
    }
    Ok(out)
}
