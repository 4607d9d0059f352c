use alloc::vec;
use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;

use super::config::TinyLlmConfig;
use crate::error::{Error, Result};
use crate::hadamard::{apply_right, ExpandedRotation};
use crate::numerics::{matmul, matmul_nt, Tensor};
use crate::quant::{fake_quantize, GroupAxis, SchemeFamily};

pub const RMS_EPS: f64 = 1e-5;

/// One decoder block. Linear weights are `in × out` (`y = x·W`).
#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub attn_norm: Vec<f64>,
    pub wq: Tensor,
    pub wk: Tensor,
    pub wv: Tensor,
    pub wo: Tensor,
    pub mlp_norm: Vec<f64>,
    pub w_gate: Tensor,
    pub w_up: Tensor,
    pub w_down: Tensor,
}

/// The seven linear layers of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearKind {
    Q,
    K,
    V,
    O,
    Gate,
    Up,
    Down,
}

impl LinearKind {
    pub const ALL: [LinearKind; 7] = [
        LinearKind::Q,
        LinearKind::K,
        LinearKind::V,
        LinearKind::O,
        LinearKind::Gate,
        LinearKind::Up,
        LinearKind::Down,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LinearKind::Q => "wq",
            LinearKind::K => "wk",
            LinearKind::V => "wv",
            LinearKind::O => "wo",
            LinearKind::Gate => "w_gate",
            LinearKind::Up => "w_up",
            LinearKind::Down => "w_down",
        }
    }

    pub fn site(self) -> InputSite {
        match self {
            LinearKind::Q | LinearKind::K | LinearKind::V => InputSite::Attn,
            LinearKind::O => InputSite::AttnOut,
            LinearKind::Gate | LinearKind::Up => InputSite::Mlp,
            LinearKind::Down => InputSite::Down,
        }
    }
}

/// Distinct linear inputs within a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InputSite {
    /// Normed residual feeding q/k/v.
    Attn,
    /// Concatenated head outputs feeding `wo`.
    AttnOut,
    /// Normed residual feeding gate/up.
    Mlp,
    /// Gated hidden state feeding `w_down`, after any online rotation.
    Down,
}

impl Layer {
    pub fn linear(&self, kind: LinearKind) -> &Tensor {
        match kind {
            LinearKind::Q => &self.wq,
            LinearKind::K => &self.wk,
            LinearKind::V => &self.wv,
            LinearKind::O => &self.wo,
            LinearKind::Gate => &self.w_gate,
            LinearKind::Up => &self.w_up,
            LinearKind::Down => &self.w_down,
        }
    }

    pub fn linear_mut(&mut self, kind: LinearKind) -> &mut Tensor {
        match kind {
            LinearKind::Q => &mut self.wq,
            LinearKind::K => &mut self.wk,
            LinearKind::V => &mut self.wv,
            LinearKind::O => &mut self.wo,
            LinearKind::Gate => &mut self.w_gate,
            LinearKind::Up => &mut self.w_up,
            LinearKind::Down => &mut self.w_down,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LmHead {
    /// Logits use the transposed embedding.
    Tied,
    /// `d_model × vocab`.
    Separate(Tensor),
}

/// Rotations applied to the graph so far.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RotationPlan {
    /// Residual-stream rotation, merged.
    pub r1: Option<Tensor>,
    /// Per-KV-head value rotation, merged into `wv`/`wo`.
    pub r2: Option<ExpandedRotation>,
    /// Down-projection input rotation, applied online.
    pub r4: Option<ExpandedRotation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelGraph {
    pub config: TinyLlmConfig,
    /// `vocab × d_model`.
    pub embedding: Tensor,
    pub layers: Vec<Layer>,
    pub final_norm: Vec<f64>,
    pub lm_head: LmHead,
    pub plan: RotationPlan,
    /// Fake-quantize every linear input with this family's activation scheme.
    pub act_quant: Option<SchemeFamily>,
}

impl ModelGraph {
    /// Width of each value head (expanded when R2 is).
    pub fn value_dim(&self) -> usize {
        self.plan.r2.as_ref().map_or(self.config.head_dim, |r| r.m())
    }

    /// Input width of the down projection (expanded when R4 is).
    pub fn down_in(&self) -> usize {
        self.plan.r4.as_ref().map_or(self.config.d_ffn, |r| r.m())
    }

    /// Checks every tensor shape against the config and plan.
    pub fn validate(&self) -> Result<()> {
        let c = &self.config;
        c.validate()?;
        let d = c.d_model;
        let vd = self.value_dim();
        let expect = |t: &Tensor, shape: (usize, usize), what: &'static str| {
            if t.shape() == shape {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    op: what,
                    lhs: shape,
                    rhs: t.shape(),
                })
            }
        };
        expect(&self.embedding, (c.vocab_size, d), "embedding")?;
        if self.layers.len() != c.n_layers {
            return Err(Error::InvalidConfig(alloc::format!(
                "{} layers, config says {}",
                self.layers.len(),
                c.n_layers
            )));
        }
        for l in &self.layers {
            expect(&l.wq, (d, c.n_heads * c.head_dim), "wq")?;
            expect(&l.wk, (d, c.n_kv_heads * c.head_dim), "wk")?;
            expect(&l.wv, (d, c.n_kv_heads * vd), "wv")?;
            expect(&l.wo, (c.n_heads * vd, d), "wo")?;
            expect(&l.w_gate, (d, c.d_ffn), "w_gate")?;
            expect(&l.w_up, (d, c.d_ffn), "w_up")?;
            expect(&l.w_down, (self.down_in(), d), "w_down")?;
            if l.attn_norm.len() != d || l.mlp_norm.len() != d {
                return Err(Error::InvalidConfig("norm width".into()));
            }
        }
        if self.final_norm.len() != d {
            return Err(Error::InvalidConfig("final norm width".into()));
        }
        if let LmHead::Separate(h) = &self.lm_head {
            expect(h, (d, c.vocab_size), "lm_head")?;
        }
        if let Some(r) = &self.plan.r2 {
            if r.n() != c.head_dim {
                return Err(Error::InvalidConfig("r2 input width must be head_dim".into()));
            }
        }
        if let Some(r) = &self.plan.r4 {
            if r.n() != c.d_ffn {
                return Err(Error::InvalidConfig("r4 input width must be d_ffn".into()));
            }
        }
        Ok(())
    }

    /// Parameters held in tensors (LM head excluded, as in the closed form).
    pub fn count_params(&self) -> u64 {
        let mut n = self.embedding.data().len() + self.final_norm.len();
        for l in &self.layers {
            n += l.attn_norm.len() + l.mlp_norm.len();
            n += LinearKind::ALL
                .iter()
                .map(|&k| l.linear(k).data().len())
                .sum::<usize>();
        }
        n as u64
    }

    fn act(&self, x: &Tensor) -> Result<Tensor> {
        match self.act_quant {
            Some(f) => fake_quantize(x, f.activation_scheme(), GroupAxis::Row),
            None => Ok(x.clone()),
        }
    }

    fn check_tokens(&self, tokens: &[u32]) -> Result<()> {
        if let Some(&t) = tokens.iter().find(|&&t| t as usize >= self.config.vocab_size) {
            return Err(Error::TokenOutOfRange {
                token: t,
                vocab: self.config.vocab_size,
            });
        }
        Ok(())
    }

    fn embed(&self, tokens: &[u32]) -> Tensor {
        let d = self.config.d_model;
        let mut h = Tensor::zeros(tokens.len(), d);
        for (i, &t) in tokens.iter().enumerate() {
            h.row_mut(i).copy_from_slice(self.embedding.row(t as usize));
        }
        h
    }

    fn logits_from_hidden(&self, h: &Tensor) -> Result<Tensor> {
        let f = rms_norm(h, &self.final_norm);
        match &self.lm_head {
            LmHead::Tied => matmul_nt(&f, &self.embedding),
            LmHead::Separate(w) => matmul(&f, w),
        }
    }

    /// Logits (`T × vocab`) for one sequence.
    pub fn forward_logits(&self, tokens: &[u32]) -> Result<Tensor> {
        self.forward_with(tokens, |_, _, _| {})
    }

    /// Forward pass that reports every distinct linear input (before
    /// activation quantization) to `observe(layer, site, x)`.
    pub fn forward_with(
        &self,
        tokens: &[u32],
        mut observe: impl FnMut(usize, InputSite, &Tensor),
    ) -> Result<Tensor> {
        self.check_tokens(tokens)?;
        let c = &self.config;
        let t_len = tokens.len();
        let rope = RopeTable::new(t_len, c.head_dim, c.rope_theta);
        let mut h = self.embed(tokens);
        let vd = self.value_dim();
        for (li, layer) in self.layers.iter().enumerate() {
            let a = rms_norm(&h, &layer.attn_norm);
            observe(li, InputSite::Attn, &a);
            let aq = self.act(&a)?;
            let mut q = matmul(&aq, &layer.wq)?;
            let mut k = matmul(&aq, &layer.wk)?;
            let v = matmul(&aq, &layer.wv)?;
            for t in 0..t_len {
                rope.apply(t, q.row_mut(t), c.head_dim);
                rope.apply(t, k.row_mut(t), c.head_dim);
            }
            let mut o = Tensor::zeros(t_len, c.n_heads * vd);
            let scale = 1.0 / (c.head_dim as f64).sqrt();
            let mut scores = vec![0.0; t_len];
            for head in 0..c.n_heads {
                let kv = head / c.group_size();
                for t in 0..t_len {
                    let qh = &q.row(t)[head * c.head_dim..(head + 1) * c.head_dim];
                    let keys = (0..=t).map(|s| &k.row(s)[kv * c.head_dim..(kv + 1) * c.head_dim]);
                    let values = (0..=t).map(|s| &v.row(s)[kv * vd..(kv + 1) * vd]);
                    attend(
                        qh,
                        keys,
                        values,
                        scale,
                        &mut scores[..=t],
                        &mut o.row_mut(t)[head * vd..(head + 1) * vd],
                    );
                }
            }
            observe(li, InputSite::AttnOut, &o);
            let attn = matmul(&self.act(&o)?, &layer.wo)?;
            h = h.add(&attn)?;

            let m = rms_norm(&h, &layer.mlp_norm);
            observe(li, InputSite::Mlp, &m);
            let mq = self.act(&m)?;
            let gate = matmul(&mq, &layer.w_gate)?;
            let up = matmul(&mq, &layer.w_up)?;
            let mut s = gate;
            for (g, u) in s.data_mut().iter_mut().zip(up.data()) {
                *g = silu(*g) * u;
            }
            let s = match &self.plan.r4 {
                Some(r) => apply_right(&s, r)?,
                None => s,
            };
            observe(li, InputSite::Down, &s);
            let down = matmul(&self.act(&s)?, &layer.w_down)?;
            h = h.add(&down)?;
        }
        self.logits_from_hidden(&h)
    }

    /// Incremental decoder state for this model.
    pub fn decoder(&self) -> Decoder<'_> {
        Decoder {
            model: self,
            keys: vec![Vec::new(); self.layers.len()],
            values: vec![Vec::new(); self.layers.len()],
        }
    }
}

/// Token-at-a-time evaluation with a KV cache; produces the same logits as
/// [`ModelGraph::forward_logits`] on the growing prefix.
pub struct Decoder<'a> {
    model: &'a ModelGraph,
    keys: Vec<Vec<Vec<f64>>>,
    values: Vec<Vec<Vec<f64>>>,
}

impl Decoder<'_> {
    pub fn position(&self) -> usize {
        self.keys.first().map_or(0, Vec::len)
    }

    /// Feed one token; returns the logits predicting the next one.
    pub fn step(&mut self, token: u32) -> Result<Vec<f64>> {
        let model = self.model;
        model.check_tokens(&[token])?;
        let c = &model.config;
        let pos = self.position();
        let rope = RopeTable::new(pos + 1, c.head_dim, c.rope_theta);
        let mut h = model.embed(&[token]);
        let vd = model.value_dim();
        let scale = 1.0 / (c.head_dim as f64).sqrt();
        for (li, layer) in model.layers.iter().enumerate() {
            let a = rms_norm(&h, &layer.attn_norm);
            let aq = model.act(&a)?;
            let mut q = matmul(&aq, &layer.wq)?;
            let mut k = matmul(&aq, &layer.wk)?;
            let v = matmul(&aq, &layer.wv)?;
            rope.apply(pos, q.row_mut(0), c.head_dim);
            rope.apply(pos, k.row_mut(0), c.head_dim);
            self.keys[li].push(k.row(0).to_vec());
            self.values[li].push(v.row(0).to_vec());
            let keys = &self.keys[li];
            let values = &self.values[li];
            let mut o = Tensor::zeros(1, c.n_heads * vd);
            let mut scores = vec![0.0; pos + 1];
            for head in 0..c.n_heads {
                let kv = head / c.group_size();
                let qh = &q.row(0)[head * c.head_dim..(head + 1) * c.head_dim];
                attend(
                    qh,
                    keys.iter().map(|r| &r[kv * c.head_dim..(kv + 1) * c.head_dim]),
                    values.iter().map(|r| &r[kv * vd..(kv + 1) * vd]),
                    scale,
                    &mut scores,
                    &mut o.row_mut(0)[head * vd..(head + 1) * vd],
                );
            }
            h = h.add(&matmul(&model.act(&o)?, &layer.wo)?)?;
            let m = rms_norm(&h, &layer.mlp_norm);
            let mq = model.act(&m)?;
            let mut s = matmul(&mq, &layer.w_gate)?;
            let up = matmul(&mq, &layer.w_up)?;
            for (g, u) in s.data_mut().iter_mut().zip(up.data()) {
                *g = silu(*g) * u;
            }
            let s = match &model.plan.r4 {
                Some(r) => apply_right(&s, r)?,
                None => s,
            };
            h = h.add(&matmul(&model.act(&s)?, &layer.w_down)?)?;
        }
        Ok(model.logits_from_hidden(&h)?.into_data())
    }
}

/// Softmax-weighted sum of `values` under scaled dot-product scores.
fn attend<'k, 'v>(
    q: &[f64],
    keys: impl Iterator<Item = &'k [f64]>,
    values: impl Iterator<Item = &'v [f64]>,
    scale: f64,
    scores: &mut [f64],
    out: &mut [f64],
) {
    let mut max = f64::NEG_INFINITY;
    for (s, k) in scores.iter_mut().zip(keys) {
        *s = q.iter().zip(k).map(|(a, b)| a * b).sum::<f64>() * scale;
        max = max.max(*s);
    }
    let mut total = 0.0;
    for s in scores.iter_mut() {
        *s = (*s - max).exp();
        total += *s;
    }
    out.fill(0.0);
    for (s, v) in scores.iter().zip(values) {
        let p = s / total;
        for (o, x) in out.iter_mut().zip(v) {
            *o += p * x;
        }
    }
}

#[inline]
fn silu(x: f64) -> f64 {
    x / (1.0 + (-x).exp())
}

/// Row-wise RMS normalization followed by elementwise `weight`.
pub fn rms_norm(x: &Tensor, weight: &[f64]) -> Tensor {
    let mut out = x.clone();
    let d = x.cols() as f64;
    for r in 0..x.rows() {
        let row = out.row_mut(r);
        let ms = row.iter().map(|v| v * v).sum::<f64>() / d;
        let inv = 1.0 / (ms + RMS_EPS).sqrt();
        for (v, g) in row.iter_mut().zip(weight) {
            *v *= inv * g;
        }
    }
    out
}

/// Rotary embedding angles, rotate-half layout.
struct RopeTable {
    cos: Vec<f64>,
    sin: Vec<f64>,
    half: usize,
}

impl RopeTable {
    fn new(len: usize, head_dim: usize, theta: f64) -> Self {
        let half = head_dim / 2;
        let mut cos = Vec::with_capacity(len * half);
        let mut sin = Vec::with_capacity(len * half);
        for t in 0..len {
            for i in 0..half {
                let freq = theta.powf(-2.0 * i as f64 / head_dim as f64);
                let a = t as f64 * freq;
                cos.push(a.cos());
                sin.push(a.sin());
            }
        }
        Self { cos, sin, half }
    }

    /// Rotate every head in `row` for position `t`.
    fn apply(&self, t: usize, row: &mut [f64], head_dim: usize) {
        let base = t * self.half;
        for head in row.chunks_mut(head_dim) {
            for i in 0..self.half {
                let (c, s) = (self.cos[base + i], self.sin[base + i]);
                let (a, b) = (head[i], head[i + self.half]);
                head[i] = a * c - b * s;
                head[i + self.half] = a * s + b * c;
            }
        }
    }
}

/// Log-softmax probability of `target` under `logits`.
pub fn log_prob(logits: &[f64], target: usize) -> f64 {
    let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lse = logits.iter().map(|l| (l - max).exp()).sum::<f64>().ln() + max;
    logits[target] - lse
}

/// Sum of next-token negative log-likelihoods and the number of predictions,
/// over non-overlapping windows of `seq_len`.
pub fn nll_sum(model: &ModelGraph, tokens: &[u32], seq_len: usize) -> Result<(f64, usize)> {
    if tokens.len() < 2 {
        return Err(Error::EmptyInput("perplexity needs at least two tokens"));
    }
    if seq_len < 2 {
        return Err(Error::InvalidConfig("sequence length must be at least 2".into()));
    }
    // Neumaier summation: eval runs add up to millions of similar terms.
    let (mut total, mut carry) = (0.0f64, 0.0f64);
    let mut count = 0;
    for window in tokens.chunks(seq_len) {
        if window.len() < 2 {
            continue;
        }
        let logits = model.forward_logits(window)?;
        for t in 0..window.len() - 1 {
            let x = -log_prob(logits.row(t), window[t + 1] as usize);
            let s = total + x;
            carry += if total.abs() >= x.abs() { (total - s) + x } else { (x - s) + total };
            total = s;
            count += 1;
        }
    }
    Ok((total + carry, count))
}

/// `exp(mean NLL)` over non-overlapping windows of `seq_len` tokens.
pub fn perplexity(model: &ModelGraph, tokens: &[u32], seq_len: usize) -> Result<f64> {
    let (total, count) = nll_sum(model, tokens, seq_len)?;
    Ok((total / count as f64).exp())
}
