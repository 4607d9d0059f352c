use alloc::format;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shape of a Llama-style decoder.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TinyLlmConfig {
    pub n_layers: usize,
    pub d_model: usize,
    pub n_heads: usize,
    pub n_kv_heads: usize,
    pub head_dim: usize,
    pub d_ffn: usize,
    pub vocab_size: usize,
    pub rope_theta: f64,
    pub tied_embeddings: bool,
}

impl TinyLlmConfig {
    /// Desk-scale test model: 4 layers, width 128, 4 heads over 2 KV heads.
    pub fn fixture() -> Self {
        Self {
            n_layers: 4,
            d_model: 128,
            n_heads: 4,
            n_kv_heads: 2,
            head_dim: 32,
            d_ffn: 384,
            vocab_size: 512,
            rope_theta: 10_000.0,
            tied_embeddings: true,
        }
    }

    /// Llama 3.2 1B shape.
    pub fn llama_3_2_1b() -> Self {
        Self {
            n_layers: 16,
            d_model: 2048,
            n_heads: 32,
            n_kv_heads: 8,
            head_dim: 64,
            d_ffn: 8192,
            vocab_size: 128_256,
            rope_theta: 500_000.0,
            tied_embeddings: true,
        }
    }

    /// Llama 3.1 8B shape.
    pub fn llama_3_1_8b() -> Self {
        Self {
            n_layers: 32,
            d_model: 4096,
            n_heads: 32,
            n_kv_heads: 8,
            head_dim: 128,
            d_ffn: 14_336,
            vocab_size: 128_256,
            rope_theta: 500_000.0,
            tied_embeddings: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidConfig(msg));
        if self.n_layers == 0 || self.d_model == 0 || self.d_ffn == 0 || self.vocab_size == 0 {
            return bad(format!("zero-sized dimension in {self:?}"));
        }
        if self.n_heads == 0 || self.n_kv_heads == 0 || self.head_dim == 0 {
            return bad(format!("zero-sized attention in {self:?}"));
        }
        if self.d_model != self.n_heads * self.head_dim {
            return bad(format!(
                "d_model {} != n_heads {} × head_dim {}",
                self.d_model, self.n_heads, self.head_dim
            ));
        }
        if self.n_heads % self.n_kv_heads != 0 {
            return bad(format!(
                "n_heads {} not divisible by n_kv_heads {}",
                self.n_heads, self.n_kv_heads
            ));
        }
        if self.head_dim % 2 != 0 {
            return bad(format!("head_dim {} must be even for rotary embeddings", self.head_dim));
        }
        if !(self.rope_theta.is_finite() && self.rope_theta > 0.0) {
            return bad(format!("rope_theta must be positive, got {}", self.rope_theta));
        }
        Ok(())
    }

    /// Query heads sharing one KV head.
    pub fn group_size(&self) -> usize {
        self.n_heads / self.n_kv_heads
    }

    /// Parameter count with value heads of width `value_dim` and a
    /// down projection with `down_in` input channels. The LM head (the last
    /// linear layer) is never counted, tied or not.
    pub fn param_count_with(&self, value_dim: usize, down_in: usize) -> u64 {
        let d = self.d_model as u64;
        let layer = 2 * d
            + d * (self.n_heads * self.head_dim) as u64
            + d * (self.n_kv_heads * self.head_dim) as u64
            + d * (self.n_kv_heads * value_dim) as u64
            + (self.n_heads * value_dim) as u64 * d
            + 2 * d * self.d_ffn as u64
            + down_in as u64 * d;
        self.vocab_size as u64 * d + self.n_layers as u64 * layer + d
    }

    pub fn param_count(&self) -> u64 {
        self.param_count_with(self.head_dim, self.d_ffn)
    }
}

/// Expanded widths of the rotated sub-spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDims {
    /// Value/output-projection head width (equal to `head_dim` when unexpanded).
    pub value_dim: usize,
    /// Down-projection input width (equal to `d_ffn` when unexpanded).
    pub down_in: usize,
}

impl ExpansionDims {
    pub fn none(config: &TinyLlmConfig) -> Self {
        Self {
            value_dim: config.head_dim,
            down_in: config.d_ffn,
        }
    }
}

/// Closed-form parameter growth `(m − n)·fan_out` summed over the expanded layers.
pub fn expansion_param_delta(config: &TinyLlmConfig, dims: ExpansionDims) -> u64 {
    config.param_count_with(dims.value_dim, dims.down_in) - config.param_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_count() {
        let c = TinyLlmConfig {
            n_layers: 2,
            d_model: 8,
            n_heads: 2,
            n_kv_heads: 2,
            head_dim: 4,
            d_ffn: 16,
            vocab_size: 32,
            rope_theta: 10_000.0,
            tied_embeddings: true,
        };
        c.validate().unwrap();
        assert_eq!(c.param_count(), 1576);
        let untied = TinyLlmConfig {
            tied_embeddings: false,
            ..c
        };
        assert_eq!(untied.param_count(), 1576);
    }

    #[test]
    fn llama_shapes() {
        assert_eq!(TinyLlmConfig::llama_3_2_1b().param_count(), 1_235_814_400);
        assert_eq!(TinyLlmConfig::llama_3_1_8b().param_count(), 7_504_924_672);
        TinyLlmConfig::fixture().validate().unwrap();
    }

    #[test]
    fn down_projection_deltas() {
        let c = TinyLlmConfig::llama_3_2_1b();
        for (m, delta) in [
            (8960, 25_165_824u64),
            (9728, 50_331_648),
            (10240, 67_108_864),
            (12288, 134_217_728),
        ] {
            let dims = ExpansionDims {
                value_dim: c.head_dim,
                down_in: m,
            };
            assert_eq!(expansion_param_delta(&c, dims), delta);
        }
        let c8 = TinyLlmConfig::llama_3_1_8b();
        let dims = ExpansionDims {
            value_dim: c8.head_dim,
            down_in: 15360,
        };
        assert_eq!(expansion_param_delta(&c8, dims), 134_217_728);
    }

    #[test]
    fn value_expansion_delta() {
        let c = TinyLlmConfig::fixture();
        let dims = ExpansionDims {
            value_dim: 48,
            down_in: c.d_ffn,
        };
        // per layer: wv gains d·n_kv·Δ, wo gains n_heads·Δ·d
        let want = (c.n_layers * c.d_model * 16 * (c.n_kv_heads + c.n_heads)) as u64;
        assert_eq!(expansion_param_delta(&c, dims), want);
    }

    #[test]
    fn invalid_configs() {
        let mut c = TinyLlmConfig::fixture();
        c.head_dim = 31;
        assert!(c.validate().is_err());
        let mut c = TinyLlmConfig::fixture();
        c.n_kv_heads = 3;
        assert!(c.validate().is_err());
    }
}
