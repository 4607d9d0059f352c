use alloc::format;

use super::graph::{LmHead, ModelGraph};
use crate::error::{Error, Result};
use crate::hadamard::{apply_left_transpose, build_expanded, ExpandedRotation};
use crate::numerics::{matmul, matmul_tn, Tensor};

/// Gram tolerance for rotations merged into the graph.
pub const ORTHO_TOL: f64 = 1e-6;

fn scale_rows(w: &mut Tensor, g: &[f64]) {
    for (r, s) in g.iter().enumerate() {
        w.row_mut(r).iter_mut().for_each(|v| *v *= s);
    }
}

fn norms_are_folded(model: &ModelGraph) -> bool {
    let ones = |g: &[f64]| g.iter().all(|&v| v == 1.0);
    ones(&model.final_norm)
        && model
            .layers
            .iter()
            .all(|l| ones(&l.attn_norm) && ones(&l.mlp_norm))
}

/// Absorbs every RMSNorm weight into the linears that read it. The LM head is
/// untied when the final norm is not already all-ones.
pub fn fold_norm_weights(model: &ModelGraph) -> ModelGraph {
    let mut out = model.clone();
    for l in &mut out.layers {
        for w in [&mut l.wq, &mut l.wk, &mut l.wv] {
            scale_rows(w, &l.attn_norm);
        }
        for w in [&mut l.w_gate, &mut l.w_up] {
            scale_rows(w, &l.mlp_norm);
        }
        l.attn_norm.fill(1.0);
        l.mlp_norm.fill(1.0);
    }
    if out.final_norm.iter().any(|&g| g != 1.0) {
        let mut head = match &out.lm_head {
            LmHead::Tied => out.embedding.transpose(),
            LmHead::Separate(w) => w.clone(),
        };
        scale_rows(&mut head, &out.final_norm);
        out.lm_head = LmHead::Separate(head);
        out.final_norm.fill(1.0);
    }
    out
}

/// Merges a residual-stream rotation: `E ← E·R`, readers `W ← RᵀW`,
/// writers `W ← W·R`, LM head `← Rᵀ·head`.
pub fn merge_r1(model: &ModelGraph, r1: &Tensor) -> Result<ModelGraph> {
    let d = model.config.d_model;
    if r1.shape() != (d, d) {
        return Err(Error::DimensionMismatch {
            op: "merge_r1",
            lhs: (d, d),
            rhs: r1.shape(),
        });
    }
    let gram = r1.gram_error();
    if !(gram <= ORTHO_TOL) {
        return Err(Error::NonOrthogonal(gram));
    }
    if !norms_are_folded(model) {
        return Err(Error::InvalidConfig(
            "fold norm weights before merging a residual rotation".into(),
        ));
    }
    let mut out = model.clone();
    out.embedding = matmul(&model.embedding, r1)?;
    for l in &mut out.layers {
        for w in [&mut l.wq, &mut l.wk, &mut l.wv, &mut l.w_gate, &mut l.w_up] {
            *w = matmul_tn(r1, w)?;
        }
        for w in [&mut l.wo, &mut l.w_down] {
            *w = matmul(w, r1)?;
        }
    }
    // A tied head follows the rotated embedding automatically.
    if let LmHead::Separate(h) = &model.lm_head {
        out.lm_head = LmHead::Separate(matmul_tn(r1, h)?);
    }
    out.plan.r1 = Some(match &model.plan.r1 {
        Some(prev) => matmul(prev, r1)?,
        None => r1.clone(),
    });
    Ok(out)
}

/// Merges a value-space rotation `R` (`head_dim × m`, orthonormal rows) into
/// every KV head of `wv` and every query head of `wo`. With `m > head_dim`
/// the value heads widen.
pub fn merge_value_rotation(model: &ModelGraph, r: &Tensor) -> Result<ModelGraph> {
    let c = &model.config;
    let vd = model.value_dim();
    if model.plan.r2.is_some() || vd != c.head_dim {
        return Err(Error::InvalidConfig("value space already expanded".into()));
    }
    if r.rows() != vd || r.cols() < vd {
        return Err(Error::DimensionMismatch {
            op: "merge_value_rotation",
            lhs: (vd, vd),
            rhs: r.shape(),
        });
    }
    let gram = matmul(r, &r.transpose())?.sub(&Tensor::identity(vd))?.frobenius_norm();
    if !(gram <= ORTHO_TOL) {
        return Err(Error::NonOrthogonal(gram));
    }
    let m = r.cols();
    let d = c.d_model;
    let mut out = model.clone();
    for l in &mut out.layers {
        let mut wv = Tensor::zeros(d, c.n_kv_heads * m);
        for h in 0..c.n_kv_heads {
            let block = matmul(&l.wv.slice_cols(h * vd, (h + 1) * vd), r)?;
            for row in 0..d {
                wv.row_mut(row)[h * m..(h + 1) * m].copy_from_slice(block.row(row));
            }
        }
        let mut wo = Tensor::zeros(c.n_heads * m, d);
        for h in 0..c.n_heads {
            let block = matmul_tn(r, &l.wo.slice_rows(h * vd, (h + 1) * vd))?;
            for j in 0..m {
                wo.row_mut(h * m + j).copy_from_slice(block.row(j));
            }
        }
        l.wv = wv;
        l.wo = wo;
    }
    Ok(out)
}

/// Expands each value head from `head_dim` to `expanded_head_dim` with `Ĥ`.
pub fn expand_r2(model: &ModelGraph, expanded_head_dim: usize) -> Result<ModelGraph> {
    let rot = build_expanded(model.config.head_dim, expanded_head_dim)?;
    let mut out = merge_value_rotation(model, &rot.materialize())?;
    out.plan.r2 = Some(rot);
    Ok(out)
}

/// Inserts an online `Ĥ` on the down-projection input and replaces
/// `w_down` with `Ĥᵀ·w_down`.
pub fn expand_r4(model: &ModelGraph, expanded_ffn: usize) -> Result<ModelGraph> {
    if model.plan.r4.is_some() {
        return Err(Error::InvalidConfig("down projection already rotated".into()));
    }
    let rot = build_expanded(model.config.d_ffn, expanded_ffn)?;
    apply_r4(model, rot)
}

/// [`expand_r4`] with a caller-supplied rotation.
pub fn apply_r4(model: &ModelGraph, rot: ExpandedRotation) -> Result<ModelGraph> {
    if rot.n() != model.config.d_ffn {
        return Err(Error::InvalidConfig(format!(
            "r4 input width {} != d_ffn {}",
            rot.n(),
            model.config.d_ffn
        )));
    }
    let mut out = model.clone();
    for l in &mut out.layers {
        l.w_down = apply_left_transpose(&l.w_down, &rot)?;
    }
    out.plan.r4 = Some(rot);
    Ok(out)
}
