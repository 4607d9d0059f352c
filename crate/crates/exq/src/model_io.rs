//! Models on disk: an `EXQ1` container plus a JSON manifest next to it.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use exq_core::hadamard::ExpandedRotation;
use exq_core::model::{
    linear_name, Layer, LinearKind, LmHead, ModelGraph, QuantizedModel, RotationPlan,
    TinyLlmConfig,
};
use exq_core::quant::{
    GroupAxis, QuantKind, QuantScheme, QuantizedTensor, ScaleGrid, Scales, SchemeFamily,
};
use serde::{Deserialize, Serialize};

use crate::container::{Container, Record, TensorData};
use crate::error::{ExqError, Result};

pub const MANIFEST_FORMAT: &str = "exq-model";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelManifest {
    pub format: String,
    pub config: TinyLlmConfig,
    pub lm_head_tied: bool,
    pub r1: bool,
    pub r2_dim: Option<usize>,
    pub r4_dim: Option<usize>,
    pub act_quant: Option<SchemeFamily>,
    pub quantized: bool,
    pub params: u64,
}

/// `model.exq` → `model.json`.
pub fn manifest_path(path: &Path) -> PathBuf {
    path.with_extension("json")
}

fn rotation_from_dims(n: usize, m: Option<usize>, signs: Option<Vec<f64>>) -> Result<Option<ExpandedRotation>> {
    let Some(m) = m else { return Ok(None) };
    let rot = ExpandedRotation::new(n, m)?;
    Ok(Some(match signs {
        Some(s) => rot.with_sign_flips(s)?,
        None => rot,
    }))
}

fn push_float_parts(c: &mut Container, model: &ModelGraph) -> Result<()> {
    c.push_matrix("embedding", &model.embedding)?;
    for (i, l) in model.layers.iter().enumerate() {
        c.push_vector(format!("layers.{i}.attn_norm"), &l.attn_norm)?;
        c.push_vector(format!("layers.{i}.mlp_norm"), &l.mlp_norm)?;
    }
    c.push_vector("final_norm", &model.final_norm)?;
    if let LmHead::Separate(h) = &model.lm_head {
        c.push_matrix("lm_head", h)?;
    }
    if let Some(r1) = &model.plan.r1 {
        c.push_matrix("rotation.r1", r1)?;
    }
    for (name, rot) in [("r2", &model.plan.r2), ("r4", &model.plan.r4)] {
        if let Some(signs) = rot.as_ref().and_then(|r| r.sign_flips()) {
            c.push_vector(format!("rotation.{name}.signs"), signs)?;
        }
    }
    Ok(())
}

fn manifest_for(model: &ModelGraph, quantized: bool) -> ModelManifest {
    ModelManifest {
        format: MANIFEST_FORMAT.to_string(),
        config: model.config.clone(),
        lm_head_tied: matches!(model.lm_head, LmHead::Tied),
        r1: model.plan.r1.is_some(),
        r2_dim: model.plan.r2.as_ref().map(|r| r.m()),
        r4_dim: model.plan.r4.as_ref().map(|r| r.m()),
        act_quant: model.act_quant,
        quantized,
        params: model.count_params(),
    }
}

fn kind_code(k: QuantKind) -> u8 {
    match k {
        QuantKind::Int4SymPerChannel => 0,
        QuantKind::Int4AsymPerToken => 1,
        QuantKind::Mxfp4 => 2,
    }
}

fn kind_from_code(c: u8) -> Result<QuantKind> {
    Ok(match c {
        0 => QuantKind::Int4SymPerChannel,
        1 => QuantKind::Int4AsymPerToken,
        2 => QuantKind::Mxfp4,
        _ => return Err(ExqError::Format(format!("unknown scheme code {c}"))),
    })
}

/// Stores `q` as `<name>.codes`, `<name>.scales`, `<name>.scheme` and, for
/// asymmetric schemes, `<name>.zero_points`.
pub fn push_quantized(c: &mut Container, name: &str, q: &QuantizedTensor) -> Result<()> {
    let dims = vec![q.rows() as u64, q.cols() as u64];
    c.push(Record::new(
        format!("{name}.codes"),
        dims,
        TensorData::Packed4(q.packed_codes().to_vec()),
    )?)?;
    let scales = match q.scales() {
        Scales::F32(v) => TensorData::F32(v.clone()),
        Scales::E8M0(v) => TensorData::U8(v.clone()),
    };
    let n = q.scales().len() as u64;
    c.push(Record::new(format!("{name}.scales"), vec![n], scales)?)?;
    if !q.zero_points().is_empty() {
        let zp = q.zero_points().to_vec();
        c.push(Record::new(
            format!("{name}.zero_points"),
            vec![zp.len() as u64],
            TensorData::U8(zp),
        )?)?;
    }
    let axis = match q.axis() {
        GroupAxis::Row => 0,
        GroupAxis::Column => 1,
    };
    let scheme = vec![
        kind_code(q.scheme().kind()),
        axis,
        q.scheme().group_size() as u8,
    ];
    c.push(Record::new(format!("{name}.scheme"), vec![3], TensorData::U8(scheme))?)
}

pub fn read_quantized(c: &Container, name: &str) -> Result<QuantizedTensor> {
    let bad = |what: &str| ExqError::Format(format!("{name}.{what} has the wrong type"));
    let codes = c.require(&format!("{name}.codes"))?;
    let (rows, cols, packed) = match (&codes.data, codes.dims.as_slice()) {
        (TensorData::Packed4(p), [r, k]) => (*r as usize, *k as usize, p.clone()),
        _ => return Err(bad("codes")),
    };
    let scheme = match &c.require(&format!("{name}.scheme"))?.data {
        TensorData::U8(v) if v.len() == 3 => v.clone(),
        _ => return Err(bad("scheme")),
    };
    let kind = kind_from_code(scheme[0])?;
    let axis = match scheme[1] {
        0 => GroupAxis::Row,
        1 => GroupAxis::Column,
        a => return Err(ExqError::Format(format!("unknown axis code {a}"))),
    };
    let scheme = QuantScheme::new(kind, scheme[2] as usize)?;
    let scales = match &c.require(&format!("{name}.scales"))?.data {
        TensorData::F32(v) => Scales::F32(v.clone()),
        TensorData::U8(v) => Scales::E8M0(v.clone()),
        _ => return Err(bad("scales")),
    };
    let zero_points = match c.get(&format!("{name}.zero_points")) {
        Some(Record {
            data: TensorData::U8(v),
            ..
        }) => v.clone(),
        Some(_) => return Err(bad("zero_points")),
        None => Vec::new(),
    };
    let grid = ScaleGrid::from_parts(rows, cols, scheme, axis, scales, zero_points)?;
    Ok(QuantizedTensor::from_packed(grid, packed)?)
}

fn write_manifest(path: &Path, manifest: &ModelManifest) -> Result<()> {
    let mp = manifest_path(path);
    let json = serde_json::to_string_pretty(manifest)?;
    fs::write(&mp, json + "\n").map_err(|e| ExqError::io(&mp, e))
}

pub fn read_manifest(path: &Path) -> Result<ModelManifest> {
    let mp = manifest_path(path);
    let text = fs::read_to_string(&mp).map_err(|e| ExqError::io(&mp, e))?;
    let m: ModelManifest = serde_json::from_str(&text)?;
    if m.format != MANIFEST_FORMAT {
        return Err(ExqError::Format(format!("{}: not an exq model manifest", mp.display())));
    }
    Ok(m)
}

pub fn model_to_container(model: &ModelGraph) -> Result<Container> {
    let mut c = Container::new();
    push_float_parts(&mut c, model)?;
    for (i, l) in model.layers.iter().enumerate() {
        for k in LinearKind::ALL {
            c.push_matrix(linear_name(i, k), l.linear(k))?;
        }
    }
    Ok(c)
}

pub fn quantized_to_container(q: &QuantizedModel) -> Result<Container> {
    let mut c = Container::new();
    push_float_parts(&mut c, &q.graph)?;
    for (name, t) in &q.tensors {
        push_quantized(&mut c, name, t)?;
    }
    Ok(c)
}

pub fn save_model(path: &Path, model: &ModelGraph) -> Result<()> {
    model_to_container(model)?.write(path)?;
    write_manifest(path, &manifest_for(model, false))
}

pub fn save_quantized(path: &Path, q: &QuantizedModel) -> Result<()> {
    quantized_to_container(q)?.write(path)?;
    write_manifest(path, &manifest_for(&q.graph, true))
}

/// Rebuilds the graph; linears come from `linear(layer, kind)`.
fn assemble(
    c: &Container,
    m: &ModelManifest,
    mut linear: impl FnMut(usize, LinearKind) -> Result<exq_core::Tensor>,
) -> Result<ModelGraph> {
    let cfg = &m.config;
    let mut layers = Vec::with_capacity(cfg.n_layers);
    for i in 0..cfg.n_layers {
        layers.push(Layer {
            attn_norm: c.vector(&format!("layers.{i}.attn_norm"))?,
            wq: linear(i, LinearKind::Q)?,
            wk: linear(i, LinearKind::K)?,
            wv: linear(i, LinearKind::V)?,
            wo: linear(i, LinearKind::O)?,
            mlp_norm: c.vector(&format!("layers.{i}.mlp_norm"))?,
            w_gate: linear(i, LinearKind::Gate)?,
            w_up: linear(i, LinearKind::Up)?,
            w_down: linear(i, LinearKind::Down)?,
        });
    }
    let signs = |name: &str| c.get(name).map(|_| c.vector(name)).transpose();
    let plan = RotationPlan {
        r1: if m.r1 { Some(c.matrix("rotation.r1")?) } else { None },
        r2: rotation_from_dims(cfg.head_dim, m.r2_dim, signs("rotation.r2.signs")?)?,
        r4: rotation_from_dims(cfg.d_ffn, m.r4_dim, signs("rotation.r4.signs")?)?,
    };
    let model = ModelGraph {
        config: cfg.clone(),
        embedding: c.matrix("embedding")?,
        layers,
        final_norm: c.vector("final_norm")?,
        lm_head: if m.lm_head_tied {
            LmHead::Tied
        } else {
            LmHead::Separate(c.matrix("lm_head")?)
        },
        plan,
        act_quant: m.act_quant,
    };
    model.validate()?;
    Ok(model)
}

pub fn model_from_container(c: &Container, m: &ModelManifest) -> Result<ModelGraph> {
    assemble(c, m, |i, k| c.matrix(&linear_name(i, k)))
}

pub fn quantized_from_container(c: &Container, m: &ModelManifest) -> Result<QuantizedModel> {
    let mut tensors = BTreeMap::new();
    let graph = assemble(c, m, |i, k| {
        let name = linear_name(i, k);
        let q = read_quantized(c, &name)?;
        let w = q.dequantize();
        tensors.insert(name, q);
        Ok(w)
    })?;
    Ok(QuantizedModel { graph, tensors })
}

/// Loads either kind of model; quantized linears come back dequantized.
pub fn load_model(path: &Path) -> Result<ModelGraph> {
    let m = read_manifest(path)?;
    let c = Container::read(path)?;
    if m.quantized {
        Ok(quantized_from_container(&c, &m)?.graph)
    } else {
        model_from_container(&c, &m)
    }
}

pub fn load_quantized(path: &Path) -> Result<QuantizedModel> {
    let m = read_manifest(path)?;
    if !m.quantized {
        return Err(ExqError::Config(format!("{} is not a quantized model", path.display())));
    }
    quantized_from_container(&Container::read(path)?, &m)
}
