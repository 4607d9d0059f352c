use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::graph::{InputSite, LinearKind, ModelGraph};
use crate::error::{Error, Result};
use crate::gptq::{gptq_quantize, rtn_quantize, HessianState, DEFAULT_BLOCK, DEFAULT_DAMPING};
use crate::numerics::{matmul, Tensor};
use crate::quant::{fake_quantize, GroupAxis, QuantizedTensor, SchemeFamily};

/// Linear inputs recorded during calibration, stacked over all tokens.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Captures {
    inputs: BTreeMap<(usize, InputSite), Tensor>,
}

impl Captures {
    pub fn get(&self, layer: usize, site: InputSite) -> Option<&Tensor> {
        self.inputs.get(&(layer, site))
    }

    /// Input matrix of one linear layer.
    pub fn input(&self, layer: usize, kind: LinearKind) -> Result<&Tensor> {
        self.get(layer, kind.site())
            .ok_or(Error::EmptyInput("no calibration capture for this layer"))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, InputSite), &Tensor)> {
        self.inputs.iter()
    }

    pub fn len(&self) -> usize {
        self.inputs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inputs.is_empty()
    }
}

/// Runs the first `n_samples` windows of `seq_len` tokens through `model`
/// (float, rewrites applied) and stacks every linear input.
pub fn capture_layer_inputs(
    model: &ModelGraph,
    tokens: &[u32],
    n_samples: usize,
    seq_len: usize,
) -> Result<Captures> {
    if seq_len == 0 || n_samples == 0 {
        return Err(Error::InvalidConfig("calibration needs samples".into()));
    }
    let mut parts: BTreeMap<(usize, InputSite), Vec<Tensor>> = BTreeMap::new();
    let mut used = 0;
    for window in tokens.chunks(seq_len).take(n_samples) {
        model.forward_with(window, |layer, site, x| {
            parts.entry((layer, site)).or_default().push(x.clone());
        })?;
        used += 1;
    }
    if used == 0 {
        return Err(Error::EmptyInput("calibration tokens"));
    }
    let mut inputs = BTreeMap::new();
    for (key, ts) in parts {
        inputs.insert(key, Tensor::vstack(&ts)?);
    }
    Ok(Captures { inputs })
}

/// Damped Hessian for one capture; an all-zero capture gives the identity
/// (GPTQ then reduces to round-to-nearest).
fn site_hessian(x: &Tensor) -> Result<Tensor> {
    let mut state = HessianState::new(x.cols());
    state.accumulate(x)?;
    let gram = state.mean_gram()?;
    if gram.diagonal().iter().all(|&v| v == 0.0) {
        return Ok(Tensor::identity(x.cols()));
    }
    state.finalize(DEFAULT_DAMPING)
}

/// How the weights are rounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantizeOptions {
    pub family: SchemeFamily,
    pub use_gptq: bool,
    pub act_order: bool,
}

/// A model whose linears hold dequantized weights, plus the packed tensors.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantizedModel {
    /// Dequantized weights with activation quantizers enabled.
    pub graph: ModelGraph,
    /// Keyed by [`linear_name`].
    pub tensors: BTreeMap<String, QuantizedTensor>,
}

/// `layers.{i}.{kind}`.
pub fn linear_name(layer: usize, kind: LinearKind) -> String {
    format!("layers.{layer}.{}", kind.name())
}

/// Quantizes every linear layer and enables activation quantization at every
/// linear input. Embedding, norms and the LM head stay in high precision.
pub fn quantize_model(
    model: &ModelGraph,
    opts: QuantizeOptions,
    calib: Option<&Captures>,
) -> Result<QuantizedModel> {
    let scheme = opts.family.weight_scheme();
    let mut graph = model.clone();
    let mut tensors = BTreeMap::new();
    for (li, layer) in model.layers.iter().enumerate() {
        let mut hessians: BTreeMap<InputSite, Tensor> = BTreeMap::new();
        for kind in LinearKind::ALL {
            let w = layer.linear(kind);
            let q = if opts.use_gptq {
                let calib = calib.ok_or_else(|| {
                    Error::InvalidConfig("GPTQ needs calibration captures".into())
                })?;
                if !hessians.contains_key(&kind.site()) {
                    let h = site_hessian(calib.input(li, kind)?)?;
                    hessians.insert(kind.site(), h);
                }
                let h = &hessians[&kind.site()];
                gptq_quantize(w, h, scheme, opts.act_order, DEFAULT_BLOCK)?
            } else {
                rtn_quantize(w, scheme)?
            };
            *graph.layers[li].linear_mut(kind) = q.dequantize();
            tensors.insert(linear_name(li, kind), q);
        }
    }
    graph.act_quant = Some(opts.family);
    Ok(QuantizedModel { graph, tensors })
}

/// `‖X·W − act(X)·Q‖²_F / (rows·cols)` for one linear.
pub fn layer_mse(
    x: &Tensor,
    w: &Tensor,
    q: &Tensor,
    act: Option<SchemeFamily>,
) -> Result<f64> {
    let reference = matmul(x, w)?;
    let xq = match act {
        Some(f) => fake_quantize(x, f.activation_scheme(), GroupAxis::Row)?,
        None => x.clone(),
    };
    let got = matmul(&xq, q)?;
    let diff = reference.sub(&got)?;
    let n = (diff.rows() * diff.cols()).max(1) as f64;
    let e = diff.frobenius_norm();
    Ok(e * e / n)
}

/// Per-linear output MSE of `quantized` against the float `model` it came
/// from, in layer-then-kind order.
pub fn layer_mses(
    model: &ModelGraph,
    quantized: &QuantizedModel,
    calib: &Captures,
) -> Result<Vec<(String, f64)>> {
    let mut out = Vec::new();
    for (li, layer) in model.layers.iter().enumerate() {
        for kind in LinearKind::ALL {
            let x = calib.input(li, kind)?;
            let mse = layer_mse(
                x,
                layer.linear(kind),
                quantized.graph.layers[li].linear(kind),
                quantized.graph.act_quant,
            )?;
            out.push((linear_name(li, kind), mse));
        }
    }
    Ok(out)
}

/// Mean of [`layer_mses`].
pub fn mean_layer_mse(
    model: &ModelGraph,
    quantized: &QuantizedModel,
    calib: &Captures,
) -> Result<f64> {
    let all = layer_mses(model, quantized, calib)?;
    if all.is_empty() {
        return Err(Error::EmptyInput("no linear layers"));
    }
    Ok(all.iter().map(|(_, v)| v).sum::<f64>() / all.len() as f64)
}
