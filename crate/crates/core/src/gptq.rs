//! GPTQ: input-sequential weight quantization with error feedback through the
//! Cholesky factor of the inverse Hessian.
//!
//! Weights are `N×N′` with rows indexing input channels, so `X·W` is the
//! layer output. GPTQ "columns" in the usual notation are rows here.

use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::numerics::{cholesky, matmul, matmul_tn, spd_inverse, Tensor};
use crate::quant::{GroupAxis, QuantScheme, QuantizedTensor, ScaleGrid};

pub const DEFAULT_DAMPING: f64 = 0.01;
pub const DEFAULT_BLOCK: usize = 128;

/// Running sum of `XᵀX` over calibration rows.
#[derive(Clone, Debug, PartialEq)]
pub struct HessianState {
    sum: Tensor,
    nsamples: usize,
}

impl HessianState {
    pub fn new(n: usize) -> Self {
        Self {
            sum: Tensor::zeros(n, n),
            nsamples: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.sum.rows()
    }

    pub fn nsamples(&self) -> usize {
        self.nsamples
    }

    pub fn accumulate(&mut self, x_batch: &Tensor) -> Result<()> {
        if x_batch.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                op: "hessian accumulate",
                lhs: self.sum.shape(),
                rhs: x_batch.shape(),
            });
        }
        let g = matmul_tn(x_batch, x_batch)?;
        self.sum = self.sum.add(&g)?;
        self.nsamples += x_batch.rows();
        Ok(())
    }

    /// Mean Gram matrix `XᵀX / D` over everything accumulated so far.
    pub fn mean_gram(&self) -> Result<Tensor> {
        if self.nsamples == 0 {
            return Err(Error::EmptyInput("hessian samples"));
        }
        Ok(self.sum.scale(1.0 / self.nsamples as f64))
    }

    /// Mean Gram plus `damping_frac · mean(diag)` on the diagonal. Fails if
    /// the result is not positive definite.
    pub fn finalize(&self, damping_frac: f64) -> Result<Tensor> {
        let mut h = self.mean_gram()?;
        let n = h.rows();
        let lambda = damping_frac * h.diagonal().iter().sum::<f64>() / n as f64;
        for i in 0..n {
            h[(i, i)] += lambda;
        }
        cholesky(&h)?;
        Ok(h)
    }
}

/// Indices ordered by Hessian diagonal, largest first; ties by index.
pub fn act_order_permutation(h: &Tensor) -> Vec<usize> {
    let d = h.diagonal();
    let mut perm: Vec<usize> = (0..d.len()).collect();
    perm.sort_by(|&a, &b| d[b].total_cmp(&d[a]).then(a.cmp(&b)));
    perm
}

/// Quantize `w` (rows = input channels) against Hessian `h`. Scales come from
/// the original `w` and stay fixed during the sweep; MXFP4 groups run along
/// the input dimension.
pub fn gptq_quantize(
    w: &Tensor,
    h: &Tensor,
    scheme: QuantScheme,
    act_order: bool,
    block: usize,
) -> Result<QuantizedTensor> {
    gptq_quantize_with_stats(w, h, scheme, act_order, block).map(|(q, _)| q)
}

/// What the sweep actually did.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GptqStats {
    /// Largest `|w′ − q|` over all quantized entries, where `w′` is the
    /// error-corrected weight at the moment it was rounded. Exceeds the
    /// quantizer's in-range `Δ` only when clamping or saturation occurred.
    pub max_rounding_error: f64,
}

pub fn gptq_quantize_with_stats(
    w: &Tensor,
    h: &Tensor,
    scheme: QuantScheme,
    act_order: bool,
    block: usize,
) -> Result<(QuantizedTensor, GptqStats)> {
    let n = w.rows();
    if h.shape() != (n, n) {
        return Err(Error::DimensionMismatch {
            op: "gptq",
            lhs: w.shape(),
            rhs: h.shape(),
        });
    }
    let grid = ScaleGrid::fit(w, scheme, GroupAxis::Column)?;
    let cols = w.cols();
    let block = block.max(1);

    let perm: Vec<usize> = if act_order {
        act_order_permutation(h)
    } else {
        (0..n).collect()
    };
    let mut hp = Tensor::from_fn(n, n, |i, j| h[(perm[i], perm[j])]);
    for i in 0..n {
        if hp[(i, i)] == 0.0 {
            hp[(i, i)] = 1.0;
        }
    }
    let mut wp = w.select_rows(&perm);
    // Upper factor U with Hinv = UᵀU.
    let u = cholesky(&spd_inverse(&hp)?)?.transpose();

    let mut nibbles = alloc::vec![0u8; n * cols];
    let mut stats = GptqStats::default();
    let mut b0 = 0;
    while b0 < n {
        let b1 = (b0 + block).min(n);
        let mut errs = Tensor::zeros(b1 - b0, cols);
        for i in b0..b1 {
            let orig = perm[i];
            let d = u[(i, i)];
            let mut err = alloc::vec![0.0; cols];
            for (c, e) in err.iter_mut().enumerate() {
                let x = wp[(i, c)];
                let nib = grid.encode(orig, c, x);
                nibbles[orig * cols + c] = nib;
                let r = x - grid.decode(orig, c, nib);
                stats.max_rounding_error = stats.max_rounding_error.max(r.abs());
                *e = r / d;
            }
            for k in i + 1..b1 {
                let f = u[(i, k)];
                if f != 0.0 {
                    for (wk, e) in wp.row_mut(k).iter_mut().zip(&err) {
                        *wk -= f * e;
                    }
                }
            }
            errs.row_mut(i - b0).copy_from_slice(&err);
        }
        if b1 < n {
            // W[b1..] -= U[b0..b1, b1..]ᵀ · Err
            let ub = Tensor::from_fn(b1 - b0, n - b1, |i, k| u[(b0 + i, b1 + k)]);
            let upd = matmul_tn(&ub, &errs)?;
            for k in 0..n - b1 {
                for (wk, v) in wp.row_mut(b1 + k).iter_mut().zip(upd.row(k)) {
                    *wk -= v;
                }
            }
        }
        b0 = b1;
    }
    Ok((grid.with_nibbles(nibbles), stats))
}

/// Round-to-nearest with the same scales GPTQ would use.
pub fn rtn_quantize(w: &Tensor, scheme: QuantScheme) -> Result<QuantizedTensor> {
    ScaleGrid::fit(w, scheme, GroupAxis::Column)?.quantize(w)
}

/// `‖X·W − X·Q‖` per output column and in total (Frobenius).
#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructionError {
    pub per_column: Vec<f64>,
    pub total: f64,
}

impl ReconstructionError {
    pub fn max_column(&self) -> f64 {
        self.per_column.iter().copied().fold(0.0, f64::max)
    }
}

pub fn reconstruction_error(x: &Tensor, w: &Tensor, q: &QuantizedTensor) -> Result<ReconstructionError> {
    if q.shape() != w.shape() {
        return Err(Error::DimensionMismatch {
            op: "reconstruction_error",
            lhs: w.shape(),
            rhs: q.shape(),
        });
    }
    let diff = w.sub(&q.dequantize())?;
    let e = matmul(x, &diff)?;
    let per_column: Vec<f64> = (0..e.cols())
        .map(|c| (0..e.rows()).map(|r| e[(r, c)] * e[(r, c)]).sum::<f64>().sqrt())
        .collect();
    Ok(ReconstructionError {
        total: e.frobenius_norm(),
        per_column,
    })
}
