//! Numerical checks of the nullity growth and GPTQ error-bound statements for
//! expanded rotations.

use alloc::vec;
use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, StudentT};

use crate::error::{Error, Result};
use crate::gptq::{
    act_order_permutation, gptq_quantize_with_stats, reconstruction_error, HessianState,
    DEFAULT_BLOCK, DEFAULT_DAMPING,
};
use crate::hadamard::{apply_left_transpose, apply_right, build_expanded, ExpandedRotation};
use crate::numerics::{dot, norm2, numeric_rank, spectral_norm, Tensor, DEFAULT_RANK_TOL};
use crate::quant::QuantScheme;

/// Relative slack allowed when comparing an error against its bound.
pub const BOUND_SLACK: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NullityReport {
    pub rank_x: usize,
    pub nullity_x: usize,
    pub rank_xh: usize,
    pub nullity_xh: usize,
}

impl NullityReport {
    /// Rank is preserved and the nullity grows by exactly `m − n`.
    pub fn identity_holds(&self, n: usize, m: usize) -> bool {
        self.rank_x == self.rank_xh && self.nullity_xh - self.nullity_x == m - n
    }
}

pub fn nullity_report(x: &Tensor, rot: &ExpandedRotation) -> Result<NullityReport> {
    let xh = apply_right(x, rot)?;
    let rank_x = numeric_rank(x, DEFAULT_RANK_TOL);
    let rank_xh = numeric_rank(&xh, DEFAULT_RANK_TOL);
    Ok(NullityReport {
        rank_x,
        nullity_x: rot.n() - rank_x,
        rank_xh,
        nullity_xh: rot.m() - rank_xh,
    })
}

/// Which matrix's trailing columns define the projector for column `j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProjectionReading {
    /// Columns of `XH` processed after `j`.
    #[default]
    Rotated,
    /// Columns of `X` with index greater than `j`.
    Input,
}

/// Incrementally grown orthonormal basis.
struct Basis {
    vectors: Vec<Vec<f64>>,
}

impl Basis {
    fn new() -> Self {
        Self { vectors: Vec::new() }
    }

    /// Component of `v` orthogonal to the basis (two Gram–Schmidt passes).
    fn residual(&self, v: &[f64]) -> Vec<f64> {
        let mut r = v.to_vec();
        for _ in 0..2 {
            for q in &self.vectors {
                let c = dot(q, &r);
                for (ri, qi) in r.iter_mut().zip(q) {
                    *ri -= c * qi;
                }
            }
        }
        r
    }

    /// Add `v` if it is independent of the basis at `tol` relative to `‖v‖`.
    fn push(&mut self, v: &[f64], tol: f64) {
        let scale = norm2(v);
        let r = self.residual(v);
        let rn = norm2(&r);
        if scale > 0.0 && rn > tol * scale {
            self.vectors.push(r.into_iter().map(|x| x / rn).collect());
        }
    }

    /// `(I − QQᵀ)·a`.
    fn project_matrix(&self, a: &Tensor) -> Tensor {
        let mut out = Tensor::zeros(a.rows(), a.cols());
        for c in 0..a.cols() {
            out.set_col(c, &self.residual(&a.col(c)));
        }
        out
    }
}

/// `‖P⊥ (XH)_{order[j]}‖` for each processing position `j`, where the projector
/// removes the span of the columns processed after `j`.
pub fn projected_column_norms(xh: &Tensor, order: &[usize]) -> Vec<f64> {
    let mut norms = vec![0.0; order.len()];
    let mut basis = Basis::new();
    for (j, &col) in order.iter().enumerate().rev() {
        let v = xh.col(col);
        norms[j] = norm2(&basis.residual(&v));
        basis.push(&v, DEFAULT_RANK_TOL);
    }
    norms
}

/// Same quantity under the input-column reading: the projector removes the
/// span of the columns of `x` with index greater than `j` (none once
/// `j ≥ n − 1`).
pub fn projected_column_norms_input(x: &Tensor, xh: &Tensor, order: &[usize]) -> Vec<f64> {
    let n = x.cols();
    let mut basis = Basis::new();
    let mut trailing: Vec<Vec<f64>> = vec![Vec::new(); order.len()];
    for j in (0..order.len()).rev() {
        if j + 1 < n {
            basis.push(&x.col(j + 1), DEFAULT_RANK_TOL);
        }
        trailing[j] = basis.residual(&xh.col(order[j]));
    }
    trailing.iter().map(|r| norm2(r)).collect()
}

pub fn term_max_proj(xh: &Tensor, order: &[usize]) -> f64 {
    projected_column_norms(xh, order).into_iter().fold(0.0, f64::max)
}

/// `√(‖X‖_F² / N)`.
pub fn term_energy(x: &Tensor) -> f64 {
    let f = x.frobenius_norm();
    (f * f / x.cols() as f64).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundTerms {
    pub delta: f64,
    pub term_max_proj: f64,
    pub term_energy: f64,
    /// `Δ·√N·min(term_max_proj, term_energy)`.
    pub bound: f64,
}

/// Fails with `RankDeficient` unless `x` has full column rank and `D ≥ N`.
pub fn check_full_column_rank(x: &Tensor) -> Result<()> {
    let rank = numeric_rank(x, DEFAULT_RANK_TOL);
    if x.rows() < x.cols() || rank < x.cols() {
        return Err(Error::RankDeficient {
            rank,
            cols: x.cols(),
        });
    }
    Ok(())
}

/// Both bound terms for `X` rotated by `rot`, with columns processed in
/// `order` (natural order when `None`).
pub fn gptq_bound(
    x: &Tensor,
    rot: &ExpandedRotation,
    delta: f64,
    order: Option<&[usize]>,
    reading: ProjectionReading,
) -> Result<BoundTerms> {
    check_full_column_rank(x)?;
    if !(delta >= 0.0) {
        return Err(Error::InvalidConfig(alloc::format!("delta must be non-negative, got {delta}")));
    }
    let xh = apply_right(x, rot)?;
    let natural: Vec<usize> = (0..rot.m()).collect();
    let order = order.unwrap_or(&natural);
    let norms = match reading {
        ProjectionReading::Rotated => projected_column_norms(&xh, order),
        ProjectionReading::Input => projected_column_norms_input(x, &xh, order),
    };
    let term_max_proj = norms.into_iter().fold(0.0, f64::max);
    let term_energy = term_energy(x);
    let n = x.cols() as f64;
    Ok(BoundTerms {
        delta,
        term_max_proj,
        term_energy,
        bound: delta * n.sqrt() * term_max_proj.min(term_energy),
    })
}

/// One row of a bound sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub delta: f64,
    pub term_max_proj: f64,
    pub term_energy: f64,
    pub bound: f64,
    /// Largest per-column `‖X̂ŵ − X̂q‖₂`.
    pub empirical: f64,
    pub satisfied: bool,
    /// Largest rounding error GPTQ actually incurred. Above `delta` only when
    /// a value was clamped or (MXFP4) saturated.
    pub realized_delta: f64,
    /// The bound recomputed with `realized_delta` in place of `delta`.
    pub realized_bound: f64,
}

impl BoundReport {
    /// Whether the error respects the bound evaluated at the realized
    /// rounding error, which no clamping can invalidate.
    pub fn satisfied_realized(&self) -> bool {
        self.empirical <= self.realized_bound * (1.0 + BOUND_SLACK)
    }
}

/// Quantize `Ŵ = ĤᵀW` with GPTQ (act-order, Hessian from `X̂ = XĤ`) and compare
/// the worst column error against the bound. `Δ` comes from the quantizer.
///
/// For `m > n` the Gram of `X̂` is singular, so the standard damping is used
/// in every case to keep the sweep uniform.
pub fn empirical_vs_bound(
    x: &Tensor,
    w: &Tensor,
    rot: &ExpandedRotation,
    scheme: QuantScheme,
    seed: u64,
) -> Result<BoundReport> {
    check_full_column_rank(x)?;
    let xh = apply_right(x, rot)?;
    let wh = apply_left_transpose(w, rot)?;
    let mut hs = HessianState::new(rot.m());
    hs.accumulate(&xh)?;
    let h = hs.finalize(DEFAULT_DAMPING)?;
    let order = act_order_permutation(&h);
    let (q, stats) = gptq_quantize_with_stats(&wh, &h, scheme, true, DEFAULT_BLOCK)?;
    let delta = q.max_rounding_error();
    let terms = gptq_bound(x, rot, delta, Some(&order), ProjectionReading::Rotated)?;
    let empirical = reconstruction_error(&xh, &wh, &q)?.max_column();
    let realized_delta = stats.max_rounding_error.max(delta);
    let realized_bound = if delta > 0.0 {
        terms.bound * realized_delta / delta
    } else {
        gptq_bound(x, rot, realized_delta, Some(&order), ProjectionReading::Rotated)?.bound
    };
    Ok(BoundReport {
        seed,
        n: rot.n(),
        m: rot.m(),
        delta,
        term_max_proj: terms.term_max_proj,
        term_energy: terms.term_energy,
        bound: terms.bound,
        empirical,
        satisfied: empirical <= terms.bound * (1.0 + BOUND_SLACK),
        realized_delta,
        realized_bound,
    })
}

/// Gaussian `d×n` calibration matrix with column scales spread over a decade.
pub fn random_calibration(rng: &mut ChaCha8Rng, d: usize, n: usize) -> Tensor {
    let scales: Vec<f64> = (0..n).map(|c| 10f64.powf(c as f64 / n.max(1) as f64)).collect();
    Tensor::from_fn(d, n, |_, c| {
        let v: f64 = StandardNormal.sample(rng);
        v * scales[c]
    })
}

/// Heavy-tailed (Student-t, ν = 3) `n×cols` weights.
pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, cols: usize) -> Tensor {
    let t = StudentT::new(3.0).expect("valid degrees of freedom");
    Tensor::from_fn(n, cols, |_, _| t.sample(rng))
}

/// Number of output channels used by [`sweep_instance`].
pub const SWEEP_OUTPUT_CHANNELS: usize = 16;

/// One seeded instance: random `X` (`d×n`), `W` (`n×16`), expanded to `m`.
pub fn sweep_instance(seed: u64, n: usize, m: usize, d: usize, scheme: QuantScheme) -> Result<BoundReport> {
    if d < n {
        return Err(Error::InvalidConfig(alloc::format!(
            "need at least as many samples as channels (d = {d} < n = {n})"
        )));
    }
    let rot = build_expanded(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = random_calibration(&mut rng, d, n);
    let w = random_weights(&mut rng, n, SWEEP_OUTPUT_CHANNELS);
    empirical_vs_bound(&x, &w, &rot, scheme, seed)
}

/// Supremum-factor measurements for one `X`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupremumSample {
    /// `term_max_proj(XĤ) / term_max_proj(XH)` with `H` the square `n×n` rotation.
    pub ratio: f64,
    /// Largest `|‖Ĥ_j‖ − √(n/m)|`.
    pub column_norm_error: f64,
    /// Every `‖P_j XĤ_j‖ ≤ ‖P_j X‖₂·‖Ĥ_j‖ ≤ ‖X‖₂·√(n/m)` held.
    pub ceiling_holds: bool,
}

pub fn supremum_sample(x: &Tensor, n: usize, m: usize) -> Result<SupremumSample> {
    if m < n || x.cols() != n {
        return Err(Error::InvalidConfig(alloc::format!("need m ≥ n and x with n columns (n={n}, m={m})")));
    }
    let square = build_expanded(n, n)?;
    let rot = build_expanded(n, m)?;
    let xs = apply_right(x, &square)?;
    let xh = apply_right(x, &rot)?;
    let nat_n: Vec<usize> = (0..n).collect();
    let nat_m: Vec<usize> = (0..m).collect();
    let sq = term_max_proj(&xs, &nat_n);
    let ex = term_max_proj(&xh, &nat_m);

    let hmat = rot.materialize();
    let factor = (n as f64 / m as f64).sqrt();
    let column_norm_error = (0..m)
        .map(|j| (norm2(&hmat.col(j)) - factor).abs())
        .fold(0.0, f64::max);

    let x_norm = spectral_norm(x);
    let mut ceiling_holds = true;
    let mut basis = Basis::new();
    for j in (0..m).rev() {
        let v = xh.col(j);
        let lhs = norm2(&basis.residual(&v));
        let px = spectral_norm(&basis.project_matrix(x));
        let hj = norm2(&hmat.col(j));
        let mid = px * hj;
        let top = x_norm * factor;
        let tol = 1e-10 * top.max(1e-300);
        if lhs > mid + tol || mid > top + tol {
            ceiling_holds = false;
        }
        basis.push(&v, DEFAULT_RANK_TOL);
    }
    Ok(SupremumSample {
        ratio: if sq == 0.0 { 1.0 } else { ex / sq },
        column_norm_error,
        ceiling_holds,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SupremumStats {
    pub ratios: Vec<f64>,
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub max_column_norm_error: f64,
    pub ceiling_violations: usize,
}

/// [`supremum_sample`] over `seeds` random Gaussian `d×n` matrices.
pub fn supremum_factor_check(d: usize, n: usize, m: usize, seeds: u64) -> Result<SupremumStats> {
    let mut ratios = Vec::new();
    let mut err: f64 = 0.0;
    let mut violations = 0;
    for seed in 0..seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_calibration(&mut rng, d, n);
        let s = supremum_sample(&x, n, m)?;
        ratios.push(s.ratio);
        err = err.max(s.column_norm_error);
        if !s.ceiling_holds {
            violations += 1;
        }
    }
    if ratios.is_empty() {
        return Err(Error::EmptyInput("seeds"));
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    Ok(SupremumStats {
        mean,
        min: ratios.iter().copied().fold(f64::INFINITY, f64::min),
        max: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        ratios,
        max_column_norm_error: err,
        ceiling_violations: violations,
    })
}
