//! Cayley-transform optimization of square rotations against a layer-wise
//! weight quantization objective.

use alloc::vec;
use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::gptq::HessianState;
use crate::model::{Captures, InputSite, LinearKind, ModelGraph};
use crate::numerics::{matmul, matmul_nt, matmul_tn, solve, Tensor};
use crate::quant::{quantize, GroupAxis, QuantKind, SchemeFamily};

/// `A = G·Rᵀ − R·Gᵀ`.
pub fn skew_project(g: &Tensor, r: &Tensor) -> Result<Tensor> {
    if g.shape() != r.shape() || g.rows() != g.cols() {
        return Err(Error::DimensionMismatch {
            op: "skew_project",
            lhs: g.shape(),
            rhs: r.shape(),
        });
    }
    let a = matmul_nt(g, r)?;
    let n = a.rows();
    // Build from one product so that A + Aᵀ vanishes exactly.
    Ok(Tensor::from_fn(n, n, |i, j| a[(i, j)] - a[(j, i)]))
}

/// `(I − (lr/2)·A)⁻¹ (I + (lr/2)·A) · R`.
pub fn cayley_update(r: &Tensor, a: &Tensor, lr: f64) -> Result<Tensor> {
    let n = r.rows();
    if a.shape() != (n, n) || r.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "cayley_update",
            lhs: a.shape(),
            rhs: r.shape(),
        });
    }
    let half = a.scale(lr / 2.0);
    let eye = Tensor::identity(n);
    let lhs = eye.sub(&half)?;
    let rhs = matmul(&eye.add(&half)?, r)?;
    solve(&lhs, &rhs)
}

/// Elementwise quantizer with a straight-through Jacobian.
pub trait SteQuantizer {
    /// Dequantized values and the diagonal of the surrogate Jacobian.
    fn forward(&self, v: &Tensor) -> Result<(Tensor, Tensor)>;
}

/// The weight quantizer of a scheme family. The Jacobian is 1 where a value
/// lies inside the representable range of its scale and 0 where it clips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridQuantizer(pub SchemeFamily);

impl SteQuantizer for GridQuantizer {
    fn forward(&self, v: &Tensor) -> Result<(Tensor, Tensor)> {
        let scheme = self.0.weight_scheme();
        let q = quantize(v, scheme, GroupAxis::Column)?;
        let grid = q.grid();
        let (lo, hi) = match scheme.kind() {
            QuantKind::Mxfp4 => (-6.0, 6.0),
            _ => (-8.5, 7.5),
        };
        let mask = Tensor::from_fn(v.rows(), v.cols(), |r, c| {
            let s = grid.scale_at(r, c);
            let x = v[(r, c)];
            if x >= lo * s && x <= hi * s {
                1.0
            } else {
                0.0
            }
        });
        Ok((q.dequantize(), mask))
    }
}

/// Smooth stand-in `q(v) = v − 0.1·tanh(v)` used to audit gradients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SmoothSurrogate;

impl SteQuantizer for SmoothSurrogate {
    fn forward(&self, v: &Tensor) -> Result<(Tensor, Tensor)> {
        let q = v.map(|x| x - 0.1 * x.tanh());
        let jac = v.map(|x| {
            let t = x.tanh();
            1.0 - 0.1 * (1.0 - t * t)
        });
        Ok((q, jac))
    }
}

/// Where the rotation enters a linear layer `y = x·W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Input rotated: `x ← x·R`, `W ← Rᵀ·W`.
    Input,
    /// Output rotated: `W ← W·R`.
    Output,
}

/// One linear layer seen by the objective. `R` acts block-diagonally with
/// `blocks` copies along the rotated dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct RotationTerm {
    /// Mean Gram `XᵀX/D` of the unrotated input.
    pub gram: Tensor,
    /// Unrotated weight.
    pub weight: Tensor,
    pub side: Side,
    pub blocks: usize,
}

impl RotationTerm {
    fn rotated_dim(&self) -> usize {
        match self.side {
            Side::Input => self.weight.rows(),
            Side::Output => self.weight.cols(),
        }
    }
}

/// `R` applied to every `k`-wide column block of `x`.
fn right_blocks(x: &Tensor, r: &Tensor, blocks: usize) -> Result<Tensor> {
    if blocks == 1 {
        return matmul(x, r);
    }
    let k = r.rows();
    let mut out = Tensor::zeros(x.rows(), x.cols());
    for b in 0..blocks {
        let part = matmul(&x.slice_cols(b * k, (b + 1) * k), r)?;
        for i in 0..x.rows() {
            out.row_mut(i)[b * k..(b + 1) * k].copy_from_slice(part.row(i));
        }
    }
    Ok(out)
}

/// `Rᵀ` applied to every `k`-tall row block of `w`.
fn left_t_blocks(w: &Tensor, r: &Tensor, blocks: usize) -> Result<Tensor> {
    if blocks == 1 {
        return matmul_tn(r, w);
    }
    let k = r.rows();
    let parts = (0..blocks)
        .map(|b| matmul_tn(r, &w.slice_rows(b * k, (b + 1) * k)))
        .collect::<Result<Vec<_>>>()?;
    Tensor::vstack(&parts)
}

/// `Σ_b Aᵀ_b·B_b` over column blocks of width `k`.
fn block_tn_sum(a: &Tensor, b: &Tensor, k: usize, blocks: usize) -> Result<Tensor> {
    let mut acc = Tensor::zeros(k, k);
    for i in 0..blocks {
        let p = matmul_tn(&a.slice_cols(i * k, (i + 1) * k), &b.slice_cols(i * k, (i + 1) * k))?;
        acc = acc.add(&p)?;
    }
    Ok(acc)
}

/// `Σ_t ‖X_t(R)·(V_t(R) − q(V_t(R)))‖²_F`, with straight-through gradients.
pub struct RotationObjective<Q> {
    pub terms: Vec<RotationTerm>,
    pub quantizer: Q,
}

impl<Q: SteQuantizer> RotationObjective<Q> {
    pub fn new(terms: Vec<RotationTerm>, quantizer: Q) -> Result<Self> {
        let first = terms
            .first()
            .ok_or(Error::EmptyInput("rotation objective terms"))?;
        let k = first.rotated_dim() / first.blocks;
        for t in &terms {
            if t.blocks == 0 || t.rotated_dim() != k * t.blocks {
                return Err(Error::InvalidConfig(alloc::format!(
                    "term rotates {} channels in {} blocks, expected blocks of {k}",
                    t.rotated_dim(),
                    t.blocks
                )));
            }
            if t.gram.shape() != (t.weight.rows(), t.weight.rows()) {
                return Err(Error::DimensionMismatch {
                    op: "rotation term",
                    lhs: t.gram.shape(),
                    rhs: t.weight.shape(),
                });
            }
        }
        Ok(Self { terms, quantizer })
    }

    /// Width of the rotation.
    pub fn dim(&self) -> usize {
        let t = &self.terms[0];
        t.rotated_dim() / t.blocks
    }

    fn check(&self, r: &Tensor) -> Result<()> {
        let k = self.dim();
        if r.shape() != (k, k) {
            return Err(Error::DimensionMismatch {
                op: "rotation objective",
                lhs: (k, k),
                rhs: r.shape(),
            });
        }
        Ok(())
    }

    pub fn value(&self, r: &Tensor) -> Result<f64> {
        self.check(r)?;
        let mut total = 0.0;
        for t in &self.terms {
            let (h, v) = self.rotated(t, r)?;
            let (q, _) = self.quantizer.forward(&v)?;
            let d = v.sub(&q)?;
            total += frob_inner(&d, &matmul(&h, &d)?);
        }
        Ok(total)
    }

    /// Objective and its Euclidean gradient with respect to `R`.
    pub fn value_and_grad(&self, r: &Tensor) -> Result<(f64, Tensor)> {
        self.check(r)?;
        let k = self.dim();
        let mut total = 0.0;
        let mut grad = Tensor::zeros(k, k);
        for t in &self.terms {
            let (h_rot, v) = self.rotated(t, r)?;
            let (q, jac) = self.quantizer.forward(&v)?;
            let d = v.sub(&q)?;
            let hd = matmul(&h_rot, &d)?;
            total += frob_inner(&d, &hd);
            // f = ‖Y − X̃·q(V)‖² with the float output Y held fixed.
            let mut g_v = hd.scale(-2.0);
            for (g, j) in g_v.data_mut().iter_mut().zip(jac.data()) {
                *g *= j;
            }
            let g = match t.side {
                Side::Output => {
                    // The float target stays in the unrotated basis, so the
                    // output is read back through Rᵀ: f = ‖Y − X·q(V)·Rᵀ‖².
                    let hq = matmul(&t.gram, &q)?;
                    let back = matmul(r, &block_tn_sum(&d, &hq, k, t.blocks)?)?.scale(-2.0);
                    block_tn_sum(&t.weight, &g_v, k, t.blocks)?.add(&back)?
                }
                Side::Input => {
                    // Input path: Xᵀ·∂f/∂X̃ = −2·H·R·(V − q)·qᵀ per block.
                    let hr = right_blocks(&t.gram, r, t.blocks)?;
                    let g_x = matmul_nt(&matmul(&hr, &d)?, &q)?.scale(-2.0);
                    let through_input = block_tn_sum(&Tensor::identity(t.gram.rows()), &g_x, k, t.blocks)?;
                    let through_weight =
                        block_tn_sum(&t.weight.transpose(), &g_v.transpose(), k, t.blocks)?;
                    through_input.add(&through_weight)?
                }
            };
            grad = grad.add(&g)?;
        }
        Ok((total, grad))
    }

    /// Rotated input Gram and rotated weight of one term.
    fn rotated(&self, t: &RotationTerm, r: &Tensor) -> Result<(Tensor, Tensor)> {
        match t.side {
            Side::Input => {
                let hr = right_blocks(&t.gram, r, t.blocks)?;
                let h = left_t_blocks(&hr, r, t.blocks)?;
                Ok((h, left_t_blocks(&t.weight, r, t.blocks)?))
            }
            Side::Output => Ok((t.gram.clone(), right_blocks(&t.weight, r, t.blocks)?)),
        }
    }
}

fn frob_inner(a: &Tensor, b: &Tensor) -> f64 {
    a.data().iter().zip(b.data()).map(|(x, y)| x * y).sum()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CayleyOptions {
    pub iters: usize,
    pub lr: f64,
    pub max_backtracks: usize,
}

impl Default for CayleyOptions {
    fn default() -> Self {
        Self {
            iters: 100,
            lr: 1.5,
            max_backtracks: 5,
        }
    }
}

/// Optimizer state after a run.
#[derive(Clone, Debug, PartialEq)]
pub struct CayleyOptState {
    pub r: Tensor,
    /// Step size of the last accepted update.
    pub lr: f64,
    pub iter: usize,
    /// Objective at the initial point and after every iteration.
    pub objective_trace: Vec<f64>,
    /// Worst `‖RᵀR − I‖_F` over the recorded iterates.
    pub max_gram_error: f64,
}

/// Cayley descent from `init`. Each step is capped at `1/‖A‖_F` (so a step
/// never rotates by more than about one radian), halved on any increase up
/// to `max_backtracks` times, and rejected if the objective still rises.
pub fn optimize<Q: SteQuantizer>(
    objective: &RotationObjective<Q>,
    init: &Tensor,
    opts: CayleyOptions,
) -> Result<CayleyOptState> {
    let mut r = init.clone();
    let (mut f, mut g) = objective.value_and_grad(&r)?;
    let mut trace = vec![f];
    if !f.is_finite() {
        return Err(Error::Divergence { iter: 0, trace });
    }
    let mut state_lr = 0.0;
    let mut max_gram = r.gram_error();
    let mut iter = 0;
    while iter < opts.iters {
        iter += 1;
        // Descent direction: R ← cayley(−A)·R.
        let a = skew_project(&g, &r)?.scale(-1.0);
        let norm = a.frobenius_norm();
        if f == 0.0 || norm == 0.0 {
            trace.push(f);
            continue;
        }
        let mut lr = opts.lr.min(1.0 / norm);
        let mut accepted = None;
        for _ in 0..=opts.max_backtracks {
            let cand = cayley_update(&r, &a, lr)?;
            let fc = objective.value(&cand)?;
            if !fc.is_finite() {
                trace.push(fc);
                return Err(Error::Divergence { iter, trace });
            }
            if fc < f {
                accepted = Some(cand);
                break;
            }
            lr /= 2.0;
        }
        if let Some(cand) = accepted {
            r = cand;
            let (fv, gv) = objective.value_and_grad(&r)?;
            f = fv;
            g = gv;
            state_lr = lr;
            max_gram = max_gram.max(r.gram_error());
        }
        trace.push(f);
    }
    Ok(CayleyOptState {
        r,
        lr: state_lr,
        iter,
        objective_trace: trace,
        max_gram_error: max_gram,
    })
}

fn mean_gram(x: &Tensor) -> Result<Tensor> {
    let mut h = HessianState::new(x.cols());
    h.accumulate(x)?;
    h.mean_gram()
}

/// Terms for a residual-stream rotation merged after `model` (norms folded,
/// captures taken from `model`): every reader rotates its input, every
/// writer its output.
pub fn r1_terms(model: &ModelGraph, captures: &Captures) -> Result<Vec<RotationTerm>> {
    let mut terms = Vec::new();
    for (li, layer) in model.layers.iter().enumerate() {
        let mut grams: Vec<(InputSite, Tensor)> = Vec::new();
        for kind in LinearKind::ALL {
            let site = kind.site();
            if !grams.iter().any(|(s, _)| *s == site) {
                grams.push((site, mean_gram(captures.input(li, kind)?)?));
            }
            let gram = grams.iter().find(|(s, _)| *s == site).map(|(_, g)| g.clone());
            let side = match kind {
                LinearKind::O | LinearKind::Down => Side::Output,
                _ => Side::Input,
            };
            terms.push(RotationTerm {
                gram: gram.expect("gram inserted above"),
                weight: layer.linear(kind).clone(),
                side,
                blocks: 1,
            });
        }
    }
    Ok(terms)
}

/// Terms for a square value-space rotation: `wv` rotates its output per KV
/// head, `wo` its input per query head.
pub fn r2_terms(model: &ModelGraph, captures: &Captures) -> Result<Vec<RotationTerm>> {
    let c = &model.config;
    if model.value_dim() != c.head_dim {
        return Err(Error::InvalidConfig(
            "only square value rotations are optimized".into(),
        ));
    }
    let mut terms = Vec::new();
    for (li, layer) in model.layers.iter().enumerate() {
        terms.push(RotationTerm {
            gram: mean_gram(captures.input(li, LinearKind::V)?)?,
            weight: layer.wv.clone(),
            side: Side::Output,
            blocks: c.n_kv_heads,
        });
        terms.push(RotationTerm {
            gram: mean_gram(captures.input(li, LinearKind::O)?)?,
            weight: layer.wo.clone(),
            side: Side::Input,
            blocks: c.n_heads,
        });
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::hadamard_rotation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    fn gaussian(rng: &mut ChaCha8Rng, r: usize, c: usize) -> Tensor {
        Tensor::from_fn(r, c, |_, _| StandardNormal.sample(rng))
    }

    fn random_rotation(rng: &mut ChaCha8Rng, n: usize) -> Tensor {
        let g = gaussian(rng, n, n);
        let a = skew_project(&g, &Tensor::identity(n)).unwrap();
        cayley_update(&Tensor::identity(n), &a, 0.5).unwrap()
    }

    #[test]
    fn skew_projection() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = random_rotation(&mut rng, 4);
        assert_eq!(skew_project(&r, &r).unwrap().max_abs(), 0.0);
        let g = gaussian(&mut rng, 4, 4);
        let a = skew_project(&g, &r).unwrap();
        assert_eq!(a.add(&a.transpose()).unwrap().max_abs(), 0.0);
        for i in 0..4 {
            for j in 0..4 {
                let mut want = 0.0;
                for k in 0..4 {
                    want += g[(i, k)] * r[(j, k)] - r[(i, k)] * g[(j, k)];
                }
                assert!((a[(i, j)] - want).abs() < 1e-12);
            }
        }
        assert!(skew_project(&g, &Tensor::identity(3)).is_err());
    }

    #[test]
    fn quarter_turn() {
        let a = Tensor::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]);
        let r = cayley_update(&Tensor::identity(2), &a, 2.0).unwrap();
        let want = Tensor::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]);
        assert!(r.sub(&want).unwrap().max_abs() < 1e-15);
        let same = cayley_update(&want, &Tensor::zeros(2, 2), 0.7).unwrap();
        assert_eq!(same, want);
    }

    #[test]
    fn repeated_updates_stay_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut r = Tensor::identity(16);
        for _ in 0..100 {
            let a = skew_project(&gaussian(&mut rng, 16, 16), &r).unwrap();
            r = cayley_update(&r, &a, 0.1).unwrap();
            assert!(r.gram_error() <= 1e-8);
        }
    }

    #[test]
    fn small_steps_are_first_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = random_rotation(&mut rng, 8);
        let a = skew_project(&gaussian(&mut rng, 8, 8), &r).unwrap();
        let step = |lr: f64| cayley_update(&r, &a, lr).unwrap().sub(&r).unwrap().frobenius_norm() / lr;
        let (s3, s4) = (step(1e-3), step(1e-4));
        let exact = matmul(&a, &r).unwrap().frobenius_norm();
        assert!((s3 / s4 - 1.0).abs() < 1e-3, "{s3} {s4}");
        assert!((s4 / exact - 1.0).abs() < 1e-3);
    }

    fn random_terms(rng: &mut ChaCha8Rng, k: usize) -> Vec<RotationTerm> {
        let x = gaussian(rng, 40, k);
        let gram = matmul_tn(&x, &x).unwrap().scale(1.0 / 40.0);
        let x2 = gaussian(rng, 40, 6);
        let gram2 = matmul_tn(&x2, &x2).unwrap().scale(1.0 / 40.0);
        let x3 = gaussian(rng, 40, 2 * k);
        let gram3 = matmul_tn(&x3, &x3).unwrap().scale(1.0 / 40.0);
        vec![
            RotationTerm {
                gram: gram.clone(),
                weight: gaussian(rng, k, 5).scale(2.0),
                side: Side::Input,
                blocks: 1,
            },
            RotationTerm {
                gram: gram2,
                weight: gaussian(rng, 6, k).scale(2.0),
                side: Side::Output,
                blocks: 1,
            },
            RotationTerm {
                gram: gram3,
                weight: gaussian(rng, 2 * k, 3).scale(2.0),
                side: Side::Input,
                blocks: 2,
            },
            RotationTerm {
                gram,
                weight: gaussian(rng, k, 2 * k).scale(2.0),
                side: Side::Output,
                blocks: 2,
            },
        ]
    }

    #[test]
    fn gradient_matches_central_differences() {
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(10 + seed);
            let all = random_terms(&mut rng, 8);
            let r = random_rotation(&mut rng, 8);
            let singles = all.iter().map(|t| alloc::vec![t.clone()]);
            for (label, terms) in singles.enumerate().chain([(4, all.clone())]) {
                let obj = RotationObjective::new(terms, SmoothSurrogate).unwrap();
                let (_, g) = obj.value_and_grad(&r).unwrap();
                let eps = 1e-6;
                let mut fd = Tensor::zeros(8, 8);
                for i in 0..8 {
                    for j in 0..8 {
                        let mut p = r.clone();
                        p[(i, j)] += eps;
                        let mut m = r.clone();
                        m[(i, j)] -= eps;
                        fd[(i, j)] =
                            (obj.value(&p).unwrap() - obj.value(&m).unwrap()) / (2.0 * eps);
                    }
                }
                // The objective and its fixed-target form agree only on the
                // orthogonal group, so compare tangent components.
                let ga = skew_project(&g, &r).unwrap();
                let gf = skew_project(&fd, &r).unwrap();
                let rel = ga.sub(&gf).unwrap().frobenius_norm() / gf.frobenius_norm();
                assert!(rel < 1e-4, "seed {seed}, terms {label}: {rel:e}");
            }
        }
    }

    #[test]
    fn grid_weights_stay_put() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let w = gaussian(&mut rng, 8, 6);
        let on_grid = quantize(&w, SchemeFamily::Int4.weight_scheme(), GroupAxis::Column)
            .unwrap()
            .dequantize();
        let x = gaussian(&mut rng, 30, 8);
        let term = RotationTerm {
            gram: matmul_tn(&x, &x).unwrap(),
            weight: on_grid,
            side: Side::Input,
            blocks: 1,
        };
        let obj = RotationObjective::new(vec![term], GridQuantizer(SchemeFamily::Int4)).unwrap();
        let init = Tensor::identity(8);
        let st = optimize(&obj, &init, CayleyOptions::default()).unwrap();
        assert_eq!(st.objective_trace[0], 0.0);
        assert_eq!(st.r, init);
    }

    #[test]
    fn descent_is_monotone_and_orthogonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        let obj =
            RotationObjective::new(random_terms(&mut rng, 8), GridQuantizer(SchemeFamily::Int4))
                .unwrap();
        for init in [Tensor::identity(8), hadamard_rotation(8).unwrap()] {
            let st = optimize(&obj, &init, CayleyOptions::default()).unwrap();
            assert_eq!(st.objective_trace.len(), 101);
            assert!(st.objective_trace.windows(2).all(|w| w[1] <= w[0]));
            assert!(st.max_gram_error <= 1e-5);
            assert!(st.r.gram_error() <= 1e-5);
            assert!((obj.value(&st.r).unwrap() - st.objective_trace[100]).abs() < 1e-12);
        }
    }

    #[test]
    fn nan_objective_is_divergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let mut terms = random_terms(&mut rng, 8);
        terms[0].gram[(0, 0)] = f64::NAN;
        let obj = RotationObjective::new(terms, SmoothSurrogate).unwrap();
        let err = optimize(&obj, &Tensor::identity(8), CayleyOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Divergence { iter: 0, .. }));
    }

    #[test]
    fn mismatched_terms_are_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        let mut terms = random_terms(&mut rng, 8);
        terms[1].blocks = 3;
        assert!(RotationObjective::new(terms, SmoothSurrogate).is_err());
        assert!(RotationObjective::new(Vec::new(), SmoothSurrogate).is_err());
    }
}
