use alloc::vec;
use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;


use super::{matmul_nt, Tensor};
use crate::error::{Error, Result};

/// Default relative tolerance for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

/// Householder reflector for `x`: returns `(v, beta, alpha)` with
/// `(I − beta·v·vᵀ)x = alpha·e₁`. The sign of `alpha` is opposite to `x[0]`.
fn householder(x: &[f64]) -> (Vec<f64>, f64, f64) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return (vec![0.0; x.len()], 0.0, 0.0);
    }
    let alpha = if x[0] >= 0.0 { -norm } else { norm };
    let mut v = x.to_vec();
    v[0] -= alpha;
    let vv: f64 = v.iter().map(|a| a * a).sum();
    let beta = if vv == 0.0 { 0.0 } else { 2.0 / vv };
    (v, beta, alpha)
}

/// Thin QR by Householder reflections: `a = Q·R`, `Q` is `rows×cols` with
/// orthonormal columns and `R` is `cols×cols` upper triangular.
///
/// A column that is numerically dependent on its predecessors gets an exact
/// zero on the diagonal of `R`; `Q` stays orthonormal.
pub fn qr_thin(a: &Tensor) -> (Tensor, Tensor) {
    let (m, n) = a.shape();
    assert!(m >= n, "qr_thin requires rows >= cols");
    let mut work = a.clone();
    let mut reflectors: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n);
    let scale = a.max_abs();
    let tiny = scale * f64::EPSILON * (m as f64);
    for j in 0..n {
        let x: Vec<f64> = (j..m).map(|r| work[(r, j)]).collect();
        let xnorm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if xnorm <= tiny {
            for r in j..m {
                work[(r, j)] = 0.0;
            }
            reflectors.push((Vec::new(), 0.0));
            continue;
        }
        let (v, beta, _) = householder(&x);
        for c in j..n {
            let mut s = 0.0;
            for (i, vi) in v.iter().enumerate() {
                s += vi * work[(j + i, c)];
            }
            s *= beta;
            for (i, vi) in v.iter().enumerate() {
                work[(j + i, c)] -= s * vi;
            }
        }
        for r in j + 1..m {
            work[(r, j)] = 0.0;
        }
        reflectors.push((v, beta));
    }
    let mut r = Tensor::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            r[(i, j)] = work[(i, j)];
        }
    }
    // Accumulate Q = H₀H₁…H_{n−1} applied to the first n columns of I.
    let mut q = Tensor::zeros(m, n);
    for i in 0..n {
        q[(i, i)] = 1.0;
    }
    for (j, (v, beta)) in reflectors.iter().enumerate().rev() {
        if v.is_empty() {
            continue;
        }
        for c in 0..n {
            let mut s = 0.0;
            for (i, vi) in v.iter().enumerate() {
                s += vi * q[(j + i, c)];
            }
            s *= beta;
            for (i, vi) in v.iter().enumerate() {
                q[(j + i, c)] -= s * vi;
            }
        }
    }
    (q, r)
}

/// Orthonormal basis of the column space via Householder QR with column
/// pivoting. Columns whose pivot falls below `tol` times the first pivot are
/// treated as dependent.
fn column_space_basis(a: &Tensor, tol: f64) -> Tensor {
    let (m, n) = a.shape();
    let mut work = a.clone();
    let mut norms: Vec<f64> = (0..n)
        .map(|c| (0..m).map(|r| work[(r, c)] * work[(r, c)]).sum::<f64>())
        .collect();
    let steps = m.min(n);
    let mut reflectors: Vec<(Vec<f64>, f64)> = Vec::new();
    let mut first_pivot = 0.0;
    for j in 0..steps {
        // Recompute trailing norms exactly; the sizes here are small.
        for c in j..n {
            norms[c] = (j..m).map(|r| work[(r, c)] * work[(r, c)]).sum();
        }
        let (p, best) = (j..n)
            .map(|c| (c, norms[c]))
            .fold((j, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        let pivot = best.sqrt();
        if j == 0 {
            first_pivot = pivot;
        }
        if pivot == 0.0 || pivot <= tol * first_pivot {
            break;
        }
        if p != j {
            for r in 0..m {
                let tmp = work[(r, j)];
                work[(r, j)] = work[(r, p)];
                work[(r, p)] = tmp;
            }
            norms.swap(j, p);
        }
        let x: Vec<f64> = (j..m).map(|r| work[(r, j)]).collect();
        let (v, beta, _) = householder(&x);
        for c in j..n {
            let mut s = 0.0;
            for (i, vi) in v.iter().enumerate() {
                s += vi * work[(j + i, c)];
            }
            s *= beta;
            for (i, vi) in v.iter().enumerate() {
                work[(j + i, c)] -= s * vi;
            }
        }
        reflectors.push((v, beta));
    }
    let rank = reflectors.len();
    let mut q = Tensor::zeros(m, rank);
    for i in 0..rank {
        q[(i, i)] = 1.0;
    }
    for (j, (v, beta)) in reflectors.iter().enumerate().rev() {
        for c in 0..rank {
            let mut s = 0.0;
            for (i, vi) in v.iter().enumerate() {
                s += vi * q[(j + i, c)];
            }
            s *= beta;
            for (i, vi) in v.iter().enumerate() {
                q[(j + i, c)] -= s * vi;
            }
        }
    }
    q
}

/// `I − QQᵀ` where `Q` is an orthonormal basis of the column space of `cols`.
/// A matrix with zero columns spans nothing, giving the identity.
pub fn orth_complement_projector(cols: &Tensor) -> Tensor {
    let m = cols.rows();
    let mut p = Tensor::identity(m);
    if cols.cols() == 0 {
        return p;
    }
    let q = column_space_basis(cols, DEFAULT_RANK_TOL);
    if q.cols() == 0 {
        return p;
    }
    let qqt = matmul_nt(&q, &q).expect("square");
    for i in 0..m {
        for j in 0..m {
            p[(i, j)] -= qqt[(i, j)];
        }
    }
    // Exact symmetry.
    for i in 0..m {
        for j in i + 1..m {
            let s = 0.5 * (p[(i, j)] + p[(j, i)]);
            p[(i, j)] = s;
            p[(j, i)] = s;
        }
    }
    p
}

/// Singular values in descending order, by one-sided Jacobi rotations.
pub fn singular_values(a: &Tensor) -> Vec<f64> {
    let work = if a.rows() >= a.cols() {
        a.clone()
    } else {
        a.transpose()
    };
    let (m, n) = work.shape();
    if n == 0 {
        return Vec::new();
    }
    // Column-major copy so column rotations touch contiguous memory.
    let mut cols: Vec<Vec<f64>> = (0..n).map(|c| work.col(c)).collect();
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for i in 0..m {
                    let (x, y) = (cols[p][i], cols[q][i]);
                    alpha += x * x;
                    beta += y * y;
                    gamma += x * y;
                }
                if gamma == 0.0 || gamma.abs() <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(q);
                let (cp, cq) = (&mut left[p], &mut right[0]);
                for i in 0..m {
                    let (x, y) = (cp[i], cq[i]);
                    cp[i] = c * x - s * y;
                    cq[i] = s * x + c * y;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).expect("finite singular values"));
    sv
}

/// Number of singular values above `tol` times the largest one.
pub fn numeric_rank(a: &Tensor, tol: f64) -> usize {
    assert!(tol > 0.0, "rank tolerance must be positive");
    let sv = singular_values(a);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|s| **s > tol * top).count()
}

/// Largest singular value.
pub fn spectral_norm(a: &Tensor) -> f64 {
    singular_values(a).first().copied().unwrap_or(0.0)
}

/// Lower-triangular `L` with `a = L·Lᵀ`.
pub fn cholesky(a: &Tensor) -> Result<Tensor> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::DimensionMismatch {
            op: "cholesky",
            lhs: a.shape(),
            rhs: a.shape(),
        });
    }
    let mut l = Tensor::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > 0.0) || !d.is_finite() {
            return Err(Error::CholeskyFailure(j));
        }
        let djj = d.sqrt();
        l[(j, j)] = djj;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / djj;
        }
    }
    Ok(l)
}

/// Inverse of a symmetric positive definite matrix through its Cholesky factor.
pub fn spd_inverse(a: &Tensor) -> Result<Tensor> {
    let l = cholesky(a)?;
    let n = l.rows();
    // Invert L (lower triangular) column by column.
    let mut linv = Tensor::zeros(n, n);
    for c in 0..n {
        for i in c..n {
            let mut s = if i == c { 1.0 } else { 0.0 };
            for k in c..i {
                s -= l[(i, k)] * linv[(k, c)];
            }
            linv[(i, c)] = s / l[(i, i)];
        }
    }
    // a⁻¹ = L⁻ᵀ L⁻¹
    let mut inv = Tensor::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut s = 0.0;
            for k in i..n {
                s += linv[(k, i)] * linv[(k, j)];
            }
            inv[(i, j)] = s;
            inv[(j, i)] = s;
        }
    }
    Ok(inv)
}

/// Solves `a·x = b` by LU factorization with partial pivoting.
pub fn solve(a: &Tensor, b: &Tensor) -> Result<Tensor> {
    let n = a.rows();
    if a.cols() != n || b.rows() != n {
        return Err(Error::DimensionMismatch {
            op: "solve",
            lhs: a.shape(),
            rhs: b.shape(),
        });
    }
    let mut lu = a.clone();
    let mut x = b.clone();
    let nrhs = b.cols();
    for k in 0..n {
        let (p, pv) = (k..n)
            .map(|r| (r, lu[(r, k)].abs()))
            .fold((k, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
        if pv == 0.0 {
            return Err(Error::Singular);
        }
        if p != k {
            for c in 0..n {
                let t = lu[(k, c)];
                lu[(k, c)] = lu[(p, c)];
                lu[(p, c)] = t;
            }
            for c in 0..nrhs {
                let t = x[(k, c)];
                x[(k, c)] = x[(p, c)];
                x[(p, c)] = t;
            }
        }
        let piv = lu[(k, k)];
        for r in k + 1..n {
            let f = lu[(r, k)] / piv;
            if f == 0.0 {
                continue;
            }
            lu[(r, k)] = f;
            for c in k + 1..n {
                lu[(r, c)] -= f * lu[(k, c)];
            }
            for c in 0..nrhs {
                x[(r, c)] -= f * x[(k, c)];
            }
        }
    }
    for k in (0..n).rev() {
        for c in 0..nrhs {
            let mut s = x[(k, c)];
            for j in k + 1..n {
                s -= lu[(k, j)] * x[(j, c)];
            }
            x[(k, c)] = s / lu[(k, k)];
        }
    }
    Ok(x)
}
