//! Square and expanded (row-selected) Hadamard rotations.
//!
//! An [`ExpandedRotation`] is the `n×m` matrix `Ĥ = γ·S·H_m` where `H_m` is an
//! `m×m` Hadamard matrix, `S` keeps its first `n` rows and `γ = 1/√m`. Its rows
//! are orthonormal, so `Ĥᵀ` is a left inverse of `Ĥ` and `(XĤ)(ĤᵀW) = XW`.
//!
//! `H_m` is never materialized on the fast path. Orders are factored as
//! `m = 2ᵏ·b` and `H_m = H_{2ᵏ} ⊗ B_b`, with `H_{2ᵏ}` the Sylvester matrix and
//! `B_b` one of the embedded base tables (or `[1]`). Applying it costs one
//! `b×b` product per block plus a Walsh–Hadamard butterfly across blocks.

mod tables;

use alloc::vec;
use alloc::vec::Vec;

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;


use crate::error::{Error, Result};
use crate::numerics::Tensor;

/// Orders of the bundled non-power-of-two Hadamard matrices.
pub const BASE_ORDERS: [usize; 13] = [12, 20, 28, 36, 40, 44, 52, 60, 76, 108, 140, 156, 172];

/// Access to the embedded base Hadamard tables.
pub struct BaseHadamardSet;

impl BaseHadamardSet {
    pub fn orders() -> &'static [usize] {
        &BASE_ORDERS
    }

    pub fn contains(order: usize) -> bool {
        tables::BASE_TABLES.iter().any(|(b, _)| *b == order)
    }

    /// The `order×order` ±1 matrix, row-major.
    pub fn get(order: usize) -> Option<Vec<i8>> {
        let (_, hex) = tables::BASE_TABLES.iter().find(|(b, _)| *b == order)?;
        Some(decode_signs(hex, order * order))
    }
}

fn decode_signs(hex: &str, len: usize) -> Vec<i8> {
    let bytes = hex.as_bytes();
    let nibble = |c: u8| -> u8 {
        match c {
            b'0'..=b'9' => c - b'0',
            b'a'..=b'f' => c - b'a' + 10,
            _ => panic!("corrupt Hadamard table"),
        }
    };
    (0..len)
        .map(|idx| {
            let byte = (nibble(bytes[2 * (idx / 8)]) << 4) | nibble(bytes[2 * (idx / 8) + 1]);
            if (byte >> (7 - idx % 8)) & 1 == 1 {
                -1
            } else {
                1
            }
        })
        .collect()
}

/// Splits `m = 2ᵏ·b` with `b` a bundled base order or 1, preferring the
/// largest `k`.
pub fn factorize_order(m: usize) -> Result<(u32, usize)> {
    if m == 0 {
        return Err(Error::UnsupportedOrder(m));
    }
    let max_k = m.trailing_zeros();
    for k in (0..=max_k).rev() {
        let b = m >> k;
        if b == 1 || BaseHadamardSet::contains(b) {
            return Ok((k, b));
        }
    }
    Err(Error::UnsupportedOrder(m))
}

/// `±1` entry of the Sylvester matrix `H_{2ᵏ}`.
#[inline]
fn sylvester_sign(i: usize, j: usize) -> f64 {
    if (i & j).count_ones() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Row-selected, scaled Hadamard rotation `Ĥ ∈ ℝ^{n×m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpandedRotation {
    n: usize,
    m: usize,
    k: u32,
    b: usize,
    base: Vec<i8>,
    sign_flips: Option<Vec<f64>>,
}

impl ExpandedRotation {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        build_expanded(n, m)
    }

    /// Right-multiplies `H_m` by a ±1 diagonal. Only meant for ablations; the
    /// default rotation is deterministic.
    pub fn with_sign_flips(mut self, signs: Vec<f64>) -> Result<Self> {
        if signs.len() != self.m || signs.iter().any(|s| *s != 1.0 && *s != -1.0) {
            return Err(Error::InvalidConfig(alloc::format!(
                "sign flips must be {} entries of ±1",
                self.m
            )));
        }
        self.sign_flips = Some(signs);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        1.0 / (self.m as f64).sqrt()
    }

    /// `(k, b)` with `m = 2ᵏ·b`.
    pub fn factorization(&self) -> (u32, usize) {
        (self.k, self.b)
    }

    pub fn sign_flips(&self) -> Option<&[f64]> {
        self.sign_flips.as_deref()
    }

    pub fn is_square(&self) -> bool {
        self.n == self.m
    }

    /// Unscaled `±1` entry `(i, j)` of the full `m×m` matrix (sign flips included).
    pub fn hadamard_entry(&self, i: usize, j: usize) -> f64 {
        let (p, q) = (i / self.b, i % self.b);
        let (p2, q2) = (j / self.b, j % self.b);
        let s = sylvester_sign(p, p2) * f64::from(self.base[q * self.b + q2]);
        match &self.sign_flips {
            Some(d) => s * d[j],
            None => s,
        }
    }

    /// Dense `n×m` matrix `Ĥ`.
    pub fn materialize(&self) -> Tensor {
        let g = self.gamma();
        Tensor::from_fn(self.n, self.m, |i, j| g * self.hadamard_entry(i, j))
    }

    /// In place `row ← row·H_m` (unscaled, without sign flips).
    fn transform_row(&self, row: &mut [f64], scratch: &mut [f64]) {
        let b = self.b;
        if b > 1 {
            for block in row.chunks_exact_mut(b) {
                scratch.copy_from_slice(block);
                for (q2, out) in block.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for (q, s) in scratch.iter().enumerate() {
                        acc += s * f64::from(self.base[q * b + q2]);
                    }
                    *out = acc;
                }
            }
        }
        butterfly(row, b);
    }

    fn finish_row(&self, row: &mut [f64]) {
        let g = self.gamma();
        match &self.sign_flips {
            Some(d) => row.iter_mut().zip(d).for_each(|(v, s)| *v *= g * s),
            None => row.iter_mut().for_each(|v| *v *= g),
        }
    }
}

/// Walsh–Hadamard butterfly over blocks of `stride` contiguous elements.
fn butterfly(row: &mut [f64], stride: usize) {
    let blocks = row.len() / stride;
    let mut h = 1;
    while h < blocks {
        for start in (0..blocks).step_by(2 * h) {
            for p in start..start + h {
                let (lo, hi) = row.split_at_mut((p + h) * stride);
                let u = &mut lo[p * stride..(p + 1) * stride];
                let v = &mut hi[..stride];
                for (a, b) in u.iter_mut().zip(v.iter_mut()) {
                    let (x, y) = (*a, *b);
                    *a = x + y;
                    *b = x - y;
                }
            }
        }
        h *= 2;
    }
}

/// Builds `Ĥ` from the first `n` rows of an `m×m` Hadamard matrix.
pub fn build_expanded(n: usize, m: usize) -> Result<ExpandedRotation> {
    if n == 0 || m < n {
        return Err(Error::InvalidConfig(alloc::format!(
            "expanded rotation needs m >= n >= 1, got n = {n}, m = {m}"
        )));
    }
    let (k, b) = factorize_order(m)?;
    let base = if b == 1 {
        vec![1]
    } else {
        BaseHadamardSet::get(b).ok_or(Error::UnsupportedOrder(m))?
    };
    Ok(ExpandedRotation {
        n,
        m,
        k,
        b,
        base,
        sign_flips: None,
    })
}

/// `X·Ĥ` (`D×m`) by zero-padding `X` to `m` columns and transforming each row.
pub fn apply_right(x: &Tensor, rot: &ExpandedRotation) -> Result<Tensor> {
    if x.cols() != rot.n {
        return Err(Error::DimensionMismatch {
            op: "apply_right",
            lhs: x.shape(),
            rhs: (rot.n, rot.m),
        });
    }
    let mut out = x.pad_cols(rot.m);
    let mut scratch = vec![0.0; rot.b];
    for r in 0..out.rows() {
        let row = out.row_mut(r);
        rot.transform_row(row, &mut scratch);
        rot.finish_row(row);
    }
    Ok(out)
}

/// `Ĥᵀ·W` (`m×N′`), computed as `(Wᵀ·Ĥ)ᵀ`.
pub fn apply_left_transpose(w: &Tensor, rot: &ExpandedRotation) -> Result<Tensor> {
    if w.rows() != rot.n {
        return Err(Error::DimensionMismatch {
            op: "apply_left_transpose",
            lhs: (rot.m, rot.n),
            rhs: w.shape(),
        });
    }
    Ok(apply_right(&w.transpose(), rot)?.transpose())
}

/// Unnormalized Walsh–Hadamard transform of every row.
pub fn fwht(rows: &Tensor) -> Result<Tensor> {
    let mut out = rows.clone();
    fwht_inplace(&mut out)?;
    Ok(out)
}

/// In-place unnormalized Walsh–Hadamard transform of every row. Applying it
/// twice multiplies by the row width.
pub fn fwht_inplace(rows: &mut Tensor) -> Result<()> {
    let w = rows.cols();
    if !w.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(w));
    }
    for r in 0..rows.rows() {
        butterfly(rows.row_mut(r), 1);
    }
    Ok(())
}

/// Square normalized Hadamard rotation of order `n` as a dense matrix.
pub fn hadamard_rotation(n: usize) -> Result<Tensor> {
    Ok(build_expanded(n, n)?.materialize())
}
