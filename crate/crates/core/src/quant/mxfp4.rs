//! OCP MXFP4: E2M1 elements sharing one E8M0 power-of-two scale per group.

// Unused only when std is linked into the build graph.
#[allow(unused_imports)]
use num_traits::Float;

/// Non-negative E2M1 magnitudes indexed by the low three code bits.
pub const E2M1_MAGNITUDES: [f64; 8] = [0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0];

/// Largest element exponent of E2M1 (`6 = 1.5·2²`).
pub const E2M1_EMAX: i32 = 2;

/// E8M0 bias; code 255 is NaN and never produced.
pub const E8M0_BIAS: i32 = 127;

/// The sixteen E2M1 values.
pub struct E2M1Codebook;

impl E2M1Codebook {
    /// Value of a 4-bit code: bit 3 is the sign, bits 0..3 index the magnitude.
    #[inline]
    pub fn value(code: u8) -> f64 {
        let mag = E2M1_MAGNITUDES[usize::from(code & 0x7)];
        if code & 0x8 != 0 {
            -mag
        } else {
            mag
        }
    }

    pub fn max() -> f64 {
        E2M1_MAGNITUDES[7]
    }

    /// Nearest code for `v` (already divided by the group scale). Magnitudes
    /// above 6 saturate; ties go to the even magnitude index. Zero (of either
    /// sign) always encodes as `0`.
    pub fn encode(v: f64) -> u8 {
        let a = v.abs();
        let mut idx = 7u8;
        for i in 0..7 {
            let mid = 0.5 * (E2M1_MAGNITUDES[i] + E2M1_MAGNITUDES[i + 1]);
            if a < mid {
                idx = i as u8;
                break;
            }
            if a == mid {
                idx = if i % 2 == 0 { i as u8 } else { i as u8 + 1 };
                break;
            }
        }
        if idx == 0 {
            0
        } else if v < 0.0 {
            idx | 0x8
        } else {
            idx
        }
    }

    /// Largest gap between adjacent magnitudes (between 4 and 6).
    pub fn max_gap() -> f64 {
        E2M1_MAGNITUDES
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }
}

/// `⌊log₂ x⌋` for finite positive `x`, exact for normals and subnormals.
pub fn floor_log2(x: f64) -> i32 {
    debug_assert!(x > 0.0 && x.is_finite());
    let (mantissa, exp, _) = x.integer_decode();
    exp as i32 + (63 - mantissa.leading_zeros() as i32)
}

/// `2^e` for `e` in the normal f64 exponent range, built from bits.
pub fn pow2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((e + 1023) as u64) << 52)
}

/// Shared exponent for a group with absolute maximum `amax`; all-zero groups get 0.
pub fn shared_exponent(amax: f64) -> i32 {
    if amax == 0.0 {
        return 0;
    }
    (floor_log2(amax) - E2M1_EMAX).clamp(-E8M0_BIAS, E8M0_BIAS)
}

#[inline]
pub fn exponent_to_e8m0(e: i32) -> u8 {
    (e + E8M0_BIAS) as u8
}

#[inline]
pub fn e8m0_to_exponent(code: u8) -> i32 {
    i32::from(code) - E8M0_BIAS
}
