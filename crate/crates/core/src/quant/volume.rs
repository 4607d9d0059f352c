//! Storage volume in bits, including quantization metadata.

use super::{GroupAxis, SchemeFamily, MX_GROUP_SIZE};

pub const BF16_BITS: u64 = 16;
pub const INT4_BITS: u64 = 4;
/// Per-channel INT4 weight scales are stored as 16-bit floats.
pub const INT4_CHANNEL_SCALE_BITS: u64 = 16;
pub const E8M0_BITS: u64 = 8;

/// How a block of parameters is stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StorageFormat {
    Bf16,
    /// 4-bit codes plus one 16-bit scale per channel.
    Int4PerChannel { channels: u64 },
    /// 4-bit codes; per-token scales are runtime values and not stored.
    Int4PerToken,
    /// 4-bit E2M1 codes plus one E8M0 byte per group.
    Mxfp4 { groups: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeItem {
    pub params: u64,
    pub format: StorageFormat,
}

impl VolumeItem {
    pub fn bf16(params: u64) -> Self {
        Self {
            params,
            format: StorageFormat::Bf16,
        }
    }

    pub fn int4_per_channel(params: u64, channels: u64) -> Self {
        Self {
            params,
            format: StorageFormat::Int4PerChannel { channels },
        }
    }

    /// A flat run of `params` values grouped in 32s.
    pub fn mxfp4(params: u64) -> Self {
        Self {
            params,
            format: StorageFormat::Mxfp4 {
                groups: params.div_ceil(MX_GROUP_SIZE as u64),
            },
        }
    }

    /// A `rows×cols` weight matrix stored under `family`. INT4 scales are per
    /// column; MX groups run along `axis`.
    pub fn weight_matrix(rows: usize, cols: usize, family: SchemeFamily, axis: GroupAxis) -> Self {
        let params = (rows * cols) as u64;
        match family {
            SchemeFamily::Int4 => Self::int4_per_channel(params, cols as u64),
            SchemeFamily::Mxfp4 => {
                let groups = match axis {
                    GroupAxis::Column => rows.div_ceil(MX_GROUP_SIZE) * cols,
                    GroupAxis::Row => cols.div_ceil(MX_GROUP_SIZE) * rows,
                };
                Self {
                    params,
                    format: StorageFormat::Mxfp4 {
                        groups: groups as u64,
                    },
                }
            }
        }
    }

    pub fn bits(&self) -> u64 {
        match self.format {
            StorageFormat::Bf16 => self.params * BF16_BITS,
            StorageFormat::Int4PerChannel { channels } => {
                self.params * INT4_BITS + channels * INT4_CHANNEL_SCALE_BITS
            }
            StorageFormat::Int4PerToken => self.params * INT4_BITS,
            StorageFormat::Mxfp4 { groups } => self.params * INT4_BITS + groups * E8M0_BITS,
        }
    }
}

/// Total bits over all items.
pub fn volume_bits(items: &[VolumeItem]) -> u64 {
    items.iter().map(VolumeItem::bits).sum()
}

/// Bits of the same parameters held entirely in BF16.
pub fn bf16_reference_bits(params: u64) -> u64 {
    params * BF16_BITS
}

/// `reference / candidate`, i.e. how many times smaller the candidate is.
pub fn volume_reduction(reference_bits: u64, candidate_bits: u64) -> f64 {
    reference_bits as f64 / candidate_bits as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_percent_expansion_still_reduces_volume() {
        let base = 1_000_000u64;
        let expanded = 1_050_000u64;
        let reference = bf16_reference_bits(base);
        let candidate = volume_bits(&[VolumeItem::int4_per_channel(expanded, 0)]);
        let ratio = volume_reduction(reference, candidate);
        assert!((ratio - 16.0 / (1.05 * 4.0)).abs() < 1e-12);
        assert!(ratio >= 3.8);
    }

    #[test]
    fn zero_params() {
        assert_eq!(volume_bits(&[VolumeItem::bf16(0), VolumeItem::mxfp4(0)]), 0);
        assert_eq!(volume_bits(&[]), 0);
    }

    #[test]
    fn mxfp4_overhead() {
        assert_eq!(volume_bits(&[VolumeItem::mxfp4(64)]), 272);
        assert_eq!(volume_bits(&[VolumeItem::mxfp4(33)]), 33 * 4 + 16);
        let w = VolumeItem::weight_matrix(40, 3, SchemeFamily::Mxfp4, GroupAxis::Column);
        assert_eq!(w.bits(), 120 * 4 + 2 * 3 * 8);
    }

    #[test]
    fn int4_channel_overhead() {
        let w = VolumeItem::weight_matrix(8, 4, SchemeFamily::Int4, GroupAxis::Column);
        assert_eq!(w.bits(), 32 * 4 + 4 * 16);
        assert_eq!(
            VolumeItem {
                params: 10,
                format: StorageFormat::Int4PerToken
            }
            .bits(),
            40
        );
    }
}
