//! The `EXQ1` tensor container.
//!
//! Layout (little-endian):
//! - magic `45 58 51 31`, `u32` version, `u32` tensor count
//! - per tensor: `u16` name length, UTF-8 name, `u8` dtype, `u8` rank,
//!   rank × `u64` dims, `u64` absolute data offset
//! - data section: every tensor starts on a 64-byte boundary

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use exq_core::Tensor;

use crate::error::{ExqError, Result};

pub const MAGIC: [u8; 4] = *b"EXQ1";
pub const VERSION: u32 = 1;
pub const ALIGN: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum DType {
    F64 = 0,
    F32 = 1,
    U32 = 2,
    /// Two 4-bit codes per byte, even index in the low nibble.
    Packed4 = 3,
    U8 = 4,
}

impl DType {
    fn from_u8(v: u8) -> Result<Self> {
        Ok(match v {
            0 => DType::F64,
            1 => DType::F32,
            2 => DType::U32,
            3 => DType::Packed4,
            4 => DType::U8,
            _ => return Err(ExqError::Format(format!("unknown dtype {v}"))),
        })
    }

    fn byte_len(self, numel: usize) -> usize {
        match self {
            DType::F64 => numel * 8,
            DType::F32 | DType::U32 => numel * 4,
            DType::Packed4 => numel.div_ceil(2),
            DType::U8 => numel,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TensorData {
    F64(Vec<f64>),
    F32(Vec<f32>),
    U32(Vec<u32>),
    Packed4(Vec<u8>),
    U8(Vec<u8>),
}

impl TensorData {
    pub fn dtype(&self) -> DType {
        match self {
            TensorData::F64(_) => DType::F64,
            TensorData::F32(_) => DType::F32,
            TensorData::U32(_) => DType::U32,
            TensorData::Packed4(_) => DType::Packed4,
            TensorData::U8(_) => DType::U8,
        }
    }

    fn byte_len(&self) -> usize {
        match self {
            TensorData::F64(v) => v.len() * 8,
            TensorData::F32(v) => v.len() * 4,
            TensorData::U32(v) => v.len() * 4,
            TensorData::Packed4(v) | TensorData::U8(v) => v.len(),
        }
    }

    fn write_to(&self, out: &mut Vec<u8>) {
        match self {
            TensorData::F64(v) => v.iter().for_each(|x| out.extend_from_slice(&x.to_le_bytes())),
            TensorData::F32(v) => v.iter().for_each(|x| out.extend_from_slice(&x.to_le_bytes())),
            TensorData::U32(v) => v.iter().for_each(|x| out.extend_from_slice(&x.to_le_bytes())),
            TensorData::Packed4(v) | TensorData::U8(v) => out.extend_from_slice(v),
        }
    }

    fn read_from(dtype: DType, bytes: &[u8]) -> Self {
        match dtype {
            DType::F64 => TensorData::F64(
                bytes
                    .chunks_exact(8)
                    .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
                    .collect(),
            ),
            DType::F32 => TensorData::F32(
                bytes
                    .chunks_exact(4)
                    .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
                    .collect(),
            ),
            DType::U32 => TensorData::U32(
                bytes
                    .chunks_exact(4)
                    .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
                    .collect(),
            ),
            DType::Packed4 => TensorData::Packed4(bytes.to_vec()),
            DType::U8 => TensorData::U8(bytes.to_vec()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub name: String,
    pub dims: Vec<u64>,
    pub data: TensorData,
}

impl Record {
    pub fn new(name: impl Into<String>, dims: Vec<u64>, data: TensorData) -> Result<Self> {
        let name = name.into();
        let numel = dims.iter().product::<u64>() as usize;
        if data.dtype().byte_len(numel) != data.byte_len() {
            return Err(ExqError::Format(format!(
                "{name}: {} bytes of {:?} do not match dims {dims:?}",
                data.byte_len(),
                data.dtype()
            )));
        }
        if name.len() > u16::MAX as usize {
            return Err(ExqError::Format(format!("tensor name too long: {name}")));
        }
        if dims.len() > u8::MAX as usize {
            return Err(ExqError::Format(format!("{name}: rank {} too large", dims.len())));
        }
        Ok(Self { name, dims, data })
    }

    pub fn numel(&self) -> usize {
        self.dims.iter().product::<u64>() as usize
    }
}

fn align_up(n: usize) -> usize {
    n.div_ceil(ALIGN) * ALIGN
}

/// Named tensors in insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Container {
    records: Vec<Record>,
}

impl Container {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: Record) -> Result<()> {
        if self.get(&record.name).is_some() {
            return Err(ExqError::Format(format!("duplicate tensor {}", record.name)));
        }
        self.records.push(record);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn require(&self, name: &str) -> Result<&Record> {
        self.get(name)
            .ok_or_else(|| ExqError::Format(format!("missing tensor {name}")))
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn push_matrix(&mut self, name: impl Into<String>, t: &Tensor) -> Result<()> {
        let dims = vec![t.rows() as u64, t.cols() as u64];
        self.push(Record::new(name, dims, TensorData::F64(t.data().to_vec()))?)
    }

    pub fn push_vector(&mut self, name: impl Into<String>, v: &[f64]) -> Result<()> {
        self.push(Record::new(name, vec![v.len() as u64], TensorData::F64(v.to_vec()))?)
    }

    /// A rank-2 `f64` tensor.
    pub fn matrix(&self, name: &str) -> Result<Tensor> {
        let r = self.require(name)?;
        match (&r.data, r.dims.as_slice()) {
            (TensorData::F64(v), [rows, cols]) => {
                Ok(Tensor::from_vec(*rows as usize, *cols as usize, v.clone())?)
            }
            _ => Err(ExqError::Format(format!("{name} is not an f64 matrix"))),
        }
    }

    /// A rank-1 `f64` tensor.
    pub fn vector(&self, name: &str) -> Result<Vec<f64>> {
        let r = self.require(name)?;
        match (&r.data, r.dims.len()) {
            (TensorData::F64(v), 1) => Ok(v.clone()),
            _ => Err(ExqError::Format(format!("{name} is not an f64 vector"))),
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let header_len = 12
            + self
                .records
                .iter()
                .map(|r| 2 + r.name.len() + 2 + 8 * r.dims.len() + 8)
                .sum::<usize>();
        let mut offsets = Vec::with_capacity(self.records.len());
        let mut cursor = align_up(header_len);
        for r in &self.records {
            offsets.push(cursor);
            cursor = align_up(cursor + r.data.byte_len());
        }
        let mut out = Vec::with_capacity(cursor);
        out.extend_from_slice(&MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&(self.records.len() as u32).to_le_bytes());
        for (r, off) in self.records.iter().zip(&offsets) {
            out.extend_from_slice(&(r.name.len() as u16).to_le_bytes());
            out.extend_from_slice(r.name.as_bytes());
            out.push(r.data.dtype() as u8);
            out.push(r.dims.len() as u8);
            for d in &r.dims {
                out.extend_from_slice(&d.to_le_bytes());
            }
            out.extend_from_slice(&(*off as u64).to_le_bytes());
        }
        for (r, off) in self.records.iter().zip(&offsets) {
            out.resize(*off, 0);
            r.data.write_to(&mut out);
        }
        out.resize(align_up(out.len()), 0);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut cur = Cursor { bytes, pos: 0 };
        if cur.take(4)? != MAGIC {
            return Err(ExqError::Format("bad magic".into()));
        }
        let version = cur.u32()?;
        if version != VERSION {
            return Err(ExqError::Format(format!("unsupported version {version}")));
        }
        let count = cur.u32()? as usize;
        let mut headers = Vec::with_capacity(count.min(1 << 16));
        for _ in 0..count {
            let len = cur.u16()? as usize;
            let name = std::str::from_utf8(cur.take(len)?)
                .map_err(|_| ExqError::Format("tensor name is not UTF-8".into()))?
                .to_string();
            let dtype = DType::from_u8(cur.u8()?)?;
            let rank = cur.u8()? as usize;
            let dims = (0..rank).map(|_| cur.u64()).collect::<Result<Vec<_>>>()?;
            let offset = cur.u64()? as usize;
            headers.push((name, dtype, dims, offset));
        }
        let header_end = cur.pos;
        let mut seen = HashSet::new();
        let mut records = Vec::with_capacity(headers.len());
        for (name, dtype, dims, offset) in headers {
            if !seen.insert(name.clone()) {
                return Err(ExqError::Format(format!("duplicate tensor {name}")));
            }
            let numel = dims
                .iter()
                .try_fold(1u64, |a, &d| a.checked_mul(d))
                .ok_or_else(|| ExqError::Format(format!("{name}: dims overflow")))?;
            let len = dtype.byte_len(numel as usize);
            if offset % ALIGN != 0 || offset < header_end {
                return Err(ExqError::Format(format!("{name}: bad data offset {offset}")));
            }
            let end = offset
                .checked_add(len)
                .filter(|&e| e <= bytes.len())
                .ok_or_else(|| ExqError::Format(format!("{name}: data runs past end of file")))?;
            let data = TensorData::read_from(dtype, &bytes[offset..end]);
            records.push(Record { name, dims, data });
        }
        Ok(Self { records })
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_bytes()).map_err(|e| ExqError::io(path, e))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let bytes = fs::read(path).map_err(|e| ExqError::io(path, e))?;
        Self::from_bytes(&bytes)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.bytes.len())
            .ok_or_else(|| ExqError::Format("truncated header".into()))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Raw little-endian `u32` token IDs.
pub fn read_tokens(path: &Path) -> Result<Vec<u32>> {
    let bytes = fs::read(path).map_err(|e| ExqError::io(path, e))?;
    if bytes.len() % 4 != 0 {
        return Err(ExqError::Format(format!(
            "{}: token file length {} is not a multiple of 4",
            path.display(),
            bytes.len()
        )));
    }
    Ok(bytes
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
        .collect())
}

pub fn write_tokens(path: &Path, tokens: &[u32]) -> Result<()> {
    let bytes: Vec<u8> = tokens.iter().flat_map(|t| t.to_le_bytes()).collect();
    fs::write(path, bytes).map_err(|e| ExqError::io(path, e))
}
