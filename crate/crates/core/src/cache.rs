//! Binary cache of `Z(t)` on a uniform grid.
//!
//! Layout, all little-endian: the magic `ZMC1`, a `u32` version (1), the
//! grid start and step as `f64`, a `u64` count, then `count` values of
//! `Z(t_start + i dt)` as `f64`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::zeta::{uniform_grid_shape, z_function};
use crate::{LabError, Result};

pub const MAGIC: [u8; 4] = *b"ZMC1";
pub const VERSION: u32 = 1;
const HEADER_LEN: usize = 4 + 4 + 8 + 8 + 8;

#[derive(Debug, Clone, PartialEq)]
pub struct SampleCache {
    pub t_start: f64,
    pub dt: f64,
    pub values: Vec<f64>,
}

impl SampleCache {
    /// Evaluates `Z` on the grid `t0, t0 + dt, ... <= t1`.
    pub fn compute(t0: f64, t1: f64, dt: f64) -> Result<Self> {
        let (t_start, dt, count) = uniform_grid_shape(t0, t1, dt)?;
        let values = (0..count)
            .into_par_iter()
            .map(|i| z_function(t_start + i as f64 * dt))
            .collect::<Result<Vec<_>>>()?;
        Ok(SampleCache {
            t_start,
            dt,
            values,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn t_at(&self, i: usize) -> f64 {
        self.t_start + i as f64 * self.dt
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(&MAGIC)?;
        w.write_all(&VERSION.to_le_bytes())?;
        w.write_all(&self.t_start.to_le_bytes())?;
        w.write_all(&self.dt.to_le_bytes())?;
        w.write_all(&(self.values.len() as u64).to_le_bytes())?;
        for v in &self.values {
            w.write_all(&v.to_le_bytes())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_from<R: Read>(mut r: R) -> Result<Self> {
        let mut header = [0u8; HEADER_LEN];
        r.read_exact(&mut header)
            .map_err(|_| LabError::Cache("truncated header".into()))?;
        if header[0..4] != MAGIC {
            return Err(LabError::Cache(format!("bad magic {:?}", &header[0..4])));
        }
        let version = u32::from_le_bytes(header[4..8].try_into().unwrap());
        if version != VERSION {
            return Err(LabError::Cache(format!("unsupported version {version}")));
        }
        let t_start = f64::from_le_bytes(header[8..16].try_into().unwrap());
        let dt = f64::from_le_bytes(header[16..24].try_into().unwrap());
        if !(dt > 0.0 && dt.is_finite() && t_start.is_finite()) {
            return Err(LabError::Cache(format!(
                "bad grid t_start = {t_start}, dt = {dt}"
            )));
        }
        let count = u64::from_le_bytes(header[24..32].try_into().unwrap());
        let count = usize::try_from(count)
            .map_err(|_| LabError::Cache(format!("count {count} too large")))?;

        let mut body = Vec::new();
        r.read_to_end(&mut body)?;
        if body.len() != count * 8 {
            return Err(LabError::Cache(format!(
                "expected {count} values, found {} bytes of payload",
                body.len()
            )));
        }
        let values = body
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(SampleCache {
            t_start,
            dt,
            values,
        })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        self.write_to(BufWriter::new(File::create(path)?))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::read_from(BufReader::new(File::open(path)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_layout() {
        let c = SampleCache {
            t_start: 10.0,
            dt: 0.5,
            values: vec![1.0, -2.0],
        };
        let mut buf = Vec::new();
        c.write_to(&mut buf).unwrap();
        assert_eq!(buf.len(), HEADER_LEN + 16);
        assert_eq!(&buf[0..4], b"ZMC1");
        assert_eq!(&buf[4..8], &[1, 0, 0, 0]);
        assert_eq!(&buf[8..16], &10.0f64.to_le_bytes());
        assert_eq!(&buf[24..32], &2u64.to_le_bytes());
        assert_eq!(SampleCache::read_from(&buf[..]).unwrap(), c);
    }

    #[test]
    fn rejects_corruption() {
        let c = SampleCache {
            t_start: 10.0,
            dt: 0.5,
            values: vec![3.0],
        };
        let mut buf = Vec::new();
        c.write_to(&mut buf).unwrap();

        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(SampleCache::read_from(&bad[..]).is_err());

        let mut bad = buf.clone();
        bad[4] = 2;
        let err = SampleCache::read_from(&bad[..]).unwrap_err();
        assert!(err.to_string().contains("version"));

        assert!(SampleCache::read_from(&buf[..buf.len() - 1]).is_err());
        assert!(SampleCache::read_from(&buf[..10]).is_err());
    }
}
