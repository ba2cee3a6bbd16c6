use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::is_expanding;
use crate::{IntMatrix, IntVector};

/// A validated pair `(M, D)` with `D = {0, ..., q-1} v`.
///
/// Construction checks that `M` is square and expanding, that `v` is nonzero
/// with matching length, and that `q >= 2`; every other routine may rely on
/// those facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInstance {
    m: IntMatrix,
    v: IntVector,
    q: u64,
}

impl ProblemInstance {
    pub fn new(m: IntMatrix, v: IntVector, q: u64) -> Result<Self> {
        let n = m.ensure_square()?;
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "v has length {} but M is {n}x{n}",
                v.len()
            )));
        }
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        if q < 2 {
            return Err(Error::BadQ(q.to_string()));
        }
        if !is_expanding(&m) {
            return Err(Error::NotExpanding);
        }
        Ok(ProblemInstance { m, v, q })
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    pub fn v(&self) -> &IntVector {
        &self.v
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.v.len()
    }

    /// Same matrix and direction, different digit count.
    pub fn with_q(&self, q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::BadQ(q.to_string()));
        }
        Ok(ProblemInstance { q, ..self.clone() })
    }

    /// The digit set itself, `{k v : 0 <= k < q}`.
    pub fn digits(&self) -> Vec<IntVector> {
        (0..self.q)
            .map(|k| {
                let k = BigInt::from(k);
                self.v.iter().map(|x| x * &k).collect()
            })
            .collect()
    }
}
