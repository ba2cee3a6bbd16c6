//! Conjugating `(M, v)` to a simpler pair.
//!
//! Full Krylov rank: `B = [M^{n-1}v, ..., Mv, v]` turns `M` into the
//! companion matrix of its characteristic polynomial and `v` into `e_n`.
//! Rank `r < n`: a unimodular `B` puts `M` in block upper triangular form
//! with `Bv` supported on the first `r` coordinates, and the top-left block
//! `M_1` together with that head of `Bv` is again full rank, so the companion
//! step applies to it.
//!
//! A [`Frame`] records how frequencies move between the original and the
//! final companion coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    char_poly, descending_krylov_matrix, det, hnf_unimodular, inverse, inverse_field,
    inverse_unimodular, krylov, Matrix,
};
use crate::rational::to_rational;
use crate::{IntMatrix, IntPolynomial, IntVector, RatMatrix, RatVector};

#[derive(Clone, Debug, PartialEq)]
pub struct CompanionConjugation {
    /// `[M^{n-1}v, ..., Mv, v]`
    pub b: IntMatrix,
    pub b_inv: RatMatrix,
    /// `b^{-1} M b`
    pub m_tilde: IntMatrix,
    /// `b^{-1} v = e_n`
    pub v_tilde: IntVector,
    pub char_poly: IntPolynomial,
}

/// Companion matrix with `-a_1, ..., -a_n` down the first column and ones on
/// the superdiagonal, for `p = x^n + a_1 x^{n-1} + ... + a_n`.
pub fn companion_matrix(p: &IntPolynomial) -> IntMatrix {
    assert!(p.is_monic(), "companion matrix of a non-monic polynomial");
    let n = p.degree();
    Matrix::from_fn(n, n, |i, j| {
        if j == 0 {
            -p.coeff(n - 1 - i)
        } else if j == i + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

pub fn companion_conjugate(m: &IntMatrix, v: &[BigInt]) -> Result<CompanionConjugation> {
    let n = m.ensure_square()?;
    let k = krylov(m, v)?;
    if k.rank < n {
        return Err(Error::NotFullRank { rank: k.rank, dim: n });
    }
    let b = descending_krylov_matrix(m, v, n);
    let b_inv = inverse(&b)?;
    let p = char_poly(m);
    let m_tilde = companion_matrix(&p);
    // b m~ = m b is the integer form of b^{-1} m b = m~
    if &b * &m_tilde != m * &b {
        return Err(Error::Internal("companion conjugation identity failed".into()));
    }
    let mut v_tilde = vec![BigInt::zero(); n];
    v_tilde[n - 1] = BigInt::one();
    debug_assert_eq!(b.mul_vec(&v_tilde), v.to_vec());
    Ok(CompanionConjugation { b, b_inv, m_tilde, v_tilde, char_poly: p })
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockDecomposition {
    /// Unimodular, with `b M b^{-1} = [[m1, c], [0, m2]]`.
    pub b: IntMatrix,
    pub b_inv: IntMatrix,
    pub r: usize,
    pub m1: IntMatrix,
    pub c: IntMatrix,
    pub m2: IntMatrix,
    /// Nonzero head of `b v`; the tail is zero.
    pub x: IntVector,
}

impl BlockDecomposition {
    /// `[[m1, c], [0, m2]]`
    pub fn assemble(&self) -> IntMatrix {
        let r = self.r;
        let n = r + self.m2.rows();
        Matrix::from_fn(n, n, |i, j| match (i < r, j < r) {
            (true, true) => self.m1[(i, j)].clone(),
            (true, false) => self.c[(i, j - r)].clone(),
            (false, true) => BigInt::zero(),
            (false, false) => self.m2[(i - r, j - r)].clone(),
        })
    }
}

pub fn block_decompose(m: &IntMatrix, v: &[BigInt]) -> Result<BlockDecomposition> {
    let n = m.ensure_square()?;
    let r = krylov(m, v)?.rank;
    if r == n {
        return Err(Error::FullRank(n));
    }
    let a = descending_krylov_matrix(m, v, r);
    let b = hnf_unimodular(&a)?.transform;
    let b_inv = inverse_unimodular(&b)?;
    let t = &(&b * m) * &b_inv;
    if !t.block(r, n, 0, r).is_zero() {
        return Err(Error::Internal("block decomposition left a nonzero lower-left block".into()));
    }
    let bv = b.mul_vec(v);
    if bv[r..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Internal("Bv has a nonzero tail".into()));
    }
    let d = BlockDecomposition {
        r,
        m1: t.block(0, r, 0, r),
        c: t.block(0, r, r, n),
        m2: t.block(r, n, r, n),
        x: bv[..r].to_vec(),
        b,
        b_inv,
    };
    debug_assert_eq!(det(m), det(&d.m1) * det(&d.m2));
    Ok(d)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReducedInstance {
    pub m1: IntMatrix,
    pub v_prime: IntVector,
    pub q: u64,
}

pub fn reduce_dimension(d: &BlockDecomposition, q: u64) -> Result<ReducedInstance> {
    let found = krylov(&d.m1, &d.x)?.rank;
    if found != d.r {
        return Err(Error::InternalRankError { expected: d.r, found });
    }
    Ok(ReducedInstance { m1: d.m1.clone(), v_prime: d.x.clone(), q })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `lambda -> B^T lambda`
    Forward,
    /// `lambda -> (B^T)^{-1} lambda`
    Inverse,
}

pub fn map_spectrum(b: &IntMatrix, lambdas: &[RatVector], direction: Direction) -> Result<Vec<RatVector>> {
    let n = b.ensure_square()?;
    if let Some(bad) = lambdas.iter().find(|l| l.len() != n) {
        return Err(Error::DimensionMismatch(format!(
            "frequency of length {} for a {n}x{n} matrix",
            bad.len()
        )));
    }
    let bt = b.transpose().to_rational();
    let map = match direction {
        Direction::Forward => bt,
        Direction::Inverse => inverse_field(&bt)?,
    };
    Ok(lambdas.iter().map(|l| map.mul_vec(l)).collect())
}

/// Linear maps between original frequency coordinates (dimension `n`) and
/// the companion coordinates of the reduced pair (dimension `r`).
///
/// `to_conjugated` is a left inverse of `to_original`. When `r < n` the
/// original frequency is determined only up to the trailing block, which
/// `to_original` fills with zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    to_conjugated: RatMatrix,
    to_original: RatMatrix,
}

impl Frame {
    pub fn identity(n: usize) -> Self {
        Frame { to_conjugated: Matrix::identity(n), to_original: Matrix::identity(n) }
    }

    /// `xi~ = B^T xi` for `M~ = B^{-1} M B`.
    pub fn from_companion(c: &CompanionConjugation) -> Self {
        Frame {
            to_conjugated: c.b.transpose().to_rational(),
            to_original: c.b_inv.transpose(),
        }
    }

    /// Composition: original -> block coordinates (`B^{-T}`), truncation to
    /// the first `r` entries, then the companion frame of `M_1`.
    pub fn from_reduction(block: &BlockDecomposition, companion: &CompanionConjugation) -> Self {
        let n = block.b.rows();
        let r = block.r;
        let head: RatMatrix =
            Matrix::from_fn(r, n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() });
        let b_inv_t = block.b_inv.transpose().to_rational();
        let b_t = block.b.transpose().to_rational();
        let inner = Frame::from_companion(companion);
        Frame {
            to_conjugated: &(&inner.to_conjugated * &head) * &b_inv_t,
            to_original: &(&b_t * &head.transpose()) * &inner.to_original,
        }
    }

    pub fn original_dim(&self) -> usize {
        self.to_conjugated.cols()
    }

    pub fn conjugated_dim(&self) -> usize {
        self.to_conjugated.rows()
    }

    pub fn to_conjugated_matrix(&self) -> &RatMatrix {
        &self.to_conjugated
    }

    pub fn to_original_matrix(&self) -> &RatMatrix {
        &self.to_original
    }

    pub fn from_matrices(to_conjugated: RatMatrix, to_original: RatMatrix) -> Result<Self> {
        if to_conjugated.rows() != to_original.cols() || to_conjugated.cols() != to_original.rows() {
            return Err(Error::DimensionMismatch("frame matrices are not transposed shapes".into()));
        }
        Ok(Frame { to_conjugated, to_original })
    }

    pub fn to_conjugated(&self, xi: &[BigRational]) -> RatVector {
        self.to_conjugated.mul_vec(xi)
    }

    pub fn to_original(&self, xi: &[BigRational]) -> RatVector {
        self.to_original.mul_vec(xi)
    }

    /// Checks the two identities that make mask products agree in both
    /// coordinate systems: `M^*_hat T = T M^*` and `T^T v_hat = v`, together
    /// with `T S = I` for the stored section `S`.
    pub fn intertwines(&self, m: &IntMatrix, v: &[BigInt], m_hat: &IntMatrix, v_hat: &[BigInt]) -> bool {
        let t = &self.to_conjugated;
        let (r, n) = (t.rows(), t.cols());
        if m.rows() != n || v.len() != n || m_hat.rows() != r || v_hat.len() != r {
            return false;
        }
        let lhs = &m_hat.transpose().to_rational() * t;
        let rhs = t * &m.transpose().to_rational();
        lhs == rhs
            && t.transpose().mul_vec(&to_rational(v_hat)) == to_rational(v)
            && (t * &self.to_original).is_identity()
    }
}

/// The full route from `(M, v)` to a companion pair `(M_1~, e_r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub rank: usize,
    /// `M_1` and its starting vector; `(M, v)` itself when `rank == n`.
    pub m1: IntMatrix,
    pub v1: IntVector,
    pub block: Option<BlockDecomposition>,
    pub companion: CompanionConjugation,
    pub frame: Frame,
}

impl Reduction {
    pub fn new(m: &IntMatrix, v: &[BigInt]) -> Result<Self> {
        let n = m.ensure_square()?;
        let rank = krylov(m, v)?.rank;
        if rank == n {
            let companion = companion_conjugate(m, v)?;
            let frame = Frame::from_companion(&companion);
            return Ok(Reduction { rank, m1: m.clone(), v1: v.to_vec(), block: None, companion, frame });
        }
        let block = block_decompose(m, v)?;
        // q does not affect the reduced pair itself
        let reduced = reduce_dimension(&block, 2)?;
        let companion = companion_conjugate(&reduced.m1, &reduced.v_prime)?;
        let frame = Frame::from_reduction(&block, &companion);
        Ok(Reduction {
            rank,
            m1: reduced.m1,
            v1: reduced.v_prime,
            block: Some(block),
            companion,
            frame,
        })
    }

    pub fn det_m1(&self) -> BigInt {
        det(&self.m1)
    }
}
