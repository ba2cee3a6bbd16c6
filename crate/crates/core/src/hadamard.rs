//! Hadamard triples `(M, D, S)`: construction of dual digits for the
//! companion form, exact unitarity checks and the canonical finite spectra
//! `Lambda_k = { sum_{j<k} M*^j s_j }`.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::conjugation::{CompanionConjugation, Frame};
use crate::cyclotomic::phase_sum_vanishes;
use crate::error::{Error, Result};
use crate::linalg::inverse;
use crate::rational::{frac, int_rat_dot, to_rational};
use crate::{Frequency, IntMatrix, IntVector};

#[derive(Clone, Debug, PartialEq)]
pub struct HadamardTriple {
    pub m: IntMatrix,
    pub digits: Vec<IntVector>,
    pub duals: Vec<IntVector>,
    /// Map from the coordinates of `m` back to the caller's coordinates.
    pub frame: Option<Frame>,
    verified: bool,
}

impl HadamardTriple {
    pub fn new(m: IntMatrix, digits: Vec<IntVector>, duals: Vec<IntVector>, frame: Option<Frame>) -> Self {
        HadamardTriple { m, digits, duals, frame, verified: false }
    }

    pub fn q(&self) -> usize {
        self.digits.len()
    }

    /// Runs the exact unitarity check and records the outcome.
    pub fn verify(&mut self) -> bool {
        self.verified = verify_hadamard(&self.m, &self.digits, &self.duals);
        self.verified
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn with_frame(mut self, frame: Frame) -> Self {
        self.frame = Some(frame);
        self
    }
}

/// `q x q` phases `theta[k][l] = <m^{-1} d_k, s_l> mod 1`; the Hadamard
/// matrix is `q^{-1/2} [exp(2 pi i theta)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseMatrix {
    pub theta: Vec<Vec<BigRational>>,
}

impl PhaseMatrix {
    pub fn size(&self) -> usize {
        self.theta.len()
    }

    /// Exact test that the columns of the Hadamard matrix are orthogonal.
    /// A common denominator too large to index is reported as not unitary.
    pub fn is_unitary(&self) -> bool {
        let q = self.size();
        if q == 0 || self.theta.iter().any(|row| row.len() != q) {
            return false;
        }
        (0..q).all(|a| {
            (a + 1..q).all(|b| {
                let diffs: Vec<BigRational> =
                    self.theta.iter().map(|row| &row[b] - &row[a]).collect();
                phase_sum_vanishes(&diffs).unwrap_or(false)
            })
        })
    }
}

/// Dual digits `{0, u, ..., (q-1)u}` with `u = (-a_n / q, 0, ..., 0)` for the
/// companion pair, where `a_n` is the constant term of the characteristic
/// polynomial.
pub fn construct_dual_digits(conj: &CompanionConjugation, q: u64) -> Result<HadamardTriple> {
    let n = conj.m_tilde.rows();
    let a_n = conj.char_poly.coeff(0);
    let qb = BigInt::from(q);
    if q == 0 || !(&a_n % &qb).is_zero() {
        return Err(Error::NotDivisible { q, value: a_n.abs().to_string() });
    }
    let mut u = vec![BigInt::zero(); n];
    u[0] = -(&a_n / &qb);
    let digits = multiples(&conj.v_tilde, q);
    let duals = multiples(&u, q);
    Ok(HadamardTriple::new(
        conj.m_tilde.clone(),
        digits,
        duals,
        Some(Frame::from_companion(conj)),
    ))
}

/// `{0, w, 2w, ..., (q-1)w}`
pub fn multiples(w: &[BigInt], q: u64) -> Vec<IntVector> {
    (0..q)
        .map(|k| w.iter().map(|x| x * BigInt::from(k)).collect())
        .collect()
}

pub fn phase_matrix(m: &IntMatrix, digits: &[IntVector], duals: &[IntVector]) -> Result<PhaseMatrix> {
    let n = m.ensure_square()?;
    if digits.iter().chain(duals).any(|d| d.len() != n) {
        return Err(Error::DimensionMismatch("digit length differs from matrix size".into()));
    }
    let m_inv = inverse(m)?;
    let pre: Vec<Vec<BigRational>> = digits.iter().map(|d| m_inv.mul_vec(&to_rational(d))).collect();
    let theta = pre
        .iter()
        .map(|x| duals.iter().map(|s| frac(&int_rat_dot(s, x))).collect())
        .collect();
    Ok(PhaseMatrix { theta })
}

/// Exact check of `H* H = q I`; any malformed input is not a Hadamard triple.
pub fn verify_hadamard(m: &IntMatrix, digits: &[IntVector], duals: &[IntVector]) -> bool {
    if digits.len() != duals.len() || digits.is_empty() {
        return false;
    }
    phase_matrix(m, digits, duals).is_ok_and(|p| p.is_unitary())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CandidateSpectrum {
    pub depth: usize,
    /// `Lambda_k` in the caller's coordinates, in enumeration order
    /// (digit index `i` contributes `s_{(i / q^j) mod q}` at level `j`).
    pub frequencies: Vec<Frequency>,
    /// The same set in the coordinates of the triple.
    pub conjugated: Vec<IntVector>,
    pub frame: Option<Frame>,
}

impl CandidateSpectrum {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}

/// Enumerates `Lambda_k` for a (verified) triple.
pub fn candidate_spectrum(triple: &HadamardTriple, depth: usize) -> Result<CandidateSpectrum> {
    let q = triple.duals.len();
    let n = triple.m.ensure_square()?;
    if q == 0 || depth == 0 {
        return Err(Error::DimensionMismatch("empty dual set or zero depth".into()));
    }
    let count = q
        .checked_pow(depth as u32)
        .ok_or(Error::TooLarge { count: usize::MAX, cap: usize::MAX })?;
    let mt = triple.m.transpose();
    // level[j][s] = M*^j s_s
    let mut level: Vec<Vec<IntVector>> = Vec::with_capacity(depth);
    level.push(triple.duals.clone());
    for j in 1..depth {
        let next = level[j - 1].iter().map(|s| mt.mul_vec(s)).collect();
        level.push(next);
    }
    let mut seen = HashSet::with_capacity(count);
    let mut conjugated = Vec::with_capacity(count);
    for i in 0..count {
        let mut acc = vec![BigInt::zero(); n];
        let mut rest = i;
        for lvl in &level {
            for (a, x) in acc.iter_mut().zip(&lvl[rest % q]) {
                *a += x;
            }
            rest /= q;
        }
        if !seen.insert(acc.clone()) {
            return Err(Error::DuplicateFrequency);
        }
        conjugated.push(acc);
    }
    let frequencies = conjugated
        .iter()
        .map(|x| match &triple.frame {
            Some(f) => f.to_original(&to_rational(x)),
            None => to_rational(x),
        })
        .collect();
    Ok(CandidateSpectrum { depth, frequencies, conjugated, frame: triple.frame.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugation::companion_conjugate;
    use crate::rational::{int_matrix, int_vector, rat};

    fn cubic() -> CompanionConjugation {
        companion_conjugate(
            &int_matrix(&[&[2, 6, 4], &[-1, 2, 2], &[-1, -1, -4]]),
            &int_vector(&[0, 0, 1]),
        )
        .unwrap()
    }

    #[test]
    fn dual_digits_of_pure_cubic() {
        let t = construct_dual_digits(&cubic(), 6).unwrap();
        assert_eq!(t.duals[1], int_vector(&[-6, 0, 0]));
        assert_eq!(t.duals.len(), 6);
        assert_eq!(t.digits[5], int_vector(&[0, 0, 5]));
        let t = construct_dual_digits(&cubic(), 36).unwrap();
        assert_eq!(t.duals[1], int_vector(&[-1, 0, 0]));
        assert_eq!(
            construct_dual_digits(&cubic(), 5),
            Err(Error::NotDivisible { q: 5, value: "36".into() })
        );
    }

    #[test]
    fn dual_digits_in_one_dimension() {
        let c = companion_conjugate(&int_matrix(&[&[2]]), &int_vector(&[1])).unwrap();
        let t = construct_dual_digits(&c, 2).unwrap();
        assert_eq!(t.duals, vec![int_vector(&[0]), int_vector(&[1])]);
    }

    #[test]
    fn phases_of_pure_cubic_triple() {
        let t = construct_dual_digits(&cubic(), 6).unwrap();
        let p = phase_matrix(&t.m, &t.digits, &t.duals).unwrap();
        for k in 0..6i64 {
            for l in 0..6i64 {
                assert_eq!(p.theta[k as usize][l as usize], frac(&rat(k * l, 6)));
            }
        }
        assert!(p.is_unitary());
    }

    #[test]
    fn phases_in_one_dimension() {
        let d = vec![int_vector(&[0]), int_vector(&[1])];
        let p = phase_matrix(&int_matrix(&[&[2]]), &d, &d).unwrap();
        assert_eq!(p.theta[1], vec![rat(0, 1), rat(1, 2)]);
        assert_eq!(p.theta[0], vec![rat(0, 1), rat(0, 1)]);
        assert_eq!(phase_matrix(&int_matrix(&[&[0]]), &d, &d), Err(Error::Singular));
    }

    #[test]
    fn unitarity() {
        let mut t = construct_dual_digits(&cubic(), 6).unwrap();
        assert!(!t.is_verified());
        assert!(t.verify());
        assert!(t.is_verified());
        let zeros = vec![int_vector(&[0, 0, 0]); 6];
        assert!(!verify_hadamard(&t.m, &t.digits, &zeros));
        let d = vec![int_vector(&[0]), int_vector(&[1])];
        let s = vec![int_vector(&[0]), int_vector(&[2])];
        assert!(verify_hadamard(&int_matrix(&[&[4]]), &d, &s));
        let s = vec![int_vector(&[0]), int_vector(&[1])];
        assert!(!verify_hadamard(&int_matrix(&[&[4]]), &d, &s));
    }

    #[test]
    fn spectrum_enumeration() {
        let d = vec![int_vector(&[0]), int_vector(&[1])];
        let s = vec![int_vector(&[0]), int_vector(&[2])];
        let t = HadamardTriple::new(int_matrix(&[&[4]]), d, s.clone(), None);
        let l = candidate_spectrum(&t, 2).unwrap();
        let vals: Vec<BigRational> = l.frequencies.iter().map(|x| x[0].clone()).collect();
        assert_eq!(vals, vec![rat(0, 1), rat(2, 1), rat(8, 1), rat(10, 1)]);
        assert_eq!(candidate_spectrum(&t, 1).unwrap().conjugated, s);
        let t = construct_dual_digits(&cubic(), 6).unwrap();
        let l = candidate_spectrum(&t, 2).unwrap();
        assert_eq!(l.len(), 36);
        assert!(l.frequencies.iter().any(|x| x.iter().all(Zero::is_zero)));
    }

    #[test]
    fn duplicate_sums_rejected() {
        let d = vec![int_vector(&[0]), int_vector(&[1])];
        let s = vec![int_vector(&[0]), int_vector(&[0])];
        let t = HadamardTriple::new(int_matrix(&[&[4]]), d, s, None);
        assert_eq!(candidate_spectrum(&t, 2), Err(Error::DuplicateFrequency));
    }
}
