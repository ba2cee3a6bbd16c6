//! Decision procedure. Reduce `(M, v)` to the companion pair of `M_1`, then
//! read the verdict off `d_1 = det M_1`, `g = gcd(q, |d_1|)` and the shape of
//! the characteristic polynomial of `M_1`:
//!
//! | condition                       | verdict                                   |
//! |---------------------------------|-------------------------------------------|
//! | `q \| d_1`                      | spectral                                  |
//! | `x^r + c`, `g > 1`              | not spectral, infinitely many orthogonals |
//! | `x^r + c`, `g = 1`              | not spectral, finitely many orthogonals   |
//! | otherwise, `g > 1`              | infinitely many orthogonals, open         |
//! | otherwise, `g = 1`              | unknown                                   |

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::conjugation::Reduction;
use crate::error::{Error, Result};
use crate::fourier::{companion_witness, construct_witness_from, verify_witness, witness_holds, Witness};
use crate::hadamard::{construct_dual_digits, verify_hadamard, HadamardTriple, PhaseMatrix, phase_matrix};
use crate::instance::ProblemInstance;
use crate::{IntMatrix, IntPolynomial, IntVector, RatVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Spectral,
    NotSpectralInfiniteOrthogonals,
    NotSpectralFinitelyMany,
    InfiniteOrthogonalsSpectralityUnknown,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Spectral => "spectral",
            Verdict::NotSpectralInfiniteOrthogonals => "not_spectral_infinite_orthogonals",
            Verdict::NotSpectralFinitelyMany => "not_spectral_finitely_many",
            Verdict::InfiniteOrthogonalsSpectralityUnknown => "infinite_orthogonals_spectrality_unknown",
            Verdict::Unknown => "unknown",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Verdict::Spectral,
            Verdict::NotSpectralInfiniteOrthogonals,
            Verdict::NotSpectralFinitelyMany,
            Verdict::InfiniteOrthogonalsSpectralityUnknown,
            Verdict::Unknown,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }

    /// Whether the verdict asserts infinitely many mutually orthogonal
    /// exponentials.
    pub fn has_infinite_orthogonals(self) -> bool {
        matches!(
            self,
            Verdict::Spectral
                | Verdict::NotSpectralInfiniteOrthogonals
                | Verdict::InfiniteOrthogonalsSpectralityUnknown
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Facts the verdict rests on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// `(M, v)` replaced by the full-rank pair `(M_1, x)`.
    DimensionReduction,
    /// `v` is an eigenvector and `M_1` is its eigenvalue.
    EigenvectorCase,
    /// A Hadamard triple makes the measure spectral.
    HadamardTripleSufficiency,
    /// A mask zero `alpha` with `M*^l alpha` integral gives infinitely many
    /// orthogonal exponentials.
    MaskZeroWitnessSufficiency,
    /// For `x^r + c` the measure is spectral only if `q | c`, and has
    /// infinitely many orthogonals only if `gcd(q, c) > 1`.
    PurePowerNecessity,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::DimensionReduction => "dimension_reduction",
            Rule::EigenvectorCase => "eigenvector_case",
            Rule::HadamardTripleSufficiency => "hadamard_triple_sufficiency",
            Rule::MaskZeroWitnessSufficiency => "mask_zero_witness_sufficiency",
            Rule::PurePowerNecessity => "pure_power_necessity",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conditions {
    pub n: usize,
    /// Krylov rank of `(M, v)`.
    pub r: usize,
    pub det_m1: BigInt,
    /// `gcd(q, |det M_1|)`
    pub gcd: BigInt,
    pub q_divides: bool,
    pub char_poly_m1: IntPolynomial,
    pub pure_power_c: Option<BigInt>,
}

/// A triple in the companion coordinates of `M_1`, together with the frame
/// relating those coordinates to the instance.
#[derive(Clone, Debug, PartialEq)]
pub struct HadamardCertificate {
    pub triple: HadamardTriple,
    pub phases: PhaseMatrix,
}

impl HadamardCertificate {
    /// Exact unitarity, plus the frame identities tying the triple to `inst`.
    pub fn verify(&self, inst: &ProblemInstance) -> bool {
        let t = &self.triple;
        let Some(frame) = &t.frame else {
            return false;
        };
        let r = t.m.rows();
        let q = inst.q() as usize;
        if t.digits.len() != q || r == 0 {
            return false;
        }
        let mut v_hat = vec![BigInt::zero(); r];
        v_hat[r - 1] = BigInt::from(1);
        let digits_ok = t
            .digits
            .iter()
            .enumerate()
            .all(|(k, d)| d.iter().zip(&v_hat).all(|(a, b)| *a == b * BigInt::from(k)));
        digits_ok
            && frame.intertwines(inst.m(), inst.v(), &t.m, &v_hat)
            && phase_matrix(&t.m, &t.digits, &t.duals).is_ok_and(|p| p == self.phases)
            && verify_hadamard(&t.m, &t.digits, &t.duals)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessCertificate {
    /// Witness for the instance itself.
    pub witness: Witness,
    /// Companion pair of `M_1` and the witness with exponent one there.
    pub companion_m: IntMatrix,
    pub companion_v: IntVector,
    pub companion_alpha: RatVector,
}

impl WitnessCertificate {
    pub fn verify(&self, inst: &ProblemInstance) -> bool {
        verify_witness(inst, &self.witness)
            && witness_holds(&self.companion_m, &self.companion_v, inst.q(), &self.companion_alpha, 1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Hadamard(Box<HadamardCertificate>),
    Witness(Box<WitnessCertificate>),
    ConditionOnly,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Hadamard(_) => "hadamard",
            Certificate::Witness(_) => "witness",
            Certificate::ConditionOnly => "condition_only",
        }
    }

    pub fn verify(&self, inst: &ProblemInstance) -> bool {
        match self {
            Certificate::Hadamard(h) => h.verify(inst),
            Certificate::Witness(w) => w.verify(inst),
            Certificate::ConditionOnly => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    pub conditions: Conditions,
    pub certificate: Certificate,
    pub rules: Vec<Rule>,
    pub reduction: Reduction,
}

/// `c` when `p = x^r + c`; every monic linear polynomial qualifies.
pub fn pure_power_form(p: &IntPolynomial) -> Option<BigInt> {
    let r = p.degree();
    if r == 0 || !p.is_monic() {
        return None;
    }
    (1..r).all(|i| p.coeff(i).is_zero()).then(|| p.coeff(0))
}

pub fn classify(inst: &ProblemInstance) -> Result<Classification> {
    let red = Reduction::new(inst.m(), inst.v())?;
    let n = inst.dim();
    let det_m1 = red.det_m1();
    let q = BigInt::from(inst.q());
    let gcd = q.gcd(&det_m1);
    let q_divides = (det_m1.abs() % &q).is_zero();
    let char_poly_m1 = red.companion.char_poly.clone();
    let pure_power_c = pure_power_form(&char_poly_m1);
    let conditions = Conditions {
        n,
        r: red.rank,
        det_m1,
        gcd: gcd.clone(),
        q_divides,
        char_poly_m1,
        pure_power_c: pure_power_c.clone(),
    };

    let mut rules = Vec::new();
    if red.rank < n {
        rules.push(Rule::DimensionReduction);
    }
    if red.rank == 1 {
        rules.push(Rule::EigenvectorCase);
    }
    let infinite = gcd > BigInt::from(1);
    let (verdict, certificate) = if q_divides {
        rules.push(Rule::HadamardTripleSufficiency);
        (Verdict::Spectral, hadamard_certificate(inst, &red)?)
    } else if infinite {
        rules.push(Rule::MaskZeroWitnessSufficiency);
        let verdict = if pure_power_c.is_some() {
            rules.push(Rule::PurePowerNecessity);
            Verdict::NotSpectralInfiniteOrthogonals
        } else {
            Verdict::InfiniteOrthogonalsSpectralityUnknown
        };
        (verdict, witness_certificate(inst, &red, &gcd)?)
    } else if pure_power_c.is_some() {
        rules.push(Rule::PurePowerNecessity);
        (Verdict::NotSpectralFinitelyMany, Certificate::ConditionOnly)
    } else {
        (Verdict::Unknown, Certificate::ConditionOnly)
    };
    rules.sort();
    Ok(Classification { verdict, conditions, certificate, rules, reduction: red })
}

fn hadamard_certificate(inst: &ProblemInstance, red: &Reduction) -> Result<Certificate> {
    let mut triple = construct_dual_digits(&red.companion, inst.q())?.with_frame(red.frame.clone());
    if !triple.verify() {
        return Err(Error::Internal("constructed dual digits do not form a Hadamard triple".into()));
    }
    let phases = phase_matrix(&triple.m, &triple.digits, &triple.duals)?;
    let cert = HadamardCertificate { triple, phases };
    if !cert.verify(inst) {
        return Err(Error::Internal("Hadamard certificate failed re-verification".into()));
    }
    Ok(Certificate::Hadamard(Box::new(cert)))
}

fn witness_certificate(inst: &ProblemInstance, red: &Reduction, s: &BigInt) -> Result<Certificate> {
    let witness = construct_witness_from(inst, red)?;
    let conj = &red.companion;
    let cert = WitnessCertificate {
        witness,
        companion_m: conj.m_tilde.clone(),
        companion_v: conj.v_tilde.clone(),
        companion_alpha: companion_witness(conj, s).alpha,
    };
    if !cert.verify(inst) {
        return Err(Error::Internal("witness certificate failed re-verification".into()));
    }
    Ok(Certificate::Witness(Box::new(cert)))
}
