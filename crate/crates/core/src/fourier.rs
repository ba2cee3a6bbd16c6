//! The mask `m_D(xi) = (1/q) sum_k exp(2 pi i k <v, xi>)`, the product
//! `mu^(xi) = prod_{j >= 1} m_D(M*^{-j} xi)`, exact zero tests, orthogonality
//! certificates and infinite-orthogonality witnesses.
//!
//! Only `<v, .>` enters the mask, so factor `j` depends on
//! `t_j = <M*^{-j} xi, v> = <xi, w_j>` with `w_j = M^{-j} v`.

use std::f64::consts::PI;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::conjugation::{CompanionConjugation, Reduction};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::linalg::{inverse, Matrix};
use crate::rational::{
    common_denominator, frac, frac_vector, int_mat_rat_vec, int_rat_dot, is_integral, rat_dot,
    sub, sup_norm_upper, sup_operator_norm, to_rational,
};
use crate::{Frequency, IntMatrix, RatMatrix, RatVector};

/// Whether the mask of `{0, ..., q-1}` vanishes at inner product `t`:
/// `t mod 1` is a nonzero multiple of `1/q`.
pub fn phase_is_mask_zero(q: u64, t: &BigRational) -> bool {
    let f = frac(t);
    !f.is_zero() && (f * BigInt::from(q)).is_integer()
}

/// `(1/q) sum_{k<q} exp(2 pi i k t)` in floating point.
pub fn mask_at_phase(q: u64, t: f64) -> Complex64 {
    let t = t - t.floor();
    let sum: Complex64 = (0..q)
        .map(|k| {
            let a = k as f64 * t;
            Complex64::from_polar(1.0, 2.0 * PI * (a - a.floor()))
        })
        .sum();
    sum / q as f64
}

fn phase_to_f64(t: &BigRational) -> f64 {
    frac(t).to_f64().unwrap_or(0.0)
}

pub fn mask(inst: &ProblemInstance, xi: &[BigRational]) -> Complex64 {
    mask_at_phase(inst.q(), phase_to_f64(&int_rat_dot(inst.v(), xi)))
}

pub fn mask_is_zero_exact(inst: &ProblemInstance, xi: &[BigRational]) -> bool {
    phase_is_mask_zero(inst.q(), &int_rat_dot(inst.v(), xi))
}

/// Truncated product with a certified bound on `|value - mu^(xi)|`.
#[derive(Clone, Debug, PartialEq)]
pub struct MuHat {
    pub value: Complex64,
    pub error_bound: f64,
    /// Number of mask factors multiplied.
    pub factors: usize,
    /// Index `j` of an exactly vanishing factor, in which case `value` is 0.
    pub zero_factor: Option<usize>,
}

impl MuHat {
    pub fn norm(&self) -> f64 {
        self.value.norm()
    }
}

/// `theta = ||M^{-K}||_inf < 1`, the first such `K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Contraction {
    pub k: usize,
    pub theta: BigRational,
    /// A lower bound for `1 - theta` in floating point.
    pub gap: f64,
}

pub fn contraction(m_inv: &RatMatrix, max_power: usize) -> Result<Contraction> {
    let mut p = m_inv.clone();
    for k in 1..=max_power {
        let theta = sup_operator_norm(&p);
        if theta < BigRational::one() {
            let gap = (BigRational::one() - &theta).to_f64().unwrap_or(0.0) * (1.0 - 1e-12);
            if gap > 0.0 {
                return Ok(Contraction { k, theta, gap });
            }
        }
        p = &p * m_inv;
    }
    Err(Error::NonConvergent(max_power))
}

const MAX_FACTORS: usize = 100_000;

#[derive(Default)]
struct Cache {
    /// `w[j] = M^{-j} v`
    w: Vec<RatVector>,
    /// Upper bounds for `||w[j]||_inf`.
    norms: Vec<f64>,
}

/// Per-instance state for repeated transform evaluations and certificates.
/// The sequence `w_j` is extended on demand and shared between threads.
pub struct FourierEvaluator {
    q: u64,
    n: usize,
    m_inv: RatMatrix,
    contraction: Result<Contraction>,
    cache: RwLock<Cache>,
}

impl FourierEvaluator {
    pub fn new(inst: &ProblemInstance) -> Result<Self> {
        let n = inst.dim();
        let m_inv = inverse(inst.m())?;
        let contraction = contraction(&m_inv, 10 * n);
        let v = to_rational(inst.v());
        let cache = Cache { norms: vec![sup_norm_upper(&v)], w: vec![v] };
        Ok(FourierEvaluator { q: inst.q(), n, m_inv, contraction, cache: RwLock::new(cache) })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn ensure(&self, j: usize) {
        if self.cache.read().expect("cache poisoned").w.len() > j {
            return;
        }
        let mut c = self.cache.write().expect("cache poisoned");
        while c.w.len() <= j {
            let next = self.m_inv.mul_vec(c.w.last().expect("w_0 present"));
            c.norms.push(sup_norm_upper(&next));
            c.w.push(next);
        }
    }

    /// `t_j = <M*^{-j} xi, v>`
    pub fn phase(&self, j: usize, xi: &[BigRational]) -> BigRational {
        self.ensure(j);
        rat_dot(&self.cache.read().expect("cache poisoned").w[j], xi)
    }

    fn norm_sum(&self, from: usize, to: usize) -> f64 {
        self.ensure(to);
        self.cache.read().expect("cache poisoned").norms[from..=to].iter().sum()
    }

    /// First `j <= j_max` whose factor vanishes exactly at `xi`.
    pub fn zero_factor(&self, xi: &[BigRational], j_max: usize) -> Option<usize> {
        (1..=j_max).find(|&j| phase_is_mask_zero(self.q, &self.phase(j, xi)))
    }

    /// Truncates once the certified tail error drops below `tail_eps`.
    ///
    /// Every factor obeys `|m(eta) - 1| <= pi (q-1) |<v, eta>|`, the tail
    /// phases are bounded through `||w_j||_inf` and the contraction
    /// `||w_{j+K}||_inf <= theta ||w_j||_inf`, and
    /// `|prod (1 + d_j) - 1| <= exp(sum |d_j|) - 1`.
    pub fn mu_hat(&self, xi: &[BigRational], tail_eps: f64) -> Result<MuHat> {
        if xi.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "frequency of length {} in dimension {}",
                xi.len(),
                self.n
            )));
        }
        let c = self.contraction.as_ref().map_err(Clone::clone)?;
        let l1: f64 = xi.iter().map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>() * (1.0 + 1e-12);
        if l1 == 0.0 {
            return Ok(MuHat { value: Complex64::new(1.0, 0.0), error_bound: 0.0, factors: 0, zero_factor: None });
        }
        let scale = PI * (self.q - 1) as f64 * l1 / c.gap;
        let mut value = Complex64::new(1.0, 0.0);
        let mut j = 0;
        let tail = loop {
            j += 1;
            if j > MAX_FACTORS {
                return Err(Error::NonConvergent(MAX_FACTORS));
            }
            let t = self.phase(j, xi);
            if phase_is_mask_zero(self.q, &t) {
                return Ok(MuHat { value: Complex64::new(0.0, 0.0), error_bound: 0.0, factors: j, zero_factor: Some(j) });
            }
            value *= mask_at_phase(self.q, phase_to_f64(&t));
            let tail = (scale * self.norm_sum(j + 1, j + c.k)).exp_m1();
            if tail < tail_eps {
                break tail;
            }
        };
        // each factor carries a few ulps from q terms of cos/sin and the division
        let rounding = j as f64 * (self.q as f64 + 4.0) * 4.0 * f64::EPSILON;
        Ok(MuHat { value, error_bound: tail + rounding, factors: j, zero_factor: None })
    }

    pub fn certify(&self, a: &[BigRational], b: &[BigRational], j_max: usize) -> Option<OrthogonalityCertificate> {
        if a == b || a.len() != self.n || b.len() != self.n {
            return None;
        }
        let delta = sub(a, b);
        self.zero_factor(&delta, j_max)
            .map(|j| OrthogonalityCertificate { pair: (a.to_vec(), b.to_vec()), j })
    }

    /// Certifies every pair `(a, b)` with `a < b` by index, in parallel.
    pub fn certify_set(&self, freqs: &[Frequency], j_max: usize) -> SetCertification {
        let pairs: Vec<(usize, usize)> = (0..freqs.len())
            .flat_map(|a| (a + 1..freqs.len()).map(move |b| (a, b)))
            .collect();
        let found: Vec<Option<usize>> = pairs
            .par_iter()
            .map(|&(a, b)| self.zero_factor(&sub(&freqs[a], &freqs[b]), j_max))
            .collect();
        let mut certified = Vec::new();
        let mut uncertified = Vec::new();
        for (&(a, b), j) in pairs.iter().zip(found) {
            match j {
                Some(j) => certified.push((a, b, j)),
                None => uncertified.push((a, b)),
            }
        }
        SetCertification { certified, uncertified }
    }
}

pub fn mu_hat(inst: &ProblemInstance, xi: &[BigRational], tail_eps: f64) -> Result<MuHat> {
    FourierEvaluator::new(inst)?.mu_hat(xi, tail_eps)
}

/// `m_D(M*^{-j} (lambda_1 - lambda_2)) = 0` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityCertificate {
    pub pair: (Frequency, Frequency),
    pub j: usize,
}

impl OrthogonalityCertificate {
    pub fn verify(&self, inst: &ProblemInstance) -> bool {
        let Ok(eval) = FourierEvaluator::new(inst) else {
            return false;
        };
        let (a, b) = &self.pair;
        self.j >= 1
            && a.len() == inst.dim()
            && b.len() == inst.dim()
            && phase_is_mask_zero(inst.q(), &eval.phase(self.j, &sub(a, b)))
    }
}

/// Index pairs `(a, b, j)` with a certificate at level `j`, and the pairs left
/// uncertified. Uncertified does not mean non-orthogonal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SetCertification {
    pub certified: Vec<(usize, usize, usize)>,
    pub uncertified: Vec<(usize, usize)>,
}

impl SetCertification {
    pub fn all_certified(&self) -> bool {
        self.uncertified.is_empty()
    }

    pub fn max_j(&self) -> usize {
        self.certified.iter().map(|c| c.2).max().unwrap_or(0)
    }
}

pub fn certify_orthogonal(
    inst: &ProblemInstance,
    lambda1: &[BigRational],
    lambda2: &[BigRational],
    j_max: usize,
) -> Option<OrthogonalityCertificate> {
    FourierEvaluator::new(inst).ok()?.certify(lambda1, lambda2, j_max)
}

/// `3n + ceil(log2 max(|numerator| * denominator))` over the given frequencies.
pub fn default_j_max(n: usize, freqs: &[&[BigRational]]) -> usize {
    let size = freqs
        .iter()
        .flat_map(|f| f.iter())
        .map(|x| x.numer().abs() * x.denom())
        .max()
        .unwrap_or_else(BigInt::zero);
    let log = if size <= BigInt::one() {
        0
    } else {
        (size - 1u32).bits() as usize
    };
    3 * n + log
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessOrigin {
    /// Built directly in companion coordinates.
    Companion,
    /// Companion witness carried back to the original coordinates.
    Mapped,
    /// Found by solving for an integral `M*^l alpha` on the lattice.
    LatticeSearch,
}

impl WitnessOrigin {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessOrigin::Companion => "companion",
            WitnessOrigin::Mapped => "mapped",
            WitnessOrigin::LatticeSearch => "lattice_search",
        }
    }
}

/// A mask zero `alpha` with `M*^ell alpha` integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub alpha: Frequency,
    pub ell: usize,
    pub origin: WitnessOrigin,
}

pub fn witness_holds(m: &IntMatrix, v: &[BigInt], q: u64, alpha: &[BigRational], ell: usize) -> bool {
    if ell == 0 || alpha.len() != v.len() || m.rows() != v.len() || !m.is_square() {
        return false;
    }
    if !phase_is_mask_zero(q, &int_rat_dot(v, alpha)) {
        return false;
    }
    let mt = m.transpose();
    let mut x = alpha.to_vec();
    for _ in 0..ell {
        x = int_mat_rat_vec(&mt, &x);
    }
    is_integral(&x)
}

pub fn verify_witness(inst: &ProblemInstance, w: &Witness) -> bool {
    witness_holds(inst.m(), inst.v(), inst.q(), &w.alpha, w.ell)
}

/// `alpha = (0, ..., 0, 1/s)` with `ell = 1` for the companion pair; valid
/// whenever `s > 1` divides both `q` and the constant term.
pub fn companion_witness(conj: &CompanionConjugation, s: &BigInt) -> Witness {
    let r = conj.m_tilde.rows();
    let mut alpha = vec![BigRational::zero(); r];
    alpha[r - 1] = BigRational::new(BigInt::one(), s.clone());
    Witness { alpha, ell: 1, origin: WitnessOrigin::Companion }
}

fn witness_search_bound(n: usize) -> usize {
    8 * n + 64
}

pub fn construct_witness(inst: &ProblemInstance) -> Result<Witness> {
    let red = Reduction::new(inst.m(), inst.v())?;
    construct_witness_from(inst, &red)
}

/// Same as [`construct_witness`] with the reduction supplied by the caller.
pub fn construct_witness_from(inst: &ProblemInstance, red: &Reduction) -> Result<Witness> {
    let s = BigInt::from(inst.q()).gcd(&red.det_m1());
    if s.is_one() {
        return Err(Error::GcdOne);
    }
    let conj = &red.companion;
    let companion = companion_witness(conj, &s);
    if !witness_holds(&conj.m_tilde, &conj.v_tilde, inst.q(), &companion.alpha, 1) {
        return Err(Error::Internal("companion witness failed its own check".into()));
    }
    let bound = witness_search_bound(inst.dim());
    let alpha = frac_vector(&red.frame.to_original(&companion.alpha));
    if let Some(ell) = integral_after(inst.m(), &alpha, bound) {
        if witness_holds(inst.m(), inst.v(), inst.q(), &alpha, ell) {
            return Ok(Witness { alpha, ell, origin: WitnessOrigin::Mapped });
        }
    }
    lattice_witness(inst, bound)
        .ok_or_else(|| Error::Internal(format!("no witness with ell <= {bound}")))
}

/// Smallest `l <= bound` with `M*^l x` integral. A prime of the denominator
/// that does not divide `det M` can never cancel, since `M*` is invertible
/// modulo that prime.
fn integral_after(m: &IntMatrix, x: &[BigRational], bound: usize) -> Option<usize> {
    let d = crate::linalg::det(m);
    let mut rest = common_denominator(x);
    loop {
        let g = rest.gcd(&d);
        if g.is_one() {
            break;
        }
        while (&rest % &g).is_zero() {
            rest /= &g;
        }
    }
    if !rest.is_one() {
        return None;
    }
    let mt = m.transpose();
    let mut y = x.to_vec();
    for ell in 1..=bound {
        y = int_mat_rat_vec(&mt, &y);
        if is_integral(&y) {
            return Some(ell);
        }
    }
    None
}

/// Solves `<M^{-l} v, z> = 1/g mod 1` over integral `z`, where `g > 1` is the
/// common factor of `q` and the denominator `L` of `M^{-l} v`; then
/// `alpha = M*^{-l} z` is a witness with exponent `l`.
fn lattice_witness(inst: &ProblemInstance, bound: usize) -> Option<Witness> {
    let m_inv = inverse(inst.m()).ok()?;
    let m_inv_t = m_inv.transpose();
    let q = BigInt::from(inst.q());
    let mut y = to_rational(inst.v());
    let mut back: RatMatrix = Matrix::identity(inst.dim());
    for ell in 1..=bound {
        y = m_inv.mul_vec(&y);
        back = &back * &m_inv_t;
        let l = common_denominator(&y);
        let g = l.gcd(&q);
        if g.is_one() {
            continue;
        }
        let u: Vec<BigInt> = y.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let (d, coeffs) = bezout(&u);
        // gcd(u, L) = 1 by construction of L
        let inv = mod_inverse(&d, &l)?;
        let scale = (&l / &g) * inv;
        let z: RatVector = coeffs
            .iter()
            .map(|c| BigRational::from_integer((c * &scale).mod_floor(&l)))
            .collect();
        let alpha = frac_vector(&back.mul_vec(&z));
        if witness_holds(inst.m(), inst.v(), inst.q(), &alpha, ell) {
            return Some(Witness { alpha, ell, origin: WitnessOrigin::LatticeSearch });
        }
    }
    None
}

/// `gcd(u)` and integer coefficients `c` with `sum c_i u_i = gcd(u)`.
fn bezout(u: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(u.len());
    for x in u {
        let e = g.extended_gcd(x);
        for c in &mut coeffs {
            *c *= &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    (g, coeffs)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// `{0} ∪ {M*^{k ell} alpha : 1 <= k < count}`. The pair `(k, m)` with
/// `k > m >= 1` is certified at level `m ell`, and `(k, 0)` at `k ell`.
pub fn orthogonal_family(m: &IntMatrix, w: &Witness, count: usize) -> Vec<Frequency> {
    let step = m.transpose().pow(w.ell as u32);
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(vec![BigRational::zero(); w.alpha.len()]);
    let mut x = w.alpha.clone();
    for _ in 1..count {
        x = int_mat_rat_vec(&step, &x);
        out.push(x.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugation::companion_conjugate;
    use crate::rational::{int_matrix, int_vector, rat};

    fn inst(m: &[&[i64]], v: &[i64], q: u64) -> ProblemInstance {
        ProblemInstance::new(int_matrix(m), int_vector(v), q).unwrap()
    }

    fn cubic(q: u64) -> ProblemInstance {
        inst(&[&[2, 6, 4], &[-1, 2, 2], &[-1, -1, -4]], &[0, 0, 1], q)
    }

    fn eigen(q: u64) -> ProblemInstance {
        inst(&[&[1, -3, 3], &[3, -5, 3], &[6, -6, 4]], &[1, 1, 2], q)
    }

    fn r(xs: &[(i64, i64)]) -> RatVector {
        xs.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn mask_values() {
        let two = inst(&[&[2]], &[1], 2);
        assert!((mask(&two, &r(&[(0, 1)])) - 1.0).norm() < 1e-15);
        assert!(mask(&two, &r(&[(1, 2)])).norm() < 1e-15);
        let six = inst(&[&[7]], &[1], 6);
        assert!(mask(&six, &r(&[(1, 6)])).norm() < 1e-15);
    }

    #[test]
    fn exact_mask_zeros() {
        let companion = inst(&[&[0, 1, 0], &[0, 0, 1], &[-36, 0, 0]], &[0, 0, 1], 6);
        assert!(mask_is_zero_exact(&companion, &r(&[(3, 10), (7, 1), (1, 6)])));
        assert!(mask_is_zero_exact(&companion, &r(&[(3, 10), (7, 1), (1, 2)])));
        assert!(!mask_is_zero_exact(&companion, &r(&[(3, 10), (7, 1), (2, 1)])));
    }

    #[test]
    fn transform_values() {
        let two = inst(&[&[2]], &[1], 2);
        let z = mu_hat(&two, &r(&[(0, 1)]), 1e-9).unwrap();
        assert_eq!((z.value, z.error_bound), (Complex64::new(1.0, 0.0), 0.0));
        let z = mu_hat(&two, &r(&[(1, 1)]), 1e-9).unwrap();
        assert_eq!((z.value.norm(), z.zero_factor), (0.0, Some(1)));
        // Lebesgue measure on [0, 1]: |mu^(1/2)| = |sin(pi/2) / (pi/2)|
        let z = mu_hat(&two, &r(&[(1, 2)]), 1e-9).unwrap();
        assert!((z.norm() - 2.0 / PI).abs() < 1e-6);
        assert!(z.error_bound < 1e-8);
    }

    #[test]
    fn lebesgue_transform_matches_closed_form() {
        let two = inst(&[&[2]], &[1], 2);
        for (a, b) in [(1, 3), (5, 7), (-9, 4), (13, 10)] {
            let xi = a as f64 / b as f64;
            let z = mu_hat(&two, &r(&[(a, b)]), 1e-10).unwrap();
            let exact = Complex64::from_polar(1.0, PI * xi) * ((PI * xi).sin() / (PI * xi));
            assert!((z.value - exact).norm() <= z.error_bound + 1e-12);
        }
    }

    #[test]
    fn orthogonality_certificates() {
        let four = inst(&[&[4]], &[1], 2);
        let c = certify_orthogonal(&four, &r(&[(0, 1)]), &r(&[(2, 1)]), 5).unwrap();
        assert_eq!(c.j, 1);
        assert!(c.verify(&four));
        assert!(certify_orthogonal(&four, &r(&[(0, 1)]), &r(&[(1, 1)]), 20).is_none());
        assert!(certify_orthogonal(&four, &r(&[(2, 1)]), &r(&[(2, 1)]), 20).is_none());
    }

    #[test]
    fn j_max_default() {
        let a = r(&[(0, 1)]);
        let b = r(&[(5, 2)]);
        assert_eq!(default_j_max(1, &[&a, &b]), 3 + 4);
        assert_eq!(default_j_max(2, &[&a]), 6);
    }

    #[test]
    fn witnesses() {
        let c = companion_conjugate(&int_matrix(&[&[0, 1, 0], &[0, 0, 1], &[-36, 0, 0]]), &int_vector(&[0, 0, 1])).unwrap();
        let w = companion_witness(&c, &BigInt::from(6));
        assert_eq!(w.alpha, r(&[(0, 1), (0, 1), (1, 6)]));
        assert_eq!(int_mat_rat_vec(&c.m_tilde.transpose(), &w.alpha), to_rational(&int_vector(&[-6, 0, 0])));

        for i in [cubic(6), inst(&[&[4]], &[1], 2), eigen(6)] {
            let w = construct_witness(&i).unwrap();
            assert!(verify_witness(&i, &w), "{w:?}");
        }
        let w = construct_witness(&inst(&[&[4]], &[1], 2)).unwrap();
        assert_eq!((w.alpha, w.ell), (r(&[(1, 2)]), 1));
        let w = construct_witness(&eigen(6)).unwrap();
        assert_eq!((w.alpha.clone(), w.ell, w.origin), (r(&[(1, 2), (0, 1), (0, 1)]), 2, WitnessOrigin::Mapped));
        // B^{-T} e_3 keeps a denominator of 5 under every power of M*
        assert_eq!(construct_witness(&cubic(6)).unwrap().origin, WitnessOrigin::LatticeSearch);
        assert_eq!(construct_witness(&cubic(5)), Err(Error::GcdOne));
    }

    #[test]
    fn rejected_witnesses() {
        let three = inst(&[&[3]], &[1], 2);
        let w = Witness { alpha: r(&[(1, 2)]), ell: 1, origin: WitnessOrigin::Mapped };
        assert!(!verify_witness(&three, &w));
        let w = Witness { alpha: r(&[(0, 1), (1, 1), (2, 1)]), ell: 1, origin: WitnessOrigin::Mapped };
        assert!(!verify_witness(&cubic(6), &w));
    }

    #[test]
    fn lattice_search_finds_witness_where_mapping_stalls() {
        let i = cubic(6);
        let w = lattice_witness(&i, witness_search_bound(3)).unwrap();
        assert!(verify_witness(&i, &w));
    }

    #[test]
    fn witness_family_is_orthogonal() {
        for i in [cubic(6), inst(&[&[4]], &[1], 2), eigen(6), cubic(4)] {
            let w = construct_witness(&i).unwrap();
            let fam = orthogonal_family(i.m(), &w, 20);
            let eval = FourierEvaluator::new(&i).unwrap();
            let cert = eval.certify_set(&fam, 20 * w.ell + 1);
            assert!(cert.all_certified(), "{:?}", cert.uncertified);
            assert_eq!(cert.certified.len(), 190);
        }
    }

    #[test]
    fn bezout_coefficients() {
        let u = int_vector(&[6, 10, 15]);
        let (g, c) = bezout(&u);
        assert_eq!(g, BigInt::one());
        let s: BigInt = u.iter().zip(&c).map(|(a, b)| a * b).sum();
        assert_eq!(s, BigInt::one());
    }
}
