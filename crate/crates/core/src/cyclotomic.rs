//! Exact vanishing test for sums of roots of unity.
//!
//! `sum_k zeta_L^{e_k} = 0` iff `Phi_L` divides `sum_k x^{e_k}` in `Z[x]`,
//! because `Phi_L` is the minimal polynomial of a primitive `L`-th root.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::frac;
use crate::IntPolynomial;

fn cache() -> &'static Mutex<HashMap<usize, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Phi_n`, from `x^n - 1` divided by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: usize) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    let mut p = IntPolynomial::x_pow_minus_one(n);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.div_exact_monic(&cyclotomic_polynomial(d));
    }
    cache()
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(n, p.clone());
    p
}

/// Whether `sum_k exp(2 pi i e_k / l)` is exactly zero.
pub fn root_of_unity_sum_vanishes(exponents: &[usize], l: usize) -> bool {
    assert!(l >= 1, "root-of-unity order must be positive");
    let mut coeffs = vec![BigInt::zero(); l];
    for &e in exponents {
        coeffs[e % l] += 1;
    }
    IntPolynomial::new(coeffs)
        .rem_monic(&cyclotomic_polynomial(l))
        .is_zero()
}

/// Whether `sum_k exp(2 pi i theta_k)` is exactly zero for rational phases.
/// Returns `None` when the common denominator does not fit in `usize`.
pub fn phase_sum_vanishes(phases: &[BigRational]) -> Option<bool> {
    let reduced: Vec<BigRational> = phases.iter().map(frac).collect();
    let l = reduced.iter().fold(BigInt::one(), |l, t| l.lcm(t.denom()));
    let l_usize = l.to_usize()?;
    let exponents = reduced
        .iter()
        .map(|t| (t.numer() * (&l / t.denom())).to_usize())
        .collect::<Option<Vec<_>>>()?;
    Some(root_of_unity_sum_vanishes(&exponents, l_usize))
}
