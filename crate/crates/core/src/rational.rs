//! Small helpers on exact rational vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{IntMatrix, IntVector, RatMatrix, RatVector};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_vector(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| int_vector(r)).collect()).expect("rectangular rows")
}

pub fn to_rational(v: &[BigInt]) -> RatVector {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub fn is_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn to_integral(v: &[BigRational]) -> Option<IntVector> {
    is_integral(v).then(|| v.iter().map(|x| x.to_integer()).collect())
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

pub fn frac_vector(v: &[BigRational]) -> RatVector {
    v.iter().map(frac).collect()
}

pub fn rat_dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn int_rat_dot(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + y * x)
}

pub fn int_mat_rat_vec(m: &IntMatrix, v: &[BigRational]) -> RatVector {
    (0..m.rows()).map(|i| int_rat_dot(m.row(i), v)).collect()
}

pub fn rat_mat_vec(m: &RatMatrix, v: &[BigRational]) -> RatVector {
    m.mul_vec(v)
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Least common multiple of the (reduced) denominators.
pub fn common_denominator(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Sup norm rounded to `f64`, nudged upward so it bounds the exact value.
pub fn sup_norm_upper(v: &[BigRational]) -> f64 {
    let m = v
        .iter()
        .map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max);
    m * (1.0 + 1e-12)
}

/// Exact `max_i sum_j |m_ij|`.
pub fn sup_operator_norm(m: &RatMatrix) -> BigRational {
    (0..m.rows())
        .map(|i| m.row(i).iter().fold(BigRational::zero(), |s, x| s + x.abs()))
        .max()
        .unwrap_or_else(BigRational::zero)
}

pub fn rat_to_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractional_part_of_negatives() {
        assert_eq!(frac(&rat(-1, 3)), rat(2, 3));
        assert_eq!(frac(&rat(7, 2)), rat(1, 2));
        assert_eq!(frac(&rat(-4, 1)), rat(0, 1));
    }

    #[test]
    fn denominators() {
        assert_eq!(common_denominator(&[rat(1, 4), rat(5, 6), rat(3, 1)]), BigInt::from(12));
        assert_eq!(rat_to_string(&rat(-6, 4)), "-3/2");
        assert_eq!(rat_to_string(&rat(8, 4)), "2");
    }
}
