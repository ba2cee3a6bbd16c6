//! Scalar traits the exact linear algebra is generic over.
//!
//! [`Ring`] is anything with exact `+ - *` and exact division whenever the
//! quotient is known to lie in the ring (integers under Bareiss, or any
//! field). [`IntScalar`] adds Euclidean structure for the integer-only
//! routines (echelon forms, gcds, the stability test).

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

pub trait Ring: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Ring for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

pub trait IntScalar: Ring + Integer + Signed + ToPrimitive + Display {}

impl<T> IntScalar for T where T: Ring + Integer + Signed + ToPrimitive + Display {}

/// Field of fractions of an integer scalar.
pub type Frac<T> = Ratio<T>;

pub(crate) fn to_frac<T: IntScalar>(x: &T) -> Frac<T> {
    Ratio::from_integer(x.clone())
}
