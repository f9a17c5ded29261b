//! Coefficient fields: exact rationals and rational functions in `t`.

use core::fmt::{Debug, Display};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact coefficient field. The two instantiations used throughout are
/// [`Rat`] (arbitrary-precision rationals) and [`crate::ratfun::RatFun`]
/// (rational functions in `t` over the rationals).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Sized
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; `None` on zero.
    fn inv(&self) -> Option<Self>;
    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        debug_assert!(den != 0);
        Self::from_int(num) * Self::from_int(den).inv().expect("nonzero denominator")
    }

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero")
    }
}

/// Exact arbitrary-precision rational scalar. `num_rational` keeps values
/// reduced with a positive denominator, which is exactly the canonical form
/// required here.
pub type Rat = BigRational;

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// `n!` as a rational, for convolution exponential/logarithm coefficients.
pub fn factorial<S: Field>(n: usize) -> S {
    let mut acc = S::one();
    for k in 1..=n {
        acc = acc * S::from_int(k as i64);
    }
    acc
}

/// Binomial coefficient as a `BigRational` (used by the Bernoulli recurrence).
pub fn binomial(n: usize, k: usize) -> BigRational {
    if k > n {
        return Zero::zero();
    }
    let mut acc: BigRational = One::one();
    for j in 0..k {
        acc = acc * BigRational::from_integer(BigInt::from((n - j) as i64))
            / BigRational::from_integer(BigInt::from((j + 1) as i64));
    }
    acc
}

/// True when the rational is negative (printing helper).
pub fn rat_is_negative(r: &BigRational) -> bool {
    r.is_negative()
}
