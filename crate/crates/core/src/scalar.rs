//! Exact scalar fields.
//!
//! Every routine in the crate is generic over [`Field`]. The default scalar is
//! [`Rational`], an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator after every operation. Fixed-width ratios such as
//! `Ratio<i64>` also satisfy the trait and are handy for small experiments,
//! but they can overflow on large elimination problems.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// A field with exact equality.
///
/// Zero tests drive rank and kernel computations, so implementations must be
/// exact. Floating-point types deliberately do not implement this trait.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(value: i64) -> Self;

    fn half() -> Self {
        Self::one() / Self::from_i64(2)
    }

    fn quarter() -> Self {
        Self::one() / Self::from_i64(4)
    }

    /// `(-1)^exponent`.
    fn sign(exponent: usize) -> Self {
        if exponent.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl Field for BigRational {
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }
}

impl Field for Ratio<i64> {
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(value)
    }
}

impl Field for Ratio<i128> {
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(value as i128)
    }
}

/// Shorthand for building a scalar from a fraction of small integers.
pub fn frac<F: Field>(numer: i64, denom: i64) -> F {
    assert!(denom != 0, "zero denominator");
    F::from_i64(numer) / F::from_i64(denom)
}

/// `acc += a * b`, skipping the multiplication when either factor is zero.
#[inline]
pub(crate) fn mul_acc<F: Field>(acc: &mut F, a: &F, b: &F) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    *acc += &(a.clone() * b);
}

/// `dst += factor * src`, entry by entry.
pub(crate) fn axpy<F: Field>(dst: &mut [F], factor: &F, src: &[F]) {
    debug_assert_eq!(dst.len(), src.len());
    if factor.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        mul_acc(d, factor, s);
    }
}

pub(crate) fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn zero_vec<F: Field>(len: usize) -> Vec<F> {
    vec![F::zero(); len]
}

pub(crate) fn unit_vec<F: Field>(len: usize, index: usize) -> Vec<F> {
    let mut v = zero_vec(len);
    v[index] = F::one();
    v
}

pub(crate) fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y).collect()
}

pub(crate) fn scale_vec<F: Field>(factor: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| x.clone() * factor).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonical() {
        let a: Rational = frac(2, 4);
        let b: Rational = frac(-3, -6);
        assert_eq!(a, b);
        assert_eq!(a.numer(), &BigInt::from(1));
        assert_eq!(a.denom(), &BigInt::from(2));
        let c: Rational = frac(3, -9);
        assert_eq!(c.numer(), &BigInt::from(-1));
        assert_eq!(c.denom(), &BigInt::from(3));
    }

    #[test]
    fn sign_alternates() {
        assert_eq!(Rational::sign(0), Rational::one());
        assert_eq!(Rational::sign(3), -Rational::one());
        assert_eq!(Rational::half() + Rational::half(), Rational::one());
    }

    #[test]
    fn fixed_width_ratio_is_a_field() {
        let q: Ratio<i64> = frac(1, 4);
        assert_eq!(q * Ratio::from_integer(4), Ratio::one());
    }
}
