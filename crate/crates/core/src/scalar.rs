//! Scalar backends.
//!
//! [`Ring`] is what the tensor pipeline needs (it is also implemented by
//! [`crate::Poly`]); [`Field`] adds division for inverses and basis
//! changes; [`Scalar`] adds the ordering needed for positivity checks and
//! max-abs residual norms.

use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn half() -> Self {
        Self::from_rational(&rat(1, 2))
    }
}

pub trait Field: Ring + Div<Output = Self> {
    /// Square root inside the field, if there is one.
    fn sqrt(&self) -> Option<Self>;

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

pub trait Scalar: Field + PartialOrd {
    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn to_f64(&self) -> f64;

    /// Zero test used by residual reports: literal for exact types.
    fn is_negligible(&self, tol: f64) -> bool;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl Field for Rational {
    fn sqrt(&self) -> Option<Self> {
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Rational::new(n, d))
    }
}

impl Scalar for Rational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_negligible(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }
}

impl Field for f64 {
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(sqrt_f64(*self))
        }
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_negligible(&self, tol: f64) -> bool {
        Scalar::abs(self) <= tol
    }
}

// core has no f64::sqrt; Newton from a bit-level guess converges in a few steps.
fn sqrt_f64(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let mut y = f64::from_bits((x.to_bits() >> 1) + (1023u64 << 51));
    for _ in 0..6 {
        y = 0.5 * (y + x / y);
    }
    y
}

/// Largest absolute value, zero for an empty iterator.
pub fn max_abs<'a, T: Scalar + 'a>(it: impl IntoIterator<Item = &'a T>) -> T {
    it.into_iter()
        .map(Scalar::abs)
        .fold(T::zero(), |m, x| if x > m { x } else { m })
}
