//! Numbers `re + im·√d` over the rationals for one fixed non-square `d`.
//!
//! Orthonormalising a basis over Q usually needs a single square root;
//! this type keeps such computations exact. Mixing two different
//! radicands in one expression is a logic error and panics.

use core::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::{Field, Rational, Ring};

#[derive(Clone, Debug)]
pub struct Surd {
    re: Rational,
    im: Rational,
    radicand: Option<Rational>,
}

impl Surd {
    pub fn rational(q: Rational) -> Self {
        Surd { re: q, im: Ring::zero(), radicand: None }
    }

    /// `√d`, collapsed to a rational when `d` is a perfect square.
    pub fn sqrt_of(d: &Rational) -> Self {
        match Field::sqrt(d) {
            Some(r) => Surd::rational(r),
            None => Surd { re: Ring::zero(), im: Ring::one(), radicand: Some(d.clone()) },
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn radicand(&self) -> Option<&Rational> {
        self.radicand.as_ref()
    }

    /// The value as a rational, when the irrational part vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.im.is_zero() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    fn build(re: Rational, im: Rational, radicand: Option<Rational>) -> Self {
        if im.is_zero() {
            Surd { re, im, radicand: None }
        } else {
            Surd { re, im, radicand }
        }
    }

    fn joint(&self, other: &Self) -> Option<Rational> {
        match (&self.radicand, &other.radicand) {
            (Some(a), Some(b)) => {
                assert!(a == b, "Surd arithmetic mixes radicands {a} and {b}");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn conj(&self) -> Self {
        Surd::build(self.re.clone(), -self.im.clone(), self.radicand.clone())
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im && (self.im.is_zero() || self.radicand == other.radicand)
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, rhs: Surd) -> Surd {
        let d = self.joint(&rhs);
        Surd::build(self.re + rhs.re, self.im + rhs.im, d)
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        let d = self.joint(&rhs);
        Surd::build(self.re - rhs.re, self.im - rhs.im, d)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd::build(-self.re, -self.im, self.radicand)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        let d = self.joint(&rhs);
        let dd = d.clone().unwrap_or_else(Ring::zero);
        let re = self.re.clone() * rhs.re.clone() + self.im.clone() * rhs.im.clone() * dd;
        let im = self.re * rhs.im + self.im * rhs.re;
        Surd::build(re, im, d)
    }
}

impl Div for Surd {
    type Output = Surd;
    fn div(self, rhs: Surd) -> Surd {
        let d = self.joint(&rhs).unwrap_or_else(Ring::zero);
        let norm = rhs.re.clone() * rhs.re.clone() - rhs.im.clone() * rhs.im.clone() * d;
        assert!(!norm.is_zero(), "Surd division by zero");
        let num = self * rhs.conj();
        let radicand = num.radicand.clone();
        Surd::build(num.re / norm.clone(), num.im / norm, radicand)
    }
}

impl Ring for Surd {
    fn zero() -> Self {
        Surd::rational(Ring::zero())
    }
    fn one() -> Self {
        Surd::rational(Ring::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_rational(q: &Rational) -> Self {
        Surd::rational(q.clone())
    }
}

impl Field for Surd {
    fn sqrt(&self) -> Option<Self> {
        self.to_rational().map(|q| Surd::sqrt_of(&q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn sqrt_two_squares_to_two() {
        let r = Surd::sqrt_of(&rat(2, 1));
        assert_eq!(r.clone() * r, Surd::rational(rat(2, 1)));
    }

    #[test]
    fn perfect_square_collapses() {
        assert_eq!(Surd::sqrt_of(&rat(25, 4)).to_rational(), Some(rat(5, 2)));
    }

    #[test]
    fn division_inverts_multiplication() {
        let r = Surd::sqrt_of(&rat(5, 1));
        let x = Surd::rational(rat(3, 1)) + r.clone() * Surd::rational(rat(1, 2));
        let y = Surd::rational(rat(-1, 3)) + r;
        assert_eq!((x.clone() * y.clone()) / y, x);
    }
}
