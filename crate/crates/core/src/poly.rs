//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by monomial, so the representation is
//! canonical: two polynomials are equal iff their maps are equal, and no
//! stored coefficient is zero.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::scalar::{Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u16);

/// Sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u16)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| u32::from(e)).sum()
    }

    pub fn factors(&self) -> &[(Var, u16)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: Vec<(Var, u16)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn constant(q: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::one(), q);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::var(v), Ring::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::default();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn monomial(c: Rational, factors: &[(Var, u16)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in factors {
            for _ in 0..e {
                m = m.mul(&Monomial::var(v));
            }
        }
        Poly::from_terms([(m, c)])
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Ring::zero)
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(<Poly as Ring>::one(), |acc, _| acc * self.clone())
    }

    /// Constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Ring::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Replace variables by polynomials; unmapped variables stay.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                let base = map.get(&v).cloned().unwrap_or_else(|| Poly::var(v));
                t = t * base.pow(u32::from(e));
            }
            out = out + t;
        }
        out
    }

    /// `D^deg · self(x_v = N_v / D)` where `map` holds the numerators `N_v`
    /// over the common denominator `den`; unmapped variables keep their value.
    /// For nonzero `D` the result vanishes iff the substituted rational
    /// function does.
    pub fn substitute_over(&self, map: &BTreeMap<Var, Poly>, den: &Poly) -> Poly {
        let top = self.degree();
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                let num = map.get(&v).cloned().unwrap_or_else(|| Poly::var(v) * den.clone());
                t = t * num.pow(u32::from(e));
            }
            out = out + t * den.pow(top - m.degree());
        }
        out
    }

    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Option<Rational> {
        let mut acc: Rational = Ring::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                let x = point.get(&v)?;
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// `Some(λ)` with `other = λ·self` and `λ ≠ 0`, if such λ exists.
    pub fn proportionality(&self, other: &Poly) -> Option<Rational> {
        if self.is_empty() || other.is_empty() || self.terms.len() != other.terms.len() {
            return None;
        }
        let (m0, c0) = self.terms.iter().next()?;
        let lambda = other.terms.get(m0)?.clone() / c0.clone();
        (self.scale(&lambda) == *other).then_some(lambda)
    }

    pub fn display_with(&self, name: &dyn Fn(Var) -> String) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag == <Rational as Ring>::one();
            if !unit || m.0.is_empty() {
                let _ = write!(s, "{mag}");
                if !m.0.is_empty() {
                    s.push('*');
                }
            }
            for (k, &(v, e)) in m.0.iter().enumerate() {
                if k > 0 {
                    s.push('*');
                }
                s.push_str(&name(v));
                if e > 1 {
                    let _ = write!(s, "^{e}");
                }
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|v| alloc::format!("x{}", v.0)))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(Ring::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
}
