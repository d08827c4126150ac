//! The 18-parameter coframe ansatz and the named model algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::array;

use crate::error::Error;
use crate::exterior::TwoForm;
use crate::lie::{CoframeDiff, LieAlgebra4};
use crate::poly::{Poly, Var};
use crate::scalar::{Field, Rational, Ring};

pub const PARAM_COUNT: u16 = 18;

/// `a_i` for `i = 1..=6`.
pub const fn a(i: u16) -> Var {
    assert!(i >= 1 && i <= 6);
    Var(i - 1)
}

pub const fn b(i: u16) -> Var {
    assert!(i >= 1 && i <= 6);
    Var(5 + i)
}

pub const fn c(i: u16) -> Var {
    assert!(i >= 1 && i <= 6);
    Var(11 + i)
}

/// Auxiliary indeterminates beyond the 18 ansatz parameters, named `u1, u2, …`.
pub const fn aux(i: u16) -> Var {
    Var(PARAM_COUNT + i - 1)
}

pub fn param_name(v: Var) -> String {
    if v.0 >= PARAM_COUNT {
        return format!("u{}", v.0 - PARAM_COUNT + 1);
    }
    let letter = ["a", "b", "c"].get(usize::from(v.0 / 6)).copied().unwrap_or("x");
    format!("{letter}{}", v.0 % 6 + 1)
}

pub fn param(name: &str) -> Option<Var> {
    let mut chars = name.chars();
    let letter = chars.next()?;
    let idx: u16 = chars.as_str().parse().ok()?;
    if letter == 'u' && idx >= 1 {
        return Some(aux(idx));
    }
    if !(1..=6).contains(&idx) {
        return None;
    }
    match letter {
        'a' => Some(a(idx)),
        'b' => Some(b(idx)),
        'c' => Some(c(idx)),
        _ => None,
    }
}

pub fn all_params() -> impl Iterator<Item = Var> {
    (0..PARAM_COUNT).map(Var)
}

/// Coefficients of `de¹, de², de³` on `(e¹², e¹³, e¹⁴, e²³, e²⁴, e³⁴)`;
/// `de⁴ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamFamily<T> {
    pub a: [T; 6],
    pub b: [T; 6],
    pub c: [T; 6],
}

impl<T: Ring> ParamFamily<T> {
    pub fn zero() -> Self {
        ParamFamily { a: array::from_fn(|_| T::zero()), b: array::from_fn(|_| T::zero()), c: array::from_fn(|_| T::zero()) }
    }

    pub fn from_fn(f: impl Fn(Var) -> T) -> Self {
        ParamFamily {
            a: array::from_fn(|i| f(Var(i as u16))),
            b: array::from_fn(|i| f(Var(6 + i as u16))),
            c: array::from_fn(|i| f(Var(12 + i as u16))),
        }
    }

    pub fn get(&self, v: Var) -> &T {
        let i = usize::from(v.0 % 6);
        match v.0 / 6 {
            0 => &self.a[i],
            1 => &self.b[i],
            _ => &self.c[i],
        }
    }

    pub fn set(&mut self, v: Var, value: T) {
        let i = usize::from(v.0 % 6);
        match v.0 / 6 {
            0 => self.a[i] = value,
            1 => self.b[i] = value,
            _ => self.c[i] = value,
        }
    }

    pub fn with(mut self, v: Var, value: T) -> Self {
        self.set(v, value);
        self
    }
}

impl ParamFamily<Poly> {
    /// Every parameter as its own indeterminate.
    pub fn symbolic() -> Self {
        Self::from_fn(Poly::var)
    }
}

impl ParamFamily<Rational> {
    pub fn from_values(values: &[(Var, Rational)]) -> Self {
        values.iter().fold(Self::zero(), |p, (v, x)| p.with(*v, x.clone()))
    }

    pub fn nonzero(&self) -> Vec<(Var, Rational)> {
        all_params().filter(|v| !self.get(*v).is_zero()).map(|v| (v, self.get(v).clone())).collect()
    }
}

pub fn build_ansatz<T: Ring>(p: &ParamFamily<T>) -> CoframeDiff<T> {
    CoframeDiff {
        d: [
            TwoForm::new(p.a.clone()),
            TwoForm::new(p.b.clone()),
            TwoForm::new(p.c.clone()),
            TwoForm::zero(),
        ],
    }
}

pub fn ansatz_algebra<T: Ring>(p: &ParamFamily<T>) -> LieAlgebra4<T> {
    LieAlgebra4::from_coframe(&build_ansatz(p))
}

/// The two-parameter strictly almost Kähler family (`a₄ = t`, `a₅ = s`).
pub fn family_params<T: Field>(s: T, t: T) -> Result<ParamFamily<T>, Error> {
    if t.is_zero() {
        return Err(Error::ZeroT);
    }
    let two_t = t.clone() + t.clone();
    let (s2, t2) = (s.clone() * s.clone(), t.clone() * t.clone());
    Ok(ParamFamily::zero()
        .with(a(2), -s.clone())
        .with(a(3), (t2.clone() - s2.clone()) / two_t.clone())
        .with(a(4), t.clone())
        .with(a(5), s.clone())
        .with(b(2), -s2.clone() / t.clone())
        .with(b(3), s.clone())
        .with(b(4), s)
        .with(b(5), (s2.clone() - t2.clone()) / two_t)
        .with(c(6), (t2 + s2) / t))
}

pub fn family<T: Field>(s: T, t: T) -> Result<LieAlgebra4<T>, Error> {
    Ok(ansatz_algebra(&family_params(s, t)?))
}

/// `𝔤₄,₉(α)`: `df¹ = 0, df² = (1-α) f¹², df³ = -f¹³, df⁴ = -α f¹⁴ - f²³`.
pub fn g49<T: Ring>(alpha: T) -> LieAlgebra4<T> {
    let one = T::one();
    let z = || T::zero();
    let cf = CoframeDiff {
        d: [
            TwoForm::zero(),
            TwoForm::new([one.clone() - alpha.clone(), z(), z(), z(), z(), z()]),
            TwoForm::new([z(), -one.clone(), z(), z(), z(), z()]),
            TwoForm::new([z(), z(), -alpha, -one, z(), z()]),
        ],
    };
    LieAlgebra4::from_coframe(&cf)
}

/// `ℝ² ⋉ Sol₂`: `[e₁,e₃] = -e₁ = [e₂,e₄]`, `[e₂,e₃] = e₂`, `[e₃,e₄] = 2e₄`.
pub fn r2sol2<T: Ring>() -> LieAlgebra4<T> {
    let v = |k: usize, x: i64| -> [T; 4] { array::from_fn(|i| if i == k { T::from_i64(x) } else { T::zero() }) };
    LieAlgebra4::abelian()
        .with_bracket(0, 2, v(0, -1))
        .with_bracket(1, 3, v(0, -1))
        .with_bracket(1, 2, v(1, 1))
        .with_bracket(2, 3, v(3, 2))
}
