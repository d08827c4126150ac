//! Normalization of the strictly almost Kähler family to `𝔤₄,₉(½)`.

use core::array;

use super::ansatz::{family, g49};
use crate::error::Error;
use crate::lie::LieAlgebra4;
use crate::linalg::{self, Mat4, Vec4};
use crate::scalar::{rat, Field, Rational, Ring};
use crate::surd::Surd;

/// `ad_{e₄}` on the Heisenberg commutator in the basis `(Z, X, Y)`:
/// `ad(Z) = ηZ`, `ad(X) = aZ + μX + δY`, `ad(Y) = bZ + kX + νY`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivationDecomposition {
    pub z: Vec4<Rational>,
    pub x: Vec4<Rational>,
    pub y: Vec4<Rational>,
    pub eta: Rational,
    pub mu: Rational,
    pub nu: Rational,
    pub delta: Rational,
    pub a: Rational,
    pub b: Rational,
    pub k: Rational,
    /// `Z` is central in the commutator and `[X, Y] = Z`.
    pub heisenberg: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct G49Normalization {
    pub decomposition: DerivationDecomposition,
    /// Columns are `f₁, …, f₄` in the basis `e₁, …, e₄`.
    pub basis_change: Mat4<Surd>,
    pub target: LieAlgebra4<Surd>,
    pub matches_g49: bool,
    /// Gram matrix of the `f_i` for the orthonormal metric on `e_i`.
    pub gram: Mat4<Surd>,
    /// `g = homothety · Σ (f^i)²`.
    pub homothety: Rational,
}

impl G49Normalization {
    pub fn gram_is_scalar(&self) -> bool {
        let d = self.gram[0][0].clone();
        (0..4).all(|i| (0..4).all(|j| self.gram[i][j] == if i == j { d.clone() } else { Surd::zero() }))
    }
}

fn coords(basis: &Mat4<Rational>, v: &Vec4<Rational>) -> Result<Vec4<Rational>, Error> {
    Ok(linalg::mat_vec(&linalg::inverse(basis)?, v))
}

/// Reads the Heisenberg triple off the brackets: `X = e₃`, `Y = e₂`,
/// `Z = [X, Y]`, and decomposes `ad_{e₄}`.
pub fn decompose(alg: &LieAlgebra4<Rational>) -> Result<DerivationDecomposition, Error> {
    let e = |i: usize| linalg::basis_vector::<Rational>(i);
    let (x, y) = (e(2), e(1));
    let z = alg.bracket(&x, &y);
    let heisenberg = alg.bracket(&z, &x).iter().all(Ring::is_zero) && alg.bracket(&z, &y).iter().all(Ring::is_zero);
    let basis: Mat4<Rational> = array::from_fn(|i| [z[i].clone(), x[i].clone(), y[i].clone(), e(3)[i].clone()]);
    let e4 = e(3);
    let cz = coords(&basis, &alg.bracket(&e4, &z))?;
    let cx = coords(&basis, &alg.bracket(&e4, &x))?;
    let cy = coords(&basis, &alg.bracket(&e4, &y))?;
    if !(cz[3].is_zero() && cx[3].is_zero() && cy[3].is_zero() && cz[1].is_zero() && cz[2].is_zero()) {
        return Err(Error::NoIsomorphism("ad(e4) does not preserve the Heisenberg flag".into()));
    }
    Ok(DerivationDecomposition {
        eta: cz[0].clone(),
        a: cx[0].clone(),
        mu: cx[1].clone(),
        delta: cx[2].clone(),
        b: cy[0].clone(),
        k: cy[1].clone(),
        nu: cy[2].clone(),
        z,
        x,
        y,
        heisenberg,
    })
}

/// The basis `f₁ = A = e₄/μ`, `f₂ = (-Y + (b/μ)Z)/√(t²+s²)`, `f₃ = X/μ`,
/// `f₄ = t Z / (t²+s²)^{3/2}` for the family member `(s, t)`.
pub fn normalize_to_g49(s: &Rational, t: &Rational) -> Result<G49Normalization, Error> {
    let alg = family(s.clone(), t.clone())?;
    let dec = decompose(&alg)?;
    let q = t.clone() * t.clone() + s.clone() * s.clone();
    let root = Surd::sqrt_of(&q);
    let lift = |v: &Vec4<Rational>, f: Surd| -> Vec4<Surd> { array::from_fn(|i| Surd::rational(v[i].clone()) * f.clone()) };
    let mu = Surd::rational(dec.mu.clone());
    let e4 = linalg::basis_vector::<Rational>(3);
    let f1 = lift(&e4, mu.recip());
    let b_over_mu = dec.b.clone() / dec.mu.clone();
    let f2_raw: Vec4<Rational> = array::from_fn(|i| -dec.y[i].clone() + b_over_mu.clone() * dec.z[i].clone());
    let f2 = lift(&f2_raw, root.recip());
    let f3 = lift(&dec.x, mu.recip());
    let f4 = lift(&dec.z, Surd::rational(t.clone()) / (Surd::rational(q.clone()) * root.clone()));
    let cols = [f1, f2, f3, f4];
    let m: Mat4<Surd> = array::from_fn(|i| array::from_fn(|a| cols[a][i].clone()));
    let target = alg.map(|x| Surd::rational(x.clone())).change_basis(&m)?;
    let matches_g49 = target == g49(Surd::rational(rat(1, 2)));
    let gram = linalg::mat_mul(&linalg::transpose(&m), &m);
    let homothety = q.clone() * q / (t.clone() * t.clone());
    Ok(G49Normalization { decomposition: dec, basis_change: m, target, matches_g49, gram, homothety })
}
