//! Exterior algebra of a fixed oriented 4-dimensional inner-product space.
//!
//! 2-forms are stored in the basis order
//! `(e¹∧e², e¹∧e³, e¹∧e⁴, e²∧e³, e²∧e⁴, e³∧e⁴)` everywhere in the crate,
//! with the normalization `(eⁱ∧eʲ)(e_i, e_j) = 1`.

use core::array;
use core::ops::{Add, Neg, Sub};

use crate::error::Error;
use crate::linalg::{self, Mat4, Vec4};
use crate::scalar::{Ring, Scalar};

/// Index pairs of the 2-form basis.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
/// Index triples of the 3-form basis `(123, 124, 134, 234)`.
pub const TRIPLES: [(usize, usize, usize); 4] = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];

/// Slot of `eⁱ∧eʲ` in [`PAIRS`] and the sign relating it to the stored element.
pub fn pair_slot(i: usize, j: usize) -> Option<(usize, bool)> {
    if i == j {
        return None;
    }
    let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
    PAIRS.iter().position(|&p| p == (a, b)).map(|k| (k, flip))
}

/// Totally antisymmetric symbol with `ε₁₂₃₄ = 1`.
pub fn levi_civita_symbol(i: usize, j: usize, k: usize, l: usize) -> i64 {
    let idx = [i, j, k, l];
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] == idx[b] {
                return 0;
            }
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OneForm<T> {
    pub coeffs: Vec4<T>,
}

impl<T: Ring> OneForm<T> {
    pub fn new(coeffs: Vec4<T>) -> Self {
        OneForm { coeffs }
    }

    /// The dual basis element `eⁱ` (0-based `i`).
    pub fn basis(i: usize) -> Self {
        OneForm { coeffs: linalg::basis_vector(i) }
    }

    pub fn eval(&self, x: &Vec4<T>) -> T {
        (0..4).fold(T::zero(), |acc, k| acc + self.coeffs[k].clone() * x[k].clone())
    }
}

impl<T: Ring> Add for OneForm<T> {
    type Output = OneForm<T>;
    fn add(self, rhs: Self) -> Self {
        OneForm { coeffs: array::from_fn(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoForm<T> {
    pub coeffs: [T; 6],
}

impl<T: Ring> TwoForm<T> {
    pub fn new(coeffs: [T; 6]) -> Self {
        TwoForm { coeffs }
    }

    pub fn zero() -> Self {
        TwoForm { coeffs: array::from_fn(|_| T::zero()) }
    }

    /// `eⁱ∧eʲ` for 0-based indices.
    pub fn basis(i: usize, j: usize) -> Self {
        let mut w = Self::zero();
        if let Some((k, flip)) = pair_slot(i, j) {
            w.coeffs[k] = if flip { -T::one() } else { T::one() };
        }
        w
    }

    /// Value on `(e_i, e_j)`.
    pub fn component(&self, i: usize, j: usize) -> T {
        match pair_slot(i, j) {
            None => T::zero(),
            Some((k, false)) => self.coeffs[k].clone(),
            Some((k, true)) => -self.coeffs[k].clone(),
        }
    }

    pub fn to_matrix(&self) -> Mat4<T> {
        array::from_fn(|i| array::from_fn(|j| self.component(i, j)))
    }

    /// Upper triangle of an (assumed antisymmetric) matrix.
    pub fn from_matrix(m: &Mat4<T>) -> Self {
        TwoForm { coeffs: array::from_fn(|k| m[PAIRS[k].0][PAIRS[k].1].clone()) }
    }

    pub fn eval(&self, x: &Vec4<T>, y: &Vec4<T>) -> T {
        let mut acc = T::zero();
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let minor = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            acc = acc + self.coeffs[k].clone() * minor;
        }
        acc
    }

    pub fn scale(&self, s: &T) -> Self {
        TwoForm { coeffs: array::from_fn(|k| self.coeffs[k].clone() * s.clone()) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl<T: Ring> Add for TwoForm<T> {
    type Output = TwoForm<T>;
    fn add(self, rhs: Self) -> Self {
        TwoForm { coeffs: array::from_fn(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()) }
    }
}

impl<T: Ring> Sub for TwoForm<T> {
    type Output = TwoForm<T>;
    fn sub(self, rhs: Self) -> Self {
        TwoForm { coeffs: array::from_fn(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone()) }
    }
}

impl<T: Ring> Neg for TwoForm<T> {
    type Output = TwoForm<T>;
    fn neg(self) -> Self {
        TwoForm { coeffs: self.coeffs.map(|c| -c) }
    }
}

/// 3-forms in the basis `(e¹²³, e¹²⁴, e¹³⁴, e²³⁴)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeForm<T> {
    pub coeffs: [T; 4],
}

impl<T: Ring> ThreeForm<T> {
    pub fn zero() -> Self {
        ThreeForm { coeffs: array::from_fn(|_| T::zero()) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
}

impl<T: Ring> Add for ThreeForm<T> {
    type Output = ThreeForm<T>;
    fn add(self, rhs: Self) -> Self {
        ThreeForm { coeffs: array::from_fn(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone()) }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Orientation {
    /// `e¹∧e²∧e³∧e⁴` is positive; `Ω = e¹² + e³⁴` is then self-dual.
    #[default]
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

pub fn wedge<T: Ring>(a: &OneForm<T>, b: &OneForm<T>) -> TwoForm<T> {
    TwoForm {
        coeffs: array::from_fn(|k| {
            let (i, j) = PAIRS[k];
            a.coeffs[i].clone() * b.coeffs[j].clone() - a.coeffs[j].clone() * b.coeffs[i].clone()
        }),
    }
}

/// `α ∧ w` for a 1-form and a 2-form.
pub fn wedge_one_two<T: Ring>(a: &OneForm<T>, w: &TwoForm<T>) -> ThreeForm<T> {
    ThreeForm {
        coeffs: array::from_fn(|k| {
            let (i, j, l) = TRIPLES[k];
            a.coeffs[i].clone() * w.component(j, l) - a.coeffs[j].clone() * w.component(i, l)
                + a.coeffs[l].clone() * w.component(i, j)
        }),
    }
}

/// Hodge star for an orthonormal frame.
pub fn hodge_star_orthonormal<T: Ring>(w: &TwoForm<T>, o: Orientation) -> TwoForm<T> {
    let sign = T::from_i64(o.sign());
    TwoForm {
        coeffs: array::from_fn(|k| {
            let (kk, ll) = PAIRS[k];
            let mut acc = T::zero();
            for (m, &(i, j)) in PAIRS.iter().enumerate() {
                let e = levi_civita_symbol(i, j, kk, ll);
                if e != 0 {
                    acc = acc + T::from_i64(e) * w.coeffs[m].clone();
                }
            }
            acc * sign.clone()
        }),
    }
}

/// Hodge star with respect to an arbitrary inner product given as a Gram
/// matrix in the current basis: `(*w)_{kl} = ½ √det g ε_{ijkl} w^{ij}`.
pub fn hodge_star<T: Scalar>(w: &TwoForm<T>, metric: &Mat4<T>, o: Orientation) -> Result<TwoForm<T>, Error> {
    if !linalg::is_positive_definite(metric) {
        return Err(Error::NotPositiveDefinite);
    }
    if *metric == linalg::identity() {
        return Ok(hodge_star_orthonormal(w, o));
    }
    let vol = linalg::det(metric).sqrt().ok_or(Error::IrrationalVolume)?;
    let ginv = linalg::inverse(metric)?;
    let wm = w.to_matrix();
    // raised[i][j] = g^{ia} g^{jb} w_{ab}
    let raised = linalg::mat_mul(&linalg::mat_mul(&ginv, &wm), &linalg::transpose(&ginv));
    let upper = TwoForm::from_matrix(&raised);
    Ok(hodge_star_orthonormal(&upper, o).scale(&vol))
}

/// `(w⁺, w⁻) = ((w + *w)/2, (w - *w)/2)`.
pub fn sd_asd_split<T: Scalar>(
    w: &TwoForm<T>,
    metric: &Mat4<T>,
    o: Orientation,
) -> Result<(TwoForm<T>, TwoForm<T>), Error> {
    let star = hodge_star(w, metric, o)?;
    let half = T::half();
    Ok(((w.clone() + star.clone()).scale(&half), (w.clone() - star).scale(&half)))
}

/// The 6×6 matrix of `*` for an orthonormal frame (columns are images of
/// basis 2-forms).
pub fn star_matrix<T: Ring>(o: Orientation) -> [[T; 6]; 6] {
    let cols: [TwoForm<T>; 6] = array::from_fn(|k| {
        let (i, j) = PAIRS[k];
        hodge_star_orthonormal(&TwoForm::basis(i, j), o)
    });
    array::from_fn(|r| array::from_fn(|c| cols[c].coeffs[r].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};
    use proptest::prelude::*;

    fn tf(v: [i64; 6]) -> TwoForm<Rational> {
        TwoForm::new(v.map(|x| rat(x, 1)))
    }

    fn e(i: usize) -> OneForm<Rational> {
        OneForm::basis(i)
    }

    fn id() -> Mat4<Rational> {
        linalg::identity()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge(&e(0), &e(1)), tf([1, 0, 0, 0, 0, 0]));
        assert_eq!(wedge(&e(1), &e(0)), tf([-1, 0, 0, 0, 0, 0]));
        assert_eq!(wedge(&(e(0) + e(2)), &e(3)), tf([0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn wedge_normalization_on_basis_vectors() {
        let w = wedge(&e(0), &e(1));
        let x = linalg::basis_vector::<Rational>(0);
        let y = linalg::basis_vector::<Rational>(1);
        assert_eq!(w.eval(&x, &y), rat(1, 1));
    }

    #[test]
    fn star_on_basis() {
        let o = Orientation::Positive;
        let star = |w| hodge_star(&w, &id(), o).unwrap();
        assert_eq!(star(tf([1, 0, 0, 0, 0, 0])), tf([0, 0, 0, 0, 0, 1]));
        assert_eq!(star(tf([0, 1, 0, 0, 0, 0])), tf([0, 0, 0, 0, -1, 0]));
        assert_eq!(star(tf([0, 0, 1, 0, 0, 0])), tf([0, 0, 0, 1, 0, 0]));
    }

    #[test]
    fn omega_is_self_dual() {
        let omega = tf([1, 0, 0, 0, 0, 1]);
        assert_eq!(hodge_star(&omega, &id(), Orientation::Positive).unwrap(), omega);
        let (p, m) = sd_asd_split(&omega, &id(), Orientation::Positive).unwrap();
        assert_eq!(p, omega);
        assert!(m.is_zero());
        // reversed orientation makes Ω anti-self-dual
        assert_eq!(hodge_star(&omega, &id(), Orientation::Negative).unwrap(), -omega);
    }

    #[test]
    fn split_examples() {
        let (p, m) = sd_asd_split(&tf([1, 0, 0, 0, 0, 0]), &id(), Orientation::Positive).unwrap();
        assert_eq!(p, TwoForm::new([rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)]));
        assert_eq!(m, TwoForm::new([rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(-1, 2)]));
        let w = tf([0, 1, 0, 0, -1, 0]);
        assert_eq!(hodge_star(&w, &id(), Orientation::Positive).unwrap(), w);
        let (p, m) = sd_asd_split(&w, &id(), Orientation::Positive).unwrap();
        assert_eq!(p, w);
        assert!(m.is_zero());
    }

    #[test]
    fn star_matrix_is_involution() {
        let s = star_matrix::<Rational>(Orientation::Positive);
        for i in 0..6 {
            for j in 0..6 {
                let v = (0..6).fold(rat(0, 1), |acc, k| acc + s[i][k].clone() * s[k][j].clone());
                assert_eq!(v, if i == j { rat(1, 1) } else { rat(0, 1) });
            }
        }
    }

    #[test]
    fn non_spd_metric_rejected() {
        let mut g = id();
        g[2][2] = rat(-1, 1);
        assert_eq!(hodge_star(&tf([1, 0, 0, 0, 0, 0]), &g, Orientation::Positive), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn scaled_metric_star_is_conformally_invariant() {
        // *_{λ²g} = *_g on 2-forms in dimension 4
        let g = linalg::scale(&id(), &rat(4, 1));
        let w = tf([1, 2, 0, -1, 3, 5]);
        assert_eq!(hodge_star(&w, &g, Orientation::Positive).unwrap(), hodge_star(&w, &id(), Orientation::Positive).unwrap());
    }

    #[test]
    fn diagonal_metric_star() {
        // g = diag(4,1,1,1): orthonormal coframe (2e¹, e², e³, e⁴); *(2e¹∧e²) = e³∧e⁴
        let mut g = id();
        g[0][0] = rat(4, 1);
        let got = hodge_star(&tf([1, 0, 0, 0, 0, 0]), &g, Orientation::Positive).unwrap();
        assert_eq!(got, TwoForm::new([rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)]));
        assert_eq!(hodge_star(&got, &g, Orientation::Positive).unwrap(), tf([1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn irrational_volume_reported() {
        let mut g = id();
        g[0][0] = rat(2, 1);
        assert_eq!(hodge_star(&tf([1, 0, 0, 0, 0, 0]), &g, Orientation::Positive), Err(Error::IrrationalVolume));
        let gf: Mat4<f64> = linalg::map(&g, crate::scalar::Scalar::to_f64);
        assert!(hodge_star(&TwoForm::new([1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), &gf, Orientation::Positive).is_ok());
    }

    fn any_two_form() -> impl Strategy<Value = TwoForm<Rational>> {
        proptest::array::uniform6((-20i64..20, 1i64..7)).prop_map(|a| TwoForm::new(a.map(|(n, d)| rat(n, d))))
    }

    fn any_one_form() -> impl Strategy<Value = OneForm<Rational>> {
        proptest::array::uniform4((-20i64..20, 1i64..7)).prop_map(|a| OneForm::new(a.map(|(n, d)| rat(n, d))))
    }

    proptest! {
        #[test]
        fn split_recomposes(w in any_two_form()) {
            let (p, m) = sd_asd_split(&w, &id(), Orientation::Positive).unwrap();
            prop_assert_eq!(p.clone() + m.clone(), w);
            prop_assert_eq!(hodge_star(&p, &id(), Orientation::Positive).unwrap(), p);
            prop_assert_eq!(hodge_star(&m, &id(), Orientation::Positive).unwrap(), -m);
        }

        #[test]
        fn star_twice_is_identity(w in any_two_form()) {
            let s = hodge_star(&w, &id(), Orientation::Positive).unwrap();
            prop_assert_eq!(hodge_star(&s, &id(), Orientation::Positive).unwrap(), w);
        }

        #[test]
        fn wedge_bilinear_alternating(a in any_one_form(), b in any_one_form(), c in any_one_form()) {
            prop_assert!(wedge(&a, &a).is_zero());
            prop_assert_eq!(wedge(&a, &b), -wedge(&b, &a));
            prop_assert_eq!(wedge(&(a.clone() + b.clone()), &c), wedge(&a, &c) + wedge(&b, &c));
        }

        #[test]
        fn two_form_eval_is_antisymmetric(w in any_two_form(), x in any_one_form(), y in any_one_form()) {
            prop_assert_eq!(w.eval(&x.coeffs, &y.coeffs), -w.eval(&y.coeffs, &x.coeffs));
        }
    }
}
