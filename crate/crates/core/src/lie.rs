//! Metric Lie algebras of dimension 4 and their curvature.
//!
//! Conventions, all fixed once here:
//! - `[e_i, e_j] = Σ_k c^k_{ij} e_k`;
//! - `de^k(X, Y) = -e^k([X, Y])`, so `de^k = -Σ_{i<j} c^k_{ij} e^i∧e^j`;
//! - `∇_{e_i} e_j = Σ_k Γ^k_{ij} e_k` from the Koszul formula;
//! - `R(X,Y) = ∇_X∇_Y - ∇_Y∇_X - ∇_{[X,Y]}` and
//!   `R_{ijkl} = g(R(e_i,e_j)e_l, e_k)`, so `R_{ijij}` is the sectional
//!   curvature of an orthonormal pair;
//! - `ρ(X, Y) = Σ_{ab} g^{ab} R(e_a, X, e_b, Y)`.

use alloc::vec::Vec;
use core::array;

use crate::error::Error;
use crate::exterior::{ThreeForm, TwoForm, PAIRS, TRIPLES};
use crate::linalg::{self, Mat4, Vec4};
use crate::scalar::{max_abs, Field, Ring, Scalar};

pub type Tensor3<T> = [[[T; 4]; 4]; 4];
pub type Tensor4<T> = [[[[T; 4]; 4]; 4]; 4];

pub fn tensor3<T>(f: impl Fn(usize, usize, usize) -> T) -> Tensor3<T> {
    array::from_fn(|i| array::from_fn(|j| array::from_fn(|k| f(i, j, k))))
}

pub fn tensor4<T>(f: impl Fn(usize, usize, usize, usize) -> T) -> Tensor4<T> {
    array::from_fn(|i| array::from_fn(|j| array::from_fn(|k| array::from_fn(|l| f(i, j, k, l)))))
}

pub(crate) fn all_quadruples() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..256).map(|n| (n >> 6, (n >> 4) & 3, (n >> 2) & 3, n & 3))
}

/// Structure constants of a 4-dimensional Lie algebra, stored for `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra4<T> {
    upper: [Vec4<T>; 6],
}

impl<T: Ring> LieAlgebra4<T> {
    pub fn abelian() -> Self {
        LieAlgebra4 { upper: array::from_fn(|_| array::from_fn(|_| T::zero())) }
    }

    /// Set `[e_i, e_j]` (0-based, `i ≠ j`) to `value` in the basis `e_k`.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec4<T>) {
        assert!(i != j && i < 4 && j < 4, "bracket indices must be distinct and < 4");
        let (slot, flip) = crate::exterior::pair_slot(i, j).expect("distinct indices");
        self.upper[slot] = if flip { value.map(|x| -x) } else { value };
    }

    pub fn with_bracket(mut self, i: usize, j: usize, value: Vec4<T>) -> Self {
        self.set_bracket(i, j, value);
        self
    }

    /// `c^k_{ij}` with antisymmetry in `i, j`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> T {
        match crate::exterior::pair_slot(i, j) {
            None => T::zero(),
            Some((slot, false)) => self.upper[slot][k].clone(),
            Some((slot, true)) => -self.upper[slot][k].clone(),
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec4<T> {
        array::from_fn(|k| self.c(i, j, k))
    }

    pub fn bracket(&self, x: &Vec4<T>, y: &Vec4<T>) -> Vec4<T> {
        let mut out: Vec4<T> = array::from_fn(|_| T::zero());
        for (slot, &(i, j)) in PAIRS.iter().enumerate() {
            let w = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if w.is_zero() {
                continue;
            }
            for k in 0..4 {
                out[k] = out[k].clone() + w.clone() * self.upper[slot][k].clone();
            }
        }
        out
    }

    /// The 24 stored constants, ordered by `(pair slot, k)`.
    pub fn stored(&self) -> impl Iterator<Item = ((usize, usize), usize, &T)> {
        PAIRS.iter().enumerate().flat_map(move |(s, &p)| (0..4).map(move |k| (p, k, &self.upper[s][k])))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> LieAlgebra4<U> {
        LieAlgebra4 { upper: array::from_fn(|s| array::from_fn(|k| f(&self.upper[s][k]))) }
    }

    pub fn to_coframe(&self) -> CoframeDiff<T> {
        CoframeDiff { d: array::from_fn(|k| TwoForm::new(array::from_fn(|s| -self.upper[s][k].clone()))) }
    }

    pub fn from_coframe(d: &CoframeDiff<T>) -> Self {
        LieAlgebra4 { upper: array::from_fn(|s| array::from_fn(|k| -d.d[k].coeffs[s].clone())) }
    }

    /// Exterior derivative of a left-invariant 2-form:
    /// `dw(X,Y,Z) = -w([X,Y],Z) + w([X,Z],Y) - w([Y,Z],X)`.
    pub fn d_two_form(&self, w: &TwoForm<T>) -> ThreeForm<T> {
        let eval = |v: Vec4<T>, z: usize| (0..4).fold(T::zero(), |acc, m| acc + v[m].clone() * w.component(m, z));
        ThreeForm {
            coeffs: array::from_fn(|n| {
                let (x, y, z) = TRIPLES[n];
                -eval(self.bracket_basis(x, y), z) + eval(self.bracket_basis(x, z), y) - eval(self.bracket_basis(y, z), x)
            }),
        }
    }

    /// `d(de^k)` for `k = 1..4`; all vanish iff the Jacobi identity holds.
    pub fn d_squared(&self) -> [ThreeForm<T>; 4] {
        let cf = self.to_coframe();
        array::from_fn(|k| self.d_two_form(&cf.d[k]))
    }

    pub fn jacobi_defect(&self) -> JacobiDefect<T> {
        let jac = |i: usize, j: usize, k: usize| -> Vec4<T> {
            let a = self.bracket(&self.bracket_basis(i, j), &linalg::basis_vector(k));
            let b = self.bracket(&self.bracket_basis(j, k), &linalg::basis_vector(i));
            let c = self.bracket(&self.bracket_basis(k, i), &linalg::basis_vector(j));
            array::from_fn(|l| a[l].clone() + b[l].clone() + c[l].clone())
        };
        let residual = tensor4(|i, j, k, l| jac(i, j, k)[l].clone());
        let violations = TRIPLES
            .iter()
            .copied()
            .filter(|&(i, j, k)| residual[i][j][k].iter().any(|x| !x.is_zero()))
            .collect();
        JacobiDefect { residual, violations }
    }

    pub fn ad_traces(&self) -> Vec4<T> {
        array::from_fn(|i| (0..4).fold(T::zero(), |acc, k| acc + self.c(i, k, k)))
    }

    pub fn unimodularity(&self) -> Unimodularity<T> {
        let traces = self.ad_traces();
        let is_unimodular = traces.iter().all(Ring::is_zero);
        Unimodularity { traces, is_unimodular }
    }

    /// Matrix of `ad_{e_i}` (column `j` holds `[e_i, e_j]`).
    pub fn ad_matrix(&self, i: usize) -> Mat4<T> {
        array::from_fn(|k| array::from_fn(|j| self.c(i, j, k)))
    }

    /// Structure constants in the basis `f_a = Σ_i m[i][a] e_i`.
    pub fn change_basis(&self, m: &Mat4<T>) -> Result<Self, Error>
    where
        T: Field,
    {
        let minv = linalg::inverse(m)?;
        Ok(self.change_basis_with_inverse(m, &minv))
    }

    /// As [`Self::change_basis`] with the inverse supplied by the caller,
    /// which keeps the computation inside a ring.
    pub fn change_basis_with_inverse(&self, m: &Mat4<T>, m_inv: &Mat4<T>) -> Self {
        let cols: [Vec4<T>; 4] = array::from_fn(|a| array::from_fn(|i| m[i][a].clone()));
        let mut out = LieAlgebra4::abelian();
        for &(a, b) in PAIRS.iter() {
            let v = self.bracket(&cols[a], &cols[b]);
            out.set_bracket(a, b, linalg::mat_vec(m_inv, &v));
        }
        out
    }

    /// Structure constants for the coframe `f^a = Σ_i p[a][i] e^i`.
    pub fn change_coframe(&self, p: &Mat4<T>) -> Result<Self, Error>
    where
        T: Field,
    {
        self.change_basis(&linalg::inverse(p)?)
    }

    fn require_jacobi(&self) -> Result<(), Error> {
        let defect = self.jacobi_defect();
        if defect.violations.is_empty() {
            Ok(())
        } else {
            Err(Error::JacobiFailure(defect.violations))
        }
    }

    pub fn solvability_profile(&self) -> Result<SolvabilityProfile, Error>
    where
        T: Field,
    {
        self.require_jacobi()?;
        let mut current: Vec<Vec4<T>> = (0..4).map(linalg::basis_vector).collect();
        let mut series = alloc::vec![4usize];
        let mut levels: Vec<Vec<Vec4<T>>> = alloc::vec![current.clone()];
        loop {
            let next = self.span_of_brackets(&current, &current);
            let dim = next.len();
            if dim == *series.last().unwrap_or(&0) {
                break;
            }
            series.push(dim);
            levels.push(next.clone());
            current = next;
            if dim == 0 {
                break;
            }
        }
        let is_solvable = *series.last().unwrap_or(&0) == 0;
        let commutator = levels.get(1).cloned().unwrap_or_default();
        let commutator_is_heisenberg = commutator.len() == 3 && {
            let second = self.span_of_brackets(&commutator, &commutator);
            second.len() == 1
                && commutator.iter().all(|u| self.bracket(&second[0], u).iter().all(Ring::is_zero))
        };
        Ok(SolvabilityProfile {
            commutator_dim: commutator.len(),
            derived_series: series,
            is_solvable,
            commutator_is_heisenberg,
        })
    }

    /// A row-reduced basis of the span of `[x, y]`, `x ∈ a`, `y ∈ b`.
    pub fn span_of_brackets(&self, a: &[Vec4<T>], b: &[Vec4<T>]) -> Vec<Vec4<T>>
    where
        T: Field,
    {
        let rows: Vec<Vec<T>> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| self.bracket(x, y).to_vec()))
            .collect();
        if rows.is_empty() {
            return Vec::new();
        }
        linalg::row_reduce(rows)
            .0
            .into_iter()
            .map(|r| array::from_fn(|k| r[k].clone()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoframeDiff<T> {
    pub d: [TwoForm<T>; 4],
}

#[derive(Clone, Debug)]
pub struct JacobiDefect<T> {
    /// `residual[i][j][k][l]`: `e^l` component of `[[e_i,e_j],e_k] + cyclic`.
    pub residual: Tensor4<T>,
    /// Triples `i<j<k` (0-based) where the identity fails.
    pub violations: Vec<(usize, usize, usize)>,
}

impl<T: Ring> JacobiDefect<T> {
    pub fn is_zero(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<T: Scalar> JacobiDefect<T> {
    pub fn max_abs(&self) -> T {
        max_abs(self.residual.iter().flatten().flatten().flatten())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Unimodularity<T> {
    pub traces: Vec4<T>,
    pub is_unimodular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvabilityProfile {
    /// Dimensions of `g ⊇ g¹ ⊇ g² ⊇ …` until the series vanishes or stalls.
    pub derived_series: Vec<usize>,
    pub commutator_dim: usize,
    pub is_solvable: bool,
    pub commutator_is_heisenberg: bool,
}

/// A Lie algebra with an inner product `g` (Gram matrix in the algebra's basis).
#[derive(Clone, Debug, PartialEq)]
pub struct MetricLieAlgebra<T> {
    pub alg: LieAlgebra4<T>,
    g: Mat4<T>,
    g_inv: Mat4<T>,
}

impl<T: Ring> MetricLieAlgebra<T> {
    /// The basis is declared orthonormal.
    pub fn orthonormal(alg: LieAlgebra4<T>) -> Self {
        MetricLieAlgebra { alg, g: linalg::identity(), g_inv: linalg::identity() }
    }

    pub fn new(alg: LieAlgebra4<T>, g: Mat4<T>) -> Result<Self, Error>
    where
        T: Scalar,
    {
        if !linalg::is_positive_definite(&g) {
            return Err(Error::NotPositiveDefinite);
        }
        let g_inv = linalg::inverse(&g)?;
        Ok(MetricLieAlgebra { alg, g, g_inv })
    }

    pub fn metric(&self) -> &Mat4<T> {
        &self.g
    }

    pub fn metric_inverse(&self) -> &Mat4<T> {
        &self.g_inv
    }

    pub fn inner(&self, x: &Vec4<T>, y: &Vec4<T>) -> T {
        let gy = linalg::mat_vec(&self.g, y);
        (0..4).fold(T::zero(), |acc, k| acc + x[k].clone() * gy[k].clone())
    }

    /// `Γ^k_{ij}` as `gamma[i][j][k]`, from
    /// `2g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`.
    pub fn levi_civita(&self) -> Tensor3<T> {
        let cg = tensor3(|a, b, c| (0..4).fold(T::zero(), |acc, k| acc + self.alg.c(a, b, k) * self.g[k][c].clone()));
        let half = T::half();
        let lower = tensor3(|i, j, l| {
            (cg[i][j][l].clone() - cg[j][l][i].clone() + cg[l][i][j].clone()) * half.clone()
        });
        tensor3(|i, j, k| (0..4).fold(T::zero(), |acc, l| acc + self.g_inv[k][l].clone() * lower[i][j][l].clone()))
    }

    /// `∇_{e_i} e_j - ∇_{e_j} e_i - [e_i, e_j]`, `e^k` component.
    pub fn torsion(&self, gamma: &Tensor3<T>) -> Tensor3<T> {
        tensor3(|i, j, k| gamma[i][j][k].clone() - gamma[j][i][k].clone() - self.alg.c(i, j, k))
    }

    /// `g(∇_{e_i} e_j, e_k) + g(e_j, ∇_{e_i} e_k)`; left-invariant `g` has constant entries.
    pub fn metric_defect(&self, gamma: &Tensor3<T>) -> Tensor3<T> {
        let low = |i: usize, j: usize, k: usize| (0..4).fold(T::zero(), |acc, m| acc + gamma[i][j][m].clone() * self.g[m][k].clone());
        tensor3(|i, j, k| low(i, j, k) + low(i, k, j))
    }

    /// Curvature without the Jacobi precondition; meaningful only on Lie
    /// algebras, but also used on symbolic ansatz constants.
    pub fn curvature_formal(&self) -> CurvatureData<T> {
        let gamma = self.levi_civita();
        // v[i][j][m][r]: e_r component of R(e_i,e_j)e_m
        let v = tensor4(|i, j, m, r| {
            let mut acc = T::zero();
            for q in 0..4 {
                acc = acc + gamma[j][m][q].clone() * gamma[i][q][r].clone()
                    - gamma[i][m][q].clone() * gamma[j][q][r].clone();
            }
            for p in 0..4 {
                let c = self.alg.c(i, j, p);
                if !c.is_zero() {
                    acc = acc - c * gamma[p][m][r].clone();
                }
            }
            acc
        });
        let riem = tensor4(|i, j, k, l| (0..4).fold(T::zero(), |acc, r| acc + v[i][j][l][r].clone() * self.g[r][k].clone()));
        let ricci: Mat4<T> = array::from_fn(|x| {
            array::from_fn(|y| {
                let mut acc = T::zero();
                for a in 0..4 {
                    for b in 0..4 {
                        if !self.g_inv[a][b].is_zero() {
                            acc = acc + self.g_inv[a][b].clone() * riem[a][x][b][y].clone();
                        }
                    }
                }
                acc
            })
        });
        let scal = (0..4).fold(T::zero(), |acc, i| {
            (0..4).fold(acc, |acc, j| acc + self.g_inv[i][j].clone() * ricci[i][j].clone())
        });
        CurvatureData { gamma, riem, ricci, scal }
    }

    pub fn curvature(&self) -> Result<CurvatureData<T>, Error> {
        self.alg.require_jacobi()?;
        Ok(self.curvature_formal())
    }

    pub fn change_basis(&self, m: &Mat4<T>) -> Result<Self, Error>
    where
        T: Field,
    {
        let alg = self.alg.change_basis(m)?;
        let g = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(m), &self.g), m);
        let g_inv = linalg::inverse(&g)?;
        Ok(MetricLieAlgebra { alg, g, g_inv })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureData<T> {
    pub gamma: Tensor3<T>,
    pub riem: Tensor4<T>,
    pub ricci: Mat4<T>,
    pub scal: T,
}

impl<T: Ring> CurvatureData<T> {
    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> T {
        self.riem[i][j][k][l].clone()
    }

    /// Largest violation among pair antisymmetries, pair symmetry and the
    /// first Bianchi identity, as a tensor of defects.
    pub fn symmetry_defects(&self) -> Vec<T> {
        let r = &self.riem;
        let mut out = Vec::with_capacity(4 * 256);
        for (i, j, k, l) in all_quadruples() {
            out.push(r[i][j][k][l].clone() + r[j][i][k][l].clone());
            out.push(r[i][j][k][l].clone() + r[i][j][l][k].clone());
            out.push(r[i][j][k][l].clone() - r[k][l][i][j].clone());
            out.push(r[i][j][k][l].clone() + r[j][k][i][l].clone() + r[k][i][j][l].clone());
        }
        out
    }

    pub fn symmetries_hold(&self) -> bool {
        self.symmetry_defects().iter().all(Ring::is_zero)
            && (0..4).all(|i| (0..4).all(|j| self.ricci[i][j] == self.ricci[j][i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn v(x: [i64; 4]) -> Vec4<Rational> {
        x.map(|n| rat(n, 1))
    }

    fn heisenberg_plus_r() -> LieAlgebra4<Rational> {
        // [e2, e3] = e1
        LieAlgebra4::abelian().with_bracket(1, 2, v([1, 0, 0, 0]))
    }

    /// Direct Koszul evaluation on vectors, independent of the tensor code.
    fn koszul_oracle(alg: &LieAlgebra4<Rational>, x: usize, y: usize) -> Vec4<Rational> {
        let e = |i: usize| linalg::basis_vector::<Rational>(i);
        let dot = |a: &Vec4<Rational>, b: &Vec4<Rational>| (0..4).fold(rat(0, 1), |s, k| s + a[k].clone() * b[k].clone());
        array::from_fn(|z| {
            let (xv, yv, zv) = (e(x), e(y), e(z));
            (dot(&alg.bracket(&xv, &yv), &zv) - dot(&alg.bracket(&yv, &zv), &xv) + dot(&alg.bracket(&zv, &xv), &yv)) * rat(1, 2)
        })
    }

    #[test]
    fn abelian_is_flat() {
        let m = MetricLieAlgebra::orthonormal(LieAlgebra4::<Rational>::abelian());
        let curv = m.curvature().unwrap();
        assert!(curv.gamma.iter().flatten().flatten().all(Ring::is_zero));
        assert!(curv.riem.iter().flatten().flatten().flatten().all(Ring::is_zero));
        assert!(curv.scal.is_zero());
        assert!(m.alg.to_coframe().d.iter().all(TwoForm::is_zero));
    }

    #[test]
    fn heisenberg_connection() {
        let alg = heisenberg_plus_r();
        let m = MetricLieAlgebra::orthonormal(alg.clone());
        let gamma = m.levi_civita();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(gamma[x][y].to_vec(), koszul_oracle(&alg, x, y).to_vec());
            }
        }
        assert_eq!(gamma[1][2], [rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(gamma[2][1], [rat(-1, 2), rat(0, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(gamma[1][0], [rat(0, 1), rat(0, 1), rat(-1, 2), rat(0, 1)]);
        assert!(m.torsion(&gamma).iter().flatten().flatten().all(Ring::is_zero));
        assert!(m.metric_defect(&gamma).iter().flatten().flatten().all(Ring::is_zero));
    }

    #[test]
    fn coframe_round_trip_and_sign() {
        // g_{4,9}(1/2): df² = ½ f¹∧f² ⇒ [f1,f2] = -½ f2
        let alg = LieAlgebra4::abelian()
            .with_bracket(0, 1, [rat(0, 1), rat(-1, 2), rat(0, 1), rat(0, 1)])
            .with_bracket(0, 2, v([0, 0, 1, 0]))
            .with_bracket(0, 3, [rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)])
            .with_bracket(1, 2, v([0, 0, 0, 1]));
        let cf = alg.to_coframe();
        assert_eq!(cf.d[1].component(0, 1), rat(1, 2));
        assert_eq!(cf.d[3].component(0, 3), rat(-1, 2));
        assert_eq!(cf.d[3].component(1, 2), rat(-1, 1));
        assert_eq!(LieAlgebra4::from_coframe(&cf), alg);
        assert!(alg.jacobi_defect().is_zero());
        assert_eq!(alg.ad_traces(), v([1, 0, 0, 0]));
    }

    #[test]
    fn jacobi_failure_detected_and_curvature_refused() {
        let alg = LieAlgebra4::abelian()
            .with_bracket(0, 1, v([0, 0, 1, 0]))
            .with_bracket(0, 2, v([0, 1, 0, 0]))
            .with_bracket(1, 2, v([1, 0, 0, 0]));
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e3,e3] + [e1,e1] - [e2,e2] = 0: valid
        assert!(alg.jacobi_defect().is_zero());
        let broken = alg.with_bracket(0, 3, v([0, 0, 1, 0])).with_bracket(2, 3, v([1, 0, 0, 0]));
        let defect = broken.jacobi_defect();
        assert!(!defect.is_zero());
        let m = MetricLieAlgebra::orthonormal(broken);
        assert!(matches!(m.curvature(), Err(Error::JacobiFailure(_))));
    }

    #[test]
    fn d_squared_matches_jacobi() {
        let alg = heisenberg_plus_r().with_bracket(0, 3, v([1, 0, 0, 0]));
        assert!(!alg.jacobi_defect().is_zero());
        assert!(alg.d_squared().iter().any(|f| !f.is_zero()));
        let ok = heisenberg_plus_r();
        assert!(ok.d_squared().iter().all(ThreeForm::is_zero));
    }

    #[test]
    fn solvability_of_sl2_plus_r() {
        // sl2: [h,x] = 2x, [h,y] = -2y, [x,y] = h on (h,x,y) = (e1,e2,e3)
        let alg = LieAlgebra4::abelian()
            .with_bracket(0, 1, v([0, 2, 0, 0]))
            .with_bracket(0, 2, v([0, 0, -2, 0]))
            .with_bracket(1, 2, v([1, 0, 0, 0]));
        let p = alg.solvability_profile().unwrap();
        assert_eq!(p.derived_series, alloc::vec![4, 3]);
        assert!(!p.is_solvable);
        let ab = LieAlgebra4::<Rational>::abelian().solvability_profile().unwrap();
        assert_eq!(ab.derived_series, alloc::vec![4, 0]);
        assert!(ab.is_solvable);
    }

    #[test]
    fn general_metric_connection_is_levi_civita() {
        let alg = heisenberg_plus_r().with_bracket(0, 3, v([1, 0, 0, 0])).with_bracket(1, 3, [rat(0, 1), rat(1, 2), rat(0, 1), rat(0, 1)]).with_bracket(2, 3, [rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1)]);
        assert!(alg.jacobi_defect().is_zero());
        let g: Mat4<Rational> = [
            [rat(2, 1), rat(1, 2), rat(0, 1), rat(0, 1)],
            [rat(1, 2), rat(1, 1), rat(0, 1), rat(1, 3)],
            [rat(0, 1), rat(0, 1), rat(3, 1), rat(0, 1)],
            [rat(0, 1), rat(1, 3), rat(0, 1), rat(1, 1)],
        ];
        let m = MetricLieAlgebra::new(alg, g).unwrap();
        let curv = m.curvature().unwrap();
        assert!(m.torsion(&curv.gamma).iter().flatten().flatten().all(Ring::is_zero));
        assert!(m.metric_defect(&curv.gamma).iter().flatten().flatten().all(Ring::is_zero));
        assert!(curv.symmetries_hold());
    }

    #[test]
    fn change_basis_preserves_curvature_invariants() {
        let alg = heisenberg_plus_r().with_bracket(0, 3, v([1, 0, 0, 0])).with_bracket(1, 3, [rat(0, 1), rat(1, 2), rat(0, 1), rat(0, 1)]).with_bracket(2, 3, [rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1)]);
        let m = MetricLieAlgebra::orthonormal(alg);
        let p: Mat4<Rational> = [v([1, 1, 0, 0]), v([0, 1, 0, 0]), v([0, 0, 2, 0]), v([1, 0, 0, 1])];
        let m2 = m.change_basis(&p).unwrap();
        assert!(m2.alg.jacobi_defect().is_zero());
        assert_eq!(m.curvature().unwrap().scal, m2.curvature().unwrap().scal);
    }

    #[test]
    fn non_spd_metric_rejected() {
        let g = linalg::scale(&linalg::identity::<Rational>(), &rat(-1, 1));
        assert_eq!(MetricLieAlgebra::new(LieAlgebra4::abelian(), g), Err(Error::NotPositiveDefinite));
    }
}
