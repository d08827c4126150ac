//! Almost Hermitian structures `(g, J, Ω)` on a metric Lie algebra and the
//! decomposition of the curvature operator on 2-forms.
//!
//! `J` acts on vectors: column `i` of the matrix is `J e_i`. The standard
//! structure is `J e₁ = e₂`, `J e₃ = e₄`, `Ω = e¹∧e² + e³∧e⁴`, which
//! satisfies `Ω(X, Y) = g(JX, Y)` for the identity metric.

use core::array;

use crate::error::Error;
use crate::exterior::{self, Orientation, ThreeForm, TwoForm, PAIRS};
use crate::lie::{all_quadruples, tensor3, tensor4, CurvatureData, LieAlgebra4, MetricLieAlgebra, Tensor3, Tensor4};
use crate::linalg::{self, Mat4, Vec4};
use crate::scalar::{max_abs, rat, Ring, Scalar};

pub type Mat6<T> = [[T; 6]; 6];
pub type Mat3<T> = [[T; 3]; 3];

pub fn standard_j<T: Ring>() -> Mat4<T> {
    let mut j = linalg::zeros();
    j[1][0] = T::one();
    j[0][1] = -T::one();
    j[3][2] = T::one();
    j[2][3] = -T::one();
    j
}

pub fn standard_omega<T: Ring>() -> TwoForm<T> {
    TwoForm::basis(0, 1) + TwoForm::basis(2, 3)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlmostHermitian4<T> {
    pub m: MetricLieAlgebra<T>,
    pub j: Mat4<T>,
    pub omega: TwoForm<T>,
    pub orientation: Orientation,
}

impl<T: Ring> AlmostHermitian4<T> {
    pub fn new(m: MetricLieAlgebra<T>, j: Mat4<T>, omega: TwoForm<T>) -> Self {
        AlmostHermitian4 { m, j, omega, orientation: Orientation::Positive }
    }

    /// Orthonormal basis with the standard `J` and `Ω`.
    pub fn standard(alg: LieAlgebra4<T>) -> Self {
        Self::new(MetricLieAlgebra::orthonormal(alg), standard_j(), standard_omega())
    }

    pub fn check_structure(&self) -> StructureReport<T> {
        let g = self.m.metric();
        let j = &self.j;
        let jj = linalg::mat_mul(j, j);
        let j_squared = array::from_fn(|a| array::from_fn(|b| jj[a][b].clone() + if a == b { T::one() } else { T::zero() }));
        let jtgj = linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(j), g), j);
        let isometry = linalg::sub(&jtgj, g);
        // g(J e_a, e_b) = Σ_k J[k][a] g[k][b]
        let gj = linalg::mat_mul(&linalg::transpose(j), g);
        let compatibility = linalg::sub(&self.omega.to_matrix(), &gj);
        let d_omega = self.m.alg.d_two_form(&self.omega);
        StructureReport { j_squared, isometry, compatibility, d_omega }
    }

    pub fn nijenhuis(&self) -> Result<Nijenhuis<T>, Error> {
        nijenhuis(&self.m.alg, &self.j)
    }

    pub fn ricci_j_invariance(&self, curv: &CurvatureData<T>) -> RicciInvariance<T> {
        let jt = linalg::transpose(&self.j);
        let pulled = linalg::mat_mul(&linalg::mat_mul(&jt, &curv.ricci), &self.j);
        let residual = linalg::sub(&pulled, &curv.ricci);
        let half = T::half();
        let invariant = array::from_fn(|a| array::from_fn(|b| (curv.ricci[a][b].clone() + pulled[a][b].clone()) * half.clone()));
        let anti = array::from_fn(|a| array::from_fn(|b| (curv.ricci[a][b].clone() - pulled[a][b].clone()) * half.clone()));
        RicciInvariance { residual, conditions: ricci_conditions(&curv.ricci), invariant, anti }
    }

    pub fn weyl_decompose(&self, curv: &CurvatureData<T>) -> Result<WeylBlocks<T>, Error> {
        if *self.m.metric() != linalg::identity() {
            return Err(Error::NotOrthonormal);
        }
        Ok(weyl_decompose(curv, &self.omega, self.orientation))
    }

    pub fn gray_operators(&self, curv: &CurvatureData<T>) -> GrayOperators<T> {
        gray_operators(&curv.riem, &self.j, self.m.metric_inverse())
    }

    pub fn gray_conditions(&self, curv: &CurvatureData<T>) -> GrayConditions<T> {
        gray_conditions(&curv.riem, &self.j)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport<T> {
    /// `J² + Id`
    pub j_squared: Mat4<T>,
    /// `g(JX, JY) - g(X, Y)`
    pub isometry: Mat4<T>,
    /// `Ω(X, Y) - g(JX, Y)`
    pub compatibility: Mat4<T>,
    pub d_omega: ThreeForm<T>,
}

impl<T: Ring> StructureReport<T> {
    pub fn is_almost_hermitian(&self) -> bool {
        [&self.j_squared, &self.isometry, &self.compatibility]
            .iter()
            .all(|m| m.iter().flatten().all(Ring::is_zero))
    }

    pub fn is_almost_kahler(&self) -> bool {
        self.is_almost_hermitian() && self.d_omega.is_zero()
    }
}

impl<T: Scalar> StructureReport<T> {
    /// Max-abs residuals `(J², isometry, compatibility, dΩ)`.
    pub fn norms(&self) -> [T; 4] {
        [
            max_abs(self.j_squared.iter().flatten()),
            max_abs(self.isometry.iter().flatten()),
            max_abs(self.compatibility.iter().flatten()),
            max_abs(self.d_omega.coeffs.iter()),
        ]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Nijenhuis<T> {
    /// `tensor[x][y][k]`: `e^k` component of `N(e_x, e_y)`.
    pub tensor: Tensor3<T>,
    pub is_integrable: bool,
}

impl<T: Scalar> Nijenhuis<T> {
    pub fn max_abs(&self) -> T {
        max_abs(self.tensor.iter().flatten().flatten())
    }
}

/// `N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y]` without the Jacobi check.
pub fn nijenhuis_formal<T: Ring>(alg: &LieAlgebra4<T>, j: &Mat4<T>) -> Tensor3<T> {
    let col = |i: usize| -> Vec4<T> { array::from_fn(|k| j[k][i].clone()) };
    let values: [[Vec4<T>; 4]; 4] = array::from_fn(|x| {
        array::from_fn(|y| {
            let (ex, ey) = (linalg::basis_vector::<T>(x), linalg::basis_vector::<T>(y));
            let (jx, jy) = (col(x), col(y));
            let a = alg.bracket(&jx, &jy);
            let b = linalg::mat_vec(j, &alg.bracket(&jx, &ey));
            let c = linalg::mat_vec(j, &alg.bracket(&ex, &jy));
            let d = alg.bracket(&ex, &ey);
            array::from_fn(|k| a[k].clone() - b[k].clone() - c[k].clone() - d[k].clone())
        })
    });
    tensor3(|x, y, k| values[x][y][k].clone())
}

pub fn nijenhuis<T: Ring>(alg: &LieAlgebra4<T>, j: &Mat4<T>) -> Result<Nijenhuis<T>, Error> {
    let defect = alg.jacobi_defect();
    if !defect.is_zero() {
        return Err(Error::JacobiFailure(defect.violations));
    }
    let tensor = nijenhuis_formal(alg, j);
    let is_integrable = tensor.iter().flatten().flatten().all(Ring::is_zero);
    Ok(Nijenhuis { tensor, is_integrable })
}

/// The six scalar conditions for J-invariance of `ρ` under the standard `J`:
/// `ρ₁₁-ρ₂₂, ρ₁₂, ρ₁₃-ρ₂₄, ρ₁₄+ρ₂₃, ρ₃₃-ρ₄₄, ρ₃₄`.
pub fn ricci_conditions<T: Ring>(ricci: &Mat4<T>) -> [T; 6] {
    let r = |a: usize, b: usize| ricci[a][b].clone();
    [
        r(0, 0) - r(1, 1),
        r(0, 1),
        r(0, 2) - r(1, 3),
        r(0, 3) + r(1, 2),
        r(2, 2) - r(3, 3),
        r(2, 3),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct RicciInvariance<T> {
    /// `ρ(JX, JY) - ρ(X, Y)`
    pub residual: Mat4<T>,
    pub conditions: [T; 6],
    /// `½(ρ + ρ(J·,J·))`
    pub invariant: Mat4<T>,
    /// `½(ρ - ρ(J·,J·))`
    pub anti: Mat4<T>,
}

impl<T: Ring> RicciInvariance<T> {
    pub fn holds(&self) -> bool {
        self.residual.iter().flatten().all(Ring::is_zero)
    }
}

fn mat6<T>(f: impl Fn(usize, usize) -> T) -> Mat6<T> {
    array::from_fn(|a| array::from_fn(|b| f(a, b)))
}

fn mul6<T: Ring>(a: &Mat6<T>, b: &Mat6<T>) -> Mat6<T> {
    mat6(|i, j| (0..6).fold(T::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
}

fn add6<T: Ring>(a: &Mat6<T>, b: &Mat6<T>) -> Mat6<T> {
    mat6(|i, j| a[i][j].clone() + b[i][j].clone())
}

fn sub6<T: Ring>(a: &Mat6<T>, b: &Mat6<T>) -> Mat6<T> {
    mat6(|i, j| a[i][j].clone() - b[i][j].clone())
}

fn scale6<T: Ring>(a: &Mat6<T>, s: &T) -> Mat6<T> {
    mat6(|i, j| a[i][j].clone() * s.clone())
}

fn trace6<T: Ring>(a: &Mat6<T>) -> T {
    (0..6).fold(T::zero(), |acc, i| acc + a[i][i].clone())
}

fn frobenius6<T: Ring>(a: &Mat6<T>, b: &Mat6<T>) -> T {
    (0..6).fold(T::zero(), |acc, i| (0..6).fold(acc, |acc, j| acc + a[i][j].clone() * b[i][j].clone()))
}

fn identity6<T: Ring>() -> Mat6<T> {
    mat6(|i, j| if i == j { T::one() } else { T::zero() })
}

/// Self-dual and anti-self-dual bases `σ = (e¹²+e³⁴, e¹³-e²⁴, e¹⁴+e²³)`,
/// `τ = (e¹²-e³⁴, e¹³+e²⁴, e¹⁴-e²³)` for the positive orientation; all
/// have squared norm 2.
fn sd_basis<T: Ring>(o: Orientation) -> ([TwoForm<T>; 3], [TwoForm<T>; 3]) {
    let b = |i, j| TwoForm::<T>::basis(i, j);
    let plus = [b(0, 1) + b(2, 3), b(0, 2) - b(1, 3), b(0, 3) + b(1, 2)];
    let minus = [b(0, 1) - b(2, 3), b(0, 2) + b(1, 3), b(0, 3) - b(1, 2)];
    match o {
        Orientation::Positive => (plus, minus),
        Orientation::Negative => (minus, plus),
    }
}

/// `⟨σ_a, M σ_b⟩ / 2` for the orthogonal bases of norm² 2.
fn block3<T: Ring>(m: &Mat6<T>, basis: &[TwoForm<T>; 3]) -> Mat3<T> {
    let half = T::half();
    array::from_fn(|a| {
        array::from_fn(|b| {
            let mut acc = T::zero();
            for i in 0..6 {
                for k in 0..6 {
                    acc = acc + basis[a].coeffs[i].clone() * m[i][k].clone() * basis[b].coeffs[k].clone();
                }
            }
            acc * half.clone()
        })
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeylBlocks<T> {
    /// The curvature operator on Λ² in the basis `(e¹², …, e³⁴)`.
    pub curvature_operator: Mat6<T>,
    /// `s / 12`
    pub scal_part: T,
    /// Kulkarni–Nomizu extension of the traceless Ricci tensor, `½ ρ₀ ⊙ g`.
    pub ricci0_kn: Mat6<T>,
    /// `W⁺` and `W⁻` as Λ² endomorphisms.
    pub w_plus_op: Mat6<T>,
    pub w_minus_op: Mat6<T>,
    /// `W^±` in the bases `σ`, `τ`.
    pub w_plus: Mat3<T>,
    pub w_minus: Mat3<T>,
    /// Coefficient of `⅛ Ω⊗Ω - 1/12 Id|Λ⁺` in `W⁺`.
    pub w1: T,
    /// Part of `W⁺` exchanging `ℝΩ` and its orthogonal complement in Λ⁺.
    pub w2: Mat3<T>,
    /// Traceless part of `W⁺` on the complement of `ℝΩ`.
    pub w3: Mat3<T>,
    /// `W⁺ - w1·E₁ - W₂ - W₃` as an operator (must vanish).
    pub w1_defect: Mat6<T>,
}

impl<T: Ring> WeylBlocks<T> {
    /// `R - (s/12·Id + ρ̃₀ + W⁺ + W⁻)`.
    pub fn reassembly_residual(&self) -> Mat6<T> {
        let id = identity6::<T>();
        let model = add6(&add6(&scale6(&id, &self.scal_part), &self.ricci0_kn), &add6(&self.w_plus_op, &self.w_minus_op));
        sub6(&self.curvature_operator, &model)
    }

    pub fn w2_vanishes(&self) -> bool {
        self.w2.iter().flatten().all(Ring::is_zero)
    }

    pub fn w3_vanishes(&self) -> bool {
        self.w3.iter().flatten().all(Ring::is_zero)
    }
}

/// Splits the curvature operator of an orthonormal frame.
pub fn weyl_decompose<T: Ring>(curv: &CurvatureData<T>, omega: &TwoForm<T>, o: Orientation) -> WeylBlocks<T> {
    let r = &curv.riem;
    let op = mat6(|a, b| {
        let (i, j) = PAIRS[a];
        let (k, l) = PAIRS[b];
        r[i][j][k][l].clone()
    });
    let scal_part = curv.scal.clone() * T::from_rational(&rat(1, 12));
    let quarter_s = curv.scal.clone() * T::from_rational(&rat(1, 4));
    let rho0: Mat4<T> = array::from_fn(|a| {
        array::from_fn(|b| curv.ricci[a][b].clone() - if a == b { quarter_s.clone() } else { T::zero() })
    });
    let delta = |a: usize, b: usize| if a == b { T::one() } else { T::zero() };
    let half = T::half();
    let ricci0_kn = mat6(|a, b| {
        let (i, j) = PAIRS[a];
        let (k, l) = PAIRS[b];
        (rho0[i][k].clone() * delta(j, l) + rho0[j][l].clone() * delta(i, k)
            - rho0[i][l].clone() * delta(j, k)
            - rho0[j][k].clone() * delta(i, l))
            * half.clone()
    });
    let weyl = sub6(&sub6(&op, &scale6(&identity6(), &scal_part)), &ricci0_kn);

    let star = exterior::star_matrix::<T>(o);
    let p_plus = scale6(&add6(&identity6(), &star), &half);
    let p_minus = scale6(&sub6(&identity6(), &star), &half);
    let w_plus_op = mul6(&mul6(&p_plus, &weyl), &p_plus);
    let w_minus_op = mul6(&mul6(&p_minus, &weyl), &p_minus);

    // A compatible Ω in an orthonormal frame has |Ω|² = 2, so P_Ω = ½ΩΩᵀ.
    let outer = mat6(|a, b| omega.coeffs[a].clone() * omega.coeffs[b].clone());
    let p_omega = scale6(&outer, &half);
    let q = sub6(&p_plus, &p_omega);
    let w2_op = add6(&mul6(&mul6(&p_omega, &w_plus_op), &q), &mul6(&mul6(&q, &w_plus_op), &p_omega));
    let qwq = mul6(&mul6(&q, &w_plus_op), &q);
    let w3_op = sub6(&qwq, &scale6(&q, &(trace6(&qwq) * half.clone())));
    let w1_part = sub6(&sub6(&w_plus_op, &w2_op), &w3_op);
    let e1 = sub6(&scale6(&outer, &T::from_rational(&rat(1, 8))), &scale6(&p_plus, &T::from_rational(&rat(1, 12))));
    // <E1, E1> = 1/24
    let w1 = frobenius6(&w1_part, &e1) * T::from_i64(24);
    let w1_defect = sub6(&w1_part, &scale6(&e1, &w1));

    let (sigma, tau) = sd_basis::<T>(o);
    WeylBlocks {
        curvature_operator: op,
        scal_part,
        ricci0_kn,
        w_plus: block3(&w_plus_op, &sigma),
        w_minus: block3(&w_minus_op, &tau),
        w2: block3(&w2_op, &sigma),
        w3: block3(&w3_op, &sigma),
        w_plus_op,
        w_minus_op,
        w1,
        w1_defect,
    }
}

/// Contract `J` into the selected slots of a 4-tensor: slot `s` of the
/// result evaluates its argument `x` as `J x`.
pub fn apply_j<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>, slots: [bool; 4]) -> Tensor4<T> {
    let mut cur = r.clone();
    for (s, &on) in slots.iter().enumerate() {
        if !on {
            continue;
        }
        let prev = cur.clone();
        cur = tensor4(|a, b, c, d| {
            let idx = [a, b, c, d];
            (0..4).fold(T::zero(), |acc, m| {
                let jm = j[m][idx[s]].clone();
                if jm.is_zero() {
                    return acc;
                }
                let mut k = idx;
                k[s] = m;
                acc + jm * prev[k[0]][k[1]][k[2]][k[3]].clone()
            })
        });
    }
    cur
}

fn t4_add<T: Ring>(a: &Tensor4<T>, b: &Tensor4<T>) -> Tensor4<T> {
    tensor4(|i, j, k, l| a[i][j][k][l].clone() + b[i][j][k][l].clone())
}

fn t4_sub<T: Ring>(a: &Tensor4<T>, b: &Tensor4<T>) -> Tensor4<T> {
    tensor4(|i, j, k, l| a[i][j][k][l].clone() - b[i][j][k][l].clone())
}

fn t4_scale<T: Ring>(a: &Tensor4<T>, s: &T) -> Tensor4<T> {
    tensor4(|i, j, k, l| a[i][j][k][l].clone() * s.clone())
}

/// `(L₃R)(x,y,z,w) = R(Jx,Jy,Jz,Jw)`.
pub fn l3<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>) -> Tensor4<T> {
    apply_j(r, j, [true; 4])
}

/// `(L₂R) = ½[R + R(Jx,Jy,z,w) + R(Jx,y,Jz,w) + R(Jx,y,z,Jw)]`.
pub fn l2<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>) -> Tensor4<T> {
    let a = apply_j(r, j, [true, true, false, false]);
    let b = apply_j(r, j, [true, false, true, false]);
    let c = apply_j(r, j, [true, false, false, true]);
    t4_scale(&t4_add(&t4_add(r, &a), &t4_add(&b, &c)), &T::half())
}

/// `ρ*(R)(x,y) = Σ R(x, e_a, Jy, Je_b) g^{ab}`.
pub fn rho_star<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>, g_inv: &Mat4<T>) -> Mat4<T> {
    let rj = apply_j(r, j, [false, false, true, true]);
    array::from_fn(|x| {
        array::from_fn(|y| {
            let mut acc = T::zero();
            for a in 0..4 {
                for b in 0..4 {
                    if !g_inv[a][b].is_zero() {
                        acc = acc + g_inv[a][b].clone() * rj[x][a][y][b].clone();
                    }
                }
            }
            acc
        })
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrayOperators<T> {
    pub rho_star: Mat4<T>,
    pub l2: Tensor4<T>,
    pub l3: Tensor4<T>,
    /// `ρ*(R - L₃R)`; vanishes iff `W₂⁺ = 0` (given J-invariant Ricci).
    pub w2_criterion: Mat4<T>,
    /// `¼(I - L₂)(I + L₃)R`; vanishes iff `W₃⁺ = 0`.
    pub w3_criterion: Tensor4<T>,
}

impl<T: Ring> GrayOperators<T> {
    pub fn w2_criterion_vanishes(&self) -> bool {
        self.w2_criterion.iter().flatten().all(Ring::is_zero)
    }

    pub fn w3_criterion_vanishes(&self) -> bool {
        self.w3_criterion.iter().flatten().flatten().flatten().all(Ring::is_zero)
    }
}

pub fn gray_operators<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>, g_inv: &Mat4<T>) -> GrayOperators<T> {
    let l3r = l3(r, j);
    let l2r = l2(r, j);
    let w2_criterion = rho_star(&t4_sub(r, &l3r), j, g_inv);
    let s = t4_add(r, &l3r);
    let w3_criterion = t4_scale(&t4_sub(&s, &l2(&s, j)), &T::from_rational(&rat(1, 4)));
    GrayOperators { rho_star: rho_star(r, j, g_inv), l2: l2r, l3: l3r, w2_criterion, w3_criterion }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrayConditions<T> {
    /// `R_{XYZW} - R_{XYJZJW}`
    pub g1: Tensor4<T>,
    /// `R_{XYZW} - R_{JXJYZW} - R_{JXYJZW} - R_{JXYZJW}`
    pub g2: Tensor4<T>,
    /// `R_{XYZW} - R_{JXJYJZJW}`
    pub g3: Tensor4<T>,
}

impl<T: Ring> GrayConditions<T> {
    /// Which of (G1), (G2), (G3) hold exactly.
    pub fn holds(&self) -> [bool; 3] {
        [&self.g1, &self.g2, &self.g3].map(|t| t.iter().flatten().flatten().flatten().all(Ring::is_zero))
    }
}

impl<T: Scalar> GrayConditions<T> {
    pub fn norms(&self) -> [T; 3] {
        [&self.g1, &self.g2, &self.g3].map(|t| max_abs(t.iter().flatten().flatten().flatten()))
    }
}

pub fn gray_conditions<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>) -> GrayConditions<T> {
    let g1 = t4_sub(r, &apply_j(r, j, [false, false, true, true]));
    let a = apply_j(r, j, [true, true, false, false]);
    let b = apply_j(r, j, [true, false, true, false]);
    let c = apply_j(r, j, [true, false, false, true]);
    let g2 = t4_sub(&t4_sub(&t4_sub(r, &a), &b), &c);
    let g3 = t4_sub(r, &l3(r, j));
    GrayConditions { g1, g2, g3 }
}

/// True when `L₃` applied twice returns the input on every entry.
pub fn l3_is_involutive<T: Ring>(r: &Tensor4<T>, j: &Mat4<T>) -> bool {
    let twice = l3(&l3(r, j), j);
    all_quadruples().all(|(a, b, c, d)| twice[a][b][c][d] == r[a][b][c][d])
}
