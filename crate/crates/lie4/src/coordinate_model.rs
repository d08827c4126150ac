//! Finite-difference curvature of metrics given in coordinates on ℝ⁴.
//!
//! This is an independent floating-point check of the algebraic pipeline:
//! Christoffel symbols come from fourth-order central differences of the
//! metric, curvature from fourth-order differences of the Christoffel
//! symbols, and every evaluation is repeated at half the step so that the
//! caller can see whether the differences have converged.

use nalgebra::{Cholesky, Matrix4, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub type Point = [f64; 4];
pub type Christoffel = [[[f64; 4]; 4]; 4];

pub const DEFAULT_STEP: f64 = 1e-3;
pub const SYMMETRY_TOL: f64 = 1e-7;
pub const RICHARDSON_TOL: f64 = 1e-6;
pub const SAMPLE_BOX: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("lambda must be positive, got {0}")]
    NonPositiveLambda(f64),
    #[error("step must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("metric is not positive definite at {0:?}")]
    NotPositiveDefinite(Point),
    #[error("finite differences did not converge at {point:?}: relative change {change:e} with step {step}")]
    NotConverged { point: Point, step: f64, change: f64 },
    #[error("Ricci tensor not symmetric at {point:?}: defect {defect:e}")]
    AsymmetricRicci { point: Point, defect: f64 },
    #[error("the family needs t != 0")]
    ZeroT,
    #[error("no lambda in [{lo}, {hi}] matches the target eigenvalue {target}")]
    NoMatchingLambda { lo: f64, hi: f64, target: f64 },
}

/// A Riemannian metric on (an open subset of) ℝ⁴ in fixed coordinates.
pub trait CoordinateMetric: Sync {
    fn metric_at(&self, p: &Point) -> Matrix4<f64>;
}

/// The homogeneous metric in coordinates `(u, v, x, y)`:
///
/// `g = (√(1+x²+y²) - x) du² + (√(1+x²+y²) + x) dv² - 2y du dv
///      + λ² / (1+x²+y²) · [(1+y²) dx² + (1+x²) dy² - 2xy dx dy]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KowalskiMetric {
    lambda: f64,
}

impl KowalskiMetric {
    pub fn new(lambda: f64) -> Result<Self, ModelError> {
        if lambda > 0.0 && lambda.is_finite() {
            Ok(KowalskiMetric { lambda })
        } else {
            Err(ModelError::NonPositiveLambda(lambda))
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

impl CoordinateMetric for KowalskiMetric {
    fn metric_at(&self, p: &Point) -> Matrix4<f64> {
        let [_, _, x, y] = *p;
        let r2 = 1.0 + x * x + y * y;
        let root = r2.sqrt();
        let l2 = self.lambda * self.lambda / r2;
        Matrix4::new(
            root - x, -y, 0.0, 0.0,
            -y, root + x, 0.0, 0.0,
            0.0, 0.0, l2 * (1.0 + y * y), -l2 * x * y,
            0.0, 0.0, -l2 * x * y, l2 * (1.0 + x * x),
        )
    }
}

/// `g` evaluated from the closed form.
pub fn metric_at(p: &Point, lambda: f64) -> Result<Matrix4<f64>, ModelError> {
    Ok(KowalskiMetric::new(lambda)?.metric_at(p))
}

/// The Euclidean metric.
#[derive(Debug, Clone, Copy, Default)]
pub struct FlatMetric;

impl CoordinateMetric for FlatMetric {
    fn metric_at(&self, _p: &Point) -> Matrix4<f64> {
        Matrix4::identity()
    }
}

/// Product of round 2-spheres of radii `r1`, `r2` in polar coordinates
/// `(θ₁, φ₁, θ₂, φ₂)`; its Ricci tensor is `diag(1, sin²θ₁, 1, sin²θ₂)`.
#[derive(Debug, Clone, Copy)]
pub struct SphereProduct {
    pub r1: f64,
    pub r2: f64,
}

impl CoordinateMetric for SphereProduct {
    fn metric_at(&self, p: &Point) -> Matrix4<f64> {
        let (s1, s2) = (p[0].sin(), p[2].sin());
        let (q1, q2) = (self.r1 * self.r1, self.r2 * self.r2);
        Matrix4::from_diagonal(&nalgebra::Vector4::new(q1, q1 * s1 * s1, q2, q2 * s2 * s2))
    }
}

impl SphereProduct {
    pub fn exact_ricci(&self, p: &Point) -> Matrix4<f64> {
        let (s1, s2) = (p[0].sin(), p[2].sin());
        Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, s1 * s1, 1.0, s2 * s2))
    }

    pub fn exact_scal(&self) -> f64 {
        2.0 / (self.r1 * self.r1) + 2.0 / (self.r2 * self.r2)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub point: Point,
    pub metric: [[f64; 4]; 4],
    /// `christoffel[k][i][j] = Γ^k_{ij}`.
    pub christoffel: Christoffel,
    pub ricci: [[f64; 4]; 4],
    /// Eigenvalues of the Ricci endomorphism `g⁻¹ρ`, ascending.
    pub ricci_eigenvalues: [f64; 4],
    pub scal: f64,
    /// Largest relative change of the Ricci tensor between steps `h` and `h/2`.
    pub richardson_change: f64,
}

fn shifted(p: &Point, axis: usize, delta: f64) -> Point {
    let mut q = *p;
    q[axis] += delta;
    q
}

/// Fourth-order central difference of a vector-valued function along one axis.
fn derivative<const N: usize>(mut f: impl FnMut(&Point) -> [f64; N], p: &Point, axis: usize, h: f64) -> [f64; N] {
    let (fp2, fp1) = (f(&shifted(p, axis, 2.0 * h)), f(&shifted(p, axis, h)));
    let (fm1, fm2) = (f(&shifted(p, axis, -h)), f(&shifted(p, axis, -2.0 * h)));
    std::array::from_fn(|n| (-fp2[n] + 8.0 * fp1[n] - 8.0 * fm1[n] + fm2[n]) / (12.0 * h))
}

fn flatten4(m: &Matrix4<f64>) -> [f64; 16] {
    std::array::from_fn(|n| m[(n / 4, n % 4)])
}

fn inverse(m: &Matrix4<f64>, p: &Point) -> Result<Matrix4<f64>, ModelError> {
    Cholesky::new(*m).map(|c| c.inverse()).ok_or(ModelError::NotPositiveDefinite(*p))
}

/// `Γ^k_{ij} = ½ g^{kl}(∂_i g_{jl} + ∂_j g_{il} - ∂_l g_{ij})`.
pub fn christoffel<M: CoordinateMetric + ?Sized>(m: &M, p: &Point, h: f64) -> Result<Christoffel, ModelError> {
    let g_inv = inverse(&m.metric_at(p), p)?;
    let dg: [[f64; 16]; 4] = std::array::from_fn(|a| derivative(|q| flatten4(&m.metric_at(q)), p, a, h));
    let d = |a: usize, i: usize, j: usize| dg[a][4 * i + j];
    Ok(std::array::from_fn(|k| {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                0.5 * (0..4).map(|l| g_inv[(k, l)] * (d(i, j, l) + d(j, i, l) - d(l, i, j))).sum::<f64>()
            })
        })
    }))
}

fn flat_gamma(g: &Christoffel) -> [f64; 64] {
    std::array::from_fn(|n| g[n / 16][(n / 4) % 4][n % 4])
}

/// Ricci tensor `ρ_{bd} = R^a_{bad}` with
/// `R^a_{bcd} = ∂_c Γ^a_{db} - ∂_d Γ^a_{cb} + Γ^a_{ce}Γ^e_{db} - Γ^a_{de}Γ^e_{cb}`.
fn ricci_at<M: CoordinateMetric + ?Sized>(m: &M, p: &Point, h: f64) -> Result<(Christoffel, Matrix4<f64>), ModelError> {
    let gamma = christoffel(m, p, h)?;
    let mut dgamma = [[0.0; 64]; 4];
    for (axis, slot) in dgamma.iter_mut().enumerate() {
        let mut failure = None;
        *slot = derivative(
            |q| match christoffel(m, q, h) {
                Ok(g) => flat_gamma(&g),
                Err(e) => {
                    failure.get_or_insert(e);
                    [f64::NAN; 64]
                }
            },
            p,
            axis,
            h,
        );
        if let Some(e) = failure {
            return Err(e);
        }
    }
    let dg = |c: usize, a: usize, i: usize, j: usize| dgamma[c][16 * a + 4 * i + j];
    let riem = |a: usize, b: usize, c: usize, d: usize| {
        dg(c, a, d, b) - dg(d, a, c, b)
            + (0..4).map(|e| gamma[a][c][e] * gamma[e][d][b] - gamma[a][d][e] * gamma[e][c][b]).sum::<f64>()
    };
    let ricci = Matrix4::from_fn(|b, d| (0..4).map(|a| riem(a, b, a, d)).sum());
    Ok((gamma, ricci))
}

fn to_array(m: &Matrix4<f64>) -> [[f64; 4]; 4] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)]))
}

/// Eigenvalues of `g⁻¹ρ`, computed as those of `L⁻¹ ρ L⁻ᵀ` with `g = LLᵀ`.
pub fn ricci_eigenvalues(g: &Matrix4<f64>, ricci: &Matrix4<f64>) -> Option<[f64; 4]> {
    let l = Cholesky::new(*g)?.l();
    let l_inv = l.try_inverse()?;
    let s = l_inv * ricci * l_inv.transpose();
    let sym = 0.5 * (s + s.transpose());
    let mut ev: [f64; 4] = SymmetricEigen::new(sym).eigenvalues.into();
    ev.sort_by(f64::total_cmp);
    Some(ev)
}

/// Curvature at `p` with step `h`, checked against the step `h/2`.
pub fn ricci_fd<M: CoordinateMetric + ?Sized>(m: &M, p: &Point, h: f64) -> Result<PointReport, ModelError> {
    if h.is_nan() || h <= 0.0 {
        return Err(ModelError::NonPositiveStep(h));
    }
    let g = m.metric_at(p);
    let g_inv = inverse(&g, p)?;
    let (gamma, ricci) = ricci_at(m, p, h)?;
    let (_, fine) = ricci_at(m, p, h / 2.0)?;
    let scale = ricci.amax().max(1.0);
    let change = (ricci - fine).amax() / scale;
    if change.is_nan() || change >= RICHARDSON_TOL {
        return Err(ModelError::NotConverged { point: *p, step: h, change });
    }
    let defect = (ricci - ricci.transpose()).amax();
    if defect.is_nan() || defect >= SYMMETRY_TOL * scale {
        return Err(ModelError::AsymmetricRicci { point: *p, defect });
    }
    let ricci = 0.5 * (fine + fine.transpose());
    let ricci_eigenvalues = ricci_eigenvalues(&g, &ricci).ok_or(ModelError::NotPositiveDefinite(*p))?;
    Ok(PointReport {
        point: *p,
        metric: to_array(&g),
        christoffel: gamma,
        ricci: to_array(&ricci),
        ricci_eigenvalues,
        scal: (g_inv.component_mul(&ricci)).sum(),
        richardson_change: change,
    })
}

/// `n` points drawn uniformly from `[-SAMPLE_BOX, SAMPLE_BOX]⁴` with a fixed seed.
pub fn sample_points(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| std::array::from_fn(|_| rng.gen_range(-SAMPLE_BOX..=SAMPLE_BOX))).collect()
}

/// Distance of a sorted eigenvalue list from the shape `{0, 0, r, r}`,
/// together with `r` (the mean of the two largest-magnitude values).
pub fn zero_zero_r_r(ev: &[f64; 4]) -> (f64, f64) {
    let mut by_mag = *ev;
    by_mag.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    let r = 0.5 * (by_mag[2] + by_mag[3]);
    let defect = by_mag[0].abs().max(by_mag[1].abs()).max((by_mag[2] - r).abs()).max((by_mag[3] - r).abs());
    (r, defect)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub lambda: f64,
    pub points: Vec<PointReport>,
    /// Largest relative deviation of `scal` from its value at the origin.
    pub scal_spread: f64,
    pub scal_origin: f64,
    /// Largest deviation from the `{0, 0, r, r}` Ricci spectrum, relative to `|r|`.
    pub pattern_defect: f64,
    pub nonzero_eigenvalue: f64,
    /// `scal² / |ρ|²`, averaged over the points.
    pub ratio: f64,
}

/// `|ρ|² = ρ_{ab}ρ_{cd}g^{ac}g^{bd}`, the sum of squared eigenvalues.
fn ratio(ev: &[f64; 4]) -> f64 {
    let scal: f64 = ev.iter().sum();
    scal * scal / ev.iter().map(|x| x * x).sum::<f64>()
}

/// Curvature at the origin and at the given points, evaluated in parallel.
pub fn sample(m: &KowalskiMetric, points: &[Point], h: f64) -> Result<SampleSummary, ModelError> {
    let origin = ricci_fd(m, &[0.0; 4], h)?;
    let reports = points.par_iter().map(|p| ricci_fd(m, p, h)).collect::<Result<Vec<_>, _>>()?;
    let scal_origin = origin.scal;
    let all = std::iter::once(&origin).chain(&reports);
    let scal_spread = all.clone().map(|r| ((r.scal - scal_origin) / scal_origin).abs()).fold(0.0, f64::max);
    let (r0, _) = zero_zero_r_r(&origin.ricci_eigenvalues);
    let pattern_defect = all
        .clone()
        .map(|rep| {
            let (r, d) = zero_zero_r_r(&rep.ricci_eigenvalues);
            d.max((r - r0).abs()) / r0.abs()
        })
        .fold(0.0, f64::max);
    let count = 1 + reports.len();
    let ratio = all.map(|r| ratio(&r.ricci_eigenvalues)).sum::<f64>() / count as f64;
    Ok(SampleSummary {
        lambda: m.lambda(),
        points: reports,
        scal_spread,
        scal_origin,
        pattern_defect,
        nonzero_eigenvalue: r0,
        ratio,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub s: f64,
    pub t: f64,
    pub family_eigenvalues: [f64; 4],
    pub family_ratio: f64,
    pub family_pattern_defect: f64,
    /// The λ whose nonzero Ricci eigenvalue matches the family's.
    pub lambda: f64,
    pub coordinate: SampleSummary,
    pub ratio_defect: f64,
    pub eigenvalue_defect: f64,
}

impl CrossValidation {
    pub fn agrees(&self, tol: f64) -> bool {
        self.ratio_defect <= tol
            && self.eigenvalue_defect <= tol
            && self.family_pattern_defect <= tol
            && self.coordinate.pattern_defect <= tol
    }
}

pub const LAMBDA_SCAN: (f64, f64) = (1.0 / 1024.0, 1024.0);

/// Finds λ with the coordinate metric's nonzero Ricci eigenvalue (at the
/// origin) equal to the algebraic family's: doubling or halving from λ = 1
/// until the target is bracketed inside [`LAMBDA_SCAN`], then bisecting in
/// `log λ`. The homothety invariants are compared at that λ.
pub fn cross_validate(s: f64, t: f64, points: &[Point], h: f64) -> Result<CrossValidation, ModelError> {
    use lie4_core::classification::ansatz::family;
    use lie4_core::MetricLieAlgebra;

    let alg = family(s, t).map_err(|_| ModelError::ZeroT)?;
    let curv = MetricLieAlgebra::orthonormal(alg).curvature_formal();
    let rho = Matrix4::from_fn(|i, j| curv.ricci[i][j]);
    let family_eigenvalues = ricci_eigenvalues(&Matrix4::identity(), &rho).expect("identity metric");
    let (target, family_pattern_defect) = zero_zero_r_r(&family_eigenvalues);
    let family_pattern_defect = family_pattern_defect / target.abs();

    let miss = |log_lambda: f64| -> Result<f64, ModelError> {
        let rep = ricci_fd(&KowalskiMetric::new(log_lambda.exp())?, &[0.0; 4], h)?;
        Ok((zero_zero_r_r(&rep.ricci_eigenvalues).0 / target).ln())
    };
    let (lo, hi) = LAMBDA_SCAN;
    let no_match = ModelError::NoMatchingLambda { lo, hi, target };
    let f0 = miss(0.0)?;
    let dir = if f0 > 0.0 { 1.0 } else { -1.0 };
    let (mut a, mut b) = (0.0, 0.0);
    loop {
        b += dir * std::f64::consts::LN_2;
        if b < lo.ln() - 1e-12 || b > hi.ln() + 1e-12 {
            return Err(no_match);
        }
        if miss(b)?.signum() != f0.signum() {
            break;
        }
        a = b;
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if miss(mid)?.signum() == f0.signum() {
            a = mid;
        } else {
            b = mid;
        }
        if (b - a).abs() < 1e-13 {
            break;
        }
    }
    let lambda = (0.5 * (a + b)).exp();
    let coordinate = sample(&KowalskiMetric::new(lambda)?, points, h)?;
    let family_ratio = ratio(&family_eigenvalues);
    Ok(CrossValidation {
        s,
        t,
        family_eigenvalues,
        family_ratio,
        family_pattern_defect,
        lambda,
        ratio_defect: (coordinate.ratio - family_ratio).abs() / family_ratio,
        eigenvalue_defect: ((coordinate.nonzero_eigenvalue - target) / target).abs(),
        coordinate,
    })
}
