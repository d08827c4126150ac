//! The subcommands, as library functions returning reports.

use std::io::Write;

use lie4_core::classification::ansatz::{self, family, g49, r2sol2};
use lie4_core::classification::branches::{self, verify_branch, LISTED_INTEGRABLE};
use lie4_core::classification::conditions::derive_conditions;
use lie4_core::classification::isomorphism::{g49_vs_r2sol2, IsomorphismCertificate};
use lie4_core::classification::kahler_einstein::never_einstein;
use lie4_core::classification::normalize::normalize_to_g49;
use lie4_core::classification::reductions::{verify_corrected_reductions, verify_reductions, ReductionCertificate};
use lie4_core::exterior::TwoForm;
use lie4_core::hermitian::{nijenhuis_formal, standard_j};
use lie4_core::lie::{CurvatureData, JacobiDefect};
use lie4_core::linalg::{self, Mat4};
use lie4_core::scalar::max_abs;
use lie4_core::{AlmostHermitian4, Error, LieAlgebra4, MetricLieAlgebra, Rational, Ring, Scalar};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coordinate_model::{self, KowalskiMetric, ModelError};
use crate::report::{matrix, Emit, Report};
use crate::spec_file::{parse_rational, AlgebraSpecFile, SpecError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_JACOBI: i32 = 3;
pub const EXIT_ZERO_T: i32 = 4;

/// Residuals below this count as zero on the floating-point backend.
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("t must be nonzero")]
    ZeroT,
    #[error("branch must be 'all' or an id in 1..=17, got {0:?}")]
    BranchRange(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Spec(_) | CliError::BranchRange(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(Error::NotPositiveDefinite | Error::Singular) => EXIT_USAGE,
            CliError::Model(ModelError::NonPositiveLambda(_) | ModelError::NonPositiveStep(_)) => EXIT_USAGE,
            CliError::ZeroT | CliError::Core(Error::ZeroT) | CliError::Model(ModelError::ZeroT) => EXIT_ZERO_T,
            CliError::Core(Error::JacobiFailure(_)) => EXIT_JACOBI,
            _ => EXIT_FAIL,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub exit: i32,
}

impl Outcome {
    fn from_report(report: Report) -> Self {
        let exit = if report.ok { EXIT_OK } else { EXIT_FAIL };
        Outcome { report, exit }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Backend {
    Exact,
    Float,
}

/// Properties `check` can be asked to enforce on top of the almost Kähler
/// structure equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Property {
    Integrable,
    RicciJInvariant,
    G1,
    G2,
    G3,
    W2,
    W3,
}

fn zero<T: Scalar>(x: &T, tol: f64) -> bool {
    x.is_negligible(tol)
}

fn jacobi_violations<T: Scalar>(d: &JacobiDefect<T>, tol: f64) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                if d.residual[i][j][k].iter().any(|x| !zero(x, tol)) {
                    out.push([i + 1, j + 1, k + 1]);
                }
            }
        }
    }
    out
}

/// Nonzero `R_{ijkl}` with `i<j`, `k<l`, `(i,j) ≤ (k,l)`, keyed `"R1234"`.
pub fn curvature_components<T: Scalar + Emit>(curv: &CurvatureData<T>, tol: f64) -> Value {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut out = serde_json::Map::new();
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[p..] {
            let r = curv.r(i, j, k, l);
            if !zero(&r, tol) {
                out.insert(format!("R{}{}{}{}", i + 1, j + 1, k + 1, l + 1), r.emit());
            }
        }
    }
    Value::Object(out)
}

/// `de^k` as text, e.g. `de3 = 5/2 e3∧e4`.
pub fn coframe_lines(alg: &LieAlgebra4<Rational>, name: &str) -> Vec<String> {
    let pairs = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    alg.to_coframe()
        .d
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let terms: Vec<String> = w
                .coeffs
                .iter()
                .zip(pairs)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, (i, j))| format!("{c} {name}{i}∧{name}{j}"))
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ").replace("+ -", "- ") };
            format!("d{name}{} = {rhs}", k + 1)
        })
        .collect()
}

fn coframe_value(alg: &LieAlgebra4<Rational>) -> Value {
    Value::Array(alg.to_coframe().d.iter().map(|w| w.coeffs.emit()).collect())
}

fn solvability_value(alg: &LieAlgebra4<Rational>) -> Value {
    match alg.solvability_profile() {
        Ok(p) => json!({
            "derived_series": p.derived_series,
            "solvable": p.is_solvable,
            "commutator_dim": p.commutator_dim,
            "commutator_is_heisenberg": p.commutator_is_heisenberg,
        }),
        Err(e) => Value::String(e.to_string()),
    }
}

pub fn cmd_check(src: &str, backend: Backend, require: &[Property]) -> Result<Outcome, CliError> {
    let spec = AlgebraSpecFile::from_json(src)?.parse()?;
    if !require.is_empty() && spec.j.is_none() && spec.omega.is_none() {
        return Err(CliError::Usage("--require needs J or omega in the spec file".into()));
    }
    let g_inv = linalg::inverse(&spec.metric)?;
    let j = spec.j.clone().or_else(|| {
        spec.omega.as_ref().map(|w| linalg::scale(&linalg::mat_mul(&g_inv, &w.to_matrix()), &-Rational::one()))
    });
    let omega = spec.omega.clone().or_else(|| {
        j.as_ref().map(|j| TwoForm::from_matrix(&linalg::mat_mul(&linalg::transpose(j), &spec.metric)))
    });
    let structure = j.zip(omega);
    let mut report = match backend {
        Backend::Exact => check_with::<Rational>(&spec.alg, &spec.metric, structure.as_ref(), 0.0, require)?,
        Backend::Float => check_with::<f64>(&spec.alg, &spec.metric, structure.as_ref(), FLOAT_TOL, require)?,
    };
    let jacobi_ok = report.data["jacobi"]["holds"] == Value::Bool(true);
    if jacobi_ok {
        report.insert("solvability", solvability_value(&spec.alg));
    }
    let exit = if !jacobi_ok {
        EXIT_JACOBI
    } else if report.ok {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    Ok(Outcome { report, exit })
}

fn check_with<T: Scalar + Emit>(
    alg_q: &LieAlgebra4<Rational>,
    metric_q: &Mat4<Rational>,
    structure: Option<&(Mat4<Rational>, TwoForm<Rational>)>,
    tol: f64,
    require: &[Property],
) -> Result<Report, CliError> {
    let conv = |q: &Rational| T::from_rational(q);
    let alg = alg_q.map(conv);
    let mut rep = Report::new("check");
    rep.insert("backend", if tol == 0.0 { "exact" } else { "float" });
    rep.insert("tolerance", tol);
    rep.insert("coframe_d", coframe_value(alg_q));

    let defect = alg.jacobi_defect();
    let violations = jacobi_violations(&defect, tol);
    rep.insert(
        "jacobi",
        json!({"holds": violations.is_empty(), "max_residual": defect.max_abs().emit(), "violations": violations}),
    );
    if !violations.is_empty() {
        rep.ok = false;
        return Ok(rep);
    }
    let uni = alg.unimodularity();
    rep.insert("ad_traces", uni.traces.emit());
    rep.insert("unimodular", uni.traces.iter().all(|x| zero(x, tol)));

    let m = MetricLieAlgebra::new(alg.clone(), linalg::map(metric_q, conv))?;
    let curv = m.curvature_formal();
    rep.insert(
        "curvature",
        json!({
            "ricci": matrix(&curv.ricci),
            "scal": curv.scal.emit(),
            "components": curvature_components(&curv, tol),
            "symmetries_hold": curv.symmetry_defects().iter().all(|x| zero(x, tol)),
        }),
    );

    let Some((j_q, omega_q)) = structure else {
        return Ok(rep);
    };
    let h = AlmostHermitian4::new(m, linalg::map(j_q, conv), TwoForm::new(omega_q.coeffs.clone().map(|q| conv(&q))));
    let st = h.check_structure().norms();
    let almost_kahler = st.iter().all(|x| zero(x, tol));
    let nij = max_abs(nijenhuis_formal(&h.m.alg, &h.j).iter().flatten().flatten());
    let inv = h.ricci_j_invariance(&curv);
    let inv_norm = max_abs(inv.conditions.iter());
    let gray = h.gray_conditions(&curv).norms();
    let ops = h.gray_operators(&curv);
    let w2_op = max_abs(ops.w2_criterion.iter().flatten());
    let w3_op = max_abs(ops.w3_criterion.iter().flatten().flatten().flatten());
    let weyl = h.weyl_decompose(&curv);
    let (w2_block, w3_block) = match &weyl {
        Ok(b) => (Some(max_abs(b.w2.iter().flatten())), Some(max_abs(b.w3.iter().flatten()))),
        Err(_) => (None, None),
    };
    rep.insert(
        "structure",
        json!({
            "j_squared_plus_identity": st[0].emit(),
            "isometry": st[1].emit(),
            "compatibility": st[2].emit(),
            "d_omega": st[3].emit(),
            "almost_kahler": almost_kahler,
        }),
    );
    rep.insert("nijenhuis", json!({"max_abs": nij.emit(), "integrable": zero(&nij, tol)}));
    rep.insert(
        "ricci_j_invariance",
        json!({"conditions": inv.conditions.emit(), "holds": zero(&inv_norm, tol)}),
    );
    rep.insert(
        "gray",
        json!({
            "g1": gray[0].emit(), "g2": gray[1].emit(), "g3": gray[2].emit(),
            "g1_holds": zero(&gray[0], tol), "g2_holds": zero(&gray[1], tol), "g3_holds": zero(&gray[2], tol),
        }),
    );
    rep.insert(
        "weyl",
        match &weyl {
            Ok(b) => json!({
                "w1": b.w1.emit(),
                "w2": w2_block.as_ref().map(Emit::emit),
                "w3": w3_block.as_ref().map(Emit::emit),
                "w_minus": max_abs(b.w_minus.iter().flatten()).emit(),
                "w2_operator_criterion": w2_op.emit(),
                "w3_operator_criterion": w3_op.emit(),
            }),
            Err(e) => json!({
                "blocks": format!("skipped: {e}"),
                "w2_operator_criterion": w2_op.emit(),
                "w3_operator_criterion": w3_op.emit(),
            }),
        },
    );
    let w2 = zero(&w2_op, tol) && w2_block.as_ref().is_none_or(|x| zero(x, tol));
    let w3 = zero(&w3_op, tol) && w3_block.as_ref().is_none_or(|x| zero(x, tol));
    let failed: Vec<String> = require
        .iter()
        .filter(|p| match p {
            Property::Integrable => !zero(&nij, tol),
            Property::RicciJInvariant => !zero(&inv_norm, tol),
            Property::G1 => !zero(&gray[0], tol),
            Property::G2 => !zero(&gray[1], tol),
            Property::G3 => !zero(&gray[2], tol),
            Property::W2 => !w2,
            Property::W3 => !w3,
        })
        .map(|p| format!("{p:?}"))
        .collect();
    rep.ok = almost_kahler && failed.is_empty();
    rep.insert("failed_requirements", failed);
    Ok(rep)
}

fn rational_arg(name: &str, v: &str) -> Result<Rational, CliError> {
    Ok(parse_rational(name, v)?)
}

pub fn cmd_family(s: &str, t: &str) -> Result<Outcome, CliError> {
    let (s, t) = (rational_arg("s", s)?, rational_arg("t", t)?);
    if t.is_zero() {
        return Err(CliError::ZeroT);
    }
    let alg = family(s.clone(), t.clone())?;
    let h = AlmostHermitian4::standard(alg.clone());
    let curv = h.m.curvature()?;
    let q = s.clone() * s.clone() + t.clone() * t.clone();
    let expected = -Rational::from_i64(3) * q.clone() * q.clone() / (Rational::from_i64(2) * t.clone() * t.clone());
    let nij = h.nijenhuis()?;
    let ricci_inv = h.ricci_j_invariance(&curv).holds();
    let gray = h.gray_conditions(&curv).holds();
    let ops = h.gray_operators(&curv);
    let weyl = h.weyl_decompose(&curv)?;
    let almost_kahler = h.check_structure().is_almost_kahler();
    let witness = never_einstein(s.clone(), t.clone())?;
    let norm = normalize_to_g49(&s, &t)?;
    let expected_ricci = {
        let mut m = linalg::zeros::<Rational>();
        m[2][2] = expected.clone();
        m[3][3] = expected.clone();
        m
    };

    let mut rep = Report::new("family");
    rep.insert("s", s.emit()).insert("t", t.emit());
    rep.insert("coframe", coframe_lines(&alg, "e"));
    rep.insert("ricci", matrix(&curv.ricci));
    rep.insert("ricci33", curv.ricci[2][2].emit());
    rep.insert("expected_ricci33", expected.emit());
    rep.insert("scal", curv.scal.emit());
    rep.insert("curvature_components", curvature_components(&curv, 0.0));
    rep.insert("trace_ad_e4", alg.ad_traces()[3].emit());
    rep.insert("almost_kahler", almost_kahler);
    rep.insert("nijenhuis_norm", nij.max_abs().emit());
    rep.insert("strictly_almost_kahler", almost_kahler && !nij.is_integrable);
    rep.insert("ricci_j_invariant", ricci_inv);
    rep.insert("gray", json!({"g1": gray[0], "g2": gray[1], "g3": gray[2]}));
    rep.insert(
        "weyl",
        json!({
            "w1": weyl.w1.emit(),
            "w2_vanishes": weyl.w2_vanishes(),
            "w3_vanishes": weyl.w3_vanishes(),
            "w2_operator_criterion_vanishes": ops.w2_criterion_vanishes(),
            "w3_operator_criterion_vanishes": ops.w3_criterion_vanishes(),
        }),
    );
    rep.insert("never_einstein_witness", json!({"value": witness.witness.emit(), "expected": witness.expected.emit()}));
    rep.insert(
        "g49_normalization",
        json!({
            "matches_g49": norm.matches_g49,
            "gram_is_scalar": norm.gram_is_scalar(),
            "homothety": norm.homothety.emit(),
            "basis_change": matrix(&norm.basis_change),
        }),
    );
    rep.ok = curv.ricci == expected_ricci
        && almost_kahler
        && !nij.is_integrable
        && ricci_inv
        && gray[1]
        && weyl.w2_vanishes()
        && weyl.w3_vanishes()
        && norm.matches_g49
        && norm.gram_is_scalar();
    Ok(Outcome::from_report(rep))
}

fn reduction_value(r: &ReductionCertificate) -> Value {
    json!({
        "label": r.label,
        "from": r.from,
        "to": r.to,
        "holds": r.holds,
        "is_isometry": r.is_isometry,
        "coframe_change": r.coframe_change.as_ref().map(matrix),
        "identification": r.identification.iter().map(|(v, p)| format!("{} = {}", ansatz::param_name(*v), p.display_with(&ansatz::param_name))).collect::<Vec<_>>(),
        "note": r.note,
    })
}

pub fn parse_branch_selector(sel: &str) -> Result<Option<u8>, CliError> {
    if sel == "all" {
        return Ok(None);
    }
    match sel.parse::<u8>() {
        Ok(id) if (1..=17).contains(&id) => Ok(Some(id)),
        _ => Err(CliError::BranchRange(sel.into())),
    }
}

pub fn cmd_classify(sel: &str) -> Result<Outcome, CliError> {
    let only = parse_branch_selector(sel)?;
    let systems = derive_conditions();
    let reductions = verify_reductions()?;
    let selected: Vec<_> = branches::branches().into_iter().filter(|b| only.is_none_or(|id| b.id == id)).collect();
    let certs = thread_pool()
        .install(|| selected.par_iter().map(|b| verify_branch(b, &systems)).collect::<Result<Vec<_>, _>>())?;
    let certificates: Vec<Value> = certs
        .iter()
        .map(|c| {
            let red = reductions.iter().find(|r| r.from == c.id && r.holds && r.coframe_change.is_some());
            json!({
                "id": c.id,
                "residual_count": c.residual_count(),
                "all_zero": c.all_zero,
                "integrable": c.integrable,
                "listed_integrable": c.listed_integrable,
                "reduction_target": red.map(|r| r.to),
                "basis_change": red.and_then(|r| r.coframe_change.as_ref()).map(matrix),
            })
        })
        .collect();
    let integrable: Vec<u8> = certs.iter().filter(|c| c.integrable).map(|c| c.id).collect();
    let non_integrable: Vec<u8> = certs.iter().filter(|c| !c.integrable).map(|c| c.id).collect();
    let mut rep = Report::new("classify");
    rep.insert("certificates", certificates);
    rep.insert("integrable", integrable);
    rep.insert("non_integrable", non_integrable);
    rep.insert("flags_match_listed", certs.iter().all(|c| c.integrable == c.listed_integrable));
    if only.is_none() {
        rep.insert("listed_integrable", LISTED_INTEGRABLE.to_vec());
        rep.insert("reductions", reductions.iter().map(reduction_value).collect::<Vec<_>>());
        rep.insert(
            "corrected_reductions",
            verify_corrected_reductions()?.iter().map(reduction_value).collect::<Vec<_>>(),
        );
    }
    rep.ok = certs.iter().all(|c| c.all_zero);
    Ok(Outcome::from_report(rep))
}

fn isomorphism_value(c: &IsomorphismCertificate) -> Value {
    json!({
        "holds": c.holds(),
        "map": matrix(&c.map),
        "failures": c.failures,
        "source_derived_series": c.source_series,
        "target_derived_series": c.target_series,
        "traces_correspond": c.traces_correspond,
    })
}

fn algebra_report(command: &str, alg: &LieAlgebra4<Rational>, name: &str) -> Result<Report, CliError> {
    let mut rep = Report::new(command);
    rep.insert("coframe", coframe_lines(alg, name));
    rep.insert("coframe_d", coframe_value(alg));
    rep.insert("solvability", solvability_value(alg));
    rep.insert("ad_traces", alg.ad_traces().emit());
    let curv = MetricLieAlgebra::orthonormal(alg.clone()).curvature()?;
    rep.insert("ricci", matrix(&curv.ricci));
    rep.insert("scal", curv.scal.emit());
    Ok(rep)
}

pub fn cmd_model_g49(alpha: &str) -> Result<Outcome, CliError> {
    let alpha = rational_arg("alpha", alpha)?;
    let alg = g49(alpha.clone());
    let mut rep = algebra_report("model g49", &alg, "f")?;
    rep.insert("alpha", alpha.emit());
    if alpha == Rational::new(1.into(), 2.into()) {
        let iso = g49_vs_r2sol2()?;
        rep.ok = iso.holds();
        rep.insert("isomorphism_to_r2sol2", isomorphism_value(&iso));
    }
    Ok(Outcome::from_report(rep))
}

pub fn cmd_model_r2sol2() -> Result<Outcome, CliError> {
    let alg = r2sol2::<Rational>();
    let mut rep = algebra_report("model r2sol2", &alg, "e")?;
    let h = AlmostHermitian4::standard(alg.clone());
    let curv = h.m.curvature()?;
    let inv = h.ricci_j_invariance(&curv);
    let j = standard_j::<Rational>();
    rep.insert("almost_kahler", h.check_structure().is_almost_kahler());
    rep.insert("ricci_j_residual", matrix(&inv.residual));
    rep.insert("ricci_j_invariant", inv.holds());
    rep.insert("j", matrix(&j));
    let iso = g49_vs_r2sol2()?;
    rep.ok = iso.holds();
    rep.insert("isomorphism_from_g49", isomorphism_value(&iso));
    Ok(Outcome::from_report(rep))
}

/// Tolerance for the coordinate-model comparisons.
pub const MODEL_TOL: f64 = 1e-6;

pub fn cmd_model_kowalski(
    lambda: f64,
    points: usize,
    step: f64,
    seed: u64,
    family_st: Option<(f64, f64)>,
) -> Result<Outcome, CliError> {
    let metric = KowalskiMetric::new(lambda)?;
    let pts = coordinate_model::sample_points(points, seed);
    let summary = thread_pool().install(|| coordinate_model::sample(&metric, &pts, step))?;
    let mut rep = Report::new("model kowalski");
    rep.ok = summary.scal_spread <= MODEL_TOL && summary.pattern_defect <= MODEL_TOL;
    rep.insert("summary", serde_json::to_value(&summary).expect("serializable"));
    if let Some((s, t)) = family_st {
        let cv = thread_pool().install(|| coordinate_model::cross_validate(s, t, &pts, step))?;
        rep.ok &= cv.agrees(1e-5);
        rep.insert("cross_validation", serde_json::to_value(&cv).expect("serializable"));
    }
    Ok(Outcome::from_report(rep))
}

/// A rayon pool capped by `LIE4_THREADS` when set.
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var("LIE4_THREADS").ok().and_then(|v| v.parse::<usize>().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SweepRow {
    pub s: f64,
    pub t: f64,
    pub ricci33: f64,
    pub trace_ad_e4: f64,
    pub g2_residual: f64,
    pub w2_residual: f64,
    pub w3_residual: f64,
    pub nijenhuis_norm: f64,
}

pub fn parse_range(name: &str, src: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("{name}: expected LO:HI, got {src:?}"));
    let (a, b) = src.split_once(':').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if a.is_finite() && b.is_finite() {
        Ok((a, b))
    } else {
        Err(bad())
    }
}

fn grid(range: (f64, f64), n: usize) -> Vec<f64> {
    match n {
        1 => vec![range.0],
        _ => (0..n).map(|i| range.0 + (range.1 - range.0) * i as f64 / (n - 1) as f64).collect(),
    }
}

/// Floating-point invariants of the family at one parameter value.
pub fn sweep_row(s: f64, t: f64) -> Result<SweepRow, CliError> {
    let alg = family(s, t)?;
    let h = AlmostHermitian4::standard(alg.clone());
    let curv = h.m.curvature_formal();
    let weyl = h.weyl_decompose(&curv)?;
    Ok(SweepRow {
        s,
        t,
        ricci33: curv.ricci[2][2],
        trace_ad_e4: alg.ad_traces()[3],
        g2_residual: h.gray_conditions(&curv).norms()[1],
        w2_residual: max_abs(weyl.w2.iter().flatten()),
        w3_residual: max_abs(weyl.w3.iter().flatten()),
        nijenhuis_norm: max_abs(nijenhuis_formal(&alg, &h.j).iter().flatten().flatten()),
    })
}

/// Rows over a `grid × grid` lattice in row-major `(s, t)` order; lattice
/// points with `t = 0` are skipped.
pub fn sweep_rows(s_range: (f64, f64), t_range: (f64, f64), n: usize) -> Result<Vec<SweepRow>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    let params: Vec<(f64, f64)> = grid(s_range, n)
        .into_iter()
        .flat_map(|s| grid(t_range, n).into_iter().map(move |t| (s, t)))
        .filter(|&(_, t)| t != 0.0)
        .collect();
    thread_pool().install(|| params.par_iter().map(|&(s, t)| sweep_row(s, t)).collect())
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// The family at `(s, t)` as a spec file, optionally with the standard `J`, `Ω`.
pub fn family_spec(s: &Rational, t: &Rational, with_structure: bool) -> Result<AlgebraSpecFile, CliError> {
    let alg = family(s.clone(), t.clone())?;
    let (j, omega) = (standard_j(), lie4_core::hermitian::standard_omega());
    Ok(if with_structure {
        AlgebraSpecFile::from_parts(&alg, None, Some(&j), Some(&omega))
    } else {
        AlgebraSpecFile::from_parts(&alg, None, None, None)
    })
}
