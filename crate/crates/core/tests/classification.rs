use std::collections::BTreeMap;

use lie4_core::classification::ansatz::{self, a, b, c, family, g49, ParamFamily};
use lie4_core::classification::branches::{branch, branches, verify_branch, verify_branch_at};
use lie4_core::classification::conditions::{self, compare_with_printed, derive_conditions, Agreement};
use lie4_core::classification::isomorphism::g49_vs_r2sol2;
use lie4_core::classification::kahler_einstein::{self, ke_branch, ke_branches, never_einstein};
use lie4_core::classification::normalize::normalize_to_g49;
use lie4_core::classification::reductions::{verify_corrected_reductions, verify_reductions};
use lie4_core::{rat, Error, LieAlgebra4, MetricLieAlgebra, Poly, Rational, Ring};

fn q(n: i64) -> Rational {
    rat(n, 1)
}

#[test]
fn zero_ansatz_is_abelian() {
    assert_eq!(ansatz::ansatz_algebra(&ParamFamily::<Rational>::zero()), LieAlgebra4::abelian());
}

#[test]
fn parameter_names_round_trip() {
    for v in ansatz::all_params().chain([ansatz::aux(1), ansatz::aux(2)]) {
        assert_eq!(ansatz::param(&ansatz::param_name(v)), Some(v));
    }
    assert_eq!(ansatz::param("d1"), None);
    assert_eq!(ansatz::param("a7"), None);
}

#[test]
fn branch_16_is_the_family() {
    let b16 = branch(16).unwrap();
    for (s, t) in [(0, 1), (3, -2), (1, 7)] {
        let alg = b16.algebra_at(&[(a(4), q(t)), (a(5), q(s))]).unwrap();
        assert_eq!(alg, family(q(s), q(t)).unwrap());
    }
    // de3 = ((t²+s²)/t) e3∧e4
    let cf = family(q(1), q(2)).unwrap().to_coframe();
    assert_eq!(cf.d[2].component(2, 3), rat(5, 2));
}

#[test]
fn branch_5_structure_equations() {
    let p = branch(5).unwrap().instantiate(&[(b(5), q(3))]).unwrap();
    let cf = ansatz::build_ansatz(&p);
    assert_eq!(cf.d[0].coeffs, [q(0), q(0), q(-3), q(0), q(0), q(0)]);
    assert_eq!(cf.d[1].coeffs, [q(0), q(-6), q(0), q(0), q(3), q(0)]);
    assert_eq!(cf.d[2].coeffs, [q(0), q(0), q(0), q(0), q(0), q(6)]);
    assert!(cf.d[3].is_zero());
}

#[test]
fn derived_systems_against_printed() {
    let d = derive_conditions();
    assert_eq!((d.d_omega.len(), d.jacobi.len(), d.ricci_inv.len(), d.integrability.len()), (4, 12, 6, 4));
    let report = compare_with_printed(&d);
    let by_name = |n: &str| report.iter().find(|r| r.name == n).unwrap().clone();
    for name in ["eq1", "eq2", "integrability"] {
        let r = by_name(name);
        assert!(r.all_agree(), "{name}");
        assert!(r.relations.iter().all(|x| matches!(x.plus, Agreement::Proportional { .. })));
        assert!(r.unmatched_derived.is_empty());
    }
    let eq3 = by_name("eq3");
    let rel = |i: usize| eq3.relations[i].clone();
    assert!(matches!(rel(0).plus, Agreement::Proportional { index: 0, .. }));
    assert!(matches!(rel(4).plus, Agreement::Proportional { index: 4, .. }));
    assert!(matches!(rel(1).plus, Agreement::ModuloAuxiliary { index: 1 }));
    assert_eq!(rel(1).minus, Some(Agreement::Mismatch));
    assert!(matches!(rel(3).plus, Agreement::ModuloAuxiliary { index: 3 }));
    assert!(matches!(rel(5).plus, Agreement::ModuloAuxiliary { index: 5 }));
    assert_eq!(rel(5).minus, Some(Agreement::Mismatch));
    assert!(!rel(2).agrees());
}

#[test]
fn parser_handles_fractions_and_powers() {
    let p = conditions::parse_poly("-3/2*a1*b6^2 + c3 - 2");
    let expected = Poly::monomial(rat(-3, 2), &[(a(1), 1), (b(6), 2)]) + Poly::var(c(3)) - Poly::constant(q(2));
    assert_eq!(p, expected);
}

#[test]
fn every_branch_solves_the_required_system() {
    let d = derive_conditions();
    let integrable: Vec<u8> = branches()
        .iter()
        .map(|br| verify_branch(br, &d).unwrap())
        .inspect(|cert| {
            assert_eq!(cert.residual_count(), 22);
            assert!(cert.all_zero, "branch {}", cert.id);
        })
        .filter(|cert| cert.integrable)
        .map(|cert| cert.id)
        .collect();
    assert_eq!(integrable, vec![1, 2, 3, 4, 6, 7, 8, 9, 10, 12, 13, 15, 17]);
}

#[test]
fn branch_flags() {
    let d = derive_conditions();
    let c16 = verify_branch(&branch(16).unwrap(), &d).unwrap();
    assert!(c16.all_zero && !c16.integrable && !c16.listed_integrable);
    let c9 = verify_branch(&branch(9).unwrap(), &d).unwrap();
    assert!(c9.all_zero && c9.integrable && c9.listed_integrable);
    let c9_at = verify_branch_at(&branch(9).unwrap(), &[(a(1), q(1)), (b(1), q(1)), (c(6), q(1))], &d).unwrap();
    assert!(c9_at.integrable);
}

#[test]
fn degenerate_branch_values_are_rejected() {
    let d = derive_conditions();
    let b16 = branch(16).unwrap();
    assert!(matches!(verify_branch_at(&b16, &[(a(4), q(0))], &d), Err(Error::DegenerateBranch { branch: 16, .. })));
    assert!(matches!(b16.instantiate(&[(a(4), q(0)), (a(5), q(1))]), Err(Error::DegenerateBranch { .. })));
    assert!(matches!(b16.instantiate(&[(a(4), q(1))]), Err(Error::DegenerateBranch { .. })));
    assert!(matches!(branch(18), Err(Error::UnknownBranch(18))));
}

#[test]
fn non_integrable_branch_ricci_values() {
    let ricci = |id: u8, vals: &[(lie4_core::Var, Rational)]| {
        let alg = branch(id).unwrap().algebra_at(vals).unwrap();
        MetricLieAlgebra::orthonormal(alg).curvature().unwrap().ricci
    };
    let r5 = ricci(5, &[(b(5), q(2))]);
    assert_eq!((r5[0][0].clone(), r5[2][2].clone()), (q(0), q(-24)));
    let r11 = ricci(11, &[(b(2), q(2))]);
    assert_eq!((r11[0][0].clone(), r11[2][2].clone()), (q(0), q(-6)));
    let r14 = ricci(14, &[(c(6), q(2))]);
    assert_eq!((r14[0][0].clone(), r14[2][2].clone()), (q(0), q(-6)));
    let r17 = ricci(17, &[(a(4), q(1)), (a(5), q(1))]);
    assert_eq!((r17[0][0].clone(), r17[2][2].clone()), (q(0), q(-6)));
}

#[test]
fn stated_reductions() {
    let certs = verify_reductions().unwrap();
    let holds: BTreeMap<String, bool> = certs.iter().map(|c| (c.label.clone(), c.holds)).collect();
    assert!(holds["14 -> 5"]);
    assert!(holds["17 -> 16"]);
    assert!(holds["5 (b5 = -b2/2) -> 11"]);
    assert!(!holds["16 (a5 = 0) -> 5"]);
    assert!(!holds["12 -> 8 (Kähler-Einstein)"]);
    assert!(certs.iter().all(|c| c.is_isometry));
}

#[test]
fn corrected_reductions() {
    for cert in verify_corrected_reductions().unwrap() {
        assert!(cert.holds && cert.is_isometry, "{}", cert.label);
    }
}

#[test]
fn normalization_to_g49() {
    for (s, t, h) in [(0, 1, q(1)), (1, 1, q(4)), (1, 2, rat(25, 4))] {
        let n = normalize_to_g49(&q(s), &q(t)).unwrap();
        assert!(n.matches_g49 && n.gram_is_scalar());
        assert_eq!(n.homothety, h);
        assert_eq!(n.gram[0][0].to_rational(), Some(h.recip_exact()));
        let dec = &n.decomposition;
        assert!(dec.heisenberg);
        assert_eq!(dec.mu, dec.eta.clone() * q(2));
        assert_eq!(dec.nu, -dec.eta.clone());
        assert!(dec.a.is_zero() && dec.delta.is_zero() && dec.k.is_zero());
        assert_eq!(dec.b, rat(s, t));
    }
    assert!(matches!(normalize_to_g49(&q(1), &q(0)), Err(Error::ZeroT)));
}

trait RecipExact {
    fn recip_exact(&self) -> Rational;
}

impl RecipExact for Rational {
    fn recip_exact(&self) -> Rational {
        q(1) / self.clone()
    }
}

#[test]
fn g49_structure_equations() {
    let cf = g49(rat(1, 2)).to_coframe();
    assert_eq!(cf.d[1].component(0, 1), rat(1, 2));
    assert_eq!(cf.d[2].component(0, 2), q(-1));
    assert_eq!(cf.d[3].component(0, 3), rat(-1, 2));
    assert_eq!(cf.d[3].component(1, 2), q(-1));
}

#[test]
fn g49_isomorphic_to_r2sol2() {
    let cert = g49_vs_r2sol2().unwrap();
    assert!(cert.holds() && cert.traces_correspond);
    assert_eq!(cert.source_series, vec![4, 3, 1, 0]);
    assert_eq!(cert.target_series, vec![4, 3, 1, 0]);
}

#[test]
fn kaehler_einstein_cases() {
    let d = derive_conditions();
    for cert in ke_branches(&d).unwrap() {
        assert!(cert.holds(), "case {}", cert.id);
    }
    assert!(kahler_einstein::ke4_is_ke3_at_a6_zero().unwrap());
}

#[test]
fn kaehler_einstein_sample_values() {
    let rho = |id: u8, vals: &[(lie4_core::Var, Rational)]| {
        let alg = ke_branch(id).unwrap().algebra_at(vals).unwrap();
        MetricLieAlgebra::orthonormal(alg).curvature().unwrap().ricci
    };
    let nine = branch(9).unwrap().algebra_at(&[(a(1), q(3)), (b(1), q(4)), (c(6), q(5))]).unwrap();
    let r9 = MetricLieAlgebra::orthonormal(nine).curvature().unwrap().ricci;
    assert_eq!(r9, lie4_core::linalg::scale(&lie4_core::linalg::identity(), &q(-25)));
    let r2 = rho(2, &[(b(5), q(1)), (a(5), q(0))]);
    assert_eq!(r2, lie4_core::linalg::scale(&lie4_core::linalg::identity(), &q(-6)));
    let r3 = rho(3, &[(a(4), q(1)), (a(6), q(2))]);
    assert_eq!(r3[0][0], rat(-250, 9));
}

#[test]
fn never_einstein_witness() {
    let w = never_einstein(q(0), q(1)).unwrap();
    assert!(w.matches());
    assert_eq!(w.witness, rat(3, 2));
    assert_eq!(never_einstein(q(1), q(1)).unwrap().witness, q(6));
    assert!(never_einstein(q(1), q(0)).is_err());
    let sym = kahler_einstein::never_einstein_symbolic().unwrap();
    let sq = Poly::var(a(4)).pow(2) + Poly::var(a(5)).pow(2);
    assert_eq!(sym, (sq.clone() * sq).scale(&rat(3, 2)));
}

#[test]
fn family_trace_of_ad_e4() {
    for (s, t) in [(0, 1), (2, 3), (-1, 4)] {
        let traces = family(q(s), q(t)).unwrap().ad_traces();
        assert_eq!(traces[3], rat(s * s + t * t, t));
    }
}

mod properties {
    use super::*;
    use lie4_core::AlmostHermitian4;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
    }

    fn nonzero_rational() -> impl Strategy<Value = Rational> {
        rational().prop_filter("t != 0", |t| !t.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn family_is_strictly_almost_kaehler_with_invariant_ricci(s in rational(), t in nonzero_rational()) {
            let h = AlmostHermitian4::standard(family(s.clone(), t.clone()).unwrap());
            prop_assert!(h.check_structure().is_almost_kahler());
            prop_assert!(!h.nijenhuis().unwrap().is_integrable);
            let curv = h.m.curvature().unwrap();
            prop_assert!(h.ricci_j_invariance(&curv).holds());
            prop_assert!(h.gray_conditions(&curv).holds()[1]);
            let qq = s.clone() * s.clone() + t.clone() * t.clone();
            prop_assert_eq!(curv.scal, -q(3) * qq.clone() * qq / (t.clone() * t));
        }

        #[test]
        fn family_sits_on_branch_16(s in rational(), t in nonzero_rational()) {
            let d = derive_conditions();
            let cert = verify_branch_at(&branch(16).unwrap(), &[(a(4), t.clone()), (a(5), s.clone())], &d).unwrap();
            prop_assert!(cert.all_zero && !cert.integrable);
        }

        #[test]
        fn homothety_is_scale_invariant(s in rational(), t in nonzero_rational(), c in nonzero_rational()) {
            // (s, t) -> (cs, ct) rescales the metric algebra, the homothety factor picks up c²
            let n1 = normalize_to_g49(&s, &t).unwrap();
            let n2 = normalize_to_g49(&(s.clone() * c.clone()), &(t.clone() * c.clone())).unwrap();
            prop_assert_eq!(n2.homothety, n1.homothety * c.clone() * c);
        }
    }
}
