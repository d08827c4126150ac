//! The polynomial condition systems on the ansatz, derived from first
//! principles, and their printed reference forms.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::ansatz::{self, a, b, c, ParamFamily};
use crate::hermitian::{nijenhuis_formal, ricci_conditions, standard_j, standard_omega};
use crate::lie::MetricLieAlgebra;
use crate::linalg;
use crate::poly::{Monomial, Poly, Var};
use crate::scalar::{Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionSystems {
    /// `dΩ` on `(e¹²³, e¹²⁴, e¹³⁴, e²³⁴)`.
    pub d_omega: Vec<Poly>,
    /// `d²e^k`, `k = 1, 2, 3`, four components each.
    pub jacobi: Vec<Poly>,
    /// `ρ₁₁-ρ₂₂, ρ₁₂, ρ₁₃-ρ₂₄, ρ₁₄+ρ₂₃, ρ₃₃-ρ₄₄, ρ₃₄` of the symmetrized Ricci form.
    pub ricci_inv: Vec<Poly>,
    /// Independent components of the Nijenhuis tensor.
    pub integrability: Vec<Poly>,
}

impl ConditionSystems {
    /// The 22 conditions a branch must satisfy (integrability excluded).
    pub fn required(&self) -> impl Iterator<Item = &Poly> {
        self.d_omega.iter().chain(self.jacobi.iter()).chain(self.ricci_inv.iter())
    }
}

pub fn derive_conditions() -> ConditionSystems {
    let alg = ansatz::ansatz_algebra(&ParamFamily::symbolic());
    let d_omega = alg.d_two_form(&standard_omega::<Poly>()).coeffs.to_vec();
    let jacobi = alg.d_squared()[..3].iter().flat_map(|w| w.coeffs.iter().cloned()).collect();

    let curv = MetricLieAlgebra::orthonormal(alg.clone()).curvature_formal();
    let half = Poly::half();
    let sym: linalg::Mat4<Poly> = core::array::from_fn(|i| {
        core::array::from_fn(|j| (curv.ricci[i][j].clone() + curv.ricci[j][i].clone()) * half.clone())
    });
    let ricci_inv = ricci_conditions(&sym).to_vec();

    let n = nijenhuis_formal(&alg, &standard_j());
    let mut integrability: Vec<Poly> = Vec::new();
    for p in n.iter().flatten().flatten() {
        if p.is_empty() || integrability.iter().any(|q| q.proportionality(p).is_some()) {
            continue;
        }
        integrability.push(p.clone());
    }
    ConditionSystems { d_omega, jacobi, ricci_inv, integrability }
}

/// Substitution imposing the closedness of `Ω`:
/// `c₁ = a₃+b₅, b₄ = -a₂, c₂ = b₆, c₄ = -a₆`.
pub fn eq1_substitution() -> BTreeMap<Var, Poly> {
    let v = Poly::var;
    BTreeMap::from([
        (c(1), v(a(3)) + v(b(5))),
        (b(4), -v(a(2))),
        (c(2), v(b(6))),
        (c(4), -v(a(6))),
    ])
}

/// Parses `"-3/2*a1*b6^2 + c3"`-style sums of monomials in the ansatz
/// parameters. Panics on malformed input; only used on fixed strings.
pub fn parse_poly(src: &str) -> Poly {
    let mut out = Poly::default();
    let mut sign = Rational::from_i64(1);
    let mut term = alloc::string::String::new();
    let flush = |term: &str, sign: &Rational, out: &mut Poly| {
        let term = term.trim();
        if term.is_empty() {
            return;
        }
        let mut coeff = sign.clone();
        let mut factors: Vec<(Var, u16)> = Vec::new();
        for f in term.split('*').map(str::trim) {
            if f.starts_with(|ch: char| ch.is_ascii_digit()) {
                let (n, d) = f.split_once('/').unwrap_or((f, "1"));
                coeff *= Rational::new(n.parse::<i64>().expect("integer").into(), d.parse::<i64>().expect("integer").into());
            } else {
                let (name, e) = f.split_once('^').unwrap_or((f, "1"));
                let var = ansatz::param(name).expect("parameter name");
                factors.push((var, e.parse().expect("exponent")));
            }
        }
        *out = out.clone() + Poly::monomial(coeff, &factors);
    };
    for ch in src.chars() {
        match ch {
            '+' | '-' => {
                flush(&term, &sign, &mut out);
                term.clear();
                sign = Rational::from_i64(if ch == '-' { -1 } else { 1 });
            }
            _ => term.push(ch),
        }
    }
    flush(&term, &sign, &mut out);
    out
}

/// A printed relation, with an optional term whose sign is not legible
/// (a line break swallowed the operator).
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedRelation {
    pub poly: Poly,
    pub ambiguous: Option<Poly>,
}

fn printed(src: &str) -> PrintedRelation {
    PrintedRelation { poly: parse_poly(src), ambiguous: None }
}

fn printed_ambiguous(src: &str, term: &str) -> PrintedRelation {
    PrintedRelation { poly: parse_poly(src), ambiguous: Some(parse_poly(term)) }
}

pub fn printed_eq1() -> Vec<PrintedRelation> {
    ["c1 - a3 - b5", "a2 + b4", "b6 - c2", "a6 + c4"].into_iter().map(printed).collect()
}

pub fn printed_eq2() -> Vec<PrintedRelation> {
    [
        "-a1*b6 - c6*a2 - b3*a4 + a5*b2 + b6*a6",
        "-a1*a2 - b1*a4 - b6*a4 - a6*a2",
        "a1*b5 + a2*c5 - a3*a6 - c3*a4 - b1*a5 - b5*a6",
        "a1*a6 - 2*a2*a5 + a3*a4 - b5*a4 - c6*a4 - a6^2",
        "-b1*b6 - a3*b2 - c6*b2 + 2*a2*b3 + b5*b2 + b6^2",
        "b1*a2 - a1*b2 - a6*b2 + b6*a2",
        "b1*a3 + b2*c5 - a1*b3 + a2*c3 - b5*b6 - a3*b6",
        "b1*a6 - a5*b2 + b3*a4 + c6*a2 - b6*a6",
        "-2*a3*b6 - b5*b6 + a6*b3 + c3*a2 + b2*c5",
        "2*a3*b5 + b5^2 + a3^2 + b6*c5 + c3*a6 - a1*c3 - c6*a3 - c6*b5 - b1*c5",
        "a3*a6 + 2*b5*a6 - b6*a5 + c3*a4 - a2*c5",
        "a1*b6 - a6*b1",
    ]
    .into_iter()
    .map(printed)
    .collect()
}

pub fn printed_eq3() -> Vec<PrintedRelation> {
    alloc::vec![
        printed(
            "1/2*c5^2 - c6*a3 - b5*a4 + a4^2 - b2^2 + a5^2 - b3^2 + c6*b5 - 3/2*b6^2 + 3/2*a6^2 + b5^2 \
             - a3*b2 - a3*a4 - a3^2 - b5*b2 - 1/2*c3^2 - a1*a6 + b1*b6",
        ),
        printed_ambiguous(
            "-b1*a6 - a2*a4 + 3/2*b6*a6 - 1/2*c3*c5 - b3*b5 + a2*b5 + a2*b2 - a5*a3 - 1/2*c6*a5 - 1/2*c6*b3",
            "a2*a3",
        ),
        printed_ambiguous(
            "a6*c6 + 3/2*b6*a2 - 1/2*b6*a5 - 1/2*a4*a6 - c6*c3 + 1/2*a5*c5 + 1/2*a3*a6 - a6*b5 + 1/2*a2*c5 \
             - 3/2*a6*a3 - a6*b2 - 1/2*c3*a4 + a1*a3 + a1*a4 + b1*b3 - b1*a2",
            "1/2*c3*a3",
        ),
        printed(
            "-1/2*a6*b3 + 3/2*a6*a2 + a4*b6 + 1/2*c5*b5 + 1/2*c5*b2 + 1/2*c3*b3 + 1/2*c3*a2 - a3*b6 \
             - 3/2*b6*b5 + b6*c6 - a1*a2 + a1*a5 - b1*b2 + b1*b5 - c6*c5 + 1/2*b2*b6",
        ),
        printed(
            "-2*a2^2 + c5^2 - c6*a3 - 1/2*a4^2 - a4*b2 - 1/2*b2^2 + a5*b3 + 1/2*a5^2 + 1/2*b3^2 - c6*b5 \
             + b6*c5 + c3*a6 - a6^2 - b6^2 + 3/2*b5^2 + a3*b5 + 3/2*a3^2 - b1*b6 - a1*a6 + c3^2",
        ),
        printed_ambiguous(
            "a6*c5 - 1/2*b1*c3 + 1/2*b1*a6 - a2*a3 + a6*b6 - b6*c3 - b6*a6 + 1/2*a1*c5 - 1/2*a1*b6 \
             - 1/2*b3*a4 - 1/2*b3*b2 - 1/2*a5*a4 - 1/2*a5*b2",
            "a2*b5",
        ),
    ]
}

pub fn printed_integrability() -> Vec<PrintedRelation> {
    ["c4 + c3", "c5 - c2", "b4 + b3 - a2 + a5", "b5 - b2 - a3 - a4"].into_iter().map(printed).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Agreement {
    /// `printed = factor · derived[index]`.
    Proportional { index: usize, factor: Rational },
    /// `printed - factor · derived[index]` lies in the rational span of
    /// the auxiliary relations (for the Ricci conditions: the Jacobi system).
    ModuloAuxiliary { index: usize },
    /// In the rational span of the derived system but not a multiple of one member.
    InSpan,
    Mismatch,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        !matches!(self, Agreement::Mismatch)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationComparison {
    pub printed_index: usize,
    /// Agreement of the legible part (with the ambiguous term taken with a `+` sign).
    pub plus: Agreement,
    /// Agreement with the ambiguous term taken with a `-` sign, when there is one.
    pub minus: Option<Agreement>,
}

impl RelationComparison {
    pub fn agrees(&self) -> bool {
        self.plus.agrees() || self.minus.as_ref().is_some_and(Agreement::agrees)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SystemComparison {
    pub name: &'static str,
    pub relations: Vec<RelationComparison>,
    /// Derived members not proportional to any printed relation.
    pub unmatched_derived: Vec<usize>,
}

impl SystemComparison {
    pub fn all_agree(&self) -> bool {
        self.relations.iter().all(RelationComparison::agrees)
    }
}

fn in_span(target: &Poly, basis: &[Poly]) -> bool {
    let mut monomials: Vec<Monomial> = Vec::new();
    for p in basis.iter().chain(core::iter::once(target)) {
        for (m, _) in p.terms() {
            if !monomials.contains(m) {
                monomials.push(m.clone());
            }
        }
    }
    let row = |p: &Poly| monomials.iter().map(|m| p.coeff(m)).collect::<Vec<_>>();
    let rows: Vec<Vec<Rational>> = basis.iter().map(row).collect();
    let base = linalg::rank(rows.clone());
    let mut with = rows;
    with.push(row(target));
    linalg::rank(with) == base
}

fn classify(p: &Poly, derived: &[Poly], aux: &[Poly]) -> Agreement {
    if let Some((index, factor)) =
        derived.iter().enumerate().find_map(|(i, d)| d.proportionality(p).map(|f| (i, f)))
    {
        return Agreement::Proportional { index, factor };
    }
    if !aux.is_empty() && !in_span(p, aux) {
        let hit = derived.iter().position(|d| {
            let mut with: Vec<Poly> = aux.to_vec();
            with.push(d.clone());
            in_span(p, &with)
        });
        if let Some(index) = hit {
            return Agreement::ModuloAuxiliary { index };
        }
    }
    if !p.is_empty() && in_span(p, derived) {
        Agreement::InSpan
    } else {
        Agreement::Mismatch
    }
}

/// Compares printed relations with derived polynomials, both reduced by
/// `reduce` first (e.g. modulo the closedness of `Ω`); `aux` lists
/// relations that may be added freely with constant coefficients.
pub fn compare_system(
    name: &'static str,
    printed: &[PrintedRelation],
    derived: &[Poly],
    reduce: &BTreeMap<Var, Poly>,
    aux: &[Poly],
) -> SystemComparison {
    let derived: Vec<Poly> = derived.iter().map(|p| p.substitute(reduce)).collect();
    let aux: Vec<Poly> = aux.iter().map(|p| p.substitute(reduce)).collect();
    let relations: Vec<RelationComparison> = printed
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let base = r.poly.substitute(reduce);
            match &r.ambiguous {
                None => RelationComparison { printed_index: i, plus: classify(&base, &derived, &aux), minus: None },
                Some(term) => {
                    let term = term.substitute(reduce);
                    RelationComparison {
                        printed_index: i,
                        plus: classify(&(base.clone() + term.clone()), &derived, &aux),
                        minus: Some(classify(&(base - term), &derived, &aux)),
                    }
                }
            }
        })
        .collect();
    let unmatched_derived = derived
        .iter()
        .enumerate()
        .filter(|(_, d)| {
            !d.is_empty()
                && !printed.iter().any(|r| {
                    let base = r.poly.substitute(reduce);
                    match &r.ambiguous {
                        None => d.proportionality(&base).is_some(),
                        Some(t) => {
                            let t = t.substitute(reduce);
                            d.proportionality(&(base.clone() + t.clone())).is_some()
                                || d.proportionality(&(base - t)).is_some()
                        }
                    }
                })
        })
        .map(|(i, _)| i)
        .collect();
    SystemComparison { name, relations, unmatched_derived }
}

/// Compares all four printed systems with the derived ones. `dΩ` and the
/// integrability relations are compared verbatim; `d²` and the Ricci
/// conditions modulo the closedness of `Ω`, the Ricci conditions also
/// modulo constant combinations of the `d²` relations.
pub fn compare_with_printed(derived: &ConditionSystems) -> Vec<SystemComparison> {
    let none = BTreeMap::new();
    let eq1 = eq1_substitution();
    alloc::vec![
        compare_system("eq1", &printed_eq1(), &derived.d_omega, &none, &[]),
        compare_system("eq2", &printed_eq2(), &derived.jacobi, &eq1, &[]),
        compare_system("eq3", &printed_eq3(), &derived.ricci_inv, &eq1, &derived.jacobi),
        compare_system("integrability", &printed_integrability(), &derived.integrability, &none, &[]),
    ]
}
