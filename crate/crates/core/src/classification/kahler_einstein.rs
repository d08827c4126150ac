//! Kähler–Einstein sub-cases of the integrable branches, and the
//! non-Einstein witness for the strictly almost Kähler family.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::ansatz::{self, a, aux, b, c, family};
use super::branches::{branch, Branch};
use super::conditions::{parse_poly, ConditionSystems};
use super::reductions::RationalAlgebra;
use crate::error::Error;
use crate::lie::MetricLieAlgebra;
use crate::poly::{Poly, Var};
use crate::scalar::{rat, Field, Rational, Ring};

pub const KE_CASES: [u8; 7] = [2, 3, 4, 8, 9, 12, 13];

struct KeTable {
    id: u8,
    free: &'static [Var],
    denominator: fn() -> Poly,
    /// `(parameter, numerator over the denominator)`; others vanish.
    values: fn() -> Vec<(Var, Poly)>,
}

fn v(x: Var) -> Poly {
    Poly::var(x)
}

fn p(s: &str) -> Poly {
    parse_poly(s)
}

fn one() -> Poly {
    Poly::constant(Rational::from_i64(1))
}

fn diff_of_squares_24_26() -> Poly {
    p("a6^2 - a4^2")
}

fn diff_of_squares_12() -> Poly {
    p("b2^2 - b6^2")
}

const KE_TABLE: [KeTable; 7] = [
    KeTable {
        id: 2,
        free: &[b(5), a(5)],
        denominator: one,
        values: || {
            alloc::vec![
                (a(3), v(b(5))),
                (a(5), v(a(5))),
                (b(3), -v(a(5))),
                (b(5), v(b(5))),
                (c(1), p("2*b5")),
                (c(6), p("2*b5")),
            ]
        },
    },
    KeTable {
        id: 3,
        free: &[a(4), a(6)],
        denominator: diff_of_squares_24_26,
        values: || {
            let d = diff_of_squares_24_26();
            alloc::vec![
                (a(1), p("a6^3 + 3*a4^2*a6")),
                (a(3), -v(a(4)) * d.clone()),
                (a(4), v(a(4)) * d.clone()),
                (a(6), v(a(6)) * d.clone()),
                (c(1), -v(a(4)) * d.clone()),
                (c(3), v(a(6)) * d.clone()),
                (c(4), -v(a(6)) * d),
                (c(6), p("a4^3 + 3*a6^2*a4")),
            ]
        },
    },
    KeTable {
        id: 4,
        free: &[a(4)],
        denominator: one,
        values: || alloc::vec![(a(3), -v(a(4))), (a(4), v(a(4))), (c(1), -v(a(4))), (c(6), -v(a(4)))],
    },
    KeTable {
        id: 8,
        free: &[b(4), b(5)],
        denominator: || v(b(5)),
        values: || {
            let b5 = v(b(5));
            alloc::vec![
                (a(2), -v(b(4)) * b5.clone()),
                (a(3), p("b4^2")),
                (a(4), p("-b4^2")),
                (a(5), -v(b(4)) * b5.clone()),
                (b(2), p("b5^2")),
                (b(3), -v(b(4)) * b5.clone()),
                (b(4), v(b(4)) * b5.clone()),
                (b(5), p("b5^2")),
                (c(1), p("b4^2 + b5^2")),
                (c(6), p("b4^2 + b5^2")),
            ]
        },
    },
    KeTable {
        id: 9,
        // a₁ = u₂(1 - u₁²), b₁ = 2u₁u₂, c₆ = u₂(1 + u₁²) parametrizes a₁² + b₁² = c₆².
        free: &[aux(1), aux(2)],
        denominator: one,
        values: || alloc::vec![(a(1), p("u2 - u2*u1^2")), (b(1), p("2*u1*u2")), (c(6), p("u2 + u2*u1^2"))],
    },
    KeTable {
        id: 12,
        free: &[b(2), b(6)],
        denominator: diff_of_squares_12,
        values: || {
            let d = diff_of_squares_12();
            alloc::vec![
                (b(1), p("-b6^3 - 3*b2^2*b6")),
                (b(2), v(b(2)) * d.clone()),
                (b(5), v(b(2)) * d.clone()),
                (b(6), v(b(6)) * d.clone()),
                (c(1), v(b(2)) * d.clone()),
                (c(2), v(b(6)) * d.clone()),
                (c(5), v(b(6)) * d),
                (c(6), p("b2^3 + 3*b6^2*b2")),
            ]
        },
    },
    KeTable {
        id: 13,
        free: &[a(6), b(6)],
        denominator: one,
        values: || {
            alloc::vec![
                (a(1), v(a(6))),
                (a(6), v(a(6))),
                (b(1), v(b(6))),
                (b(6), v(b(6))),
                (c(2), v(b(6))),
                (c(3), v(a(6))),
                (c(4), -v(a(6))),
                (c(5), v(b(6))),
            ]
        },
    },
];

/// The Kähler–Einstein structure equations of case `id` as a branch.
pub fn ke_branch(id: u8) -> Result<Branch, Error> {
    let t = KE_TABLE.iter().find(|t| t.id == id).ok_or(Error::UnknownBranch(id))?;
    let mut numerators: BTreeMap<Var, Poly> = ansatz::all_params().map(|x| (x, Poly::default())).collect();
    numerators.extend((t.values)());
    let denominator = (t.denominator)();
    let nondegeneracy = if denominator.as_constant().is_some() { Vec::new() } else { alloc::vec![denominator.clone()] };
    Ok(Branch { id, free_params: t.free.to_vec(), numerators, denominator, nondegeneracy })
}

/// The Kähler–Einstein condition imposed on the parent branch, for
/// comparison with [`ke_branch`].
fn parent_specialization(id: u8) -> Result<Branch, Error> {
    let parent = branch(id)?;
    let free = |xs: &[Var]| xs.to_vec();
    Ok(match id {
        3 => parent.reparametrize(
            &BTreeMap::from([(c(6), p("a4^3 + 3*a6^2*a4"))]),
            &diff_of_squares_24_26(),
            free(&[a(4), a(6)]),
        ),
        4 => parent.specialize(&[(a(1), Rational::from_i64(0))])?,
        9 => parent.reparametrize(
            &BTreeMap::from([(a(1), p("u2 - u2*u1^2")), (b(1), p("2*u1*u2")), (c(6), p("u2 + u2*u1^2"))]),
            &one(),
            free(&[aux(1), aux(2)]),
        ),
        12 => parent.reparametrize(
            &BTreeMap::from([(c(6), p("b2^3 + 3*b6^2*b2"))]),
            &diff_of_squares_12(),
            free(&[b(2), b(6)]),
        ),
        13 => parent.specialize(&[(c(6), Rational::from_i64(0))])?,
        _ => parent,
    })
}

/// The printed `ρ(e₁,e₁)` as numerator and denominator.
pub fn printed_rho11(id: u8) -> Result<(Poly, Poly), Error> {
    let sq = |x: Poly| x.clone() * x;
    Ok(match id {
        2 => (p("-6*b5^2"), one()),
        3 => (p("a4^2 + a6^2").pow(3).scale(&rat(-2, 1)), sq(p("a4^2 - a6^2"))),
        4 => (p("-2*a4^2"), one()),
        8 => (sq(p("b5^2 + b4^2")).scale(&rat(-2, 1)), p("b5^2")),
        9 => (p("-a1^2 - b1^2"), one()),
        12 => (p("b2^2 + b6^2").pow(3).scale(&rat(-2, 1)), sq(diff_of_squares_12())),
        13 => (p("-2*a6^2 - 2*b6^2"), one()),
        _ => return Err(Error::UnknownBranch(id)),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct KeCertificate {
    pub id: u8,
    pub closed: bool,
    pub jacobi: bool,
    pub integrable: bool,
    /// `ρ = ρ(e₁,e₁) g` identically.
    pub einstein: bool,
    /// `ρ(e₁,e₁)` equals the printed expression.
    pub rho11_matches: bool,
    /// The structure equations are the parent branch with the
    /// Kähler–Einstein condition imposed.
    pub refines_parent: bool,
    /// `ρ(e₁,e₁)` times the squared denominator.
    pub rho11_numerator: Poly,
}

impl KeCertificate {
    pub fn holds(&self) -> bool {
        self.closed && self.jacobi && self.integrable && self.einstein && self.rho11_matches && self.refines_parent
    }
}

pub fn verify_ke(id: u8, systems: &ConditionSystems) -> Result<KeCertificate, Error> {
    let ke = ke_branch(id)?;
    let subst = |q: &Poly| q.substitute_over(&ke.numerators, &ke.denominator).is_empty();
    let closed = systems.d_omega.iter().all(subst);
    let jacobi = systems.jacobi.iter().all(subst);
    let integrable = systems.integrability.iter().all(subst);

    // Ricci is quadratic in the structure constants: ρ(N) = D² ρ(N / D).
    let curv = MetricLieAlgebra::orthonormal(ke.numerator_algebra()).curvature_formal();
    let r11 = curv.ricci[0][0].clone();
    let einstein = (0..4).all(|i| {
        (0..4).all(|j| {
            let expected = if i == j { r11.clone() } else { Poly::default() };
            curv.ricci[i][j] == expected
        })
    });
    let (num, den) = printed_rho11(id)?;
    let (num, den) = if id == 9 {
        let map = BTreeMap::from([(a(1), p("u2 - u2*u1^2")), (b(1), p("2*u1*u2"))]);
        (num.substitute(&map), den)
    } else {
        (num, den)
    };
    let d2 = ke.denominator.clone() * ke.denominator.clone();
    let rho11_matches = r11.clone() * den == num * d2;
    let refines_parent = RationalAlgebra::of(&ke).same_as(&RationalAlgebra::of(&parent_specialization(id)?));
    Ok(KeCertificate { id, closed, jacobi, integrable, einstein, rho11_matches, refines_parent, rho11_numerator: r11 })
}

pub fn ke_branches(systems: &ConditionSystems) -> Result<Vec<KeCertificate>, Error> {
    KE_CASES.iter().map(|&id| verify_ke(id, systems)).collect()
}

/// Case 4 is case 3 at `a₆ = 0`.
pub fn ke4_is_ke3_at_a6_zero() -> Result<bool, Error> {
    let ke3 = ke_branch(3)?.specialize(&[(a(6), Rational::from_i64(0))])?;
    Ok(RationalAlgebra::of(&ke3).same_as(&RationalAlgebra::of(&ke_branch(4)?)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct NeverEinsteinWitness<T> {
    /// `ρ(e₁,e₁) - ρ(e₃,e₃)` computed from the curvature.
    pub witness: T,
    /// `3(t²+s²)²/(2t²)`
    pub expected: T,
}

impl<T: Ring> NeverEinsteinWitness<T> {
    pub fn matches(&self) -> bool {
        self.witness == self.expected
    }
}

pub fn never_einstein<T: Field>(s: T, t: T) -> Result<NeverEinsteinWitness<T>, Error> {
    let alg = family(s.clone(), t.clone())?;
    let curv = MetricLieAlgebra::orthonormal(alg).curvature()?;
    let witness = curv.ricci[0][0].clone() - curv.ricci[2][2].clone();
    let q = t.clone() * t.clone() + s.clone() * s;
    let expected = T::from_rational(&rat(3, 2)) * q.clone() * q / (t.clone() * t);
    Ok(NeverEinsteinWitness { witness, expected })
}

/// `a₄² (ρ(e₁,e₁) - ρ(e₃,e₃))` on branch 16 as a polynomial in `a₄, a₅`.
pub fn never_einstein_symbolic() -> Result<Poly, Error> {
    let b16 = branch(16)?;
    let curv = MetricLieAlgebra::orthonormal(b16.numerator_algebra()).curvature_formal();
    Ok(curv.ricci[0][0].clone() - curv.ricci[2][2].clone())
}
