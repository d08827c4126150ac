//! Isomorphisms and specializations between branches.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::ansatz::{a, b, c};
use super::branches::{branch, Branch};
use super::kahler_einstein::ke_branch;
use crate::error::Error;
use crate::lie::LieAlgebra4;
use crate::linalg::{self, Mat4};
use crate::poly::{Poly, Var};
use crate::scalar::{Rational, Ring};

/// A branch algebra as numerator structure constants over a common denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalAlgebra {
    pub numerators: LieAlgebra4<Poly>,
    pub denominator: Poly,
}

impl RationalAlgebra {
    pub fn of(b: &Branch) -> Self {
        RationalAlgebra { numerators: b.numerator_algebra(), denominator: b.denominator.clone() }
    }

    /// Equality of the rational structure constants, by cross-multiplication.
    pub fn same_as(&self, other: &RationalAlgebra) -> bool {
        self.numerators
            .stored()
            .zip(other.numerators.stored())
            .all(|((_, _, x), (_, _, y))| x.clone() * other.denominator.clone() == y.clone() * self.denominator.clone())
    }

    /// Structure constants in the coframe `f^a = Σ_i p[a][i] e^i`.
    pub fn in_coframe(&self, p: &Mat4<Rational>) -> Result<Self, Error> {
        let m = linalg::inverse(p)?;
        let lift = |x: &Rational| Poly::constant(x.clone());
        let numerators = self.numerators.change_basis_with_inverse(&linalg::map(&m, lift), &linalg::map(p, lift));
        Ok(RationalAlgebra { numerators, denominator: self.denominator.clone() })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionCertificate {
    pub label: String,
    pub from: u8,
    pub to: u8,
    /// Coframe change `f^a = Σ_i p[a][i] e^i` applied to the source, if any.
    pub coframe_change: Option<Mat4<Rational>>,
    /// Substitution applied to the target branch's free parameters.
    pub identification: Vec<(Var, Poly)>,
    /// The coframe change is orthogonal, hence an isometry of the
    /// orthonormal metrics.
    pub is_isometry: bool,
    pub holds: bool,
    pub note: String,
}

pub(crate) fn signed_permutation(rows: [(usize, i64); 4]) -> Mat4<Rational> {
    let mut p = linalg::zeros::<Rational>();
    for (a, (i, s)) in rows.into_iter().enumerate() {
        p[a][i] = Rational::from_i64(s);
    }
    p
}

/// `f¹ = -e², f² = e¹, f³ = e³, f⁴ = e⁴`.
pub fn swap_coframe() -> Mat4<Rational> {
    signed_permutation([(1, -1), (0, 1), (2, 1), (3, 1)])
}

/// `f¹ = e¹, f² = -e², f³ = -e³, f⁴ = -e⁴`.
pub fn flip_coframe() -> Mat4<Rational> {
    signed_permutation([(0, 1), (1, -1), (2, -1), (3, -1)])
}

fn is_orthogonal(p: &Mat4<Rational>) -> bool {
    linalg::mat_mul(&linalg::transpose(p), p) == linalg::identity()
}

/// Compares `source` (optionally in a new coframe) with `target` after the
/// identification of the target's parameters.
#[allow(clippy::too_many_arguments)]
pub fn check_reduction(
    label: &str,
    from: u8,
    to: u8,
    source: &Branch,
    coframe: Option<Mat4<Rational>>,
    target: &Branch,
    identification: Vec<(Var, Poly)>,
    note: &str,
) -> Result<ReductionCertificate, Error> {
    let map: BTreeMap<Var, Poly> = identification.iter().cloned().collect();
    let free = source.free_params.clone();
    let target = target.reparametrize(&map, &Poly::constant(Rational::from_i64(1)), free);
    let mut src = RationalAlgebra::of(source);
    if let Some(p) = &coframe {
        src = src.in_coframe(p)?;
    }
    let degenerate = target.denominator.is_empty() || target.nondegeneracy.iter().any(Poly::is_empty);
    let holds = !degenerate && src.same_as(&RationalAlgebra::of(&target));
    let mut note = String::from(note);
    if degenerate {
        note.push_str(" The identification makes a denominator of the target vanish.");
    }
    Ok(ReductionCertificate {
        label: label.into(),
        from,
        to,
        is_isometry: coframe.as_ref().is_none_or(is_orthogonal),
        coframe_change: coframe,
        identification,
        holds,
        note,
    })
}

fn half(v: Var) -> Poly {
    Poly::var(v).scale(&crate::scalar::rat(1, 2))
}

/// The reductions exactly as stated alongside the classification.
pub fn verify_reductions() -> Result<Vec<ReductionCertificate>, Error> {
    let b14 = branch(14)?;
    let b5 = branch(5)?;
    let out = alloc::vec![
        check_reduction("14 -> 5", 14, 5, &b14, Some(swap_coframe()), &b5, alloc::vec![(b(5), half(c(6)))], "")?,
        check_reduction("17 -> 16", 17, 16, &branch(17)?, Some(flip_coframe()), &branch(16)?, Vec::new(), "")?,
        literal_ke_12_to_8()?,
        check_reduction(
            "16 (a5 = 0) -> 5",
            16,
            5,
            &branch(16)?.specialize(&[(a(5), Rational::from_i64(0))])?,
            None,
            &b5,
            alloc::vec![(b(5), half(a(4)))],
            "Specialization without a change of basis.",
        )?,
        check_reduction(
            "5 (b5 = -b2/2) -> 11",
            5,
            11,
            &b5.reparametrize(&BTreeMap::from([(b(5), -half(b(2)))]), &Poly::constant(Rational::from_i64(1)), alloc::vec![b(2)]),
            None,
            &branch(11)?,
            Vec::new(),
            "Specialization.",
        )?,
    ];
    Ok(out)
}

/// Kähler–Einstein case 12 against case 8 under `f¹ = -e², f² = e¹` with
/// `b₂ = -a₄, b₆ = a₆`, reading `a₄, a₆` as the values they take on case 8
/// (`a₄ = -b₄²/b₅`, `a₆ = 0`).
fn literal_ke_12_to_8() -> Result<ReductionCertificate, Error> {
    let map = BTreeMap::from([(b(2), Poly::var(b(4)).pow(2)), (b(6), Poly::default())]);
    let source = ke_branch(12)?.reparametrize(&map, &Poly::var(b(5)), alloc::vec![b(4), b(5)]);
    let degenerate = source.denominator.is_empty() || source.nondegeneracy.iter().any(Poly::is_empty);
    let holds = !degenerate
        && RationalAlgebra::of(&source).in_coframe(&swap_coframe())?.same_as(&RationalAlgebra::of(&ke_branch(8)?));
    Ok(ReductionCertificate {
        label: "12 -> 8 (Kähler-Einstein)".into(),
        from: 12,
        to: 8,
        coframe_change: Some(swap_coframe()),
        identification: alloc::vec![(b(6), Poly::default())],
        is_isometry: true,
        holds,
        note: "Source parameters b2 = b4^2/b5 (= -a4 on case 8) and b6 = 0 (= a6 on case 8).".into(),
    })
}

/// Corrected forms of the stated reductions that fail literally.
pub fn verify_corrected_reductions() -> Result<Vec<ReductionCertificate>, Error> {
    let v = Poly::var;
    Ok(alloc::vec![
        check_reduction(
            "16 (a5 = 0) ~ 5",
            16,
            5,
            &branch(16)?.specialize(&[(a(5), Rational::from_i64(0))])?,
            Some(swap_coframe()),
            &branch(5)?,
            alloc::vec![(b(5), half(a(4)))],
            "16 at a5 = 0 is 14 at c6 = a4; composing with 14 -> 5 gives 5 with a4 = 2 b5.",
        )?,
        check_reduction(
            "12 ~ 3 (Kähler-Einstein)",
            12,
            3,
            &ke_branch(12)?,
            Some(swap_coframe()),
            &ke_branch(3)?,
            alloc::vec![(a(4), -v(b(2))), (a(6), -v(b(6)))],
            "Kähler-Einstein case 12 is case 3 with b2 = -a4, b6 = -a6.",
        )?,
    ])
}
