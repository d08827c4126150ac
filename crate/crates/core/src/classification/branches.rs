//! The seventeen solution branches of the condition systems.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::ansatz::{self, all_params, param, ParamFamily};
use super::conditions::{parse_poly, ConditionSystems};
use crate::error::Error;
use crate::lie::LieAlgebra4;
use crate::poly::{Poly, Var};
use crate::scalar::{Rational, Ring};

/// Branches whose complex structure the classification declares integrable.
pub const LISTED_INTEGRABLE: [u8; 12] = [1, 2, 3, 4, 6, 7, 8, 9, 10, 12, 13, 15];

/// A rational parametrization of a solution branch: every ansatz parameter
/// equals `numerators[v] / denominator` as a function of `free_params`.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub id: u8,
    pub free_params: Vec<Var>,
    pub numerators: BTreeMap<Var, Poly>,
    pub denominator: Poly,
    /// Parameters (or expressions) that must not vanish.
    pub nondegeneracy: Vec<Poly>,
}

struct Table {
    id: u8,
    free: &'static [&'static str],
    denominator: &'static str,
    /// `(parameter, numerator over the denominator or over 1)`.
    relations: &'static [(&'static str, &'static str, bool)],
}

const TABLE: [Table; 17] = [
    Table { id: 1, free: &["a5", "c6"], denominator: "1", relations: &[("b3", "-a5", false)] },
    Table {
        id: 2,
        free: &["b5", "a5"],
        denominator: "1",
        relations: &[("c6", "2*b5", false), ("b3", "-a5", false), ("a3", "b5", false)],
    },
    Table {
        id: 3,
        free: &["a4", "a6", "c6"],
        denominator: "a6",
        relations: &[
            ("c4", "-a6", false),
            ("a1", "a4^2 + a4*c6 + a6^2", true),
            ("a3", "-a4", false),
            ("c3", "a6", false),
        ],
    },
    Table { id: 4, free: &["a1", "a4"], denominator: "1", relations: &[("c6", "-a4", false), ("a3", "-a4", false)] },
    Table {
        id: 5,
        free: &["b5"],
        denominator: "1",
        relations: &[("c6", "2*b5", false), ("a3", "-b5", false), ("b2", "-2*b5", false)],
    },
    Table {
        id: 6,
        free: &["b5"],
        denominator: "1",
        relations: &[("c6", "2*b5", false), ("a3", "-b5", false), ("b2", "2*b5", false)],
    },
    Table { id: 7, free: &["b2", "b3"], denominator: "1", relations: &[("a4", "-b2", false), ("a5", "-b3", false)] },
    Table {
        id: 8,
        free: &["b4", "b5"],
        denominator: "b5",
        relations: &[
            ("a2", "-b4", false),
            ("a3", "b4^2", true),
            ("a4", "-b4^2", true),
            ("a5", "-b4", false),
            ("b2", "b5", false),
            ("b3", "-b4", false),
            ("c6", "b4^2 + b5^2", true),
        ],
    },
    Table { id: 9, free: &["a1", "b1", "c6"], denominator: "1", relations: &[] },
    Table {
        id: 10,
        free: &["b2"],
        denominator: "1",
        relations: &[("a3", "-1/2*b2", false), ("b5", "1/2*b2", false), ("c6", "b2", false)],
    },
    Table {
        id: 11,
        free: &["b2"],
        denominator: "1",
        relations: &[("a3", "1/2*b2", false), ("b5", "-1/2*b2", false), ("c6", "-b2", false)],
    },
    Table {
        id: 12,
        free: &["b2", "b6", "c6"],
        denominator: "b6",
        relations: &[
            ("b1", "-c6*b2 + b2^2 + b6^2", true),
            ("b5", "b2", false),
            ("c2", "b6", false),
            ("c5", "b6", false),
        ],
    },
    Table {
        id: 13,
        free: &["a6", "b6", "c6"],
        denominator: "1",
        relations: &[("a1", "a6", false), ("b1", "b6", false), ("c2", "b6", false), ("c3", "a6", false), ("c5", "b6", false)],
    },
    Table {
        id: 14,
        free: &["c6"],
        denominator: "1",
        relations: &[("a3", "1/2*c6", false), ("a4", "c6", false), ("b5", "-1/2*c6", false)],
    },
    Table {
        id: 15,
        free: &["c6"],
        denominator: "1",
        relations: &[("a3", "1/2*c6", false), ("a4", "-c6", false), ("b5", "-1/2*c6", false)],
    },
    Table {
        id: 16,
        free: &["a4", "a5"],
        denominator: "a4",
        relations: &[
            ("a2", "-a5", false),
            ("a3", "1/2*a4^2 - 1/2*a5^2", true),
            ("b2", "-a5^2", true),
            ("b3", "a5", false),
            ("b4", "a5", false),
            ("b5", "1/2*a5^2 - 1/2*a4^2", true),
            ("c6", "a4^2 + a5^2", true),
        ],
    },
    Table {
        id: 17,
        free: &["a4", "a5"],
        denominator: "a4",
        relations: &[
            ("a2", "a5", false),
            ("a3", "1/2*a5^2 - 1/2*a4^2", true),
            ("b2", "-a5^2", true),
            ("b3", "a5", false),
            ("b4", "-a5", false),
            ("b5", "1/2*a4^2 - 1/2*a5^2", true),
            ("c6", "-a4^2 - a5^2", true),
        ],
    },
];

fn var(name: &str) -> Var {
    param(name).expect("parameter name")
}

impl Branch {
    fn from_table(t: &Table) -> Branch {
        let den = parse_poly(t.denominator);
        let mut numerators: BTreeMap<Var, Poly> = BTreeMap::new();
        for &(v, num, over_den) in t.relations {
            let num = parse_poly(num);
            numerators.insert(var(v), if over_den { num } else { num * den.clone() });
        }
        let free_params: Vec<Var> = t.free.iter().map(|n| var(n)).collect();
        for &v in &free_params {
            numerators.insert(v, Poly::var(v) * den.clone());
        }
        // Closedness of Ω fixes c1, b4, c2, c4 unless the branch lists them.
        let get = |m: &BTreeMap<Var, Poly>, v: Var| m.get(&v).cloned().unwrap_or_default();
        let implied = [
            (var("c1"), get(&numerators, var("a3")) + get(&numerators, var("b5"))),
            (var("b4"), -get(&numerators, var("a2"))),
            (var("c2"), get(&numerators, var("b6"))),
            (var("c4"), -get(&numerators, var("a6"))),
        ];
        for (v, value) in implied {
            numerators.entry(v).or_insert(value);
        }
        for v in all_params() {
            numerators.entry(v).or_default();
        }
        let nondegeneracy = if den.as_constant().is_some() { Vec::new() } else { alloc::vec![den.clone()] };
        Branch { id: t.id, free_params, numerators, denominator: den, nondegeneracy }
    }

    pub fn numerator_family(&self) -> ParamFamily<Poly> {
        ParamFamily::from_fn(|v| self.numerators[&v].clone())
    }

    /// Structure constants scaled by the common denominator.
    pub fn numerator_algebra(&self) -> LieAlgebra4<Poly> {
        ansatz::ansatz_algebra(&self.numerator_family())
    }

    /// Substitutes `x_v = map[v] / den` for some free parameters, keeping a
    /// single common denominator. `free_params` lists the new free parameters.
    pub fn reparametrize(&self, map: &BTreeMap<Var, Poly>, den: &Poly, free_params: Vec<Var>) -> Branch {
        let degree_in_map = |p: &Poly| p.degree();
        let top = self.numerators.values().chain(core::iter::once(&self.denominator)).map(degree_in_map).max().unwrap_or(0);
        let lift = |p: &Poly| p.substitute_over(map, den) * den.pow(top - p.degree());
        let numerators = self.numerators.iter().map(|(v, p)| (*v, lift(p))).collect();
        let denominator = lift(&self.denominator);
        let mut nondegeneracy: Vec<Poly> = self.nondegeneracy.iter().map(|p| p.substitute_over(map, den)).collect();
        if den.as_constant().is_none() {
            nondegeneracy.push(den.clone());
        }
        Branch { id: self.id, free_params, numerators, denominator, nondegeneracy }
    }

    /// Fixes some free parameters to rational values.
    pub fn specialize(&self, fixed: &[(Var, Rational)]) -> Result<Branch, Error> {
        let map: BTreeMap<Var, Poly> = fixed.iter().map(|(v, q)| (*v, Poly::constant(q.clone()))).collect();
        let out = Branch {
            id: self.id,
            free_params: self.free_params.iter().copied().filter(|v| !map.contains_key(v)).collect(),
            numerators: self.numerators.iter().map(|(v, p)| (*v, p.substitute(&map))).collect(),
            denominator: self.denominator.substitute(&map),
            nondegeneracy: self.nondegeneracy.iter().map(|p| p.substitute(&map)).collect(),
        };
        if out.nondegeneracy.iter().chain(core::iter::once(&out.denominator)).any(Poly::is_empty) {
            return Err(Error::DegenerateBranch {
                branch: self.id,
                reason: format!("a nondegeneracy expression vanishes identically after fixing {}", names(fixed)),
            });
        }
        Ok(out)
    }

    /// All parameter values at a point of the branch.
    pub fn instantiate(&self, values: &[(Var, Rational)]) -> Result<ParamFamily<Rational>, Error> {
        let point: BTreeMap<Var, Rational> = values.iter().cloned().collect();
        let missing: Vec<Var> = self.free_params.iter().copied().filter(|v| !point.contains_key(v)).collect();
        if !missing.is_empty() {
            return Err(Error::DegenerateBranch {
                branch: self.id,
                reason: format!("free parameters without values: {}", missing.iter().map(|v| ansatz::param_name(*v)).collect::<Vec<_>>().join(", ")),
            });
        }
        let eval = |p: &Poly| p.eval(&point).expect("all free parameters valued");
        let den = eval(&self.denominator);
        let degenerate = den.is_zero() || self.nondegeneracy.iter().any(|p| eval(p).is_zero());
        if degenerate {
            return Err(Error::DegenerateBranch {
                branch: self.id,
                reason: format!("a nondegeneracy expression vanishes at {}", names(values)),
            });
        }
        Ok(ParamFamily::from_fn(|v| eval(&self.numerators[&v]) / den.clone()))
    }

    pub fn algebra_at(&self, values: &[(Var, Rational)]) -> Result<LieAlgebra4<Rational>, Error> {
        Ok(ansatz::ansatz_algebra(&self.instantiate(values)?))
    }
}

fn names(values: &[(Var, Rational)]) -> alloc::string::String {
    values.iter().map(|(v, q)| format!("{} = {}", ansatz::param_name(*v), q)).collect::<Vec<_>>().join(", ")
}

pub fn branches() -> Vec<Branch> {
    TABLE.iter().map(Branch::from_table).collect()
}

pub fn branch(id: u8) -> Result<Branch, Error> {
    TABLE.iter().find(|t| t.id == id).map(Branch::from_table).ok_or(Error::UnknownBranch(id))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchCertificate {
    pub id: u8,
    /// The required conditions after substitution and clearing denominators.
    pub residuals: Vec<Poly>,
    pub all_zero: bool,
    pub integrable: bool,
    /// Whether the branch is on the classification's integrable list.
    pub listed_integrable: bool,
}

impl BranchCertificate {
    pub fn residual_count(&self) -> usize {
        self.residuals.len()
    }

    pub fn nonzero_residuals(&self) -> usize {
        self.residuals.iter().filter(|p| !p.is_empty()).count()
    }
}

pub fn verify_branch(b: &Branch, systems: &ConditionSystems) -> Result<BranchCertificate, Error> {
    if b.denominator.is_empty() {
        return Err(Error::DegenerateBranch { branch: b.id, reason: "denominator is identically zero".into() });
    }
    let subst = |p: &Poly| p.substitute_over(&b.numerators, &b.denominator);
    let residuals: Vec<Poly> = systems.required().map(subst).collect();
    let all_zero = residuals.iter().all(Poly::is_empty);
    let integrable = systems.integrability.iter().all(|p| subst(p).is_empty());
    Ok(BranchCertificate { id: b.id, residuals, all_zero, integrable, listed_integrable: LISTED_INTEGRABLE.contains(&b.id) })
}

/// Fixes parameters, then verifies; a vanishing denominator is an error.
pub fn verify_branch_at(b: &Branch, fixed: &[(Var, Rational)], systems: &ConditionSystems) -> Result<BranchCertificate, Error> {
    verify_branch(&b.specialize(fixed)?, systems)
}
