//! JSON input describing a metric Lie algebra with an optional almost
//! Hermitian structure. All numbers are exact rationals written as strings
//! (`"3"`, `"-1/2"`). Basis indices are 1-based; 2-form components are in
//! the order `12, 13, 14, 23, 24, 34`.

use std::str::FromStr;

use lie4_core::exterior::TwoForm;
use lie4_core::linalg::{self, Mat4};
use lie4_core::{CoframeDiff, LieAlgebra4, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{field}: cannot parse {value:?} as a rational p/q with q != 0")]
    Rational { field: String, value: String },
    #[error("exactly one of structure_constants and coframe_d must be given")]
    AlgebraSource,
    #[error("structure constant c^{k}_{{{i}{j}}}: need 1 <= i < j <= 4 and 1 <= k <= 4")]
    Index { i: usize, j: usize, k: usize },
    #[error("structure constant c^{k}_{{{i}{j}}} given twice")]
    Duplicate { i: usize, j: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

/// `[e_i, e_j] = Σ value · e_k` entries, or the differentials `de^k` of the
/// dual coframe, plus optional metric (default identity), `J` and `Ω`.
///
/// `J` is the matrix of the endomorphism: column `a` holds `J e_a`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<Vec<StructureConstant>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coframe_d: Option<[[String; 6]; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<[[String; 4]; 4]>,
    #[serde(default, rename = "J", skip_serializing_if = "Option::is_none")]
    pub j: Option<[[String; 4]; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<[String; 6]>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedSpec {
    pub alg: LieAlgebra4<Rational>,
    pub metric: Mat4<Rational>,
    pub j: Option<Mat4<Rational>>,
    pub omega: Option<TwoForm<Rational>>,
}

pub fn parse_rational(field: &str, value: &str) -> Result<Rational, SpecError> {
    Rational::from_str(value.trim()).map_err(|_| SpecError::Rational { field: field.into(), value: value.into() })
}

fn parse_matrix(field: &str, m: &[[String; 4]; 4]) -> Result<Mat4<Rational>, SpecError> {
    let mut out = linalg::zeros();
    for (a, row) in m.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            out[a][b] = parse_rational(&format!("{field}[{a}][{b}]"), v)?;
        }
    }
    Ok(out)
}

fn parse_two_form(field: &str, w: &[String; 6]) -> Result<TwoForm<Rational>, SpecError> {
    let mut coeffs: [Rational; 6] = std::array::from_fn(|_| Rational::from_integer(0.into()));
    for (n, v) in w.iter().enumerate() {
        coeffs[n] = parse_rational(&format!("{field}[{n}]"), v)?;
    }
    Ok(TwoForm::new(coeffs))
}

pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}

fn matrix_strings(m: &Mat4<Rational>) -> [[String; 4]; 4] {
    m.each_ref().map(|row| row.each_ref().map(rational_string))
}

impl AlgebraSpecFile {
    pub fn from_json(src: &str) -> Result<Self, SpecError> {
        serde_json::from_str(src).map_err(|e| SpecError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files serialize")
    }

    pub fn parse(&self) -> Result<ParsedSpec, SpecError> {
        let alg = match (&self.structure_constants, &self.coframe_d) {
            (Some(list), None) => {
                let mut alg = LieAlgebra4::<Rational>::abelian();
                let mut seen = std::collections::BTreeSet::new();
                for sc in list {
                    let &StructureConstant { i, j, k, .. } = sc;
                    if !(1 <= i && i < j && j <= 4 && (1..=4).contains(&k)) {
                        return Err(SpecError::Index { i, j, k });
                    }
                    if !seen.insert((i, j, k)) {
                        return Err(SpecError::Duplicate { i, j, k });
                    }
                    let mut v = alg.bracket_basis(i - 1, j - 1);
                    v[k - 1] = parse_rational(&format!("c^{k}_{i}{j}"), &sc.value)?;
                    alg.set_bracket(i - 1, j - 1, v);
                }
                alg
            }
            (None, Some(rows)) => {
                let mut d: [TwoForm<Rational>; 4] = std::array::from_fn(|_| TwoForm::zero());
                for (k, row) in rows.iter().enumerate() {
                    d[k] = parse_two_form(&format!("coframe_d[{k}]"), row)?;
                }
                LieAlgebra4::from_coframe(&CoframeDiff { d })
            }
            _ => return Err(SpecError::AlgebraSource),
        };
        Ok(ParsedSpec {
            alg,
            metric: match &self.metric {
                Some(m) => parse_matrix("metric", m)?,
                None => linalg::identity(),
            },
            j: self.j.as_ref().map(|m| parse_matrix("J", m)).transpose()?,
            omega: self.omega.as_ref().map(|w| parse_two_form("omega", w)).transpose()?,
        })
    }

    /// A spec in coframe form, listing only what is given.
    pub fn from_parts(
        alg: &LieAlgebra4<Rational>,
        metric: Option<&Mat4<Rational>>,
        j: Option<&Mat4<Rational>>,
        omega: Option<&TwoForm<Rational>>,
    ) -> Self {
        let cf = alg.to_coframe();
        AlgebraSpecFile {
            structure_constants: None,
            coframe_d: Some(cf.d.each_ref().map(|w| w.coeffs.each_ref().map(rational_string))),
            metric: metric.map(matrix_strings),
            j: j.map(matrix_strings),
            omega: omega.map(|w| w.coeffs.each_ref().map(rational_string)),
        }
    }
}
