//! Explicit isomorphisms between four-dimensional Lie algebras whose
//! commutator has codimension one.

use alloc::format;
use alloc::vec::Vec;
use core::array;

use super::ansatz::{g49, r2sol2};
use crate::error::Error;
use crate::lie::LieAlgebra4;
use crate::linalg::{self, Mat4, Vec4};
use crate::scalar::{rat, Rational, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct IsomorphismCertificate {
    /// Column `j` is the image of the `j`-th source basis vector.
    pub map: Mat4<Rational>,
    /// Basis pairs `(i, j)` with `Φ[x_i, x_j] ≠ [Φx_i, Φx_j]`.
    pub failures: Vec<(usize, usize)>,
    pub source_series: Vec<usize>,
    pub target_series: Vec<usize>,
    /// `tr ad_{Φx} = tr ad_x` for every basis vector.
    pub traces_correspond: bool,
}

impl IsomorphismCertificate {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && linalg::det(&self.map) != Rational::zero()
    }
}

pub fn certify(src: &LieAlgebra4<Rational>, dst: &LieAlgebra4<Rational>, map: Mat4<Rational>) -> Result<IsomorphismCertificate, Error> {
    let col = |j: usize| -> Vec4<Rational> { array::from_fn(|i| map[i][j].clone()) };
    let mut failures = Vec::new();
    for &(i, j) in crate::exterior::PAIRS.iter() {
        let lhs = linalg::mat_vec(&map, &src.bracket_basis(i, j));
        let rhs = dst.bracket(&col(i), &col(j));
        if lhs != rhs {
            failures.push((i, j));
        }
    }
    let (ts, td) = (src.ad_traces(), dst.ad_traces());
    let traces_correspond = (0..4).all(|j| {
        let image = col(j);
        (0..4).fold(Rational::zero(), |acc, i| acc + td[i].clone() * image[i].clone()) == ts[j]
    });
    Ok(IsomorphismCertificate {
        map,
        failures,
        source_series: src.solvability_profile()?.derived_series,
        target_series: dst.solvability_profile()?.derived_series,
        traces_correspond,
    })
}

fn complement_vector(derived: &[Vec4<Rational>]) -> Option<Vec4<Rational>> {
    (0..4).map(linalg::basis_vector::<Rational>).find(|e| {
        let mut rows: Vec<Vec<Rational>> = derived.iter().map(|d| d.to_vec()).collect();
        rows.push(e.to_vec());
        linalg::rank(rows) == 4
    })
}

/// Integer vectors with entries in `-bound..=bound`, small magnitudes first
/// in each coordinate (`0, 1, -1, 2, -2, …`).
fn small_integer_vectors(dim: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (2 * bound + 1) as usize;
    let digit = |d: usize| -> i64 {
        let m = d.div_ceil(2) as i64;
        if d % 2 == 1 { m } else { -m }
    };
    (0..width.pow(dim as u32)).map(move |mut n| {
        (0..dim)
            .map(|_| {
                let d = digit(n % width);
                n /= width;
                d
            })
            .collect()
    })
}

/// Searches for an isomorphism `src → dst`: the image of a complement
/// vector is fixed up to the trace functional and a small derived part;
/// bracket-equivariance with it is linear in the images of the commutator,
/// and the remaining quadratic conditions are checked on small integer
/// combinations of the solution space.
pub fn find_isomorphism(src: &LieAlgebra4<Rational>, dst: &LieAlgebra4<Rational>) -> Result<IsomorphismCertificate, Error> {
    let basis: Vec<Vec4<Rational>> = (0..4).map(linalg::basis_vector).collect();
    let ds = src.span_of_brackets(&basis, &basis);
    let dt = dst.span_of_brackets(&basis, &basis);
    if ds.len() != 3 || dt.len() != 3 {
        return Err(Error::NoIsomorphism(format!("commutator dimensions {} and {}; the search needs 3", ds.len(), dt.len())));
    }
    let x0 = complement_vector(&ds).ok_or_else(|| Error::NoIsomorphism("no complement".into()))?;
    let w0 = complement_vector(&dt).ok_or_else(|| Error::NoIsomorphism("no complement".into()))?;
    let dot = |a: &Vec4<Rational>, b: &Vec4<Rational>| (0..4).fold(Rational::zero(), |acc, i| acc + a[i].clone() * b[i].clone());
    let (ts, td) = (src.ad_traces(), dst.ad_traces());
    let (tx, tw) = (dot(&ts, &x0), dot(&td, &w0));
    let alphas: Vec<Rational> = if tx.is_zero() != tw.is_zero() {
        return Err(Error::NoIsomorphism("trace functionals differ in rank".into()));
    } else if tx.is_zero() {
        [rat(1, 1), rat(-1, 1), rat(2, 1), rat(-2, 1), rat(1, 2), rat(-1, 2)].to_vec()
    } else {
        alloc::vec![tx / tw]
    };
    let src_basis: Mat4<Rational> = array::from_fn(|i| [x0[i].clone(), ds[0][i].clone(), ds[1][i].clone(), ds[2][i].clone()]);
    let src_basis_inv = linalg::inverse(&src_basis)?;
    // [x0, d_i] = Σ_j m[i][j] d_j
    let m: Vec<Vec4<Rational>> = ds.iter().map(|d| linalg::mat_vec(&src_basis_inv, &src.bracket(&x0, d))).collect();
    let annihilator = linalg::nullspace(dt.iter().map(|d| d.to_vec()).collect(), 4);

    for alpha in &alphas {
        for c in small_integer_vectors(3, 2) {
            let y: Vec4<Rational> = array::from_fn(|i| {
                alpha.clone() * w0[i].clone() + (0..3).fold(Rational::zero(), |acc, k| acc + Rational::from_i64(c[k]) * dt[k][i].clone())
            });
            let ad_y: Mat4<Rational> = {
                let cols: [Vec4<Rational>; 4] = array::from_fn(|j| dst.bracket(&y, &linalg::basis_vector(j)));
                array::from_fn(|i| array::from_fn(|j| cols[j][i].clone()))
            };
            // Unknowns u[4i + r]: component r of Φ(d_i).
            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for i in 0..3 {
                for n in &annihilator {
                    let mut row = alloc::vec![Rational::zero(); 12];
                    for r in 0..4 {
                        row[4 * i + r] = n[r].clone();
                    }
                    rows.push(row);
                }
                for r in 0..4 {
                    let mut row = alloc::vec![Rational::zero(); 12];
                    for j in 0..3 {
                        row[4 * j + r] = row[4 * j + r].clone() + m[i][1 + j].clone();
                    }
                    for q in 0..4 {
                        row[4 * i + q] = row[4 * i + q].clone() - ad_y[r][q].clone();
                    }
                    rows.push(row);
                }
            }
            let null = linalg::nullspace(rows, 12);
            if null.is_empty() || null.len() > 4 {
                continue;
            }
            for coeffs in small_integer_vectors(null.len(), 2) {
                if coeffs.iter().all(|&x| x == 0) {
                    continue;
                }
                let u: Vec<Rational> = (0..12)
                    .map(|k| null.iter().zip(&coeffs).fold(Rational::zero(), |acc, (v, &w)| acc + Rational::from_i64(w) * v[k].clone()))
                    .collect();
                let images: Mat4<Rational> = array::from_fn(|r| {
                    [y[r].clone(), u[r].clone(), u[4 + r].clone(), u[8 + r].clone()]
                });
                if linalg::det(&images).is_zero() {
                    continue;
                }
                let map = linalg::mat_mul(&images, &src_basis_inv);
                let cert = certify(src, dst, map)?;
                if cert.holds() {
                    return Ok(cert);
                }
            }
        }
    }
    Err(Error::NoIsomorphism("no map among the searched candidates".into()))
}

/// An explicit isomorphism `𝔤₄,₉(½) → ℝ² ⋉ 𝔰𝔬𝔩₂`.
pub fn g49_vs_r2sol2() -> Result<IsomorphismCertificate, Error> {
    find_isomorphism(&g49(rat(1, 2)), &r2sol2())
}
