//! Small dense linear algebra over a generic ring or field.

use alloc::vec::Vec;
use core::array;

use crate::error::Error;
use crate::scalar::{Field, Ring, Scalar};

pub type Mat4<T> = [[T; 4]; 4];
pub type Vec4<T> = [T; 4];

pub fn zeros<T: Ring>() -> Mat4<T> {
    array::from_fn(|_| array::from_fn(|_| T::zero()))
}

pub fn identity<T: Ring>() -> Mat4<T> {
    array::from_fn(|i| array::from_fn(|j| if i == j { T::one() } else { T::zero() }))
}

pub fn basis_vector<T: Ring>(i: usize) -> Vec4<T> {
    array::from_fn(|k| if k == i { T::one() } else { T::zero() })
}

pub fn transpose<T: Ring>(m: &Mat4<T>) -> Mat4<T> {
    array::from_fn(|i| array::from_fn(|j| m[j][i].clone()))
}

pub fn mat_mul<T: Ring>(a: &Mat4<T>, b: &Mat4<T>) -> Mat4<T> {
    array::from_fn(|i| {
        array::from_fn(|j| (0..4).fold(T::zero(), |acc, k| acc + a[i][k].clone() * b[k][j].clone()))
    })
}

pub fn mat_vec<T: Ring>(m: &Mat4<T>, v: &Vec4<T>) -> Vec4<T> {
    array::from_fn(|i| (0..4).fold(T::zero(), |acc, k| acc + m[i][k].clone() * v[k].clone()))
}

pub fn scale<T: Ring>(m: &Mat4<T>, s: &T) -> Mat4<T> {
    array::from_fn(|i| array::from_fn(|j| m[i][j].clone() * s.clone()))
}

pub fn sub<T: Ring>(a: &Mat4<T>, b: &Mat4<T>) -> Mat4<T> {
    array::from_fn(|i| array::from_fn(|j| a[i][j].clone() - b[i][j].clone()))
}

pub fn is_symmetric<T: Ring>(m: &Mat4<T>) -> bool {
    (0..4).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

pub fn map<T: Ring, U: Ring>(m: &Mat4<T>, f: impl Fn(&T) -> U) -> Mat4<U> {
    array::from_fn(|i| array::from_fn(|j| f(&m[i][j])))
}

/// Determinant of the leading `k×k` block by cofactor expansion.
fn leading_det<T: Ring>(m: &Mat4<T>, k: usize) -> T {
    fn rec<T: Ring>(m: &Mat4<T>, rows: &[usize], cols: &[usize]) -> T {
        if rows.len() == 1 {
            return m[rows[0]][cols[0]].clone();
        }
        let mut acc = T::zero();
        for (idx, &c) in cols.iter().enumerate() {
            let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = m[rows[0]][c].clone() * rec(m, &rows[1..], &minor_cols);
            acc = if idx % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    let idx: Vec<usize> = (0..k).collect();
    rec(m, &idx, &idx)
}

pub fn det<T: Ring>(m: &Mat4<T>) -> T {
    leading_det(m, 4)
}

/// Sylvester's criterion.
pub fn is_positive_definite<T: Scalar>(m: &Mat4<T>) -> bool {
    is_symmetric(m) && (1..=4).all(|k| leading_det(m, k) > T::zero())
}

pub fn inverse<T: Field>(m: &Mat4<T>) -> Result<Mat4<T>, Error> {
    let rows: Vec<Vec<T>> = (0..4)
        .map(|i| {
            let mut r: Vec<T> = m[i].to_vec();
            r.extend((0..4).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let (rref, pivots) = row_reduce(rows);
    if pivots.len() < 4 || pivots.iter().any(|&p| p >= 4) {
        return Err(Error::Singular);
    }
    Ok(array::from_fn(|i| array::from_fn(|j| rref[i][4 + j].clone())))
}

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped)
/// and the pivot column of each.
pub fn row_reduce<T: Field>(mut rows: Vec<Vec<T>>) -> (Vec<Vec<T>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let v = rows[i][j].clone() - f.clone() * rows[r][j].clone();
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank<T: Field>(rows: Vec<Vec<T>>) -> usize {
    row_reduce(rows).1.len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows of length `ncols`.
pub fn nullspace<T: Field>(rows: Vec<Vec<T>>, ncols: usize) -> Vec<Vec<T>> {
    let (rref, pivots) = row_reduce(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v: Vec<T> = (0..ncols).map(|_| T::zero()).collect();
            v[f] = T::one();
            for (row, &pc) in rref.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn m(vals: [[i64; 4]; 4]) -> Mat4<Rational> {
        array::from_fn(|i| array::from_fn(|j| rat(vals[i][j], 1)))
    }

    #[test]
    fn inverse_round_trips() {
        let a = m([[2, 1, 0, 0], [1, 3, 1, 0], [0, 1, 4, 1], [0, 0, 1, 5]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity());
    }

    #[test]
    fn singular_matrix_rejected() {
        let a = m([[1, 2, 0, 0], [2, 4, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(inverse(&a), Err(Error::Singular));
        assert!(det(&a).is_zero());
    }

    #[test]
    fn sylvester_criterion() {
        assert!(is_positive_definite(&m([[2, 1, 0, 0], [1, 2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])));
        assert!(!is_positive_definite(&m([[1, 2, 0, 0], [2, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])));
        assert!(!is_positive_definite(&m([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])));
    }

    #[test]
    fn nullspace_of_rank_two() {
        let rows = alloc::vec![
            alloc::vec![rat(1, 1), rat(1, 1), rat(0, 1)],
            alloc::vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        let ns = nullspace(rows, 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], alloc::vec![rat(1, 1), rat(-1, 1), rat(1, 1)]);
    }
}
