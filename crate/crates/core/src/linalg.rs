//! Exact linear algebra over `Z` and `Q`.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination, so every
//! intermediate value stays an integer. Change-of-basis solves run over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Bareiss elimination in place. Returns the rank and the sign of the row
/// permutation applied.
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, i32) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(pivot, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    (rank, sign)
}

/// Rank over `Q` of an integer matrix given by rows.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m = rows.to_vec();
    bareiss(&mut m).0
}

/// Determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut m = rows.to_vec();
    let (rank, sign) = bareiss(&mut m);
    if rank < n {
        return BigInt::zero();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Expresses each target vector as a rational combination of the basis
/// vectors. Returns `None` if the basis is dependent or some target lies
/// outside its span.
pub fn solve_in_basis(basis: &[Vec<BigInt>], targets: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let k = basis.len();
    let width = basis.first().or(targets.first()).map_or(0, Vec::len);
    // Column-augmented system: rows = coordinates, columns = basis vectors | targets.
    let mut m: Vec<Vec<BigRational>> = (0..width)
        .map(|coord| {
            basis
                .iter()
                .chain(targets)
                .map(|v| BigRational::from_integer(v[coord].clone()))
                .collect()
        })
        .collect();
    let total = k + targets.len();
    let mut pivot_row = 0;
    for col in 0..k {
        let pivot = (pivot_row..width).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, pivot_row);
        let inv = m[pivot_row][col].recip();
        for x in &mut m[pivot_row][col..total] {
            *x = &*x * &inv;
        }
        let pivot_tail = m[pivot_row][col..total].to_vec();
        for (r, row) in m.iter_mut().enumerate().take(width) {
            if r != pivot_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..total].iter_mut().zip(&pivot_tail) {
                    *x -= &factor * p;
                }
            }
        }
        pivot_row += 1;
    }
    // Leftover rows must be zero in the target columns for consistency.
    if m[pivot_row..].iter().any(|row| row[k..].iter().any(|x| !x.is_zero())) {
        return None;
    }
    Some(
        (0..targets.len())
            .map(|t| (0..k).map(|b| m[b][k + t].clone()).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[0, 1, 0], &[1, 0, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&mat(&[])), 0);
        assert_eq!(rank(&mat(&[&[0, 0]])), 0);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&mat(&[&[0, 1], &[-1, 0]])), BigInt::from(1));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&mat(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn solve_examples() {
        let basis = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let sol = solve_in_basis(&basis, &mat(&[&[2, 5, 3]])).unwrap();
        assert_eq!(
            sol[0],
            vec![BigRational::from_integer(2.into()), BigRational::from_integer(3.into())]
        );
        assert!(solve_in_basis(&basis, &mat(&[&[1, 0, 0]])).is_none());
        assert!(solve_in_basis(&mat(&[&[1, 1], &[2, 2]]), &mat(&[&[1, 1]])).is_none());
    }
}
