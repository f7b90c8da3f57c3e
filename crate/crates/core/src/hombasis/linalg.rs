//! Exact Gaussian elimination over the Gaussian rationals.

use crate::error::{HolantError, Result};
use crate::scalar::ExactScalar;

/// Row-reduces `m` in place and returns the pivot columns.
fn reduce(m: &mut [Vec<ExactScalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse().expect("pivot is non-zero");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Rank of a (possibly rectangular) matrix.
pub fn rank(matrix: &[Vec<ExactScalar>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m = matrix.to_vec();
    reduce(&mut m, cols).len()
}

/// The unique `x` with `matrix · x = rhs`. The system may be overdetermined
/// but must be consistent and have full column rank.
pub fn solve(matrix: &[Vec<ExactScalar>], rhs: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
    if matrix.len() != rhs.len() {
        return Err(HolantError::InvalidInput(format!(
            "{} rows but {} right-hand sides",
            matrix.len(),
            rhs.len()
        )));
    }
    let cols = matrix.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<ExactScalar>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = reduce(&mut m, cols);
    if pivots.len() < cols {
        return Err(HolantError::Internal(format!(
            "linear system has rank {} < {cols}",
            pivots.len()
        )));
    }
    if m[cols..].iter().any(|row| !row[cols].is_zero()) {
        return Err(HolantError::Internal("inconsistent linear system".into()));
    }
    Ok(m[..cols].iter().map(|row| row[cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> ExactScalar {
        ExactScalar::from_int(v)
    }

    #[test]
    fn solves_small_system() {
        let m = vec![vec![s(2), s(1)], vec![s(1), s(3)]];
        let x = solve(&m, &[s(3), s(5)]).unwrap();
        assert_eq!(x, vec![ExactScalar::ratio(4, 5), ExactScalar::ratio(7, 5)]);
    }

    #[test]
    fn singular_is_reported() {
        let m = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert_eq!(rank(&m), 1);
        assert!(solve(&m, &[s(1), s(2)]).is_err());
    }

    #[test]
    fn overdetermined_consistent() {
        let m = vec![vec![s(1)], vec![s(2)]];
        assert_eq!(solve(&m, &[s(3), s(6)]).unwrap(), vec![s(3)]);
        assert!(solve(&m, &[s(3), s(5)]).is_err());
    }
}
