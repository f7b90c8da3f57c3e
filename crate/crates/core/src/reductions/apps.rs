//! Instance builders for weight-k codewords and degree-constrained factors.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::check_subsets;
use crate::error::{HolantError, Result};
use crate::grid::{build_grid, SignatureGrid};
use crate::hypergraph::Hypergraph;
use crate::signature::Signature;

/// A matrix over `Z/p`, row-major, entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixModP {
    pub p: u64,
    pub rows: Vec<Vec<u64>>,
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl MatrixModP {
    pub fn new(p: u64, rows: Vec<Vec<u64>>) -> Result<Self> {
        let m = MatrixModP { p, rows };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(HolantError::InvalidInput(format!(
                "modulus {} is not prime",
                self.p
            )));
        }
        let cols = self.columns();
        if self.rows.iter().any(|r| r.len() != cols) {
            return Err(HolantError::InvalidInput(
                "rows have different lengths".into(),
            ));
        }
        if self.rows.iter().flatten().any(|&x| x >= self.p) {
            return Err(HolantError::InvalidInput(format!(
                "entries must lie in 0..{}",
                self.p
            )));
        }
        Ok(())
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

/// Rows become `s_p` vertices and columns become hyperedges over the rows
/// where they are non-zero. A 0/1 vector then lies in the kernel exactly when
/// every row sees a multiple of `p` chosen columns, which needs all non-zero
/// entries of a row to be equal; other matrices are rejected. All-zero
/// columns hang off an extra constant-one vertex.
pub fn build_codeword_instance(a: &MatrixModP, k: usize) -> Result<(SignatureGrid, usize)> {
    a.validate()?;
    for (i, row) in a.rows.iter().enumerate() {
        if !row.iter().filter(|&&x| x != 0).all_equal() {
            return Err(HolantError::Precondition(format!(
                "row {i} has distinct non-zero entries; only rows with a single non-zero value are supported"
            )));
        }
    }
    let r = a.rows.len();
    let mut edges: Vec<Vec<usize>> = (0..a.columns())
        .map(|j| (0..r).filter(|&i| a.rows[i][j] != 0).collect())
        .collect();
    let needs_dummy = edges.iter().any(Vec::is_empty);
    for e in &mut edges {
        if e.is_empty() {
            e.push(r);
        }
    }
    let n = r + usize::from(needs_dummy);
    let mut palette = vec![Signature::mod_p(a.p as usize)];
    let mut assignment = vec![0; r];
    if needs_dummy {
        palette.push(Signature::one());
        assignment.push(1);
    }
    Ok((
        build_grid(Hypergraph::new(n, edges)?, palette, assignment)?,
        k,
    ))
}

/// Weight-`k` vectors `x ∈ {0,1}^n` with `A·x ≡ 0 (mod p)`, by enumeration.
pub fn count_codewords(a: &MatrixModP, k: usize, budget: u64) -> Result<u128> {
    a.validate()?;
    let n = a.columns();
    check_subsets(n, k, budget)?;
    let count = (0..n)
        .combinations(k)
        .filter(|support| {
            a.rows
                .iter()
                .all(|row| support.iter().map(|&j| row[j]).sum::<u64>() % a.p == 0)
        })
        .count();
    Ok(count as u128)
}

/// `#Factor(S)`: the indicator of `degrees` at every vertex of `h`, so
/// untouched vertices count as degree 0 and need `0 ∈ degrees`.
pub fn build_factor_instance(
    h: &Hypergraph,
    degrees: &[usize],
    k: usize,
) -> Result<(SignatureGrid, usize)> {
    Ok((
        SignatureGrid::uniform(h.clone(), Signature::indicator(degrees)?)?,
        k,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::holant_bruteforce;
    use crate::hypergraph::named;
    use crate::scalar::ExactScalar;

    const BUDGET: u64 = 1_000_000;

    fn agree(a: &MatrixModP, k: usize) -> u128 {
        let (grid, k) = build_codeword_instance(a, k).unwrap();
        let want = count_codewords(a, k, BUDGET).unwrap();
        assert_eq!(
            holant_bruteforce(&grid, k).unwrap().value,
            ExactScalar::from_bigint(want.into())
        );
        want
    }

    #[test]
    fn small_codes() {
        assert_eq!(agree(&MatrixModP::new(2, vec![vec![1, 1]]).unwrap(), 2), 1);
        let id = MatrixModP::new(2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(agree(&id, 1), 0);
        assert_eq!(
            agree(&MatrixModP::new(3, vec![vec![1, 1, 1]]).unwrap(), 3),
            1
        );
        let zero_col = MatrixModP::new(3, vec![vec![2, 0, 2, 2], vec![0, 0, 1, 1]]).unwrap();
        for k in 0..=4 {
            agree(&zero_col, k);
        }
    }

    #[test]
    fn matrix_validation() {
        assert!(MatrixModP::new(4, vec![vec![1]]).is_err());
        assert!(MatrixModP::new(3, vec![vec![3]]).is_err());
        assert!(MatrixModP::new(3, vec![vec![1], vec![1, 2]]).is_err());
        let mixed = MatrixModP::new(3, vec![vec![1, 2]]).unwrap();
        assert!(build_codeword_instance(&mixed, 1).is_err());
    }

    #[test]
    fn factors() {
        let eval = |h: &Hypergraph, s: &[usize], k| {
            let (g, k) = build_factor_instance(h, s, k).unwrap();
            holant_bruteforce(&g, k).unwrap().value
        };
        assert_eq!(
            eval(&named::complete_graph(3), &[0, 1], 1),
            ExactScalar::from_int(3)
        );
        assert_eq!(
            eval(&named::petersen(), &[0, 1], 5),
            ExactScalar::from_int(6)
        );
        assert_eq!(eval(&named::cycle(4), &[0, 2], 4), ExactScalar::one());
    }
}
