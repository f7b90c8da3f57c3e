use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{HolantResult, Method, WorkStats};
use crate::error::{HolantError, Result};
use crate::grid::SignatureGrid;
use crate::par::{self, Execution};
use crate::scalar::ExactScalar;

/// Default limit on the number of subsets the defining sum may enumerate.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Edge copies in enumeration order plus, per vertex, its value table and the
/// position after which its degree is final.
struct Layout {
    edges: Vec<Vec<usize>>,
    /// `closing[i]`: vertices whose last incident edge copy is `i`.
    closing: Vec<Vec<usize>>,
    /// `values[v][d] = s_v(d)` for `d ≤ deg(v)`.
    values: Vec<Vec<ExactScalar>>,
    /// Product of `s_v(0)` over vertices without edges.
    isolated: ExactScalar,
    n: usize,
}

impl Layout {
    fn new(grid: &SignatureGrid) -> Self {
        let g = grid.graph();
        let edges: Vec<Vec<usize>> = g.edge_copies().into_iter().map(<[usize]>::to_vec).collect();
        let mut last = vec![usize::MAX; g.n()];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                last[v] = i;
            }
        }
        let mut closing = vec![Vec::new(); edges.len()];
        let mut isolated = ExactScalar::one();
        let deg = g.degrees();
        let mut values = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            values.push(grid.signature(v).values(deg[v] as usize));
            if last[v] == usize::MAX {
                isolated *= &values[v][0];
            } else {
                closing[last[v]].push(v);
            }
        }
        Layout {
            edges,
            closing,
            values,
            isolated,
            n: g.n(),
        }
    }

    /// Multiplies in the factors of vertices closing at `i`.
    fn close(&self, i: usize, deg: &[usize], acc: &ExactScalar) -> ExactScalar {
        let mut out = acc.clone();
        for &v in &self.closing[i] {
            out *= &self.values[v][deg[v]];
            if out.is_zero() {
                break;
            }
        }
        out
    }

    /// Sum over completions of a partial choice: edges `< i` are decided,
    /// `remaining` more must be picked from `i..`.
    fn dfs(
        &self,
        i: usize,
        remaining: usize,
        deg: &mut Vec<usize>,
        acc: &ExactScalar,
        leaves: &mut u64,
    ) -> ExactScalar {
        let m = self.edges.len();
        if i == m {
            *leaves += 1;
            return acc.clone();
        }
        let mut total = ExactScalar::zero();
        if remaining > 0 {
            for &v in &self.edges[i] {
                deg[v] += 1;
            }
            let next = self.close(i, deg, acc);
            if !next.is_zero() {
                total += self.dfs(i + 1, remaining - 1, deg, &next, leaves);
            }
            for &v in &self.edges[i] {
                deg[v] -= 1;
            }
        }
        if m - i > remaining {
            let next = self.close(i, deg, acc);
            if !next.is_zero() {
                total += self.dfs(i + 1, remaining, deg, &next, leaves);
            }
        }
        total
    }

    /// Contribution of all k-subsets whose smallest chosen copy is `first`.
    fn starting_at(&self, first: usize, k: usize) -> (ExactScalar, u64) {
        let mut deg = vec![0; self.n];
        let mut acc = self.isolated.clone();
        for i in 0..first {
            acc = self.close(i, &deg, &acc);
            if acc.is_zero() {
                return (acc, 0);
            }
        }
        for &v in &self.edges[first] {
            deg[v] += 1;
        }
        acc = self.close(first, &deg, &acc);
        if acc.is_zero() {
            return (acc, 0);
        }
        let mut leaves = 0;
        let value = self.dfs(first + 1, k - 1, &mut deg, &acc, &mut leaves);
        (value, leaves)
    }

    fn dfs_all(
        &self,
        i: usize,
        chosen: usize,
        deg: &mut Vec<usize>,
        acc: &ExactScalar,
        out: &mut [ExactScalar],
        leaves: &mut u64,
    ) {
        if i == self.edges.len() {
            *leaves += 1;
            out[chosen] += acc;
            return;
        }
        for &v in &self.edges[i] {
            deg[v] += 1;
        }
        let next = self.close(i, deg, acc);
        if !next.is_zero() {
            self.dfs_all(i + 1, chosen + 1, deg, &next, out, leaves);
        }
        for &v in &self.edges[i] {
            deg[v] -= 1;
        }
        let next = self.close(i, deg, acc);
        if !next.is_zero() {
            self.dfs_all(i + 1, chosen, deg, &next, out, leaves);
        }
    }
}

/// The defining sum with the default budget and parallel execution.
pub fn holant_bruteforce(grid: &SignatureGrid, k: usize) -> Result<HolantResult> {
    holant_bruteforce_with(grid, k, DEFAULT_BUDGET, Execution::Parallel)
}

/// Sums `∏_v s_v(|A ∩ E(v)|)` over every `k`-subset `A` of edge copies.
///
/// Fails with [`HolantError::BudgetExceeded`] when `C(|E|, k)` exceeds `budget`.
/// Partial products are pruned as soon as they vanish, so `subsets` in the
/// work counters only counts subsets with a non-zero prefix.
pub fn holant_bruteforce_with(
    grid: &SignatureGrid,
    k: usize,
    budget: u64,
    exec: Execution,
) -> Result<HolantResult> {
    let m = grid.graph().num_edges();
    let needed = binomial(m, k as u64);
    if needed > BigUint::from(budget) {
        return Err(HolantError::BudgetExceeded {
            needed: needed.to_string(),
            budget,
        });
    }
    let layout = Layout::new(grid);
    let m = layout.edges.len();
    if k == 0 {
        let value = grid.empty_product();
        return Ok(HolantResult::new(
            value,
            Method::Brute,
            WorkStats {
                subsets: 1,
                compositions: 0,
            },
        ));
    }
    if k > m {
        return Ok(HolantResult::new(
            ExactScalar::zero(),
            Method::Brute,
            WorkStats::default(),
        ));
    }
    let parts = par::map_indexed(exec, m - k + 1, |first| layout.starting_at(first, k));
    let mut value = ExactScalar::zero();
    let mut subsets = 0;
    for (v, l) in parts {
        value += &v;
        subsets += l;
    }
    Ok(HolantResult::new(
        value,
        Method::Brute,
        WorkStats {
            subsets,
            compositions: 0,
        },
    ))
}

/// `Holant(grid, k)` for every `k = 0..=|E|` in one pass over all `2^|E|` subsets.
pub fn holant_brute_all(grid: &SignatureGrid, budget: u64) -> Result<Vec<ExactScalar>> {
    let m = grid.graph().num_edges();
    let needed = BigUint::one() << m.to_usize().unwrap_or(usize::MAX).min(4096);
    if needed > BigUint::from(budget) {
        return Err(HolantError::BudgetExceeded {
            needed: needed.to_string(),
            budget,
        });
    }
    let layout = Layout::new(grid);
    let mut out = vec![ExactScalar::zero(); m as usize + 1];
    let mut deg = vec![0; layout.n];
    let mut leaves = 0;
    let start = layout.isolated.clone();
    if layout.edges.is_empty() {
        out[0] = start;
        return Ok(out);
    }
    layout.dfs_all(0, 0, &mut deg, &start, &mut out, &mut leaves);
    Ok(out)
}
