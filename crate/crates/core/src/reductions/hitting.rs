//! k-hitting sets as a Holant value on the dual hypergraph with `hw_{≥1}`.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use super::check_subsets;
use crate::error::Result;
use crate::grid::{build_grid, SignatureGrid};
use crate::hypergraph::Hypergraph;
use crate::signature::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HittingSetReduction {
    pub grid: SignatureGrid,
    pub k: usize,
    /// Source vertices kept after merging those with identical incidence;
    /// dual edge `i` stands for `kept[i]`.
    pub kept: Vec<usize>,
}

/// Keeps the first vertex of every incidence class, and returns the
/// sub-hypergraph on those vertices together with their original ids.
pub fn deduplicate_vertices(g: &Hypergraph) -> Result<(Hypergraph, Vec<usize>)> {
    let inc = g.incidence();
    let mut seen = HashSet::new();
    let kept: Vec<usize> = (0..g.n())
        .filter(|&v| seen.insert(inc[v].clone()))
        .collect();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        new_id[v] = i;
    }
    let edges: Vec<(Vec<usize>, u64)> = g
        .edges()
        .iter()
        .zip(g.multiplicities())
        .map(|(e, &m)| {
            (
                e.iter()
                    .map(|&v| new_id[v])
                    .filter(|&v| v != usize::MAX)
                    .collect(),
                m,
            )
        })
        .collect();
    Ok((Hypergraph::with_multiplicities(kept.len(), edges)?, kept))
}

/// Dual grid: one `hw_{≥1}` vertex per distinct edge of the deduplicated
/// source, one hyperedge per kept vertex collecting the edges through it.
/// A kept vertex lying in no edge still needs a non-empty hyperedge, so it
/// is attached to an extra vertex with the constant-one signature.
pub fn hitting_set_holant(g: &Hypergraph, k: usize) -> Result<HittingSetReduction> {
    let (dedup, kept) = deduplicate_vertices(g)?;
    let inc = dedup.incidence();
    let m = dedup.num_distinct_edges();
    let needs_dummy = inc.iter().any(Vec::is_empty);
    let n = m + usize::from(needs_dummy);
    let edges: Vec<Vec<usize>> = inc
        .into_iter()
        .map(|e| if e.is_empty() { vec![m] } else { e })
        .collect();
    let mut palette = vec![Signature::hw_ge1()];
    let mut assignment = vec![0; m];
    if needs_dummy {
        palette.push(Signature::one());
        assignment.push(1);
    }
    let grid = build_grid(Hypergraph::new(n, edges)?, palette, assignment)?;
    Ok(HittingSetReduction { grid, k, kept })
}

/// Number of `k`-subsets of `V(g)` meeting every edge.
pub fn count_hitting_sets(g: &Hypergraph, k: usize, budget: u64) -> Result<u128> {
    check_subsets(g.n(), k, budget)?;
    let mut count = 0;
    let mut chosen = vec![false; g.n()];
    for set in (0..g.n()).combinations(k) {
        for &v in &set {
            chosen[v] = true;
        }
        if g.edges().iter().all(|e| e.iter().any(|&v| chosen[v])) {
            count += 1;
        }
        for &v in &set {
            chosen[v] = false;
        }
    }
    Ok(count)
}
