use crate::error::{HolantError, Result};
use crate::fingerprint::SetPartition;
use crate::hypergraph::Hypergraph;

use super::mobius::colour_consistent;

/// `H/ρ`: one vertex per block; each edge of `H` becomes the set of blocks it
/// meets. Edges that collapse onto the same block set are merged, and blocks
/// inherit their members' colour.
pub fn quotient(h: &Hypergraph, rho: &SetPartition) -> Result<Hypergraph> {
    if rho.ground_size() != h.n() {
        return Err(HolantError::InvalidInput(format!(
            "partition of {} elements for a hypergraph on {} vertices",
            rho.ground_size(),
            h.n()
        )));
    }
    if !colour_consistent(h, rho) {
        let bad = rho
            .blocks()
            .iter()
            .find(|b| b.iter().any(|&v| h.colour(v) != h.colour(b[0])))
            .cloned()
            .unwrap_or_default();
        return Err(HolantError::ColourInconsistent(bad));
    }
    let label = rho.labels();
    let mut edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut q: Vec<usize> = e.iter().map(|&v| label[v]).collect();
            q.sort_unstable();
            q.dedup();
            q
        })
        .collect();
    edges.sort();
    edges.dedup();
    let q = Hypergraph::new(rho.num_blocks(), edges)?;
    match h.colours() {
        Some(c) => q.with_colours(rho.blocks().iter().map(|b| c[b[0]]).collect()),
        None => Ok(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::named;

    #[test]
    fn single_edge_to_top_is_a_loop() {
        let q = quotient(&named::single_edge(2), &SetPartition::coarsest(2)).unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(q.edges(), &[vec![0]]);
    }

    #[test]
    fn path_ends_merged() {
        let p3 = named::path(3); // edges {0,1}, {1,2}
        let rho = SetPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let q = quotient(&p3, &rho).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.edges(), &[vec![0, 1]]);
        assert!(q.is_simple());
    }

    #[test]
    fn bottom_is_identity() {
        let g = named::cycle(5);
        let q = quotient(&g, &SetPartition::finest(5)).unwrap();
        let mut a: Vec<_> = q.edges().to_vec();
        let mut b: Vec<_> = g.edges().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn colour_mixing_rejected() {
        let g = named::path(3).with_colours(vec![0, 1, 1]).unwrap();
        let rho = SetPartition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(
            quotient(&g, &rho),
            Err(HolantError::ColourInconsistent(_))
        ));
        let ok = SetPartition::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(quotient(&g, &ok).unwrap().colours(), Some(&[0, 1][..]));
    }
}
