use num_bigint::BigInt;

use crate::error::{HolantError, Result};
use crate::fingerprint::{SetPartition, SetPartitions};
use crate::hypergraph::Hypergraph;

/// A partition of the vertex set of some host hypergraph.
pub type VertexPartition = SetPartition;

/// `μ(σ, ρ) = ∏_{B ∈ ρ} (−1)^{c_B − 1} (c_B − 1)!` where `c_B` counts the
/// blocks of `σ` inside `B`. Requires `σ ≤ ρ`.
pub fn mobius(sigma: &SetPartition, rho: &SetPartition) -> Result<BigInt> {
    if !sigma.refines(rho) {
        return Err(HolantError::NotRefinement(
            format!("{:?}", sigma.blocks()),
            format!("{:?}", rho.blocks()),
        ));
    }
    let rho_label = rho.labels();
    let mut inside = vec![0usize; rho.num_blocks()];
    for b in sigma.blocks() {
        inside[rho_label[b[0]]] += 1;
    }
    let mut acc = BigInt::from(1);
    for c in inside {
        for j in 1..c {
            acc *= j;
        }
        if c % 2 == 0 {
            acc = -acc;
        }
    }
    Ok(acc)
}

/// `μ(⊥, ρ)`.
pub fn mobius_bottom(rho: &SetPartition) -> BigInt {
    mobius(&SetPartition::finest(rho.ground_size()), rho)
        .expect("the finest partition refines everything")
}

/// No block mixes vertices of different colours (always true when uncoloured).
pub fn colour_consistent(h: &Hypergraph, rho: &SetPartition) -> bool {
    match h.colours() {
        None => true,
        Some(c) => rho
            .blocks()
            .iter()
            .all(|b| b.iter().all(|&v| c[v] == c[b[0]])),
    }
}

/// All colour-consistent partitions of `V(h)`.
pub fn colour_consistent_partitions(h: &Hypergraph) -> impl Iterator<Item = SetPartition> + '_ {
    SetPartitions::new(h.n()).filter(move |rho| colour_consistent(h, rho))
}
