//! Random instance generators and small exhaustive catalogues shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use holant_core::{
    build_grid, canonical_form, CanonicalForm, ExactScalar, Hypergraph, Signature, SignatureGrid,
    Tail,
};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn rational<R: Rng>(rng: &mut R, nonzero: bool) -> ExactScalar {
    loop {
        let num = rng.gen_range(-3..=3);
        let den = rng.gen_range(1..=3);
        if num != 0 || !nonzero {
            return ExactScalar::ratio(num, den);
        }
    }
}

/// `c·α^n` in one of several equivalent encodings.
pub fn random_geometric<R: Rng>(rng: &mut R) -> Signature {
    let c = rational(rng, true);
    let alpha = rational(rng, false);
    match rng.gen_range(0..3) {
        0 => Signature::scaled_geometric(c, alpha),
        1 => {
            let len = rng.gen_range(1..=4);
            let table = (0..len).map(|i| &c * &alpha.pow_u(i as u64)).collect();
            Signature::new(table, Tail::Geometric { ratio: alpha }).unwrap()
        }
        _ if alpha.is_one() || alpha == ExactScalar::from_int(-1) => {
            let table = vec![c.clone(), &c * &alpha];
            Signature::new(
                table,
                Tail::Periodic {
                    period: if alpha.is_one() { 1 } else { 2 },
                },
            )
            .unwrap()
        }
        _ if alpha.is_zero() => Signature::new(vec![c], Tail::Zero).unwrap(),
        _ => Signature::scaled_geometric(c, alpha),
    }
}

/// Any non-zero signature with a random table and tail.
pub fn random_signature<R: Rng>(rng: &mut R, zero_at_zero: bool) -> Signature {
    loop {
        let len = rng.gen_range(1..=5);
        let mut table: Vec<ExactScalar> = (0..len).map(|_| rational(rng, false)).collect();
        if zero_at_zero {
            table[0] = ExactScalar::zero();
        }
        let tail = match rng.gen_range(0..3) {
            0 => Tail::Zero,
            1 => Tail::Periodic {
                period: rng.gen_range(1..=len),
            },
            _ => Tail::Geometric {
                ratio: rational(rng, false),
            },
        };
        let s = Signature::new(table, tail).unwrap();
        if !s.is_identically_zero() {
            return s;
        }
    }
}

/// Random hypergraph with edge sizes in `1..=max_rank`; `multi` allows repeated edges.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    max_rank: usize,
    multi: bool,
) -> Hypergraph {
    let vertices: Vec<usize> = (0..n).collect();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 100 * (m + 1) {
        attempts += 1;
        if multi && !edges.is_empty() && rng.gen_bool(0.3) {
            let e = edges.choose(rng).unwrap().clone();
            edges.push(e);
            continue;
        }
        let size = rng.gen_range(1..=max_rank.min(n));
        let mut e: Vec<usize> = vertices.choose_multiple(rng, size).copied().collect();
        e.sort_unstable();
        if !multi && edges.contains(&e) {
            continue;
        }
        edges.push(e);
    }
    Hypergraph::new(n, edges).unwrap()
}

pub fn random_grid<R: Rng>(
    rng: &mut R,
    graph: Hypergraph,
    palette: Vec<Signature>,
) -> SignatureGrid {
    let assignment = (0..graph.n())
        .map(|_| rng.gen_range(0..palette.len()))
        .collect();
    build_grid(graph, palette, assignment).unwrap()
}

/// A random grid whose signatures with `s(0) ≠ 0` are all geometric,
/// optionally with one extra signature vanishing at 0.
pub fn random_t1_grid<R: Rng>(rng: &mut R, with_zero: bool, multi: bool) -> SignatureGrid {
    let n = rng.gen_range(1..=8);
    let m = rng.gen_range(0..=10);
    let max_rank = rng.gen_range(1..=4);
    let graph = random_hypergraph(rng, n, m, max_rank, multi);
    let mut palette: Vec<Signature> = (0..rng.gen_range(1..=3))
        .map(|_| random_geometric(rng))
        .collect();
    if with_zero {
        palette.push(random_signature(rng, true));
    }
    random_grid(rng, graph, palette)
}

/// Every simple `r`-uniform hypergraph on exactly `n` vertices, one per
/// isomorphism class (isolated vertices allowed).
pub fn all_uniform_on(n: usize, r: usize) -> Vec<Hypergraph> {
    let slots: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    let mut seen: BTreeMap<CanonicalForm, Hypergraph> = BTreeMap::new();
    for mask in 0u64..(1 << slots.len()) {
        let edges: Vec<&Vec<usize>> = (0..slots.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &slots[i])
            .collect();
        let g = Hypergraph::new(n, edges).unwrap();
        seen.entry(canonical_form(&g).unwrap()).or_insert(g);
    }
    seen.into_values().collect()
}

/// [`all_uniform_on`] for every `1 ≤ n ≤ max_n`.
pub fn all_uniform_upto(max_n: usize, r: usize) -> Vec<Hypergraph> {
    (1..=max_n).flat_map(|n| all_uniform_on(n, r)).collect()
}
