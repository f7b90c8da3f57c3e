use crate::error::{HolantError, Result};
use crate::hypergraph::{named, Hypergraph};

/// A connected `d`-uniform `b`-regular simple hypergraph whose size grows with `i`.
///
/// `b = 1` gives the single `d`-edge. Otherwise `i·d` copies of the
/// `(b − 1)`-regular hypergraph for `(d, b − 1, 2)` are chained by linking
/// edges (local vertices `⌊d/2⌋..d` of copy `j` with `0..⌊d/2⌋` of copy
/// `j + 1`), and the remaining vertices, ordered by local index then copy,
/// are cut into consecutive `d`-sets. Every vertex gains exactly one edge.
pub fn gen_regular_connected(d: usize, b: usize, i: usize) -> Result<Hypergraph> {
    if d < 2 || b == 0 {
        return Err(HolantError::Precondition(format!(
            "need d ≥ 2 and b ≥ 1, got d = {d}, b = {b}"
        )));
    }
    if b == 1 {
        return Ok(named::single_edge(d));
    }
    if i < 2 {
        return Err(HolantError::Precondition(format!(
            "size index must be at least 2, got {i}"
        )));
    }
    let base = if b == 2 {
        named::single_edge(d)
    } else {
        gen_regular_connected(d, b - 1, 2)?
    };
    let nb = base.n();
    let copies = i * d;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for c in 0..copies {
        for e in base.edge_copies() {
            edges.push(e.iter().map(|&v| c * nb + v).collect());
        }
    }
    let y = d / 2;
    let mut used = vec![false; copies * nb];
    for c in 0..copies - 1 {
        let edge: Vec<usize> = (y..d)
            .map(|l| c * nb + l)
            .chain((0..y).map(|l| (c + 1) * nb + l))
            .collect();
        for &v in &edge {
            used[v] = true;
        }
        edges.push(edge);
    }
    let mut leftover: Vec<(usize, usize)> = (0..copies * nb)
        .filter(|&v| !used[v])
        .map(|v| (v % nb, v / nb))
        .collect();
    leftover.sort_unstable();
    for chunk in leftover.chunks(d) {
        edges.push(chunk.iter().map(|&(l, c)| c * nb + l).collect());
    }
    let g = Hypergraph::new(copies * nb, edges)?;
    let regular = (0..g.n()).all(|v| g.degree(v) == b as u64);
    if !(g.is_uniform(d) && g.is_simple() && regular && g.is_connected()) {
        return Err(HolantError::Internal(format!(
            "regular construction failed for d = {d}, b = {b}, i = {i}"
        )));
    }
    Ok(g)
}
