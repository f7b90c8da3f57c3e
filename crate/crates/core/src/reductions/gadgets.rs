//! Arity-raising gadgets: padding every edge with fresh degree-one vertices,
//! and replacing every graph edge by a copy of a bridge hypergraph.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{HolantError, Result};
use crate::eval::holant_bruteforce_with;
use crate::grid::{build_grid, SignatureGrid};
use crate::hypergraph::Hypergraph;
use crate::par::Execution;
use crate::scalar::ExactScalar;
use crate::signature::Signature;

/// Default edge bound for [`find_bridge_gadget`].
pub const DEFAULT_BRIDGE_SEARCH_EDGES: usize = 12;

/// A transformation together with the identity
/// `Holant(target, k') = scale · Holant(source, k) + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetCertificate {
    pub source: SignatureGrid,
    pub k: usize,
    pub target: SignatureGrid,
    #[serde(rename = "k'")]
    pub k_target: usize,
    pub scale: ExactScalar,
    pub offset: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub source_value: ExactScalar,
    pub target_value: ExactScalar,
    pub holds: bool,
}

impl GadgetCertificate {
    /// Evaluates both sides by brute force.
    pub fn verify(&self, budget: u64) -> Result<Verification> {
        let source_value =
            holant_bruteforce_with(&self.source, self.k, budget, Execution::Parallel)?.value;
        let target_value =
            holant_bruteforce_with(&self.target, self.k_target, budget, Execution::Parallel)?.value;
        let holds = target_value == &(&self.scale * &source_value) + &self.offset;
        Ok(Verification {
            source_value,
            target_value,
            holds,
        })
    }
}

/// The signature carried by gadget vertices: the first one in use.
fn gadget_signature(grid: &SignatureGrid) -> Result<(usize, &Signature)> {
    let i = *grid
        .used_signatures()
        .first()
        .ok_or_else(|| HolantError::Precondition("grid has no vertices".into()))?;
    Ok((i, &grid.palette()[i]))
}

/// `s(active)^(k·per_edge) · s(0)^((|E| − k)·per_edge)`: chosen copies of the
/// gadget see their fresh vertices at degree `active`, the others at degree 0.
fn gadget_scale(s: &Signature, active: usize, k: usize, m: u64, per_edge: usize) -> ExactScalar {
    let chosen = k as u64 * per_edge as u64;
    let idle = m.saturating_sub(k as u64) * per_edge as u64;
    &s.eval(active).pow_u(chosen) * &s.eval(0).pow_u(idle)
}

/// Lifts an `r`-uniform grid to arity `d ≥ r` by giving every edge copy
/// `d − r` fresh vertices, each carrying the grid's signature.
pub fn pad_gadget(grid: &SignatureGrid, k: usize, d: usize) -> Result<GadgetCertificate> {
    let g = grid.graph();
    let r = match g.uniformity() {
        Some(r) => r,
        None if g.num_distinct_edges() == 0 => d,
        None => {
            return Err(HolantError::NotUniform {
                rank: g.rank(),
                min: g.min_edge_size(),
            })
        }
    };
    if r > d {
        return Err(HolantError::Precondition(format!(
            "cannot pad rank-{r} edges down to {d}"
        )));
    }
    let (si, s) = gadget_signature(grid)?;
    if s.eval(1).is_zero() {
        return Err(HolantError::Precondition(
            "padding needs s(1) ≠ 0; use bridge_lift when s(1) = 0".into(),
        ));
    }
    let pad = d - r;
    let mut next = g.n();
    let mut edges = Vec::new();
    for e in g.edge_copies() {
        let mut edge = e.to_vec();
        edge.extend(next..next + pad);
        next += pad;
        edges.push(edge);
    }
    let mut assignment = grid.assignment().to_vec();
    assignment.resize(next, si);
    let target = build_grid(
        Hypergraph::new(next, edges)?,
        grid.palette().to_vec(),
        assignment,
    )?;
    let scale = gadget_scale(s, 1, k, g.num_edges(), pad);
    Ok(GadgetCertificate {
        source: grid.clone(),
        k,
        target,
        k_target: k,
        scale,
        offset: ExactScalar::zero(),
    })
}

/// A connected `d`-uniform hypergraph in which `x` and `y` have degree 1 and
/// every other vertex has degree 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BridgeGadget {
    pub graph: Hypergraph,
    pub x: usize,
    pub y: usize,
}

impl BridgeGadget {
    pub fn check(&self, d: usize) -> bool {
        let g = &self.graph;
        let adjacent = g
            .edges()
            .iter()
            .any(|e| e.contains(&self.x) && e.contains(&self.y));
        g.is_uniform(d)
            && g.is_simple()
            && g.is_connected()
            && self.x != self.y
            && (0..g.n()).all(|v| g.degree(v) == if v == self.x || v == self.y { 1 } else { 2 })
            && adjacent == (d >= 3)
    }
}

struct BridgeSearch {
    d: usize,
    n: usize,
    m: usize,
    adjacent: bool,
    residual: Vec<usize>,
    /// Vertices already placed in some edge; the rest are interchangeable.
    touched: Vec<bool>,
    edges: Vec<Vec<usize>>,
}

impl BridgeSearch {
    fn place(&mut self, edge: Vec<usize>) -> Vec<bool> {
        let before = edge.iter().map(|&v| self.touched[v]).collect();
        for &v in &edge {
            self.residual[v] -= 1;
            self.touched[v] = true;
        }
        self.edges.push(edge);
        before
    }

    fn unplace(&mut self, before: Vec<bool>) {
        let edge = self.edges.pop().expect("placed edge");
        for (&v, t) in edge.iter().zip(before) {
            self.residual[v] += 1;
            self.touched[v] = t;
        }
    }

    /// The smallest vertex still short of its degree must lie in the next edge.
    fn run(&mut self) -> bool {
        if self.edges.len() == self.m {
            return self.residual.iter().all(|&r| r == 0)
                && Hypergraph::new(self.n, &self.edges)
                    .map(|g| g.is_connected())
                    .unwrap_or(false);
        }
        let Some(v) = (0..self.n).find(|&u| self.residual[u] > 0) else {
            return false;
        };
        let open: Vec<usize> = (v + 1..self.n)
            .filter(|&u| self.residual[u] > 0 && self.touched[u])
            .collect();
        let fresh: Vec<usize> = (v + 1..self.n)
            .filter(|&u| self.residual[u] > 0 && !self.touched[u])
            .collect();
        for j in 0..self.d {
            let take_fresh = self.d - 1 - j;
            if take_fresh > fresh.len() || j > open.len() {
                continue;
            }
            for sub in open.iter().copied().combinations(j) {
                let mut edge = vec![v];
                edge.extend(sub);
                edge.extend(&fresh[..take_fresh]);
                edge.sort_unstable();
                if !self.adjacent && edge.contains(&0) && edge.contains(&1) {
                    continue;
                }
                if self.edges.contains(&edge) {
                    continue;
                }
                let before = self.place(edge);
                if self.run() {
                    return true;
                }
                self.unplace(before);
            }
        }
        false
    }
}

/// The bridge gadget with the fewest edges (at most `max_edges`), by
/// exhaustive search. `x = 0`, `y = 1`; for `d ≥ 3` they share an edge. For
/// `d = 2` that would force the single edge `{x, y}`, a gadget that changes
/// nothing, so `x` and `y` are instead required to be non-adjacent.
pub fn find_bridge_gadget(d: usize, max_edges: usize) -> Result<BridgeGadget> {
    if d < 2 {
        return Err(HolantError::Precondition(
            "bridge gadgets need d ≥ 2".into(),
        ));
    }
    let adjacent = d >= 3;
    for m in 1..=max_edges {
        // Degree sum: d·m = 2(n − 2) + 2.
        if !(d * m).is_multiple_of(2) {
            continue;
        }
        let n = (d * m + 2) / 2;
        if n < d + usize::from(!adjacent) {
            continue;
        }
        let mut residual = vec![2; n];
        residual[0] = 1;
        residual[1] = 1;
        let mut touched = vec![false; n];
        touched[1] = true;
        let mut search = BridgeSearch {
            d,
            n,
            m,
            adjacent,
            residual,
            touched,
            edges: Vec::new(),
        };
        let first: Vec<usize> = if adjacent {
            (0..d).collect()
        } else {
            std::iter::once(0).chain(2..d + 1).collect()
        };
        search.place(first);
        if search.run() {
            let graph = Hypergraph::new(n, &search.edges)?;
            return Ok(BridgeGadget { graph, x: 0, y: 1 });
        }
    }
    Err(HolantError::CapExceeded {
        what: "bridge gadget edges",
        value: max_edges + 1,
        cap: max_edges,
    })
}

/// Replaces every edge copy `{u, v}` (`u < v`) of a graph grid by a fresh copy
/// of `gadget` with `x ↦ v` and `y ↦ u`; interior vertices carry the grid's
/// signature. Requires `s(1) = 0` and `s(2) ≠ 0`, which forces every copy to
/// be taken whole or not at all.
pub fn bridge_lift(
    grid: &SignatureGrid,
    k: usize,
    gadget: &BridgeGadget,
) -> Result<GadgetCertificate> {
    let g = grid.graph();
    if g.num_distinct_edges() > 0 && !g.is_uniform(2) {
        return Err(HolantError::Precondition(
            "bridge_lift needs a 2-uniform source grid".into(),
        ));
    }
    let b = &gadget.graph;
    if b.uniformity().is_none() {
        return Err(HolantError::Precondition(
            "bridge gadget must be uniform".into(),
        ));
    }
    let (si, s) = gadget_signature(grid)?;
    if !s.eval(1).is_zero() {
        return Err(HolantError::Precondition(
            "bridge_lift needs s(1) = 0; use pad_gadget".into(),
        ));
    }
    if s.eval(2).is_zero() {
        return Err(HolantError::Precondition(
            "bridge_lift needs s(2) ≠ 0; no gadget is available when s(1) = s(2) = 0".into(),
        ));
    }
    let interior: Vec<usize> = (0..b.n())
        .filter(|&v| v != gadget.x && v != gadget.y)
        .collect();
    let mut local = vec![0; b.n()];
    for (i, &v) in interior.iter().enumerate() {
        local[v] = i;
    }
    let mut next = g.n();
    let mut edges = Vec::new();
    for e in g.edge_copies() {
        let (u, v) = (e[0], e[1]);
        let map = |w: usize| {
            if w == gadget.x {
                v
            } else if w == gadget.y {
                u
            } else {
                next + local[w]
            }
        };
        for be in b.edge_copies() {
            edges.push(be.iter().map(|&w| map(w)).collect::<Vec<_>>());
        }
        next += interior.len();
    }
    let mut assignment = grid.assignment().to_vec();
    assignment.resize(next, si);
    let target = build_grid(
        Hypergraph::new(next, edges)?,
        grid.palette().to_vec(),
        assignment,
    )?;
    let k_target = k * b.num_edges() as usize;
    let scale = gadget_scale(s, 2, k, g.num_edges(), interior.len());
    Ok(GadgetCertificate {
        source: grid.clone(),
        k,
        target,
        k_target,
        scale,
        offset: ExactScalar::zero(),
    })
}
