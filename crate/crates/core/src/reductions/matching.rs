//! Perfect matchings as Holant values: directly when `s(0) = 0, s(1) ≠ 0`,
//! and through regular gadgets that saturate every vertex up to the first
//! non-zero entry `b` of the signature otherwise.

use serde::{Deserialize, Serialize};

use super::regular::gen_regular_connected;
use crate::error::{HolantError, Result};
use crate::eval::holant_bruteforce_with;
use crate::grid::SignatureGrid;
use crate::hypergraph::{named, Hypergraph};
use crate::par::Execution;
use crate::scalar::ExactScalar;
use crate::signature::Signature;

/// Number of sets of edge copies partitioning the vertex set.
pub fn count_perfect_matchings(g: &Hypergraph, budget: u64) -> Result<u128> {
    let inc = g.incidence();
    let mut covered = vec![false; g.n()];
    let mut nodes = 0u64;
    fn rec(
        g: &Hypergraph,
        inc: &[Vec<usize>],
        covered: &mut [bool],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<u128> {
        *nodes += 1;
        if *nodes > budget {
            return Err(HolantError::BudgetExceeded {
                needed: format!("more than {budget} search nodes"),
                budget,
            });
        }
        let Some(v) = covered.iter().position(|&c| !c) else {
            return Ok(1);
        };
        let mut total = 0;
        for &ei in &inc[v] {
            let e = &g.edges()[ei];
            if e.iter().any(|&u| covered[u]) {
                continue;
            }
            for &u in e {
                covered[u] = true;
            }
            let sub = rec(g, inc, covered, nodes, budget)?;
            total += sub * g.multiplicities()[ei] as u128;
            for &u in e {
                covered[u] = false;
            }
        }
        Ok(total)
    }
    rec(g, &inc, &mut covered, &mut nodes, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PmMode {
    /// `s(0) = 0`: every vertex must be hit.
    ZeroSig,
    /// `s(0) ≠ 0`, `s(1) = s(2) = 0`: gadgets have more edges than the source,
    /// so leaving any of them out cannot be made up for.
    SizeForced,
}

/// `Holant(grid, k) = scale · #PerfMatch(source)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmCertificate {
    pub source: Hypergraph,
    pub grid: SignatureGrid,
    pub k: usize,
    pub scale: ExactScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmVerification {
    pub holant: ExactScalar,
    pub perfect_matchings: u128,
    pub holds: bool,
}

impl PmCertificate {
    pub fn verify(&self, budget: u64) -> Result<PmVerification> {
        let holant = holant_bruteforce_with(&self.grid, self.k, budget, Execution::Parallel)?.value;
        let perfect_matchings = count_perfect_matchings(&self.source, budget)?;
        let holds = holant == &self.scale * &ExactScalar::from_bigint(perfect_matchings.into());
        Ok(PmVerification {
            holant,
            perfect_matchings,
            holds,
        })
    }

    /// No perfect matching can exist; `k` exceeds the number of edges so the
    /// Holant side vanishes as well.
    fn trivial(g: &Hypergraph, s: &Signature) -> Result<Self> {
        Ok(PmCertificate {
            source: g.clone(),
            grid: SignatureGrid::uniform(g.clone(), s.clone())?,
            k: g.num_edges() as usize + 1,
            scale: ExactScalar::one(),
        })
    }

    fn direct(g: &Hypergraph, s: &Signature, d: usize) -> Result<Self> {
        Ok(PmCertificate {
            source: g.clone(),
            grid: SignatureGrid::uniform(g.clone(), s.clone())?,
            k: g.n() / d,
            scale: s.eval(1).pow_u(g.n() as u64),
        })
    }
}

/// Smallest `n ≥ from` with `s(n) ≠ 0`. Past the table the tail either
/// repeats table entries or is non-zero immediately, so one step beyond the
/// table is enough.
fn first_nonzero_from(s: &Signature, from: usize) -> Option<usize> {
    (from..=s.table().len() + 1).find(|&n| !s.eval(n).is_zero())
}

/// Graph version. `s(0) = 0` is required; with `b = 1` the grid is `G` itself
/// at `k = n/2`. Otherwise each vertex `v` gets a private `K_{b−1}` joined to
/// `v`, and the clique vertices are paired across different cliques
/// (deterministically, by clique position then owner), which saturates them.
pub fn pm_gadget_graph(g: &Hypergraph, s: &Signature) -> Result<PmCertificate> {
    if g.num_distinct_edges() > 0 && !g.is_uniform(2) {
        return Err(HolantError::Precondition(
            "pm_gadget_graph needs a graph; use pm_gadget_hyper".into(),
        ));
    }
    if !s.eval(0).is_zero() {
        return Err(HolantError::Precondition(
            "pm_gadget_graph needs s(0) = 0".into(),
        ));
    }
    let b = s.first_nonzero().ok_or(HolantError::ZeroSignature)?;
    let n = g.n();
    if n % 2 == 1 {
        return PmCertificate::trivial(g, s);
    }
    if b == 1 {
        return PmCertificate::direct(g, s, 2);
    }
    let clique = |v: usize, i: usize| n + v * (b - 1) + i;
    let mut extra: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        for i in 0..b - 1 {
            extra.push(vec![v, clique(v, i)]);
            for j in i + 1..b - 1 {
                extra.push(vec![clique(v, i), clique(v, j)]);
            }
        }
    }
    let leaves: Vec<usize> = (0..b - 1)
        .flat_map(|i| (0..n).map(move |v| clique(v, i)))
        .collect();
    for pair in leaves.chunks(2) {
        extra.push(pair.to_vec());
    }
    assemble(g, s, b, n + n * (b - 1), extra, 2)
}

fn assemble(
    g: &Hypergraph,
    s: &Signature,
    b: usize,
    total: usize,
    extra: Vec<Vec<usize>>,
    d: usize,
) -> Result<PmCertificate> {
    let added = extra.len();
    let edges = g
        .edge_copies()
        .into_iter()
        .map(<[usize]>::to_vec)
        .chain(extra);
    let target = Hypergraph::new(total, edges.collect::<Vec<_>>())?;
    Ok(PmCertificate {
        source: g.clone(),
        grid: SignatureGrid::uniform(target, s.clone())?,
        k: g.n() / d + added,
        scale: s.eval(b).pow_u(total as u64),
    })
}

/// Per vertex `v`, a copy of a `d`-uniform `(b − 1)`-regular connected `F`;
/// edges `S_t ∪ {v}` for `b − 1` disjoint `(d − 1)`-sets `S_t` of `F`; and,
/// for each group of `d` consecutive source vertices, one edge per remaining
/// local vertex of `F` across the group's copies.
fn hyper_gadget(
    g: &Hypergraph,
    s: &Signature,
    d: usize,
    b: usize,
    f: &Hypergraph,
) -> Result<PmCertificate> {
    let n = g.n();
    let nf = f.n();
    let spoke_span = (d - 1) * (b - 1);
    if nf < spoke_span {
        return Err(HolantError::Internal(format!(
            "gadget has {nf} vertices, {spoke_span} needed"
        )));
    }
    let copy = |v: usize, l: usize| n + v * nf + l;
    let mut extra: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        for e in f.edge_copies() {
            extra.push(e.iter().map(|&l| copy(v, l)).collect());
        }
        for t in 0..b - 1 {
            let mut e = vec![v];
            e.extend(((d - 1) * t..(d - 1) * (t + 1)).map(|l| copy(v, l)));
            extra.push(e);
        }
    }
    for group in (0..n).collect::<Vec<_>>().chunks(d) {
        for l in spoke_span..nf {
            extra.push(group.iter().map(|&v| copy(v, l)).collect());
        }
    }
    assemble(g, s, b, n + n * nf, extra, d)
}

/// Hypergraph version; `G` must be `d`-uniform.
pub fn pm_gadget_hyper(g: &Hypergraph, s: &Signature, mode: PmMode) -> Result<PmCertificate> {
    let d = match g.uniformity() {
        Some(d) => d,
        None if g.num_distinct_edges() == 0 => {
            return if g.n() == 0 {
                PmCertificate::direct(g, s, 1)
            } else {
                PmCertificate::trivial(g, s)
            };
        }
        None => {
            return Err(HolantError::NotUniform {
                rank: g.rank(),
                min: g.min_edge_size(),
            })
        }
    };
    let b = match mode {
        PmMode::ZeroSig => {
            if !s.eval(0).is_zero() {
                return Err(HolantError::Precondition(
                    "zero-sig mode needs s(0) = 0".into(),
                ));
            }
            s.first_nonzero().ok_or(HolantError::ZeroSignature)?
        }
        PmMode::SizeForced => {
            if s.eval(0).is_zero() || !s.eval(1).is_zero() || !s.eval(2).is_zero() {
                return Err(HolantError::Precondition(
                    "size-forced mode needs s(0) ≠ 0 and s(1) = s(2) = 0".into(),
                ));
            }
            first_nonzero_from(s, 3).ok_or_else(|| {
                HolantError::Precondition("signature vanishes at every positive degree".into())
            })?
        }
    };
    if !g.n().is_multiple_of(d) {
        return PmCertificate::trivial(g, s);
    }
    if b == 1 {
        return PmCertificate::direct(g, s, d);
    }
    let f = match mode {
        PmMode::ZeroSig if b == 2 => named::single_edge(d),
        PmMode::ZeroSig => gen_regular_connected(d, b - 1, 2)?,
        PmMode::SizeForced => {
            const MAX_SIZE_INDEX: usize = 64;
            let mut i = 2;
            loop {
                let f = gen_regular_connected(d, b - 1, i)?;
                if f.num_edges() > g.num_edges() {
                    break f;
                }
                i += 1;
                if i > MAX_SIZE_INDEX {
                    return Err(HolantError::CapExceeded {
                        what: "gadget size index",
                        value: i,
                        cap: MAX_SIZE_INDEX,
                    });
                }
            }
        }
    };
    hyper_gadget(g, s, d, b, &f)
}
