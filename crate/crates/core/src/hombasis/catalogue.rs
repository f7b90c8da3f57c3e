use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;

/// Limits on catalogue enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogueCaps {
    pub max_edges: usize,
    pub max_rank: usize,
    pub max_colours: usize,
}

impl Default for CatalogueCaps {
    fn default() -> Self {
        CatalogueCaps {
            max_edges: 4,
            max_rank: 4,
            max_colours: 4,
        }
    }
}

impl CatalogueCaps {
    fn check(&self, k: usize, r: usize, colours: Option<usize>) -> Result<()> {
        if k > self.max_edges {
            return Err(HolantError::CapExceeded {
                what: "catalogue edges",
                value: k,
                cap: self.max_edges,
            });
        }
        if r > self.max_rank {
            return Err(HolantError::CapExceeded {
                what: "catalogue rank",
                value: r,
                cap: self.max_rank,
            });
        }
        if let Some(c) = colours {
            if c > self.max_colours {
                return Err(HolantError::CapExceeded {
                    what: "catalogue colours",
                    value: c,
                    cap: self.max_colours,
                });
            }
        }
        Ok(())
    }
}

fn subsets_of_size(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(start: usize, n: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < t - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, t, cur, out);
            cur.pop();
        }
    }
    rec(0, n, t, &mut cur, &mut out);
    out
}

/// Uncoloured members with `k` edges, keyed by canonical form.
fn uncoloured(k: usize, r: usize) -> Result<BTreeMap<CanonicalForm, Hypergraph>> {
    let mut level: BTreeMap<CanonicalForm, Hypergraph> = BTreeMap::new();
    let empty = Hypergraph::empty(0);
    level.insert(canonical_form(&empty)?, empty);
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for h in level.values() {
            let n = h.n();
            for t in 0..=r.min(n) {
                let fresh = r - t;
                for mut edge in subsets_of_size(n, t) {
                    edge.extend(n..n + fresh);
                    if t == r && h.has_edge(&edge) {
                        continue;
                    }
                    let g = Hypergraph::new(n + fresh, h.edges().iter().cloned().chain([edge]))?;
                    let cf = canonical_form(&g)?;
                    next.entry(cf).or_insert_with_key(|cf| cf.to_hypergraph());
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Every `r`-uniform simple hypergraph with exactly `k` edges and no isolated
/// vertices, one per isomorphism class, in canonical order. With
/// `colours = Some(c)` vertices are additionally coloured from `0..c`, one
/// representative per colour-preserving isomorphism class.
pub fn enumerate_uniform_hypergraphs(
    k: usize,
    r: usize,
    colours: Option<usize>,
    caps: &CatalogueCaps,
) -> Result<Vec<Hypergraph>> {
    caps.check(k, r, colours)?;
    if r == 0 {
        return Err(HolantError::Precondition("rank must be positive".into()));
    }
    let base = uncoloured(k, r)?;
    let Some(c) = colours else {
        return Ok(base.into_values().collect());
    };
    let mut out: BTreeMap<CanonicalForm, Hypergraph> = BTreeMap::new();
    for h in base.values() {
        let n = h.n();
        let mut colouring = vec![0usize; n];
        loop {
            let g = h.clone().with_colours(colouring.clone())?;
            let cf = canonical_form(&g)?;
            out.entry(cf).or_insert_with_key(|cf| cf.to_hypergraph());
            // Odometer over c^n colourings.
            let mut i = 0;
            while i < n {
                colouring[i] += 1;
                if colouring[i] < c {
                    break;
                }
                colouring[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    Ok(out.into_values().collect())
}

/// The union over `1 ≤ ℓ ≤ k`.
pub fn enumerate_uniform_hypergraphs_upto(
    k: usize,
    r: usize,
    colours: Option<usize>,
    caps: &CatalogueCaps,
) -> Result<Vec<Hypergraph>> {
    let mut all = Vec::new();
    for l in 1..=k {
        all.extend(enumerate_uniform_hypergraphs(l, r, colours, caps)?);
    }
    Ok(all)
}
