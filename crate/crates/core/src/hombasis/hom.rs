//! Counting homomorphisms, embeddings and automorphisms by backtracking.
//!
//! A map `h: V(H) → V(G)` is a homomorphism when, for every edge `e` of `H`,
//! the image *set* `{h(v) : v ∈ e}` is an edge of `G`. The image may be smaller
//! than `e`. Colours are respected only when both sides are coloured.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;

use super::mobius::{colour_consistent_partitions, mobius_bottom};
use super::quotient::quotient;
use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;

struct Target<'a> {
    n: usize,
    colours: Option<&'a [usize]>,
    edges: HashMap<Vec<usize>, u64>,
    /// Every subset of every edge.
    shadow: HashSet<Vec<usize>>,
    /// Vertices sharing an edge with `x`, and `x` itself.
    closed_nbhd: Vec<Vec<usize>>,
}

impl<'a> Target<'a> {
    fn new(g: &'a Hypergraph, use_colours: bool) -> Self {
        let mut edges = HashMap::new();
        let mut shadow = HashSet::new();
        let mut nb: Vec<HashSet<usize>> = (0..g.n()).map(|x| HashSet::from([x])).collect();
        for (e, &m) in g.edges().iter().zip(g.multiplicities()) {
            edges.insert(e.clone(), m);
            for mask in 1u32..(1 << e.len()) {
                shadow.insert(
                    e.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect(),
                );
            }
            for &x in e {
                nb[x].extend(e.iter().copied());
            }
        }
        let closed_nbhd = nb
            .into_iter()
            .map(|s| {
                let mut v: Vec<usize> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect();
        Target {
            n: g.n(),
            colours: if use_colours { g.colours() } else { None },
            edges,
            shadow,
            closed_nbhd,
        }
    }
}

struct Mapper<'a> {
    h: &'a Hypergraph,
    t: Target<'a>,
    h_colours: Option<&'a [usize]>,
    order: Vec<usize>,
    /// Earlier vertex sharing an edge, used to restrict candidates.
    anchor: Vec<Option<usize>>,
    /// Per position: (edge index, is this the edge's last vertex in `order`).
    checks: Vec<Vec<(usize, bool)>>,
    injective: bool,
    /// Edges must map to edges of the same size and multiplicity.
    exact: bool,
}

impl<'a> Mapper<'a> {
    fn new(
        h: &'a Hypergraph,
        g: &'a Hypergraph,
        vertices: &[usize],
        injective: bool,
        exact: bool,
    ) -> Self {
        let use_colours = h.colours().is_some() && g.colours().is_some();
        let inc = h.incidence();
        // Breadth-first order inside each component so that anchors exist.
        let mut order = Vec::with_capacity(vertices.len());
        let mut anchor = Vec::with_capacity(vertices.len());
        let mut seen = vec![false; h.n()];
        for &start in vertices {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            order.push(start);
            anchor.push(None);
            let mut head = order.len() - 1;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for &ei in &inc[v] {
                    for &w in &h.edges()[ei] {
                        if !seen[w] {
                            seen[w] = true;
                            order.push(w);
                            anchor.push(Some(v));
                        }
                    }
                }
            }
        }
        let mut pos = vec![usize::MAX; h.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for (ei, e) in h.edges().iter().enumerate() {
            if e.iter().any(|&v| pos[v] == usize::MAX) {
                continue;
            }
            let last = e.iter().map(|&v| pos[v]).max().unwrap();
            for &v in e {
                checks[pos[v]].push((ei, pos[v] == last));
            }
        }
        Mapper {
            h,
            t: Target::new(g, use_colours),
            h_colours: if use_colours { h.colours() } else { None },
            order,
            anchor,
            checks,
            injective,
            exact,
        }
    }

    fn count(&self) -> u128 {
        let mut image = vec![usize::MAX; self.h.n()];
        let mut used = vec![false; self.t.n];
        self.extend(0, &mut image, &mut used)
    }

    fn consistent(&self, pos: usize, image: &[usize]) -> bool {
        for &(ei, complete) in &self.checks[pos] {
            let e = &self.h.edges()[ei];
            let mut img: Vec<usize> = e
                .iter()
                .map(|&v| image[v])
                .filter(|&x| x != usize::MAX)
                .collect();
            img.sort_unstable();
            img.dedup();
            if complete {
                match self.t.edges.get(&img) {
                    None => return false,
                    Some(&m) => {
                        if self.exact && (img.len() != e.len() || m != self.h.multiplicities()[ei])
                        {
                            return false;
                        }
                    }
                }
            } else if !self.t.shadow.contains(&img) {
                return false;
            }
        }
        true
    }

    fn extend(&self, pos: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> u128 {
        if pos == self.order.len() {
            return 1;
        }
        let v = self.order[pos];
        let all: Vec<usize>;
        let candidates: &[usize] = match self.anchor[pos] {
            Some(u) => &self.t.closed_nbhd[image[u]],
            None => {
                all = (0..self.t.n).collect();
                &all
            }
        };
        let mut total = 0;
        for &x in candidates {
            if self.injective && used[x] {
                continue;
            }
            if let (Some(hc), Some(gc)) = (self.h_colours, self.t.colours) {
                if hc[v] != gc[x] {
                    continue;
                }
            }
            image[v] = x;
            if self.consistent(pos, image) {
                used[x] = true;
                total += self.extend(pos + 1, image, used);
                used[x] = false;
            }
            image[v] = usize::MAX;
        }
        total
    }
}

/// `#Hom(H → G)`, as a product over the connected components of `H`.
pub fn count_hom(h: &Hypergraph, g: &Hypergraph) -> u128 {
    let comp = h.components();
    let k = comp.iter().copied().max().map_or(0, |c| c + 1);
    let mut total: u128 = 1;
    for c in 0..k {
        let verts: Vec<usize> = (0..h.n()).filter(|&v| comp[v] == c).collect();
        let n = Mapper::new(h, g, &verts, false, false).count();
        if n == 0 {
            return 0;
        }
        total *= n;
    }
    total
}

/// `#Emb(H → G)`: injective homomorphisms, by direct backtracking.
pub fn count_emb(h: &Hypergraph, g: &Hypergraph) -> u128 {
    if h.n() > g.n() {
        return 0;
    }
    let all: Vec<usize> = (0..h.n()).collect();
    Mapper::new(h, g, &all, true, false).count()
}

/// `#Emb(H → G) = Σ_ρ μ(⊥, ρ) · #Hom(H/ρ → G)` over colour-consistent partitions.
pub fn count_emb_mobius(h: &Hypergraph, g: &Hypergraph) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for rho in colour_consistent_partitions(h) {
        let homs = count_hom(&quotient(h, &rho)?, g);
        if homs != 0 {
            total += mobius_bottom(&rho) * BigInt::from(homs);
        }
    }
    Ok(total)
}

/// `#Aut(H)`: colour-preserving vertex permutations mapping the edge multiset onto itself.
pub fn count_aut(h: &Hypergraph) -> u128 {
    let all: Vec<usize> = (0..h.n()).collect();
    Mapper::new(h, h, &all, true, true).count()
}

/// `#Sub(H → G) = #Emb(H → G) / #Aut(H)`; fails if the quotient is not integral.
pub fn count_sub(h: &Hypergraph, g: &Hypergraph) -> Result<u128> {
    let emb = count_emb(h, g);
    let aut = count_aut(h);
    if !emb.is_multiple_of(aut) {
        return Err(HolantError::Internal(format!(
            "#Emb = {emb} is not divisible by #Aut = {aut}"
        )));
    }
    Ok(emb / aut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::named;

    #[test]
    fn triangle_counts() {
        let k3 = named::complete_graph(3);
        assert_eq!(count_hom(&k3, &k3), 6);
        assert_eq!(count_emb(&k3, &k3), 6);
        assert_eq!(count_hom(&named::single_edge(2), &k3), 6);
    }

    #[test]
    fn single_three_edge_is_six_not_twenty_seven() {
        let e = named::single_edge(3);
        assert_eq!(count_hom(&e, &e), 6);
    }

    #[test]
    fn edge_into_path() {
        assert_eq!(count_emb(&named::single_edge(2), &named::path(3)), 4);
    }

    #[test]
    fn automorphisms_and_subgraphs() {
        for d in 1..=5 {
            let f: u128 = (1..=d as u128).product();
            assert_eq!(count_aut(&named::single_edge(d)), f);
        }
        let k3 = named::complete_graph(3);
        assert_eq!(count_sub(&named::single_edge(2), &k3).unwrap(), 3);
        assert_eq!(count_sub(&named::path(3), &k3).unwrap(), 3);
        assert_eq!(count_aut(&named::petersen()), 120);
        let double = Hypergraph::new(3, [[0, 1], [0, 1], [1, 2]]).unwrap();
        assert_eq!(count_aut(&double), 1);
    }

    #[test]
    fn isolated_vertices_multiply() {
        let h = Hypergraph::new(3, [[0, 1]]).unwrap();
        assert_eq!(count_hom(&h, &named::complete_graph(3)), 18);
        assert_eq!(count_emb(&h, &named::complete_graph(3)), 6);
    }

    #[test]
    fn mobius_matches_direct() {
        let k4 = named::complete_graph(4);
        for h in [
            named::path(3),
            named::cycle(4),
            named::complete_graph(3),
            named::single_edge(2),
        ] {
            assert_eq!(
                count_emb_mobius(&h, &k4).unwrap(),
                BigInt::from(count_emb(&h, &k4))
            );
        }
    }

    #[test]
    fn colours_restrict_maps() {
        let h = named::single_edge(2).with_colours(vec![0, 1]).unwrap();
        let g = named::path(3).with_colours(vec![0, 1, 0]).unwrap();
        assert_eq!(count_hom(&h, &g), 2);
        assert_eq!(count_emb_mobius(&h, &g).unwrap(), BigInt::from(2));
    }
}
