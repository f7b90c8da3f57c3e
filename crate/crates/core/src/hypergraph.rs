//! Hypergraphs with multi-hyperedges and optional vertex colours.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{HolantError, Result};

/// Vertices are `0..n`. Each distinct edge is a sorted vertex set carrying a
/// multiplicity; `edges()` never contains the same set twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    mult: Vec<u64>,
    colours: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mult: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colours: Option<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = HolantError;
    fn try_from(raw: RawHypergraph) -> Result<Self> {
        let mult = raw.mult.unwrap_or_else(|| vec![1; raw.edges.len()]);
        if mult.len() != raw.edges.len() {
            return Err(HolantError::InvalidInput(format!(
                "mult has {} entries but there are {} edges",
                mult.len(),
                raw.edges.len()
            )));
        }
        let g = Hypergraph::with_multiplicities(raw.n, raw.edges.into_iter().zip(mult))?;
        match raw.colours {
            Some(c) => g.with_colours(c),
            None => Ok(g),
        }
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(g: Hypergraph) -> Self {
        RawHypergraph {
            n: g.n,
            edges: g.edges,
            mult: Some(g.mult),
            colours: g.colours,
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph from a list of edges; repeated edges become multiplicities.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        Self::with_multiplicities(n, edges.into_iter().map(|e| (e.as_ref().to_vec(), 1)))
    }

    pub fn with_multiplicities<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, u64)>,
    {
        let mut g = Hypergraph {
            n,
            edges: Vec::new(),
            mult: Vec::new(),
            colours: None,
        };
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        for (edge, m) in edges {
            let e = normalize_edge(n, &edge)?;
            if m == 0 {
                continue;
            }
            match index.get(&e) {
                Some(&i) => g.mult[i] += m,
                None => {
                    index.insert(e.clone(), g.edges.len());
                    g.edges.push(e);
                    g.mult.push(m);
                }
            }
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
            mult: Vec::new(),
            colours: None,
        }
    }

    /// Attaches a colouring (one colour id per vertex).
    pub fn with_colours(mut self, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != self.n {
            return Err(HolantError::InvalidInput(format!(
                "{} colours given for {} vertices",
                colours.len(),
                self.n
            )));
        }
        self.colours = Some(colours);
        Ok(self)
    }

    pub fn without_colours(mut self) -> Self {
        self.colours = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distinct edges, each sorted.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn colours(&self) -> Option<&[usize]> {
        self.colours.as_deref()
    }

    pub fn colour(&self, v: usize) -> Option<usize> {
        self.colours.as_ref().map(|c| c[v])
    }

    /// Number of edges counted with multiplicity.
    pub fn num_edges(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn num_distinct_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges with every copy listed separately.
    pub fn edge_copies(&self) -> Vec<&[usize]> {
        self.edges
            .iter()
            .zip(&self.mult)
            .flat_map(|(e, &m)| std::iter::repeat_n(e.as_slice(), m as usize))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_edge_size(&self) -> usize {
        self.edges.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_uniform(&self, d: usize) -> bool {
        self.edges.iter().all(|e| e.len() == d)
    }

    /// The common edge size, if all edges agree (`None` for an edgeless graph).
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.is_uniform(r).then_some(r)
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m == 1)
    }

    /// Degree with multiplicity.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0; self.n];
        for (e, &m) in self.edges.iter().zip(&self.mult) {
            for &v in e {
                deg[v] += m;
            }
        }
        deg
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .zip(&self.mult)
            .filter(|(e, _)| e.contains(&v))
            .map(|(_, &m)| m)
            .sum()
    }

    /// For each vertex, the indices of the distinct edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let deg = self.degrees();
        (0..self.n).filter(|&v| deg[v] == 0).collect()
    }

    pub fn has_edge(&self, e: &[usize]) -> bool {
        let mut sorted = e.to_vec();
        sorted.sort_unstable();
        self.edges.contains(&sorted)
    }

    /// Component id per vertex, numbered in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &ei in &inc[v] {
                    for &w in &self.edges[ei] {
                        if comp[w] == usize::MAX {
                            comp[w] = next;
                            queue.push_back(w);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn num_components(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.num_components() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .cloned()
            .zip(self.mult.iter().copied())
            .chain(
                other
                    .edges
                    .iter()
                    .map(|e| e.iter().map(|v| v + shift).collect::<Vec<_>>())
                    .zip(other.mult.iter().copied()),
            );
        let mut g = Hypergraph::with_multiplicities(self.n + other.n, edges).expect("valid union");
        if let (Some(a), Some(b)) = (&self.colours, &other.colours) {
            g.colours = Some(a.iter().chain(b).copied().collect());
        }
        g
    }

    /// The sub-hypergraph with the given distinct edges and no isolated vertices,
    /// relabelled to `0..m` in increasing vertex order.
    pub fn edge_induced(&self, edge_ids: &[usize]) -> Hypergraph {
        let verts: BTreeSet<usize> = edge_ids
            .iter()
            .flat_map(|&i| self.edges[i].iter().copied())
            .collect();
        let relabel: HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = edge_ids.iter().map(|&i| {
            (
                self.edges[i].iter().map(|v| relabel[v]).collect(),
                self.mult[i],
            )
        });
        let mut g =
            Hypergraph::with_multiplicities(verts.len(), edges).expect("valid sub-hypergraph");
        if let Some(c) = &self.colours {
            g.colours = Some(verts.iter().map(|&v| c[v]).collect());
        }
        g
    }

    /// Removes isolated vertices and relabels the rest in increasing order.
    pub fn drop_isolated(&self) -> Hypergraph {
        let ids: Vec<usize> = (0..self.edges.len()).collect();
        self.edge_induced(&ids)
    }

    /// Applies `perm` (old vertex → new vertex); `perm` must be a bijection of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .zip(&self.mult)
            .map(|(e, &m)| (e.iter().map(|&v| perm[v]).collect(), m));
        let mut g =
            Hypergraph::with_multiplicities(self.n, edges).expect("relabelling preserves validity");
        if let Some(c) = &self.colours {
            let mut nc = vec![0; self.n];
            for v in 0..self.n {
                nc[perm[v]] = c[v];
            }
            g.colours = Some(nc);
        }
        g
    }
}

fn normalize_edge(n: usize, edge: &[usize]) -> Result<Vec<usize>> {
    if edge.is_empty() {
        return Err(HolantError::MalformedEdge {
            edge: vec![],
            reason: "edges must be non-empty".into(),
        });
    }
    let mut e = edge.to_vec();
    e.sort_unstable();
    if let Some(&v) = e.iter().find(|&&v| v >= n) {
        return Err(HolantError::MalformedEdge {
            edge: edge.to_vec(),
            reason: format!("vertex {v} out of range"),
        });
    }
    if e.windows(2).any(|w| w[0] == w[1]) {
        return Err(HolantError::MalformedEdge {
            edge: edge.to_vec(),
            reason: "repeated vertex".into(),
        });
    }
    Ok(e)
}

/// Frequently used small hypergraphs.
pub mod named {
    use super::Hypergraph;

    pub fn complete_graph(n: usize) -> Hypergraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push(vec![u, v]);
            }
        }
        Hypergraph::new(n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Hypergraph {
        Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    pub fn path(n_vertices: usize) -> Hypergraph {
        Hypergraph::new(n_vertices, (1..n_vertices).map(|i| vec![i - 1, i])).unwrap()
    }

    /// One edge containing all `d` vertices.
    pub fn single_edge(d: usize) -> Hypergraph {
        Hypergraph::new(d, [(0..d).collect::<Vec<_>>()]).unwrap()
    }

    pub fn petersen() -> Hypergraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push(vec![i, (i + 1) % 5]);
            edges.push(vec![i, i + 5]);
            edges.push(vec![5 + i, 5 + (i + 2) % 5]);
        }
        Hypergraph::new(10, edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_edges_become_multiplicity() {
        let g = Hypergraph::new(3, [[0, 1], [1, 0], [1, 2]]).unwrap();
        assert_eq!(g.edges(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(g.multiplicities(), &[2, 1]);
        assert!(!g.is_simple());
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.degrees(), vec![2, 3, 1]);
        assert_eq!(g.edge_copies().len(), 3);
    }

    #[test]
    fn malformed_edges_rejected() {
        assert!(matches!(
            Hypergraph::new(3, [[0, 0]]),
            Err(HolantError::MalformedEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, [[0, 2]]),
            Err(HolantError::MalformedEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(2, [Vec::<usize>::new()]),
            Err(HolantError::MalformedEdge { .. })
        ));
    }

    #[test]
    fn rank_and_uniformity() {
        let g = Hypergraph::new(3, [vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert_eq!(g.rank(), 3);
        assert_eq!(g.min_edge_size(), 2);
        assert_eq!(g.uniformity(), None);
        assert_eq!(named::complete_graph(3).uniformity(), Some(2));
    }

    #[test]
    fn connectivity() {
        assert!(named::cycle(5).is_connected());
        let two = Hypergraph::new(4, [[0, 1], [2, 3]]).unwrap();
        assert_eq!(two.num_components(), 2);
        assert!(!Hypergraph::empty(0).is_connected());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = named::petersen();
        assert_eq!(p.num_edges(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert!(p.is_simple());
    }

    #[test]
    fn json_round_trip() {
        let g = Hypergraph::new(3, [[0, 1], [0, 1]])
            .unwrap()
            .with_colours(vec![0, 0, 1])
            .unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1]],"mult":[2],"colours":[0,0,1]}"#);
        assert_eq!(serde_json::from_str::<Hypergraph>(&s).unwrap(), g);
        let plain: Hypergraph = serde_json::from_str(r#"{"n":2,"edges":[[1,0]]}"#).unwrap();
        assert_eq!(plain.edges(), &[vec![0, 1]]);
    }
}
