//! Canonical forms for small coloured hypergraphs.
//!
//! Vertices with the same colour and the same incident edges ("twins") are
//! interchangeable, so they are collapsed into weighted classes first. The
//! classes are then ordered by colour refinement plus individualisation, and
//! the lexicographically smallest relabelled encoding over all leaves of the
//! search tree is the canonical form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;

/// Default vertex limit for [`canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 40;

/// A relabelling-invariant encoding: equal iff the hypergraphs are isomorphic
/// (colour-preserving when coloured).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    colours: Option<Vec<usize>>,
    edges: Vec<(Vec<usize>, u64)>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonically labelled hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        let g = Hypergraph::with_multiplicities(self.n, self.edges.iter().cloned())
            .expect("canonical edges are valid");
        match &self.colours {
            Some(c) => g.with_colours(c.clone()).expect("colour count matches"),
            None => g,
        }
    }
}

/// Compact text form, e.g. `n3|e0.1,1.2` or `n2|c0.1|e0.1x2`.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.n)?;
        if let Some(c) = &self.colours {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "|c{}", parts.join("."))?;
        }
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(e, m)| {
                let body: Vec<String> = e.iter().map(usize::to_string).collect();
                if *m == 1 {
                    body.join(".")
                } else {
                    format!("{}x{m}", body.join("."))
                }
            })
            .collect();
        write!(f, "|e{}", edges.join(","))
    }
}

struct Reduced {
    weight: Vec<usize>,
    colour: Vec<Option<usize>>,
    /// Edges over class ids, with multiplicity.
    edges: Vec<(Vec<usize>, u64)>,
    /// Per class: incident reduced edges.
    inc: Vec<Vec<usize>>,
}

/// Per incident edge: (multiplicity, size, sorted cells of the other members).
type RefinementKey = (u64, usize, Vec<usize>);
/// (colour, weight, degree, sorted incident edge sizes).
type InitialKey = (Option<usize>, usize, u64, Vec<usize>);

fn reduce(g: &Hypergraph) -> Reduced {
    let inc = g.incidence();
    let mut key_to_class: HashMap<(Option<usize>, &[usize]), usize> = HashMap::new();
    let mut class_of = vec![0; g.n()];
    let mut weight = Vec::new();
    let mut colour = Vec::new();
    for v in 0..g.n() {
        let key = (g.colour(v), inc[v].as_slice());
        let c = *key_to_class.entry(key).or_insert_with(|| {
            weight.push(0);
            colour.push(g.colour(v));
            weight.len() - 1
        });
        weight[c] += 1;
        class_of[v] = c;
    }
    let mut edges = Vec::new();
    let mut rinc = vec![Vec::new(); weight.len()];
    for (e, &m) in g.edges().iter().zip(g.multiplicities()) {
        let mut classes: Vec<usize> = e.iter().map(|&v| class_of[v]).collect();
        classes.sort_unstable();
        classes.dedup();
        for &c in &classes {
            rinc[c].push(edges.len());
        }
        edges.push((classes, m));
    }
    Reduced {
        weight,
        colour,
        edges,
        inc: rinc,
    }
}

type Cells = Vec<Vec<usize>>;

fn refine(red: &Reduced, mut cells: Cells) -> Cells {
    let c = red.weight.len();
    loop {
        let mut cell_of = vec![0; c];
        for (i, cell) in cells.iter().enumerate() {
            for &x in cell {
                cell_of[x] = i;
            }
        }
        let signature = |x: usize| -> Vec<RefinementKey> {
            let mut sig: Vec<RefinementKey> = red.inc[x]
                .iter()
                .map(|&ei| {
                    let (e, m) = &red.edges[ei];
                    let mut others: Vec<usize> =
                        e.iter().filter(|&&y| y != x).map(|&y| cell_of[y]).collect();
                    others.sort_unstable();
                    (*m, e.len(), others)
                })
                .collect();
            sig.sort();
            sig
        };
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<RefinementKey>, Vec<usize>> = BTreeMap::new();
            for &x in cell {
                groups.entry(signature(x)).or_default().push(x);
            }
            next.extend(groups.into_values());
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn encode(g: &Hypergraph, red: &Reduced, order: &[usize]) -> CanonicalForm {
    // order[pos] = class placed at position pos; classes get consecutive label blocks.
    let mut start = vec![0; red.weight.len()];
    let mut next = 0;
    let mut colours = Vec::with_capacity(g.n());
    for &cls in order {
        start[cls] = next;
        next += red.weight[cls];
        for _ in 0..red.weight[cls] {
            colours.push(red.colour[cls].unwrap_or(0));
        }
    }
    let mut edges: Vec<(Vec<usize>, u64)> = red
        .edges
        .iter()
        .map(|(e, m)| {
            let mut labels: Vec<usize> = e
                .iter()
                .flat_map(|&cls| start[cls]..start[cls] + red.weight[cls])
                .collect();
            labels.sort_unstable();
            (labels, *m)
        })
        .collect();
    edges.sort();
    CanonicalForm {
        n: g.n(),
        colours: g.colours().map(|_| colours),
        edges,
    }
}

fn search(g: &Hypergraph, red: &Reduced, cells: Cells, best: &mut Option<CanonicalForm>) {
    let cells = refine(red, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    match target {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let enc = encode(g, red, &order);
            if best.as_ref().is_none_or(|b| enc < *b) {
                *best = Some(enc);
            }
        }
        Some(i) => {
            for &x in &cells[i] {
                let mut branch = Vec::with_capacity(cells.len() + 1);
                branch.extend_from_slice(&cells[..i]);
                branch.push(vec![x]);
                branch.push(cells[i].iter().copied().filter(|&y| y != x).collect());
                branch.extend_from_slice(&cells[i + 1..]);
                search(g, red, branch, best);
            }
        }
    }
}

/// Canonical form with the default vertex cap.
pub fn canonical_form(g: &Hypergraph) -> Result<CanonicalForm> {
    canonical_form_capped(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_capped(g: &Hypergraph, cap: usize) -> Result<CanonicalForm> {
    if g.n() > cap {
        return Err(HolantError::CapExceeded {
            what: "canonical-form vertices",
            value: g.n(),
            cap,
        });
    }
    let red = reduce(g);
    let mut initial: BTreeMap<InitialKey, Vec<usize>> = BTreeMap::new();
    for x in 0..red.weight.len() {
        let deg: u64 = red.inc[x].iter().map(|&ei| red.edges[ei].1).sum();
        let mut sizes: Vec<usize> = red.inc[x].iter().map(|&ei| red.edges[ei].0.len()).collect();
        sizes.sort_unstable();
        initial
            .entry((red.colour[x], red.weight[x], deg, sizes))
            .or_default()
            .push(x);
    }
    let mut best = None;
    search(g, &red, initial.into_values().collect(), &mut best);
    Ok(best.unwrap_or(CanonicalForm {
        n: 0,
        colours: g.colours().map(|_| Vec::new()),
        edges: Vec::new(),
    }))
}

pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n()
        || a.num_distinct_edges() != b.num_distinct_edges()
        || a.colours().is_some() != b.colours().is_some()
    {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Reference isomorphism test by trying every permutation; for tiny inputs only.
pub fn isomorphic_by_permutation(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.n() != b.n()
        || a.num_distinct_edges() != b.num_distinct_edges()
        || a.colours().is_some() != b.colours().is_some()
    {
        return false;
    }
    let mut perm: Vec<usize> = (0..a.n()).collect();
    let target = sorted_edges(b);
    loop {
        let img = a.relabel(&perm);
        if img.colours() == b.colours() && sorted_edges(&img) == target {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn sorted_edges(g: &Hypergraph) -> Vec<(Vec<usize>, u64)> {
    let mut e: Vec<_> = g
        .edges()
        .iter()
        .cloned()
        .zip(g.multiplicities().iter().copied())
        .collect();
    e.sort();
    e
}

/// Advances to the next lexicographic permutation; false after the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::named;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn relabelled_paths_agree() {
        let a = h(3, &[&[0, 1], &[1, 2]]);
        let b = h(3, &[&[2, 0], &[0, 1]]);
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn path_differs_from_matching() {
        let p3 = h(4, &[&[0, 1], &[1, 2]]);
        let two = h(4, &[&[0, 1], &[2, 3]]);
        assert_ne!(canonical_form(&p3).unwrap(), canonical_form(&two).unwrap());
    }

    #[test]
    fn two_three_edges_by_overlap() {
        let forms: Vec<_> = [
            h(6, &[&[0, 1, 2], &[3, 4, 5]]),
            h(5, &[&[0, 1, 2], &[2, 3, 4]]),
            h(4, &[&[0, 1, 2], &[1, 2, 3]]),
        ]
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
        assert_ne!(forms[0], forms[1]);
        assert_ne!(forms[1], forms[2]);
        assert_ne!(forms[0], forms[2]);
    }

    #[test]
    fn colours_matter() {
        let a = h(2, &[&[0, 1]]).with_colours(vec![0, 1]).unwrap();
        let b = h(2, &[&[0, 1]]).with_colours(vec![1, 0]).unwrap();
        let c = h(2, &[&[0, 1]]).with_colours(vec![0, 0]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
        assert_ne!(
            canonical_form(&c).unwrap(),
            canonical_form(&h(2, &[&[0, 1]])).unwrap()
        );
    }

    #[test]
    fn multiplicity_matters() {
        let a = h(2, &[&[0, 1], &[0, 1]]);
        let b = h(2, &[&[0, 1]]);
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn round_trip_is_isomorphic() {
        let p = named::petersen();
        let cf = canonical_form(&p).unwrap();
        assert!(isomorphic_by_permutation(
            &named::cycle(5),
            &canonical_form(&named::cycle(5)).unwrap().to_hypergraph()
        ));
        assert_eq!(canonical_form(&cf.to_hypergraph()).unwrap(), cf);
    }

    #[test]
    fn cap_is_enforced() {
        let err = canonical_form_capped(&named::cycle(12), 10).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn regular_graphs_are_separated() {
        // Two 2-regular graphs on 6 vertices: C6 vs two triangles.
        let c6 = named::cycle(6);
        let tt = h(6, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4], &[4, 5], &[3, 5]]);
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&tt).unwrap());
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }
}
