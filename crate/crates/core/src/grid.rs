//! Signature grids: a hypergraph with a signature at every vertex.

use serde::{Deserialize, Serialize};

use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::ExactScalar;
use crate::signature::Signature;

/// Signatures are stored once in a palette; each vertex holds a palette index.
/// The palette index doubles as the vertex colour wherever colours matter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct SignatureGrid {
    graph: Hypergraph,
    palette: Vec<Signature>,
    assignment: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawGrid {
    graph: Hypergraph,
    signatures: Vec<Signature>,
    assignment: Vec<usize>,
}

impl TryFrom<RawGrid> for SignatureGrid {
    type Error = HolantError;
    fn try_from(raw: RawGrid) -> Result<Self> {
        build_grid(raw.graph, raw.signatures, raw.assignment)
    }
}

impl From<SignatureGrid> for RawGrid {
    fn from(g: SignatureGrid) -> Self {
        RawGrid {
            graph: g.graph,
            signatures: g.palette,
            assignment: g.assignment,
        }
    }
}

/// Validates and assembles a grid.
///
/// Fails on a missing or out-of-range assignment, an all-zero signature, or a
/// vertex colouring that puts two different signatures on the same colour.
pub fn build_grid(
    graph: Hypergraph,
    palette: Vec<Signature>,
    assignment: Vec<usize>,
) -> Result<SignatureGrid> {
    if assignment.len() < graph.n() {
        return Err(HolantError::MissingAssignment(assignment.len()));
    }
    if assignment.len() > graph.n() {
        return Err(HolantError::InvalidInput(format!(
            "{} assignments for {} vertices",
            assignment.len(),
            graph.n()
        )));
    }
    if let Some((v, &i)) = assignment
        .iter()
        .enumerate()
        .find(|(_, &i)| i >= palette.len())
    {
        return Err(HolantError::InvalidInput(format!(
            "vertex {v} uses signature {i}, palette has {}",
            palette.len()
        )));
    }
    if palette.iter().any(Signature::is_identically_zero) {
        return Err(HolantError::ZeroSignature);
    }
    if let Some(colours) = graph.colours() {
        let mut sig_of_colour = std::collections::HashMap::new();
        for v in 0..graph.n() {
            let prev = *sig_of_colour.entry(colours[v]).or_insert(assignment[v]);
            if palette[prev] != palette[assignment[v]] {
                return Err(HolantError::InvalidInput(format!(
                    "colour {} carries two different signatures",
                    colours[v]
                )));
            }
        }
    }
    Ok(SignatureGrid {
        graph,
        palette,
        assignment,
    })
}

impl SignatureGrid {
    /// Every vertex gets the same signature.
    pub fn uniform(graph: Hypergraph, s: Signature) -> Result<Self> {
        let n = graph.n();
        build_grid(graph, vec![s], vec![0; n])
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn palette(&self) -> &[Signature] {
        &self.palette
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn signature(&self, v: usize) -> &Signature {
        &self.palette[self.assignment[v]]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn uniformity(&self) -> Option<usize> {
        self.graph.uniformity()
    }

    pub fn is_simple(&self) -> bool {
        self.graph.is_simple()
    }

    /// Palette indices that some vertex actually uses, ascending.
    pub fn used_signatures(&self) -> Vec<usize> {
        let mut used = vec![false; self.palette.len()];
        for &i in &self.assignment {
            used[i] = true;
        }
        (0..self.palette.len()).filter(|&i| used[i]).collect()
    }

    /// The graph coloured by palette index.
    pub fn coloured_graph(&self) -> Hypergraph {
        self.graph
            .clone()
            .without_colours()
            .with_colours(self.assignment.clone())
            .expect("one colour per vertex")
    }

    /// Product of `s_v(0)`: the Holant value at `k = 0`.
    pub fn empty_product(&self) -> ExactScalar {
        let values: Vec<ExactScalar> = self.palette.iter().map(|s| s.eval(0)).collect();
        self.product_over_vertices(&values)
    }

    /// `∏_v values[assignment(v)]`, by one power per palette entry.
    fn product_over_vertices(&self, values: &[ExactScalar]) -> ExactScalar {
        let mut counts = vec![0u64; self.palette.len()];
        for &i in &self.assignment {
            counts[i] += 1;
        }
        values
            .iter()
            .zip(counts)
            .filter(|&(_, c)| c > 0)
            .map(|(x, c)| x.pow_u(c))
            .product()
    }

    /// Normalises every palette entry with `s(0) ≠ 0`; returns the grid and the
    /// product of per-vertex scales, so that
    /// `Holant(self, k) = scale · Holant(normalised, k)`.
    pub fn normalized(&self) -> Result<(SignatureGrid, ExactScalar)> {
        let mut palette = Vec::with_capacity(self.palette.len());
        let mut scales = Vec::with_capacity(self.palette.len());
        for s in &self.palette {
            let (t, c) = s.normalize()?;
            palette.push(t);
            scales.push(c);
        }
        let scale = self.product_over_vertices(&scales);
        Ok((
            SignatureGrid {
                graph: self.graph.clone(),
                palette,
                assignment: self.assignment.clone(),
            },
            scale,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::named;

    #[test]
    fn k3_matchings_grid() {
        let g = SignatureGrid::uniform(named::complete_graph(3), Signature::hw_le1()).unwrap();
        assert_eq!(g.uniformity(), Some(2));
        assert!(g.is_simple());
        assert_eq!(g.empty_product(), ExactScalar::one());
    }

    #[test]
    fn repeated_edge_is_not_simple() {
        let h = Hypergraph::new(2, [[0, 1], [0, 1]]).unwrap();
        let g = SignatureGrid::uniform(h, Signature::hw_le1()).unwrap();
        assert!(!g.is_simple());
    }

    #[test]
    fn missing_or_zero_rejected() {
        let h = named::path(3);
        assert_eq!(
            build_grid(h.clone(), vec![Signature::one()], vec![0, 0]),
            Err(HolantError::MissingAssignment(2))
        );
        let zero = Signature::from_ints(&[0, 0], crate::signature::Tail::Zero).unwrap();
        assert_eq!(
            SignatureGrid::uniform(h, zero),
            Err(HolantError::ZeroSignature)
        );
    }

    #[test]
    fn colouring_must_agree_with_signatures() {
        let h = named::path(3).with_colours(vec![0, 0, 1]).unwrap();
        assert!(build_grid(
            h.clone(),
            vec![Signature::one(), Signature::hw_le1()],
            vec![0, 1, 1]
        )
        .is_err());
        assert!(build_grid(
            h,
            vec![Signature::one(), Signature::hw_le1()],
            vec![0, 0, 1]
        )
        .is_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = SignatureGrid::uniform(named::complete_graph(3), Signature::hw_le1()).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let back: SignatureGrid = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
