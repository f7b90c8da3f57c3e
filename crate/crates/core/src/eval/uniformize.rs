use crate::grid::{build_grid, SignatureGrid};
use crate::hypergraph::Hypergraph;
use crate::signature::Signature;

/// Pads every edge to the rank with fresh vertices carrying the constant-one
/// signature. Exactly `rank − min|e|` fresh vertices are added, and the Holant
/// value is unchanged at every `k`.
pub fn uniformize(grid: &SignatureGrid) -> SignatureGrid {
    uniformize_to(grid, grid.rank())
}

/// Pads every edge to size `r ≥ rank` (adding `r − min|e|` fresh vertices).
pub fn uniformize_to(grid: &SignatureGrid, r: usize) -> SignatureGrid {
    let g = grid.graph();
    assert!(r >= g.rank(), "target size {r} below the rank {}", g.rank());
    let pad = r - g.min_edge_size();
    if g.num_distinct_edges() == 0 || pad == 0 {
        return grid.clone();
    }
    let n = g.n();
    let edges = g.edges().iter().zip(g.multiplicities()).map(|(e, &m)| {
        let mut e = e.clone();
        e.extend(n..n + (r - e.len()));
        (e, m)
    });
    let mut graph =
        Hypergraph::with_multiplicities(n + pad, edges).expect("padding keeps edges valid");

    let mut palette = grid.palette().to_vec();
    let one = Signature::one();
    let one_idx = palette.iter().position(|s| *s == one).unwrap_or_else(|| {
        palette.push(one);
        palette.len() - 1
    });
    let mut assignment = grid.assignment().to_vec();
    assignment.extend(std::iter::repeat_n(one_idx, pad));
    if let Some(c) = g.colours() {
        // Fresh vertices share the colour of existing `one` vertices, if any.
        let fresh = (0..n)
            .find(|&v| assignment[v] == one_idx)
            .map_or_else(|| c.iter().max().map_or(0, |m| m + 1), |v| c[v]);
        let mut colours = c.to_vec();
        colours.extend(std::iter::repeat_n(fresh, pad));
        graph = graph.with_colours(colours).expect("one colour per vertex");
    }
    build_grid(graph, palette, assignment).expect("padding keeps the grid valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::holant_bruteforce;
    use crate::hypergraph::named;
    use crate::scalar::ExactScalar;

    #[test]
    fn uniform_grid_unchanged() {
        let g = SignatureGrid::uniform(named::complete_graph(3), Signature::hw_le1()).unwrap();
        assert_eq!(uniformize(&g), g);
    }

    #[test]
    fn mixed_rank_gets_one_fresh_vertex() {
        let h = Hypergraph::new(3, [vec![0, 1], vec![0, 1, 2]]).unwrap();
        let s = Signature::from_ints(&[1, 2, 3], crate::Tail::Zero).unwrap();
        let g = SignatureGrid::uniform(h, s).unwrap();
        let u = uniformize(&g);
        assert_eq!(u.n(), 4);
        assert_eq!(u.uniformity(), Some(3));
        for k in 0..=2 {
            assert_eq!(
                holant_bruteforce(&u, k).unwrap().value,
                holant_bruteforce(&g, k).unwrap().value
            );
        }
    }

    #[test]
    fn triangle_lifted_to_rank_three() {
        let g = SignatureGrid::uniform(named::complete_graph(3), Signature::hw_le1()).unwrap();
        let u = uniformize_to(&g, 3);
        assert_eq!((u.n(), u.uniformity()), (4, Some(3)));
        assert_eq!(
            holant_bruteforce(&u, 1).unwrap().value,
            ExactScalar::from_int(3)
        );
        assert_eq!(
            holant_bruteforce(&g, 1).unwrap().value,
            ExactScalar::from_int(3)
        );
    }

    #[test]
    fn triangle_with_an_extra_three_edge() {
        let mut h = named::complete_graph(3);
        h = Hypergraph::new(4, h.edges().iter().cloned().chain([vec![0, 1, 3]])).unwrap();
        let g = build_grid(
            h,
            vec![Signature::hw_le1(), Signature::one()],
            vec![0, 0, 0, 1],
        )
        .unwrap();
        let u = uniformize(&g);
        assert_eq!(u.uniformity(), Some(3));
        assert_eq!(
            holant_bruteforce(&u, 1).unwrap().value,
            holant_bruteforce(&g, 1).unwrap().value
        );
        assert_eq!(
            holant_bruteforce(&u, 1).unwrap().value,
            ExactScalar::from_int(4)
        );
    }
}
