use crate::canon::next_permutation;
use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;

/// `G ⊗ H` on `V(G) × V(H)`, vertex `(u, v)` numbered `u·|V(H)| + v`.
///
/// For edges `e = {u_1..u_r}` of `G` and `f` of `H`, every bijection
/// `π: e → f` contributes the edge `{(u_i, π(u_i))}`; copies multiply.
/// When both factors are coloured, `(u, v)` gets colour `c(u)·(max c_H + 1) + c(v)`.
pub fn tensor_product(g: &Hypergraph, h: &Hypergraph) -> Result<Hypergraph> {
    let rg = g.uniformity();
    let rh = h.uniformity();
    let r = match (rg, rh) {
        (Some(a), Some(b)) if a == b => a,
        (None, None) => 0,
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (Some(a), Some(b)) => {
            return Err(HolantError::Precondition(format!(
                "tensor product needs equal uniform ranks, got {a} and {b}"
            )));
        }
    };
    if (g.num_distinct_edges() > 0 && rg.is_none()) || (h.num_distinct_edges() > 0 && rh.is_none())
    {
        return Err(HolantError::Precondition(
            "tensor product needs uniform factors".into(),
        ));
    }
    let nh = h.n();
    let mut edges = Vec::new();
    for (e, &me) in g.edges().iter().zip(g.multiplicities()) {
        for (f, &mf) in h.edges().iter().zip(h.multiplicities()) {
            let mut perm: Vec<usize> = (0..r).collect();
            loop {
                let edge: Vec<usize> = (0..r).map(|i| e[i] * nh + f[perm[i]]).collect();
                edges.push((edge, me * mf));
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
    let product = Hypergraph::with_multiplicities(g.n() * nh, edges)?;
    match (g.colours(), h.colours()) {
        (Some(cg), Some(ch)) => {
            let base = ch.iter().copied().max().map_or(1, |m| m + 1);
            let colours = (0..g.n() * nh)
                .map(|x| cg[x / nh] * base + ch[x % nh])
                .collect();
            product.with_colours(colours)
        }
        _ => Ok(product),
    }
}
