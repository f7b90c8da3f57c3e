use std::collections::BTreeMap;

use super::catalogue::{enumerate_uniform_hypergraphs_upto, CatalogueCaps};
use super::hom::count_hom;
use super::linalg::{rank, solve};
use super::zeta::HomExpansion;
use crate::canon::canonical_form;
use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::ExactScalar;

/// Recovers `c` from an oracle `X ↦ Σ_F c(F) · #Hom(F → X)` whose support
/// lies in the `r`-uniform patterns with at most `k` edges.
///
/// The candidate patterns double as test targets: the set is closed under
/// taking sub-hypergraphs and uniform homomorphic images, so ordering by size
/// makes `#Hom(F → X)` triangular with `#Aut` on the diagonal.
pub fn dedekind_interpolate<O>(
    mut oracle: O,
    k: usize,
    r: usize,
    caps: &CatalogueCaps,
) -> Result<HomExpansion>
where
    O: FnMut(&Hypergraph) -> Result<ExactScalar>,
{
    if k == 0 {
        return Ok(HomExpansion {
            k,
            rank: r,
            terms: Vec::new(),
        });
    }
    let patterns = enumerate_uniform_hypergraphs_upto(k, r, None, caps)?;
    let matrix: Vec<Vec<ExactScalar>> = patterns
        .iter()
        .map(|x| {
            patterns
                .iter()
                .map(|f| ExactScalar::from_bigint(count_hom(f, x).into()))
                .collect()
        })
        .collect();
    if rank(&matrix) < patterns.len() {
        return Err(HolantError::Internal(
            "homomorphism matrix over the pattern closure is singular".into(),
        ));
    }
    let values = patterns
        .iter()
        .map(&mut oracle)
        .collect::<Result<Vec<_>>>()?;
    let coeffs = solve(&matrix, &values)?;
    let mut map = BTreeMap::new();
    for (f, c) in patterns.iter().zip(coeffs) {
        map.insert(canonical_form(f)?, c);
    }
    Ok(HomExpansion::from_map(k, r, map))
}
