//! Coefficients of the Holant value in the homomorphism basis.
//!
//! For signatures with `s(0) = 1` and a simple `r`-uniform `G`, grouping the
//! `k`-subsets of `E(G)` by the isomorphism type `H` of the sub-hypergraph
//! they span gives
//! `Holant(G, k) = Σ_H ∏_v s(deg_H v) · #Emb(H → G) / #Aut(H)`,
//! and expanding `#Emb` over quotients of `H` gives a linear combination of
//! `#Hom(F → G)`. Quotients with an edge smaller than `r` have no
//! homomorphism into an `r`-uniform target and are dropped.

use std::collections::BTreeMap;

use serde::Serialize;

use super::catalogue::{enumerate_uniform_hypergraphs, CatalogueCaps};
use super::hom::{count_aut, count_hom};
use super::mobius::{colour_consistent_partitions, mobius_bottom};
use super::quotient::quotient;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{HolantError, Result};
use crate::hypergraph::Hypergraph;
use crate::scalar::ExactScalar;
use crate::signature::Signature;

/// `Holant(·, k) = Σ_F coefficient(F) · #Hom(F → ·)` on simple `rank`-uniform targets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomExpansion {
    pub k: usize,
    pub rank: usize,
    /// Canonically labelled patterns with non-zero coefficients, in canonical order.
    pub terms: Vec<(Hypergraph, ExactScalar)>,
}

impl HomExpansion {
    pub fn from_map(k: usize, rank: usize, map: BTreeMap<CanonicalForm, ExactScalar>) -> Self {
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(cf, c)| (cf.to_hypergraph(), c))
            .collect();
        HomExpansion { k, rank, terms }
    }

    /// Coefficient of the pattern isomorphic to `f`, or zero.
    pub fn coefficient(&self, f: &Hypergraph) -> Result<ExactScalar> {
        let cf = canonical_form(f)?;
        for (p, c) in &self.terms {
            if canonical_form(p)? == cf {
                return Ok(c.clone());
            }
        }
        Ok(ExactScalar::zero())
    }

    /// `Σ_F ζ(F) · #Hom(F → g)`. The `k = 0` expansion has no terms and
    /// evaluates to 1, the value of the empty sub-hypergraph.
    pub fn evaluate(&self, g: &Hypergraph) -> ExactScalar {
        if self.k == 0 {
            return ExactScalar::one();
        }
        self.terms
            .iter()
            .map(|(f, c)| c * &ExactScalar::from_bigint(count_hom(f, g).into()))
            .sum()
    }
}

fn check_normalized(palette: &[Signature]) -> Result<()> {
    if let Some(i) = palette.iter().position(|s| !s.eval(0).is_one()) {
        return Err(HolantError::Precondition(format!(
            "signature {i} must satisfy s(0) = 1; normalise the grid first"
        )));
    }
    Ok(())
}

/// The full expansion for `k` edges. A single-signature palette yields
/// uncoloured patterns; a larger palette yields patterns coloured by palette
/// index, to be evaluated against targets coloured the same way.
pub fn hom_expansion(
    k: usize,
    palette: &[Signature],
    r: usize,
    caps: &CatalogueCaps,
) -> Result<HomExpansion> {
    check_normalized(palette)?;
    if palette.is_empty() {
        return Err(HolantError::Precondition("empty signature palette".into()));
    }
    if k == 0 {
        return Ok(HomExpansion {
            k,
            rank: r,
            terms: Vec::new(),
        });
    }
    let colours = (palette.len() > 1).then_some(palette.len());
    let mut acc: BTreeMap<CanonicalForm, ExactScalar> = BTreeMap::new();
    for h in enumerate_uniform_hypergraphs(k, r, colours, caps)? {
        let degrees = h.degrees();
        let mut weight = ExactScalar::one();
        for v in 0..h.n() {
            let s = &palette[h.colour(v).unwrap_or(0)];
            weight *= &s.eval(degrees[v] as usize);
        }
        if weight.is_zero() {
            continue;
        }
        let weight = weight.checked_div(&ExactScalar::from_bigint(count_aut(&h).into()))?;
        for rho in colour_consistent_partitions(&h) {
            let q = quotient(&h, &rho)?;
            if !q.is_uniform(r) {
                continue;
            }
            let term = &weight * &ExactScalar::from_bigint(mobius_bottom(&rho));
            *acc.entry(canonical_form(&q)?).or_default() += &term;
        }
    }
    Ok(HomExpansion::from_map(k, r, acc))
}

/// `ζ_{k,S}(F)` for the pattern `f` (coloured by palette index when the
/// palette has several entries).
pub fn zeta_coefficient(
    k: usize,
    palette: &[Signature],
    f: &Hypergraph,
    caps: &CatalogueCaps,
) -> Result<ExactScalar> {
    let r = f.rank();
    if r == 0 {
        return Ok(ExactScalar::zero());
    }
    hom_expansion(k, palette, r, caps)?.coefficient(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::holant_bruteforce;
    use crate::fingerprint::fingerprint_fast;
    use crate::grid::SignatureGrid;
    use crate::hypergraph::named;

    fn caps() -> CatalogueCaps {
        CatalogueCaps::default()
    }

    #[test]
    fn single_edge_coefficient() {
        let e = hom_expansion(1, &[Signature::hw_le1()], 2, &caps()).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].1, ExactScalar::ratio(1, 2));
        assert_eq!(e.evaluate(&named::cycle(5)), ExactScalar::from_int(5));
    }

    #[test]
    fn triangle_coefficient_matches_fingerprint_product() {
        let s = Signature::hw_le1();
        let z = zeta_coefficient(
            3,
            std::slice::from_ref(&s),
            &named::complete_graph(3),
            &caps(),
        )
        .unwrap();
        assert_eq!(z, ExactScalar::ratio(-1, 6));
        let chi2 = fingerprint_fast(2, &s).value().unwrap().clone();
        assert_eq!(z, &chi2.pow_u(3) * &ExactScalar::ratio(1, 6));
    }

    #[test]
    fn identity_on_small_graphs() {
        for s in [
            Signature::hw_le1(),
            Signature::mod_p(2),
            Signature::geometric(ExactScalar::from_int(2)),
        ] {
            for k in 0..=3 {
                let e = hom_expansion(k, std::slice::from_ref(&s), 2, &caps()).unwrap();
                for g in [named::complete_graph(4), named::cycle(5), named::path(4)] {
                    let grid = SignatureGrid::uniform(g.clone(), s.clone()).unwrap();
                    assert_eq!(
                        e.evaluate(&g),
                        holant_bruteforce(&grid, k).unwrap().value,
                        "k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn regular_pattern_survives() {
        // For s with s(1) = 0, the triangle's coefficient is s(2)^3 / #Aut.
        let s = Signature::from_ints(&[1, 0, 5], crate::Tail::Zero).unwrap();
        let z = zeta_coefficient(3, &[s], &named::complete_graph(3), &caps()).unwrap();
        assert_eq!(z, ExactScalar::ratio(125, 6));
    }

    #[test]
    fn unnormalized_rejected() {
        let s = Signature::from_ints(&[2, 1], crate::Tail::Zero).unwrap();
        assert!(hom_expansion(1, &[s], 2, &caps()).is_err());
    }

    #[test]
    fn coloured_identity() {
        let palette = [
            Signature::hw_le1(),
            Signature::geometric(ExactScalar::from_int(3)),
        ];
        let g = named::cycle(4);
        let assignment = vec![0, 1, 0, 1];
        let grid = crate::grid::build_grid(g, palette.to_vec(), assignment).unwrap();
        for k in 1..=3 {
            let e = hom_expansion(k, &palette, 2, &caps()).unwrap();
            assert_eq!(
                e.evaluate(&grid.coloured_graph()),
                holant_bruteforce(&grid, k).unwrap().value,
                "k = {k}"
            );
        }
    }
}
