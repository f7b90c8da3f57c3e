//! Evaluation for signature sets whose members with `s(0) ≠ 0` are geometric.
//!
//! If every vertex has `s_v(n) = s_v(0)·α_v^n`, a subset `A` contributes
//! `∏_v s_v(0) · ∏_{e∈A} β_e` with `β_e = ∏_{v∈e} α_v`. Edges with the same
//! multiset of signatures have the same `β`, so only the number of chosen
//! edges per class matters and the sum collapses to binomials over classes.

use std::collections::BTreeMap;

use super::brute::binomial;
use super::{HolantResult, Method, WorkStats};
use crate::error::{HolantError, Result};
use crate::grid::SignatureGrid;
use crate::scalar::ExactScalar;

/// Edges sharing a multiset of palette indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    /// Sorted palette indices of the edge's vertices.
    pub signatures: Vec<usize>,
    /// Number of edges in the class, counting multiplicity.
    pub size: u64,
}

/// Groups edge copies by signature multiset; sizes sum to `|E|`.
pub fn edge_classes(grid: &SignatureGrid) -> Vec<EdgeClass> {
    let mut map: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for (e, &m) in grid
        .graph()
        .edges()
        .iter()
        .zip(grid.graph().multiplicities())
    {
        let mut key: Vec<usize> = e.iter().map(|&v| grid.assignment()[v]).collect();
        key.sort_unstable();
        *map.entry(key).or_default() += m;
    }
    map.into_iter()
        .map(|(signatures, size)| EdgeClass { signatures, size })
        .collect()
}

fn require_uniform(grid: &SignatureGrid) -> Result<()> {
    let g = grid.graph();
    if g.num_distinct_edges() > 0 && g.uniformity().is_none() {
        return Err(HolantError::NotUniform {
            rank: g.rank(),
            min: g.min_edge_size(),
        });
    }
    Ok(())
}

/// Largest degree among the vertices using each palette entry.
fn max_degree_per_signature(grid: &SignatureGrid) -> Vec<u64> {
    let mut out = vec![0; grid.palette().len()];
    for (v, d) in grid.graph().degrees().into_iter().enumerate() {
        let i = grid.assignment()[v];
        out[i] = out[i].max(d);
    }
    out
}

/// `α = s(1)/s(0)` per palette entry with `s(0) ≠ 0`, after checking that the
/// entry is geometric up to the largest degree where it is used.
fn ratios(grid: &SignatureGrid, allow_zero_at_zero: bool) -> Result<Vec<Option<ExactScalar>>> {
    let maxdeg = max_degree_per_signature(grid);
    let used = grid.used_signatures();
    let mut out = vec![None; grid.palette().len()];
    for i in used {
        let s = &grid.palette()[i];
        let s0 = s.eval(0);
        if s0.is_zero() {
            if allow_zero_at_zero {
                continue;
            }
            return Err(HolantError::NotTypeOne(format!(
                "signature {i} has s(0) = 0; use the zero-aware evaluator"
            )));
        }
        // The first deviation from s(0)·α^n, if any, lies within the tail horizon.
        if let Some(n) = s.geometric_deviation() {
            if n as u64 <= maxdeg[i] {
                return Err(HolantError::NotTypeOne(format!(
                    "signature {i} is not geometric: s({n}) ≠ s(0)·(s(1)/s(0))^{n}"
                )));
            }
        }
        out[i] = Some(s.eval(1).checked_div(&s0)?);
    }
    Ok(out)
}

/// `[e_0, …, e_k]` where `e_j = Σ_{Σ k_λ = j} ∏_λ C(|E_λ|, k_λ) β_λ^{k_λ}`,
/// accumulated class by class.
fn class_polynomial(classes: &[(u64, ExactScalar)], k: usize, work: &mut u64) -> Vec<ExactScalar> {
    let mut poly = vec![ExactScalar::zero(); k + 1];
    poly[0] = ExactScalar::one();
    for (size, beta) in classes {
        let top = (*size).min(k as u64) as usize;
        let mut weights = Vec::with_capacity(top + 1);
        let mut power = ExactScalar::one();
        for t in 0..=top {
            weights.push(&ExactScalar::from_bigint(binomial(*size, t as u64).into()) * &power);
            power = &power * beta;
        }
        let mut next = vec![ExactScalar::zero(); k + 1];
        for j in 0..=k {
            if poly[j].is_zero() {
                continue;
            }
            for t in 0..=top.min(k - j) {
                *work += 1;
                next[j + t] += &poly[j] * &weights[t];
            }
        }
        poly = next;
    }
    poly
}

fn beta(sigs: &[usize], alphas: &[Option<ExactScalar>]) -> ExactScalar {
    sigs.iter()
        .map(|&i| alphas[i].clone().expect("ratio present"))
        .product()
}

/// Holant for a uniform grid whose signatures all satisfy `s(n) = s(0)·α^n`
/// up to the degrees where they are used.
pub fn holant_fpt_t1(grid: &SignatureGrid, k: usize) -> Result<HolantResult> {
    require_uniform(grid)?;
    let alphas = ratios(grid, false)?;
    let classes: Vec<(u64, ExactScalar)> = edge_classes(grid)
        .into_iter()
        .map(|c| (c.size, beta(&c.signatures, &alphas)))
        .collect();
    let mut work = 0;
    let poly = class_polynomial(&classes, k, &mut work);
    let value = &grid.empty_product() * &poly[k];
    Ok(HolantResult::new(
        value,
        Method::FptT1,
        WorkStats {
            subsets: 0,
            compositions: work,
        },
    ))
}

/// Holant for a uniform grid in which the members with `s(0) ≠ 0` are
/// geometric and the rest (`s(0) = 0`) are arbitrary.
///
/// Every vertex with `s(0) = 0` needs a chosen incident edge, so at most
/// `k·r` of them can be satisfied. Edges meeting such vertices are grouped by
/// `(W, μ)`: the set `W` of zero vertices they contain and the signature
/// multiset `μ` of the rest. The counts `k̂(W, μ)` are enumerated explicitly;
/// edges avoiding zero vertices are handled by the class polynomial.
pub fn holant_fpt_zeros(grid: &SignatureGrid, k: usize) -> Result<HolantResult> {
    require_uniform(grid)?;
    let alphas = ratios(grid, true)?;
    let g = grid.graph();
    let r = g.rank();
    let zero_vertices: Vec<usize> = (0..g.n())
        .filter(|&v| grid.signature(v).eval(0).is_zero())
        .collect();
    if zero_vertices.len() > k * r || (k == 0 && !zero_vertices.is_empty()) {
        return Ok(HolantResult::new(
            ExactScalar::zero(),
            Method::FptZeros,
            WorkStats::default(),
        ));
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in zero_vertices.iter().enumerate() {
        local[v] = i;
    }

    let mut free: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut touching: BTreeMap<(Vec<usize>, Vec<usize>), u64> = BTreeMap::new();
    for (e, &m) in g.edges().iter().zip(g.multiplicities()) {
        let w: Vec<usize> = e
            .iter()
            .filter(|&&v| local[v] != usize::MAX)
            .map(|&v| local[v])
            .collect();
        let mut mu: Vec<usize> = e
            .iter()
            .filter(|&&v| local[v] == usize::MAX)
            .map(|&v| grid.assignment()[v])
            .collect();
        mu.sort_unstable();
        if w.is_empty() {
            *free.entry(mu).or_default() += m;
        } else {
            *touching.entry((w, mu)).or_default() += m;
        }
    }

    let mut work = 0;
    let free_classes: Vec<(u64, ExactScalar)> =
        free.iter().map(|(mu, &m)| (m, beta(mu, &alphas))).collect();
    let free_poly = class_polynomial(&free_classes, k, &mut work);

    let classes: Vec<ZeroClass> = touching
        .into_iter()
        .map(|((w, mu), size)| ZeroClass {
            beta: beta(&mu, &alphas),
            zeros: w,
            size,
        })
        .collect();
    // Index after which each zero vertex's degree is final.
    let mut last = vec![None; zero_vertices.len()];
    for (ci, c) in classes.iter().enumerate() {
        for &z in &c.zeros {
            last[z] = Some(ci);
        }
    }
    if last.iter().any(Option::is_none) {
        // A zero vertex without edges always contributes s(0) = 0.
        return Ok(HolantResult::new(
            ExactScalar::zero(),
            Method::FptZeros,
            WorkStats {
                subsets: 0,
                compositions: work,
            },
        ));
    }
    let mut closing = vec![Vec::new(); classes.len()];
    for (z, l) in last.iter().enumerate() {
        closing[l.unwrap()].push(z);
    }
    let zero_values: Vec<Vec<ExactScalar>> = zero_vertices
        .iter()
        .map(|&v| grid.signature(v).values(g.degree(v).min(k as u64) as usize))
        .collect();

    let search = ZeroSearch {
        classes: &classes,
        closing: &closing,
        zero_values: &zero_values,
        free_poly: &free_poly,
        k,
    };
    let mut deg = vec![0usize; zero_vertices.len()];
    let total = search.run(0, 0, &mut deg, ExactScalar::one(), &mut work);
    let mut counts = vec![0u64; grid.palette().len()];
    for v in (0..g.n()).filter(|&v| local[v] == usize::MAX) {
        counts[grid.assignment()[v]] += 1;
    }
    let nonzero_part: ExactScalar = grid
        .palette()
        .iter()
        .zip(counts)
        .filter(|&(_, c)| c > 0)
        .map(|(s, c)| s.eval(0).pow_u(c))
        .product();
    Ok(HolantResult::new(
        &nonzero_part * &total,
        Method::FptZeros,
        WorkStats {
            subsets: 0,
            compositions: work,
        },
    ))
}

struct ZeroClass {
    beta: ExactScalar,
    zeros: Vec<usize>,
    size: u64,
}

struct ZeroSearch<'a> {
    classes: &'a [ZeroClass],
    closing: &'a [Vec<usize>],
    zero_values: &'a [Vec<ExactScalar>],
    free_poly: &'a [ExactScalar],
    k: usize,
}

impl ZeroSearch<'_> {
    fn run(
        &self,
        ci: usize,
        used: usize,
        deg: &mut Vec<usize>,
        acc: ExactScalar,
        work: &mut u64,
    ) -> ExactScalar {
        if ci == self.classes.len() {
            *work += 1;
            return &acc * &self.free_poly[self.k - used];
        }
        let class = &self.classes[ci];
        let top = (class.size as usize).min(self.k - used);
        let mut total = ExactScalar::zero();
        let mut power = ExactScalar::one();
        for t in 0..=top {
            for &z in &class.zeros {
                deg[z] += t;
            }
            let mut next =
                &acc * &(&ExactScalar::from_bigint(binomial(class.size, t as u64).into()) * &power);
            for &z in &self.closing[ci] {
                next *= &self.zero_values[z][deg[z]];
            }
            if !next.is_zero() {
                total += self.run(ci + 1, used + t, deg, next, work);
            }
            for &z in &class.zeros {
                deg[z] -= t;
            }
            power = &power * &class.beta;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::holant_bruteforce;
    use crate::grid::build_grid;
    use crate::hypergraph::{named, Hypergraph};
    use crate::signature::{Signature, Tail};

    fn int(n: i64) -> ExactScalar {
        ExactScalar::from_int(n)
    }

    fn path_grid(middle: Signature, ends: Signature) -> SignatureGrid {
        build_grid(named::path(3), vec![ends, middle], vec![0, 1, 0]).unwrap()
    }

    #[test]
    fn path_with_two_geometric_signatures() {
        let g = path_grid(Signature::geometric(int(3)), Signature::geometric(int(2)));
        let r = holant_fpt_t1(&g, 1).unwrap();
        assert_eq!(r.value, int(12));
        assert_eq!(r.value, holant_bruteforce(&g, 1).unwrap().value);
        assert_eq!(
            edge_classes(&g),
            vec![EdgeClass {
                signatures: vec![0, 1],
                size: 2
            }]
        );
    }

    #[test]
    fn k3_geometric_and_overfull_k() {
        let g =
            SignatureGrid::uniform(named::complete_graph(3), Signature::geometric(int(2))).unwrap();
        assert_eq!(holant_fpt_t1(&g, 2).unwrap().value, int(48));
        assert_eq!(holant_fpt_t1(&g, 4).unwrap().value, int(0));
    }

    #[test]
    fn non_geometric_rejected() {
        let g = SignatureGrid::uniform(named::complete_graph(3), Signature::hw_le1()).unwrap();
        assert!(matches!(
            holant_fpt_t1(&g, 1),
            Err(HolantError::NotTypeOne(_))
        ));
        // Geometric only up to the degrees actually used is accepted.
        let s = Signature::from_ints(&[1, 2, 4], Tail::Zero).unwrap();
        let g = SignatureGrid::uniform(named::complete_graph(3), s).unwrap();
        assert_eq!(
            holant_fpt_t1(&g, 2).unwrap().value,
            holant_bruteforce(&g, 2).unwrap().value
        );
    }

    #[test]
    fn non_uniform_rejected() {
        let h = Hypergraph::new(3, [vec![0, 1], vec![0, 1, 2]]).unwrap();
        let g = SignatureGrid::uniform(h, Signature::one()).unwrap();
        assert!(matches!(
            holant_fpt_t1(&g, 1),
            Err(HolantError::NotUniform { rank: 3, min: 2 })
        ));
    }

    #[test]
    fn zeros_on_the_middle_vertex() {
        let middle = Signature::from_ints(&[0, 1, 1], Tail::Zero).unwrap();
        let g = path_grid(middle, Signature::one());
        assert_eq!(holant_fpt_zeros(&g, 1).unwrap().value, int(2));
        assert_eq!(holant_fpt_zeros(&g, 0).unwrap().value, int(0));
        assert_eq!(holant_fpt_zeros(&g, 2).unwrap().value, int(1));
    }

    #[test]
    fn zero_shortcut() {
        // Five zero vertices cannot all be covered by one 2-edge.
        let g = SignatureGrid::uniform(named::complete_graph(5), Signature::hw_ge1()).unwrap();
        let r = holant_fpt_zeros(&g, 1).unwrap();
        assert_eq!(r.value, int(0));
        assert_eq!(r.value, holant_bruteforce(&g, 1).unwrap().value);
        for k in 0..=6 {
            assert_eq!(
                holant_fpt_zeros(&g, k).unwrap().value,
                holant_bruteforce(&g, k).unwrap().value,
                "k = {k}"
            );
        }
    }

    #[test]
    fn multi_edges_inside_zero_part() {
        let h = Hypergraph::new(3, [vec![0, 1], vec![0, 1], vec![1, 2]]).unwrap();
        let g = build_grid(
            h,
            vec![Signature::hw_ge1(), Signature::geometric(int(3))],
            vec![0, 0, 1],
        )
        .unwrap();
        for k in 0..=3 {
            assert_eq!(
                holant_fpt_zeros(&g, k).unwrap().value,
                holant_bruteforce(&g, k).unwrap().value,
                "k = {k}"
            );
        }
    }
}
