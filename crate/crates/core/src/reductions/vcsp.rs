//! Weighted constraint satisfaction with symmetric constraints, and its
//! two-way translation to Holant grids (constraints become vertices,
//! variables become hyperedges).

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::check_subsets;
use crate::error::{HolantError, Result};
use crate::grid::{build_grid, SignatureGrid};
use crate::hypergraph::Hypergraph;
use crate::scalar::ExactScalar;
use crate::signature::Signature;

/// A symmetric function applied to the Hamming weight of its scope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub function: Signature,
    pub scope: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcspInstance {
    pub n_variables: usize,
    pub constraints: Vec<Constraint>,
    pub k: usize,
}

impl VcspInstance {
    pub fn validate(&self) -> Result<()> {
        for (ci, c) in self.constraints.iter().enumerate() {
            if let Some(&x) = c.scope.iter().find(|&&x| x >= self.n_variables) {
                return Err(HolantError::InvalidInput(format!(
                    "constraint {ci} mentions variable {x}, only {} exist",
                    self.n_variables
                )));
            }
            if !c.scope.iter().all_unique() {
                return Err(HolantError::InvalidInput(format!(
                    "constraint {ci} repeats a variable in its scope"
                )));
            }
        }
        Ok(())
    }

    /// `occ(x)`: the number of constraints mentioning `x`.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.n_variables];
        for c in &self.constraints {
            for &x in &c.scope {
                occ[x] += 1;
            }
        }
        occ
    }
}

/// `Z(I)`: the sum over weight-`k` assignments of the product of constraint values.
pub fn vcsp_count(inst: &VcspInstance, budget: u64) -> Result<ExactScalar> {
    inst.validate()?;
    check_subsets(inst.n_variables, inst.k, budget)?;
    let mut total = ExactScalar::zero();
    let mut on = vec![false; inst.n_variables];
    for ones in (0..inst.n_variables).combinations(inst.k) {
        for &x in &ones {
            on[x] = true;
        }
        let term: ExactScalar = inst
            .constraints
            .iter()
            .map(|c| c.function.eval(c.scope.iter().filter(|&&x| on[x]).count()))
            .product();
        total += &term;
        for &x in &ones {
            on[x] = false;
        }
    }
    Ok(total)
}

/// Constraint `c` becomes vertex `c`; variable `x` becomes the hyperedge of
/// constraints mentioning it. Equal incidence sets stay as multi-edges.
pub fn vcsp_to_holant(inst: &VcspInstance) -> Result<(SignatureGrid, usize)> {
    inst.validate()?;
    if let Some(x) = inst.occurrences().iter().position(|&o| o == 0) {
        return Err(HolantError::Precondition(format!(
            "variable {x} occurs in no constraint; eliminate free variables first (they contribute binomial factors)"
        )));
    }
    let mut edges = vec![Vec::new(); inst.n_variables];
    for (ci, c) in inst.constraints.iter().enumerate() {
        for &x in &c.scope {
            edges[x].push(ci);
        }
    }
    let graph = Hypergraph::new(inst.constraints.len(), edges)?;
    let mut palette: Vec<Signature> = Vec::new();
    let mut assignment = Vec::with_capacity(inst.constraints.len());
    for c in &inst.constraints {
        let i = match palette.iter().position(|s| *s == c.function) {
            Some(i) => i,
            None => {
                palette.push(c.function.clone());
                palette.len() - 1
            }
        };
        assignment.push(i);
    }
    Ok((build_grid(graph, palette, assignment)?, inst.k))
}

/// Edge copies become variables; vertex `v` becomes a constraint over the
/// copies incident to it.
pub fn holant_to_vcsp(grid: &SignatureGrid, k: usize) -> VcspInstance {
    let copies = grid.graph().edge_copies();
    let mut scopes = vec![Vec::new(); grid.n()];
    for (x, e) in copies.iter().enumerate() {
        for &v in *e {
            scopes[v].push(x);
        }
    }
    let constraints = scopes
        .into_iter()
        .enumerate()
        .map(|(v, scope)| Constraint {
            function: grid.signature(v).clone(),
            scope,
        })
        .collect();
    VcspInstance {
        n_variables: copies.len(),
        constraints,
        k,
    }
}
