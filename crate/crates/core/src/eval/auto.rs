use super::brute::{holant_bruteforce_with, DEFAULT_BUDGET};
use super::fpt::{holant_fpt_t1, holant_fpt_zeros};
use super::uniformize::uniformize;
use super::HolantResult;
use crate::error::Result;
use crate::fingerprint::{classify, TypeTag, DEFAULT_BOUND};
use crate::grid::SignatureGrid;
use crate::par::Execution;
use crate::signature::Signature;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Brute,
    Fpt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    pub budget: u64,
    /// Fingerprint search bound used when classifying.
    pub bound: usize,
    pub exec: Execution,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            budget: DEFAULT_BUDGET,
            bound: DEFAULT_BOUND,
            exec: Execution::Parallel,
        }
    }
}

/// Runs the FPT route regardless of classification: uniformise, then pick the
/// zero-aware variant if any vertex has `s(0) = 0`.
fn fpt_route(grid: &SignatureGrid, k: usize) -> Result<HolantResult> {
    let u = uniformize(grid);
    let has_zero = (0..u.n()).any(|v| u.signature(v).eval(0).is_zero());
    if has_zero {
        holant_fpt_zeros(&u, k)
    } else {
        holant_fpt_t1(&u, k)
    }
}

/// Classifies the signatures in use; T1 sets go to the FPT algorithms (after
/// uniformisation), everything else to the budgeted brute-force sum.
pub fn holant_auto(grid: &SignatureGrid, k: usize, opts: &EvalOptions) -> Result<HolantResult> {
    let used: Vec<Signature> = grid
        .used_signatures()
        .into_iter()
        .map(|i| grid.palette()[i].clone())
        .collect();
    let verdict = classify(&used, opts.bound)?;
    let mut result = match verdict.tag {
        TypeTag::T1 => {
            let mut r = fpt_route(grid, k)?;
            r.note = Some(if verdict.vacuous {
                "T1 (vacuous: every signature has s(0) = 0); FPT route".into()
            } else {
                "T1; FPT route".into()
            });
            r
        }
        tag => {
            let mut r = holant_bruteforce_with(grid, k, opts.budget, opts.exec)?;
            let name = if tag == TypeTag::T2 { "T2" } else { "Tinf" };
            let qualifier = if verdict.exact {
                String::new()
            } else {
                format!(" at bound {}", opts.bound)
            };
            r.note = Some(format!(
                "{name}{qualifier}: no tractable algorithm; brute force"
            ));
            r
        }
    };
    result.classification = Some(verdict);
    Ok(result)
}

/// Evaluates with an explicit method choice.
pub fn holant(
    grid: &SignatureGrid,
    k: usize,
    choice: MethodChoice,
    opts: &EvalOptions,
) -> Result<HolantResult> {
    match choice {
        MethodChoice::Auto => holant_auto(grid, k, opts),
        MethodChoice::Brute => holant_bruteforce_with(grid, k, opts.budget, opts.exec),
        MethodChoice::Fpt => fpt_route(grid, k),
    }
}
