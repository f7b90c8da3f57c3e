//! Instance translations and gadgets, each paired with the exact identity it
//! asserts, plus brute-force oracles for the counting problems involved.

mod apps;
mod gadgets;
mod hitting;
mod matching;
mod regular;
mod vcsp;

use num_bigint::BigUint;

use crate::error::{HolantError, Result};
use crate::eval::binomial;

pub use apps::{build_codeword_instance, build_factor_instance, count_codewords, MatrixModP};
pub use gadgets::{
    bridge_lift, find_bridge_gadget, pad_gadget, BridgeGadget, GadgetCertificate, Verification,
    DEFAULT_BRIDGE_SEARCH_EDGES,
};
pub use hitting::{
    count_hitting_sets, deduplicate_vertices, hitting_set_holant, HittingSetReduction,
};
pub use matching::{
    count_perfect_matchings, pm_gadget_graph, pm_gadget_hyper, PmCertificate, PmMode,
    PmVerification,
};
pub use regular::gen_regular_connected;
pub use vcsp::{holant_to_vcsp, vcsp_count, vcsp_to_holant, Constraint, VcspInstance};

/// Fails unless `C(n, k) ≤ budget`.
fn check_subsets(n: usize, k: usize, budget: u64) -> Result<()> {
    let needed = binomial(n as u64, k as u64);
    if needed > BigUint::from(budget) {
        return Err(HolantError::BudgetExceeded {
            needed: needed.to_string(),
            budget,
        });
    }
    Ok(())
}
