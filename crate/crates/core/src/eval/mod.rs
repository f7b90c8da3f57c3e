//! Holant evaluation: the defining sum, the linear-signature FPT algorithms,
//! uniformisation, and an auto-dispatching front door.

mod auto;
mod brute;
mod fpt;
mod uniformize;

use serde::Serialize;

use crate::fingerprint::SignatureType;
use crate::scalar::ExactScalar;

pub use auto::{holant, holant_auto, EvalOptions, MethodChoice};
pub use brute::{
    binomial, holant_brute_all, holant_bruteforce, holant_bruteforce_with, DEFAULT_BUDGET,
};
pub use fpt::{edge_classes, holant_fpt_t1, holant_fpt_zeros, EdgeClass};
pub use uniformize::{uniformize, uniformize_to};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    FptT1,
    FptZeros,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::FptT1 => "fpt_t1",
            Method::FptZeros => "fpt_zeros",
        }
    }
}

/// Counters describing how much enumeration a method performed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WorkStats {
    /// Edge subsets visited to completion by the brute-force sum.
    pub subsets: u64,
    /// Per-class choices examined by the FPT paths.
    pub compositions: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolantResult {
    pub value: ExactScalar,
    pub method: Method,
    pub work: WorkStats,
    /// Why this route was taken (set by the dispatcher).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<SignatureType>,
}

impl HolantResult {
    fn new(value: ExactScalar, method: Method, work: WorkStats) -> Self {
        HolantResult {
            value,
            method,
            work,
            note: None,
            classification: None,
        }
    }
}
