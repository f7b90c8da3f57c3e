//! Exact evaluation, classification and gadget reductions for parameterised
//! Holant problems on hypergraphs.
//!
//! A Holant instance is a [`SignatureGrid`]: a hypergraph whose vertices carry
//! symmetric [`Signature`]s. Its value at parameter `k` sums, over all
//! `k`-subsets `A` of hyperedges, the product of `s_v(|A ∩ E(v)|)`.
//! All arithmetic is exact over the Gaussian rationals ([`ExactScalar`]).

pub mod canon;
pub mod error;
pub mod eval;
pub mod fingerprint;
pub mod grid;
pub mod hombasis;
pub mod hypergraph;
pub mod par;
pub mod reductions;
pub mod scalar;
pub mod signature;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{HolantError, Result};
pub use grid::{build_grid, SignatureGrid};
pub use hypergraph::Hypergraph;
pub use par::Execution;
pub use scalar::ExactScalar;
pub use signature::{Signature, Tail};
