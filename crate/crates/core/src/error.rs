use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// Guard violations (`BudgetExceeded`, `CapExceeded`) are kept apart from
/// input errors so that front ends can map them to a distinct exit status.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HolantError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("negative power of zero")]
    NegativePowerOfZero,

    #[error("the all-zero signature is not allowed here")]
    ZeroSignature,

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("malformed hyperedge {edge:?}: {reason}")]
    MalformedEdge { edge: Vec<usize>, reason: String },

    #[error("vertex {0} has no signature assigned")]
    MissingAssignment(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("brute-force budget exceeded: {needed} subsets needed, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("cap exceeded for {what}: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("signature set is not of type T1: {0}")]
    NotTypeOne(String),

    #[error("hypergraph is not uniform (rank {rank}, smallest edge {min}); uniformize first")]
    NotUniform { rank: usize, min: usize },

    #[error("{0} is not a refinement of {1}")]
    NotRefinement(String, String),

    #[error("partition mixes colours in block {0:?}")]
    ColourInconsistent(Vec<usize>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl HolantError {
    /// True for computational guard violations (budgets and caps).
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            HolantError::BudgetExceeded { .. } | HolantError::CapExceeded { .. }
        )
    }
}

pub type Result<T, E = HolantError> = std::result::Result<T, E>;
