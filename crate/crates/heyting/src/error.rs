use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The reflexive-transitive closure of the input relation identifies two
    /// distinct elements, so it is not a partial order.
    #[error("relation closure relates {x} and {y} in both directions")]
    Cycle { x: usize, y: usize },

    #[error("structure has {n} elements, more than the supported maximum {max}")]
    TooLarge { n: usize, max: usize },

    #[error("operation is undefined on the empty poset")]
    EmptyPoset,

    #[error("budget exceeded during {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: u64 },

    #[error("not a bounded lattice: elements {a}, {b} ({reason})")]
    NotLattice { a: usize, b: usize, reason: &'static str },

    #[error("lattice is not distributive at triple ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize },

    #[error("adjunction a∧b ≤ c ⟺ a ≤ b→c fails at triple ({a}, {b}, {c})")]
    AdjunctionFails { a: usize, b: usize, c: usize },

    #[error("algebra is not subdirectly irreducible")]
    NotSi,

    #[error("map is not order-preserving: {x} ≤ {y} but images are not comparable that way")]
    NotMonotone { x: usize, y: usize },

    #[error("back condition fails at {x}: target point {target} is above the image but not attained")]
    NotBack { x: usize, target: usize },

    #[error("parse error at position {position}: expected {}", expected.join(" | "))]
    Parse { position: usize, expected: Vec<String> },

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    #[error("algebra is not a cascade algebra; width classification by Jankov formulas is only sound for cascades")]
    NotCascade,

    #[error("poset is not a tower of small antichains: level {level} {reason}")]
    NotDecomposable { level: usize, reason: String },

    #[error("unknown poset name `{0}`")]
    UnknownName(String),

    #[error("truncation parameter {n} is too small (minimum {min})")]
    TooSmall { n: usize, min: usize },

    #[error("bad diamond sequence spec: {0}")]
    BadSpec(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
