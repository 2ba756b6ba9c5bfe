use thiserror::Error;

/// Errors raised by the library.
///
/// Dimension agreement between values that were constructed from the same
/// family is a programmer contract and is enforced with assertions, not with
/// this type. Everything reachable from user input (files, CLI parameters,
/// stabilization budgets) surfaces here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator exponent vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("an ideal needs at least one generator")]
    EmptyGenerators,

    #[error("ideal is not m-primary: no generator is a pure power of variable {axis}")]
    NotMPrimary { axis: usize },

    #[error("family member {position} is the unit ideal")]
    UnitIdealMember { position: usize },

    #[error("family must contain at least one ideal")]
    EmptyFamily,

    #[error("|n| = {total} is smaller than p = {p}: the index set is empty")]
    EmptyIndexSet { total: u64, p: u64 },

    #[error("no coordinate of the multi-index exceeds p = {p}; (p, q) lies outside the valid region")]
    NoLargeCoordinate { p: u64 },

    #[error("closed form applies only when the small coordinates sum to at most p")]
    OverflowCell,

    #[error("region condition violated: q = {q} < (p + 1) * r = {bound}")]
    RegionViolated { p: u64, q: u64, bound: u128 },

    #[error("fiber count parameters out of range: {reason}")]
    FiberParams { reason: String },

    #[error("inclusion-exclusion colength supports at most {limit} generators, ideal has {count}")]
    TooManyGenerators { count: usize, limit: usize },

    #[error("stabilization budget exhausted after {attempts} base advances (values seen: {trail:?})")]
    BudgetExhausted {
        attempts: u64,
        trail: Vec<(u64, String)>,
    },

    #[error("multiplicity sequence violates its required shape: {reason}")]
    SequenceShape { reason: String },
}
