use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation is undefined for a constant polynomial")]
    ConstantPolynomial,
    #[error("interval is empty (lower endpoint must be below the upper one)")]
    EmptyInterval,
    #[error("division was expected to be exact but left a remainder")]
    InexactDivision,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuarticError {
    #[error("z = {z} is outside the admissible range z <= -9/4 - {guard}")]
    Range { z: f64, guard: f64 },
    #[error("roots at z = {z} do not form two conjugate pairs: {detail}")]
    Pairing { z: f64, detail: String },
    #[error("root moduli tie at z = {z} (|t1| = {r}, |t3| = {rho})")]
    ModulusTie { z: f64, r: f64, rho: f64 },
    #[error("root solver did not converge at z = {z}")]
    NoConvergence { z: f64 },
    #[error("sweep refinement exceeded the sample budget of {budget}")]
    BudgetExceeded { budget: usize },
    #[error("roots are too close for a partial-fraction split at z = {z}")]
    DegenerateRoots { z: f64 },
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exponent must be positive, got {0}")]
    NonPositiveAlpha(String),
}
