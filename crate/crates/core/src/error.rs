//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// A q-shifted factorial with negative index hit a vanishing factor.
    #[error("pole: {0}")]
    Pole(String),

    /// Arithmetic between an exact-rational value and a complex-float value.
    #[error("mode mismatch: exact-rational and complex-float operands cannot mix")]
    ModeMismatch,

    /// An infinite product was requested with |q| >= 1.
    #[error("non-convergent: infinite q-product requires |q| < 1 (got |q| = {0})")]
    NonConvergent(f64),

    /// A series denominator parameter vanishes before the series terminates.
    #[error("denominator pole: parameter {index} vanishes at term {term}")]
    DenominatorPole { index: usize, term: usize },

    /// A basic hypergeometric series with no terminating parameter and |z| >= 1.
    #[error("non-terminating series with |z| = {0} >= 1")]
    NonTerminating(f64),

    /// Input outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameter validation failed at construction.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Two-resolution quadrature estimate too large for the requested tolerance.
    #[error("grid too coarse: convergence estimate {estimate:e} exceeds 10 x tolerance scale {allowed:e}")]
    GridTooCoarse { estimate: f64, allowed: f64 },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("tolerance not reached: achieved {achieved:e}, requested {requested:e}")]
    TolNotReached { achieved: f64, requested: f64 },

    /// Lattice size exceeds the configured point budget.
    #[error("budget exceeded: {points} lattice points > budget {budget}")]
    BudgetExceeded { points: usize, budget: usize },
}
