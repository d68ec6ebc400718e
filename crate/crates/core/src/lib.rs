//! Two families of multivariable biorthogonal polynomials and the machinery
//! to machine-verify their closed-form identities:
//!
//! * a continuous family of Laurent polynomials on the p-torus, built on an
//!   Askey-Roy-type product weight glued to a one-variable Askey-Wilson
//!   weight ([`qwilson`]), verified by spectrally accurate torus quadrature
//!   against closed forms;
//! * a discrete bivariate q-Racah-type family on the triangle
//!   0 <= x + y <= N ([`qracah`]), verified end-to-end in exact rational
//!   arithmetic — biorthogonality residuals are the rational number zero,
//!   not a small float.
//!
//! Supporting layers: q-shifted factorials and basic hypergeometric series
//! ([`qseries`]), the q -> 1 classical reference objects (Wilson and
//! Tratnik-type families, [`classical`]), and deterministic quadrature
//! backends ([`quadrature`]).

pub mod classical;
pub mod error;
pub mod index;
pub mod qracah;
pub mod qseries;
pub mod quadrature;
pub mod qwilson;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use index::MultiIndex;
pub use scalar::{Field, QBase, Scalar};
