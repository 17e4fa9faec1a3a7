//! Evaluation of the quartic integral
//!
//! ```text
//! N(a; m) = ∫₀^∞ dx / (x⁴ + 2a·x² + 1)^(m+1),   a > -1, m ∈ ℕ
//! ```
//!
//! by several independent routes (closed form, Schwinger parametrization,
//! Schur-function ratios, hypergeometric and Bessel representations,
//! derivative polynomials), together with exact and numerical checks of the
//! identities and recurrences that connect them.

pub mod error;
pub mod check;
pub mod cli;
pub mod derivative;
pub mod exact;
pub mod harness;
pub mod hypergeom;
pub mod pm;
pub mod quadrature;
pub mod schur;
pub mod schwinger;

pub use error::{Error, Result};
