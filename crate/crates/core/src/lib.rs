//! Exact tooling for lower bounds on braid dilatations.
//!
//! The flow mirrors the hand computation: list the sphere strata of an
//! n-punctured disc, lift each one to the orientation double cover, list every
//! reciprocal Perron polynomial of the right degree below a bound, and discard
//! the polynomials that the Lefschetz formula rules out.

pub mod enumerate;
pub mod error;
pub mod lefschetz;
pub mod pipeline;
pub mod polynomial;
pub mod strata;

pub use error::{Error, Result};
pub use polynomial::IntPolynomial;
