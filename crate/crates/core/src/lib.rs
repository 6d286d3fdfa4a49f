//! Exact computer algebra for star configurations of linear forms and the
//! defining ideals of their Rees algebras.
//!
//! The library constructs ideals of star configurations, produces the
//! closed-form defining equations of their Rees algebras in the height-two
//! case (presentation matrix, Jacobian dual, minor generators, fiber
//! equations, primary decomposition), handles powers over regular sequences
//! through Taylor relations, and verifies every closed form against an
//! independent Buchberger elimination oracle at desk scale.

pub mod error;
pub mod groebner;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
