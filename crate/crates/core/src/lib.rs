//! Exact and numeric toolkit for the generalized golden mean `x^n + x = m/2`,
//! the metallic means family `x^2 - px - q = 0` and its trinomial
//! unification `x^n ± px = m/2`.
//!
//! Closed-form results live in exact quadratic-surd arithmetic
//! ([`number::QuadraticSurd`]); higher-degree trinomials are solved with a
//! certified bracketing solver ([`trinomial`]). The triangle catalog and the
//! harmonic multiplication table reproduce the integer constructions that
//! accompany those equations.

pub mod cli;
mod error;
pub mod harmonic;
pub mod number;
pub mod quadratic;
pub mod triangles;
pub mod trinomial;

pub use error::{Error, Result};
pub use number::{ContinuedFraction, QuadraticSurd, Rational};
