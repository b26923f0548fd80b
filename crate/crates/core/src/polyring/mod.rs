//! Sparse multivariate polynomial ring over the fixed variables
//! `(x, p, q, a, b, t)`, with exact integer coefficients.
//!
//! - [`Polynomial`]: the ring element; canonical term order is lexicographic
//!   on exponent vectors with `x` most significant
//! - [`RatPoly`]: a polynomial over a cleared positive integer denominator
//! - [`RationalFunction`]: `num/den` pairs, with GCD reduction in the
//!   univariate-in-`x` case
//! - [`parse`] / `Display`: the canonical text format (`1 - 3*x + x^2`)

mod json;
mod poly;
mod ratfun;
mod ratpoly;
mod subst;
mod text;

pub use poly::{joint_content, Monomial, Polynomial, Var, NVARS};
pub use ratfun::RationalFunction;
pub use ratpoly::RatPoly;
pub use subst::Binding;
pub use text::parse;
