//! Exact computation of the ordinary generating function of the k-th powers
//! of a Horadam sequence, `H_k(x) = sum_{n>=0} w_n^k x^n`, where
//! `w_{n+2} = p*w_{n+1} + q*w_n` with seeds `w_0 = a`, `w_1 = b`.
//!
//! The engine assembles the k x k coefficient matrix of the linear system
//! relating `H_k` to the mixed series `A_{k,d}(x) = sum w_n^{k-d} w_{n+1}^d x^{n+1}`,
//! solves it by Cramer's rule, and evaluates both determinants fraction-free.
//! Everything is exact: big integers, big rationals, and sparse integer
//! polynomials in the fixed variables `(x, p, q, a, b, t)`.
//!
//! Modules:
//! - [`exactnum`]: arbitrary-precision integers and canonical rationals
//! - [`polyring`]: sparse multivariate polynomials and rational functions
//! - [`horadam`]: the brute-force recurrence oracle (ground truth)
//! - [`gfengine`]: matrix construction, Bareiss determinants, series, evaluation
//! - [`verify`]: fixtures for the classical printed tables and the audit passes

pub mod error;
pub mod exactnum;
pub mod gfengine;
pub mod horadam;
pub mod polyring;
pub mod verify;

pub use error::Error;
pub use exactnum::{Integer, Rational};
pub use gfengine::{GfResult, PolyMatrix};
pub use horadam::{HoradamParams, Scalar, SequencePrefix};
pub use polyring::{Monomial, Polynomial, RatPoly, RationalFunction, Var};
pub use verify::{Status, VerifyReport};
