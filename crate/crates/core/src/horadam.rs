//! Brute-force recurrence oracle.
//!
//! Generates `w_n` straight from `w_{n+2} = p*w_{n+1} + q*w_n`, together
//! with the power sequences `w_n^k` and the mixed sequences
//! `w_n^{k-d} w_{n+1}^d` that drive the auxiliary series `A_{k,d}(x)`.
//! Nothing here touches the determinant engine; this module is the ground
//! truth the engine is checked against.

use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::exactnum::Rational;
use crate::polyring::{Polynomial, RatPoly, Var};

/// One parameter of the recurrence: an exact rational, or a polynomial in
/// the designated symbols (`2t` for the Chebyshev preset, or a bare
/// variable in fully symbolic mode).
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Symbolic(Polynomial),
}

impl Scalar {
    pub fn from_i64(v: i64) -> Scalar {
        Scalar::Rational(Rational::from_integer(v.into()))
    }

    pub fn var(v: Var) -> Scalar {
        Scalar::Symbolic(Polynomial::var(v))
    }

    pub fn to_ratpoly(&self) -> RatPoly {
        match self {
            Scalar::Rational(r) => RatPoly::from_rational(r),
            Scalar::Symbolic(p) => RatPoly::from_poly(p.clone()),
        }
    }

    pub fn pow(&self, e: u32) -> RatPoly {
        self.to_ratpoly().pow(e)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Symbolic(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The recurrence data `(a, b, p, q)`: seeds `w_0 = a`, `w_1 = b` and the
/// coefficients of `w_{n+2} = p*w_{n+1} + q*w_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoradamParams {
    pub a: Scalar,
    pub b: Scalar,
    pub p: Scalar,
    pub q: Scalar,
}

impl HoradamParams {
    pub fn from_i64(a: i64, b: i64, p: i64, q: i64) -> HoradamParams {
        HoradamParams {
            a: Scalar::from_i64(a),
            b: Scalar::from_i64(b),
            p: Scalar::from_i64(p),
            q: Scalar::from_i64(q),
        }
    }

    pub fn from_rationals(a: Rational, b: Rational, p: Rational, q: Rational) -> HoradamParams {
        HoradamParams {
            a: Scalar::Rational(a),
            b: Scalar::Rational(b),
            p: Scalar::Rational(p),
            q: Scalar::Rational(q),
        }
    }

    /// All four parameters left as the symbols `a, b, p, q`.
    pub fn symbolic() -> HoradamParams {
        HoradamParams {
            a: Scalar::var(Var::A),
            b: Scalar::var(Var::B),
            p: Scalar::var(Var::P),
            q: Scalar::var(Var::Q),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "p": self.p.to_string(),
            "q": self.q.to_string(),
        })
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, b={}, p={}, q={}", self.a, self.b, self.p, self.q)
    }
}

/// Named parameter quadruples for the classical sequences.
pub fn preset(name: &str) -> Result<HoradamParams, Error> {
    match name {
        "fibonacci" => Ok(HoradamParams::from_i64(0, 1, 1, 1)),
        "lucas" => Ok(HoradamParams::from_i64(2, 1, 1, 1)),
        "pell" => Ok(HoradamParams::from_i64(0, 1, 2, 1)),
        // Chebyshev polynomials of the second kind: U_{n+1} = 2t*U_n - U_{n-1}.
        "chebyshev-u" => {
            let two_t = Polynomial::from(2) * Polynomial::var(Var::T);
            Ok(HoradamParams {
                a: Scalar::from_i64(1),
                b: Scalar::Symbolic(two_t.clone()),
                p: Scalar::Symbolic(two_t),
                q: Scalar::from_i64(-1),
            })
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

pub const PRESET_NAMES: [&str; 4] = ["fibonacci", "lucas", "pell", "chebyshev-u"];

/// A generated prefix `w_0..w_{N-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequencePrefix {
    pub terms: Vec<RatPoly>,
}

impl SequencePrefix {
    /// Re-check `w_{n+2} = p*w_{n+1} + q*w_n` on every stored window.
    pub fn satisfies_recurrence(&self, params: &HoradamParams) -> bool {
        let p = params.p.to_ratpoly();
        let q = params.q.to_ratpoly();
        self.terms.windows(3).all(|w| {
            let predicted = &(&p * &w[1]) + &(&q * &w[0]);
            predicted == w[2]
        })
    }
}

/// First `n` terms of the sequence.
pub fn horadam_seq(params: &HoradamParams, n: usize) -> SequencePrefix {
    let mut terms = Vec::with_capacity(n);
    if n >= 1 {
        terms.push(params.a.to_ratpoly());
    }
    if n >= 2 {
        terms.push(params.b.to_ratpoly());
    }
    let p = params.p.to_ratpoly();
    let q = params.q.to_ratpoly();
    for i in 2..n {
        let next = &(&p * &terms[i - 1]) + &(&q * &terms[i - 2]);
        terms.push(next);
    }
    SequencePrefix { terms }
}

/// `[w_0^k, w_1^k, ..., w_{n-1}^k]`: the coefficients of `H_k(x)`.
pub fn power_series_oracle(params: &HoradamParams, k: u32, n: usize) -> Vec<RatPoly> {
    assert!(k >= 1, "power exponent must be at least 1");
    horadam_seq(params, n)
        .terms
        .iter()
        .map(|w| w.pow(k))
        .collect()
}

/// Coefficients of the mixed series `A_{k,d}(x) = sum_{m>=0} w_m^{k-d}
/// w_{m+1}^d x^{m+1}` for powers `x^0 .. x^{n-1}`; the `x^0` entry is 0.
/// `d = k` is allowed (useful for testing): the terms become `w_{m+1}^k`.
pub fn mixed_series_oracle(params: &HoradamParams, k: u32, d: u32, n: usize) -> Vec<RatPoly> {
    assert!((1..=k).contains(&d), "mixed index d must satisfy 1 <= d <= k");
    let seq = horadam_seq(params, n).terms;
    let mut out = Vec::with_capacity(n);
    if n >= 1 {
        out.push(RatPoly::zero());
    }
    for m in 0..n.saturating_sub(1) {
        out.push(&seq[m].pow(k - d) * &seq[m + 1].pow(d));
    }
    out
}
