//! Rational functions `num/den` over the integer polynomial ring.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exactnum::{int_lcm, Integer, Rational};

use super::poly::{joint_content, Polynomial, Var};

/// Quotient of two integer polynomials. Canonical at rest: `den != 0`, the
/// integer content shared by `num` and `den` is removed, and the sign is
/// normalized so that `den`'s constant term (or, failing that, its leading
/// coefficient) is positive.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> RationalFunction {
        assert!(!den.is_zero(), "rational function denominator must be nonzero");
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        rf
    }

    pub fn from_poly(num: Polynomial) -> RationalFunction {
        RationalFunction::new(num, Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        let g = joint_content(&[&self.num, &self.den]);
        if !g.is_one() {
            self.num = self.num.exact_scale_div(&g).expect("content divides");
            self.den = self.den.exact_scale_div(&g).expect("content divides");
        }
        let pivot = {
            let c = self.den.constant_term();
            if c.is_zero() {
                self.den.leading_term().expect("den nonzero").1.clone()
            } else {
                c
            }
        };
        if pivot.is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    /// Cancel common factors. When both sides are univariate in `x` this
    /// divides out the full polynomial GCD; in the presence of other
    /// variables only the joint integer content is removed (the symbolic
    /// comparisons elsewhere use cross-multiplication, which needs no GCD).
    pub fn reduce(&self) -> RationalFunction {
        let univariate = self
            .num
            .vars_used()
            .iter()
            .chain(self.den.vars_used().iter())
            .all(|&v| v == Var::X);
        if !univariate || self.num.is_zero() {
            return self.clone();
        }
        let g = univariate_gcd(&self.num, &self.den);
        if g.degree_in(Var::X).unwrap_or(0) == 0 {
            return self.clone();
        }
        let num = self.num.exact_div(&g).expect("gcd divides numerator");
        let den = self.den.exact_div(&g).expect("gcd divides denominator");
        RationalFunction::new(num, den)
    }

    /// Exact value at `x = x0`; the function must involve no variable other
    /// than `x`, and `x0` must not be a pole.
    pub fn eval_at(&self, x0: &Rational) -> Result<Rational, Error> {
        let symbols: Vec<String> = self
            .num
            .vars_used()
            .into_iter()
            .chain(self.den.vars_used())
            .filter(|&v| v != Var::X)
            .map(|v| v.symbol().to_string())
            .collect();
        if !symbols.is_empty() {
            return Err(Error::SymbolicResidue(symbols.join(", ")));
        }
        let bindings = std::iter::once((Var::X, x0.clone())).collect();
        let den_value = self.den.evaluate(&bindings)?;
        if den_value.is_zero() {
            return Err(Error::Pole(x0.to_string()));
        }
        Ok(self.num.evaluate(&bindings)? / den_value)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                format!("{p}")
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// GCD of two univariate-in-`x` polynomials as a primitive integer
/// polynomial with positive leading coefficient (1 when coprime).
fn univariate_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let mut u = rational_coeffs(f);
    let mut v = rational_coeffs(g);
    while !v.is_empty() {
        let r = poly_rem(&u, &v);
        u = v;
        v = r;
    }
    if u.is_empty() {
        return Polynomial::zero();
    }
    // Clear denominators, then strip content.
    let lcm_den = u
        .iter()
        .fold(Integer::one(), |acc, c| int_lcm(&acc, c.denom()));
    let ints = Polynomial::from_terms(u.iter().enumerate().map(|(i, c)| {
        let val = c.numer() * &lcm_den / c.denom();
        let mut exps = [0u32; super::poly::NVARS];
        exps[Var::X as usize] = i as u32;
        (val, exps)
    }));
    let content = ints.content();
    let mut prim = ints.exact_scale_div(&content).expect("content divides");
    if prim.leading_term().expect("nonzero").1.is_negative() {
        prim = -prim;
    }
    prim
}

/// Dense `x`-coefficients as rationals, trailing zeros trimmed.
fn rational_coeffs(f: &Polynomial) -> Vec<Rational> {
    let mut out: Vec<Rational> = f
        .x_coefficients()
        .iter()
        .map(|c| Rational::from(c.as_constant().expect("univariate in x")))
        .collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Remainder of dense univariate division over the rationals.
fn poly_rem(u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let mut r = u.to_vec();
    let dv = v.len() - 1;
    let lead = &v[dv];
    while r.len() > dv {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        for i in 0..=dv {
            let t = factor.clone() * v[i].clone();
            r[dr - dv + i] -= t;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}
