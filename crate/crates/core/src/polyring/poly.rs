//! Sparse multivariate polynomials over [`Integer`] in the fixed variable
//! universe `(x, p, q, a, b, t)`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::exactnum::{int_gcd, Integer, Rational};

/// Number of variables in the fixed universe.
pub const NVARS: usize = 6;

/// The fixed variables, in monomial-order position: `x` is most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X = 0,
    P = 1,
    Q = 2,
    A = 3,
    B = 4,
    T = 5,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::P, Var::Q, Var::A, Var::B, Var::T];

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::P => 'p',
            Var::Q => 'q',
            Var::A => 'a',
            Var::B => 'b',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'p' => Some(Var::P),
            'q' => Some(Var::Q),
            'a' => Some(Var::A),
            'b' => Some(Var::B),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

/// Exponent vector over `(x, p, q, a, b, t)`. The derived `Ord` is
/// lexicographic with `x` most significant, which is the canonical term
/// order everywhere (storage, display, serialization).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var) -> Monomial {
        let mut e = [0; NVARS];
        e[v as usize] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v as usize]
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for (i, out) in e.iter_mut().enumerate() {
            *out = self.0[i] + other.0[i];
        }
        Monomial(e)
    }

    /// Componentwise difference, `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for (i, out) in e.iter_mut().enumerate() {
            *out = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }
}

/// Sparse polynomial with nonzero [`Integer`] coefficients, stored in
/// canonical monomial order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Integer>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::monomial(Monomial::var(v), Integer::one())
    }

    pub fn monomial(m: Monomial, c: Integer) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Build from `(coefficient, exponents)` pairs; repeated monomials are
    /// summed and zero coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (Integer, [u32; NVARS])>>(iter: I) -> Polynomial {
        let mut poly = Polynomial::zero();
        for (c, e) in iter {
            poly.add_term(Monomial(e), c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<Integer> {
        match self.terms.len() {
            0 => Some(Integer::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Integer)> {
        self.terms.iter()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> Integer {
        self.terms.get(m).cloned().unwrap_or_else(Integer::zero)
    }

    /// Coefficient of the constant (all-exponents-zero) monomial.
    pub fn constant_term(&self) -> Integer {
        self.coefficient(&Monomial::one())
    }

    /// Largest monomial and its coefficient, `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &Integer)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Integer) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Highest exponent of `v`; `None` is the degree of the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// Variables with a nonzero exponent somewhere in the polynomial.
    pub fn vars_used(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    /// GCD of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::zero();
        for c in self.terms.values() {
            g = int_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &Integer) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Divide every coefficient by `c`, which must divide them all exactly.
    pub fn exact_scale_div(&self, c: &Integer) -> Result<Polynomial, Error> {
        if c.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let (quo, rem) = num_integer::Integer::div_rem(v, c);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {v} not divisible by {c}"
                )));
            }
            terms.insert(*m, quo);
        }
        Ok(Polynomial { terms })
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Integer) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / g` in the polynomial ring. Errs when `g` is
    /// zero or does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial, Error> {
        let Some((g_mono, g_coeff)) = g.leading_term() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let (g_mono, g_coeff) = (*g_mono, g_coeff.clone());
        let mut rem = self.clone();
        let mut quo = Polynomial::zero();
        while let Some((r_mono, r_coeff)) = rem.leading_term() {
            let Some(m) = r_mono.checked_div(&g_mono) else {
                return Err(Error::InexactDivision(format!("{g} does not divide {self}")));
            };
            let (c, r) = num_integer::Integer::div_rem(r_coeff, &g_coeff);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{g} does not divide {self}")));
            }
            rem -= g.mul_monomial(&m, &c);
            quo.add_term(m, c);
        }
        Ok(quo)
    }

    /// Coefficients of `self` viewed as a polynomial in `x`, ascending from
    /// `x^0`; each entry is a polynomial in the remaining variables. The
    /// zero polynomial gives an empty list.
    pub fn x_coefficients(&self) -> Vec<Polynomial> {
        let Some(deg) = self.degree_in(Var::X) else {
            return Vec::new();
        };
        let mut out = vec![Polynomial::zero(); deg as usize + 1];
        for (m, c) in &self.terms {
            let mut e = m.0;
            let d = e[Var::X as usize] as usize;
            e[Var::X as usize] = 0;
            out[d].add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Evaluate with every used variable bound to a rational.
    pub fn evaluate(&self, bindings: &BTreeMap<Var, Rational>) -> Result<Rational, Error> {
        let unbound: Vec<String> = self
            .vars_used()
            .into_iter()
            .filter(|v| !bindings.contains_key(v))
            .map(|v| v.symbol().to_string())
            .collect();
        if !unbound.is_empty() {
            return Err(Error::SymbolicResidue(unbound.join(", ")));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = Rational::from(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    let base = &bindings[&v];
                    term *= num_traits::pow::pow(base.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs.clone();
        out
    }
}

impl SubAssign<Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        // Iterate the smaller operand on the outside.
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Polynomial::zero();
        for (m, c) in &small.terms {
            out += large.mul_monomial(m, c);
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $op(self, rhs: Polynomial) -> Polynomial {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $op(self, rhs: &Polynomial) -> Polynomial {
                (&self).$op(rhs)
            }
        }
        impl $Op<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $op(self, rhs: Polynomial) -> Polynomial {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl From<i64> for Polynomial {
    fn from(v: i64) -> Polynomial {
        Polynomial::constant(Integer::from(v))
    }
}

/// Absolute value of the integer content shared by a slice of polynomials.
pub fn joint_content(polys: &[&Polynomial]) -> Integer {
    let mut g = Integer::zero();
    for p in polys {
        g = int_gcd(&g, &p.content());
        if g.is_one() {
            break;
        }
    }
    g.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn add_cancels_and_merges() {
        assert_eq!(p("1+x") + p("1-x"), p("2"));
        assert_eq!(p("x^2-3") + Polynomial::zero(), p("x^2-3"));
        assert_eq!(p("x*p") + p("x*p"), p("2*p*x"));
    }

    #[test]
    fn mul_small_cases() {
        assert_eq!(p("1+x") * p("1-x"), p("1-x^2"));
        assert_eq!(p("1+x") * p("1-3*x+x^2"), p("1-2*x-2*x^2+x^3"));
        assert_eq!(p("2*a-b*x") * Polynomial::one(), p("2*a-b*x"));
    }

    #[test]
    fn exact_div_cases() {
        assert_eq!(p("x^2-1").exact_div(&p("x-1")).unwrap(), p("x+1"));
        assert_eq!(p("4*x").exact_div(&Polynomial::one()).unwrap(), p("4*x"));
        assert!(p("x+1").exact_div(&p("x")).is_err());
        assert!(p("3*x").exact_div(&p("2")).is_err());
        assert!(p("x").exact_div(&Polynomial::zero()).is_err());
        assert_eq!(Polynomial::zero().exact_div(&p("x-1")).unwrap(), Polynomial::zero());
    }

    #[test]
    fn degree_in_cases() {
        assert_eq!(p("1-2*x-2*x^2+x^3").degree_in(Var::X), Some(3));
        assert_eq!(p("5").degree_in(Var::X), Some(0));
        assert_eq!(Polynomial::zero().degree_in(Var::X), None);
        assert_eq!(p("a*x^2-t").degree_in(Var::T), Some(1));
    }

    #[test]
    fn x_coefficients_splits() {
        let f = p("1 - 3*x + 2*t*x + x^2");
        let coeffs = f.x_coefficients();
        assert_eq!(coeffs, vec![p("1"), p("-3+2*t"), p("1")]);
        assert!(Polynomial::zero().x_coefficients().is_empty());
    }

    #[test]
    fn content_and_scaling() {
        assert_eq!(p("6*x-9").content(), Integer::from(3));
        assert_eq!(p("6*x-9").exact_scale_div(&Integer::from(3)).unwrap(), p("2*x-3"));
        assert!(p("6*x-9").exact_scale_div(&Integer::from(4)).is_err());
        assert_eq!(Polynomial::zero().content(), Integer::zero());
    }

    #[test]
    fn evaluate_rationals() {
        let f = p("1 - p*x - q*x^2");
        let mut b = BTreeMap::new();
        b.insert(Var::X, crate::exactnum::rat_parse("1/100").unwrap());
        b.insert(Var::P, Rational::from(Integer::from(1)));
        b.insert(Var::Q, Rational::from(Integer::from(1)));
        assert_eq!(f.evaluate(&b).unwrap(), crate::exactnum::rat_parse("9899/10000").unwrap());
        let g = p("a + x");
        assert!(matches!(g.evaluate(&b), Err(Error::SymbolicResidue(_))));
    }
}
