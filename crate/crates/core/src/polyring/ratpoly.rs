//! Polynomials with a cleared rational denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::exactnum::{int_gcd, Integer, Rational};

use super::poly::Polynomial;

/// An exact value `poly / den` with integer `den > 0`. Canonical at rest:
/// `gcd(content(poly), den) = 1`, and zero is `0/1`, so equality is
/// structural. This is how rational coefficients travel through the
/// integer polynomial ring: substitutions, oracle sequence terms, and
/// series coefficients all live here.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    poly: Polynomial,
    den: Integer,
}

impl RatPoly {
    pub fn new(poly: Polynomial, den: Integer) -> RatPoly {
        assert!(!den.is_zero(), "RatPoly denominator must be nonzero");
        let mut poly = poly;
        let mut den = den;
        if den.is_negative() {
            poly = -poly;
            den = -den;
        }
        let g = int_gcd(&poly.content(), &den);
        if !g.is_zero() && !g.is_one() {
            poly = poly.exact_scale_div(&g).expect("content divides");
            den /= g;
        }
        if poly.is_zero() {
            den = Integer::one();
        }
        RatPoly { poly, den }
    }

    pub fn zero() -> RatPoly {
        RatPoly::from_poly(Polynomial::zero())
    }

    pub fn one() -> RatPoly {
        RatPoly::from_poly(Polynomial::one())
    }

    pub fn from_poly(poly: Polynomial) -> RatPoly {
        RatPoly {
            poly,
            den: Integer::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> RatPoly {
        RatPoly::new(Polynomial::constant(r.numer().clone()), r.denom().clone())
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn den(&self) -> &Integer {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `Some(r)` when the value is a plain rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.poly
            .as_constant()
            .map(|c| Rational::new(c, self.den.clone()))
    }

    pub fn pow(&self, e: u32) -> RatPoly {
        let mut acc = RatPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn div_integer(&self, d: &Integer) -> RatPoly {
        RatPoly::new(self.poly.clone(), &self.den * d)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(
            self.poly.scale(&rhs.den) + rhs.poly.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(
            self.poly.scale(&rhs.den) - rhs.poly.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(&self.poly * &rhs.poly, &self.den * &rhs.den)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            poly: -&self.poly,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.poly)
        } else if self.poly.num_terms() > 1 {
            write!(f, "({})/{}", self.poly, self.den)
        } else {
            write!(f, "{}/{}", self.poly, self.den)
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
