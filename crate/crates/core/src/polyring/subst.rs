//! Variable substitution.

use std::collections::BTreeMap;

use crate::exactnum::Rational;

use super::poly::{Polynomial, Var};
use super::ratpoly::RatPoly;

/// A value a variable can be bound to.
#[derive(Clone, Debug)]
pub enum Binding {
    Rational(Rational),
    Poly(Polynomial),
}

impl Binding {
    fn to_ratpoly(&self) -> RatPoly {
        match self {
            Binding::Rational(r) => RatPoly::from_rational(r),
            Binding::Poly(p) => RatPoly::from_poly(p.clone()),
        }
    }
}

impl Polynomial {
    /// Substitute the bound variables; unbound ones stay symbolic. Rational
    /// coefficients picked up along the way are cleared into the result's
    /// common denominator.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Binding>) -> RatPoly {
        if bindings.is_empty() {
            return RatPoly::from_poly(self.clone());
        }
        let values: Vec<Option<RatPoly>> = Var::ALL
            .iter()
            .map(|v| bindings.get(v).map(Binding::to_ratpoly))
            .collect();
        let mut total = RatPoly::zero();
        for (mono, coeff) in self.terms() {
            let mut residual = [0u32; super::poly::NVARS];
            let mut term = RatPoly::from_poly(Polynomial::constant(coeff.clone()));
            for (i, v) in Var::ALL.iter().enumerate() {
                let e = mono.exponent(*v);
                if e == 0 {
                    continue;
                }
                match &values[i] {
                    Some(value) => term = &term * &value.pow(e),
                    None => residual[i] = e,
                }
            }
            let residual_mono = Polynomial::monomial(super::poly::Monomial(residual), 1.into());
            total = &total + &(&term * &RatPoly::from_poly(residual_mono));
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_parse, Integer};
    use crate::polyring::parse;

    fn bind_rat(pairs: &[(Var, &str)]) -> BTreeMap<Var, Binding> {
        pairs
            .iter()
            .map(|(v, s)| (*v, Binding::Rational(rat_parse(s).unwrap())))
            .collect()
    }

    #[test]
    fn substitute_specializes() {
        let f = parse("1 - p*x - q*x^2").unwrap();
        let got = f.substitute(&bind_rat(&[(Var::P, "1"), (Var::Q, "1")]));
        assert_eq!(got, RatPoly::from_poly(parse("1 - x - x^2").unwrap()));
    }

    #[test]
    fn substitute_empty_is_identity() {
        let f = parse("b - a*p").unwrap();
        assert_eq!(f.substitute(&BTreeMap::new()), RatPoly::from_poly(f));
    }

    #[test]
    fn substitute_forces_constant() {
        let f = parse("b - a*p").unwrap();
        let got = f.substitute(&bind_rat(&[(Var::A, "0"), (Var::B, "1"), (Var::P, "1")]));
        assert_eq!(got, RatPoly::one());
    }

    #[test]
    fn substitute_clears_denominators() {
        let f = parse("1 - p*x").unwrap();
        let got = f.substitute(&bind_rat(&[(Var::P, "1/2")]));
        assert_eq!(got, RatPoly::new(parse("2 - x").unwrap(), Integer::from(2)));
    }

    #[test]
    fn substitute_polynomial_binding() {
        let f = parse("1 - p*x").unwrap();
        let mut b = BTreeMap::new();
        b.insert(Var::P, Binding::Poly(parse("2*t").unwrap()));
        assert_eq!(f.substitute(&b), RatPoly::from_poly(parse("1 - 2*t*x").unwrap()));
    }
}
