//! Power-series expansion of a rational function at `x = 0`.

use crate::error::Error;
use crate::polyring::{Polynomial, RatPoly, RationalFunction};

/// First `n` Taylor coefficients of `rf` around `x = 0`, by the linear
/// recurrence `c_m = (u_m - sum_{i>=1} d_i c_{m-i}) / d_0` on the
/// numerator and denominator `x`-coefficient lists. The denominator's
/// constant term must be a nonzero plain integer; the coefficients may be
/// polynomials in the remaining symbols (e.g. in `t` for the Chebyshev
/// parameters).
pub fn series_coeffs(rf: &RationalFunction, n: usize) -> Result<Vec<RatPoly>, Error> {
    let num = rf.num().x_coefficients();
    let den = rf.den().x_coefficients();
    let d0_poly = den.first().cloned().unwrap_or_else(Polynomial::zero);
    let d0 = d0_poly
        .as_constant()
        .ok_or_else(|| Error::SymbolicConstantTerm(d0_poly.to_string()))?;
    if num_traits::Zero::is_zero(&d0) {
        return Err(Error::ZeroConstantTerm);
    }
    let den_rp: Vec<RatPoly> = den.iter().map(|p| RatPoly::from_poly(p.clone())).collect();
    let mut coeffs: Vec<RatPoly> = Vec::with_capacity(n);
    for m in 0..n {
        let mut acc = match num.get(m) {
            Some(p) => RatPoly::from_poly(p.clone()),
            None => RatPoly::zero(),
        };
        for i in 1..den_rp.len().min(m + 1) {
            acc = &acc - &(&den_rp[i] * &coeffs[m - i]);
        }
        coeffs.push(acc.div_integer(&d0));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(parse(n).unwrap(), parse(d).unwrap())
    }

    fn int_coeffs(values: &[i64]) -> Vec<RatPoly> {
        values
            .iter()
            .map(|&v| RatPoly::from_poly(Polynomial::from(v)))
            .collect()
    }

    #[test]
    fn fibonacci_series() {
        let s = series_coeffs(&rf("x", "1 - x - x^2"), 7).unwrap();
        assert_eq!(s, int_coeffs(&[0, 1, 1, 2, 3, 5, 8]));
    }

    #[test]
    fn lucas_series() {
        let s = series_coeffs(&rf("2 - x", "1 - x - x^2"), 6).unwrap();
        assert_eq!(s, int_coeffs(&[2, 1, 3, 4, 7, 11]));
    }

    #[test]
    fn chebyshev_series_in_t() {
        let s = series_coeffs(&rf("1", "1 - 2*t*x + x^2"), 3).unwrap();
        assert_eq!(s[0], RatPoly::one());
        assert_eq!(s[1], RatPoly::from_poly(parse("2*t").unwrap()));
        assert_eq!(s[2], RatPoly::from_poly(parse("4*t^2 - 1").unwrap()));
    }

    #[test]
    fn fractional_constant_term() {
        // 1/(2 - x) = 1/2 + x/4 + x^2/8 + ...
        let s = series_coeffs(&rf("1", "2 - x"), 3).unwrap();
        let as_strings: Vec<String> = s.iter().map(|c| c.to_string()).collect();
        assert_eq!(as_strings, vec!["1/2", "1/4", "1/8"]);
    }

    #[test]
    fn zero_length_and_errors() {
        assert!(series_coeffs(&rf("x", "1 - x"), 0).unwrap().is_empty());
        assert!(matches!(
            series_coeffs(&rf("1", "x"), 4),
            Err(Error::ZeroConstantTerm)
        ));
        assert!(matches!(
            series_coeffs(&rf("1", "t - x"), 4),
            Err(Error::SymbolicConstantTerm(_))
        ));
    }
}
