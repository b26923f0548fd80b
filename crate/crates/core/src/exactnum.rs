//! Arbitrary-precision integer and rational arithmetic.
//!
//! [`Integer`] and [`Rational`] are the `num` bignum types; `Rational` is
//! kept canonical by construction (reduced, positive denominator, zero is
//! `0/1`), so equality is structural. Serialized forms are plain decimal
//! strings: `"-123"`, `"9900/979801"`.

use num_traits::{Signed, Zero};

use crate::error::Error;

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Nonnegative greatest common divisor; `int_gcd(0, 0) = 0`.
pub fn int_gcd(a: &Integer, b: &Integer) -> Integer {
    num_integer::Integer::gcd(a, b)
}

/// Least common multiple, nonnegative; `int_lcm(0, 0) = 0`.
pub fn int_lcm(a: &Integer, b: &Integer) -> Integer {
    num_integer::Integer::lcm(a, b)
}

/// Binomial coefficient `C(n, k)` by the multiplicative formula with exact
/// division. Out-of-range `k` (negative or above `n`) gives 0; negative `n`
/// is rejected.
pub fn binomial(n: &Integer, k: &Integer) -> Result<Integer, Error> {
    if n.is_negative() {
        return Err(Error::NegativeBinomial(n.to_string()));
    }
    if k.is_negative() || k > n {
        return Ok(Integer::zero());
    }
    // C(n, k) = C(n, n-k); use the smaller side.
    let k = std::cmp::min(k.clone(), n - k);
    let mut acc = Integer::from(1);
    let mut i = Integer::from(1);
    while i <= k {
        acc = acc * (n - &k + &i) / &i;
        i += 1;
    }
    Ok(acc)
}

/// Binomial coefficient for machine-sized arguments.
pub fn binomial_u32(n: u32, k: u32) -> Integer {
    binomial(&Integer::from(n), &Integer::from(k)).expect("n >= 0")
}

/// Parse a rational from `n` or `n/d` with optional signs on either part.
/// The result is canonical: reduced, positive denominator.
pub fn rat_parse(text: &str) -> Result<Rational, Error> {
    // Tolerate the typographic minus sign U+2212 in pasted table values.
    let cleaned = text.trim().replace('\u{2212}', "-");
    let (num_text, den_text) = match cleaned.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (cleaned.as_str(), None),
    };
    let num: Integer = num_text
        .parse()
        .map_err(|_| Error::InvalidRational(text.to_string()))?;
    let den: Integer = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| Error::InvalidRational(text.to_string()))?,
        None => Integer::from(1),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(num, den))
}
