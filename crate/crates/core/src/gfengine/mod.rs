//! The determinant engine: build `delta_k` and `delta_hat_k`, evaluate
//! both determinants fraction-free, and assemble
//! `H_k(x) = det(delta_hat_k) / det(delta_k)`.

mod det;
mod matrix;
mod series;

pub use det::{determinant, determinant_cofactor};
pub use matrix::{build_delta, build_delta_hat, build_rhs, PolyMatrix};
pub use series::series_coeffs;

use crate::error::Error;
use crate::exactnum::Rational;
use crate::horadam::HoradamParams;
use crate::polyring::{Polynomial, RationalFunction};

/// The generating function of the k-th powers, as produced by Cramer's
/// rule: raw determinants plus the reduced quotient.
#[derive(Clone, Debug)]
pub struct GfResult {
    pub k: u32,
    pub params: HoradamParams,
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    pub reduced: RationalFunction,
}

impl GfResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "params": self.params.to_json(),
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
            "reduced_num": self.reduced.num().to_json(),
            "reduced_den": self.reduced.den().to_json(),
        })
    }
}

/// Compute `H_k(x)` for the given parameters.
pub fn horadam_gf(k: u32, params: &HoradamParams) -> Result<GfResult, Error> {
    let numerator = determinant(&build_delta_hat(k, params)?);
    let denominator = determinant(&build_delta(k, params)?);
    let reduced = RationalFunction::new(numerator.clone(), denominator.clone()).reduce();
    Ok(GfResult {
        k,
        params: params.clone(),
        numerator,
        denominator,
        reduced,
    })
}

/// Exact value of `rf` at `x = x0`; errs on poles and leftover symbols.
pub fn eval_at(rf: &RationalFunction, x0: &Rational) -> Result<Rational, Error> {
    rf.eval_at(x0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_parse;
    use crate::horadam::{power_series_oracle, preset};
    use crate::polyring::parse;

    #[test]
    fn gf_fibonacci_k1() {
        let gf = horadam_gf(1, &preset("fibonacci").unwrap()).unwrap();
        assert_eq!(gf.reduced.num(), &parse("x").unwrap());
        assert_eq!(gf.reduced.den(), &parse("1 - x - x^2").unwrap());
    }

    #[test]
    fn gf_lucas_k1() {
        let gf = horadam_gf(1, &preset("lucas").unwrap()).unwrap();
        assert_eq!(gf.reduced.num(), &parse("2 - x").unwrap());
        assert_eq!(gf.reduced.den(), &parse("1 - x - x^2").unwrap());
    }

    #[test]
    fn gf_pell_k3_matches_expanded_table_form() {
        let gf = horadam_gf(3, &preset("pell").unwrap()).unwrap();
        let num = parse("x(1 - 4*x - x^2)").unwrap();
        let den = parse("(1 + 2*x - x^2)(1 - 14*x - x^2)").unwrap();
        // Cross-multiplied equality of the reduced form with the printed one.
        assert_eq!(gf.reduced.num() * &den, gf.reduced.den() * &num);
        // For this row the reduced determinants are the printed form exactly.
        assert_eq!(gf.reduced.num(), &num);
        assert_eq!(gf.reduced.den(), &den);
    }

    #[test]
    fn gf_eval_table_points() {
        let x0 = rat_parse("1/100").unwrap();
        let fib = preset("fibonacci").unwrap();
        let h1 = horadam_gf(1, &fib).unwrap();
        assert_eq!(eval_at(&h1.reduced, &x0).unwrap().to_string(), "100/9899");
        let h2 = horadam_gf(2, &fib).unwrap();
        assert_eq!(eval_at(&h2.reduced, &x0).unwrap().to_string(), "9900/979801");
        let lucas1 = horadam_gf(1, &preset("lucas").unwrap()).unwrap();
        assert_eq!(eval_at(&lucas1.reduced, &x0).unwrap().to_string(), "19900/9899");
    }

    #[test]
    fn gf_series_equals_oracle_spot_checks() {
        for (name, k) in [("fibonacci", 4), ("lucas", 3), ("pell", 5)] {
            let params = preset(name).unwrap();
            let gf = horadam_gf(k, &params).unwrap();
            let series = series_coeffs(&gf.reduced, 24).unwrap();
            assert_eq!(series, power_series_oracle(&params, k, 24), "{name} k={k}");
        }
    }

    #[test]
    fn gf_degenerate_p_or_q_zero() {
        for params in [
            crate::horadam::HoradamParams::from_i64(2, 3, 0, 5),
            crate::horadam::HoradamParams::from_i64(2, 3, 5, 0),
        ] {
            for k in 1..=3u32 {
                let gf = horadam_gf(k, &params).unwrap();
                let series = series_coeffs(&gf.reduced, 16).unwrap();
                assert_eq!(series, power_series_oracle(&params, k, 16));
            }
        }
    }

    #[test]
    fn gf_rational_params_match_oracle() {
        let params = crate::horadam::HoradamParams::from_rationals(
            rat_parse("1/2").unwrap(),
            rat_parse("-2/3").unwrap(),
            rat_parse("3/2").unwrap(),
            rat_parse("1/5").unwrap(),
        );
        for k in 1..=3u32 {
            let gf = horadam_gf(k, &params).unwrap();
            let series = series_coeffs(&gf.reduced, 12).unwrap();
            assert_eq!(series, power_series_oracle(&params, k, 12), "k={k}");
        }
    }

    #[test]
    fn gf_series_is_homogeneous_in_seeds() {
        for k in 1..=4u32 {
            let base = horadam_gf(k, &crate::horadam::HoradamParams::from_i64(1, -2, 1, 3)).unwrap();
            let scaled = horadam_gf(k, &crate::horadam::HoradamParams::from_i64(3, -6, 1, 3)).unwrap();
            let factor = crate::horadam::Scalar::from_i64(3).pow(k);
            let lhs = series_coeffs(&scaled.reduced, 16).unwrap();
            let rhs: Vec<_> = series_coeffs(&base.reduced, 16)
                .unwrap()
                .iter()
                .map(|c| c * &factor)
                .collect();
            assert_eq!(lhs, rhs, "k={k}");
        }
    }

    #[test]
    fn delta_determinant_degree_is_exactly_k_plus_1_for_presets() {
        use crate::polyring::Var;
        for name in ["fibonacci", "lucas", "pell"] {
            let params = preset(name).unwrap();
            for k in 1..=6u32 {
                let den = determinant(&build_delta(k, &params).unwrap());
                assert_eq!(den.degree_in(Var::X), Some(k + 1), "{name} k={k}");
            }
        }
    }

    #[test]
    fn gf_json_has_documented_fields() {
        let gf = horadam_gf(2, &preset("fibonacci").unwrap()).unwrap();
        let v = gf.to_json();
        assert_eq!(v["k"], 2);
        assert_eq!(v["params"]["a"], "0");
        let num = Polynomial::from_json(&v["reduced_num"]).unwrap();
        assert_eq!(&num, gf.reduced.num());
    }
}
