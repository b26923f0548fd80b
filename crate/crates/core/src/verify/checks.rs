//! The audit passes: series-vs-oracle, point values, printed forms,
//! closed-form identities, and the raw linear system.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::rat_parse;
use crate::gfengine::{build_delta, build_rhs, horadam_gf, series_coeffs};
use crate::horadam::{mixed_series_oracle, power_series_oracle, HoradamParams};
use crate::polyring::{Polynomial, RatPoly, RationalFunction};

use super::fixtures::{corollary_fixture, table_fixture, table_preset};
use super::report::VerifyReport;

/// Series length used when an audit needs an oracle confirmation.
pub const ORACLE_LEN: usize = 64;

/// Seed for the reproducible random parameter draws.
pub const DEFAULT_SEED: u64 = 42;

fn describe(params: &HoradamParams) -> String {
    format!("({})", params)
}

/// Compare the engine's series for `H_k` against the recurrence oracle,
/// coefficient by coefficient.
pub fn verify_series(params: &HoradamParams, k: u32, n: usize) -> VerifyReport {
    let subject = format!("series {} k={}", describe(params), k);
    let gf = match horadam_gf(k, params) {
        Ok(gf) => gf,
        Err(e) => return VerifyReport::fail(subject, e.to_string()),
    };
    let engine = match series_coeffs(&gf.reduced, n) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(subject, e.to_string()),
    };
    let oracle = power_series_oracle(params, k, n);
    match first_difference(&engine, &oracle) {
        None => VerifyReport::pass(subject, format!("{n} coefficients match the oracle")),
        Some(i) => VerifyReport::fail(
            subject,
            format!(
                "first difference at x^{i}: engine {} vs oracle {}",
                engine[i], oracle[i]
            ),
        ),
    }
}

/// Check the printed `H_k(1/100)` column of table 1 or 2 against the
/// engine. A mismatch is an erratum only when the engine itself is
/// oracle-confirmed.
pub fn verify_point_table(table_id: u8) -> Vec<VerifyReport> {
    assert!(table_id == 1 || table_id == 2, "point columns exist for tables 1 and 2");
    let params = crate::horadam::preset(table_preset(table_id)).expect("preset");
    let x0 = rat_parse("1/100").unwrap();
    let mut reports = Vec::new();
    for k in 1..=6u32 {
        let subject = format!("table{table_id} k={k} point");
        let fixture = table_fixture(table_id, k).expect("fixture row");
        let printed = fixture.point().expect("tables 1-2 carry points").expect("parses");
        let gf = match horadam_gf(k, &params) {
            Ok(gf) => gf,
            Err(e) => {
                reports.push(VerifyReport::fail(subject, e.to_string()));
                continue;
            }
        };
        let computed = match gf.reduced.eval_at(&x0) {
            Ok(v) => v,
            Err(e) => {
                reports.push(VerifyReport::fail(subject, e.to_string()));
                continue;
            }
        };
        if computed == printed {
            reports.push(VerifyReport::pass(subject, format!("H_{k}(1/100) = {computed}")));
            continue;
        }
        // The printed value disagrees; decide who is right via the oracle.
        let oracle_backed = series_coeffs(&gf.reduced, ORACLE_LEN)
            .map(|s| s == power_series_oracle(&params, k, ORACLE_LEN))
            .unwrap_or(false);
        if oracle_backed {
            reports.push(VerifyReport::erratum(
                subject,
                format!("printed value {printed} but the oracle-confirmed engine gives {computed}"),
                computed.to_string(),
            ));
        } else {
            reports.push(VerifyReport::fail(
                subject,
                format!("engine gives {computed}, printed {printed}, and the engine fails the oracle"),
            ));
        }
    }
    reports
}

/// Audit one printed generating function by the cross-multiplication
/// identity `printed_num * det(delta) = printed_den * det(delta_hat)`,
/// which needs no GCD reduction and is valid symbolically.
pub fn verify_printed_gf(table_id: u8, k: u32) -> VerifyReport {
    let subject = format!("table{table_id} k={k} gf");
    let Some(fixture) = table_fixture(table_id, k) else {
        return VerifyReport::fail(subject, "no such fixture".to_string());
    };
    let params = fixture.params();
    let printed_num = fixture.printed_num();
    let printed_den = fixture.printed_den();
    let gf = match horadam_gf(k, &params) {
        Ok(gf) => gf,
        Err(e) => return VerifyReport::fail(subject, e.to_string()),
    };
    if &printed_num * &gf.denominator == &printed_den * &gf.numerator {
        return VerifyReport::pass(subject, "printed form equals the determinant quotient".to_string());
    }
    // Disagreement: let the oracle arbitrate. First make sure the engine
    // side is sound; an engine-oracle mismatch is a build-stopping defect,
    // never an erratum.
    let oracle = power_series_oracle(&params, k, ORACLE_LEN);
    match series_coeffs(&gf.reduced, ORACLE_LEN) {
        Ok(engine_series) if engine_series == oracle => {}
        Ok(_) => return VerifyReport::fail(subject, "determinant engine disagrees with the oracle".to_string()),
        Err(e) => return VerifyReport::fail(subject, e.to_string()),
    }
    let printed_series = series_coeffs(
        &RationalFunction::new(printed_num.clone(), printed_den.clone()),
        ORACLE_LEN,
    );
    match printed_series {
        Ok(s) => match first_difference(&s, &oracle) {
            Some(i) => VerifyReport::erratum(
                subject,
                format!(
                    "printed form disagrees with the oracle at x^{i}: printed {} vs oracle {}",
                    s[i], oracle[i]
                ),
                format!("{}", gf.reduced),
            ),
            None => VerifyReport::fail(
                subject,
                "printed form matches the oracle but not the determinant quotient".to_string(),
            ),
        },
        Err(e) => VerifyReport::erratum(
            subject,
            format!("printed denominator is not expandable at x = 0 ({e})"),
            format!("{}", gf.reduced),
        ),
    }
}

/// Audit one printed closed form `A_k / B_k` by the symbolic identity
/// `A_k * det(delta_k) - B_k * det(delta_hat_k) = 0` over `(x, p, q, a, b)`.
pub fn verify_corollary(k: u32, seed: u64) -> VerifyReport {
    let subject = format!("corollary k={k}");
    let Some(fixture) = corollary_fixture(k) else {
        return VerifyReport::fail(subject, "no such fixture".to_string());
    };
    let symbolic = HoradamParams::symbolic();
    let gf = match horadam_gf(k, &symbolic) {
        Ok(gf) => gf,
        Err(e) => return VerifyReport::fail(subject, e.to_string()),
    };
    let diff = &fixture.printed_a() * &gf.denominator - &fixture.printed_b() * &gf.numerator;
    if diff.is_zero() {
        return VerifyReport::pass(subject, "cross-multiplication identity holds symbolically".to_string());
    }
    // The identity fails; confirm the determinant side against the oracle
    // on reproducible random parameter quadruples before calling it an
    // erratum of the printed form.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut confirmations = 0usize;
    for _ in 0..3 {
        let params = random_params(&mut rng);
        let confirmed = horadam_gf(k, &params)
            .and_then(|g| series_coeffs(&g.reduced, 32))
            .map(|s| s == power_series_oracle(&params, k, 32))
            .unwrap_or(false);
        if confirmed {
            confirmations += 1;
        }
    }
    let (first_mono, first_coeff) = diff.terms().next().expect("nonzero difference");
    let first_term = Polynomial::monomial(*first_mono, first_coeff.clone());
    if confirmations >= 3 {
        VerifyReport::erratum(
            subject,
            format!(
                "A_{k}*det(delta) - B_{k}*det(delta_hat) != 0; first differing monomial: {first_term}; \
                 determinant side oracle-confirmed on {confirmations} random parameter quadruples"
            ),
            format!("{}", gf.reduced),
        )
    } else {
        VerifyReport::fail(
            subject,
            format!("identity fails ({first_term}) and the determinant side failed oracle confirmation"),
        )
    }
}

fn random_params(rng: &mut ChaCha8Rng) -> HoradamParams {
    let mut draw = || rng.gen_range(-5i64..=5);
    HoradamParams::from_i64(draw(), draw(), draw(), draw())
}

/// Validate the raw linear system: multiply `delta_k` by the unknown
/// vector assembled from oracle truncations of `H_k` and the `A_{k,d}`,
/// and compare with the right-hand side up to `x^{n-1}`. This checks the
/// two defining relations directly, with no determinant involved.
pub fn verify_linear_system(params: &HoradamParams, k: u32, n: usize) -> VerifyReport {
    let subject = format!("linear-system {} k={}", describe(params), k);
    let (delta, rhs) = match (build_delta(k, params), build_rhs(k, params)) {
        (Ok(d), Ok(r)) => (d, r),
        (Err(e), _) | (_, Err(e)) => return VerifyReport::fail(subject, e.to_string()),
    };
    let mut unknowns: Vec<Vec<RatPoly>> = Vec::with_capacity(k as usize);
    unknowns.push(power_series_oracle(params, k, n));
    for j in 1..k {
        unknowns.push(mixed_series_oracle(params, k, k - j, n));
    }
    for (i, rhs_entry) in rhs.iter().enumerate() {
        let mut lhs = vec![RatPoly::zero(); n];
        for (j, unknown) in unknowns.iter().enumerate() {
            let entry = poly_to_series(delta.at(i, j), n);
            conv_add(&mut lhs, &entry, unknown);
        }
        let rhs_series = poly_to_series(rhs_entry, n);
        if let Some(m) = first_difference(&lhs, &rhs_series) {
            return VerifyReport::fail(
                subject,
                format!(
                    "row {} disagrees at x^{m}: lhs {} vs rhs {}",
                    i + 1,
                    lhs[m],
                    rhs_series[m]
                ),
            );
        }
    }
    VerifyReport::pass(
        subject,
        format!("delta_k times the oracle unknown vector equals the right-hand side up to x^{}", n - 1),
    )
}

/// `x`-coefficients of a polynomial as a truncated series of length `n`.
fn poly_to_series(p: &Polynomial, n: usize) -> Vec<RatPoly> {
    let mut out: Vec<RatPoly> = p
        .x_coefficients()
        .into_iter()
        .map(RatPoly::from_poly)
        .collect();
    out.truncate(n);
    out.resize(n, RatPoly::zero());
    out
}

/// `acc += a * b`, truncated to the length of `acc`.
fn conv_add(acc: &mut [RatPoly], a: &[RatPoly], b: &[RatPoly]) {
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= acc.len() {
                break;
            }
            acc[i + j] = &acc[i + j] + &(ai * bj);
        }
    }
}

fn first_difference(a: &[RatPoly], b: &[RatPoly]) -> Option<usize> {
    debug_assert_eq!(a.len(), b.len());
    (0..a.len().min(b.len())).find(|&i| a[i] != b[i])
}
