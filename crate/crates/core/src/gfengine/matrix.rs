//! Construction of the linear-system matrices.
//!
//! The unknown vector is `[H_k, A_{k,k-1}, A_{k,k-2}, ..., A_{k,1}]`, so
//! column `m >= 2` (1-based) carries the coefficient of `A_{k,k-(m-1)}`,
//! and row `i >= 2` restates the `A_{k,d}` relation with `d = k - i + 1`.
//! The two relations, with every unknown moved to the left:
//!
//! * `(1 - p^k x - q^k x^2) H_k - x sum_{j=1}^{k-1} C(k,j) p^{k-j} q^j
//!   A_{k,k-j}  =  a^k + (b^k - a^k p^k) x`
//! * `-p^d x H_k + A_{k,d} - x sum_{j=1}^{d} C(d,j) p^{d-j} q^j A_{k,k-j}
//!   =  g_d x`, with `g_d = (b^d - a^d p^d) a^{k-d}`
//!
//! The coefficient matrix is `delta_k`; replacing its first column by the
//! right-hand side gives `delta_hat_k`, and Cramer's rule yields
//! `H_k = det(delta_hat_k) / det(delta_k)`.
//!
//! Rational parameters are supported by clearing each row's denominators
//! with one lcm shared between the matrix row and its right-hand-side
//! entry; scaling a row of both determinants by the same constant leaves
//! the quotient unchanged.

use num_traits::One;

use crate::error::Error;
use crate::exactnum::{binomial_u32, int_lcm, Integer};
use crate::horadam::HoradamParams;
use crate::polyring::{Polynomial, RatPoly, Var};

/// Dense square matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<Polynomial>>) -> PolyMatrix {
        let n = entries.len();
        assert!(n >= 1, "matrix must have dimension >= 1");
        assert!(entries.iter().all(|row| row.len() == n), "matrix must be square");
        PolyMatrix { entries }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Polynomial::one() } else { Polynomial::zero() })
                    .collect()
            })
            .collect();
        PolyMatrix::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    /// Copy with column `col` replaced.
    pub fn with_column(&self, col: usize, values: &[Polynomial]) -> PolyMatrix {
        assert_eq!(values.len(), self.dim());
        let mut out = self.clone();
        for (i, value) in values.iter().enumerate() {
            out.entries[i][col] = value.clone();
        }
        PolyMatrix::new(out.entries)
    }
}

/// The coefficient rows and the right-hand side, before denominator
/// clearing, exactly as dictated by the two relations above.
fn build_system(k: u32, params: &HoradamParams) -> (Vec<Vec<RatPoly>>, Vec<RatPoly>) {
    let n = k as usize;
    let x = RatPoly::from_poly(Polynomial::var(Var::X));
    let x2 = x.pow(2);
    let (a, b, p, q) = (&params.a, &params.b, &params.p, &params.q);

    let mut rows = vec![vec![RatPoly::zero(); n]; n];
    let mut rhs = vec![RatPoly::zero(); n];

    // Row 1: the H_k relation.
    rows[0][0] = &(&RatPoly::one() - &(&p.pow(k) * &x)) - &(&q.pow(k) * &x2);
    for j in 1..k {
        let coeff = RatPoly::from_poly(Polynomial::constant(binomial_u32(k, j)));
        rows[0][j as usize] = -&(&(&(&coeff * &p.pow(k - j)) * &q.pow(j)) * &x);
    }
    rhs[0] = &a.pow(k) + &(&(&b.pow(k) - &(&a.pow(k) * &p.pow(k))) * &x);

    // Rows 2..k: the A_{k,d} relations, d = k - i + 1.
    for i0 in 1..n {
        let d = k - i0 as u32;
        rows[i0][0] = -&(&p.pow(d) * &x);
        for j in 1..=d {
            let coeff = RatPoly::from_poly(Polynomial::constant(binomial_u32(d, j)));
            let term = -&(&(&(&coeff * &p.pow(d - j)) * &q.pow(j)) * &x);
            rows[i0][j as usize] = &rows[i0][j as usize] + &term;
        }
        rows[i0][i0] = &rows[i0][i0] + &RatPoly::one();
        let g_d = &(&b.pow(d) - &(&a.pow(d) * &p.pow(d))) * &a.pow(k - d);
        rhs[i0] = &g_d * &x;
    }

    (rows, rhs)
}

/// Clear each row (matrix entries and right-hand side together) to integer
/// polynomials using one lcm per row.
fn clear_system(rows: Vec<Vec<RatPoly>>, rhs: Vec<RatPoly>) -> (Vec<Vec<Polynomial>>, Vec<Polynomial>) {
    let mut out_rows = Vec::with_capacity(rows.len());
    let mut out_rhs = Vec::with_capacity(rhs.len());
    for (row, v) in rows.into_iter().zip(rhs) {
        let mut l = Integer::one();
        for entry in row.iter().chain(std::iter::once(&v)) {
            l = int_lcm(&l, entry.den());
        }
        let lift = |e: &RatPoly| e.poly().scale(&(&l / e.den()));
        out_rows.push(row.iter().map(lift).collect::<Vec<_>>());
        out_rhs.push(lift(&v));
    }
    (out_rows, out_rhs)
}

/// The k x k coefficient matrix of the linear system.
pub fn build_delta(k: u32, params: &HoradamParams) -> Result<PolyMatrix, Error> {
    if k < 1 {
        return Err(Error::ZeroDimension);
    }
    let (rows, rhs) = build_system(k, params);
    let (rows, _) = clear_system(rows, rhs);
    Ok(PolyMatrix::new(rows))
}

/// `build_delta` with its first column replaced by the right-hand side.
pub fn build_delta_hat(k: u32, params: &HoradamParams) -> Result<PolyMatrix, Error> {
    if k < 1 {
        return Err(Error::ZeroDimension);
    }
    let (rows, rhs) = build_system(k, params);
    let (rows, rhs) = clear_system(rows, rhs);
    Ok(PolyMatrix::new(rows).with_column(0, &rhs))
}

/// Right-hand-side column, cleared consistently with [`build_delta`].
pub fn build_rhs(k: u32, params: &HoradamParams) -> Result<Vec<Polynomial>, Error> {
    if k < 1 {
        return Err(Error::ZeroDimension);
    }
    let (rows, rhs) = build_system(k, params);
    let (_, rhs) = clear_system(rows, rhs);
    Ok(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::horadam::preset;
    use crate::polyring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn delta_k1_symbolic() {
        let m = build_delta(1, &HoradamParams::symbolic()).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.at(0, 0), &p("1 - p*x - q*x^2"));
    }

    #[test]
    fn delta_k2_fibonacci() {
        let m = build_delta(2, &preset("fibonacci").unwrap()).unwrap();
        assert_eq!(m.at(0, 0), &p("1 - x - x^2"));
        assert_eq!(m.at(0, 1), &p("-2*x"));
        assert_eq!(m.at(1, 0), &p("-x"));
        assert_eq!(m.at(1, 1), &p("1 - x"));
    }

    #[test]
    fn delta_k2_symbolic_second_row() {
        let m = build_delta(2, &HoradamParams::symbolic()).unwrap();
        assert_eq!(m.at(1, 0), &p("-p*x"));
        assert_eq!(m.at(1, 1), &p("1 - q*x"));
    }

    #[test]
    fn delta_hat_k2_fibonacci() {
        let m = build_delta_hat(2, &preset("fibonacci").unwrap()).unwrap();
        assert_eq!(m.at(0, 0), &p("x"));
        assert_eq!(m.at(0, 1), &p("-2*x"));
        assert_eq!(m.at(1, 0), &p("0"));
        assert_eq!(m.at(1, 1), &p("1 - x"));
    }

    #[test]
    fn delta_hat_k1_symbolic() {
        let m = build_delta_hat(1, &HoradamParams::symbolic()).unwrap();
        assert_eq!(m.at(0, 0), &p("a + (b - a*p)*x"));
    }

    #[test]
    fn delta_hat_shares_all_but_first_column() {
        let params = preset("pell").unwrap();
        let delta = build_delta(4, &params).unwrap();
        let hat = build_delta_hat(4, &params).unwrap();
        for i in 0..4 {
            for j in 1..4 {
                assert_eq!(delta.at(i, j), hat.at(i, j));
            }
        }
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(build_delta(0, &preset("fibonacci").unwrap()).is_err());
        assert!(build_delta_hat(0, &preset("fibonacci").unwrap()).is_err());
    }

    #[test]
    fn delta_at_x_zero_is_identity() {
        use std::collections::BTreeMap;
        use crate::polyring::Binding;
        let params = preset("pell").unwrap();
        for k in 1..=5u32 {
            let m = build_delta(k, &params).unwrap();
            let zero = std::iter::once((
                Var::X,
                Binding::Rational(crate::exactnum::Rational::from_integer(0.into())),
            ))
            .collect::<BTreeMap<_, _>>();
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    let e = m.at(i, j).substitute(&zero);
                    let expected = if i == j { RatPoly::one() } else { RatPoly::zero() };
                    assert_eq!(e, expected, "k={k} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rational_params_clear_rows_consistently() {
        use crate::exactnum::rat_parse;
        use num_traits::Zero;
        let params = HoradamParams::from_rationals(
            rat_parse("1/2").unwrap(),
            rat_parse("1/3").unwrap(),
            rat_parse("1/6").unwrap(),
            rat_parse("1").unwrap(),
        );
        let delta = build_delta(2, &params).unwrap();
        let hat = build_delta_hat(2, &params).unwrap();
        // Row 1 lcm covers p^2 = 1/36, q^2 = 1, 2pq = 1/3, a^2 = 1/4,
        // b^2 - a^2 p^2 = 1/9 - 1/144 jointly: all entries integral.
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(delta.at(i, j).content().is_zero(), delta.at(i, j).is_zero());
                assert_eq!(hat.at(i, j).content().is_zero(), hat.at(i, j).is_zero());
            }
        }
        // Columns beyond the first agree, entry by entry.
        assert_eq!(delta.at(0, 1), hat.at(0, 1));
        assert_eq!(delta.at(1, 1), hat.at(1, 1));
    }
}
