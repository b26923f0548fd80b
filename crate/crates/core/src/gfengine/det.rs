//! Exact determinants over the polynomial ring.

use crate::polyring::Polynomial;

use super::matrix::PolyMatrix;

/// Determinant by single-step fraction-free (Bareiss) elimination. Every
/// division along the way is exact in the ring; a failed division would
/// mean the algorithm's invariant is broken, so it aborts rather than
/// round. Pivots are the first structurally nonzero entry down each
/// column; an all-zero column short-circuits to 0.
///
/// In debug and test builds, results for dimension <= 4 are cross-checked
/// against cofactor expansion.
pub fn determinant(m: &PolyMatrix) -> Polynomial {
    let det = bareiss(m);
    #[cfg(debug_assertions)]
    if m.dim() <= 4 {
        debug_assert_eq!(
            det,
            determinant_cofactor(m),
            "Bareiss and cofactor determinants disagree"
        );
    }
    det
}

fn bareiss(m: &PolyMatrix) -> Polynomial {
    let n = m.dim();
    let mut work: Vec<Vec<Polynomial>> = m.rows().to_vec();
    let mut negated = false;
    let mut prev = Polynomial::one();
    for r in 0..n {
        let Some(pivot_row) = (r..n).find(|&i| !work[i][r].is_zero()) else {
            return Polynomial::zero();
        };
        if pivot_row != r {
            work.swap(pivot_row, r);
            negated = !negated;
        }
        if r + 1 == n {
            break;
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let t = &(&work[r][r] * &work[i][j]) - &(&work[i][r] * &work[r][j]);
                work[i][j] = t
                    .exact_div(&prev)
                    .expect("fraction-free elimination divides exactly");
            }
            work[i][r] = Polynomial::zero();
        }
        prev = work[r][r].clone();
    }
    let det = work[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Determinant by cofactor expansion along the first row. Exponential in
/// the dimension; the independent cross-check for small matrices.
pub fn determinant_cofactor(m: &PolyMatrix) -> Polynomial {
    fn expand(rows: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
        if cols.len() == 1 {
            return rows[0][cols[0]].clone();
        }
        let mut det = Polynomial::zero();
        for (idx, &col) in cols.iter().enumerate() {
            let entry = &rows[0][col];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&c| c != col)
                .collect();
            let minor = expand(&rows[1..], &rest);
            let signed = if idx % 2 == 0 { minor } else { -minor };
            det += entry * &signed;
        }
        det
    }
    let cols: Vec<usize> = (0..m.dim()).collect();
    expand(m.rows(), &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn mat(entries: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::new(
            entries
                .iter()
                .map(|row| row.iter().map(|s| parse(s).unwrap()).collect())
                .collect(),
        )
    }

    #[test]
    fn integer_cases() {
        assert_eq!(determinant(&mat(&[&["1", "2"], &["3", "4"]])), parse("-2").unwrap());
        assert_eq!(determinant(&PolyMatrix::identity(3)), Polynomial::one());
        assert_eq!(determinant(&mat(&[&["0"]])), Polynomial::zero());
    }

    #[test]
    fn delta2_fibonacci_determinant() {
        let m = mat(&[&["1 - x - x^2", "-2*x"], &["-x", "1 - x"]]);
        assert_eq!(determinant(&m), parse("1 - 2*x - 2*x^2 + x^3").unwrap());
    }

    #[test]
    fn zero_column_gives_zero() {
        let m = mat(&[&["0", "x"], &["0", "1 + x"]]);
        assert_eq!(determinant(&m), Polynomial::zero());
    }

    #[test]
    fn pivot_swap_flips_sign() {
        let m = mat(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(determinant(&m), parse("-1").unwrap());
        let m = mat(&[
            &["0", "x", "1"],
            &["x", "0", "0"],
            &["0", "0", "1"],
        ]);
        // Expansion: -x * x * 1.
        assert_eq!(determinant(&m), parse("-x^2").unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_on_symbolic_entries() {
        let m = mat(&[
            &["1 - p*x", "q", "x^2"],
            &["a + b", "2", "p*q"],
            &["x", "0", "1 + t"],
        ]);
        assert_eq!(determinant(&m), determinant_cofactor(&m));
    }
}
