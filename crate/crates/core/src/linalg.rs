//! Exact Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponent, SparsePoly};
use crate::rational::Rational;

/// Solves `A x = b` for an overdetermined but consistent system with full column rank.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::Singular);
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = Rational::one() / &a[pivot_row][col];
        for c in col..cols {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        b[pivot_row] = &b[pivot_row] * &inv;
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..cols {
                    let t = &f * &a[pivot_row][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[pivot_row];
                b[r] -= t;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Residual("inconsistent linear system".into()));
    }
    Ok(pivots.into_iter().map(|r| b[r].clone()).collect())
}

/// Coefficients `c` with `target = sum_k c_k basis_k`, by elimination on monomial coordinates.
pub fn solve_in_span(target: &SparsePoly, basis: &[SparsePoly]) -> Result<Vec<Rational>> {
    let mut index: BTreeMap<Exponent, usize> = BTreeMap::new();
    for p in basis.iter().chain(std::iter::once(target)) {
        for (e, _) in p.terms() {
            let next = index.len();
            index.entry(e.clone()).or_insert(next);
        }
    }
    let rows = index.len();
    let mut a = vec![vec![Rational::zero(); basis.len()]; rows];
    for (k, p) in basis.iter().enumerate() {
        for (e, c) in p.terms() {
            a[index[e]][k] = c.clone();
        }
    }
    let mut b = vec![Rational::zero(); rows];
    for (e, c) in target.terms() {
        b[index[e]] = c.clone();
    }
    solve(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn small_system() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)], vec![int(3), int(4)]];
        let b = vec![int(5), int(10), int(15)];
        assert_eq!(solve(a, b).unwrap(), vec![int(1), int(3)]);
    }

    #[test]
    fn inconsistent_system() {
        let a = vec![vec![int(1)], vec![int(1)]];
        assert!(solve(a, vec![int(1), int(2)]).is_err());
    }
}
