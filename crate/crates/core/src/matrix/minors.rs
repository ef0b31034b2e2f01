use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poly::Poly;

use super::{det, PolyMatrix};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

pub fn minor(p: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    det(&p.submatrix(rows, cols))
}

fn check_order(p: &PolyMatrix, k: usize) -> Result<()> {
    let rank = p.rank();
    if k == 0 || k > rank {
        return Err(Error::KOutOfRange { k, rank });
    }
    Ok(())
}

/// Largest degree among the order-`k` minors, by exhaustive enumeration.
pub fn max_minor_degree(p: &PolyMatrix, k: usize) -> Result<i64> {
    check_order(p, k)?;
    let rows = combinations(p.rows(), k);
    let cols = combinations(p.cols(), k);
    let mut best = crate::poly::NEG_INF;
    for r in &rows {
        for c in &cols {
            best = best.max(minor(p, r, c).deg());
        }
    }
    Ok(best)
}

/// Monic gcd of the order-`k` minors, equal to `α_1⋯α_k`.
pub fn gcd_minors_oracle(p: &PolyMatrix, k: usize) -> Result<Poly> {
    check_order(p, k)?;
    let mut g = Poly::zero();
    for r in combinations(p.rows(), k) {
        for c in combinations(p.cols(), k) {
            let m = minor(p, &r, &c);
            if !m.is_zero() {
                g = g.gcd(&m)?;
                if g.is_one() {
                    return Ok(g);
                }
            }
        }
    }
    Ok(g)
}
