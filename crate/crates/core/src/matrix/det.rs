use crate::poly::Poly;

use super::PolyMatrix;

/// Determinant of a square matrix; the empty matrix has determinant one.
///
/// Cofactor expansion up to order 4, fraction-free Bareiss elimination above.
pub fn det(a: &PolyMatrix) -> Poly {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    if n <= 4 {
        let idx: Vec<usize> = (0..n).collect();
        laplace(a, &idx, &idx)
    } else {
        bareiss(a)
    }
}

fn laplace(a: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    match rows.len() {
        0 => Poly::one(),
        1 => a[(rows[0], cols[0])].clone(),
        2 => {
            &(&a[(rows[0], cols[0])] * &a[(rows[1], cols[1])])
                - &(&a[(rows[0], cols[1])] * &a[(rows[1], cols[0])])
        }
        _ => {
            let mut acc = Poly::zero();
            for (k, &c) in cols.iter().enumerate() {
                let e = &a[(rows[0], c)];
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = e * &laplace(a, &rows[1..], &rest);
                acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn bareiss(a: &PolyMatrix) -> Poly {
    let n = a.rows();
    let mut m: Vec<Vec<Poly>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut prev = Poly::one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else { return Poly::zero() };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate { -d } else { d }
}

/// Square with a nonzero constant determinant.
pub fn is_unimodular(a: &PolyMatrix) -> bool {
    a.is_square() && det(a).deg() == 0
}
