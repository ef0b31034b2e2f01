use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};

use super::{field, PolyMatrix};

/// `reduced = input · right_transform` with `reduced` column proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnReduction {
    pub reduced: PolyMatrix,
    pub right_transform: PolyMatrix,
    pub column_degrees: Vec<i64>,
}

/// Wolovich reduction: while the leading column matrix has a kernel vector `c`,
/// replace the highest-degree column in its support (rightmost on ties) by
/// `Σ c_j/c_j0 · s^(d_j0 - d_j) · col_j`, which strictly lowers its degree.
pub fn column_reduce(p: &PolyMatrix) -> Result<ColumnReduction> {
    if p.rank() < p.cols() {
        return Err(Error::RankDeficient);
    }
    let mut reduced = p.clone();
    let mut transform = PolyMatrix::identity(p.cols());
    loop {
        let degs = reduced.column_degrees();
        let kernel = field::null_space(&reduced.leading_column_matrix(), p.cols());
        let Some(c) = kernel.into_iter().next() else {
            return Ok(ColumnReduction { reduced, right_transform: transform, column_degrees: degs });
        };
        let j0 = (0..c.len())
            .filter(|&j| !c[j].is_zero())
            .max_by_key(|&j| (degs[j], j))
            .expect("kernel vector is nonzero");
        for j in 0..c.len() {
            if j == j0 || c[j].is_zero() {
                continue;
            }
            let mult = Poly::monomial(&c[j] / &c[j0], (degs[j0] - degs[j]) as usize);
            reduced.add_col_multiple(j0, j, &mult);
            transform.add_col_multiple(j0, j, &mult);
        }
    }
}

/// Entry `p` of degree at most `frame` mapped to `t^frame · p(1/t)`.
fn flip(p: &Poly, frame: usize) -> Poly {
    let mut c = p.coeffs().to_vec();
    c.resize(frame + 1, Rat::zero());
    c.reverse();
    Poly::from_coeffs(c)
}

/// `t^d · P(1/t)` with `d = deg P`.
pub fn reversal(p: &PolyMatrix) -> Result<PolyMatrix> {
    if p.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let d = p.degree() as usize;
    Ok(p.map(|e| flip(e, d)))
}

/// `(s-a)^d · P(1/(s-a))`, i.e. `Σ P_j (s-a)^(d-j)`.
pub fn mobius_frame(p: &PolyMatrix, a: &Rat, d: i64) -> Result<PolyMatrix> {
    if d < p.degree() || d < 0 {
        return Err(Error::DegreeTooSmall { frame: d, degree: p.degree() });
    }
    Ok(p.map(|e| flip(e, d as usize).taylor_shift(&-a)))
}

/// Inverse of [`mobius_frame`]: `t^d · A(1/t + a)`.
pub fn inverse_mobius_frame(p: &PolyMatrix, a: &Rat, d: i64) -> Result<PolyMatrix> {
    if d < p.degree() || d < 0 {
        return Err(Error::DegreeTooSmall { frame: d, degree: p.degree() });
    }
    Ok(p.map(|e| flip(&e.taylor_shift(a), d as usize)))
}

/// `K(1/s + a) · diag(s^degs)`.
pub fn scale_basis_mobius(k: &PolyMatrix, a: &Rat, degs: &[usize]) -> Result<PolyMatrix> {
    if degs.len() != k.cols() {
        return Err(Error::DegreeMismatch(format!("{} degrees for {} columns", degs.len(), k.cols())));
    }
    let actual = k.column_degrees();
    if actual.iter().zip(degs).any(|(&x, &y)| x != y as i64) {
        return Err(Error::DegreeMismatch(format!("expected {degs:?}, found {actual:?}")));
    }
    Ok(PolyMatrix::from_fn(k.rows(), k.cols(), |i, j| flip(&k[(i, j)].taylor_shift(a), degs[j])))
}
