use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;

/// `E'·U` with `U` unit upper triangular, so that every strictly upper entry
/// of row `i` has degree below `bounds[i]`.
///
/// Column replacements run for `i = r-1, …, 1` and `j = i+1, …, r`, subtracting
/// column `i` times the Euclidean quotient of entry `(i, j)` by entry `(i, i)`.
pub fn shape_degrees(e: &PolyMatrix, bounds: &[usize]) -> Result<PolyMatrix> {
    let r = e.rows();
    if !e.is_square() || bounds.len() != r {
        return Err(Error::ShapeMismatch(format!("{}×{} matrix with {} bounds", e.rows(), e.cols(), bounds.len())));
    }
    for i in 0..r {
        if !e[(i, i)].is_monic() || e[(i, i)].deg() != bounds[i] as i64 {
            return Err(Error::NonMonicDiagonal(i + 1));
        }
    }
    let mut out = e.clone();
    for i in (0..r.saturating_sub(1)).rev() {
        for j in i + 1..r {
            let (quo, _) = out[(i, j)].div_rem(&out[(i, i)])?;
            if !quo.is_zero() {
                out.add_col_multiple(j, i, &-quo);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::invariant_factors;

    #[test]
    fn examples() {
        let done = PolyMatrix::from_int_rows(&[&[&[0, 1], &[1]], &[&[0], &[0, 1]]]);
        assert_eq!(shape_degrees(&done, &[1, 1]).unwrap(), done);
        let e = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0, 0, 1]], &[&[0], &[0, 1]]]);
        let out = shape_degrees(&e, &[1, 1]).unwrap();
        assert_eq!(out, PolyMatrix::from_int_rows(&[&[&[0, 1], &[0]], &[&[0], &[0, 1]]]));
        assert_eq!(invariant_factors(&out), invariant_factors(&e));
        let e = PolyMatrix::from_int_rows(&[&[&[0, 1], &[1, 1]], &[&[0], &[0, 0, 1]]]);
        let out = shape_degrees(&e, &[1, 2]).unwrap();
        assert_eq!(out, PolyMatrix::from_int_rows(&[&[&[0, 1], &[1]], &[&[0], &[0, 0, 1]]]));
        assert_eq!(invariant_factors(&out), invariant_factors(&e));
    }

    #[test]
    fn three_by_three_degrees() {
        let e = PolyMatrix::from_int_rows(&[
            &[&[1, 1], &[0, 0, 0, 1], &[2, 0, 0, 0, 1]],
            &[&[0], &[0, 0, 1], &[1, 1, 1, 1]],
            &[&[0], &[0], &[3, 1]],
        ]);
        let out = shape_degrees(&e, &[1, 2, 1]).unwrap();
        for i in 0..3 {
            assert_eq!(out[(i, i)], e[(i, i)]);
            for j in i + 1..3 {
                assert!(out[(i, j)].deg() < [1, 2, 1][i] as i64);
            }
        }
        assert_eq!(invariant_factors(&out), invariant_factors(&e));
        let bad = PolyMatrix::from_int_rows(&[&[&[0, 2]]]);
        assert_eq!(shape_degrees(&bad, &[1]), Err(Error::NonMonicDiagonal(1)));
    }
}
