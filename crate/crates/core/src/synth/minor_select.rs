use crate::error::{Error, Result};
use crate::matrix::{combinations, det, minor, PolyMatrix};

/// `Z* = [r+1-z_k, …, r+1-z_1]`, all 1-based.
pub fn complement_bound(z: &[usize], r: usize) -> Vec<usize> {
    z.iter().rev().map(|&zi| r + 1 - zi).collect()
}

fn below(xs: &[usize], bound: &[usize]) -> bool {
    xs.iter().zip(bound).all(|(x, b)| x <= b)
}

fn check_tuple(z: &[usize], r: usize) -> Result<()> {
    let increasing = z.windows(2).all(|w| w[0] < w[1]);
    if z.is_empty() || z.len() > r || !increasing || z[0] == 0 || z[z.len() - 1] > r {
        return Err(Error::PreconditionViolated(format!("{z:?} is not an increasing tuple in 1..={r}")));
    }
    Ok(())
}

fn zero_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x - 1).collect()
}

fn nonzero_minor(e: &PolyMatrix, rows: &[usize], cols: &[usize]) -> bool {
    !minor(e, &zero_based(rows), &zero_based(cols)).is_zero()
}

/// Rows `I ≤ Z*` and columns `J ≤ Z` (1-based) with `det E(I,J) ≠ 0`.
pub fn select_nonzero_minor(e: &PolyMatrix, z: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    if !e.is_square() {
        return Err(Error::ShapeMismatch(format!("expected a square matrix, got {:?}", e.shape())));
    }
    let r = e.rows();
    check_tuple(z, r)?;
    if det(e).is_zero() {
        return Err(Error::SingularInput);
    }
    let (rows, cols) = select(e, z);
    if !below(&cols, z) || !below(&rows, &complement_bound(z, r)) || !nonzero_minor(e, &rows, &cols) {
        return Err(Error::IdentityViolated(format!("selected rows {rows:?} and columns {cols:?} fail the bounds")));
    }
    Ok((rows, cols))
}

fn select(e: &PolyMatrix, z: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (r, k) = (e.rows(), z.len());
    if k == r {
        let all: Vec<usize> = (1..=r).collect();
        return (all.clone(), all);
    }
    if k == 1 {
        for i in 0..r + 1 - z[0] {
            for j in 0..z[0] {
                if !e[(i, j)].is_zero() {
                    return (vec![i + 1], vec![j + 1]);
                }
            }
        }
        unreachable!("a full-rank matrix has a nonzero entry in every such corner");
    }
    let top: Vec<usize> = (0..r - 1).collect();
    let u = (1..=r)
        .find(|&i| e.submatrix(&top, &(0..i).collect::<Vec<_>>()).rank() == i - 1)
        .expect("r columns in r-1 rows are dependent");
    let kept: Vec<usize> = (0..r).filter(|&j| j != u - 1).collect();
    let reduced = e.submatrix(&top, &kept);
    let w = (0..=k).rev().find(|&i| i == 0 || z[i - 1] == i).expect("z_0 = 0");
    if w < u {
        let zhat: Vec<usize> = (1..=k).map(|i| if i <= w { z[i - 1] } else { z[i - 1] - 1 }).collect();
        let (ihat, jhat) = select(&reduced, &zhat);
        let cols = jhat.iter().map(|&j| if j < u { j } else { j + 1 }).collect();
        (ihat, cols)
    } else {
        let zhat: Vec<usize> = (1..k).map(|i| if i < u { z[i - 1] } else { z[i] - 1 }).collect();
        let (mut ihat, jhat) = select(&reduced, &zhat);
        ihat.push(r);
        let cols = (1..=k).map(|i| if i <= u { i } else { jhat[i - 2] + 1 }).collect();
        (ihat, cols)
    }
}

/// Every `(I, J)` meeting the bounds with a nonzero minor, in lexicographic order.
pub fn admissible_minor_pairs(e: &PolyMatrix, z: &[usize]) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let r = e.rows();
    check_tuple(z, r)?;
    let zstar = complement_bound(z, r);
    let tuples = |bound: &[usize]| -> Vec<Vec<usize>> {
        combinations(r, z.len()).into_iter().map(|c| c.into_iter().map(|x| x + 1).collect::<Vec<_>>()).filter(|c| below(c, bound)).collect()
    };
    let cols = tuples(z);
    let mut out = Vec::new();
    for i in tuples(&zstar) {
        for j in &cols {
            if nonzero_minor(e, &i, j) {
                out.push((i.clone(), j.clone()));
            }
        }
    }
    Ok(out)
}

/// Exhaustive oracle: the first admissible pair in lexicographic order.
pub fn brute_force_minor_select(e: &PolyMatrix, z: &[usize]) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    Ok(admissible_minor_pairs(e, z)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::PolyMatrix;
    use crate::poly::{rat, Poly};
    use rand::{Rng, SeedableRng};

    fn random_full_rank(rng: &mut rand_chacha::ChaCha8Rng, r: usize) -> PolyMatrix {
        loop {
            let e = PolyMatrix::from_fn(r, r, |_, _| {
                if rng.gen_bool(0.4) {
                    Poly::zero()
                } else {
                    Poly::constant(rat(rng.gen_range(-3..=3)))
                }
            });
            if !det(&e).is_zero() {
                return e;
            }
        }
    }

    #[test]
    fn identity_and_full_order() {
        let e = PolyMatrix::identity(4);
        for z in [vec![1], vec![2, 4], vec![1, 2, 3, 4]] {
            let (i, j) = select_nonzero_minor(&e, &z).unwrap();
            assert!(below(&j, &z) && below(&i, &complement_bound(&z, 4)));
        }
        assert_eq!(select_nonzero_minor(&e, &[1, 2, 3, 4]).unwrap(), (vec![1, 2, 3, 4], vec![1, 2, 3, 4]));
        assert_eq!(complement_bound(&[1, 3, 4], 5), vec![2, 3, 5]);
        assert_eq!(complement_bound(&[1, 2, 3], 5), vec![3, 4, 5]);
    }

    #[test]
    fn singular_and_bad_tuples() {
        let e = PolyMatrix::from_int_rows(&[&[&[1], &[1]], &[&[1], &[1]]]);
        assert_eq!(select_nonzero_minor(&e, &[1]), Err(Error::SingularInput));
        let i = PolyMatrix::identity(3);
        assert!(matches!(select_nonzero_minor(&i, &[2, 2]), Err(Error::PreconditionViolated(_))));
        assert!(matches!(select_nonzero_minor(&i, &[4]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn agrees_with_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for r in 1..=5 {
            for _ in 0..6 {
                let e = random_full_rank(&mut rng, r);
                for k in 1..=r {
                    for z in combinations(r, k) {
                        let z: Vec<usize> = z.into_iter().map(|x| x + 1).collect();
                        let (i, j) = select_nonzero_minor(&e, &z).unwrap();
                        assert!(nonzero_minor(&e, &i, &j));
                        assert!(admissible_minor_pairs(&e, &z).unwrap().contains(&(i, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn polynomial_entries() {
        // anti-triangular with polynomial entries
        let e = PolyMatrix::from_int_rows(&[
            &[&[0], &[0], &[0, 1]],
            &[&[0], &[1, 1], &[2]],
            &[&[0, 0, 1], &[3], &[1]],
        ]);
        for z in [vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3]] {
            let (i, j) = select_nonzero_minor(&e, &z).unwrap();
            assert!(below(&j, &z) && below(&i, &complement_bound(&z, 3)) && nonzero_minor(&e, &i, &j));
        }
    }
}
