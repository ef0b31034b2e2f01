use num_traits::One;

use crate::poly::Poly;

use super::PolyMatrix;

/// `left · P · right = diag(α_1, …, α_r, 0, …)` with unimodular transformers.
///
/// The inverses of both transformers are carried along, since the column space
/// and row space bases are read off `left_inv` and `right_inv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: PolyMatrix,
    pub left_inv: PolyMatrix,
    pub right: PolyMatrix,
    pub right_inv: PolyMatrix,
    pub diag: Vec<Poly>,
    pub rank: usize,
}

impl SmithDecomposition {
    /// The `m × n` diagonal form.
    pub fn diagonal_matrix(&self) -> PolyMatrix {
        PolyMatrix::diagonal(self.left.rows(), self.right.rows(), &self.diag)
    }
}

struct Tracker {
    left: PolyMatrix,
    left_inv: PolyMatrix,
    right: PolyMatrix,
    right_inv: PolyMatrix,
}

struct Reducer {
    w: PolyMatrix,
    t: Option<Tracker>,
}

impl Reducer {
    fn row_add(&mut self, target: usize, source: usize, factor: &Poly) {
        self.w.add_row_multiple(target, source, factor);
        if let Some(t) = &mut self.t {
            t.left.add_row_multiple(target, source, factor);
            t.left_inv.add_col_multiple(source, target, &-factor);
        }
    }

    fn col_add(&mut self, target: usize, source: usize, factor: &Poly) {
        self.w.add_col_multiple(target, source, factor);
        if let Some(t) = &mut self.t {
            t.right.add_col_multiple(target, source, factor);
            t.right_inv.add_row_multiple(source, target, &-factor);
        }
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        if let Some(t) = &mut self.t {
            t.left.swap_rows(a, b);
            t.left_inv.swap_cols(a, b);
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.w.swap_cols(a, b);
        if let Some(t) = &mut self.t {
            t.right.swap_cols(a, b);
            t.right_inv.swap_rows(a, b);
        }
    }

    fn make_monic(&mut self, i: usize) {
        let lc = self.w[(i, i)].leading();
        if lc.is_one() {
            return;
        }
        let inv = lc.recip();
        self.w.scale_row(i, &inv);
        if let Some(t) = &mut self.t {
            t.left.scale_row(i, &inv);
            t.left_inv.scale_col(i, &lc);
        }
    }

    /// Minimal-degree nonzero entry of the trailing block, ties to smallest (row, col).
    fn pivot(&self, start: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in start..self.w.rows() {
            for j in start..self.w.cols() {
                let d = self.w[(i, j)].deg();
                if d >= 0 && best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn run(&mut self) -> Vec<Poly> {
        let (m, n) = self.w.shape();
        let mut diag = Vec::new();
        for t in 0..m.min(n) {
            loop {
                let Some((pi, pj)) = self.pivot(t) else { return diag };
                self.row_swap(t, pi);
                self.col_swap(t, pj);
                let pivot = self.w[(t, t)].clone();
                let mut dirty = false;
                for i in t + 1..m {
                    if self.w[(i, t)].is_zero() {
                        continue;
                    }
                    let (q, r) = self.w[(i, t)].div_rem(&pivot).expect("nonzero pivot");
                    self.row_add(i, t, &-q);
                    dirty |= !r.is_zero();
                }
                for j in t + 1..n {
                    if self.w[(t, j)].is_zero() {
                        continue;
                    }
                    let (q, r) = self.w[(t, j)].div_rem(&pivot).expect("nonzero pivot");
                    self.col_add(j, t, &-q);
                    dirty |= !r.is_zero();
                }
                if dirty {
                    continue;
                }
                let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !pivot.divides(&self.w[(i, j)])));
                match offender {
                    Some(i) => self.row_add(t, i, &Poly::one()),
                    None => break,
                }
            }
            self.make_monic(t);
            diag.push(self.w[(t, t)].clone());
        }
        diag
    }
}

pub fn smith_form(p: &PolyMatrix) -> SmithDecomposition {
    let (m, n) = p.shape();
    let mut red = Reducer {
        w: p.clone(),
        t: Some(Tracker {
            left: PolyMatrix::identity(m),
            left_inv: PolyMatrix::identity(m),
            right: PolyMatrix::identity(n),
            right_inv: PolyMatrix::identity(n),
        }),
    };
    let diag = red.run();
    let t = red.t.expect("tracked");
    SmithDecomposition {
        rank: diag.len(),
        diag,
        left: t.left,
        left_inv: t.left_inv,
        right: t.right,
        right_inv: t.right_inv,
    }
}

/// Monic invariant factors only, skipping the transformer bookkeeping.
pub fn invariant_factors(p: &PolyMatrix) -> Vec<Poly> {
    Reducer { w: p.clone(), t: None }.run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{gcd_minors_oracle, is_unimodular};

    fn check(p: &PolyMatrix) -> SmithDecomposition {
        let sd = smith_form(p);
        assert_eq!(&(&sd.left * p) * &sd.right, sd.diagonal_matrix());
        assert_eq!(&sd.left * &sd.left_inv, PolyMatrix::identity(p.rows()));
        assert_eq!(&sd.right * &sd.right_inv, PolyMatrix::identity(p.cols()));
        assert!(is_unimodular(&sd.left) && is_unimodular(&sd.right));
        for w in sd.diag.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        assert_eq!(invariant_factors(p), sd.diag);
        sd
    }

    #[test]
    fn examples() {
        assert_eq!(check(&PolyMatrix::identity(2)).diag, vec![Poly::one(), Poly::one()]);
        let j = PolyMatrix::from_int_rows(&[&[&[0, 1], &[1]], &[&[0], &[0, 1]]]);
        let sd = check(&j);
        assert_eq!(sd.diag, vec![Poly::one(), Poly::from_ints(&[0, 0, 1])]);
        assert_eq!(gcd_minors_oracle(&j, 2).unwrap(), Poly::from_ints(&[0, 0, 1]));
        let d = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0]], &[&[0], &[0, -1, 1]]]);
        assert_eq!(check(&d).diag, vec![Poly::from_ints(&[0, 1]), Poly::from_ints(&[0, -1, 1])]);
    }

    #[test]
    fn rank_deficient_rectangular() {
        let p = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0, 0, 1], &[1]], &[&[1], &[0, 1], &[0]]]);
        let sd = check(&p);
        assert_eq!(sd.rank, 2);
        let q = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0, 0, 1]], &[&[1], &[0, 1]]]);
        let sq = check(&q);
        assert_eq!(sq.rank, 1);
        assert_eq!(sq.diag, vec![Poly::one()]);
    }

    #[test]
    fn divisibility_fix() {
        // diag(s, s+1) has Smith form diag(1, s(s+1))
        let p = PolyMatrix::from_int_rows(&[&[&[0, 1], &[0]], &[&[0], &[1, 1]]]);
        assert_eq!(check(&p).diag, vec![Poly::one(), Poly::from_ints(&[0, 1, 1])]);
    }
}
