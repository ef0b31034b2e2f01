//! Dense polynomial matrices and the kernel algorithms on them.

mod det;
pub mod field;
mod minimal;
mod minors;
mod rational;
mod reduce;
mod smith;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::poly::{Poly, Rat, NEG_INF};

pub use det::{det, is_unimodular};
pub use minimal::is_minimal_basis;
pub use minors::{combinations, gcd_minors_oracle, max_minor_degree, minor};
pub use rational::RationalMatrix;
pub use reduce::{column_reduce, inverse_mobius_frame, mobius_frame, reversal, scale_basis_mobius, ColumnReduction};
pub use smith::{invariant_factors, smith_form, SmithDecomposition};

/// Dense `rows × cols` matrix of polynomials stored row-major.
///
/// Either dimension may be zero so that empty null-space bases are representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged rows");
        PolyMatrix { rows: m, cols: n, entries: rows.into_iter().flatten().collect() }
    }

    /// Rows of ascending integer coefficient lists; handy in tests.
    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Self {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|c| Poly::from_ints(c)).collect()).collect())
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        PolyMatrix { rows, cols, entries }
    }

    /// Constant matrix from rational rows.
    pub fn from_constant(rows: &[Vec<Rat>]) -> Self {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|c| Poly::constant(c.clone())).collect()).collect())
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[Poly]) -> Self {
        let mut out = PolyMatrix::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate() {
            out[(i, i)] = d.clone();
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Maximum entry degree, [`NEG_INF`] for the zero matrix.
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(Poly::deg).max().unwrap_or(NEG_INF)
    }

    pub fn column_degree(&self, j: usize) -> i64 {
        (0..self.rows).map(|i| self[(i, j)].deg()).max().unwrap_or(NEG_INF)
    }

    pub fn column_degrees(&self) -> Vec<i64> {
        (0..self.cols).map(|j| self.column_degree(j)).collect()
    }

    /// Coefficient matrix of `s^power`.
    pub fn coefficient(&self, power: usize) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.coeff(power)).collect()).collect()
    }

    /// Highest-column-degree coefficient matrix; zero columns contribute zeros.
    pub fn leading_column_matrix(&self) -> Vec<Vec<Rat>> {
        let degs = self.column_degrees();
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| if degs[j] < 0 { Rat::zero() } else { self[(i, j)].coeff(degs[j] as usize) })
                    .collect()
            })
            .collect()
    }

    pub fn eval(&self, x: &Rat) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.eval(x)).collect()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        self.map(|p| p * c)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let all: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&all, cols)
    }

    pub fn select_rows(&self, rows: &[usize]) -> PolyMatrix {
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &all)
    }

    pub fn hstack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "hstack row count");
        PolyMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    pub fn vstack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.cols, "vstack column count");
        PolyMatrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows { self[(i, j)].clone() } else { other[(i - self.rows, j)].clone() }
        })
    }

    pub fn block_diagonal(blocks: &[PolyMatrix]) -> PolyMatrix {
        let m = blocks.iter().map(|b| b.rows).sum();
        let n = blocks.iter().map(|b| b.cols).sum();
        let mut out = PolyMatrix::zeros(m, n);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor · row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Poly) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self[(source, j)] * factor;
            if !t.is_zero() {
                let e = &mut self[(target, j)];
                *e = &*e + &t;
            }
        }
    }

    /// `col[target] += factor · col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Poly) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self[(i, source)] * factor;
            if !t.is_zero() {
                let e = &mut self[(i, target)];
                *e = &*e + &t;
            }
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &Rat) {
        for j in 0..self.cols {
            self[(i, j)] = self[(i, j)].scale(c);
        }
    }

    pub fn scale_col(&mut self, j: usize, c: &Rat) {
        for i in 0..self.rows {
            self[(i, j)] = self[(i, j)].scale(c);
        }
    }

    /// Rank over the rational function field.
    ///
    /// A nonzero minor of order `k` has degree at most `k·deg`, so it cannot vanish
    /// at `k·deg + 1` distinct points; the maximum evaluated rank is exact.
    pub fn rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        if full == 0 || self.is_zero() {
            return 0;
        }
        let d = self.degree().max(0) as usize;
        let mut best = 0;
        for x in 0..=(full * d) as i64 {
            best = best.max(field::rank(&self.eval(&crate::poly::rat(x))));
            if best == full {
                break;
            }
        }
        best
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "product shape");
        let mut out = PolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let e = &mut out[(i, j)];
                    *e = &*e + &(a * b);
                }
            }
        }
        out
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.shape(), rhs.shape(), "sum shape");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self + &(-rhs)
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|p| -p)
    }
}

impl Mul for PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: PolyMatrix) -> PolyMatrix {
        &self * &rhs
    }
}

impl Zero for PolyMatrix {
    fn zero() -> Self {
        PolyMatrix::zeros(0, 0)
    }
    fn is_zero(&self) -> bool {
        PolyMatrix::is_zero(self)
    }
}

impl Add for PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: PolyMatrix) -> PolyMatrix {
        &self + &rhs
    }
}
