use std::fmt;

use crate::poly::{Poly, RatFn};

use super::PolyMatrix;

/// Dense matrix of rational functions stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFn>,
}

impl RationalMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<RatFn>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_poly(p: &PolyMatrix) -> Self {
        RationalMatrix {
            rows: p.rows(),
            cols: p.cols(),
            entries: p.entries().iter().cloned().map(RatFn::from_poly).collect(),
        }
    }

    /// `p / denominator` entrywise.
    pub fn from_poly_over(p: &PolyMatrix, denominator: &Poly) -> Self {
        RationalMatrix {
            rows: p.rows(),
            cols: p.cols(),
            entries: p
                .entries()
                .iter()
                .map(|e| RatFn::new(e.clone(), denominator.clone()).expect("nonzero denominator"))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[RatFn] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFn::is_zero)
    }

    /// Monic least common multiple of the entry denominators.
    pub fn common_denominator(&self) -> Poly {
        self.entries.iter().fold(Poly::one(), |acc, e| acc.lcm(e.den()))
    }

    /// `scale · self`, which must be polynomial entrywise.
    pub fn times_poly(&self, scale: &Poly) -> Option<PolyMatrix> {
        let entries = self.entries.iter().map(|e| e.times_poly(scale)).collect::<Option<Vec<_>>>()?;
        Some(PolyMatrix::from_entries(self.rows, self.cols, entries))
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = RatFn;
    fn index(&self, (i, j): (usize, usize)) -> &RatFn {
        &self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
