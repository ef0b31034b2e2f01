use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{column_reduce, invariant_factors, reversal, smith_form, PolyMatrix, SmithDecomposition};
use crate::poly::{Poly, Rat};

/// One of the four fundamental subspaces of a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subspace {
    ColSpan,
    RowSpan,
    RightNull,
    LeftNull,
}

/// Degree, partial multiplicities at infinity (ascending) and orders `f_i - d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfStructure {
    pub degree: i64,
    pub partial_mults: Vec<usize>,
    pub orders: Vec<i64>,
}

/// Complete structural data of a polynomial matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyStructuralData {
    pub m: usize,
    pub n: usize,
    pub rank: usize,
    pub degree: i64,
    pub invariant_factors: Vec<Poly>,
    pub inf_partial_mults: Vec<usize>,
    pub inf_orders: Vec<i64>,
    pub colspan_indices: Vec<usize>,
    pub rowspan_indices: Vec<usize>,
    pub right_indices: Vec<usize>,
    pub left_indices: Vec<usize>,
    pub colspan_basis: PolyMatrix,
    pub rowspan_basis: PolyMatrix,
    pub right_null_basis: PolyMatrix,
    pub left_null_basis: PolyMatrix,
}

/// A structural identity evaluated on extracted data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: &'static str,
    pub lhs: i64,
    pub rhs: i64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn total(xs: &[usize]) -> i64 {
    xs.iter().sum::<usize>() as i64
}

impl PolyStructuralData {
    pub fn invariant_degree_sum(&self) -> i64 {
        self.invariant_factors.iter().map(Poly::deg).sum()
    }

    /// `f_1 = 0`, both dual-sum identities, the span index sum and the index sum theorem.
    pub fn identities(&self) -> Vec<IdentityCheck> {
        let rd = self.rank as i64 * self.degree;
        let f = total(&self.inf_partial_mults);
        let a = self.invariant_degree_sum();
        vec![
            IdentityCheck { label: "eqf1", lhs: self.inf_partial_mults.first().map_or(0, |&x| x as i64), rhs: 0 },
            IdentityCheck { label: "eqsums_left", lhs: total(&self.left_indices), rhs: total(&self.colspan_indices) },
            IdentityCheck { label: "eqsums_right", lhs: total(&self.right_indices), rhs: total(&self.rowspan_indices) },
            IdentityCheck {
                label: "eqsumklfa",
                lhs: total(&self.colspan_indices) + total(&self.rowspan_indices) + f + a,
                rhs: rd,
            },
            IdentityCheck {
                label: "eqIST",
                lhs: total(&self.right_indices) + total(&self.left_indices) + f + a,
                rhs: rd,
            },
        ]
    }
}

/// Valuations at `λ` of the invariant factors, ascending.
pub fn partial_multiplicities(p: &PolyMatrix, lambda: &Rat) -> Result<Vec<usize>> {
    if p.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    Ok(invariant_factors(p).iter().map(|a| a.root_multiplicity(lambda)).collect())
}

pub fn inf_structure(p: &PolyMatrix) -> Result<InfStructure> {
    let rev = reversal(p)?;
    let degree = p.degree();
    let partial_mults = partial_multiplicities(&rev, &Rat::zero())?;
    let orders = partial_mults.iter().map(|&f| f as i64 - degree).collect();
    Ok(InfStructure { degree, partial_mults, orders })
}

/// Scales each column so the first nonzero entry of its leading coefficient
/// vector is one, then sorts columns by degree (descending) and coefficients.
pub fn normalize_basis(basis: &PolyMatrix) -> PolyMatrix {
    let mut cols: Vec<Vec<Poly>> = (0..basis.cols()).map(|j| basis.column(j)).collect();
    for col in &mut cols {
        let deg = col.iter().map(Poly::deg).max().unwrap_or(crate::poly::NEG_INF);
        if deg < 0 {
            continue;
        }
        let lead = col.iter().map(|p| p.coeff(deg as usize)).find(|c| !c.is_zero()).expect("degree attained");
        if !lead.is_one() {
            let inv = lead.recip();
            for p in col.iter_mut() {
                *p = p.scale(&inv);
            }
        }
    }
    let key = |col: &Vec<Poly>| col.iter().map(Poly::deg).max().unwrap_or(crate::poly::NEG_INF);
    cols.sort_by(|a, b| match key(b).cmp(&key(a)) {
        Ordering::Equal => {
            let ca: Vec<&[Rat]> = a.iter().map(Poly::coeffs).collect();
            let cb: Vec<&[Rat]> = b.iter().map(Poly::coeffs).collect();
            ca.cmp(&cb)
        }
        other => other,
    });
    PolyMatrix::from_fn(basis.rows(), basis.cols(), |i, j| cols[j][i].clone())
}

fn reduced_basis(raw: PolyMatrix) -> (PolyMatrix, Vec<usize>) {
    if raw.cols() == 0 {
        return (raw, Vec::new());
    }
    let reduced = column_reduce(&raw).expect("unimodular columns have full rank").reduced;
    let basis = normalize_basis(&reduced);
    let indices = basis.column_degrees().into_iter().map(|d| d as usize).collect();
    (basis, indices)
}

fn basis_from_smith(sd: &SmithDecomposition, which: Subspace) -> (PolyMatrix, Vec<usize>) {
    let r = sd.rank;
    let m = sd.left.rows();
    let n = sd.right.rows();
    let raw = match which {
        Subspace::ColSpan => sd.left_inv.select_columns(&(0..r).collect::<Vec<_>>()),
        Subspace::RowSpan => sd.right_inv.select_rows(&(0..r).collect::<Vec<_>>()).transpose(),
        Subspace::RightNull => sd.right.select_columns(&(r..n).collect::<Vec<_>>()),
        Subspace::LeftNull => sd.left.select_rows(&(r..m).collect::<Vec<_>>()).transpose(),
    };
    reduced_basis(raw)
}

/// Minimal basis (as columns) of one fundamental subspace, with its sorted indices.
///
/// Submatrices of the unimodular Smith transformers have trivial invariant
/// factors, so column reduction alone makes them minimal.
pub fn subspace_minimal_basis(p: &PolyMatrix, which: Subspace) -> (PolyMatrix, Vec<usize>) {
    basis_from_smith(&smith_form(p), which)
}

pub fn extract_poly_structure(p: &PolyMatrix) -> Result<PolyStructuralData> {
    if p.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let sd = smith_form(p);
    let inf = inf_structure(p)?;
    let (colspan_basis, colspan_indices) = basis_from_smith(&sd, Subspace::ColSpan);
    let (rowspan_basis, rowspan_indices) = basis_from_smith(&sd, Subspace::RowSpan);
    let (right_null_basis, right_indices) = basis_from_smith(&sd, Subspace::RightNull);
    let (left_null_basis, left_indices) = basis_from_smith(&sd, Subspace::LeftNull);
    let data = PolyStructuralData {
        m: p.rows(),
        n: p.cols(),
        rank: sd.rank,
        degree: inf.degree,
        invariant_factors: sd.diag,
        inf_partial_mults: inf.partial_mults,
        inf_orders: inf.orders,
        colspan_indices,
        rowspan_indices,
        right_indices,
        left_indices,
        colspan_basis,
        rowspan_basis,
        right_null_basis,
        left_null_basis,
    };
    if let Some(bad) = data.identities().into_iter().find(|c| !c.holds()) {
        return Err(Error::IdentityViolated(format!("{}: {} != {}", bad.label, bad.lhs, bad.rhs)));
    }
    Ok(data)
}
