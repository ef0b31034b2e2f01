use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, RationalMatrix};
use crate::poly::{Poly, RatFn};

use super::{extract_poly_structure, PolyStructuralData};

/// Smith–McMillan data of a rational matrix plus its four minimal bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatStructuralData {
    pub m: usize,
    pub n: usize,
    pub rank: usize,
    /// Monic least common denominator of the entries, equal to `ψ_1`.
    pub clearing_denominator: Poly,
    pub numerators: Vec<Poly>,
    pub denominators: Vec<Poly>,
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

impl RatStructuralData {
    /// `Σk + Σℓ + Σdeg ε - Σdeg ψ + Σq`, which vanishes for every rational matrix.
    pub fn index_sum(&self) -> i64 {
        let k: usize = self.colspan_indices.iter().sum();
        let l: usize = self.rowspan_indices.iter().sum();
        let e: i64 = self.numerators.iter().map(Poly::deg).sum();
        let p: i64 = self.denominators.iter().map(Poly::deg).sum();
        let q: i64 = self.inf_orders.iter().sum();
        k as i64 + l as i64 + e - p + q
    }

    /// Data mapped back from the cleared polynomial matrix `ψ_1 R`.
    pub fn from_cleared(psi1: &Poly, poly: PolyStructuralData) -> Self {
        let shift = psi1.deg();
        let (numerators, denominators) = poly
            .invariant_factors
            .iter()
            .map(|a| {
                let f = RatFn::new(a.clone(), psi1.clone()).expect("nonzero denominator");
                (f.num().clone(), f.den().clone())
            })
            .unzip();
        RatStructuralData {
            m: poly.m,
            n: poly.n,
            rank: poly.rank,
            clearing_denominator: psi1.clone(),
            numerators,
            denominators,
            inf_orders: poly.inf_orders.iter().map(|q| q + shift).collect(),
            colspan_indices: poly.colspan_indices,
            rowspan_indices: poly.rowspan_indices,
            right_indices: poly.right_indices,
            left_indices: poly.left_indices,
            colspan_basis: poly.colspan_basis,
            rowspan_basis: poly.rowspan_basis,
            right_null_basis: poly.right_null_basis,
            left_null_basis: poly.left_null_basis,
        }
    }
}

/// `(ψ_1, ψ_1 · R)` with `ψ_1` the monic least common denominator.
pub fn clear_denominators(r: &RationalMatrix) -> Result<(Poly, PolyMatrix)> {
    if r.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let psi1 = r.common_denominator();
    let p = r.times_poly(&psi1).expect("common denominator clears every entry");
    Ok((psi1, p))
}

pub fn extract_rational_structure(r: &RationalMatrix) -> Result<RatStructuralData> {
    let (psi1, p) = clear_denominators(r)?;
    let data = RatStructuralData::from_cleared(&psi1, extract_poly_structure(&p)?);
    if data.index_sum() != 0 {
        return Err(Error::IdentityViolated(format!("rational index sum is {}", data.index_sum())));
    }
    Ok(data)
}
