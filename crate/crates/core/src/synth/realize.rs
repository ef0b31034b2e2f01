use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{mobius_frame, scale_basis_mobius, PolyMatrix, RationalMatrix};
use crate::poly::{mobius_tilde, rat, Poly, Rat};
use crate::structure::{verify, Realization};

use super::bases::{build_dual_minimal_bases, build_minimal_basis};
use super::distribute::distribute_invariant_factors;
use super::feasibility::check_feasibility;
use super::prescription::{Prescription, SpanData, Variant};
use super::shape::shape_degrees;
use super::triangular::{triangular_realization_with, SearchConfig};

fn degrees(b: &PolyMatrix) -> Vec<usize> {
    b.column_degrees().iter().map(|&d| d.max(0) as usize).collect()
}

/// Columns reordered by non-increasing degree, stable.
fn sorted_by_degree(b: &PolyMatrix) -> PolyMatrix {
    let degs = degrees(b);
    let mut order: Vec<usize> = (0..b.cols()).collect();
    order.sort_by(|&x, &y| degs[y].cmp(&degs[x]).then(x.cmp(&y)));
    b.select_columns(&order)
}

/// The middle factor `E` and the assembled `K·E·L` for prescribed bases,
/// invariant factors and degree, with no eigenvalue at infinity.
pub struct ZeroInfRealization {
    pub middle: PolyMatrix,
    pub matrix: PolyMatrix,
    /// Diagonal degrees `d - (k_{r-i+1} + ℓ_i)`.
    pub diagonal_degrees: Vec<usize>,
}

pub fn solve_zero_inf(
    k_basis: &PolyMatrix,
    lt_basis: &PolyMatrix,
    alpha: &[Poly],
    degree: i64,
    cfg: SearchConfig,
) -> Result<ZeroInfRealization> {
    let r = alpha.len();
    let k_basis = sorted_by_degree(k_basis);
    let lt_basis = sorted_by_degree(lt_basis);
    let (k, l) = (degrees(&k_basis), degrees(&lt_basis));
    let h: Vec<usize> = (0..r)
        .map(|i| {
            let g = (k[r - 1 - i] + l[i]) as i64;
            usize::try_from(degree - g).map_err(|_| Error::Infeasible("eqprec".into()))
        })
        .collect::<Result<_>>()?;
    let delta = distribute_invariant_factors(alpha, &h)?;
    let triangular = triangular_realization_with(alpha, &delta, cfg)?;
    let middle = shape_degrees(&triangular, &h)?;
    let reversed: Vec<usize> = (0..r).rev().collect();
    let matrix = &(&k_basis.select_columns(&reversed) * &middle) * &lt_basis.transpose();
    Ok(ZeroInfRealization { middle, matrix, diagonal_degrees: h })
}

/// Smallest non-negative integer that is a root of none of `avoid`.
fn mobius_point(avoid: &[&Poly]) -> Rat {
    (0i64..).map(rat).find(|a| avoid.iter().all(|p| !p.eval(a).is_zero())).expect("finitely many roots")
}

fn realize_poly_data(
    k_basis: &PolyMatrix,
    lt_basis: &PolyMatrix,
    alpha: &[Poly],
    f: &[usize],
    degree: i64,
    avoid: &Poly,
    cfg: SearchConfig,
) -> Result<PolyMatrix> {
    if f.iter().all(|&x| x == 0) {
        return Ok(solve_zero_inf(k_basis, lt_basis, alpha, degree, cfg)?.matrix);
    }
    let last = alpha.last().expect("positive rank");
    let a = mobius_point(&[last, avoid]);
    let beta: Vec<Poly> = alpha
        .iter()
        .zip(f)
        .map(|(al, &fi)| {
            let (tilde, c) = mobius_tilde(al, &a)?;
            Ok(tilde.scale(&c.recip()).shift(fi))
        })
        .collect::<Result<_>>()?;
    let kbar = scale_basis_mobius(k_basis, &a, &degrees(k_basis))?;
    let lbar = scale_basis_mobius(lt_basis, &a, &degrees(lt_basis))?;
    let b = solve_zero_inf(&kbar, &lbar, &beta, degree, cfg)?.matrix;
    mobius_frame(&b, &a, degree)
}

/// Column-space and row-space bases for a prescription, built from indices when needed.
fn span_bases(p: &Prescription) -> Result<(PolyMatrix, PolyMatrix)> {
    match &p.span {
        SpanData::Bases { k, lt } => Ok((k.clone(), lt.clone())),
        SpanData::Indices { k, l } if p.variant.has_null_indices() => {
            let kb = if p.m > p.r { build_dual_minimal_bases(k, &p.left)?.0 } else { build_minimal_basis(k, p.m)? };
            let lb = if p.n > p.r { build_dual_minimal_bases(l, &p.right)?.0 } else { build_minimal_basis(l, p.n)? };
            Ok((kb, lb))
        }
        SpanData::Indices { k, l } => Ok((build_minimal_basis(k, p.m)?, build_minimal_basis(l, p.n)?)),
        SpanData::Absent => Err(Error::PreconditionViolated("eigenstructure prescriptions are check-only".into())),
    }
}

fn gate(p: &Prescription) -> Result<()> {
    let report = check_feasibility(p)?;
    if !report.feasible {
        let names: Vec<&str> = report.failing().iter().map(|c| c.label()).collect();
        return Err(Error::Infeasible(names.join(", ")));
    }
    Ok(())
}

fn realize_polynomial(p: &Prescription, cfg: SearchConfig) -> Result<PolyMatrix> {
    let (k, lt) = span_bases(p)?;
    let data = p.poly_data();
    realize_poly_data(&k, &lt, &data.alpha, &data.f, data.degree, &data.clearing_denominator, cfg)
}

/// P1 or P2 prescription with no eigenvalue at infinity.
pub fn realize_span_zero_inf(p: &Prescription) -> Result<PolyMatrix> {
    if !matches!(p.variant, Variant::P1Spans | Variant::P2SpanIndices) {
        return Err(Error::PreconditionViolated(format!("{} is not a span prescription", p.variant.name())));
    }
    gate(p)?;
    let (k, lt) = span_bases(p)?;
    let data = p.poly_data();
    if data.f.iter().any(|&x| x != 0) {
        return Err(Error::PreconditionViolated("infinite partial multiplicities must all vanish".into()));
    }
    Ok(solve_zero_inf(&k, &lt, &data.alpha, data.degree, SearchConfig::from_env(0))?.matrix)
}

pub fn realize_span(p: &Prescription) -> Result<PolyMatrix> {
    if !matches!(p.variant, Variant::P1Spans | Variant::P2SpanIndices) {
        return Err(Error::PreconditionViolated(format!("{} is not a span prescription", p.variant.name())));
    }
    gate(p)?;
    realize_polynomial(p, SearchConfig::from_env(0))
}

pub fn realize_full(p: &Prescription) -> Result<PolyMatrix> {
    if p.variant != Variant::P3Full {
        return Err(Error::PreconditionViolated(format!("{} is not a full prescription", p.variant.name())));
    }
    gate(p)?;
    realize_polynomial(p, SearchConfig::from_env(0))
}

/// `A/ψ_1` where `A` realizes the polynomial data obtained by clearing `ψ_1`.
pub fn realize_rational(p: &Prescription) -> Result<RationalMatrix> {
    if !p.variant.is_rational() {
        return Err(Error::PreconditionViolated(format!("{} is not a rational prescription", p.variant.name())));
    }
    gate(p)?;
    let a = realize_polynomial(p, SearchConfig::from_env(0))?;
    Ok(RationalMatrix::from_poly_over(&a, &p.poly_data().clearing_denominator))
}

/// Feasibility gate, construction for the variant, then verification by re-extraction.
pub fn construct(p: &Prescription, cfg: SearchConfig, check: bool) -> Result<Realization> {
    gate(p)?;
    let a = realize_polynomial(p, cfg)?;
    let out = if p.variant.is_rational() {
        Realization::Rational(RationalMatrix::from_poly_over(&a, &p.poly_data().clearing_denominator))
    } else {
        Realization::Poly(a)
    };
    if check {
        let report = verify(&out, p)?;
        if !report.pass {
            let fields: Vec<&str> = report.mismatches.iter().map(|m| m.field.as_str()).collect();
            return Err(Error::IdentityViolated(format!("construction failed verification on {}", fields.join(", "))));
        }
    }
    Ok(out)
}
