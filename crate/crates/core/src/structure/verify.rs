use std::fmt::Display;

use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, RationalMatrix};
use crate::synth::{Invariants, Prescription, SpanData};

use super::{extract_poly_structure, extract_rational_structure};

/// A constructed matrix, polynomial or rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    Poly(PolyMatrix),
    Rational(RationalMatrix),
}

impl Realization {
    pub fn shape(&self) -> (usize, usize) {
        match self {
            Realization::Poly(p) => p.shape(),
            Realization::Rational(r) => (r.rows(), r.cols()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub field: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub pass: bool,
    pub mismatches: Vec<Mismatch>,
}

fn list<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn desc(xs: &[usize]) -> Vec<usize> {
    let mut v = xs.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

struct Collector(Vec<Mismatch>);

impl Collector {
    fn cmp<T: Display + PartialEq>(&mut self, field: &str, expected: &[T], found: &[T]) {
        if expected != found {
            self.0.push(Mismatch { field: field.into(), expected: list(expected), found: list(found) });
        }
    }

    /// `given` spans the same module as the extracted minimal basis.
    fn same_span(&mut self, field: &str, given: &PolyMatrix, found: &PolyMatrix) {
        let r = found.cols();
        if given.shape() != found.shape() || given.hstack(found).rank() != r {
            self.0.push(Mismatch {
                field: field.into(),
                expected: format!("span of the prescribed {}×{} basis", given.rows(), given.cols()),
                found: format!("a different {}×{} minimal basis", found.rows(), found.cols()),
            });
        }
    }
}

/// Re-extracts every invariant of `realization` and compares it with `p`.
pub fn verify(realization: &Realization, p: &Prescription) -> Result<VerifyReport> {
    if realization.shape() != (p.m, p.n) {
        return Err(Error::ShapeMismatch(format!(
            "matrix is {:?}, prescription is {}×{}",
            realization.shape(),
            p.m,
            p.n
        )));
    }
    let mut c = Collector(Vec::new());
    let (rank, col_idx, row_idx, right, left, col_basis, row_basis) = match (realization, &p.invariants) {
        (Realization::Poly(a), Invariants::Polynomial { degree, alpha, f }) => {
            let sd = extract_poly_structure(a)?;
            if sd.rank == p.r {
                c.cmp("degree", &[*degree], &[sd.degree]);
                c.cmp("invariant_factors", alpha, &sd.invariant_factors);
                c.cmp("inf_partial_mults", f, &sd.inf_partial_mults);
            }
            (sd.rank, sd.colspan_indices, sd.rowspan_indices, sd.right_indices, sd.left_indices, sd.colspan_basis, sd.rowspan_basis)
        }
        (Realization::Rational(r), Invariants::Rational { eps, psi, q }) => {
            let sd = extract_rational_structure(r)?;
            if sd.rank == p.r {
                c.cmp("numerators", eps, &sd.numerators);
                c.cmp("denominators", psi, &sd.denominators);
                c.cmp("inf_orders", q, &sd.inf_orders);
            }
            (sd.rank, sd.colspan_indices, sd.rowspan_indices, sd.right_indices, sd.left_indices, sd.colspan_basis, sd.rowspan_basis)
        }
        _ => return Err(Error::PreconditionViolated("matrix kind does not match the prescription".into())),
    };
    c.cmp("rank", &[p.r], &[rank]);
    if rank == p.r {
        match &p.span {
            SpanData::Indices { k, l } => {
                c.cmp("colspan_indices", &desc(k), &desc(&col_idx));
                c.cmp("rowspan_indices", &desc(l), &desc(&row_idx));
            }
            SpanData::Bases { k, lt } => {
                c.same_span("colspan_basis", k, &col_basis);
                c.same_span("rowspan_basis", lt, &row_basis);
            }
            SpanData::Absent => {}
        }
        if p.variant.has_null_indices() {
            c.cmp("right_indices", &desc(&p.right), &desc(&right));
            c.cmp("left_indices", &desc(&p.left), &desc(&left));
        }
    }
    Ok(VerifyReport { pass: c.0.is_empty(), mismatches: c.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::synth::Variant;

    fn spans(k: PolyMatrix, lt: PolyMatrix, alpha: Vec<Poly>, degree: i64) -> Prescription {
        Prescription {
            variant: Variant::P1Spans,
            m: k.rows(),
            n: lt.rows(),
            r: alpha.len(),
            invariants: Invariants::Polynomial { degree, f: vec![0; alpha.len()], alpha },
            span: SpanData::Bases { k, lt },
            right: vec![],
            left: vec![],
        }
    }

    #[test]
    fn outer_product_spans() {
        // A = [s; 1]·[1 s]
        let k = PolyMatrix::from_int_rows(&[&[&[0, 1]], &[&[1]]]);
        let lt = PolyMatrix::from_int_rows(&[&[&[1]], &[&[0, 1]]]);
        let a = &k * &lt.transpose();
        let p = spans(k.clone(), lt.clone(), vec![Poly::one()], 2);
        assert!(verify(&Realization::Poly(a.clone()), &p).unwrap().pass);

        let other = spans(lt.clone(), lt, vec![Poly::one()], 2);
        let report = verify(&Realization::Poly(a.clone()), &other).unwrap();
        assert_eq!(report.mismatches.iter().map(|m| m.field.as_str()).collect::<Vec<_>>(), vec!["colspan_basis"]);

        let wrong_degree = spans(k, PolyMatrix::from_int_rows(&[&[&[1]], &[&[0, 1]]]), vec![Poly::one()], 3);
        assert!(!verify(&Realization::Poly(a.clone()), &wrong_degree).unwrap().pass);

        let tall = spans(PolyMatrix::identity(3).select_columns(&[0]), PolyMatrix::identity(2).select_columns(&[0]), vec![Poly::one()], 0);
        assert!(matches!(verify(&Realization::Poly(a), &tall), Err(Error::ShapeMismatch(_))));
    }
}
