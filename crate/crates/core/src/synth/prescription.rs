use crate::error::{Error, Result};
use crate::matrix::{is_minimal_basis, PolyMatrix};
use crate::poly::Poly;

/// Which of the existence problems a prescription poses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Invariant factors, infinite structure, degree and explicit span bases.
    P1Spans,
    /// As `P1Spans` with span minimal indices instead of bases.
    P2SpanIndices,
    /// As `P2SpanIndices` plus right and left minimal indices.
    P3Full,
    R1Spans,
    R2SpanIndices,
    R3Full,
    /// Invariant factors, infinite structure, degree and null-space indices only.
    Eigenstructure,
}

impl Variant {
    pub const ALL: [Variant; 7] = [
        Variant::P1Spans,
        Variant::P2SpanIndices,
        Variant::P3Full,
        Variant::R1Spans,
        Variant::R2SpanIndices,
        Variant::R3Full,
        Variant::Eigenstructure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::P1Spans => "P1_spans",
            Variant::P2SpanIndices => "P2_span_indices",
            Variant::P3Full => "P3_full",
            Variant::R1Spans => "R1_spans",
            Variant::R2SpanIndices => "R2_span_indices",
            Variant::R3Full => "R3_full",
            Variant::Eigenstructure => "eigenstructure",
        }
    }

    pub fn from_name(name: &str) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.name().eq_ignore_ascii_case(name))
    }

    pub fn is_rational(self) -> bool {
        matches!(self, Variant::R1Spans | Variant::R2SpanIndices | Variant::R3Full)
    }

    pub fn has_bases(self) -> bool {
        matches!(self, Variant::P1Spans | Variant::R1Spans)
    }

    pub fn has_span_indices(self) -> bool {
        matches!(self, Variant::P2SpanIndices | Variant::P3Full | Variant::R2SpanIndices | Variant::R3Full)
    }

    pub fn has_null_indices(self) -> bool {
        matches!(self, Variant::P3Full | Variant::R3Full | Variant::Eigenstructure)
    }
}

/// Finite and infinite structure, polynomial or rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invariants {
    Polynomial { degree: i64, alpha: Vec<Poly>, f: Vec<usize> },
    Rational { eps: Vec<Poly>, psi: Vec<Poly>, q: Vec<i64> },
}

/// Column-space and row-space data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanData {
    /// `k` is `m × r`, `lt` is `n × r`; both minimal bases.
    Bases { k: PolyMatrix, lt: PolyMatrix },
    Indices { k: Vec<usize>, l: Vec<usize> },
    Absent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prescription {
    pub variant: Variant,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub invariants: Invariants,
    pub span: SpanData,
    /// Right minimal indices, descending; empty unless the variant prescribes them.
    pub right: Vec<usize>,
    /// Left minimal indices, descending.
    pub left: Vec<usize>,
}

/// Polynomial data equivalent to a prescription, after clearing `ψ_1` in the rational case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyData {
    pub degree: i64,
    pub alpha: Vec<Poly>,
    pub f: Vec<usize>,
    /// `ψ_1`, or one for polynomial prescriptions.
    pub clearing_denominator: Poly,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedPrescription(msg.into())
}

fn check_desc(name: &str, xs: &[usize]) -> Result<()> {
    if xs.windows(2).any(|w| w[0] < w[1]) {
        return Err(malformed(format!("{name} must be non-increasing, got {xs:?}")));
    }
    Ok(())
}

fn check_len(name: &str, len: usize, want: usize) -> Result<()> {
    if len != want {
        return Err(malformed(format!("{name} has length {len}, expected {want}")));
    }
    Ok(())
}

fn check_chain(name: &str, ps: &[Poly], ascending: bool) -> Result<()> {
    for (i, p) in ps.iter().enumerate() {
        if !p.is_monic() {
            return Err(malformed(format!("{name}[{}] = {p} is not monic", i + 1)));
        }
    }
    for w in ps.windows(2) {
        let (small, big) = if ascending { (&w[0], &w[1]) } else { (&w[1], &w[0]) };
        if !small.divides(big) {
            return Err(malformed(format!("{name} violates the divisibility chain at {small} ∤ {big}")));
        }
    }
    Ok(())
}

fn sorted_desc(mut xs: Vec<usize>) -> Vec<usize> {
    xs.sort_unstable_by(|a, b| b.cmp(a));
    xs
}

impl Prescription {
    /// Column-space and row-space minimal indices, read off the bases when supplied.
    pub fn span_indices(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        match &self.span {
            SpanData::Indices { k, l } => Some((k.clone(), l.clone())),
            SpanData::Bases { k, lt } => {
                let degs = |b: &PolyMatrix| sorted_desc(b.column_degrees().iter().map(|&d| d.max(0) as usize).collect());
                Some((degs(k), degs(lt)))
            }
            SpanData::Absent => None,
        }
    }

    pub fn poly_data(&self) -> PolyData {
        match &self.invariants {
            Invariants::Polynomial { degree, alpha, f } => {
                PolyData { degree: *degree, alpha: alpha.clone(), f: f.clone(), clearing_denominator: Poly::one() }
            }
            Invariants::Rational { eps, psi, q } => {
                let psi1 = psi.first().cloned().unwrap_or_else(Poly::one);
                let alpha = eps
                    .iter()
                    .zip(psi)
                    .map(|(e, p)| (&psi1 * e).exact_div(p).expect("ψ_i divides ψ_1"))
                    .collect();
                let q1 = q.first().copied().unwrap_or(0);
                PolyData {
                    degree: psi1.deg() - q1,
                    alpha,
                    f: q.iter().map(|&x| (x - q1) as usize).collect(),
                    clearing_denominator: psi1,
                }
            }
        }
    }

    /// Type invariants: shapes, sortedness, divisibility chains, minimal bases.
    pub fn validate(&self) -> Result<()> {
        let (m, n, r) = (self.m, self.n, self.r);
        if m == 0 || n == 0 || r == 0 {
            return Err(malformed("m, n and r must be positive"));
        }
        if r > m.min(n) {
            return Err(malformed(format!("rank {r} exceeds min(m, n) = {}", m.min(n))));
        }
        match (&self.invariants, self.variant.is_rational()) {
            (Invariants::Polynomial { degree, alpha, f }, false) => {
                if *degree < 0 {
                    return Err(malformed("degree must be non-negative"));
                }
                check_len("alpha", alpha.len(), r)?;
                check_len("f", f.len(), r)?;
                check_chain("alpha", alpha, true)?;
                if f.windows(2).any(|w| w[0] > w[1]) {
                    return Err(malformed(format!("f must be non-decreasing, got {f:?}")));
                }
            }
            (Invariants::Rational { eps, psi, q }, true) => {
                check_len("eps", eps.len(), r)?;
                check_len("psi", psi.len(), r)?;
                check_len("q", q.len(), r)?;
                check_chain("eps", eps, true)?;
                check_chain("psi", psi, false)?;
                for (i, (e, p)) in eps.iter().zip(psi).enumerate() {
                    if !e.gcd(p)?.is_one() {
                        return Err(malformed(format!("eps[{0}]/psi[{0}] is not reduced", i + 1)));
                    }
                }
                if q.windows(2).any(|w| w[0] > w[1]) {
                    return Err(malformed(format!("q must be non-decreasing, got {q:?}")));
                }
            }
            _ => return Err(malformed("invariant data does not match the variant")),
        }
        match (&self.span, self.variant) {
            (SpanData::Bases { k, lt }, v) if v.has_bases() => {
                if k.shape() != (m, r) || lt.shape() != (n, r) {
                    return Err(malformed(format!(
                        "bases must be {m}×{r} and {n}×{r}, got {:?} and {:?}",
                        k.shape(),
                        lt.shape()
                    )));
                }
                if !is_minimal_basis(k).0 {
                    return Err(malformed("K is not a minimal basis"));
                }
                if !is_minimal_basis(lt).0 {
                    return Err(malformed("Lt is not a minimal basis"));
                }
            }
            (SpanData::Indices { k, l }, v) if v.has_span_indices() => {
                check_len("k", k.len(), r)?;
                check_len("l", l.len(), r)?;
                check_desc("k", k)?;
                check_desc("l", l)?;
            }
            (SpanData::Absent, Variant::Eigenstructure) => {}
            _ => return Err(malformed("span data does not match the variant")),
        }
        if self.variant.has_null_indices() {
            check_len("right", self.right.len(), n - r)?;
            check_len("left", self.left.len(), m - r)?;
            check_desc("right", &self.right)?;
            check_desc("left", &self.left)?;
        } else if !self.right.is_empty() || !self.left.is_empty() {
            return Err(malformed("null-space indices are not part of this variant"));
        }
        Ok(())
    }
}
