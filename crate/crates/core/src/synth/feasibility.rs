use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::Poly;

use super::prescription::{Invariants, Prescription, Variant};

/// The conditions a prescription may be tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    Eqf1,
    Eqprec,
    Eqx0,
    Eqy0,
    Eqsums,
    EqIST,
    EqprecRat,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::Eqf1,
        Condition::Eqprec,
        Condition::Eqx0,
        Condition::Eqy0,
        Condition::Eqsums,
        Condition::EqIST,
        Condition::EqprecRat,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Condition::Eqf1 => "eqf1",
            Condition::Eqprec => "eqprec",
            Condition::Eqx0 => "eqx>0",
            Condition::Eqy0 => "eqy>0",
            Condition::Eqsums => "eqsums",
            Condition::EqIST => "eqIST",
            Condition::EqprecRat => "eqprec_rat1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not_applicable",
        }
    }

    fn of(ok: bool) -> Verdict {
        if ok { Verdict::Pass } else { Verdict::Fail }
    }
}

/// Verdict plus the compared quantities: partial sums for majorizations,
/// otherwise the raw values on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub verdict: Verdict,
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
}

impl ConditionResult {
    fn not_applicable() -> Self {
        ConditionResult { verdict: Verdict::NotApplicable, lhs: Vec::new(), rhs: Vec::new() }
    }

    /// An implication whose hypothesis is false.
    fn vacuous() -> Self {
        ConditionResult { verdict: Verdict::Pass, lhs: Vec::new(), rhs: Vec::new() }
    }

    fn equal(lhs: Vec<i64>, rhs: Vec<i64>) -> Self {
        ConditionResult { verdict: Verdict::of(lhs == rhs), lhs, rhs }
    }

    fn majorization(a: &[i64], b: &[i64]) -> Self {
        let ok = is_majorized_by(a, b).expect("equal lengths");
        ConditionResult { verdict: Verdict::of(ok), lhs: partial_sums(a), rhs: partial_sums(b) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub variant: Variant,
    pub feasible: bool,
    /// Empty when the variant prescribes no span data.
    pub g_sequence: Vec<usize>,
    pub conditions: BTreeMap<Condition, ConditionResult>,
}

impl FeasibilityReport {
    pub fn failing(&self) -> Vec<Condition> {
        self.conditions.iter().filter(|(_, r)| r.verdict == Verdict::Fail).map(|(c, _)| *c).collect()
    }

    pub fn verdict(&self, c: Condition) -> Verdict {
        self.conditions.get(&c).map_or(Verdict::NotApplicable, |r| r.verdict)
    }
}

pub fn partial_sums(a: &[i64]) -> Vec<i64> {
    a.iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// `a ≺ b`: every leading partial sum of `a` is at most that of `b`, with equal totals.
pub fn is_majorized_by(a: &[i64], b: &[i64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    let (pa, pb) = (partial_sums(a), partial_sums(b));
    let n = a.len();
    Ok(pa.iter().zip(&pb).take(n.saturating_sub(1)).all(|(x, y)| x <= y) && pa.last() == pb.last())
}

/// Descending reordering of `k_{r-i+1} + ℓ_i`.
pub fn g_sequence(k: &[usize], l: &[usize]) -> Result<Vec<usize>> {
    if k.len() != l.len() {
        return Err(Error::LengthMismatch { left: k.len(), right: l.len() });
    }
    let r = k.len();
    let mut g: Vec<usize> = (0..r).map(|i| k[r - 1 - i] + l[i]).collect();
    g.sort_unstable_by(|a, b| b.cmp(a));
    Ok(g)
}

fn sum(xs: &[usize]) -> i64 {
    xs.iter().sum::<usize>() as i64
}

pub fn check_feasibility(p: &Prescription) -> Result<FeasibilityReport> {
    p.validate()?;
    let v = p.variant;
    let spans = p.span_indices();
    let g = match &spans {
        Some((k, l)) => g_sequence(k, l)?,
        None => Vec::new(),
    };
    // d - g_r, ..., d - g_1 style sequences are built from g reversed.
    let g_rev: Vec<i64> = g.iter().rev().map(|&x| x as i64).collect();
    let mut conditions = BTreeMap::new();
    for c in Condition::ALL {
        conditions.insert(c, ConditionResult::not_applicable());
    }

    match &p.invariants {
        Invariants::Polynomial { degree, alpha, f } => {
            conditions.insert(Condition::Eqf1, ConditionResult::equal(vec![f[0] as i64], vec![0]));
            let rhs: Vec<i64> = alpha.iter().zip(f).rev().map(|(a, &fi)| a.deg() + fi as i64).collect();
            if spans.is_some() {
                let lhs: Vec<i64> = g_rev.iter().map(|x| degree - x).collect();
                conditions.insert(Condition::Eqprec, ConditionResult::majorization(&lhs, &rhs));
            }
            if matches!(v, Variant::P3Full | Variant::Eigenstructure) {
                let total = sum(&p.right) + sum(&p.left) + rhs.iter().sum::<i64>();
                conditions.insert(Condition::EqIST, ConditionResult::equal(vec![total], vec![p.r as i64 * degree]));
            }
        }
        Invariants::Rational { eps, psi, q } => {
            let rhs: Vec<i64> =
                (0..p.r).rev().map(|i| eps[i].deg() - psi[i].deg() + q[i]).collect();
            let lhs: Vec<i64> = g_rev.iter().map(|x| -x).collect();
            conditions.insert(Condition::EqprecRat, ConditionResult::majorization(&lhs, &rhs));
        }
    }

    if let Some((k, l)) = &spans {
        if matches!(v, Variant::P2SpanIndices | Variant::R2SpanIndices) {
            let zeros = vec![0; p.r];
            let as_i64 = |xs: &[usize]| xs.iter().map(|&x| x as i64).collect::<Vec<_>>();
            conditions.insert(
                Condition::Eqx0,
                if p.r == p.n { ConditionResult::equal(as_i64(l), zeros.clone()) } else { ConditionResult::vacuous() },
            );
            conditions.insert(
                Condition::Eqy0,
                if p.r == p.m { ConditionResult::equal(as_i64(k), zeros) } else { ConditionResult::vacuous() },
            );
        }
        if v.has_null_indices() {
            conditions.insert(
                Condition::Eqsums,
                ConditionResult::equal(vec![sum(&p.left), sum(&p.right)], vec![sum(k), sum(l)]),
            );
        }
    }

    let feasible = conditions.values().all(|r| r.verdict != Verdict::Fail);
    Ok(FeasibilityReport { variant: v, feasible, g_sequence: g, conditions })
}

/// Degrees of the invariant factors, a convenience for reports.
pub fn degrees(ps: &[Poly]) -> Vec<i64> {
    ps.iter().map(Poly::deg).collect()
}
