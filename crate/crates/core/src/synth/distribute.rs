use crate::error::{Error, Result};
use crate::matrix::combinations;
use crate::poly::{split_over_rationals, Poly, Rat};

use super::feasibility::is_majorized_by;

/// Roots of the last invariant factor and the exponent of each root in every `α_i`.
pub(crate) struct LocalExponents {
    pub roots: Vec<Rat>,
    /// `exps[λ][i]`, non-decreasing in `i`.
    pub exps: Vec<Vec<usize>>,
}

pub(crate) fn local_exponents(alpha: &[Poly]) -> Result<LocalExponents> {
    let last = alpha.last().cloned().unwrap_or_else(Poly::one);
    let fp = split_over_rationals(&last);
    if !fp.is_split() {
        return Err(Error::FieldNotSplit(format!("{last} has the irreducible factor {} over the rationals", fp.cofactor)));
    }
    let roots: Vec<Rat> = fp.linear_factors.iter().map(|(root, _)| root.clone()).collect();
    let exps = roots.iter().map(|l| alpha.iter().map(|a| a.root_multiplicity(l)).collect()).collect();
    Ok(LocalExponents { roots, exps })
}

pub(crate) fn from_exponents(roots: &[Rat], exps: impl Fn(usize) -> usize) -> Poly {
    roots.iter().enumerate().fold(Poly::one(), |acc, (j, l)| &acc * &Poly::linear(l).pow(exps(j)))
}

/// Both divisibility conditions tying diagonal entries to invariant factors.
pub fn sa_conditions_hold(alpha: &[Poly], delta: &[Poly]) -> bool {
    let r = alpha.len();
    if delta.len() != r {
        return false;
    }
    let prod = |ps: &[Poly]| ps.iter().fold(Poly::one(), |acc, p| &acc * p);
    if prod(alpha) != prod(delta) {
        return false;
    }
    let mut head = Poly::one();
    for k in 1..r {
        head = &head * &alpha[k - 1];
        for subset in combinations(r, k) {
            let p = subset.iter().fold(Poly::one(), |acc, &i| &acc * &delta[i]);
            if !head.divides(&p) {
                return false;
            }
        }
    }
    true
}

/// Monic `δ_i` of degree `h_i` compatible with `α` as diagonal of a triangular matrix.
///
/// Starts from `δ = α` placed so degrees and targets sort alike, then moves one
/// linear factor at a time from an entry above its target to one below it. A
/// root is only moved from a larger to a smaller exponent, which keeps every
/// local exponent vector majorized by that of `α`.
pub fn distribute_invariant_factors(alpha: &[Poly], h: &[usize]) -> Result<Vec<Poly>> {
    let r = alpha.len();
    if h.len() != r {
        return Err(Error::LengthMismatch { left: r, right: h.len() });
    }
    let local = local_exponents(alpha)?;
    let mut g: Vec<i64> = h.iter().map(|&x| x as i64).collect();
    g.sort_unstable_by(|a, b| b.cmp(a));
    let degs: Vec<i64> = alpha.iter().rev().map(Poly::deg).collect();
    if !is_majorized_by(&g, &degs)? {
        return Err(Error::MajorizationFails);
    }

    // order[k] is the position receiving α_{r-k}, i.e. the k-th largest target
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| h[b].cmp(&h[a]).then(a.cmp(&b)));
    let nroots = local.roots.len();
    let mut t = vec![vec![0usize; nroots]; r];
    for (k, &pos) in order.iter().enumerate() {
        for j in 0..nroots {
            t[pos][j] = local.exps[j][r - 1 - k];
        }
    }
    let sum = |row: &[usize]| row.iter().sum::<usize>();
    loop {
        let sums: Vec<usize> = t.iter().map(|row| sum(row)).collect();
        let over = (0..r).filter(|&i| sums[i] > h[i]).max_by_key(|&i| (sums[i], std::cmp::Reverse(i)));
        let under = (0..r).filter(|&i| sums[i] < h[i]).min_by_key(|&i| (sums[i], i));
        let (p, q) = match (over, under) {
            (None, None) => break,
            (Some(p), Some(q)) if sums[p] > sums[q] => (p, q),
            _ => return Err(Error::MajorizationFails),
        };
        let j = (0..nroots)
            .filter(|&j| t[p][j] > t[q][j])
            .max_by_key(|&j| (t[p][j] - t[q][j], std::cmp::Reverse(j)))
            .expect("larger row sum has a larger exponent somewhere");
        t[p][j] -= 1;
        t[q][j] += 1;
    }
    let delta: Vec<Poly> = t.iter().map(|row| from_exponents(&local.roots, |j| row[j])).collect();
    if !sa_conditions_hold(alpha, &delta) {
        return Err(Error::IdentityViolated("distributed diagonal fails the divisibility conditions".into()));
    }
    Ok(delta)
}
