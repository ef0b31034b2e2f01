use crate::error::{Error, Result};
use crate::matrix::{invariant_factors, smith_form, PolyMatrix};
use crate::poly::{Poly, Rat};

use super::distribute::{from_exponents, local_exponents, sa_conditions_hold};
use super::feasibility::is_majorized_by;

pub const DEFAULT_MAX_SEARCH: u64 = 1_000_000;

/// Node budget and tie-break seed for the candidate searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_nodes: u64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_nodes: DEFAULT_MAX_SEARCH, seed: 0 }
    }
}

impl SearchConfig {
    /// Budget from `STRUCTURA_MAX_SEARCH` when set and valid.
    pub fn from_env(seed: u64) -> Self {
        let max_nodes = std::env::var("STRUCTURA_MAX_SEARCH")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_SEARCH);
        SearchConfig { max_nodes, seed }
    }
}

struct Search {
    cfg: SearchConfig,
    nodes: u64,
}

impl Search {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cfg.max_nodes {
            return Err(Error::SearchExhausted(self.cfg.max_nodes));
        }
        Ok(())
    }
}

fn prefix(xs: &[usize], k: usize) -> usize {
    xs[..k].iter().sum()
}

fn desc(xs: &[usize]) -> Vec<i64> {
    let mut v: Vec<i64> = xs.iter().map(|&x| x as i64).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Chains `b` with `a_i ≤ b_i ≤ a_{i+1}`, `Σb = Σa - t_last`, and the leading
/// diagonal exponents majorized by `b`.
fn interlacing_candidates(a: &[usize], t: &[usize], search: &mut Search) -> Result<Vec<Vec<usize>>> {
    let k = a.len();
    let total = a.iter().sum::<usize>() - t[k - 1];
    let lead = desc(&t[..k - 1]);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k - 1);
    fn dfs(
        a: &[usize],
        total: usize,
        lead: &[i64],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        search: &mut Search,
    ) -> Result<()> {
        search.tick()?;
        let i = cur.len();
        let used: usize = cur.iter().sum();
        if i + 1 == a.len() {
            if used == total && is_majorized_by(lead, &desc(cur))? {
                out.push(cur.clone());
            }
            return Ok(());
        }
        let rest_max: usize = (i + 1..a.len() - 1).map(|j| a[j + 1]).sum();
        let rest_min: usize = (i + 1..a.len() - 1).map(|j| a[j]).sum();
        for b in a[i]..=a[i + 1] {
            if used + b + rest_min > total {
                break;
            }
            if used + b + rest_max < total {
                continue;
            }
            cur.push(b);
            dfs(a, total, lead, cur, out, search)?;
            cur.pop();
        }
        Ok(())
    }
    dfs(a, total, &lead, &mut cur, &mut out, search)?;
    Ok(out)
}

/// Smallest border valuations making `[[diag(s^b), y], [0, s^t]]` have
/// invariant exponents `a`, or `None` when that chain admits no border.
fn border_valuations(a: &[usize], b: &[usize], t: usize) -> Option<Vec<usize>> {
    let k = a.len();
    let base = |j: usize, kk: usize| if j < kk { prefix(b, kk) - b[j - 1] } else { prefix(b, kk - 1) };
    let c: Vec<usize> = (1..k)
        .map(|j| (1..k).map(|kk| prefix(a, kk).saturating_sub(base(j, kk))).max().unwrap_or(0))
        .collect();
    for kk in 1..k {
        let best = (1..k)
            .map(|j| c[j - 1] + base(j, kk))
            .chain([prefix(b, kk), t + prefix(b, kk - 1)])
            .min()
            .expect("nonempty");
        if best != prefix(a, kk) {
            return None;
        }
    }
    Some(c)
}

struct Builder<'a> {
    roots: &'a [Rat],
    delta: &'a [Poly],
    /// `t[i][λ]`: exponent of root `λ` in `δ_i`.
    t: Vec<Vec<usize>>,
    search: Search,
}

impl Builder<'_> {
    /// Triangular matrix on `δ_0..δ_{k-1}` with local invariant exponents `a[λ]`.
    fn build(&mut self, a: &[Vec<usize>]) -> Result<PolyMatrix> {
        let k = a.first().map_or(self.delta.len(), Vec::len);
        if k == 1 {
            return Ok(PolyMatrix::from_rows(vec![vec![self.delta[0].clone()]]));
        }
        let nroots = self.roots.len();
        let mut chains = Vec::with_capacity(nroots);
        let mut borders = Vec::with_capacity(nroots);
        for j in 0..nroots {
            let tj: Vec<usize> = (0..k).map(|i| self.t[i][j]).collect();
            let cands = interlacing_candidates(&a[j], &tj, &mut self.search)?;
            if cands.is_empty() {
                return Err(Error::CompletionSearchExhausted(format!(
                    "no interlacing chain at root {} for a {k}×{k} block",
                    crate::poly::format_rat(&self.roots[j])
                )));
            }
            let start = (self.search.cfg.seed % cands.len() as u64) as usize;
            let found = (0..cands.len()).map(|o| &cands[(start + o) % cands.len()]).find_map(|b| {
                border_valuations(&a[j], b, tj[k - 1]).map(|c| (b.clone(), c))
            });
            let Some((b, c)) = found else {
                return Err(Error::CompletionSearchExhausted(format!(
                    "no border completes the {k}×{k} block at root {}",
                    crate::poly::format_rat(&self.roots[j])
                )));
            };
            chains.push(b);
            borders.push(c);
        }
        let inner = self.build(&chains)?;
        let beta: Vec<Poly> = (0..k - 1).map(|i| from_exponents(self.roots, |j| chains[j][i])).collect();
        let sd = smith_form(&inner);
        if sd.diag != beta {
            return Err(Error::IdentityViolated(format!("leading block has invariant factors {:?}", sd.diag)));
        }
        let y = PolyMatrix::from_fn(k - 1, 1, |i, _| from_exponents(self.roots, |j| borders[j][i]));
        let x = &sd.left_inv * &y;
        Ok(PolyMatrix::from_fn(k, k, |i, jj| match (i < k - 1, jj < k - 1) {
            (true, true) => inner[(i, jj)].clone(),
            (true, false) => x[(i, 0)].clone(),
            (false, true) => Poly::zero(),
            (false, false) => self.delta[k - 1].clone(),
        }))
    }
}

/// Upper triangular matrix with diagonal `δ` and invariant factors `α`.
pub fn triangular_realization(alpha: &[Poly], delta: &[Poly]) -> Result<PolyMatrix> {
    triangular_realization_with(alpha, delta, SearchConfig::default())
}

pub fn triangular_realization_with(alpha: &[Poly], delta: &[Poly], cfg: SearchConfig) -> Result<PolyMatrix> {
    if alpha.len() != delta.len() || alpha.is_empty() {
        return Err(Error::LengthMismatch { left: alpha.len(), right: delta.len() });
    }
    if delta.iter().any(|d| !d.is_monic()) || !sa_conditions_hold(alpha, delta) {
        return Err(Error::PreconditionViolated("diagonal and invariant factors fail the divisibility conditions".into()));
    }
    let local = local_exponents(alpha)?;
    let t = delta.iter().map(|d| local.roots.iter().map(|l| d.root_multiplicity(l)).collect()).collect();
    let mut builder = Builder { roots: &local.roots, delta, t, search: Search { cfg, nodes: 0 } };
    let out = if local.roots.is_empty() {
        // every δ_i is one: the identity
        PolyMatrix::identity(alpha.len())
    } else {
        builder.build(&local.exps)?
    };
    if invariant_factors(&out) != alpha {
        return Err(Error::IdentityViolated("triangular completion has the wrong invariant factors".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn lin(r: i64) -> Poly {
        Poly::linear(&rat(r))
    }

    #[test]
    fn two_by_two_closed_form() {
        let s2 = Poly::from_ints(&[0, 0, 1]);
        let t = triangular_realization(&[Poly::one(), s2], &[Poly::s(), Poly::s()]).unwrap();
        assert_eq!(t, PolyMatrix::from_int_rows(&[&[&[0, 1], &[1]], &[&[0], &[0, 1]]]));
        let a1 = lin(1);
        let a2 = &lin(1) * &lin(2).pow(2);
        let d = &lin(1) * &lin(2);
        let t = triangular_realization(&[a1.clone(), a2], &[d.clone(), d.clone()]).unwrap();
        assert_eq!(t[(0, 1)], a1);
        assert_eq!((t[(0, 0)].clone(), t[(1, 1)].clone()), (d.clone(), d));
    }

    #[test]
    fn diagonal_when_already_invariant() {
        let alpha = vec![lin(0), lin(0), &lin(0) * &lin(3)];
        let t = triangular_realization(&alpha, &alpha).unwrap();
        assert_eq!(invariant_factors(&t), alpha);
    }

    #[test]
    fn larger_blocks() {
        // local exponents (0,2,4) with diagonal (2,2,2)
        let alpha = vec![Poly::one(), Poly::s().pow(2), Poly::s().pow(4)];
        let delta = vec![Poly::s().pow(2); 3];
        let t = triangular_realization(&alpha, &delta).unwrap();
        for i in 0..3 {
            assert_eq!(t[(i, i)], delta[i]);
            for j in 0..i {
                assert!(t[(i, j)].is_zero());
            }
        }
        let alpha = vec![
            lin(1),
            &lin(1) * &lin(-2),
            &(&lin(1) * &lin(-2)).pow(2) * &lin(0),
            &(&lin(1).pow(3) * &lin(-2).pow(2)) * &lin(0),
        ];
        let delta = vec![
            &(&lin(1).pow(2) * &lin(-2)) * &lin(0),
            &lin(1) * &lin(0),
            &lin(1).pow(2) * &lin(-2).pow(2),
            &lin(1).pow(2) * &lin(-2).pow(2),
        ];
        assert!(sa_conditions_hold(&alpha, &delta));
        let t = triangular_realization(&alpha, &delta).unwrap();
        assert_eq!(invariant_factors(&t), alpha);
        for seed in 1..4 {
            let cfg = SearchConfig { max_nodes: DEFAULT_MAX_SEARCH, seed };
            assert_eq!(invariant_factors(&triangular_realization_with(&alpha, &delta, cfg).unwrap()), alpha);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let s2 = Poly::from_ints(&[0, 0, 1]);
        // the order of the diagonal is free
        assert!(triangular_realization(&[Poly::one(), s2.clone()], &[s2.clone(), Poly::one()]).is_ok());
        assert!(matches!(
            triangular_realization(&[Poly::s(), Poly::s()], &[s2, Poly::one()]),
            Err(Error::PreconditionViolated(_))
        ));
        let tight = SearchConfig { max_nodes: 1, seed: 0 };
        let alpha = vec![Poly::one(), Poly::s().pow(2), Poly::s().pow(4)];
        let delta = vec![Poly::s().pow(2); 3];
        assert_eq!(triangular_realization_with(&alpha, &delta, tight), Err(Error::SearchExhausted(1)));
    }
}
