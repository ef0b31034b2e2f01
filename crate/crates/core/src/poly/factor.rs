//! Rational-root splitting of univariate polynomials.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use super::rat::{format_rat, Rat};

/// `leading · ∏ (s - root)^mult · cofactor`, with `cofactor` monic and free of
/// rational roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredPoly {
    pub leading: Rat,
    pub linear_factors: Vec<(Rat, usize)>,
    pub cofactor: Poly,
}

impl FactoredPoly {
    /// Product of linear factors with unit leading coefficient.
    pub fn from_roots(roots: Vec<(Rat, usize)>) -> Self {
        let mut fp = FactoredPoly { leading: Rat::one(), linear_factors: roots, cofactor: Poly::one() };
        fp.normalize();
        fp
    }

    fn normalize(&mut self) {
        self.linear_factors.retain(|(_, m)| *m > 0);
        self.linear_factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rat, usize)> = Vec::with_capacity(self.linear_factors.len());
        for (root, m) in self.linear_factors.drain(..) {
            match merged.last_mut() {
                Some((r, acc)) if *r == root => *acc += m,
                _ => merged.push((root, m)),
            }
        }
        self.linear_factors = merged;
    }

    pub fn expand(&self) -> Poly {
        let mut acc = self.cofactor.scale(&self.leading);
        for (root, m) in &self.linear_factors {
            acc = &acc * &Poly::linear(root).pow(*m);
        }
        acc
    }

    pub fn is_split(&self) -> bool {
        self.cofactor.is_constant()
    }

    pub fn degree(&self) -> usize {
        self.linear_factors.iter().map(|(_, m)| m).sum::<usize>() + self.cofactor.degree().unwrap_or(0)
    }

    pub fn multiplicity(&self, root: &Rat) -> usize {
        self.linear_factors.iter().find(|(r, _)| r == root).map_or(0, |(_, m)| *m)
    }

    pub fn roots(&self) -> impl Iterator<Item = &Rat> {
        self.linear_factors.iter().map(|(r, _)| r)
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.leading.is_one() || (self.linear_factors.is_empty() && self.cofactor.is_one()) {
            parts.push(format_rat(&self.leading));
        }
        for (root, m) in &self.linear_factors {
            let lin = Poly::linear(root);
            if *m == 1 {
                parts.push(format!("({lin})"));
            } else {
                parts.push(format!("({lin})^{m}"));
            }
        }
        if !self.cofactor.is_one() {
            parts.push(format!("({})", self.cofactor));
        }
        write!(f, "{}", parts.join("·"))
    }
}

/// Splits off every rational root of `p` with its exact multiplicity.
///
/// Roots are located by Hensel-lifting the simple roots of the square-free part
/// modulo a small prime and reconstructing the rational number, then confirmed
/// by exact division; this avoids factoring the extreme coefficients.
pub fn split_over_rationals(p: &Poly) -> FactoredPoly {
    assert!(!p.is_zero(), "split_over_rationals of the zero polynomial");
    let leading = p.leading();
    let mut rest = p.monic();
    let mut roots = Vec::new();

    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        rest = Poly::from_coeffs(rest.coeffs()[zero_mult..].to_vec());
        roots.push((Rat::zero(), zero_mult));
    }
    if rest.degree().unwrap_or(0) > 0 {
        let g = rest.gcd(&rest.derivative()).expect("nonzero");
        let square_free = rest.exact_div(&g).expect("gcd divides");
        for root in rational_roots_square_free(&square_free) {
            let lin = Poly::linear(&root);
            let mut m = 0;
            while let Some(q) = rest.exact_div(&lin) {
                rest = q;
                m += 1;
            }
            debug_assert!(m > 0);
            roots.push((root, m));
        }
    }
    let mut fp = FactoredPoly { leading, linear_factors: roots, cofactor: rest };
    fp.normalize();
    fp
}

/// Integer polynomial with coprime coefficients and positive leading term.
fn primitive_integer_form(p: &Poly) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.sign() == Sign::Minus) { -1 } else { 1 };
    ints.into_iter().map(|c| c / &content * sign).collect()
}

fn eval_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Distinct rational roots of a square-free polynomial with nonzero constant term.
fn rational_roots_square_free(p: &Poly) -> Vec<Rat> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-p.coeff(0) / p.coeff(1)];
    }
    let ints = primitive_integer_form(p);
    let lead = ints[deg].abs();
    let tail = ints[0].abs();
    // Any root a/b has |a| ≤ |tail| and b ≤ |lead|.
    let bound: BigInt = &lead * &tail * 2;
    let deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();

    let mut prime = 101u64;
    loop {
        while !is_prime(prime) {
            prime += 2;
        }
        let pb = BigInt::from(prime);
        let reduce = |cs: &[BigInt]| -> Vec<u64> {
            cs.iter().map(|c| c.mod_floor(&pb).to_u64().expect("residue fits")).collect()
        };
        let (fm, dm) = (reduce(&ints), reduce(&deriv));
        if fm[deg] == 0 {
            prime += 2;
            continue;
        }
        let residues: Vec<u64> = (0..prime).filter(|&x| eval_mod(&fm, x, prime) == 0).collect();
        if residues.iter().any(|&x| eval_mod(&dm, x, prime) == 0) {
            prime += 2;
            continue;
        }
        let mut found = Vec::new();
        for x in residues {
            let (lifted, modulus) = hensel_lift(&ints, &deriv, BigInt::from(x), &pb, &bound);
            if let Some(root) = reconstruct(&lifted, &modulus, &tail, &lead) {
                if p.eval(&root).is_zero() {
                    found.push(root);
                }
            }
        }
        found.sort();
        return found;
    }
}

fn eval_big(cs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    cs.iter().rev().fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Quadratic lifting of a simple root until the modulus exceeds `bound`.
fn hensel_lift(f: &[BigInt], df: &[BigInt], mut x: BigInt, p: &BigInt, bound: &BigInt) -> (BigInt, BigInt) {
    let mut modulus = p.clone();
    while &modulus <= bound {
        modulus = &modulus * &modulus;
        let fx = eval_big(f, &x, &modulus);
        let dfx = eval_big(df, &x, &modulus);
        x = (&x - fx * mod_inverse(&dfx, &modulus)).mod_floor(&modulus);
    }
    (x, modulus)
}

/// The unique `a/b ≡ x (mod m)` with `|a| ≤ num_bound`, `0 < b ≤ den_bound`, if any.
fn reconstruct(x: &BigInt, m: &BigInt, num_bound: &BigInt, den_bound: &BigInt) -> Option<Rat> {
    let (mut r0, mut r1) = (m.clone(), x.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > den_bound {
        return None;
    }
    Some(Rat::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::{rat, rat_frac};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        let fp = split_over_rationals(&p(&[-1, 0, 1]));
        assert_eq!(fp.linear_factors, vec![(rat(-1), 1), (rat(1), 1)]);
        assert!(fp.cofactor.is_one());
    }

    #[test]
    fn irreducible_square_stays_in_cofactor() {
        let q = p(&[1, 0, 1]).pow(2);
        let fp = split_over_rationals(&q);
        assert!(fp.linear_factors.is_empty());
        assert_eq!(fp.cofactor, q);
        assert!(!fp.is_split());
    }

    #[test]
    fn repeated_zero_root() {
        let q = p(&[0, 0, -1, 1]);
        let fp = split_over_rationals(&q);
        assert_eq!(fp.linear_factors, vec![(rat(0), 2), (rat(1), 1)]);
        assert_eq!(fp.expand(), q);
    }

    #[test]
    fn fractional_roots_and_leading() {
        // 6 (s - 2/3)^2 (s + 5/2) (s^2 + s + 1)
        let target = FactoredPoly {
            leading: rat(6),
            linear_factors: vec![(rat_frac(-5, 2), 1), (rat_frac(2, 3), 2)],
            cofactor: p(&[1, 1, 1]),
        };
        let fp = split_over_rationals(&target.expand());
        assert_eq!(fp, target);
    }

    #[test]
    fn large_coefficient_roots() {
        let big = rat_frac(982_451_653, 1_000_003);
        let q = &(&Poly::linear(&big) * &Poly::linear(&rat(-7919))) * &p(&[2, 0, 1]);
        let fp = split_over_rationals(&q);
        assert_eq!(fp.linear_factors, vec![(rat(-7919), 1), (big, 1)]);
        assert_eq!(fp.cofactor, p(&[2, 0, 1]));
    }
}
