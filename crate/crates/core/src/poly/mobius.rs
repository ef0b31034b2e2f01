//! Scalar Möbius transforms exchanging the point `a` with infinity.

use num_traits::Zero;

use super::factor::{split_over_rationals, FactoredPoly};
use super::poly::Poly;
use super::rat::{format_rat, Rat};
use crate::error::{Error, Result};

/// `s^deg p · p(1/s + a)` together with `p(a)`.
///
/// Writing `p = Σ c_j (s-a)^j`, the transform has coefficients `c` reversed, so
/// it keeps the degree of `p` and does not vanish at zero.
pub fn mobius_tilde(p: &Poly, a: &Rat) -> Result<(Poly, Rat)> {
    let c = p.taylor_shift(a);
    let at_a = c.coeff(0);
    if at_a.is_zero() {
        return Err(Error::RootAtA(format_rat(a)));
    }
    let mut rev = c.coeffs().to_vec();
    rev.reverse();
    Ok((Poly::from_coeffs(rev), at_a))
}

/// Inverse of [`mobius_tilde`]: `(s-a)^deg · tilde(1/(s-a))`.
pub fn mobius_untilde(tilde: &Poly, a: &Rat, deg: usize) -> Poly {
    let mut c = tilde.coeffs().to_vec();
    c.resize(deg + 1, Rat::zero());
    c.reverse();
    Poly::from_coeffs(c).taylor_shift(&-a)
}

/// `tilde(p)/p(a) · s^zero_mult` on factored input: each root `λ` maps to
/// `1/(λ-a)`, and the result is monic.
pub fn mobius_factored(p: &FactoredPoly, a: &Rat, zero_mult: usize) -> Result<FactoredPoly> {
    let mut roots = Vec::with_capacity(p.linear_factors.len() + 1);
    for (root, m) in &p.linear_factors {
        let gap = root - a;
        if gap.is_zero() {
            return Err(Error::RootAtA(format_rat(a)));
        }
        roots.push((gap.recip(), *m));
    }
    if zero_mult > 0 {
        roots.push((Rat::zero(), zero_mult));
    }
    let mut out = FactoredPoly::from_roots(roots);
    if !p.cofactor.is_constant() {
        let (tilde, at_a) = mobius_tilde(&p.cofactor, a)?;
        let rest = split_over_rationals(&tilde.scale(&at_a.recip()));
        out.cofactor = rest.cofactor;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat::rat;

    #[test]
    fn examples() {
        assert_eq!(mobius_tilde(&Poly::from_ints(&[-1, 1]), &rat(0)).unwrap(), (Poly::from_ints(&[1, -1]), rat(-1)));
        assert_eq!(mobius_tilde(&Poly::one(), &rat(5)).unwrap(), (Poly::one(), rat(1)));
        let (t, c) = mobius_tilde(&Poly::from_ints(&[2, -3, 1]), &rat(0)).unwrap();
        assert_eq!((t.clone(), c), (Poly::from_ints(&[1, -3, 2]), rat(2)));
        // roots 1 and 2 become 1 and 1/2
        let fp = split_over_rationals(&t);
        assert_eq!(fp.roots().cloned().collect::<Vec<_>>(), vec![crate::poly::rat::rat_frac(1, 2), rat(1)]);
        assert_eq!(mobius_tilde(&Poly::from_ints(&[-3, 1]), &rat(3)), Err(Error::RootAtA("3".into())));
    }

    #[test]
    fn factored_agrees_with_expanded() {
        let p = FactoredPoly::from_roots(vec![(rat(1), 2), (rat(-3), 1)]);
        let a = rat(2);
        let (tilde, at_a) = mobius_tilde(&p.expand(), &a).unwrap();
        let fac = mobius_factored(&p, &a, 2).unwrap();
        assert_eq!(fac.expand(), tilde.scale(&at_a.recip()).shift(2));
        assert!(fac.expand().is_monic());
    }
}
