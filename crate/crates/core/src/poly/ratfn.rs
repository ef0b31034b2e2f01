use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Reduced fraction of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(RatFn::zero());
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading();
        Ok(RatFn { num: num.scale(&lc.recip()), den: den.monic() })
    }

    pub fn zero() -> Self {
        RatFn { num: Poly::zero(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// `deg num - deg den`; `None` for zero.
    pub fn relative_degree(&self) -> Option<i64> {
        self.num.degree().map(|d| d as i64 - self.den.deg())
    }

    pub fn recip(&self) -> Result<RatFn> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// Multiplies through by `p`; `None` unless the result is a polynomial.
    pub fn times_poly(&self, p: &Poly) -> Option<Poly> {
        (&self.num * p).exact_div(&self.den)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add<&RatFn> for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub<&RatFn> for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul<&RatFn> for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes() {
        let f = RatFn::new(Poly::from_ints(&[-2, 2]), Poly::from_ints(&[-2, 0, 2])).unwrap();
        assert_eq!(f.num(), &Poly::from_ints(&[1]));
        assert_eq!(f.den(), &Poly::from_ints(&[1, 1]));
        assert!(RatFn::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn arithmetic() {
        let a = RatFn::new(Poly::one(), Poly::s()).unwrap();
        let b = RatFn::new(Poly::one(), Poly::from_ints(&[-1, 1])).unwrap();
        let sum = &a + &b;
        assert_eq!(sum.num(), &Poly::from_ints(&[-1, 2]));
        assert_eq!(sum.den(), &Poly::from_ints(&[0, -1, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!((&a * &RatFn::from_poly(Poly::s())), RatFn::from_poly(Poly::one()));
    }
}
