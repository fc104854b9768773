//! Rational functions in the auxiliary variable t over an exact coefficient
//! field — ℚ(q)(t) during symbolic fusion, ℚ(t) in numeric-q mode.
//!
//! Canonical form: numerator and denominator coprime as polynomials in t,
//! denominator monic (its leading t-coefficient is the 1 of the base field).

use std::fmt;

use num_rational::BigRational;

use crate::arith::poly::Poly;
use crate::arith::ratq::RatQ;
use crate::arith::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFuncT<K> {
    num: Poly<K>,
    den: Poly<K>,
}

/// The ℚ(q)(t) layer of the tower.
pub type RatQT = RatFuncT<RatQ>;
/// ℚ(t), used when q has been evaluated at a rational point.
pub type RatT = RatFuncT<BigRational>;

impl<K: Scalar> RatFuncT<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        if num.is_zero() {
            return Ok(RatFuncT {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd_monic(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        let lc_inv = den.leading().unwrap().inv()?;
        Ok(RatFuncT {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFuncT {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: K) -> Self {
        RatFuncT::from_poly(Poly::constant(c))
    }

    /// The variable t.
    pub fn t() -> Self {
        RatFuncT::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly<K> {
        &self.num
    }

    pub fn den(&self) -> &Poly<K> {
        &self.den
    }

    /// Value at t = 0 when the function is regular there.
    ///
    /// In canonical form num and den share no factor of t, so a vanishing
    /// den(0) is a genuine pole.
    pub fn limit_t0(&self) -> Result<K> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtT0);
        }
        self.num.coeff(0).div(&d0)
    }
}

impl<K: Scalar> Scalar for RatFuncT<K> {
    fn zero() -> Self {
        RatFuncT {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn one() -> Self {
        RatFuncT {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFuncT::new(num, den).expect("nonzero denominator")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if Scalar::is_zero(self) || Scalar::is_zero(rhs) {
            return Scalar::zero();
        }
        RatFuncT::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominator")
    }
    fn neg(&self) -> Self {
        RatFuncT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::ZeroScalarDivision);
        }
        let lc_inv = self.num.leading().unwrap().inv()?;
        Ok(RatFuncT {
            num: self.den.scale(&lc_inv),
            den: self.num.scale(&lc_inv),
        })
    }
    fn from_int(v: i64) -> Self {
        RatFuncT::constant(K::from_int(v))
    }
}

impl<K: Scalar> fmt::Display for RatFuncT<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tp(coeffs: &[i64]) -> Poly<RatQ> {
        Poly::new(coeffs.iter().map(|&c| RatQ::from_int(c)).collect())
    }

    #[test]
    fn limit_examples() {
        // (t^2 + q t)/t -> q
        let num = Poly::new(vec![RatQ::zero(), RatQ::q(), RatQ::one()]);
        let den = tp(&[0, 1]);
        let f = RatQT::new(num, den).unwrap();
        assert_eq!(f.limit_t0().unwrap(), RatQ::q());
        // constants are fixed points of the limit
        let c = RatQT::constant(RatQ::q_diff());
        assert_eq!(c.limit_t0().unwrap(), RatQ::q_diff());
        // 1/t has a genuine pole
        let pole = RatQT::new(tp(&[1]), tp(&[0, 1])).unwrap();
        assert_eq!(pole.limit_t0().unwrap_err(), Error::PoleAtT0);
    }

    #[test]
    fn denominator_is_monic() {
        // (1 + t)/(2 + 2t^2) normalizes with monic denominator over ℚ(q)
        let f = RatQT::new(tp(&[1, 1]), tp(&[2, 0, 2])).unwrap();
        assert_eq!(f.den().leading().unwrap(), &RatQ::one());
        // limit agrees with coefficient-wise substitution of t = 0
        let direct = f.num().coeff(0).div(&f.den().coeff(0)).unwrap();
        assert_eq!(f.limit_t0().unwrap(), direct);
    }

    #[test]
    fn field_ops_cancel() {
        let f = RatQT::new(tp(&[0, 1]), tp(&[1, 1])).unwrap(); // t/(1+t)
        let g = Scalar::inv(&f).unwrap();
        assert!(Scalar::is_one(&f.mul(&g)));
        let h = f.sub(&f);
        assert!(Scalar::is_zero(&h));
    }
}
