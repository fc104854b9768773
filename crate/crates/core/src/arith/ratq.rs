//! ℚ(q): rational functions in q with rational coefficients, kept in a
//! canonical form so that `==` is mathematical equality.
//!
//! Canonical form: numerator and denominator are integer-coefficient
//! polynomials, coprime as polynomials, with coprime integer contents and a
//! positive leading denominator coefficient. Negative powers of q are held as
//! denominators (q − q⁻¹ is (q² − 1)/q), so there is a single representation
//! for every element.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::poly::{format_poly_q, parse_poly_q, Poly, PolyQ};
use crate::arith::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RatQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatQ {
    /// Canonicalize num/den: cancel the polynomial gcd, clear contents, fix
    /// the denominator sign.
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        if num.is_zero() {
            return Ok(RatQ {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = PolyQ::gcd_q(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        // fold the rational scale p/s into primitive integer parts
        let scale = num.content() / den.content();
        let num = num.primitive().scale(&BigRational::from_integer(scale.numer().clone()));
        let den = den.primitive().scale(&BigRational::from_integer(scale.denom().clone()));
        Ok(RatQ { num, den })
    }

    pub fn from_poly(p: PolyQ) -> Self {
        if p.is_zero() {
            return RatQ::zero();
        }
        // a polynomial is already coprime to 1; only contents need clearing
        let c = p.content();
        RatQ {
            num: p.primitive().scale(&BigRational::from_integer(c.numer().clone())),
            den: Poly::constant(BigRational::from_integer(c.denom().clone())),
        }
    }

    pub fn from_int(v: i64) -> Self {
        RatQ::from_poly(Poly::constant(Scalar::from_int(v)))
    }

    pub fn from_rational(v: BigRational) -> Self {
        RatQ::from_poly(Poly::constant(v))
    }

    /// The generator q.
    pub fn q() -> Self {
        RatQ {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    /// q^k for any integer k, negative powers as denominators.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            RatQ {
                num: Poly::monomial(One::one(), k as usize),
                den: Poly::one(),
            }
        } else {
            RatQ {
                num: Poly::one(),
                den: Poly::monomial(One::one(), (-k) as usize),
            }
        }
    }

    /// q − q⁻¹ = (q² − 1)/q, the recurring constant of the Hecke relations.
    pub fn q_diff() -> Self {
        RatQ {
            num: PolyQ::from_i64(&[-1, 0, 1]),
            den: Poly::var(),
        }
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn zero() -> Self {
        RatQ {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatQ {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// Exact evaluation at a rational point; the caller handles poles.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if Zero::is_zero(&d) {
            return Err(Error::EvaluationPole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_constant() {
            let d = self.den.coeff(0);
            Some(self.num.coeff(0) / d)
        } else {
            None
        }
    }
}

impl Scalar for RatQ {
    fn zero() -> Self {
        RatQ::zero()
    }
    fn one() -> Self {
        RatQ::one()
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
        RatQ::new(num, den).expect("nonzero denominator")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if Scalar::is_zero(self) || Scalar::is_zero(rhs) {
            return RatQ::zero();
        }
        RatQ::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominator")
    }
    fn neg(&self) -> Self {
        RatQ {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self> {
        if Scalar::is_zero(self) {
            return Err(Error::ZeroScalarDivision);
        }
        // swapping keeps polynomial coprimality; only the sign needs fixing
        if self.num.leading().unwrap().is_negative() {
            Ok(RatQ {
                num: self.den.neg(),
                den: self.num.neg(),
            })
        } else {
            Ok(RatQ {
                num: self.den.clone(),
                den: self.num.clone(),
            })
        }
    }
    fn from_int(v: i64) -> Self {
        RatQ::from_int(v)
    }
}

impl fmt::Display for RatQ {
    /// `num / den`, denominator omitted when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", format_poly_q(&self.num, 'q'))
        } else {
            write!(
                f,
                "{} / {}",
                format_poly_q(&self.num, 'q'),
                format_poly_q(&self.den, 'q')
            )
        }
    }
}

impl std::str::FromStr for RatQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(" / ") {
            Some((n, d)) => RatQ::new(parse_poly_q(n, 'q')?, parse_poly_q(d, 'q')?),
            None => RatQ::new(parse_poly_q(s, 'q')?, Poly::one()),
        }
    }
}
