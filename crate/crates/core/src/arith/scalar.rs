//! The scalar abstraction shared by every coefficient field in the tower
//! ℚ → ℚ(q) → ℚ(q)(t).
//!
//! All implementors keep values in a canonical form, so `==` is exact
//! mathematical equality.

use std::fmt::{Debug, Display};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact field element. Operations never lose information; `inv` and
/// `div` report division by zero instead of panicking.
pub trait Scalar: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Small-integer embedding ℤ → field.
    fn from_int(v: i64) -> Self;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::ZeroScalarDivision);
        }
        Ok(self.recip())
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
}

/// Parse a rational written as `p` or `p/q` in decimal.
pub fn parse_big_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {num:?}")))?;
    let d: num_bigint::BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// `p/q` decimal string; integers print without the `/1`.
pub fn format_big_rational(v: &BigRational) -> String {
    v.to_string()
}

/// Convenience rational constructor for tests and constants.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// True when `v` is |p| ≤ 1, i.e. one of the rationals excluded from the
/// numeric-q pool (0 and ±1 are the only rational roots of unity).
pub fn is_degenerate_q0(v: &BigRational) -> bool {
    Zero::is_zero(v) || One::is_one(&v.abs())
}
