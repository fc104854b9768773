//! Dense univariate polynomials over an exact scalar field.
//!
//! Coefficients are stored by ascending exponent with the invariant that the
//! last stored coefficient is nonzero (the zero polynomial is the empty
//! vector). The same type serves ℚ[q] (coefficients `BigRational`) and the
//! fusion-side polynomials in t over ℚ(q) or ℚ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

/// Polynomials in q with rational coefficients.
pub type PolyQ = Poly<BigRational>;

impl<K: Scalar> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    /// c·x^k
    pub fn monomial(c: K, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn var() -> Self {
        Poly::monomial(K::one(), 1)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Order of vanishing at x = 0: index of the first nonzero coefficient.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by x^k, which must divide exactly.
    pub fn shift_down(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        debug_assert!(self.ord().is_some_and(|o| o >= k));
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn div_rem(&self, div: &Self) -> Result<(Self, Self)> {
        if div.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        let d_deg = div.degree().unwrap();
        let lc_inv = div.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); self.coeffs.len().saturating_sub(d_deg)];
        let mut top = rem.len();
        while top > d_deg {
            let lead = rem[top - 1].clone();
            if !lead.is_zero() {
                let qc = lead.mul(&lc_inv);
                let shift = top - 1 - d_deg;
                for (j, dc) in div.coeffs.iter().enumerate() {
                    if !dc.is_zero() {
                        rem[shift + j] = rem[shift + j].sub(&qc.mul(dc));
                    }
                }
                quot[shift] = qc;
            }
            top -= 1;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Division known to be exact; the nonzero-remainder case is a logic error.
    pub fn exact_div(&self, div: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(div)?;
        if !r.is_zero() {
            return Err(Error::InvariantViolated("non-exact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn make_monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomialDivision)?;
        Ok(self.scale(&lc.inv()?))
    }

    /// Monic gcd by the Euclidean algorithm; remainders are re-scaled monic at
    /// each step to limit growth.
    pub fn gcd_monic(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let mut f = a.clone();
        let mut g = b.clone();
        while !g.is_zero() {
            let g_monic = g.make_monic()?;
            let (_, r) = f.div_rem(&g_monic)?;
            f = g_monic;
            g = r;
        }
        f.make_monic()
    }
}

impl PolyQ {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    /// Signed rational content: `self = content · primitive(self)` with the
    /// primitive part having coprime integer coefficients and positive
    /// leading coefficient. Zero polynomial has content 0.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return Zero::zero();
        }
        let mut den_lcm: BigInt = One::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd: BigInt = Zero::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        content
    }

    /// The primitive part: integer coprime coefficients, positive leading.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// True when the polynomial is c·q^k for a single nonzero term.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs[..self.coeffs.len() - 1].iter().all(|c| Zero::is_zero(c))
    }

    /// Monic gcd over ℚ, Euclid with content clearing at each step.
    ///
    /// A monomial argument short-circuits: q is prime in ℚ[q], so
    /// gcd(c·q^k, g) = q^min(k, ord g).
    pub fn gcd_q(a: &Self, b: &Self) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroGcd);
        }
        if a.is_zero() {
            return b.make_monic();
        }
        if b.is_zero() {
            return a.make_monic();
        }
        if a.is_monomial() {
            let k = a.degree().unwrap().min(b.ord().unwrap());
            return Ok(Poly::monomial(One::one(), k));
        }
        if b.is_monomial() {
            let k = b.degree().unwrap().min(a.ord().unwrap());
            return Ok(Poly::monomial(One::one(), k));
        }
        let mut f = a.primitive();
        let mut g = b.primitive();
        while !g.is_zero() {
            let (_, r) = f.div_rem(&g)?;
            f = g;
            g = r.primitive();
        }
        f.make_monic()
    }
}

impl<K: Scalar> fmt::Display for Poly<K> {
    /// Generic display with parenthesized coefficients; the spec-level q
    /// string format lives in [`format_poly_q`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Sparse term list ordered by ascending exponent, e.g. `-1 + q^2`.
pub fn format_poly_q(p: &PolyQ, var: char) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if Zero::is_zero(c) {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if One::is_one(&mag) && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let var_part = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if !coeff_part.is_empty() && !var_part.is_empty() {
            out.push_str(&coeff_part);
            out.push('*');
            out.push_str(&var_part);
        } else {
            out.push_str(&coeff_part);
            out.push_str(&var_part);
        }
    }
    out
}

/// Inverse of [`format_poly_q`].
pub fn parse_poly_q(s: &str, var: char) -> Result<PolyQ> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial string".into()));
    }
    if s == "0" {
        return Ok(Poly::zero());
    }
    // split into signed terms on " + " / " - "
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut rest = s;
    let mut negative = if let Some(r) = rest.strip_prefix('-') {
        rest = r.trim_start();
        true
    } else {
        false
    };
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let (idx, next_negative, skip) = match (plus, minus) {
            (Some(p), Some(m)) if p < m => (p, false, 3),
            (Some(_), Some(m)) => (m, true, 3),
            (Some(p), None) => (p, false, 3),
            (None, Some(m)) => (m, true, 3),
            (None, None) => {
                terms.push((negative, rest.to_string()));
                break;
            }
        };
        terms.push((negative, rest[..idx].to_string()));
        rest = &rest[idx + skip..];
        negative = next_negative;
    }
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (neg, term) in terms {
        let term = term.trim();
        let (coeff_str, exp) = match term.find(var) {
            None => (term, 0usize),
            Some(pos) => {
                let coeff = term[..pos].trim().trim_end_matches('*').trim();
                let tail = &term[pos + var.len_utf8()..];
                let exp = if tail.is_empty() {
                    1
                } else {
                    let digits = tail
                        .strip_prefix('^')
                        .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?;
                    digits
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
                };
                (coeff, exp)
            }
        };
        let mut c = if coeff_str.is_empty() {
            One::one()
        } else {
            crate::arith::scalar::parse_big_rational(coeff_str)?
        };
        if neg {
            c = -c;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Zero::zero());
        }
        coeffs[exp] = &coeffs[exp] + c;
    }
    Ok(Poly::new(coeffs))
}
