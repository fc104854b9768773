//! The finite Hecke algebra H_n in the T_σ basis, generic over the
//! coefficient field.
//!
//! Generators T_1, …, T_{n−1} satisfy
//!   (T_i − q)(T_i + q⁻¹) = 0,
//!   T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1},
//!   T_i T_j = T_j T_i  (|i − j| ≥ 2),
//! which force the rewriting rule T_σ T_i = T_{σσ_i} when the length grows
//! and T_σ T_i = T_{σσ_i} + (q − q⁻¹) T_σ otherwise. Multiplication walks
//! reduced words with that rule; no multiplication table is stored.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::arith::{RatFuncT, RatQ, RatQT, RatT, Scalar};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Context carrying n and the value of q in the coefficient field K.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<K: Scalar> {
    n: usize,
    q: K,
    q_inv: K,
    q_diff: K,
}

/// Sparse element of H_n: a map from permutations to nonzero scalars,
/// iterated in the canonical (lexicographic) permutation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement<K: Scalar> {
    n: usize,
    terms: BTreeMap<Permutation, K>,
}

impl HeckeAlgebra<RatQ> {
    /// H_n over ℚ(q) with symbolic q.
    pub fn symbolic(n: usize) -> Self {
        HeckeAlgebra::new(n, RatQ::q()).expect("q is invertible")
    }
}

impl HeckeAlgebra<BigRational> {
    /// H_n over ℚ with q evaluated at a nonzero rational.
    pub fn numeric(n: usize, q0: &BigRational) -> Result<Self> {
        HeckeAlgebra::new(n, q0.clone())
    }
}

impl HeckeAlgebra<RatQT> {
    /// H_n over ℚ(q)(t), the fusion coefficient field.
    pub fn symbolic_t(n: usize) -> Self {
        HeckeAlgebra::new(n, RatFuncT::constant(RatQ::q())).expect("q is invertible")
    }
}

impl HeckeAlgebra<RatT> {
    /// H_n over ℚ(t) at a numeric q.
    pub fn numeric_t(n: usize, q0: &BigRational) -> Result<Self> {
        HeckeAlgebra::new(n, RatFuncT::constant(q0.clone()))
    }
}

impl<K: Scalar> HeckeAlgebra<K> {
    pub fn new(n: usize, q: K) -> Result<Self> {
        let q_inv = q.inv()?;
        let q_diff = q.sub(&q_inv);
        Ok(HeckeAlgebra { n, q, q_inv, q_diff })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &K {
        &self.q
    }

    pub fn q_inv(&self) -> &K {
        &self.q_inv
    }

    /// q − q⁻¹.
    pub fn q_diff(&self) -> &K {
        &self.q_diff
    }

    /// q^k for any integer k.
    pub fn q_pow(&self, k: i64) -> K {
        let base = if k >= 0 { &self.q } else { &self.q_inv };
        let mut acc = K::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(base);
        }
        acc
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i + 1 > self.n {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }

    fn check_elem(&self, x: &HeckeElement<K>) -> Result<()> {
        if x.n != self.n {
            return Err(Error::MismatchedN(x.n, self.n));
        }
        Ok(())
    }

    pub fn zero(&self) -> HeckeElement<K> {
        HeckeElement {
            n: self.n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> HeckeElement<K> {
        self.t_sigma(&Permutation::identity(self.n)).expect("identity")
    }

    /// The basis element T_σ.
    pub fn t_sigma(&self, sigma: &Permutation) -> Result<HeckeElement<K>> {
        if sigma.n() != self.n {
            return Err(Error::MismatchedN(sigma.n(), self.n));
        }
        let mut terms = BTreeMap::new();
        terms.insert(sigma.clone(), K::one());
        Ok(HeckeElement { n: self.n, terms })
    }

    /// The generator T_i.
    pub fn t_gen(&self, i: usize) -> Result<HeckeElement<K>> {
        self.check_gen(i)?;
        self.t_sigma(&Permutation::adjacent_transposition(i, self.n)?)
    }

    /// T_i⁻¹ = T_i − q + q⁻¹, forced by the quadratic relation.
    pub fn gen_inverse(&self, i: usize) -> Result<HeckeElement<K>> {
        self.check_gen(i)?;
        let mut out = self.t_gen(i)?;
        add_term(
            &mut out.terms,
            Permutation::identity(self.n),
            self.q_diff.neg(),
        );
        Ok(out)
    }

    pub fn scalar(&self, c: K) -> HeckeElement<K> {
        let mut out = self.zero();
        if !c.is_zero() {
            out.terms.insert(Permutation::identity(self.n), c);
        }
        out
    }

    pub fn add(&self, x: &HeckeElement<K>, y: &HeckeElement<K>) -> Result<HeckeElement<K>> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        let mut out = x.clone();
        for (p, c) in &y.terms {
            add_term(&mut out.terms, p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, x: &HeckeElement<K>, y: &HeckeElement<K>) -> Result<HeckeElement<K>> {
        self.add(x, &self.scale(y, &K::one().neg()))
    }

    pub fn scale(&self, x: &HeckeElement<K>, c: &K) -> HeckeElement<K> {
        if c.is_zero() {
            return self.zero();
        }
        HeckeElement {
            n: x.n,
            terms: x.terms.iter().map(|(p, a)| (p.clone(), a.mul(c))).collect(),
        }
    }

    /// x·T_i expanded in the T_σ basis.
    pub fn mul_gen_right(&self, x: &HeckeElement<K>, i: usize) -> Result<HeckeElement<K>> {
        self.check_gen(i)?;
        self.check_elem(x)?;
        let mut terms = BTreeMap::new();
        for (sigma, c) in &x.terms {
            let swapped = sigma.swap_positions(i);
            if sigma.apply(i) > sigma.apply(i + 1) {
                // length drops: T_σ T_i = T_{σσ_i} + (q − q⁻¹) T_σ
                add_term(&mut terms, sigma.clone(), c.mul(&self.q_diff));
            }
            add_term(&mut terms, swapped, c.clone());
        }
        Ok(HeckeElement { n: self.n, terms })
    }

    /// x·T_i⁻¹ = x·T_i − (q − q⁻¹)·x.
    pub fn mul_gen_inv_right(&self, x: &HeckeElement<K>, i: usize) -> Result<HeckeElement<K>> {
        let mut out = self.mul_gen_right(x, i)?;
        for (p, c) in &x.terms {
            add_term(&mut out.terms, p.clone(), c.mul(&self.q_diff).neg());
        }
        Ok(out)
    }

    /// T_i·x expanded in the T_σ basis.
    pub fn mul_gen_left(&self, i: usize, x: &HeckeElement<K>) -> Result<HeckeElement<K>> {
        self.check_gen(i)?;
        self.check_elem(x)?;
        let mut terms = BTreeMap::new();
        for (sigma, c) in &x.terms {
            let swapped = sigma.swap_values(i);
            let pos_i = sigma.images().iter().position(|&v| v == i).unwrap();
            let pos_i1 = sigma.images().iter().position(|&v| v == i + 1).unwrap();
            if pos_i > pos_i1 {
                add_term(&mut terms, sigma.clone(), c.mul(&self.q_diff));
            }
            add_term(&mut terms, swapped, c.clone());
        }
        Ok(HeckeElement { n: self.n, terms })
    }

    /// x·T_σ along a reduced word of σ.
    pub fn mul_t_sigma_right(
        &self,
        x: &HeckeElement<K>,
        sigma: &Permutation,
    ) -> Result<HeckeElement<K>> {
        let (_, word) = sigma.length_and_word();
        let mut acc = x.clone();
        for i in word {
            acc = self.mul_gen_right(&acc, i)?;
        }
        Ok(acc)
    }

    /// Bilinear product in H_n.
    pub fn mul(&self, x: &HeckeElement<K>, y: &HeckeElement<K>) -> Result<HeckeElement<K>> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        let mut out = self.zero();
        for (tau, c) in &y.terms {
            let part = self.mul_t_sigma_right(x, tau)?;
            for (p, a) in part.terms {
                add_term(&mut out.terms, p, a.mul(c));
            }
        }
        Ok(out)
    }

    /// T_σ⁻¹: the product of generator inverses along the reversed word.
    pub fn t_sigma_inverse(&self, sigma: &Permutation) -> Result<HeckeElement<K>> {
        self.mul_t_sigma_inv_right(&self.one(), sigma)
    }

    /// x·T_σ⁻¹ along the reversed reduced word of σ; linear in the support
    /// of x per generator, unlike multiplying by the expanded T_σ⁻¹.
    pub fn mul_t_sigma_inv_right(
        &self,
        x: &HeckeElement<K>,
        sigma: &Permutation,
    ) -> Result<HeckeElement<K>> {
        if sigma.n() != self.n {
            return Err(Error::MismatchedN(sigma.n(), self.n));
        }
        let (_, word) = sigma.length_and_word();
        let mut acc = x.clone();
        for &i in word.iter().rev() {
            acc = self.mul_gen_inv_right(&acc, i)?;
        }
        Ok(acc)
    }

    /// The involutive antiautomorphism φ fixing every T_i; on the basis
    /// φ(T_σ) = T_{σ⁻¹}.
    pub fn phi(&self, x: &HeckeElement<K>) -> HeckeElement<K> {
        HeckeElement {
            n: x.n,
            terms: x
                .terms
                .iter()
                .map(|(p, c)| (p.inverse(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Scalar> HeckeElement<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored coefficient at σ, or zero.
    pub fn coeff_of(&self, sigma: &Permutation) -> K {
        self.terms.get(sigma).cloned().unwrap_or_else(K::zero)
    }

    /// Terms in canonical permutation order.
    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &K)> {
        self.terms.iter()
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, K)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, c) in terms {
            if p.n() != n {
                return Err(Error::MismatchedN(p.n(), n));
            }
            add_term(&mut map, p, c);
        }
        Ok(HeckeElement { n, terms: map })
    }

    /// Coefficient-wise image under a field map, dropping zeros.
    pub fn map_coeffs<L: Scalar>(&self, mut f: impl FnMut(&K) -> Result<L>) -> Result<HeckeElement<L>> {
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.insert(p.clone(), v);
            }
        }
        Ok(HeckeElement { n: self.n, terms })
    }

    /// Embed H_m into H_n by T_i ↦ T_{i+offset}; permutations act on the
    /// shifted window {offset+1, …, offset+m}.
    pub fn shift_embed(&self, n: usize, offset: usize) -> Result<HeckeElement<K>> {
        if self.n + offset > n {
            return Err(Error::MismatchedN(self.n + offset, n));
        }
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            let mut images: Vec<usize> = (1..=offset).collect();
            images.extend(p.images().iter().map(|&v| v + offset));
            images.extend(offset + self.n + 1..=n);
            terms.insert(Permutation::from_images(images)?, c.clone());
        }
        Ok(HeckeElement { n, terms })
    }
}

fn add_term<K: Scalar>(map: &mut BTreeMap<Permutation, K>, p: Permutation, c: K) {
    if c.is_zero() {
        return;
    }
    match map.entry(p) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl<K: Scalar> std::fmt::Display for HeckeElement<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·T{p}")?;
        }
        Ok(())
    }
}
