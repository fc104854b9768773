//! Exact linear algebra over the coefficient fields, for representation-level
//! verification: ideal dimensions, divisibility solves, generator action
//! matrices, the Burnside irreducibility test and the q = 1 specialization.

use std::collections::{BTreeMap, VecDeque};

use num_rational::BigRational;
use num_traits::One;

use crate::arith::{RatQ, Scalar};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::perm::Permutation;

/// Dense rectangular matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<K: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvariantViolated("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::MismatchedN(self.cols, rhs.rows));
        }
        let mut out: Matrix<K> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mul(c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn flatten(&self) -> Vec<K> {
        self.data.clone()
    }

    /// Rank by fraction-exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut span = RowSpace::new(self.cols);
        for i in 0..self.rows {
            span.insert(self.row(i).to_vec());
        }
        span.rank()
    }

    /// One solution of self·x = b, or None when inconsistent.
    pub fn solve(&self, b: &[K]) -> Result<Option<Vec<K>>> {
        if b.len() != self.rows {
            return Err(Error::MismatchedN(b.len(), self.rows));
        }
        // eliminate on the augmented matrix [Aᵀ-style rows: (row of A, b_i)]
        let mut aug: Vec<(Vec<K>, K)> = (0..self.rows)
            .map(|i| (self.row(i).to_vec(), b[i].clone()))
            .collect();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut echelon: Vec<(usize, Vec<K>, K)> = Vec::new();
        for (mut row, mut rhs) in aug.drain(..) {
            for (col, erow, erhs) in &echelon {
                let c = row[*col].clone();
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    row[j] = row[j].sub(&c.mul(&erow[j]));
                }
                rhs = rhs.sub(&c.mul(erhs));
            }
            match row.iter().position(|v| !v.is_zero()) {
                Some(col) => {
                    let inv = row[col].inv()?;
                    let row: Vec<K> = row.iter().map(|v| v.mul(&inv)).collect();
                    let rhs = rhs.mul(&inv);
                    pivot_cols.push(col);
                    echelon.push((col, row, rhs));
                }
                None => {
                    if !rhs.is_zero() {
                        return Ok(None); // inconsistent
                    }
                }
            }
        }
        // back substitution: free variables set to zero
        let mut x = vec![K::zero(); self.cols];
        echelon.sort_by_key(|(col, _, _)| std::cmp::Reverse(*col));
        for (col, row, rhs) in &echelon {
            let mut v = rhs.clone();
            for j in col + 1..self.cols {
                if !row[j].is_zero() {
                    v = v.sub(&row[j].mul(&x[j]));
                }
            }
            x[*col] = v;
        }
        Ok(Some(x))
    }
}

/// Incremental row space with unit pivots, for rank and membership tests.
pub struct RowSpace<K: Scalar> {
    cols: usize,
    // (pivot column, reduced row with 1 at the pivot)
    rows: Vec<(usize, Vec<K>)>,
}

impl<K: Scalar> RowSpace<K> {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<K>) -> Vec<K> {
        for (col, row) in &self.rows {
            let c = v[*col].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !row[j].is_zero() {
                    v[j] = v[j].sub(&c.mul(&row[j]));
                }
            }
        }
        v
    }

    /// True when the vector enlarged the span.
    pub fn insert(&mut self, v: Vec<K>) -> bool {
        let v = self.reduce(v);
        match v.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(col) => {
                let inv = v[col].inv().expect("pivot is nonzero");
                let row: Vec<K> = v.iter().map(|c| c.mul(&inv)).collect();
                self.rows.push((col, row));
                true
            }
        }
    }

    pub fn contains(&self, v: Vec<K>) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }
}

/// All of S_n in canonical order, with the inverse lookup.
pub fn perm_index(n: usize) -> (Vec<Permutation>, BTreeMap<Permutation, usize>) {
    let perms = Permutation::all(n);
    let index = perms
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    (perms, index)
}

/// Coordinates of an element in the T_σ basis under the canonical order.
pub fn element_coords<K: Scalar>(
    x: &HeckeElement<K>,
    index: &BTreeMap<Permutation, usize>,
) -> Vec<K> {
    let mut out = vec![K::zero(); index.len()];
    for (p, c) in x.iter() {
        out[index[p]] = c.clone();
    }
    out
}

/// Dimension of the left ideal H_n·f: the span of f is closed under left
/// multiplication by the generators, growing a sparse echelon basis keyed by
/// the minimal permutation of each row.
pub fn ideal_dimension<K: Scalar>(alg: &HeckeAlgebra<K>, f: &HeckeElement<K>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = alg.n();
    let mut pivots: BTreeMap<Permutation, HeckeElement<K>> = BTreeMap::new();
    let mut queue: VecDeque<HeckeElement<K>> = VecDeque::from([f.clone()]);
    while let Some(x) = queue.pop_front() {
        if let Some((pivot, row)) = reduce_sparse(alg, &pivots, x)? {
            for i in 1..n {
                queue.push_back(alg.mul_gen_left(i, &row)?);
            }
            pivots.insert(pivot, row);
        }
    }
    Ok(pivots.len())
}

/// Reduce against the pivot rows; a nonzero remainder comes back normalized
/// to coefficient 1 at its minimal permutation.
fn reduce_sparse<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    pivots: &BTreeMap<Permutation, HeckeElement<K>>,
    mut x: HeckeElement<K>,
) -> Result<Option<(Permutation, HeckeElement<K>)>> {
    loop {
        let Some((min_perm, c)) = x.iter().next().map(|(p, c)| (p.clone(), c.clone())) else {
            return Ok(None);
        };
        match pivots.get(&min_perm) {
            Some(row) => {
                x = alg.sub(&x, &alg.scale(row, &c))?;
            }
            None => {
                let normalized = alg.scale(&x, &c.inv()?);
                return Ok(Some((min_perm, normalized)));
            }
        }
    }
}

/// Adjacent-pair kind for the divisibility eigenvalue test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdjacentKind {
    Column,
    Row,
}

/// Forced eigenvalue consequence of left divisibility: F = (T_k − q)X gives
/// T_k F = −q⁻¹ F, and F = (T_k + q⁻¹)X gives T_k F = q F.
pub fn eigen_divisibility<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    f: &HeckeElement<K>,
    k: usize,
    kind: AdjacentKind,
) -> Result<bool> {
    let lhs = alg.mul_gen_left(k, f)?;
    let eig = match kind {
        AdjacentKind::Column => alg.q_inv().neg(),
        AdjacentKind::Row => alg.q().clone(),
    };
    Ok(lhs == alg.scale(f, &eig))
}

/// Solve f = p·x in T_σ coordinates; None when no solution exists.
pub fn left_divisibility_solve<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    p: &HeckeElement<K>,
    f: &HeckeElement<K>,
) -> Result<Option<HeckeElement<K>>> {
    if p.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = alg.n();
    let (perms, index) = perm_index(n);
    let mut mat = Matrix::zeros(perms.len(), perms.len());
    for (col, sigma) in perms.iter().enumerate() {
        let image = alg.mul_t_sigma_right(p, sigma)?;
        for (tau, c) in image.iter() {
            mat.set(index[tau], col, c.clone());
        }
    }
    let b = element_coords(f, &index);
    let Some(x) = mat.solve(&b)? else {
        return Ok(None);
    };
    let terms = perms.into_iter().zip(x);
    Ok(Some(HeckeElement::from_terms(n, terms)?))
}

/// Solve f = x·g by applying φ: φ(f) = φ(g)·φ(x).
pub fn right_divisibility_solve<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    g: &HeckeElement<K>,
    f: &HeckeElement<K>,
) -> Result<Option<HeckeElement<K>>> {
    let solved = left_divisibility_solve(alg, &alg.phi(g), &alg.phi(f))?;
    Ok(solved.map(|x| alg.phi(&x)))
}

/// Matrices of left multiplication by T_1, …, T_{n−1} in a given basis of a
/// left ideal. Errors when the family is dependent or not closed.
pub fn action_matrices<K: Scalar>(
    alg: &HeckeAlgebra<K>,
    basis: &[HeckeElement<K>],
) -> Result<Vec<Matrix<K>>> {
    let n = alg.n();
    let (_, index) = perm_index(n);
    let coords: Vec<Vec<K>> = basis.iter().map(|g| element_coords(g, &index)).collect();
    let solver = SpanSolver::new(&coords)?;
    let f = basis.len();
    let mut out = Vec::new();
    for i in 1..n {
        let mut m = Matrix::zeros(f, f);
        for (j, g) in basis.iter().enumerate() {
            let image = alg.mul_gen_left(i, g)?;
            let v = element_coords(&image, &index);
            let Some(c) = solver.express(&v) else {
                return Err(Error::InvariantViolated(format!(
                    "T_{i}·basis[{j}] leaves the span"
                )));
            };
            for (r, cr) in c.into_iter().enumerate() {
                m.set(r, j, cr);
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Echelon span with bookkeeping, expressing new vectors as combinations of
/// the original family.
pub struct SpanSolver<K: Scalar> {
    cols: usize,
    family: usize,
    // (pivot col, reduced row, combination over the original family)
    rows: Vec<(usize, Vec<K>, Vec<K>)>,
}

impl<K: Scalar> SpanSolver<K> {
    pub fn new(family: &[Vec<K>]) -> Result<Self> {
        let cols = family.first().map_or(0, |v| v.len());
        let mut solver = SpanSolver {
            cols,
            family: family.len(),
            rows: Vec::new(),
        };
        for (i, v) in family.iter().enumerate() {
            let mut combo = vec![K::zero(); family.len()];
            combo[i] = K::one();
            if !solver.insert(v.clone(), combo)? {
                return Err(Error::DependentFamily);
            }
        }
        Ok(solver)
    }

    fn insert(&mut self, mut v: Vec<K>, mut combo: Vec<K>) -> Result<bool> {
        for (col, row, rcombo) in &self.rows {
            let c = v[*col].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !row[j].is_zero() {
                    v[j] = v[j].sub(&c.mul(&row[j]));
                }
            }
            for j in 0..self.family {
                if !rcombo[j].is_zero() {
                    combo[j] = combo[j].sub(&c.mul(&rcombo[j]));
                }
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => Ok(false),
            Some(col) => {
                let inv = v[col].inv()?;
                let v: Vec<K> = v.iter().map(|c| c.mul(&inv)).collect();
                let combo: Vec<K> = combo.iter().map(|c| c.mul(&inv)).collect();
                self.rows.push((col, v, combo));
                Ok(true)
            }
        }
    }

    /// Coefficients over the original family, or None when outside the span.
    pub fn express(&self, v: &[K]) -> Option<Vec<K>> {
        let mut v = v.to_vec();
        let mut combo = vec![K::zero(); self.family];
        for (col, row, rcombo) in &self.rows {
            let c = v[*col].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !row[j].is_zero() {
                    v[j] = v[j].sub(&c.mul(&row[j]));
                }
            }
            for j in 0..self.family {
                if !rcombo[j].is_zero() {
                    combo[j] = combo[j].add(&c.mul(&rcombo[j]));
                }
            }
        }
        if v.iter().all(|c| c.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }
}

/// Burnside criterion: the words in the matrices span the full f×f matrix
/// algebra exactly when the module is irreducible (over our splitting
/// fields, where End = scalars).
pub fn burnside_irreducibility<K: Scalar>(mats: &[Matrix<K>]) -> Result<bool> {
    let Some(first) = mats.first() else {
        return Ok(true); // no generators: only f = 1 makes sense upstream
    };
    let f = first.rows();
    for m in mats {
        if m.rows() != f || m.cols() != f {
            return Err(Error::MismatchedN(m.rows(), f));
        }
    }
    let mut span = RowSpace::new(f * f);
    let mut basis: Vec<Matrix<K>> = Vec::new();
    let mut queue: VecDeque<Matrix<K>> = VecDeque::new();
    queue.push_back(Matrix::identity(f));
    for m in mats {
        queue.push_back(m.clone());
    }
    while let Some(m) = queue.pop_front() {
        if span.insert(m.flatten()) {
            for g in mats {
                queue.push_back(m.mul(g)?);
            }
            basis.push(m);
        }
    }
    Ok(span.rank() == f * f)
}

/// Element of the group ring ℚS_n, the q = 1 image of H_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElement {
    n: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl GroupRingElement {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff_of(&self, p: &Permutation) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    /// σ_k · self in the group ring.
    pub fn left_mul_transposition(&self, k: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.swap_values(k), c.clone()))
            .collect();
        GroupRingElement { n: self.n, terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GroupRingElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }
}

/// Coefficient-wise evaluation at q = 1; T_σ becomes the permutation σ.
pub fn specialize_q1(f: &HeckeElement<RatQ>) -> Result<GroupRingElement> {
    let one: BigRational = One::one();
    let mut terms = BTreeMap::new();
    for (p, c) in f.iter() {
        let v = c.eval(&one).map_err(|_| Error::SpecializationPole)?;
        if !Scalar::is_zero(&v) {
            terms.insert(p.clone(), v);
        }
    }
    Ok(GroupRingElement { n: f.n(), terms })
}
