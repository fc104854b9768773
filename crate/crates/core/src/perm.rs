//! Permutations of {1, …, n} in one-line notation, with the composition
//! convention (s∘t)(i) = s(t(i)).
//!
//! The derived lexicographic order on the one-line images is the canonical
//! order used for sparse Hecke coefficient maps and serialization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition σ_i = (i, i+1), 1 ≤ i ≤ n−1.
    pub fn adjacent_transposition(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::GeneratorOutOfRange { index: i, n });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The longest element [n, n−1, …, 1].
    pub fn longest(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("n = 0".into()));
        }
        Ok(Permutation {
            images: (1..=n).rev().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of i, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// (self∘rhs)(i) = self(rhs(i)).
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.n() != rhs.n() {
            return Err(Error::MismatchedN(self.n(), rhs.n()));
        }
        Ok(Permutation {
            images: rhs.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// self∘σ_i: swap the entries at positions i and i+1.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// σ_i∘self: swap the values i and i+1 wherever they occur.
    pub fn swap_values(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        for v in images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { images }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for a in 0..self.images.len() {
            for b in a + 1..self.images.len() {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Length together with a reduced word w such that
    /// self = σ_{w_1} ∘ σ_{w_2} ∘ … ∘ σ_{w_l}.
    ///
    /// Deterministic descent scan: repeatedly take the smallest i with
    /// s(i) > s(i+1) and multiply by σ_i on the right; the recorded indices,
    /// reversed, are the reduced word of s itself.
    pub fn length_and_word(&self) -> (usize, Vec<usize>) {
        let mut s = self.images.clone();
        let mut word = Vec::new();
        loop {
            let descent = (0..s.len().saturating_sub(1)).find(|&k| s[k] > s[k + 1]);
            match descent {
                Some(k) => {
                    s.swap(k, k + 1);
                    word.push(k + 1);
                }
                None => break,
            }
        }
        word.reverse();
        (word.len(), word)
    }

    /// All permutations of S_n in the canonical (lexicographic) order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_lex(&mut current) {
                break;
            }
        }
        out
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        // [2,1,3] ∘ [1,3,2] = [2,3,1]
        assert_eq!(perm(&[2, 1, 3]).compose(&perm(&[1, 3, 2])).unwrap(), perm(&[2, 3, 1]));
        let s = perm(&[3, 1, 2]);
        assert_eq!(s.compose(&Permutation::identity(3)).unwrap(), s);
        // involution
        assert_eq!(perm(&[2, 1]).compose(&perm(&[2, 1])).unwrap(), Permutation::identity(2));
        assert!(perm(&[2, 1]).compose(&perm(&[1, 2, 3])).is_err());
    }

    #[test]
    fn longest_element() {
        assert_eq!(Permutation::longest(3).unwrap(), perm(&[3, 2, 1]));
        assert_eq!(Permutation::longest(1).unwrap(), perm(&[1]));
        assert_eq!(Permutation::longest(4).unwrap().length(), 6);
        assert!(Permutation::longest(0).is_err());
    }

    #[test]
    fn length_and_word_examples() {
        assert_eq!(Permutation::identity(4).length_and_word(), (0, vec![]));
        let (l, w) = perm(&[3, 2, 1]).length_and_word();
        assert_eq!(l, 3);
        assert_eq!(w.len(), 3);
        assert_eq!(perm(&[2, 1, 3]).length_and_word(), (1, vec![1]));
    }

    /// The word multiplies out (left to right, under ∘) to the permutation,
    /// and its length is the inversion count — exhaustively for n ≤ 5.
    #[test]
    fn words_are_reduced_and_reproduce() {
        for n in 1..=5 {
            for s in Permutation::all(n) {
                let (l, w) = s.length_and_word();
                assert_eq!(l, s.length());
                let mut acc = Permutation::identity(n);
                for &i in &w {
                    acc = acc.compose(&Permutation::adjacent_transposition(i, n).unwrap()).unwrap();
                }
                assert_eq!(acc, s, "word {w:?} fails for {s}");
            }
        }
    }

    #[test]
    fn compose_associative_exhaustive_n3() {
        let all = Permutation::all(3);
        for a in &all {
            for b in &all {
                for c in &all {
                    let left = a.compose(b).unwrap().compose(c).unwrap();
                    let right = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn swap_helpers_match_compose() {
        let s = perm(&[2, 4, 1, 3]);
        let t1 = Permutation::adjacent_transposition(2, 4).unwrap();
        assert_eq!(s.swap_positions(2), s.compose(&t1).unwrap());
        assert_eq!(s.swap_values(2), t1.compose(&s).unwrap());
    }

    #[test]
    fn all_is_sorted_and_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
