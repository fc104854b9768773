//! Partitions, Young diagrams, standard tableaux and their combinatorics:
//! contents, principal hooks, Frobenius coordinates, the hook tableau, and
//! the groupings that define the fusion subspaces.
//!
//! Boxes are 1-based (i = row, downwards; j = column, rightwards). The
//! content of the box (i, j) is j − i.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Which equal-variable subspace the fusion product is restricted to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Hook,
    Row,
    Column,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Hook, Variant::Row, Variant::Column];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Hook => "hook",
            Variant::Row => "row",
            Variant::Column => "column",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hook" => Ok(Variant::Hook),
            "row" => Ok(Variant::Row),
            "column" => Ok(Variant::Column),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Comma-separated parts, e.g. `3,3,2`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {p:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.parts.len() && j >= 1 && j <= self.parts[i - 1]
    }

    /// Side of the Durfee square = number of principal hooks.
    pub fn durfee(&self) -> usize {
        (1..=self.parts.len()).take_while(|&k| self.parts[k - 1] >= k).count()
    }

    /// Frobenius coordinates (α | β): arm and leg lengths of the principal
    /// hooks, with β counting the diagonal box itself.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let d = self.durfee();
        let conj = self.conjugate();
        let alpha = (1..=d).map(|k| self.parts[k - 1] - k).collect();
        let beta = (1..=d).map(|k| conj.parts[k - 1] - k + 1).collect();
        (alpha, beta)
    }

    /// Principal hook lengths h_k = α_k + β_k; they sum to n.
    pub fn principal_hooks(&self) -> Vec<usize> {
        let (alpha, beta) = self.frobenius();
        alpha.iter().zip(&beta).map(|(a, b)| a + b).collect()
    }

    /// Hook length of the box (i, j).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i - 1] - j;
        let leg = self.conjugate().parts[j - 1] - i;
        arm + leg + 1
    }

    /// f^λ by the hook length formula n!/∏ h(b); the independent oracle for
    /// tableau counts and module dimensions.
    pub fn num_standard_tableaux(&self) -> u128 {
        let mut numerator: u128 = 1;
        for k in 1..=self.n() {
            numerator *= k as u128;
        }
        let mut denominator: u128 = 1;
        for i in 1..=self.parts.len() {
            for j in 1..=self.parts[i - 1] {
                denominator *= self.hook_length(i, j) as u128;
            }
        }
        numerator / denominator
    }

    /// Remove the first k principal hooks (Frobenius truncation); `None`
    /// when nothing is left.
    pub fn strip_hooks(&self, k: usize) -> Option<Partition> {
        let d = self.durfee();
        if k >= d {
            return None;
        }
        let (alpha, beta) = self.frobenius();
        let alpha = &alpha[k..];
        let beta = &beta[k..];
        let d2 = alpha.len();
        let rows = beta[0]; // β strictly decreasing, β_1 is the new column height
        let mut parts = Vec::with_capacity(rows);
        for i in 1..=rows {
            if i <= d2 {
                parts.push(alpha[i - 1] + i);
            } else {
                parts.push(beta.iter().filter(|&&b| b + 0 >= i).count());
            }
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts).ok()
    }

    /// All partitions of n, largest part first, in a fixed order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A standard filling: rows increase left to right, columns top to bottom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.n();
        if rows.len() != shape.num_rows()
            || rows.iter().zip(shape.parts()).any(|(r, &len)| r.len() != len)
        {
            return Err(Error::InvalidTableau("rows do not match the shape".into()));
        }
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::InvalidTableau(format!("bad entry {v}")));
                }
                seen[v] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("row not increasing".into()));
            }
        }
        for i in 1..rows.len() {
            for j in 0..rows[i].len() {
                if rows[i - 1][j] >= rows[i][j] {
                    return Err(Error::InvalidTableau("column not increasing".into()));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        StandardTableau::new(shape, rows)
    }

    /// The hook tableau Λ°: each principal hook filled column first, then
    /// row.
    pub fn hook_tableau(shape: &Partition) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let conj = shape.conjugate();
        let mut next = 1;
        for k in 1..=shape.durfee() {
            for i in k..=conj.parts()[k - 1] {
                rows[i - 1][k - 1] = next;
                next += 1;
            }
            for j in k + 1..=shape.parts()[k - 1] {
                rows[k - 1][j - 1] = next;
                next += 1;
            }
        }
        StandardTableau::new(shape.clone(), rows).expect("hook filling is standard")
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Box (i, j) of each entry, 1-based, indexed by entry − 1.
    pub fn entry_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.n()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out[v - 1] = (i + 1, j + 1);
            }
        }
        out
    }

    /// c_a = j − i for the box holding entry a, indexed by entry − 1.
    pub fn contents(&self) -> Vec<i64> {
        self.entry_boxes()
            .iter()
            .map(|&(i, j)| j as i64 - i as i64)
            .collect()
    }

    /// Group index of each entry under the variant: the 0-based principal
    /// hook / row / column holding it. Natural order coincides with
    /// ascending minimal entry because corners, first-column and first-row
    /// entries increase along the diagonal.
    pub fn entry_groups(&self, variant: Variant) -> Vec<usize> {
        self.entry_boxes()
            .iter()
            .map(|&(i, j)| match variant {
                Variant::Hook => i.min(j) - 1,
                Variant::Row => i - 1,
                Variant::Column => j - 1,
            })
            .collect()
    }

    pub fn group_count(&self, variant: Variant) -> usize {
        match variant {
            Variant::Hook => self.shape.durfee(),
            Variant::Row => self.shape.num_rows(),
            Variant::Column => self.shape.parts()[0],
        }
    }

    /// Row-by-row reading word; the enumeration order key.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// All standard tableaux of the shape, ordered lexicographically by
    /// reading word.
    pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
        let n = shape.n();
        let parts = shape.parts();
        let mut filled = vec![0usize; parts.len()];
        let mut rows: Vec<Vec<usize>> = parts.iter().map(|&len| Vec::with_capacity(len)).collect();
        let mut out = Vec::new();
        fn rec(
            entry: usize,
            n: usize,
            parts: &[usize],
            filled: &mut Vec<usize>,
            rows: &mut Vec<Vec<usize>>,
            shape: &Partition,
            out: &mut Vec<StandardTableau>,
        ) {
            if entry > n {
                out.push(StandardTableau {
                    shape: shape.clone(),
                    rows: rows.clone(),
                });
                return;
            }
            for r in 0..parts.len() {
                let can_place =
                    filled[r] < parts[r] && (r == 0 || filled[r - 1] > filled[r]);
                if can_place {
                    filled[r] += 1;
                    rows[r].push(entry);
                    rec(entry + 1, n, parts, filled, rows, shape, out);
                    rows[r].pop();
                    filled[r] -= 1;
                }
            }
        }
        rec(1, n, parts, &mut filled, &mut rows, shape, &mut out);
        out.sort_by_key(|t| t.reading_word());
        out
    }

    /// Swap the entries k and k+1; an error when they share a row or column
    /// (the swap would not be standard).
    pub fn adjacent_swap(&self, k: usize) -> Result<StandardTableau> {
        let boxes = self.entry_boxes();
        if k == 0 || k >= self.n() {
            return Err(Error::NonStandardSwap(k, k + 1));
        }
        let (i1, j1) = boxes[k - 1];
        let (i2, j2) = boxes[k];
        if i1 == i2 || j1 == j2 {
            return Err(Error::NonStandardSwap(k, k + 1));
        }
        let mut rows = self.rows.clone();
        rows[i1 - 1][j1 - 1] = k + 1;
        rows[i2 - 1][j2 - 1] = k;
        StandardTableau::new(self.shape.clone(), rows)
    }

    /// Resolve a CLI-style selector: "hook" or an index into the
    /// enumeration order.
    pub fn select(shape: &Partition, selector: &str) -> Result<StandardTableau> {
        if selector == "hook" {
            return Ok(StandardTableau::hook_tableau(shape));
        }
        let index: usize = selector
            .parse()
            .map_err(|_| Error::Parse(format!("tableau selector {selector:?}")))?;
        let all = StandardTableau::standard_tableaux(shape);
        if index >= all.len() {
            return Err(Error::TableauIndexOutOfRange {
                index,
                count: all.len(),
            });
        }
        Ok(all[index].clone())
    }

    /// The permutation ρ with Λ = ρ·Λ°, i.e. Λ(a, b) = ρ(Λ°(a, b)).
    pub fn rho_from_hook(&self) -> Permutation {
        let hook = StandardTableau::hook_tableau(&self.shape);
        let mut images = vec![0usize; self.n()];
        for (i, row) in hook.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                images[v - 1] = self.rows[i][j];
            }
        }
        Permutation::from_images(images).expect("both fillings are bijective")
    }
}

impl std::fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}
