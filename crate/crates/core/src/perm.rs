//! Permutations of `[n]` in one-line notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of `S_n` stored in one-line notation with 1-based values:
/// `values()[i] == w(i + 1)`.
///
/// The derived ordering is lexicographic on one-line notation, which is the
/// enumeration order used everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty sequence".into()));
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations need n >= 1");
        Permutation((1..=n).collect())
    }

    /// The longest element `w0 = (n, n-1, ..., 1)`.
    pub fn longest_element(n: usize) -> Self {
        assert!(n >= 1, "permutations need n >= 1");
        Permutation((1..=n).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions `#{i < j : w(i) > w(j)}`.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `i` (1-based) with `w(i) > w(i+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: other.size(),
            });
        }
        Ok(Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect()))
    }

    /// `code(w)_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .collect()
    }

    /// Inverse of [`Permutation::lehmer_code`]. The code may be any finite
    /// sequence of nonnegative integers; the result is the smallest
    /// permutation (in size) realising it, padded to at least `code.len()`.
    pub fn from_lehmer_code(code: &[usize]) -> Self {
        let size = code
            .iter()
            .enumerate()
            .map(|(i, &c)| i + 1 + c)
            .max()
            .unwrap_or(1)
            .max(code.len())
            .max(1);
        let mut unused: Vec<usize> = (1..=size).collect();
        let mut values = Vec::with_capacity(size);
        for &c in code {
            values.push(unused.remove(c));
        }
        values.extend(unused);
        Permutation(values)
    }

    /// Standardisation of the subsequence of `w` at the given 1-based,
    /// strictly increasing positions.
    pub fn flatten(&self, positions: &[usize]) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::InvalidPermutation(
                "cannot flatten onto an empty position set".into(),
            ));
        }
        for (k, &p) in positions.iter().enumerate() {
            if p == 0 || p > self.size() {
                return Err(Error::IndexOutOfRange {
                    index: p,
                    valid: format!("1..={}", self.size()),
                });
            }
            if k > 0 && positions[k - 1] >= p {
                return Err(Error::InvalidPermutation(format!(
                    "positions {positions:?} are not strictly increasing"
                )));
            }
        }
        let sub: Vec<usize> = positions.iter().map(|&p| self.at(p)).collect();
        Ok(standardize(&sub))
    }

    /// Drops trailing fixed points, giving the canonical representative of
    /// `w` inside `S_∞`.
    pub fn trimmed(&self) -> Self {
        let mut end = self.size();
        while end > 1 && self.0[end - 1] == end {
            end -= 1;
        }
        Permutation(self.0[..end].to_vec())
    }

    /// Embeds `w` into `S_m` (`m >= n`) by appending fixed points.
    pub fn padded(&self, m: usize) -> Self {
        let mut values = self.0.clone();
        values.extend(self.size() + 1..=m.max(self.size()));
        Permutation(values)
    }

    /// `w · s_i`: swaps the entries at positions `i` and `i + 1` (1-based).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut values = self.0.clone();
        values.swap(i - 1, i);
        Permutation(values)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation(current.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

/// The permutation with the same relative order as `seq` (distinct entries).
pub fn standardize(seq: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by_key(|&i| seq[i]);
    let mut values = vec![0; seq.len()];
    for (rank, &i) in order.iter().enumerate() {
        values[i] = rank + 1;
    }
    Permutation(values)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// Parses `"2,3,1;2,1,3"` into a tuple of permutations.
pub fn parse_tuple(s: &str) -> Result<Vec<Permutation>> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}

pub fn format_tuple(tuple: &[Permutation]) -> String {
    tuple
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}
