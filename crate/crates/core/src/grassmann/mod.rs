//! Grassmannians `Gr(r, n)`: partitions in codimension indexing, the
//! Littlewood–Richardson rule, and the Horn inequalities.

mod horn;
mod lr;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flag::FlagType;
use crate::perm::Permutation;

pub use horn::{
    check_condition_iii, check_condition_iv, check_condition_iv_with, condition_iii_failure,
    condition_iv_failure, horn_inequality_holds, is_nonvanishing, nonvanishing_tuples, Nonvanishing,
};
pub use lr::{lr_coefficient, lr_product, product_to_point};

/// A weakly decreasing sequence of positive parts; trailing zeros are
/// dropped on construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        Partition::new(parts).expect("weakly decreasing parts")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `λ_j = n - r + j - w(j)` for `j ∈ [r]`; `|λ|` is the codimension of
/// `[X_w]` in `Gr(r, n)`.
pub fn partition_from_perm(w: &Permutation, r: usize, n: usize) -> Result<Partition> {
    FlagType::grassmannian(r, n)?.check_member(w)?;
    Partition::new((1..=r).map(|j| n - r + j - w.at(j)).collect())
}

/// The unique `w ∈ S_n({r})` with `partition_from_perm(w) = λ`.
pub fn perm_from_partition(lambda: &Partition, r: usize, n: usize) -> Result<Permutation> {
    FlagType::grassmannian(r, n)?;
    if !lambda.fits(r, n - r) {
        return Err(Error::InvalidPartition(format!(
            "{lambda} does not fit the {r}x{} rectangle",
            n - r
        )));
    }
    let mut head: Vec<usize> = (1..=r).map(|j| n - r + j - lambda.part(j - 1)).collect();
    let mut tail: Vec<usize> = (1..=n).filter(|v| !head.contains(v)).collect();
    head.append(&mut tail);
    Permutation::new(head)
}

/// Grassmannian codimension `r(n - r) - length(w)` after checking `w ∈ S_n({r})`.
pub fn grassmannian_codim(w: &Permutation, r: usize, n: usize) -> Result<usize> {
    FlagType::grassmannian(r, n)?.check_member(w)?;
    Ok(r * (n - r) - w.length())
}

/// All partitions fitting the `rows × cols` rectangle, containing `inner`,
/// of the given size.
pub(crate) fn partitions_between(inner: &Partition, rows: usize, cols: usize, size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(rows);
    fn rec(
        inner: &Partition,
        rows: usize,
        cap: usize,
        remaining: usize,
        parts: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        let row = parts.len();
        if row == rows {
            if remaining == 0 {
                out.push(Partition::from_parts_unchecked(parts.clone()));
            }
            return;
        }
        let lo = inner.part(row);
        for v in (lo..=cap.min(remaining)).rev() {
            // remaining rows can absorb at most v each
            if v * (rows - row) < remaining {
                break;
            }
            parts.push(v);
            rec(inner, rows, v, remaining - v, parts, out);
            parts.pop();
        }
    }
    if size < inner.size() || !inner.fits(rows, cols) {
        return out;
    }
    rec(inner, rows, cols, size, &mut parts, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_from_perm_examples() {
        assert_eq!(partition_from_perm(&p(&[2, 4, 1, 3]), 2, 4).unwrap(), part(&[1]));
        assert_eq!(
            partition_from_perm(&Permutation::identity(5), 2, 5).unwrap(),
            part(&[3, 3])
        );
        assert_eq!(
            partition_from_perm(&p(&[3, 4, 5, 1, 2]), 3, 5).unwrap(),
            Partition::empty()
        );
        assert!(partition_from_perm(&p(&[2, 1, 4, 3]), 1, 4).is_err());
    }

    #[test]
    fn perm_from_partition_examples() {
        assert_eq!(perm_from_partition(&part(&[1]), 2, 4).unwrap(), p(&[2, 4, 1, 3]));
        assert_eq!(
            perm_from_partition(&Partition::empty(), 2, 4).unwrap(),
            p(&[3, 4, 1, 2])
        );
        assert_eq!(
            perm_from_partition(&part(&[2, 2]), 2, 4).unwrap(),
            Permutation::identity(4)
        );
        assert!(perm_from_partition(&part(&[3]), 2, 4).is_err());
        assert!(perm_from_partition(&part(&[1, 1, 1]), 2, 4).is_err());
    }

    #[test]
    fn conversions_are_inverse() {
        for n in 2..=7 {
            for r in 1..n {
                let flag = FlagType::grassmannian(r, n).unwrap();
                let reps = flag.minimal_reps();
                let parts = partitions_between(&Partition::empty(), r, n - r, 0);
                assert_eq!(parts.len(), 1);
                let mut count = 0;
                for size in 0..=r * (n - r) {
                    for lambda in partitions_between(&Partition::empty(), r, n - r, size) {
                        let w = perm_from_partition(&lambda, r, n).unwrap();
                        assert!(flag.contains(&w));
                        assert_eq!(partition_from_perm(&w, r, n).unwrap(), lambda);
                        assert_eq!(lambda.size(), grassmannian_codim(&w, r, n).unwrap());
                        count += 1;
                    }
                }
                assert_eq!(count, reps.len());
            }
        }
    }

    #[test]
    fn partition_text_form() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), part(&[2, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("2,1,0".parse::<Partition>().unwrap().to_string(), "2,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }
}
