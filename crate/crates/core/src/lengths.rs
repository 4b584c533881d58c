//! Length relations between `w`, its projection `w_1` and its fiber
//! permutation `w_γ`.
//!
//! `length(w_γ) = length(w) - length(w_1)` holds for every `w ∈ S_n(a)`.
//! The refined relation for the projections of `w_γ` reads
//!
//! ```text
//! length((w_γ)_i) = length(w_{i+1}) - length(w_1) + Σ_k length(w_{1,k})
//! ```
//!
//! where the range of `k` admits several readings. [`InducedLengthReading`]
//! enumerates them and [`scan_reading`] tests one exhaustively; the reading
//! that holds for every flag type is [`ADOPTED_READING`].

use crate::error::Result;
use crate::flag::{flatten_pair, gamma_reduce, project_to_step, FlagType};
use crate::perm::Permutation;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InducedLengthReading {
    /// `k = 1..=i` with `w_{1,1}` taken as the flattening onto `A_1` alone.
    Literal,
    /// `k = 2..=i+1`: one term per block of the fiber up to step `i`.
    Shifted,
    /// `k = 2..=i`.
    Truncated,
}

impl InducedLengthReading {
    pub const ALL: [InducedLengthReading; 3] = [
        InducedLengthReading::Literal,
        InducedLengthReading::Shifted,
        InducedLengthReading::Truncated,
    ];
}

pub const ADOPTED_READING: InducedLengthReading = InducedLengthReading::Shifted;

/// Checks `length(w_γ) = length(w) - length(w_1)`.
pub fn fiber_length_relation_holds(w: &Permutation, flag: &FlagType) -> Result<bool> {
    let g = gamma_reduce(w, flag)?;
    Ok(g.fiber_perm.length() + g.base.length() == w.length())
}

/// `length((w_γ)_i)` for `i` in `1..r`.
pub fn induced_length(w: &Permutation, flag: &FlagType, i: usize) -> Result<usize> {
    let g = gamma_reduce(w, flag)?;
    Ok(project_to_step(&g.fiber_perm, &g.fiber_flag, i)?.length())
}

/// Right-hand side of the refined relation under the given reading.
pub fn induced_length_rhs(
    w: &Permutation,
    flag: &FlagType,
    i: usize,
    reading: InducedLengthReading,
) -> Result<i64> {
    let len = |x: Permutation| x.length() as i64;
    let base = len(project_to_step(w, flag, i + 1)?) - len(project_to_step(w, flag, 1)?);
    let pair = |k: usize| -> Result<i64> {
        if k == 1 {
            let a1: Vec<usize> = flag.block(1).collect();
            Ok(len(w.flatten(&a1)?))
        } else {
            Ok(len(flatten_pair(w, flag, 1, k)?))
        }
    };
    let range = match reading {
        InducedLengthReading::Literal => 1..=i,
        InducedLengthReading::Shifted => 2..=i + 1,
        InducedLengthReading::Truncated => 2..=i,
    };
    let mut total = base;
    for k in range {
        total += pair(k)?;
    }
    Ok(total)
}

/// A failure of a reading: the permutation, flag and index where the two
/// sides differ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReadingCounterexample {
    pub w: Permutation,
    pub flag: FlagType,
    pub index: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Tests `reading` on every `w ∈ S_n(a)` for every flag type with
/// `2 <= r` and `n <= max_n`; returns the first counterexample, if any, and
/// the number of instances checked.
pub fn scan_reading(
    reading: InducedLengthReading,
    max_n: usize,
) -> Result<(usize, Option<ReadingCounterexample>)> {
    let mut checked = 0;
    for flag in flag_types_up_to(max_n) {
        for w in flag.minimal_reps() {
            for i in 1..flag.len() {
                let lhs = induced_length(&w, &flag, i)? as i64;
                let rhs = induced_length_rhs(&w, &flag, i, reading)?;
                checked += 1;
                if lhs != rhs {
                    return Ok((
                        checked,
                        Some(ReadingCounterexample {
                            w,
                            flag,
                            index: i,
                            lhs,
                            rhs,
                        }),
                    ));
                }
            }
        }
    }
    Ok((checked, None))
}

/// Every flag type with at least one step and ambient `2..=max_n`.
pub fn flag_types_up_to(max_n: usize) -> Vec<FlagType> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for mask in 1u32..(1 << (n - 1)) {
            let steps = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            out.push(FlagType::new(steps, n).expect("valid steps"));
        }
    }
    out
}
