//! Exhaustive verification suites.
//!
//! Each suite sweeps a fixed, small family of flag varieties and compares
//! the combinatorial machinery with the Schubert-polynomial oracle. A suite
//! never stops at the first problem; every disagreement (including errors
//! raised by the library) is collected in the report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor::{check_induced_movability, factor_full, factor_once, pairwise_factor};
use crate::flag::{dual, gamma_reduce, FlagType};
use crate::grassmann::{
    check_condition_iii, check_condition_iv_with, partition_from_perm, perm_from_partition, product_to_point,
    Nonvanishing, Partition,
};
use crate::lengths::{fiber_length_relation_holds, flag_types_up_to, scan_reading, ADOPTED_READING};
use crate::levi::{check_condition_i, complementary_tuples, levi_movable, TupleOrder};
use crate::oracle::intersection_number;
use crate::perm::{format_tuple, Permutation};

/// Flag types `(steps, n)` of the equivalence and factorization sweeps.
pub const SWEEP_FLAGS: [(&[usize], usize); 7] = [
    (&[1, 2], 3),
    (&[1, 2], 4),
    (&[1, 3], 4),
    (&[2], 4),
    (&[1, 2, 3], 4),
    (&[2], 5),
    (&[1, 2], 5),
];

/// Tuple sizes of the equivalence and factorization sweeps.
pub const SWEEP_ARITIES: [usize; 2] = [2, 3];

/// `(n, s)` for the complete-flag sweep.
pub const COMPLETE_FLAG_CASES: [(usize, usize); 5] = [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)];

/// Grassmannians `(r, n)` on which LR is compared with the oracle.
pub const LR_ORACLE_GRASSMANNIANS: [(usize, usize); 3] = [(2, 4), (2, 5), (3, 5)];

pub const LENGTHS_MAX_N: usize = 6;
pub const DUALITY_MAX_N: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Suite {
    /// Conditions (i), (iii), (iv) agree.
    Thm1,
    /// `c = c_1 c_γ`, leaf products, induced movability.
    Thm2,
    /// Movable tuples on complete flags have coefficient 1.
    Cor13,
    /// Length relations for projections and flattenings.
    Lengths,
    /// LR against the polynomial oracle on Grassmannians.
    LrOracle,
    /// Poincaré duality.
    Duality,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Thm1,
        Suite::Thm2,
        Suite::Cor13,
        Suite::Lengths,
        Suite::LrOracle,
        Suite::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Cor13 => "cor13",
            Suite::Lengths => "lengths",
            Suite::LrOracle => "lr-oracle",
            Suite::Duality => "duality",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Number of individual cases examined.
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, what: impl FnOnce() -> String, outcome: Result<bool>) {
        self.checked += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }
}

/// Runs `suite`, skipping flag varieties with ambient dimension above
/// `max_n` when given.
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> Result<SuiteReport> {
    let cap = max_n.unwrap_or(usize::MAX);
    let mut report = SuiteReport::new(suite);
    match suite {
        Suite::Thm1 => {
            for (flag, s) in sweep_cases(cap)? {
                for tuple in complementary_tuples(&flag, s, TupleOrder::Unordered) {
                    report.record(|| describe(&tuple, &flag), conditions_agree(&tuple, &flag));
                }
            }
        }
        Suite::Thm2 => {
            for (flag, s) in sweep_cases(cap)? {
                for tuple in complementary_tuples(&flag, s, TupleOrder::Unordered) {
                    match levi_movable(&tuple, &flag) {
                        Ok(false) => {}
                        Ok(true) => {
                            report.record(|| describe(&tuple, &flag), factorization_holds(&tuple, &flag))
                        }
                        Err(e) => report.record(|| describe(&tuple, &flag), Err(e)),
                    }
                }
            }
        }
        Suite::Cor13 => {
            for (n, s) in COMPLETE_FLAG_CASES.into_iter().filter(|&(n, _)| n <= cap) {
                let flag = FlagType::complete(n)?;
                for tuple in complementary_tuples(&flag, s, TupleOrder::Unordered) {
                    let outcome = levi_movable(&tuple, &flag)
                        .and_then(|movable| Ok(!movable || intersection_number(&tuple, &flag)?.is_one()));
                    report.record(|| describe(&tuple, &flag), outcome);
                }
            }
        }
        Suite::Lengths => {
            let top = cap.min(LENGTHS_MAX_N);
            for flag in flag_types_up_to(top) {
                for w in flag.minimal_reps() {
                    report.record(
                        || format!("{w} in {flag}: length(w_γ) != length(w) - length(w_1)"),
                        fiber_length_relation_holds(&w, &flag),
                    );
                }
            }
            let (checked, bad) = scan_reading(ADOPTED_READING, top)?;
            report.checked += checked;
            if let Some(bad) = bad {
                report.failures.push(format!("adopted reading fails: {bad:?}"));
            }
        }
        Suite::LrOracle => {
            for (r, n) in LR_ORACLE_GRASSMANNIANS.into_iter().filter(|&(_, n)| n <= cap) {
                let flag = FlagType::grassmannian(r, n)?;
                for tuple in complementary_tuples(&flag, 3, TupleOrder::Ordered) {
                    report.record(|| describe(&tuple, &flag), lr_matches_oracle(&tuple, r, n));
                }
            }
            for (r, n, s, expected) in [(2, 4, 4, 2u32), (2, 5, 6, 5)] {
                if n > cap {
                    continue;
                }
                let sigma1 = perm_from_partition(&Partition::new(vec![1])?, r, n)?;
                let tuple = vec![sigma1; s];
                let outcome = intersection_number(&tuple, &FlagType::grassmannian(r, n)?)
                    .map(|c| c == BigUint::from(expected))
                    .and_then(|ok| Ok(ok && lr_matches_oracle(&tuple, r, n)?));
                report.record(|| format!("σ1^{s} in Gr({r},{n}) != {expected}"), outcome);
            }
        }
        Suite::Duality => {
            for flag in flag_types_up_to(cap.min(DUALITY_MAX_N)) {
                let reps = flag.minimal_reps();
                for w in &reps {
                    for u in reps.iter().filter(|u| u.length() == w.length()) {
                        let expected = if u == w { BigUint::one() } else { BigUint::zero() };
                        let outcome = dual(u, &flag)
                            .and_then(|ud| intersection_number(&[w.clone(), ud], &flag))
                            .map(|c| c == expected);
                        report.record(|| format!("<{w}, {u}∨> != {expected} in {flag}"), outcome);
                    }
                }
            }
            let w = Permutation::new(vec![2, 5, 3, 1, 4])?;
            let flat = w.flatten(&[1, 2, 5]);
            report.record(
                || "flatten((2,5,3,1,4), {1,2,5}) != (1,3,2)".to_string(),
                flat.map(|x| x.values() == [1, 3, 2]),
            );
        }
    }
    Ok(report)
}

/// `(flag, s)` pairs of the main sweep with ambient at most `cap`.
pub fn sweep_cases(cap: usize) -> Result<Vec<(FlagType, usize)>> {
    let mut out = Vec::new();
    for (steps, n) in SWEEP_FLAGS.into_iter().filter(|&(_, n)| n <= cap) {
        let flag = FlagType::new(steps.to_vec(), n)?;
        for s in SWEEP_ARITIES {
            out.push((flag.clone(), s));
        }
    }
    Ok(out)
}

fn describe(tuple: &[Permutation], flag: &FlagType) -> String {
    format!("({}) in {flag}", format_tuple(tuple))
}

/// (i), (iii), (iv) with LR nonvanishing and (iv) with recursive Horn all
/// give the same verdict.
pub fn conditions_agree(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    let i = check_condition_i(tuple, flag)?;
    let iii = check_condition_iii(tuple, flag)?;
    let iv = check_condition_iv_with(tuple, flag, Nonvanishing::LittlewoodRichardson)?;
    let iv_horn = check_condition_iv_with(tuple, flag, Nonvanishing::RecursiveHorn)?;
    Ok(i == iii && iii == iv && iv == iv_horn)
}

/// Every factorization claim for a Levi-movable tuple.
pub fn factorization_holds(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    // factor_once fails unless c = c_1 c_γ
    let step = factor_once(tuple, flag)?;
    let tree = factor_full(tuple, flag, false)?;
    if tree.leaf_product() != step.coefficient {
        return Ok(false);
    }
    let shapes: Vec<(usize, usize)> = tree.leaves().iter().map(|l| (l.rank, l.ambient)).collect();
    let expected: Vec<(usize, usize)> = (1..=flag.len())
        .map(|i| {
            (
                flag.boundary(i) - flag.boundary(i - 1),
                flag.ambient() - flag.boundary(i - 1),
            )
        })
        .collect();
    if shapes != expected {
        return Ok(false);
    }
    if check_induced_movability(tuple, flag)? != (true, true) {
        return Ok(false);
    }
    for w in tuple {
        if !duality_commutes(w, flag)? {
            return Ok(false);
        }
    }
    if let [w, u, x] = tuple {
        // read the triple as c^{x∨}_{w,u}
        pairwise_factor(w, u, &dual(x, flag)?, flag)?;
    }
    Ok(true)
}

/// `(w∨)_1 = (w_1)∨` and `(w∨)_γ = (w_γ)∨`.
pub fn duality_commutes(w: &Permutation, flag: &FlagType) -> Result<bool> {
    let g = gamma_reduce(w, flag)?;
    let gd = gamma_reduce(&dual(w, flag)?, flag)?;
    let base_flag = FlagType::grassmannian(flag.boundary(1), flag.ambient())?;
    Ok(dual(&g.base, &base_flag)? == gd.base && dual(&g.fiber_perm, &g.fiber_flag)? == gd.fiber_perm)
}

/// LR product to the point equals the oracle intersection number.
pub fn lr_matches_oracle(tuple: &[Permutation], r: usize, n: usize) -> Result<bool> {
    let flag = FlagType::grassmannian(r, n)?;
    let parts = tuple
        .iter()
        .map(|w| partition_from_perm(w, r, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(product_to_point(&parts, r, n)? == intersection_number(tuple, &flag)?)
}
