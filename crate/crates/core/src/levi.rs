//! Levi-movability of Schubert tuples and the deformed (Belkale–Kumar)
//! product.
//!
//! Movability is never decided geometrically. Three numerical criteria are
//! known to be equivalent to it:
//!
//! * (i) the intersection number is nonzero and every projection `f_i`
//!   carries a complementary tuple of `Gr(a_i, n)`;
//! * (iii) for every pair of blocks the flattened tuple multiplies to a
//!   nonzero multiple of the point in `Gr(b_i, b_i + b_j)`;
//! * (iv) the same pairs satisfy the degree condition and all Horn
//!   inequalities.
//!
//! A [`MovabilityReport`] records which of them produced the verdict.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flag::{check_complementary, codim, dual, projected_codim, FlagType};
use crate::grassmann::{condition_iii_failure, condition_iv_failure, Nonvanishing};
use crate::oracle::{intersection_number, structure_constants_pair};
use crate::perm::{format_tuple, Permutation};

/// Which equivalent condition decides movability.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Method {
    /// Pairwise Grassmannian products (LR arithmetic only).
    #[default]
    ViaIii,
    /// Oracle coefficient plus the projection equalities.
    ViaI,
    /// Degree condition plus Horn inequalities.
    ViaIv,
    /// All three; disagreement is an [`Error::InvariantViolation`].
    CrossCheck,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::ViaIii, Method::ViaI, Method::ViaIv, Method::CrossCheck];

    pub fn name(self) -> &'static str {
        match self {
            Method::ViaIii => "via_iii",
            Method::ViaI => "via_i",
            Method::ViaIv => "via_iv",
            Method::CrossCheck => "cross_check",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Method::ALL.into_iter().find(|m| m.name() == key).ok_or_else(|| {
            Error::Parse(format!(
                "unknown method {s:?} (via_iii, via_i, via_iv, cross_check)"
            ))
        })
    }
}

/// Outcome of a movability decision. Conditions that were not evaluated are
/// `None`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MovabilityReport {
    pub tuple: Vec<Permutation>,
    pub flag: FlagType,
    pub condition_i: Option<bool>,
    pub condition_iii: Option<bool>,
    pub condition_iv: Option<bool>,
    pub movable: bool,
    pub method: Method,
    /// Oracle intersection number, when condition (i) was evaluated.
    pub coefficient: Option<BigUint>,
    pub failing_witness: Option<String>,
}

/// Why condition (i) fails, together with the oracle coefficient.
pub fn condition_i_failure(tuple: &[Permutation], flag: &FlagType) -> Result<(BigUint, Option<String>)> {
    check_complementary(tuple, flag)?;
    let c = intersection_number(tuple, flag)?;
    if c.is_zero() {
        return Ok((c, Some("intersection number is 0".into())));
    }
    let n = flag.ambient();
    for i in 1..=flag.len() {
        let ai = flag.boundary(i);
        let total = tuple
            .iter()
            .map(|w| projected_codim(w, flag, i))
            .sum::<Result<usize>>()?;
        if total != ai * (n - ai) {
            return Ok((
                c,
                Some(format!(
                    "step {i}: projected codimensions sum to {total}, dim Gr({ai},{n}) = {}",
                    ai * (n - ai)
                )),
            ));
        }
    }
    Ok((c, None))
}

pub fn check_condition_i(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    Ok(condition_i_failure(tuple, flag)?.1.is_none())
}

pub fn is_levi_movable(tuple: &[Permutation], flag: &FlagType, method: Method) -> Result<MovabilityReport> {
    check_complementary(tuple, flag)?;
    let mut report = MovabilityReport {
        tuple: tuple.to_vec(),
        flag: flag.clone(),
        condition_i: None,
        condition_iii: None,
        condition_iv: None,
        movable: false,
        method,
        coefficient: None,
        failing_witness: None,
    };
    let mut witnesses = Vec::new();
    if matches!(method, Method::ViaI | Method::CrossCheck) {
        let (c, why) = condition_i_failure(tuple, flag)?;
        report.coefficient = Some(c);
        report.condition_i = Some(why.is_none());
        witnesses.extend(why.map(|w| format!("(i) {w}")));
    }
    if matches!(method, Method::ViaIii | Method::CrossCheck) {
        let why = condition_iii_failure(tuple, flag)?;
        report.condition_iii = Some(why.is_none());
        witnesses.extend(why.map(|w| format!("(iii) {w}")));
    }
    if matches!(method, Method::ViaIv | Method::CrossCheck) {
        let why = condition_iv_failure(tuple, flag, Nonvanishing::LittlewoodRichardson)?;
        report.condition_iv = Some(why.is_none());
        witnesses.extend(why.map(|w| format!("(iv) {w}")));
    }
    let verdicts: Vec<bool> = [report.condition_i, report.condition_iii, report.condition_iv]
        .into_iter()
        .flatten()
        .collect();
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::InvariantViolation(format!(
            "conditions disagree on ({}) in {flag}: (i)={:?} (iii)={:?} (iv)={:?}",
            format_tuple(tuple),
            report.condition_i,
            report.condition_iii,
            report.condition_iv
        )));
    }
    report.movable = verdicts[0];
    report.failing_witness = witnesses.into_iter().next();
    Ok(report)
}

/// Movability by the default method.
pub fn levi_movable(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    Ok(is_levi_movable(tuple, flag, Method::default())?.movable)
}

/// Coefficient of `[X_v]` in the deformed product `[X_w] ⊙ [X_u]`: the
/// classical `c^v_{w,u}` when `(w, u, v∨)` is Levi-movable, else 0.
/// Zero when the degrees do not match.
pub fn bk_structure_constant(
    w: &Permutation,
    u: &Permutation,
    v: &Permutation,
    flag: &FlagType,
) -> Result<BigUint> {
    let (cw, cu, cv) = (codim(w, flag)?, codim(u, flag)?, codim(v, flag)?);
    if cw + cu != cv {
        return Ok(BigUint::zero());
    }
    let triple = [w.clone(), u.clone(), dual(v, flag)?];
    if !levi_movable(&triple, flag)? {
        return Ok(BigUint::zero());
    }
    intersection_number(&triple, flag)
}

/// The nonzero coefficients of `[X_w] ⊙ [X_u]`.
pub fn bk_product(
    w: &Permutation,
    u: &Permutation,
    flag: &FlagType,
) -> Result<BTreeMap<Permutation, BigUint>> {
    let mut out = BTreeMap::new();
    for (v, c) in structure_constants_pair(w, u, flag)? {
        if c.is_zero() {
            continue;
        }
        let triple = [w.clone(), u.clone(), dual(&v, flag)?];
        if levi_movable(&triple, flag)? {
            out.insert(v, c);
        }
    }
    Ok(out)
}

/// Whether enumerations list every ordering of a tuple or only its sorted
/// form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum TupleOrder {
    /// Weakly increasing tuples (lexicographic on one-line notation).
    #[default]
    Unordered,
    Ordered,
}

/// All `s`-tuples of `S_n(a)` whose codimensions sum to `dim Fl(a, n)`,
/// in lexicographic order.
pub fn complementary_tuples(flag: &FlagType, s: usize, order: TupleOrder) -> Vec<Vec<Permutation>> {
    let reps = flag.minimal_reps();
    let dim = flag.dimension();
    let codims: Vec<usize> = reps.iter().map(|w| dim - w.length()).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(s);
    fn rec(
        start: usize,
        budget: usize,
        s: usize,
        codims: &[usize],
        order: TupleOrder,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == s {
            if budget == 0 {
                out.push(current.clone());
            }
            return;
        }
        for k in start..codims.len() {
            if codims[k] <= budget {
                current.push(k);
                let next = if order == TupleOrder::Unordered { k } else { 0 };
                rec(next, budget - codims[k], s, codims, order, current, out);
                current.pop();
            }
        }
    }
    rec(0, dim, s, &codims, order, &mut current, &mut out);
    out.into_iter()
        .map(|ix| ix.into_iter().map(|k| reps[k].clone()).collect())
        .collect()
}

/// A Levi-movable tuple with its intersection number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MovableTuple {
    pub tuple: Vec<Permutation>,
    pub coefficient: BigUint,
}

/// Every Levi-movable complementary `s`-tuple of `Fl(a, n)` with its
/// oracle coefficient.
pub fn enumerate_levi_movable(flag: &FlagType, s: usize, order: TupleOrder) -> Result<Vec<MovableTuple>> {
    let mut out = Vec::new();
    for tuple in complementary_tuples(flag, s, order) {
        if levi_movable(&tuple, flag)? {
            let coefficient = intersection_number(&tuple, flag)?;
            out.push(MovableTuple { tuple, coefficient });
        }
    }
    Ok(out)
}
