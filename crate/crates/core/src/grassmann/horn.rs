use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use super::{grassmannian_codim, partition_from_perm, product_to_point};
use crate::error::{Error, Result};
use crate::flag::{check_complementary, flatten_pair, FlagType};
use crate::perm::{format_tuple, Permutation};

/// How nonvanishing of a Grassmannian product is decided inside the Horn
/// inequalities.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Nonvanishing {
    /// Littlewood–Richardson positivity.
    #[default]
    LittlewoodRichardson,
    /// Horn recursion all the way down to projective spaces.
    RecursiveHorn,
}

/// `Σ_k Σ_{l ≤ d} (b_j + u^k(l) - w^k(u^k(l))) <= d · b_j`
/// for `w^k ∈ S_{b_i+b_j}({b_i})` and `u^k ∈ S_{b_i}({d})`.
pub fn horn_inequality_holds(
    tuple_w: &[Permutation],
    tuple_u: &[Permutation],
    d: usize,
    b_i: usize,
    b_j: usize,
) -> Result<bool> {
    if tuple_w.len() != tuple_u.len() {
        return Err(Error::SizeMismatch {
            expected: tuple_w.len(),
            found: tuple_u.len(),
        });
    }
    if d == 0 || d >= b_i {
        return Err(Error::IndexOutOfRange {
            index: d,
            valid: format!("1..{b_i}"),
        });
    }
    let outer = FlagType::grassmannian(b_i, b_i + b_j)?;
    let inner = FlagType::grassmannian(d, b_i)?;
    let mut total = 0i64;
    for (w, u) in tuple_w.iter().zip(tuple_u) {
        outer.check_member(w)?;
        inner.check_member(u)?;
        for l in 1..=d {
            total += (b_j + u.at(l)) as i64 - w.at(u.at(l)) as i64;
        }
    }
    Ok(total <= (d * b_j) as i64)
}

/// Whether `Π [X_{w^k}]` is a nonzero multiple of the point class of
/// `Gr(r, n)`.
pub fn is_nonvanishing(tuple: &[Permutation], r: usize, n: usize, mode: Nonvanishing) -> Result<bool> {
    let codims = tuple
        .iter()
        .map(|w| grassmannian_codim(w, r, n))
        .collect::<Result<Vec<_>>>()?;
    if codims.iter().sum::<usize>() != r * (n - r) {
        return Ok(false);
    }
    match mode {
        Nonvanishing::LittlewoodRichardson => {
            let parts = tuple
                .iter()
                .map(|w| partition_from_perm(w, r, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(!product_to_point(&parts, r, n)?.is_zero())
        }
        Nonvanishing::RecursiveHorn => Ok(horn_failure(tuple, r, n, mode)?.is_none()),
    }
}

type TupleCache = RwLock<HashMap<(usize, usize, usize, Nonvanishing), Arc<Vec<Vec<Permutation>>>>>;

/// All ordered `s`-tuples in `S_m({d})` whose product is a nonzero multiple
/// of the point class of `Gr(d, m)`, in lexicographic order.
pub fn nonvanishing_tuples(
    s: usize,
    d: usize,
    m: usize,
    mode: Nonvanishing,
) -> Result<Arc<Vec<Vec<Permutation>>>> {
    static CACHE: OnceLock<TupleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (s, d, m, mode);
    if let Some(hit) = cache.read().expect("cache poisoned").get(&key) {
        return Ok(Arc::clone(hit));
    }
    let flag = FlagType::grassmannian(d, m)?;
    let reps = flag.minimal_reps();
    let dim = flag.dimension();
    let mut candidates = Vec::new();
    let mut current = Vec::with_capacity(s);
    // degree filter first: codimensions must add up to dim Gr(d, m)
    fn rec(
        reps: &[Permutation],
        s: usize,
        dim: usize,
        budget: usize,
        current: &mut Vec<Permutation>,
        out: &mut Vec<Vec<Permutation>>,
    ) {
        if current.len() == s {
            if budget == 0 {
                out.push(current.clone());
            }
            return;
        }
        for u in reps {
            let c = dim - u.length();
            if c <= budget {
                current.push(u.clone());
                rec(reps, s, dim, budget - c, current, out);
                current.pop();
            }
        }
    }
    rec(&reps, s, dim, dim, &mut current, &mut candidates);
    let mut out = Vec::new();
    for tuple in candidates {
        if is_nonvanishing(&tuple, d, m, mode)? {
            out.push(tuple);
        }
    }
    let out = Arc::new(out);
    cache
        .write()
        .expect("cache poisoned")
        .insert(key, Arc::clone(&out));
    Ok(out)
}

/// First Horn inequality of `Gr(r, n)` violated by `tuple`, if any.
fn horn_failure(tuple: &[Permutation], r: usize, n: usize, mode: Nonvanishing) -> Result<Option<String>> {
    for d in 1..r {
        for us in nonvanishing_tuples(tuple.len(), d, r, mode)?.iter() {
            if !horn_inequality_holds(tuple, us, d, r, n - r)? {
                return Ok(Some(format!(
                    "Horn inequality for d={d}, u=({}) fails in Gr({r},{n})",
                    format_tuple(us)
                )));
            }
        }
    }
    Ok(None)
}

fn pair_data(
    tuple: &[Permutation],
    flag: &FlagType,
    i: usize,
    j: usize,
) -> Result<(Vec<Permutation>, usize, usize)> {
    let sizes = flag.block_sizes();
    let flat = tuple
        .iter()
        .map(|w| flatten_pair(w, flag, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok((flat, sizes[i - 1], sizes[i - 1] + sizes[j - 1]))
}

fn pairs(flag: &FlagType) -> impl Iterator<Item = (usize, usize)> {
    let blocks = flag.len() + 1;
    (1..=blocks).flat_map(move |i| (i + 1..=blocks).map(move |j| (i, j)))
}

/// Why condition (iii) fails for `tuple`, or `None` when every pair
/// flattening multiplies to a nonzero multiple of the point.
pub fn condition_iii_failure(tuple: &[Permutation], flag: &FlagType) -> Result<Option<String>> {
    check_complementary(tuple, flag)?;
    for (i, j) in pairs(flag) {
        let (flat, k, m) = pair_data(tuple, flag, i, j)?;
        let parts = flat
            .iter()
            .map(|w| partition_from_perm(w, k, m))
            .collect::<Result<Vec<_>>>()?;
        let total: usize = parts.iter().map(|p| p.size()).sum();
        if total != k * (m - k) {
            return Ok(Some(format!(
                "pair ({i},{j}): flattened codimensions sum to {total}, dim Gr({k},{m}) = {}",
                k * (m - k)
            )));
        }
        if product_to_point(&parts, k, m)?.is_zero() {
            let shown: Vec<String> = parts.iter().map(|p| format!("({p})")).collect();
            return Ok(Some(format!(
                "pair ({i},{j}): product of {} vanishes in Gr({k},{m})",
                shown.join("·")
            )));
        }
    }
    Ok(None)
}

pub fn check_condition_iii(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    Ok(condition_iii_failure(tuple, flag)?.is_none())
}

/// Why condition (iv) fails: a pair whose flattened codimensions do not
/// add up, or a violated Horn inequality.
pub fn condition_iv_failure(
    tuple: &[Permutation],
    flag: &FlagType,
    mode: Nonvanishing,
) -> Result<Option<String>> {
    check_complementary(tuple, flag)?;
    for (i, j) in pairs(flag) {
        let (flat, k, m) = pair_data(tuple, flag, i, j)?;
        let total = flat
            .iter()
            .map(|w| grassmannian_codim(w, k, m))
            .sum::<Result<usize>>()?;
        if total != k * (m - k) {
            return Ok(Some(format!(
                "pair ({i},{j}): flattened codimensions sum to {total}, dim Gr({k},{m}) = {}",
                k * (m - k)
            )));
        }
        if let Some(why) = horn_failure(&flat, k, m, mode)? {
            return Ok(Some(format!("pair ({i},{j}): {why}")));
        }
    }
    Ok(None)
}

pub fn check_condition_iv(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    check_condition_iv_with(tuple, flag, Nonvanishing::default())
}

pub fn check_condition_iv_with(tuple: &[Permutation], flag: &FlagType, mode: Nonvanishing) -> Result<bool> {
    Ok(condition_iv_failure(tuple, flag, mode)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::{perm_from_partition, Partition};

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn f(s: &str) -> FlagType {
        s.parse().unwrap()
    }

    fn multisets(reps: &[Permutation], s: usize) -> Vec<Vec<Permutation>> {
        use itertools::Itertools;
        reps.iter().cloned().combinations_with_replacement(s).collect()
    }

    #[test]
    fn horn_inequality_edge_cases() {
        // u^k(l) = l, w^k of maximal length: every summand is as small as possible
        let w = FlagType::grassmannian(2, 4).unwrap().maximal_rep();
        let u = p(&[1, 2]);
        assert!(horn_inequality_holds(&[w.clone(), w.clone()], &[u.clone(), u.clone()], 1, 2, 2).unwrap());
        assert!(horn_inequality_holds(&[], &[], 1, 2, 2).unwrap());
        assert!(horn_inequality_holds(std::slice::from_ref(&w), &[], 1, 2, 2).is_err());
        assert!(horn_inequality_holds(std::slice::from_ref(&w), std::slice::from_ref(&u), 2, 2, 2).is_err());
        assert!(horn_inequality_holds(&[p(&[2, 1, 4, 3])], &[u], 1, 2, 2).is_err());
    }

    #[test]
    fn horn_violation_fixture() {
        // σ2 · σ11 = 0 in Gr(2,4) although codimensions add up; the Horn
        // inequality for d = 1 with u = ((1,2),(2,1)) detects it: 2 + 1 > 2.
        let w2 = perm_from_partition(&Partition::new(vec![2]).unwrap(), 2, 4).unwrap();
        let w11 = perm_from_partition(&Partition::new(vec![1, 1]).unwrap(), 2, 4).unwrap();
        assert_eq!(w2, p(&[1, 4, 2, 3]));
        assert_eq!(w11, p(&[2, 3, 1, 4]));
        let tuple = [w2, w11];
        assert!(!horn_inequality_holds(&tuple, &[p(&[1, 2]), p(&[2, 1])], 1, 2, 2).unwrap());
        assert!(horn_inequality_holds(&tuple, &[p(&[2, 1]), p(&[1, 2])], 1, 2, 2).unwrap());
        let why = condition_iv_failure(&tuple, &f("2/4"), Nonvanishing::LittlewoodRichardson).unwrap();
        assert!(why.unwrap().contains("d=1"));
    }

    #[test]
    fn condition_iii_examples() {
        let flag = f("1,2/3");
        assert!(check_condition_iii(&[p(&[2, 3, 1]), p(&[2, 1, 3])], &flag).unwrap());
        assert!(!check_condition_iii(&[p(&[3, 1, 2]), p(&[3, 1, 2]), p(&[2, 3, 1])], &flag).unwrap());
        assert!(check_condition_iii(&[p(&[3, 1, 2])], &flag).is_err());
    }

    #[test]
    fn condition_iv_examples() {
        let flag = f("1,2/3");
        assert!(check_condition_iv(&[p(&[2, 3, 1]), p(&[2, 1, 3])], &flag).unwrap());
        assert!(!check_condition_iv(&[p(&[3, 1, 2]), p(&[3, 1, 2]), p(&[2, 3, 1])], &flag).unwrap());
    }

    #[test]
    fn grassmannian_condition_iii_is_plain_nonvanishing() {
        for (r, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let flag = FlagType::grassmannian(r, n).unwrap();
            for s in 2..=3 {
                for tuple in multisets(&flag.minimal_reps(), s) {
                    if check_complementary(&tuple, &flag).is_err() {
                        continue;
                    }
                    let lr = is_nonvanishing(&tuple, r, n, Nonvanishing::LittlewoodRichardson).unwrap();
                    assert_eq!(check_condition_iii(&tuple, &flag).unwrap(), lr);
                    assert_eq!(
                        check_condition_iv(&tuple, &flag).unwrap(),
                        lr,
                        "{}",
                        format_tuple(&tuple)
                    );
                }
            }
        }
    }

    #[test]
    fn recursive_horn_agrees_with_lr() {
        for (r, n) in [(2, 4), (2, 5), (3, 6), (2, 6)] {
            for s in 2..=3 {
                let lr = nonvanishing_tuples(s, r, n, Nonvanishing::LittlewoodRichardson).unwrap();
                let horn = nonvanishing_tuples(s, r, n, Nonvanishing::RecursiveHorn).unwrap();
                assert_eq!(lr, horn, "Gr({r},{n}) s={s}");
            }
        }
    }

    #[test]
    fn complete_flag_has_no_horn_inequalities() {
        // every b_i = 1, so (iv) reduces to the codimension check (a)
        let flag = FlagType::complete(4).unwrap();
        for tuple in multisets(&flag.minimal_reps(), 2) {
            if check_complementary(&tuple, &flag).is_err() {
                continue;
            }
            let codims_ok = pairs(&flag).all(|(i, j)| {
                let (flat, k, m) = pair_data(&tuple, &flag, i, j).unwrap();
                flat.iter()
                    .map(|w| grassmannian_codim(w, k, m).unwrap())
                    .sum::<usize>()
                    == k * (m - k)
            });
            assert_eq!(check_condition_iv(&tuple, &flag).unwrap(), codims_ok);
        }
    }
}
