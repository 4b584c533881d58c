//! Ground-truth structure constants of `H*(Fl(a, n))` via Schubert
//! polynomials.
//!
//! Schubert polynomials are indexed by codimension, the rest of the crate by
//! dimension. The single translation point is [`class_polynomial`]: the
//! dimension-indexed class `[X_w]` is represented by `S_{w∨}` with
//! `w∨ = w0 w w_a`, and the point class `[X_e]` by `S_{w0 w_a}`.
//!
//! Products are expanded in the Schubert basis of the full polynomial ring.
//! Basis elements indexed outside `S_n` lie in the ideal defining the
//! cohomology ring, so they are dropped after every multiplication.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::flag::{check_complementary, dual, FlagType};
use crate::perm::Permutation;
use crate::poly::{Monomial, SparsePolynomial};

/// Schubert-basis expansion keyed by permutations in trimmed form
/// (no trailing fixed points).
pub type Expansion = BTreeMap<Permutation, BigInt>;

type Cache = RwLock<HashMap<Permutation, Arc<SparsePolynomial>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Schubert polynomial `S_w`.
///
/// If `code(w)` is weakly decreasing, `w` is dominant and `S_w = x^{code(w)}`.
/// Otherwise pick the first `i` with `code_i < code_{i+1}`; then `w s_i` is
/// longer than `w` and `S_w = ∂_i S_{w s_i}`. Results are memoised in a
/// process-wide table keyed by the trimmed permutation.
pub fn schubert_polynomial(w: &Permutation) -> Result<Arc<SparsePolynomial>> {
    let key = w.trimmed();
    if let Some(p) = cache().read().expect("cache poisoned").get(&key) {
        return Ok(Arc::clone(p));
    }
    let code = key.lehmer_code();
    let poly = match code.windows(2).position(|c| c[0] < c[1]) {
        None => SparsePolynomial::monomial(
            Monomial::new(code.iter().map(|&c| c as u32).collect()),
            BigInt::one(),
        ),
        Some(k) => {
            let i = k + 1;
            schubert_polynomial(&key.swap_adjacent(i))?.divided_difference(i)?
        }
    };
    let poly = Arc::new(poly);
    cache()
        .write()
        .expect("cache poisoned")
        .insert(key, Arc::clone(&poly));
    Ok(poly)
}

/// `S_w` by the classical route: start from `x_1^{n-1} x_2^{n-2} ... x_{n-1}`
/// (the polynomial of `w0`) and apply `∂_i` along a chain down to `w`.
/// Uncached; exponential in `n`, intended for cross-checking.
pub fn schubert_polynomial_from_staircase(w: &Permutation) -> Result<SparsePolynomial> {
    let n = w.size();
    // climb from w to w0 by ascents, recording the positions
    let mut chain = Vec::new();
    let mut current = w.clone();
    while let Some(k) = current.values().windows(2).position(|p| p[0] < p[1]) {
        chain.push(k + 1);
        current = current.swap_adjacent(k + 1);
    }
    let staircase: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let mut poly = SparsePolynomial::monomial(Monomial::new(staircase), BigInt::one());
    for &i in chain.iter().rev() {
        poly = poly.divided_difference(i)?;
    }
    Ok(poly)
}

pub fn divided_difference(p: &SparsePolynomial, i: usize) -> Result<SparsePolynomial> {
    p.divided_difference(i)
}

/// Writes `p` as an integer combination of Schubert polynomials by
/// repeatedly cancelling the leading monomial `c · x^{code}` with
/// `c · S_v`, where `v` is the permutation with that code.
pub fn expand_in_schubert_basis(p: &SparsePolynomial) -> Result<Expansion> {
    let mut rest = p.clone();
    let mut out = Expansion::new();
    while let Some((m, c)) = rest.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        let code: Vec<usize> = m.exponents().iter().map(|&e| e as usize).collect();
        let v = Permutation::from_lehmer_code(&code).trimmed();
        let s = schubert_polynomial(&v)?;
        if s.leading_term().map(|(lm, _)| lm) != Some(&m) {
            return Err(Error::InvariantViolation(format!(
                "leading monomial of S_{v} is not x^{code:?}"
            )));
        }
        rest.add_scaled(&s, &-&c);
        let entry = out.entry(v).or_insert_with(BigInt::zero);
        *entry += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Keeps the terms indexed inside `S_n`, re-padded to size `n`.
pub fn restrict_to(expansion: &Expansion, n: usize) -> BTreeMap<Permutation, BigInt> {
    expansion
        .iter()
        .filter(|(v, _)| v.size() <= n)
        .map(|(v, c)| (v.padded(n), c.clone()))
        .collect()
}

/// Monk's rule: `(x_1 + ... + x_r) S_w = Σ S_{w t_{ab}}` over `a <= r < b`
/// with `length(w t_{ab}) = length(w) + 1`.
pub fn monk_product(w: &Permutation, r: usize) -> Expansion {
    let m = w.size().max(r) + 1;
    let w = w.padded(m);
    let mut out = Expansion::new();
    for a in 1..=r {
        for b in r + 1..=m {
            let (wa, wb) = (w.at(a), w.at(b));
            let covers = wa < wb && (a + 1..b).all(|c| !(wa < w.at(c) && w.at(c) < wb));
            if covers {
                let mut values = w.values().to_vec();
                values.swap(a - 1, b - 1);
                let v = Permutation::new(values).expect("transposition").trimmed();
                *out.entry(v).or_insert_with(BigInt::zero) += 1;
            }
        }
    }
    out
}

/// The polynomial representing the dimension-indexed class `[X_w]`, namely
/// `S_{w∨}`.
pub fn class_polynomial(w: &Permutation, flag: &FlagType) -> Result<Arc<SparsePolynomial>> {
    schubert_polynomial(&dual(w, flag)?)
}

fn combine(expansion: &BTreeMap<Permutation, BigInt>) -> Result<SparsePolynomial> {
    let mut p = SparsePolynomial::zero();
    for (v, c) in expansion {
        p.add_scaled(&*schubert_polynomial(v)?, c);
    }
    Ok(p)
}

/// Product of the classes of `tuple` in `H*(Fl(a, n))`, as a map from the
/// codimension index `v ∈ S_n(a)` to its coefficient in the basis `S_v`.
fn product_in_codim_basis(tuple: &[Permutation], flag: &FlagType) -> Result<BTreeMap<Permutation, BigInt>> {
    let n = flag.ambient();
    let mut acc: Option<SparsePolynomial> = None;
    for w in tuple {
        let class = class_polynomial(w, flag)?;
        acc = Some(match acc {
            None => (*class).clone(),
            Some(prev) => {
                let product = &prev * &class;
                combine(&restrict_to(&expand_in_schubert_basis(&product)?, n))?
            }
        });
    }
    let acc = acc.unwrap_or_else(SparsePolynomial::one);
    let terms = restrict_to(&expand_in_schubert_basis(&acc)?, n);
    if let Some(v) = terms.keys().find(|v| !flag.contains(v)) {
        return Err(Error::InvariantViolation(format!(
            "product of classes of {flag} produced S_{v} outside S_n(a)"
        )));
    }
    Ok(terms)
}

fn to_nonnegative(c: &BigInt, what: &str) -> Result<BigUint> {
    c.to_biguint()
        .ok_or_else(|| Error::InvariantViolation(format!("negative {what}: {c}")))
}

/// `c` in `Π [X_{w^k}] = c [pt]`. The codimensions must sum to the
/// dimension of the flag variety.
pub fn intersection_number(tuple: &[Permutation], flag: &FlagType) -> Result<BigUint> {
    check_complementary(tuple, flag)?;
    let terms = product_in_codim_basis(tuple, flag)?;
    let point = flag.maximal_rep();
    if let Some(v) = terms.keys().find(|&v| v != &point) {
        return Err(Error::InvariantViolation(format!(
            "top-degree product has a term S_{v} besides the point class"
        )));
    }
    let c = terms.get(&point).cloned().unwrap_or_default();
    to_nonnegative(&c, "intersection number")
}

/// `{v ↦ c^v_{w,u}}` with `[X_w]·[X_u] = Σ c^v_{w,u} [X_v]`, dimension-indexed.
pub fn structure_constants_pair(
    w: &Permutation,
    u: &Permutation,
    flag: &FlagType,
) -> Result<BTreeMap<Permutation, BigUint>> {
    flag.check_member(w)?;
    flag.check_member(u)?;
    let terms = product_in_codim_basis(&[w.clone(), u.clone()], flag)?;
    terms
        .iter()
        .map(|(v, c)| Ok((dual(v, flag)?, to_nonnegative(c, "structure constant")?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    fn f(s: &str) -> FlagType {
        s.parse().unwrap()
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn schubert_polynomial_examples() {
        assert_eq!(
            *schubert_polynomial(&Permutation::identity(4)).unwrap(),
            SparsePolynomial::one()
        );
        assert_eq!(
            *schubert_polynomial(&p(&[2, 1, 3, 4])).unwrap(),
            SparsePolynomial::variable(1)
        );
        assert_eq!(
            *schubert_polynomial(&p(&[3, 2, 1])).unwrap(),
            poly(&[(&[2, 1], 1)])
        );
        assert_eq!(
            *schubert_polynomial(&p(&[1, 3, 2])).unwrap(),
            poly(&[(&[1], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            *schubert_polynomial(&p(&[2, 4, 1, 3])).unwrap(),
            poly(&[(&[2, 1], 1), (&[1, 2], 1)])
        );
    }

    #[test]
    fn both_constructions_agree() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                assert_eq!(
                    *schubert_polynomial(&w).unwrap(),
                    schubert_polynomial_from_staircase(&w).unwrap(),
                    "{w}"
                );
            }
        }
    }

    #[test]
    fn schubert_polynomial_shape() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let s = schubert_polynomial(&w).unwrap();
                assert!(s.is_homogeneous());
                assert!(s.all_coefficients_nonnegative());
                let (lm, lc) = s.leading_term().unwrap();
                let code: Vec<u32> = w.lehmer_code().iter().map(|&c| c as u32).collect();
                assert_eq!(lm, &Monomial::new(code));
                assert!(lc.is_one());
                assert_eq!(lm.degree() as usize, w.length());
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_schubert_basis(&poly(&[(&[2], 1)])).unwrap();
        assert_eq!(e, Expansion::from([(p(&[3, 1, 2]), BigInt::one())]));
        // x1 (x1 + x2)
        let e = expand_in_schubert_basis(&poly(&[(&[2], 1), (&[1, 1], 1)])).unwrap();
        assert_eq!(
            e,
            Expansion::from([(p(&[3, 1, 2]), BigInt::one()), (p(&[2, 3, 1]), BigInt::one())])
        );
        assert!(expand_in_schubert_basis(&SparsePolynomial::zero())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn expansion_of_a_schubert_polynomial_is_itself() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                let e = expand_in_schubert_basis(&schubert_polynomial(&w).unwrap()).unwrap();
                assert_eq!(e, Expansion::from([(w.trimmed(), BigInt::one())]));
            }
        }
    }

    #[test]
    fn expansion_handles_inhomogeneous_input() {
        // 3 - x2 + 2 x1^2: S_{132} = x1 + x2, S_{213} = x1, S_{312} = x1^2
        let e = expand_in_schubert_basis(&poly(&[(&[], 3), (&[0, 1], -1), (&[2], 2)])).unwrap();
        assert_eq!(
            e,
            Expansion::from([
                (p(&[1]), BigInt::from(3)),
                (p(&[1, 3, 2]), BigInt::from(-1)),
                (p(&[2, 1]), BigInt::from(1)),
                (p(&[3, 1, 2]), BigInt::from(2)),
            ])
        );
    }

    #[test]
    fn monk_rule_agrees_with_expansion() {
        for n in 1..=5 {
            for w in Permutation::all(n) {
                for r in 1..=n {
                    let xbar = (1..=r).fold(SparsePolynomial::zero(), |acc, i| {
                        &acc + &SparsePolynomial::variable(i)
                    });
                    let product = &xbar * &schubert_polynomial(&w).unwrap();
                    assert_eq!(
                        expand_in_schubert_basis(&product).unwrap(),
                        monk_product(&w, r),
                        "{w} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn grassmannian_pair_products() {
        // σ1 · σ1 = σ2 + σ11 in Gr(2,4); both classes have dimension 2
        let flag = f("2/4");
        let sigma1 = p(&[2, 4, 1, 3]);
        let c = structure_constants_pair(&sigma1, &sigma1, &flag).unwrap();
        assert_eq!(
            c,
            BTreeMap::from([(p(&[1, 4, 2, 3]), big(1)), (p(&[2, 3, 1, 4]), big(1))])
        );
    }

    #[test]
    fn fundamental_class_is_the_unit() {
        for flag in [f("1,2/3"), f("2/4"), f("1,3/4")] {
            let unit = flag.maximal_rep();
            for u in flag.minimal_reps() {
                let c = structure_constants_pair(&unit, &u, &flag).unwrap();
                assert_eq!(c, BTreeMap::from([(u.clone(), big(1))]), "{flag} {u}");
            }
        }
    }

    #[test]
    fn complete_flag_hand_products() {
        let flag = f("1,2/3");
        let c = structure_constants_pair(&p(&[2, 3, 1]), &p(&[2, 1, 3]), &flag).unwrap();
        assert_eq!(c.get(&Permutation::identity(3)), Some(&big(1)));
        assert_eq!(
            intersection_number(&[p(&[3, 1, 2]), p(&[3, 1, 2]), p(&[2, 3, 1])], &flag).unwrap(),
            big(1)
        );
    }

    #[test]
    fn degree_of_gr24() {
        let s = p(&[2, 4, 1, 3]);
        assert_eq!(
            intersection_number(&[s.clone(), s.clone(), s.clone(), s], &f("2/4")).unwrap(),
            big(2)
        );
    }

    #[test]
    fn codimension_mismatch_is_rejected() {
        let s = p(&[2, 4, 1, 3]);
        assert_eq!(
            intersection_number(&[s.clone(), s], &f("2/4")),
            Err(Error::CodimensionMismatch {
                expected: 4,
                found: 2
            })
        );
        assert!(intersection_number(&[p(&[3, 2, 1])], &f("1/3")).is_err());
    }

    #[test]
    fn point_variety_has_unit_coefficient() {
        let point = FlagType::point(3).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(intersection_number(&[id.clone(), id], &point).unwrap(), big(1));
        assert_eq!(intersection_number(&[], &point).unwrap(), big(1));
    }

    #[test]
    fn poincare_duality() {
        for flag in crate::lengths::flag_types_up_to(5) {
            let reps = flag.minimal_reps();
            for w in &reps {
                let wd = dual(w, &flag).unwrap();
                assert_eq!(intersection_number(&[w.clone(), wd], &flag).unwrap(), big(1));
                for u in &reps {
                    if u == w {
                        continue;
                    }
                    let ud = dual(u, &flag).unwrap();
                    if w.length() + ud.length() != flag.dimension() {
                        continue;
                    }
                    assert!(intersection_number(&[w.clone(), ud], &flag).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn intersection_number_ignores_order() {
        let flag = f("1,2/4");
        let reps = flag.minimal_reps();
        let dim = flag.dimension();
        for a in &reps {
            for b in &reps {
                for c in &reps {
                    if 3 * dim != a.length() + b.length() + c.length() + dim {
                        continue;
                    }
                    let base = intersection_number(&[a.clone(), b.clone(), c.clone()], &flag).unwrap();
                    assert_eq!(
                        base,
                        intersection_number(&[c.clone(), a.clone(), b.clone()], &flag).unwrap()
                    );
                    assert_eq!(
                        base,
                        intersection_number(&[b.clone(), a.clone(), c.clone()], &flag).unwrap()
                    );
                }
            }
        }
    }
}
