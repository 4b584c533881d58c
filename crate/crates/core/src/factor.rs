//! Factorization of Levi-movable intersection numbers.
//!
//! For a Levi-movable tuple the projection `f_1 : Fl(a, n) -> Gr(a_1, n)`
//! splits the coefficient as `c = c_1 · c_γ`, where `c_1` belongs to the
//! projected tuple `(w_1^k)` on `Gr(a_1, n)` and `c_γ` to the flattened tuple
//! `(w_γ^k)` on the fiber `Fl(a_γ, n - a_1)`. Repeating the split ends in
//! Littlewood–Richardson numbers of `Gr(b_i, n - a_{i-1})`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::flag::{check_complementary, dual, gamma_reduce, FlagType};
use crate::grassmann::{partition_from_perm, product_to_point, Partition};
use crate::levi::levi_movable;
use crate::oracle::intersection_number;
use crate::perm::{format_tuple, Permutation};

/// A Littlewood–Richardson leaf: a tuple of `Gr(rank, ambient)` and the
/// coefficient of the point in its product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrassmannFactor {
    pub rank: usize,
    pub ambient: usize,
    pub tuple: Vec<Permutation>,
    pub partitions: Vec<Partition>,
    pub coefficient: BigUint,
}

impl GrassmannFactor {
    pub fn new(tuple: Vec<Permutation>, rank: usize, ambient: usize) -> Result<Self> {
        let partitions = tuple
            .iter()
            .map(|w| partition_from_perm(w, rank, ambient))
            .collect::<Result<Vec<_>>>()?;
        let coefficient = product_to_point(&partitions, rank, ambient)?;
        Ok(GrassmannFactor {
            rank,
            ambient,
            tuple,
            partitions,
            coefficient,
        })
    }

    pub fn flag(&self) -> FlagType {
        FlagType::grassmannian(self.rank, self.ambient).expect("leaf is a Grassmannian")
    }
}

/// One application of the projection to the first step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorStep {
    /// Oracle coefficient of the input tuple.
    pub coefficient: BigUint,
    pub base: GrassmannFactor,
    pub fiber_tuple: Vec<Permutation>,
    pub fiber_flag: FlagType,
    /// Oracle coefficient of the fiber tuple; 1 when the fiber is a point.
    pub fiber_coefficient: BigUint,
}

/// The recursive factorization of a Levi-movable tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorizationTree {
    pub flag: FlagType,
    pub tuple: Vec<Permutation>,
    pub coefficient: BigUint,
    pub base: GrassmannFactor,
    /// `None` when the flag has one step (the fiber is a point).
    pub fiber: Option<Box<FactorizationTree>>,
}

impl FactorizationTree {
    /// The Grassmannian factors from the top level down.
    pub fn leaves(&self) -> Vec<&GrassmannFactor> {
        let mut out = vec![&self.base];
        let mut node = self;
        while let Some(next) = &node.fiber {
            out.push(&next.base);
            node = next;
        }
        out
    }

    pub fn depth(&self) -> usize {
        self.leaves().len()
    }

    pub fn leaf_product(&self) -> BigUint {
        self.leaves().iter().map(|l| &l.coefficient).product()
    }
}

fn require_movable(tuple: &[Permutation], flag: &FlagType) -> Result<()> {
    check_complementary(tuple, flag)?;
    if flag.is_point() {
        return Err(Error::InvalidFlag("the point has nothing to factor".into()));
    }
    if !levi_movable(tuple, flag)? {
        return Err(Error::NotLeviMovable(format!(
            "({}) in {flag}",
            format_tuple(tuple)
        )));
    }
    Ok(())
}

fn split(tuple: &[Permutation], flag: &FlagType) -> Result<(GrassmannFactor, Vec<Permutation>, FlagType)> {
    let reductions = tuple
        .iter()
        .map(|w| gamma_reduce(w, flag))
        .collect::<Result<Vec<_>>>()?;
    let base = GrassmannFactor::new(
        reductions.iter().map(|g| g.base.clone()).collect(),
        flag.boundary(1),
        flag.ambient(),
    )?;
    let fiber_flag = flag.fiber()?;
    let fiber_tuple = reductions.into_iter().map(|g| g.fiber_perm).collect();
    Ok((base, fiber_tuple, fiber_flag))
}

fn oracle_or_unit(tuple: &[Permutation], flag: &FlagType) -> Result<BigUint> {
    if flag.is_point() {
        Ok(BigUint::one())
    } else {
        intersection_number(tuple, flag)
    }
}

/// `c = c_1 · c_γ` with `c` and `c_γ` from the polynomial oracle and `c_1`
/// from Littlewood–Richardson.
pub fn factor_once(tuple: &[Permutation], flag: &FlagType) -> Result<FactorStep> {
    require_movable(tuple, flag)?;
    let coefficient = intersection_number(tuple, flag)?;
    let (base, fiber_tuple, fiber_flag) = split(tuple, flag)?;
    let fiber_coefficient = oracle_or_unit(&fiber_tuple, &fiber_flag)?;
    if coefficient != &base.coefficient * &fiber_coefficient {
        return Err(Error::InvariantViolation(format!(
            "({}) in {flag}: c = {coefficient} but c_1 · c_γ = {} · {fiber_coefficient}",
            format_tuple(tuple),
            base.coefficient
        )));
    }
    Ok(FactorStep {
        coefficient,
        base,
        fiber_tuple,
        fiber_flag,
        fiber_coefficient,
    })
}

/// The full factorization tree. Coefficients are products of the LR leaves;
/// with `verify` every node is also checked for movability and against the
/// oracle.
pub fn factor_full(tuple: &[Permutation], flag: &FlagType, verify: bool) -> Result<FactorizationTree> {
    require_movable(tuple, flag)?;
    build(tuple, flag, verify)
}

fn build(tuple: &[Permutation], flag: &FlagType, verify: bool) -> Result<FactorizationTree> {
    let (base, fiber_tuple, fiber_flag) = split(tuple, flag)?;
    let fiber = if fiber_flag.is_point() {
        None
    } else {
        if verify && !levi_movable(&fiber_tuple, &fiber_flag)? {
            return Err(Error::InvariantViolation(format!(
                "fiber tuple ({}) in {fiber_flag} is not Levi-movable",
                format_tuple(&fiber_tuple)
            )));
        }
        Some(Box::new(build(&fiber_tuple, &fiber_flag, verify)?))
    };
    let fiber_coefficient = fiber
        .as_ref()
        .map_or_else(BigUint::one, |t| t.coefficient.clone());
    let coefficient = &base.coefficient * fiber_coefficient;
    if verify {
        let expected = intersection_number(tuple, flag)?;
        if expected != coefficient {
            return Err(Error::InvariantViolation(format!(
                "({}) in {flag}: oracle gives {expected}, factorization gives {coefficient}",
                format_tuple(tuple)
            )));
        }
    }
    Ok(FactorizationTree {
        flag: flag.clone(),
        tuple: tuple.to_vec(),
        coefficient,
        base,
        fiber,
    })
}

/// Movability of the projected tuple on `Gr(a_1, n)` and of the fiber tuple
/// on `Fl(a_γ, n - a_1)` (vacuous for a point).
pub fn check_induced_movability(tuple: &[Permutation], flag: &FlagType) -> Result<(bool, bool)> {
    require_movable(tuple, flag)?;
    let (base, fiber_tuple, fiber_flag) = split(tuple, flag)?;
    let projected_ok = movable_or_false(&base.tuple, &base.flag())?;
    let fiber_ok = fiber_flag.is_point() || movable_or_false(&fiber_tuple, &fiber_flag)?;
    Ok((projected_ok, fiber_ok))
}

fn movable_or_false(tuple: &[Permutation], flag: &FlagType) -> Result<bool> {
    match levi_movable(tuple, flag) {
        Err(Error::CodimensionMismatch { .. }) => Ok(false),
        other => other,
    }
}

/// The three coefficients of `c^v_{w,u} = c^{v_1}_{w_1,u_1} · c^{v_γ}_{w_γ,u_γ}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairwiseFactor {
    pub c: BigUint,
    pub c1: BigUint,
    pub c_gamma: BigUint,
}

/// Factors the structure constant `c^v_{w,u}` of a Levi-movable triple
/// `(w, u, v∨)`, checking along the way that duality commutes with the
/// reduction: `(v∨)_1 = (v_1)∨` and `(v∨)_γ = (v_γ)∨`.
pub fn pairwise_factor(
    w: &Permutation,
    u: &Permutation,
    v: &Permutation,
    flag: &FlagType,
) -> Result<PairwiseFactor> {
    let v_dual = dual(v, flag)?;
    let triple = [w.clone(), u.clone(), v_dual.clone()];
    require_movable(&triple, flag)?;
    let c = intersection_number(&triple, flag)?;

    let (gw, gu, gv, gvd) = (
        gamma_reduce(w, flag)?,
        gamma_reduce(u, flag)?,
        gamma_reduce(v, flag)?,
        gamma_reduce(&v_dual, flag)?,
    );
    let base_flag = FlagType::grassmannian(flag.boundary(1), flag.ambient())?;
    if dual(&gv.base, &base_flag)? != gvd.base {
        return Err(Error::InvariantViolation(format!(
            "(v∨)_1 != (v_1)∨ for v = {v} in {flag}"
        )));
    }
    let fiber_flag = gv.fiber_flag.clone();
    if dual(&gv.fiber_perm, &fiber_flag)? != gvd.fiber_perm {
        return Err(Error::InvariantViolation(format!(
            "(v∨)_γ != (v_γ)∨ for v = {v} in {flag}"
        )));
    }
    let c1 = GrassmannFactor::new(
        vec![gw.base, gu.base, gvd.base],
        base_flag.steps()[0],
        base_flag.ambient(),
    )?
    .coefficient;
    let c_gamma = oracle_or_unit(&[gw.fiber_perm, gu.fiber_perm, gvd.fiber_perm], &fiber_flag)?;
    if c != &c1 * &c_gamma {
        return Err(Error::InvariantViolation(format!(
            "c^{v}_{{{w},{u}}} = {c} but c1 · c_γ = {c1} · {c_gamma} in {flag}"
        )));
    }
    Ok(PairwiseFactor { c, c1, c_gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levi::{enumerate_levi_movable, TupleOrder};

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn f(s: &str) -> FlagType {
        s.parse().unwrap()
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn factor_once_examples() {
        let flag = f("1,2/3");
        let step = factor_once(&[p(&[2, 3, 1]), p(&[2, 1, 3])], &flag).unwrap();
        assert_eq!(step.coefficient, big(1));
        assert_eq!((step.base.rank, step.base.ambient), (1, 3));
        assert_eq!(step.base.coefficient, big(1));
        assert_eq!(step.fiber_flag, f("1/2"));
        assert_eq!(step.fiber_tuple, vec![p(&[2, 1]), p(&[1, 2])]);
        assert_eq!(step.fiber_coefficient, big(1));

        let sigma1 = p(&[2, 4, 1, 3]);
        let step = factor_once(&vec![sigma1; 4], &f("2/4")).unwrap();
        assert!(step.fiber_flag.is_point());
        assert_eq!(step.fiber_coefficient, big(1));
        assert_eq!(step.base.coefficient, big(2));
        assert_eq!(step.coefficient, big(2));
    }

    #[test]
    fn non_movable_input_is_rejected() {
        let bad = [p(&[3, 1, 2]), p(&[3, 1, 2]), p(&[2, 3, 1])];
        let flag = f("1,2/3");
        assert!(matches!(factor_once(&bad, &flag), Err(Error::NotLeviMovable(_))));
        assert!(matches!(
            factor_full(&bad, &flag, true),
            Err(Error::NotLeviMovable(_))
        ));
        assert!(matches!(
            check_induced_movability(&bad, &flag),
            Err(Error::NotLeviMovable(_))
        ));
    }

    #[test]
    fn trees_have_expected_shape() {
        let flag = f("1,2/3");
        let tree = factor_full(&[p(&[2, 3, 1]), p(&[2, 1, 3])], &flag, true).unwrap();
        assert_eq!(tree.depth(), 2);
        assert!(tree.leaves().iter().all(|l| l.coefficient == big(1)));
        assert_eq!(tree.leaf_product(), big(1));

        let sigma1 = p(&[2, 4, 1, 3]);
        let tree = factor_full(&[sigma1.clone(), sigma1, p(&[1, 4, 2, 3])], &f("2/4"), true).unwrap();
        assert_eq!(tree.depth(), 1);
        assert_eq!(tree.coefficient, big(1));
    }

    #[test]
    fn leaves_follow_the_blocks() {
        for flag in [f("1,3/4"), f("1,2/4"), f("2,3/5")] {
            for m in enumerate_levi_movable(&flag, 3, TupleOrder::Unordered).unwrap() {
                let tree = factor_full(&m.tuple, &flag, true).unwrap();
                let shapes: Vec<(usize, usize)> = tree.leaves().iter().map(|l| (l.rank, l.ambient)).collect();
                let expected: Vec<(usize, usize)> = (1..=flag.len())
                    .map(|i| {
                        (
                            flag.boundary(i) - flag.boundary(i - 1),
                            flag.ambient() - flag.boundary(i - 1),
                        )
                    })
                    .collect();
                assert_eq!(shapes, expected);
                assert_eq!(tree.leaf_product(), m.coefficient);
                assert_eq!(check_induced_movability(&m.tuple, &flag).unwrap(), (true, true));
            }
        }
    }

    #[test]
    fn pairwise_factor_on_small_flags() {
        for flag in crate::lengths::flag_types_up_to(4) {
            let reps = flag.minimal_reps();
            let mut seen = 0;
            for w in &reps {
                for u in &reps {
                    for v in &reps {
                        let triple = [w.clone(), u.clone(), dual(v, &flag).unwrap()];
                        if check_complementary(&triple, &flag).is_err()
                            || !levi_movable(&triple, &flag).unwrap()
                        {
                            continue;
                        }
                        let pf = pairwise_factor(w, u, v, &flag).unwrap();
                        assert_eq!(pf.c, &pf.c1 * &pf.c_gamma);
                        if flag.is_complete() {
                            assert_eq!((pf.c, pf.c1, pf.c_gamma), (big(1), big(1), big(1)));
                        }
                        seen += 1;
                    }
                }
            }
            assert!(seen > 0);
        }
    }

    #[test]
    fn pairwise_factor_with_unit() {
        let flag = f("1,2/4");
        let top = flag.maximal_rep();
        for u in flag.minimal_reps() {
            let pf = pairwise_factor(&top, &u, &u, &flag).unwrap();
            assert_eq!((pf.c, pf.c1, pf.c_gamma), (big(1), big(1), big(1)));
        }
    }
}
