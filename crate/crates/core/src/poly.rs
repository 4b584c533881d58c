//! Sparse multivariate polynomials over the integers in variables
//! `x_1, x_2, ...`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exponent vector with trailing zeros trimmed; `exponents()[k]` is the
/// power of `x_{k+1}`.
///
/// Monomials are ordered by total degree, then reverse-lexicographically:
/// the exponent of the highest-indexed variable is compared first and the
/// larger exponent wins. Under this order the leading monomial of the
/// Schubert polynomial of `w` is `x^{code(w)}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variables up to the last one that occurs.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() < i {
            v.resize(i, 0);
        }
        v[i - 1] = e;
        Monomial::new(v)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut v = long.clone();
        for (a, b) in v.iter_mut().zip(short) {
            *a += b;
        }
        Monomial(v)
    }

    /// Swaps the exponents of `x_i` and `x_{i+1}`.
    fn swapped(&self, i: usize) -> Monomial {
        let (a, b) = (self.exponent(i), self.exponent(i + 1));
        self.with_exponent(i, b).with_exponent(i + 1, a)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for k in (1..=len).rev() {
                match self.exponent(k).cmp(&other.exponent(k)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer polynomial stored as a map from monomials to nonzero
/// coefficients, sorted by the monomial order (largest last).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial::default()
    }

    pub fn one() -> Self {
        SparsePolynomial::monomial(Monomial::one(), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: BigInt) -> Self {
        let mut p = SparsePolynomial::zero();
        p.add_term(m, coeff);
        p
    }

    /// The variable `x_i` (1-based).
    pub fn variable(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        SparsePolynomial::monomial(Monomial::new(e), BigInt::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = SparsePolynomial::zero();
        for (e, c) in terms {
            p.add_term(Monomial::new(e), c.into());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest monomial in the term order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SparsePolynomial, c: &BigInt) {
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> SparsePolynomial {
        if c.is_zero() {
            return SparsePolynomial::zero();
        }
        SparsePolynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `s_i · p`: exchanges `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.swapped(i), c.clone());
        }
        out
    }

    /// Exact division by `x_i - x_{i+1}`; fails if the remainder is nonzero.
    pub fn div_by_difference(&self, i: usize) -> Result<SparsePolynomial> {
        // write self = Σ_k C_k x_i^k and divide by (x_i - t), t = x_{i+1}
        let mut by_power: BTreeMap<u32, SparsePolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_power
                .entry(m.exponent(i))
                .or_default()
                .add_term(m.with_exponent(i, 0), c.clone());
        }
        let Some(&top) = by_power.keys().next_back() else {
            return Ok(SparsePolynomial::zero());
        };
        let t = SparsePolynomial::variable(i + 1);
        let xi_power = |k: u32| {
            let mut e = vec![0; i];
            e[i - 1] = k;
            SparsePolynomial::monomial(Monomial::new(e), BigInt::one())
        };
        let mut quotient = SparsePolynomial::zero();
        let mut carry = SparsePolynomial::zero();
        for k in (0..=top).rev() {
            let ck = by_power.remove(&k).unwrap_or_default();
            let next = &ck + &(&t * &carry);
            if k == 0 {
                if !next.is_zero() {
                    return Err(Error::InexactDivision(i, i + 1));
                }
            } else {
                quotient.add_scaled(&(&next * &xi_power(k - 1)), &BigInt::one());
                carry = next;
            }
        }
        Ok(quotient)
    }

    /// `∂_i p = (p - s_i p) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<SparsePolynomial> {
        (self - &self.swap_variables(i)).div_by_difference(i)
    }

    /// Evaluation at `x = 0`, i.e. the constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (k, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", k + 1)),
                    _ => factors.push(format!("x{}^{}", k + 1, e)),
                }
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_terms(terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    /// Closed form of `∂_i` on a single monomial `x_i^a x_{i+1}^b m`.
    fn divided_difference_closed_form(p: &SparsePolynomial, i: usize) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (m, c) in p.terms() {
            let (a, b) = (m.exponent(i), m.exponent(i + 1));
            let (hi, lo, sign) = match a.cmp(&b) {
                Ordering::Equal => continue,
                Ordering::Greater => (a, b, BigInt::one()),
                Ordering::Less => (b, a, -BigInt::one()),
            };
            for t in 0..hi - lo {
                let term = m
                    .with_exponent(i, lo + hi - lo - 1 - t)
                    .with_exponent(i + 1, lo + t);
                out.add_term(term, c * &sign);
            }
        }
        out
    }

    #[test]
    fn monomial_order_is_graded_reverse_lex() {
        let x1 = Monomial::new(vec![1]);
        let x2 = Monomial::new(vec![0, 1]);
        assert!(x2 > x1);
        assert!(Monomial::new(vec![2]) > x2);
        assert!(Monomial::new(vec![1, 0, 1]) > Monomial::new(vec![1, 1]));
        assert!(Monomial::new(vec![1, 0, 1]) > Monomial::new(vec![2]));
        assert_eq!(Monomial::new(vec![1, 0, 0]), Monomial::new(vec![1]));
    }

    #[test]
    fn arithmetic_drops_zero_terms() {
        let a = poly(&[(&[1], 1), (&[0, 1], 1)]);
        let b = poly(&[(&[1], 1)]);
        let d = &a - &b;
        assert_eq!(d, poly(&[(&[0, 1], 1)]));
        assert!((&a - &a).is_zero());
        let sq = &a * &a;
        assert_eq!(sq, poly(&[(&[2], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(sq.to_string(), "x2^2 + 2*x1*x2 + x1^2");
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(
            SparsePolynomial::variable(1).divided_difference(1).unwrap(),
            SparsePolynomial::one()
        );
        let p = poly(&[(&[2, 1], 1)]);
        assert_eq!(p.divided_difference(2).unwrap(), poly(&[(&[2], 1)]));
        let sym = poly(&[(&[1, 1], 3), (&[2], 1), (&[0, 2], 1), (&[0, 0, 4], 2)]);
        assert!(sym.divided_difference(1).unwrap().is_zero());
    }

    #[test]
    fn inexact_division_is_reported() {
        // x1 is not divisible by x1 - x2
        let p = SparsePolynomial::variable(1);
        assert_eq!(p.div_by_difference(1), Err(Error::InexactDivision(1, 2)));
        let q = poly(&[(&[2], 1), (&[0, 2], -1)]);
        assert_eq!(q.div_by_difference(1).unwrap(), poly(&[(&[1], 1), (&[0, 1], 1)]));
    }

    fn arb_poly() -> impl Strategy<Value = SparsePolynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 0..4), -5i64..6), 0..8)
            .prop_map(SparsePolynomial::from_terms)
    }

    proptest! {
        #[test]
        fn synthetic_division_matches_closed_form(p in arb_poly(), i in 1usize..4) {
            prop_assert_eq!(p.divided_difference(i).unwrap(), divided_difference_closed_form(&p, i));
        }

        #[test]
        fn division_inverts_multiplication(p in arb_poly(), i in 1usize..4) {
            let diff = &SparsePolynomial::variable(i) - &SparsePolynomial::variable(i + 1);
            prop_assert_eq!((&p * &diff).div_by_difference(i).unwrap(), p);
        }

        #[test]
        fn multiplication_is_commutative(p in arb_poly(), q in arb_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
        }
    }
}
