//! Polynomials in the countably many generators `x_1, x_2, ...` with exact
//! rational coefficients.
//!
//! Every monomial carries two gradings: the weighted degree (`deg x_k = k`)
//! and the length (`len x_k = 1`). A monomial of bidegree `(d, len)` is the
//! same thing as a partition of `d` with `len` parts, and the term order used
//! throughout the crate is the lexicographic order on those partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_with_length, Partition};
use crate::rational::{factorial, serde_fraction, Rational};

/// Weighted degree and length of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub d: usize,
    pub len: usize,
}

impl Bidegree {
    pub const fn new(d: usize, len: usize) -> Self {
        Self { d, len }
    }
}

impl Add for Bidegree {
    type Output = Bidegree;

    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.d + rhs.d, self.len + rhs.len)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.len)
    }
}

/// A monomial `x_{k_1}^{a_1} x_{k_2}^{a_2} ...`, stored as `(k, a)` pairs with
/// strictly increasing `k` and every `a >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct Monomial {
    exps: Vec<(usize, usize)>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(k: usize) -> Self {
        Self::from_pairs([(k, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    /// Repeated variables are merged; zero exponents are dropped.
    ///
    /// Panics on variable index 0.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, a) in pairs {
            assert!(k >= 1, "variable indices start at 1");
            *map.entry(k).or_insert(0) += a;
        }
        Self {
            exps: map.into_iter().filter(|&(_, a)| a > 0).collect(),
        }
    }

    /// `x_λ = Π x_{λ_i}`.
    pub fn from_partition(p: &Partition) -> Self {
        Self::from_pairs(p.parts().iter().map(|&k| (k, 1)))
    }

    pub fn exponents(&self) -> &[(usize, usize)] {
        &self.exps
    }

    pub fn exponent(&self, k: usize) -> usize {
        self.exps
            .binary_search_by_key(&k, |&(v, _)| v)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn bidegree(&self) -> Bidegree {
        self.exps.iter().fold(Bidegree::new(0, 0), |acc, &(k, a)| {
            Bidegree::new(acc.d + k * a, acc.len + a)
        })
    }

    /// Parts of the associated partition, largest first.
    pub fn parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .rev()
            .flat_map(|&(k, a)| std::iter::repeat_n(k, a))
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.parts().collect()).expect("monomial parts are weakly decreasing")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// Lowers the exponent of `x_k` by one; `None` when `x_k` does not occur.
    pub(crate) fn lower(&self, k: usize) -> Option<Monomial> {
        let idx = self.exps.binary_search_by_key(&k, |&(v, _)| v).ok()?;
        let mut exps = self.exps.clone();
        if exps[idx].1 == 1 {
            exps.remove(idx);
        } else {
            exps[idx].1 -= 1;
        }
        Some(Monomial { exps })
    }

    /// `Π_k a_k!`, the squared norm of the monomial.
    pub fn norm_squared(&self) -> BigInt {
        self.exps.iter().map(|&(_, a)| factorial(a)).product()
    }
}

impl TryFrom<Vec<(usize, usize)>> for Monomial {
    type Error = Error;

    fn try_from(exps: Vec<(usize, usize)>) -> Result<Self> {
        let sorted = exps.windows(2).all(|w| w[0].0 < w[1].0);
        if !sorted || exps.iter().any(|&(k, a)| k == 0 || a == 0) {
            return Err(Error::Parse(format!(
                "monomial exponents must be [variable >= 1, exponent >= 1] pairs with increasing variables, got {exps:?}"
            )));
        }
        Ok(Monomial { exps })
    }
}

impl From<Monomial> for Vec<(usize, usize)> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

/// Lexicographic order on the associated partitions (largest part first).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts().cmp(other.parts())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (i, &(k, a)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if a == 1 {
                write!(f, "x{k}")?;
            } else {
                write!(f, "x{k}^{a}")?;
            }
        }
        Ok(())
    }
}

/// A finite linear combination of monomials. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(k: usize) -> Self {
        Self::monomial(Monomial::var(k), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `Some(bidegree)` when every term shares one bidegree; the zero
    /// polynomial is homogeneous of every bidegree and reports `None`.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, b: Bidegree) -> bool {
        self.terms.keys().all(|m| m.bidegree() == b)
    }

    pub fn partial_derivative(&self, k: usize) -> Polynomial {
        assert!(k >= 1, "variable indices start at 1");
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let a = m.exponent(k);
            if a == 0 {
                continue;
            }
            let lowered = m.lower(k).expect("exponent is positive");
            out.add_term(lowered, c * Rational::from_integer(BigInt::from(a)));
        }
        out
    }

    /// Multiplication by the generator `x_k`.
    pub fn mul_var(&self, k: usize) -> Polynomial {
        let x = Monomial::var(k);
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.mul(&x), c.clone())).collect(),
        }
    }

    /// `Σ k x_k ∂_k`: scales each monomial by its weighted degree.
    pub fn apply_degree_operator(&self) -> Polynomial {
        self.map_by_grading(|b| b.d)
    }

    /// `Σ x_k ∂_k`: scales each monomial by its length.
    pub fn apply_length_operator(&self) -> Polynomial {
        self.map_by_grading(|b| b.len)
    }

    fn map_by_grading(&self, weight: impl Fn(Bidegree) -> usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let w = weight(m.bidegree());
            out.add_term(m.clone(), c * Rational::from_integer(BigInt::from(w)));
        }
        out
    }

    /// Keeps only the terms of the given bidegree.
    pub fn component(&self, b: Bidegree) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == b)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

/// The scalar product for which `∂/∂x_k` is adjoint to multiplication by
/// `x_k`: monomials are orthogonal and `<μ, μ> = Π a_k!`.
pub fn inner_product(f: &Polynomial, g: &Polynomial) -> Rational {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = Rational::zero();
    for (m, a) in small.terms() {
        if let Some(b) = large.terms.get(m) {
            acc += a * b * Rational::from_integer(m.norm_squared());
        }
    }
    acc
}

/// All monomials of bidegree `(d, len)`, in decreasing lexicographic order of
/// their partitions. Empty when no such monomial exists.
pub fn monomial_basis(d: usize, len: usize) -> Vec<Monomial> {
    partitions_with_length(d, len)
        .iter()
        .map(Monomial::from_partition)
        .collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Terms largest monomial first, e.g. `x1*x3 + 1/2*x2^2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    monomial: Monomial,
    #[serde(with = "serde_fraction")]
    coefficient: Rational,
}

/// Serialized as a list of `{monomial, coefficient}` records, largest
/// monomial first.
impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&TermRecord {
                monomial: m.clone(),
                coefficient: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(d)?;
        Ok(Polynomial::from_terms(
            records.into_iter().map(|r| (r.monomial, r.coefficient)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn x(k: usize) -> Polynomial {
        Polynomial::var(k)
    }

    #[test]
    fn bidegree_examples() {
        assert_eq!(Monomial::var(1).bidegree(), Bidegree::new(1, 1));
        assert_eq!(
            Monomial::from_pairs([(1, 2), (2, 1)]).bidegree(),
            Bidegree::new(4, 3)
        );
        assert_eq!(Monomial::one().bidegree(), Bidegree::new(0, 0));
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&x(1) * &x(2), Polynomial::monomial(Monomial::from_pairs([(1, 1), (2, 1)]), int(1)));
        assert!((&x(2) + &x(2).scale(&int(-1))).is_zero());
        let lhs = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        let rhs = &x(1).pow(2) - &x(2).pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivatives() {
        assert_eq!(x(1).pow(2).partial_derivative(1), x(1).scale(&int(2)));
        assert!((&x(1) * &x(3)).partial_derivative(2).is_zero());
        assert_eq!((&x(1) * &x(3)).partial_derivative(3), x(1));
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner_product(&x(1).pow(2), &x(1).pow(2)), int(2));
        assert_eq!(inner_product(&(&x(1) * &x(3)), &x(2).pow(2)), int(0));
        assert_eq!(inner_product(&x(2).pow(2), &x(2).pow(2)), int(2));
        assert_eq!(inner_product(&x(1).pow(3), &x(1).pow(3)), int(6));
    }

    #[test]
    fn monomial_basis_examples() {
        let b = monomial_basis(4, 2);
        assert_eq!(b, vec![Monomial::from_pairs([(1, 1), (3, 1)]), Monomial::from_pairs([(2, 2)])]);
        assert_eq!(monomial_basis(3, 2), vec![Monomial::from_pairs([(1, 1), (2, 1)])]);
        assert_eq!(monomial_basis(7, 1), vec![Monomial::var(7)]);
        assert!(monomial_basis(2, 3).is_empty());
        assert_eq!(monomial_basis(0, 0), vec![Monomial::one()]);
    }

    #[test]
    fn grading_operators() {
        let f = &x(1) * &x(3);
        assert_eq!(f.apply_degree_operator(), f.scale(&int(4)));
        assert_eq!(f.apply_length_operator(), f.scale(&int(2)));
        assert!(Polynomial::one().apply_degree_operator().is_zero());
        assert!(Polynomial::one().apply_length_operator().is_zero());
    }

    #[test]
    fn display() {
        let g42 = &(&x(1) * &x(3)) + &x(2).pow(2).scale(&ratio(1, 2));
        assert_eq!(g42.to_string(), "x1*x3 + 1/2*x2^2");
        assert_eq!((-&x(2)).to_string(), "-x2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(ratio(-3, 2)).to_string(), "-3/2");
    }

    #[test]
    fn term_order_follows_partitions() {
        // (3,1) > (2,2) > (2,1,1)
        let a = Monomial::from_pairs([(1, 1), (3, 1)]);
        let b = Monomial::from_pairs([(2, 2)]);
        let c = Monomial::from_pairs([(1, 2), (2, 1)]);
        assert!(a > b && b > c);
    }

    #[test]
    fn homogeneity() {
        let f = &x(1) + &x(2);
        assert_eq!(f.bidegree(), None);
        assert_eq!((&x(1) * &x(3)).bidegree(), Some(Bidegree::new(4, 2)));
        assert_eq!(Polynomial::zero().bidegree(), None);
    }

    #[test]
    fn monomial_rejects_bad_json_shape() {
        assert!(Monomial::try_from(vec![(3, 1), (1, 1)]).is_err());
        assert!(Monomial::try_from(vec![(0, 1)]).is_err());
        assert!(Monomial::try_from(vec![(2, 0)]).is_err());
    }
}
