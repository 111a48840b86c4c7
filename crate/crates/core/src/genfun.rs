//! The bihomogeneous functions `g(d, ℓ)` and products of them.
//!
//! `g(d, ℓ)` is the coefficient of `r^ℓ z^d` in `exp(r Σ_j x_j z^j)`. Reading
//! off that coefficient gives the closed form
//!
//! ```text
//! g(d, ℓ) = Σ_{λ ⊢ d, len λ = ℓ}  x_λ / Π_i m_i(λ)!
//! ```
//!
//! where `m_i(λ)` is the multiplicity of the part `i`. Summing over `ℓ` with
//! signs gives the complete and elementary symmetric functions.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{admissible_sequences, is_admissible, partitions_with_length};
use crate::poly::{monomial_basis, Bidegree, Monomial, Polynomial};
use crate::rational::{factorial, serde_fraction, Rational};

/// Whether `g(d, len)` is a nonzero function. This is the single source of
/// truth for the out-of-range conventions: `g(0, 0) = 1`, and `g(d, len) = 0`
/// whenever `len > d` or `len = 0 < d`.
pub fn g_is_nonzero(d: usize, len: usize) -> bool {
    (d == 0 && len == 0) || (len >= 1 && d >= len)
}

/// Signed variant of [`g_is_nonzero`] for indices produced by shifts.
pub(crate) fn g_is_nonzero_signed(d: i64, len: i64) -> bool {
    d >= 0 && len >= 0 && g_is_nonzero(d as usize, len as usize)
}

/// Index `(d, ℓ)` of a factor `g(d, ℓ)`.
///
/// The ordering is `≻`: `(d₁, ℓ₁) ≻ (d₂, ℓ₂)` iff `d₁ > d₂`, or `d₁ = d₂` and
/// `ℓ₁ < ℓ₂`. `a > b` in Rust means `a ≻ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct GIndex {
    pub d: usize,
    pub len: usize,
}

impl GIndex {
    pub const fn new(d: usize, len: usize) -> Self {
        Self { d, len }
    }

    pub fn is_nonzero(&self) -> bool {
        g_is_nonzero(self.d, self.len)
    }

    pub fn is_unit(&self) -> bool {
        self.d == 0 && self.len == 0
    }
}

impl Ord for GIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d.cmp(&other.d).then(other.len.cmp(&self.len))
    }
}

impl PartialOrd for GIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<(usize, usize)> for GIndex {
    fn from((d, len): (usize, usize)) -> Self {
        GIndex::new(d, len)
    }
}

impl From<GIndex> for (usize, usize) {
    fn from(g: GIndex) -> Self {
        (g.d, g.len)
    }
}

impl fmt::Display for GIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g({},{})", self.d, self.len)
    }
}

/// A formal product `g(d₁,ℓ₁)···g(d_k,ℓ_k)`.
///
/// Factor order is kept as given (the structural action of `T` depends on
/// it); [`GProduct::canonical`] sorts factors in non-increasing `≻` order.
/// `g(0,0)` factors are dropped on construction. Ordering between products
/// is lexicographic in `≻`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GProduct {
    factors: Vec<GIndex>,
}

impl GProduct {
    /// Rejects factors `g(d, 0)` with `d > 0`; drops `g(0, 0)`.
    pub fn new(factors: impl IntoIterator<Item = GIndex>) -> Result<Self> {
        let mut out = Vec::new();
        for g in factors {
            if g.is_unit() {
                continue;
            }
            if g.len == 0 {
                return Err(Error::InvalidFactor {
                    d: g.d,
                    len: g.len,
                    reason: "factors need length >= 1",
                });
            }
            out.push(g);
        }
        Ok(Self { factors: out })
    }

    /// Convenience constructor from `(d, ℓ)` pairs; panics on invalid factors.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        Self::new(pairs.iter().map(|&p| GIndex::from(p))).expect("valid g-factors")
    }

    /// The empty product, equal to 1.
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn single(d: usize, len: usize) -> Result<Self> {
        Self::new([GIndex::new(d, len)])
    }

    pub(crate) fn from_factors_unchecked(factors: Vec<GIndex>) -> Self {
        Self { factors }
    }

    pub fn factors(&self) -> &[GIndex] {
        &self.factors
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.factors.iter().map(|&g| g.into()).collect()
    }

    pub fn canonical(&self) -> GProduct {
        let mut factors = self.factors.clone();
        factors.sort_by(|a, b| b.cmp(a));
        GProduct { factors }
    }

    pub fn is_canonical(&self) -> bool {
        self.factors.windows(2).all(|w| w[0] >= w[1])
    }

    /// True when some factor vanishes identically.
    pub fn is_zero(&self) -> bool {
        self.factors.iter().any(|g| !g.is_nonzero())
    }

    pub fn bidegree(&self) -> Bidegree {
        self.factors
            .iter()
            .fold(Bidegree::new(0, 0), |acc, g| acc + Bidegree::new(g.d, g.len))
    }

    /// Whether the factor sequence, as ordered, indexes an element of the
    /// basis `S(d, ℓ)`.
    pub fn is_admissible(&self) -> bool {
        is_admissible(&self.pairs())
    }

    pub fn expand(&self) -> Polynomial {
        g_product_expand(self)
    }
}

impl fmt::Display for GProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for g in &self.factors {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Serialized as the sorted list of `[d, ℓ]` pairs.
impl Serialize for GProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.canonical().factors.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GProduct {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let factors = Vec::<GIndex>::deserialize(d)?;
        GProduct::new(factors).map_err(serde::de::Error::custom)
    }
}

/// A rational linear combination of g-products, keyed by canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GCombination {
    terms: BTreeMap<GProduct, Rational>,
}

impl GCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(p: GProduct, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(p, c);
        out
    }

    /// Adds `c · p`; vanishing products are skipped and `p` is canonicalised.
    pub fn add_term(&mut self, p: GProduct, c: Rational) {
        if c.is_zero() || p.is_zero() {
            return;
        }
        let key = p.canonical();
        match self.terms.entry(key) {
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

    pub fn add(&mut self, other: &GCombination) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
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

    pub fn coefficient(&self, p: &GProduct) -> Rational {
        self.terms.get(&p.canonical()).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms with the `≻`-greatest product first.
    pub fn terms(&self) -> impl Iterator<Item = (&GProduct, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn expand(&self) -> Polynomial {
        self.terms
            .iter()
            .map(|(p, c)| g_product_expand(p).scale(c))
            .sum()
    }
}

impl fmt::Display for GCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs}*{p}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CombinationRecord {
    product: GProduct,
    #[serde(with = "serde_fraction")]
    coefficient: Rational,
}

impl Serialize for GCombination {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (p, c) in self.terms() {
            seq.serialize_element(&CombinationRecord {
                product: p.clone(),
                coefficient: c.clone(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GCombination {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<CombinationRecord>::deserialize(d)?;
        let mut out = GCombination::zero();
        for r in records {
            out.add_term(r.product, r.coefficient);
        }
        Ok(out)
    }
}

/// `g(d, len)` as a polynomial in the `x_k`.
pub fn g_poly(d: usize, len: usize) -> Polynomial {
    if !g_is_nonzero(d, len) {
        return Polynomial::zero();
    }
    Polynomial::from_terms(partitions_with_length(d, len).iter().map(|lambda| {
        let m = Monomial::from_partition(lambda);
        let denom: BigInt = m.exponents().iter().map(|&(_, a)| factorial(a)).product();
        (m, Rational::new(BigInt::one(), denom))
    }))
}

pub fn g_product_expand(p: &GProduct) -> Polynomial {
    p.factors()
        .iter()
        .fold(Polynomial::one(), |acc, g| &acc * &g_poly(g.d, g.len))
}

/// `h_k = Σ_ℓ g(k, ℓ)`.
pub fn complete_symmetric(k: usize) -> Polynomial {
    (0..=k).map(|len| g_poly(k, len)).sum()
}

/// `e_k = Σ_ℓ (-1)^{k+ℓ} g(k, ℓ)`.
pub fn elementary_symmetric(k: usize) -> Polynomial {
    (0..=k)
        .map(|len| {
            let g = g_poly(k, len);
            if (k + len).is_multiple_of(2) {
                g
            } else {
                -&g
            }
        })
        .sum()
}

/// The basis `S(d, ℓ)`: products indexed by admissible sequences, in strictly
/// decreasing `≻` order. Empty unless `d >= ℓ >= 1`.
pub fn s_basis(d: usize, len: usize) -> Vec<GProduct> {
    admissible_sequences(d, len)
        .into_iter()
        .map(|seq| GProduct::from_factors_unchecked(seq.into_iter().map(GIndex::from).collect()))
        .collect()
}

/// All products `g(d₁,ℓ₁)···g(d_k,ℓ_k)` with nonzero factors, `ℓ_i >= 1`,
/// total bidegree `(d, ℓ)` and factors in non-increasing `≻` order, listed
/// in decreasing lexicographic `≻` order. These span `F(d, ℓ)`.
pub fn ordered_products(d: usize, len: usize) -> Vec<GProduct> {
    fn extend(
        d_rem: usize,
        l_rem: usize,
        cap: Option<GIndex>,
        prefix: &mut Vec<GIndex>,
        out: &mut Vec<GProduct>,
    ) {
        if l_rem == 0 {
            if d_rem == 0 {
                out.push(GProduct::from_factors_unchecked(prefix.clone()));
            }
            return;
        }
        for di in (1..=d_rem).rev() {
            for li in 1..=l_rem.min(di) {
                let g = GIndex::new(di, li);
                if cap.is_some_and(|c| g > c) {
                    continue;
                }
                let (d_next, l_next) = (d_rem - di, l_rem - li);
                if d_next < l_next || (l_next == 0) != (d_next == 0) {
                    continue;
                }
                prefix.push(g);
                extend(d_next, l_next, Some(g), prefix, out);
                prefix.pop();
            }
        }
    }

    let mut out = Vec::new();
    if len == 0 || d < len {
        return out;
    }
    extend(d, len, None, &mut Vec::new(), &mut out);
    out
}

/// `S(d, ℓ)` together with its change-of-basis data against the monomial
/// basis of `F(d, ℓ)`.
#[derive(Debug)]
pub struct GBasis {
    pub bidegree: Bidegree,
    pub products: Vec<GProduct>,
    pub monomials: Vec<Monomial>,
    /// Column `j` holds the monomial coordinates of `products[j]`.
    pub expansion: Matrix,
    /// Inverse of `expansion`.
    pub inverse: Matrix,
    monomial_index: HashMap<Monomial, usize>,
}

impl GBasis {
    fn build(d: usize, len: usize) -> Result<GBasis> {
        let products = s_basis(d, len);
        let monomials = monomial_basis(d, len);
        if products.len() != monomials.len() {
            return Err(Error::Internal(format!(
                "|S({d},{len})| = {} but dim F({d},{len}) = {}",
                products.len(),
                monomials.len()
            )));
        }
        let monomial_index: HashMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = monomials.len();
        let mut expansion = Matrix::zeros(n, n);
        for (j, p) in products.iter().enumerate() {
            for (m, c) in p.expand().terms() {
                let i = monomial_index[m];
                expansion[(i, j)] = c.clone();
            }
        }
        let inverse = expansion.inverse().ok_or_else(|| {
            Error::Internal(format!("S({d},{len}) is linearly dependent"))
        })?;
        Ok(GBasis {
            bidegree: Bidegree::new(d, len),
            products,
            monomials,
            expansion,
            inverse,
            monomial_index,
        })
    }

    pub fn dim(&self) -> usize {
        self.products.len()
    }

    /// Coordinates of a homogeneous polynomial in the monomial basis.
    pub fn monomial_coordinates(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in f.terms() {
            let Some(&i) = self.monomial_index.get(m) else {
                return Err(Error::NotHomogeneous {
                    d: self.bidegree.d,
                    len: self.bidegree.len,
                });
            };
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        Ok(self.inverse.mul_vec(&self.monomial_coordinates(f)?))
    }

    /// `Σ c_j · products[j]` as a polynomial.
    pub fn reconstruct(&self, coords: &[Rational]) -> Polynomial {
        assert_eq!(coords.len(), self.dim());
        Polynomial::from_terms(
            self.monomials
                .iter()
                .cloned()
                .zip(self.expansion.mul_vec(coords)),
        )
    }

    pub fn to_combination(&self, coords: &[Rational]) -> GCombination {
        let mut out = GCombination::zero();
        for (p, c) in self.products.iter().zip(coords) {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

type CacheSlot = Arc<OnceLock<Result<Arc<GBasis>>>>;

static GBASIS_CACHE: OnceLock<Mutex<HashMap<(usize, usize), CacheSlot>>> = OnceLock::new();

/// Cached [`GBasis`] for `F(d, ℓ)`, `d >= ℓ >= 1`. Concurrent callers asking
/// for the same bidegree block on a single construction.
pub fn gbasis(d: usize, len: usize) -> Result<Arc<GBasis>> {
    if len == 0 || d < len {
        return Err(Error::InvalidBidegree { d, len });
    }
    let slot = {
        let mut map = GBASIS_CACHE
            .get_or_init(Default::default)
            .lock()
            .expect("gbasis cache poisoned");
        map.entry((d, len)).or_default().clone()
    };
    slot.get_or_init(|| GBasis::build(d, len).map(Arc::new)).clone()
}

/// Unique coordinates of `f ∈ F(d, ℓ)` in the ordered basis `S(d, ℓ)`.
pub fn expand_in_gbasis(f: &Polynomial, d: usize, len: usize) -> Result<Vec<Rational>> {
    let basis = gbasis(d, len)?;
    if !f.is_homogeneous_of(Bidegree::new(d, len)) {
        return Err(Error::NotHomogeneous { d, len });
    }
    basis.coordinates(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn x(k: usize) -> Polynomial {
        Polynomial::var(k)
    }

    #[test]
    fn g_examples() {
        for p in 1..8 {
            assert_eq!(g_poly(p, 1), x(p));
        }
        let expected = &(&x(1) * &x(3)) + &x(2).pow(2).scale(&ratio(1, 2));
        assert_eq!(g_poly(4, 2), expected);
        assert_eq!(g_poly(0, 0), Polynomial::one());
        assert!(g_poly(2, 3).is_zero());
        assert!(g_poly(3, 0).is_zero());
    }

    #[test]
    fn product_expansion() {
        assert_eq!(GProduct::from_pairs(&[(3, 1), (1, 1)]).expand(), &x(1) * &x(3));
        assert_eq!(
            GProduct::from_pairs(&[(2, 2), (3, 1)]).expand(),
            (&x(1).pow(2) * &x(3)).scale(&ratio(1, 2))
        );
        assert_eq!(GProduct::unit().expand(), Polynomial::one());
        assert_eq!(GProduct::from_pairs(&[(4, 2), (0, 0)]), GProduct::from_pairs(&[(4, 2)]));
        assert!(GProduct::new([GIndex::new(3, 0)]).is_err());
    }

    #[test]
    fn symmetric_functions() {
        assert_eq!(complete_symmetric(1), x(1));
        assert_eq!(complete_symmetric(2), &x(2) + &x(1).pow(2).scale(&ratio(1, 2)));
        let h3 = &(&x(3) + &(&x(1) * &x(2))) + &x(1).pow(3).scale(&ratio(1, 6));
        assert_eq!(complete_symmetric(3), h3);
        assert_eq!(elementary_symmetric(1), x(1));
        assert_eq!(elementary_symmetric(2), &(-&x(2)) + &x(1).pow(2).scale(&ratio(1, 2)));
        let e3 = &(&x(3) - &(&x(1) * &x(2))) + &x(1).pow(3).scale(&ratio(1, 6));
        assert_eq!(elementary_symmetric(3), e3);
    }

    #[test]
    fn succ_order() {
        assert!(GIndex::new(4, 2) > GIndex::new(3, 1));
        assert!(GIndex::new(3, 1) > GIndex::new(3, 2));
        let p = GProduct::from_pairs(&[(2, 2), (3, 1)]);
        assert!(!p.is_canonical());
        assert_eq!(p.canonical().pairs(), vec![(3, 1), (2, 2)]);
    }

    #[test]
    fn s_basis_examples() {
        assert_eq!(
            s_basis(4, 2),
            vec![GProduct::from_pairs(&[(4, 2)]), GProduct::from_pairs(&[(3, 1), (1, 1)])]
        );
        assert_eq!(s_basis(3, 2), vec![GProduct::from_pairs(&[(3, 2)])]);
        assert_eq!(s_basis(9, 1), vec![GProduct::from_pairs(&[(9, 1)])]);
        assert_eq!(s_basis(12, 4).len(), 15);
        let b = s_basis(12, 4);
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn ordered_products_small() {
        assert_eq!(
            ordered_products(4, 2),
            vec![
                GProduct::from_pairs(&[(4, 2)]),
                GProduct::from_pairs(&[(3, 1), (1, 1)]),
                GProduct::from_pairs(&[(2, 1), (2, 1)]),
            ]
        );
        for p in ordered_products(9, 4) {
            assert!(p.is_canonical() && !p.is_zero());
            assert_eq!(p.bidegree(), Bidegree::new(9, 4));
        }
        // S(d, ℓ) is the admissible part of Ŝ(d, ℓ)
        let admissible: Vec<_> = ordered_products(10, 3)
            .into_iter()
            .filter(GProduct::is_admissible)
            .collect();
        assert_eq!(admissible, s_basis(10, 3));
    }

    #[test]
    fn expansion_examples() {
        let x1x3 = &x(1) * &x(3);
        assert_eq!(expand_in_gbasis(&x1x3, 4, 2).unwrap(), vec![int(0), int(1)]);
        assert_eq!(expand_in_gbasis(&x(2).pow(2), 4, 2).unwrap(), vec![int(2), int(-2)]);
        assert_eq!(expand_in_gbasis(&g_poly(4, 2), 4, 2).unwrap(), vec![int(1), int(0)]);
        assert_eq!(
            expand_in_gbasis(&Polynomial::zero(), 4, 2).unwrap(),
            vec![int(0), int(0)]
        );
    }

    #[test]
    fn expansion_rejects_wrong_bidegree() {
        let f = &x(1) + &x(2);
        assert!(matches!(expand_in_gbasis(&f, 2, 1), Err(Error::NotHomogeneous { .. })));
        assert!(matches!(expand_in_gbasis(&x(3), 4, 2), Err(Error::NotHomogeneous { .. })));
        assert!(matches!(expand_in_gbasis(&x(3), 2, 3), Err(Error::InvalidBidegree { .. })));
    }

    #[test]
    fn combination_display_and_merge() {
        let mut c = GCombination::zero();
        c.add_term(GProduct::from_pairs(&[(2, 2), (3, 1)]), int(1));
        c.add_term(GProduct::from_pairs(&[(3, 1), (2, 2)]), int(-2));
        c.add_term(GProduct::from_pairs(&[(5, 3)]), int(6));
        c.add_term(GProduct::from_pairs(&[(2, 3)]), int(9)); // zero factor
        assert_eq!(c.to_string(), "6*g(5,3) - g(3,1)g(2,2)");
    }
}
