//! The operator
//!
//! ```text
//! T = ½ Σ_{a+b=p+q; a,b,p,q ≥ 1} x_a x_b ∂_p ∂_q
//! ```
//!
//! in two realisations: directly on monomials, and through its action on
//! products of the functions `g(d, ℓ)`. Also here: rewriting irregular pairs
//! `g(d′,ℓ′)g(d″,ℓ″)` as combinations of regular ones, and the polynomial
//! identity behind that rewriting.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::genfun::{g_is_nonzero, g_is_nonzero_signed, g_poly, GCombination, GIndex, GProduct};
use crate::linalg::Matrix;
use crate::poly::{monomial_basis, Monomial, Polynomial};
use crate::rational::{ratio, Rational};

/// `T f`, computed monomial by monomial.
pub fn apply_t(f: &Polynomial) -> Polynomial {
    let mut doubled = Polynomial::zero();
    for (m, c) in f.terms() {
        let exps = m.exponents();
        for &(p, ap) in exps {
            for &(q, aq) in exps {
                let mult = if p == q { ap * (ap - 1) } else { ap * aq };
                if mult == 0 {
                    continue;
                }
                let reduced = m
                    .lower(p)
                    .and_then(|r| r.lower(q))
                    .expect("exponents checked above");
                let coeff = c * Rational::from_integer(BigInt::from(mult));
                let n = p + q;
                for a in 1..n {
                    let raised = reduced.mul(&Monomial::from_pairs([(a, 1), (n - a, 1)]));
                    doubled.add_term(raised, coeff.clone());
                }
            }
        }
    }
    doubled.scale(&ratio(1, 2))
}

/// `½ (ℓ - 1)(2d - ℓ)`, the diagonal contribution of one factor `g(d, ℓ)`.
/// Always an integer since one of `ℓ - 1` and `2d - ℓ` is even.
pub fn factor_eigenvalue(d: usize, len: usize) -> u64 {
    if !g_is_nonzero(d, len) || len == 0 {
        return 0;
    }
    let (d, len) = (d as u64, len as u64);
    (len - 1) * (2 * d - len) / 2
}

/// The action of `T` on `g(d₁,ℓ₁)···g(d_k,ℓ_k)` read off the generating
/// function, without expanding to monomials:
///
/// ```text
///   Σ_i (ℓ_i - 1)(d_i - ℓ_i/2) · P
/// - Σ_{i<j} Σ_{p≥0} ℓ_j(ℓ_j+1) · P[i ↦ (d_i+p, ℓ_i-1), j ↦ (d_j-p, ℓ_j+1)]
/// + Σ_{i<j} Σ_{p≥1} ℓ_i(ℓ_i+1) · P[i ↦ (d_i+p, ℓ_i+1), j ↦ (d_j-p, ℓ_j-1)]
/// ```
///
/// The result depends on the factor order of `product` only through its
/// presentation; all orders expand to the same polynomial.
pub fn apply_t_structural(product: &GProduct) -> Result<GCombination> {
    let factors = product.factors();
    if let Some(g) = factors.iter().find(|g| g.len == 0 && g.d > 0) {
        return Err(Error::InvalidFactor {
            d: g.d,
            len: g.len,
            reason: "factors need length >= 1",
        });
    }
    let mut out = GCombination::zero();
    if product.is_zero() {
        return Ok(out);
    }

    let diagonal: u64 = factors.iter().map(|g| factor_eigenvalue(g.d, g.len)).sum();
    out.add_term(product.clone(), Rational::from_integer(BigInt::from(diagonal)));

    let k = factors.len();
    for i in 0..k {
        for j in i + 1..k {
            let (di, li) = (factors[i].d as i64, factors[i].len as i64);
            let (dj, lj) = (factors[j].d as i64, factors[j].len as i64);

            // moves one unit of length from i to j; needs d_j - p >= ℓ_j + 1
            let lowered = -lj * (lj + 1);
            let mut p = 0;
            while dj - p > lj {
                push_shifted(&mut out, factors, (i, di + p, li - 1), (j, dj - p, lj + 1), lowered);
                p += 1;
            }

            // moves one unit of length from j to i; needs d_j - p >= max(ℓ_j - 1, 0)
            let raised = li * (li + 1);
            let mut p = 1;
            while dj - p >= (lj - 1).max(0) {
                push_shifted(&mut out, factors, (i, di + p, li + 1), (j, dj - p, lj - 1), raised);
                p += 1;
            }
        }
    }
    Ok(out)
}

fn push_shifted(
    out: &mut GCombination,
    factors: &[GIndex],
    (i, di, li): (usize, i64, i64),
    (j, dj, lj): (usize, i64, i64),
    coeff: i64,
) {
    if coeff == 0 || !g_is_nonzero_signed(di, li) || !g_is_nonzero_signed(dj, lj) {
        return;
    }
    let shifted: Vec<GIndex> = factors
        .iter()
        .enumerate()
        .map(|(idx, &g)| match idx {
            _ if idx == i => GIndex::new(di as usize, li as usize),
            _ if idx == j => GIndex::new(dj as usize, lj as usize),
            _ => g,
        })
        .filter(|g| !g.is_unit())
        .collect();
    out.add_term(
        GProduct::new(shifted).expect("shifted factors are nonzero"),
        Rational::from_integer(BigInt::from(coeff)),
    );
}

/// `g(d′,ℓ′)g(d″,ℓ″)` is regular when `d′ > d″ + ℓ′`.
pub fn is_regular_pair(d1: usize, l1: usize, d2: usize, _l2: usize) -> bool {
    d1 > d2 + l1
}

/// Regular pairs of total bidegree `(d, len)`, including the single factor
/// `g(d, len)` (a pair with `g(0,0)`), greatest first.
pub fn regular_pairs(d: usize, len: usize) -> Vec<GProduct> {
    let mut out = Vec::new();
    if g_is_nonzero(d, len) && len >= 1 {
        out.push(GProduct::from_pairs(&[(d, len)]));
    }
    for d1 in (1..=d).rev() {
        for l1 in 1..len.min(d1 + 1) {
            let (d2, l2) = (d - d1, len - l1);
            if d2 >= l2 && l2 >= 1 && is_regular_pair(d1, l1, d2, l2) {
                out.push(GProduct::from_pairs(&[(d1, l1), (d2, l2)]));
            }
        }
    }
    out
}

/// Rewrites `g(d′,ℓ′)g(d″,ℓ″)` as a combination of regular pairs of the same
/// total bidegree. Regular input comes back unchanged.
///
/// The coefficients are found by solving against the monomial expansions of
/// all regular pairs, which are part of a basis, so the solution is unique.
pub fn straighten_pair(d1: usize, l1: usize, d2: usize, l2: usize) -> Result<GCombination> {
    for (d, len) in [(d1, l1), (d2, l2)] {
        if len == 0 || d < len {
            return Err(Error::InvalidFactor {
                d,
                len,
                reason: "straightening needs d >= len >= 1",
            });
        }
    }
    let input = GProduct::from_pairs(&[(d1, l1), (d2, l2)]);
    if is_regular_pair(d1, l1, d2, l2) {
        return Ok(GCombination::single(input, Rational::from_integer(1.into())));
    }

    let (d, len) = (d1 + d2, l1 + l2);
    let monomials = monomial_basis(d, len);
    let index = |m: &Monomial| monomials.iter().position(|x| x == m);
    let targets = regular_pairs(d, len);
    let columns: Vec<Vec<Rational>> = targets
        .iter()
        .map(|p| coordinates(&p.expand(), &monomials, &index))
        .collect();
    let system = Matrix::from_columns(monomials.len(), &columns);
    let rhs = coordinates(&input.expand(), &monomials, &index);
    let solution = system.solve(&rhs).ok_or_else(|| {
        Error::Internal(format!(
            "{input} is not a combination of regular pairs"
        ))
    })?;

    let mut out = GCombination::zero();
    for (p, c) in targets.into_iter().zip(solution) {
        out.add_term(p, c);
    }
    Ok(out)
}

fn coordinates(
    f: &Polynomial,
    monomials: &[Monomial],
    index: &impl Fn(&Monomial) -> Option<usize>,
) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); monomials.len()];
    for (m, c) in f.terms() {
        let i = index(m).expect("expansion stays in its bidegree");
        v[i] = c.clone();
    }
    v
}

/// Parameters of the identity for total degree `2n+1` and length `2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddIdentityParams {
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub l_prime: usize,
}

impl OddIdentityParams {
    pub fn new(n: usize, m: usize, p: usize, l_prime: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("m must be at least 1".into()));
        }
        if p == 0 || p > m {
            return Err(Error::Domain(format!("need 1 <= p <= m, got p = {p}, m = {m}")));
        }
        if l_prime + 1 < 2 * p || l_prime > 2 * m - 1 {
            return Err(Error::Domain(format!(
                "need 2p-1 <= l' <= 2m-1, got l' = {l_prime}, p = {p}, m = {m}"
            )));
        }
        Ok(Self { n, m, p, l_prime })
    }

    /// Every valid parameter set with `2n+1 <= max_d` and `2m <= 2n+1`.
    pub fn enumerate(max_d: usize) -> Vec<OddIdentityParams> {
        let mut out = Vec::new();
        for n in 0..max_d.div_ceil(2) {
            let d = 2 * n + 1;
            for m in 1..=d / 2 {
                for p in 1..=m {
                    for l_prime in 2 * p - 1..=2 * m - 1 {
                        out.push(OddIdentityParams { n, m, p, l_prime });
                    }
                }
            }
        }
        out
    }
}

/// The combination
///
/// ```text
/// Σ_{d₁+d₂=2n+1, ℓ₁+ℓ₂=2m} (-1)^{ℓ₂} Π_{i=1}^{2p-1}(d₁+p-n-i) Π_{j=2p-1, j≠ℓ′}^{2m-1}(ℓ₁-j) g(d₁,ℓ₁)g(d₂,ℓ₂)
/// ```
///
/// which vanishes identically.
pub fn odd_identity_combination(params: OddIdentityParams) -> GCombination {
    let OddIdentityParams { n, m, p, l_prime } = params;
    let (n, m, p, l_prime) = (n as i64, m as i64, p as i64, l_prime as i64);
    let (d, len) = (2 * n + 1, 2 * m);
    let mut out = GCombination::zero();
    for d1 in 0..=d {
        for l1 in 0..=len {
            let (d2, l2) = (d - d1, len - l1);
            if !g_is_nonzero_signed(d1, l1) || !g_is_nonzero_signed(d2, l2) {
                continue;
            }
            let sign = if l2 % 2 == 0 { 1 } else { -1 };
            let degree_part: i64 = (1..=2 * p - 1).map(|i| d1 + p - n - i).product();
            let length_part: i64 = (2 * p - 1..=2 * m - 1)
                .filter(|&j| j != l_prime)
                .map(|j| l1 - j)
                .product();
            let coeff = sign * degree_part * length_part;
            if coeff == 0 {
                continue;
            }
            let product = GProduct::new([
                GIndex::new(d1 as usize, l1 as usize),
                GIndex::new(d2 as usize, l2 as usize),
            ])
            .expect("nonzero factors");
            out.add_term(product, Rational::from_integer(BigInt::from(coeff)));
        }
    }
    out
}

/// The identity expanded to monomials; zero for every valid parameter set.
pub fn odd_identity_residual(n: usize, m: usize, p: usize, l_prime: usize) -> Result<Polynomial> {
    let params = OddIdentityParams::new(n, m, p, l_prime)?;
    Ok(odd_identity_combination(params).expand())
}

/// `T g(d, ℓ)` should equal `factor_eigenvalue(d, ℓ) · g(d, ℓ)`.
pub fn dominant_residual(d: usize, len: usize) -> Polynomial {
    let g = g_poly(d, len);
    let lambda = Rational::from_integer(BigInt::from(factor_eigenvalue(d, len)));
    &apply_t(&g) - &g.scale(&lambda)
}
