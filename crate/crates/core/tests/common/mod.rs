//! Independent oracles used by the integration tests. Nothing here calls the
//! closed formulas under test.

#![allow(dead_code)]

use bihomogeneous::partition::partitions_with_length;
use bihomogeneous::rational::{factorial, int};
use bihomogeneous::{Polynomial, Rational};
use num_bigint::BigInt;

/// Truncated `exp(A(z))` for a power series `A` with polynomial coefficients
/// and `A_0 = 0`, via `k E_k = Σ_{j=1..k} j A_j E_{k-j}`. Returns
/// `E_0..=E_n`.
pub fn series_exp(a: &[Polynomial], n: usize) -> Vec<Polynomial> {
    assert!(a.first().is_none_or(Polynomial::is_zero));
    let mut e = vec![Polynomial::one()];
    for k in 1..=n {
        let mut acc = Polynomial::zero();
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            acc = acc + (&a[j] * &e[k - j]).scale(&int(j as i64));
        }
        e.push(acc.scale(&Rational::new(BigInt::from(1), BigInt::from(k))));
    }
    e
}

/// Coefficients of `exp(r Σ_{j<=n} x_j z^j)` as polynomials in `x`, indexed
/// `[d][ℓ]`, found by exponentiating with `r` set to a formal marker: the
/// `r^ℓ` part is the length-ℓ component.
pub fn g_table(n: usize) -> Vec<Vec<Polynomial>> {
    let a: Vec<Polynomial> = (0..=n)
        .map(|j| if j == 0 { Polynomial::zero() } else { Polynomial::var(j) })
        .collect();
    let e = series_exp(&a, n);
    (0..=n)
        .map(|d| {
            (0..=n)
                .map(|l| e[d].component(bihomogeneous::Bidegree::new(d, l)))
                .collect()
        })
        .collect()
}

/// `h_k` for `k <= n` as coefficients of `exp(Σ x_j z^j)`.
pub fn h_series(n: usize) -> Vec<Polynomial> {
    let a: Vec<Polynomial> = (0..=n)
        .map(|j| if j == 0 { Polynomial::zero() } else { Polynomial::var(j) })
        .collect();
    series_exp(&a, n)
}

/// `e_k` for `k <= n` as coefficients of `exp(Σ (-1)^{j+1} x_j z^j)`.
pub fn e_series(n: usize) -> Vec<Polynomial> {
    let a: Vec<Polynomial> = (0..=n)
        .map(|j| match j {
            0 => Polynomial::zero(),
            j if j % 2 == 1 => Polynomial::var(j),
            j => -&Polynomial::var(j),
        })
        .collect();
    series_exp(&a, n)
}

/// `T f` from the literal double sum over `a + b = p + q`, with every
/// index pair visited in both orders and the total halved.
pub fn brute_t(f: &Polynomial) -> Polynomial {
    let n = f
        .terms()
        .flat_map(|(m, _)| m.exponents().iter().map(|&(k, _)| k))
        .max()
        .unwrap_or(0);
    let mut acc = Polynomial::zero();
    for p in 1..=n {
        for q in 1..=n {
            let dd = f.partial_derivative(q).partial_derivative(p);
            if dd.is_zero() {
                continue;
            }
            for a in 1..p + q {
                acc = acc + dd.mul_var(p + q - a).mul_var(a);
            }
        }
    }
    acc.scale(&Rational::new(BigInt::from(1), BigInt::from(2)))
}

/// `h_k = Σ_{λ ⊢ k} p_λ / z_λ` with `p_j = j x_j`, where
/// `z_λ = Π j^{m_j} m_j!`.
pub fn h_newton(k: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for l in 1..=k {
        for lambda in partitions_with_length(k, l) {
            let mut term = Polynomial::one();
            let mut z = BigInt::from(1);
            let parts = lambda.parts();
            let mut i = 0;
            while i < parts.len() {
                let j = parts[i];
                let m = parts[i..].iter().take_while(|&&x| x == j).count();
                let p_j = Polynomial::var(j).scale(&int(j as i64));
                term = &term * &p_j.pow(m);
                z *= BigInt::from(j).pow(m as u32) * factorial(m);
                i += m;
            }
            out = out + term.scale(&Rational::new(BigInt::from(1), z));
        }
    }
    out
}
