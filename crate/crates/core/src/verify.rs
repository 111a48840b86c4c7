//! One-shot sweep over every `F(d, ℓ)` with `ℓ <= d <= max_d`, running the
//! structural checks that the theory guarantees. Any failure is a bug.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::genfun::{ordered_products, s_basis};
use crate::linalg::polynomial_from_roots;
use crate::operator::{odd_identity_combination, apply_t, apply_t_structural, dominant_residual, OddIdentityParams};
use crate::partition::count_partitions;
use crate::poly::monomial_basis;
use crate::rational::Rational;
use crate::spectral::{
    eigenvalue_of_sequence, has_zero_eigenvalue, spectrum, t_matrix, verify_self_adjoint,
    verify_triangular, BasisKind,
};

/// Known spectrum of T on F(12,4).
pub const F12_4_SPECTRUM: [u64; 15] = [1, 3, 3, 5, 6, 7, 7, 10, 10, 10, 13, 15, 17, 19, 30];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Dimension,
    Triangularity,
    SpectrumConsistency,
    SelfAdjointness,
    Dominance,
    ZeroLaw,
    StructuralAgreement,
    IdentityResidual,
    ReferenceSpectrum,
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Dimension => "dimension",
            CheckKind::Triangularity => "triangularity",
            CheckKind::SpectrumConsistency => "spectrum consistency",
            CheckKind::SelfAdjointness => "self-adjointness",
            CheckKind::Dominance => "dominance",
            CheckKind::ZeroLaw => "zero law",
            CheckKind::StructuralAgreement => "structural agreement",
            CheckKind::IdentityResidual => "identity residual",
            CheckKind::ReferenceSpectrum => "F(12,4) spectrum",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub kind: CheckKind,
    /// What was checked, e.g. `F(6,3)` or `n=2 m=1 p=1 l'=1`.
    pub subject: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(kind: CheckKind, subject: impl Into<String>, outcome: Result<std::result::Result<(), String>>) -> Self {
        let (passed, detail) = match outcome {
            Ok(Ok(())) => (true, None),
            Ok(Err(why)) => (false, Some(why)),
            Err(e) => (false, Some(e.to_string())),
        };
        Self {
            kind,
            subject: subject.into(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub kind: CheckKind,
    pub passed: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_d: usize,
    pub summaries: Vec<CheckSummary>,
    pub failures: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn check_bidegree(d: usize, len: usize) -> Vec<CheckResult> {
    let subject = format!("F({d},{len})");
    let mut out = Vec::new();

    out.push(CheckResult::new(CheckKind::Dimension, &subject, {
        let (s, m, p) = (s_basis(d, len).len(), monomial_basis(d, len).len(), count_partitions(d, len));
        Ok(ensure(s as u128 == p && m as u128 == p, || {
            format!("|S| = {s}, monomials = {m}, p(d,l) = {p}")
        }))
    }));

    let formula: Vec<u64> = crate::partition::admissible_sequences(d, len)
        .iter()
        .map(|s| eigenvalue_of_sequence(s))
        .collect();

    out.push(CheckResult::new(CheckKind::Triangularity, &subject, {
        verify_triangular(d, len).map(|t| ensure(t.upper_triangular, || "entries below the diagonal".into()))
    }));

    out.push(CheckResult::new(CheckKind::SpectrumConsistency, &subject, (|| {
        let tri = verify_triangular(d, len)?;
        let mut diag = tri.diagonal.clone();
        diag.sort();
        let mut sorted: Vec<Rational> = formula.iter().map(|&x| Rational::from_integer(x.into())).collect();
        sorted.sort();
        if diag != sorted {
            return Ok(Err(format!("diagonal {diag:?} vs formula {formula:?}")));
        }
        let charpoly = t_matrix(d, len, BasisKind::Monomial)?.matrix.characteristic_polynomial();
        Ok(ensure(charpoly == polynomial_from_roots(&sorted), || {
            "characteristic polynomial does not factor over the formula spectrum".into()
        }))
    })()));

    out.push(CheckResult::new(CheckKind::SelfAdjointness, &subject, {
        verify_self_adjoint(d, len).map(|ok| ensure(ok, || "M^T G != G M".into()))
    }));

    out.push(CheckResult::new(CheckKind::Dominance, &subject, {
        let top = crate::operator::factor_eigenvalue(d, len);
        let max = formula.iter().copied().max().unwrap_or(0);
        Ok(ensure(dominant_residual(d, len).is_zero() && top == max, || {
            format!("dominant {top} vs spectrum max {max}")
        }))
    }));

    out.push(CheckResult::new(CheckKind::ZeroLaw, &subject, {
        has_zero_eigenvalue(d, len).map(|law| {
            let actual = formula.contains(&0);
            ensure(law == actual, || format!("d >= l^2 is {law} but 0 in spectrum is {actual}"))
        })
    }));

    out.push(CheckResult::new(CheckKind::StructuralAgreement, &subject, (|| {
        for p in ordered_products(d, len) {
            let structural = apply_t_structural(&p)?.expand();
            if structural != apply_t(&p.expand()) {
                return Ok(Err(format!("disagreement on {p}")));
            }
        }
        Ok(Ok(()))
    })()));

    out
}

/// Runs every check for `ℓ <= d <= max_d`. Independent bidegrees are
/// processed in parallel; results come back in a fixed order.
pub fn run(max_d: usize) -> VerifyReport {
    let bidegrees: Vec<(usize, usize)> = (1..=max_d)
        .flat_map(|d| (1..=d).map(move |len| (d, len)))
        .collect();
    let mut results: Vec<CheckResult> = bidegrees
        .par_iter()
        .flat_map_iter(|&(d, len)| check_bidegree(d, len))
        .collect();

    results.extend(OddIdentityParams::enumerate(max_d).par_iter().map(|&params| {
        let subject = format!("n={} m={} p={} l'={}", params.n, params.m, params.p, params.l_prime);
        CheckResult::new(
            CheckKind::IdentityResidual,
            subject,
            Ok(ensure(odd_identity_combination(params).expand().is_zero(), || "nonzero residual".into())),
        )
    }).collect::<Vec<_>>());

    if max_d >= 12 {
        results.push(CheckResult::new(CheckKind::ReferenceSpectrum, "F(12,4)", {
            spectrum(12, 4).map(|s| {
                let got = s.eigenvalues();
                ensure(got == F12_4_SPECTRUM, || format!("got {got:?}"))
            })
        }));
    }

    let mut tally: BTreeMap<CheckKind, (usize, usize)> = BTreeMap::new();
    for r in &results {
        let e = tally.entry(r.kind).or_default();
        e.1 += 1;
        if r.passed {
            e.0 += 1;
        }
    }
    VerifyReport {
        max_d,
        summaries: tally
            .into_iter()
            .map(|(kind, (passed, total))| CheckSummary { kind, passed, total })
            .collect(),
        failures: results.into_iter().filter(|r| !r.passed).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_sweep() {
        let r = run(1);
        assert!(r.all_passed());
        let dims = r.summaries.iter().find(|s| s.kind == CheckKind::Dimension).unwrap();
        assert_eq!(dims.total, 1);
    }

    #[test]
    fn small_sweep_passes() {
        let r = run(6);
        assert!(r.all_passed(), "{:?}", r.failures);
        assert!(r.summaries.iter().all(|s| s.kind != CheckKind::ReferenceSpectrum));
    }
}
