mod common;

use bihomogeneous::genfun::{complete_symmetric, expand_in_gbasis, s_basis};
use bihomogeneous::partition::{admissible_sequences, count_partitions, is_admissible};
use bihomogeneous::poly::monomial_basis;
use bihomogeneous::rational::int;
use bihomogeneous::{
    apply_t, apply_t_structural, g_poly, hook_leg_profile, inner_product, profile_to_partition, Bidegree,
    GIndex, GProduct, Monomial, Partition, Polynomial, Rational,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1usize..=4, 0usize..=2), 0..=3).prop_map(Monomial::from_pairs)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), rational()), 0..=4).prop_map(Polynomial::from_terms)
}

/// A bidegree with `d <= max_d` and a random element of `F(d, ℓ)`.
fn homogeneous(max_d: usize) -> impl Strategy<Value = (Bidegree, Polynomial)> {
    (1..=max_d)
        .prop_flat_map(|d| (Just(d), 1..=d))
        .prop_flat_map(|(d, l)| {
            let monos = monomial_basis(d, l);
            let n = monos.len();
            (Just(Bidegree::new(d, l)), Just(monos), prop::collection::vec(rational(), n))
        })
        .prop_map(|(b, monos, coeffs)| (b, Polynomial::from_terms(monos.into_iter().zip(coeffs))))
}

fn factor_sequence(max_total: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((1usize..=5).prop_flat_map(|d| (Just(d), 1..=d)), 1..=4).prop_map(move |mut v| {
        let mut total = 0;
        v.retain(|&(d, _)| {
            total += d;
            total <= max_total
        });
        v
    })
}

fn partition(max_d: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=8, 1..=8).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_d
        });
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in polynomial(), g in polynomial(), h in polynomial()) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn derivative_is_adjoint_to_multiplication(f in polynomial(), g in polynomial(), k in 1usize..=5) {
        prop_assert_eq!(inner_product(&f.partial_derivative(k), &g), inner_product(&f, &g.mul_var(k)));
    }

    #[test]
    fn inner_product_is_positive_definite(f in polynomial()) {
        let n = inner_product(&f, &f);
        if f.is_zero() {
            prop_assert_eq!(n, int(0));
        } else {
            prop_assert!(n > int(0));
        }
    }

    #[test]
    fn multiplication_adds_bidegrees(f in homogeneous(5), g in homogeneous(5)) {
        let ((bf, f), (bg, g)) = (f, g);
        let prod = &f * &g;
        prop_assert!(prod.is_zero() || prod.bidegree() == Some(bf + bg));
    }

    #[test]
    fn t_matches_literal_sum(f in polynomial()) {
        prop_assert_eq!(apply_t(&f), common::brute_t(&f));
    }

    #[test]
    fn t_is_self_adjoint_and_positive((_, f) in homogeneous(7), g in polynomial()) {
        prop_assert_eq!(inner_product(&apply_t(&f), &g), inner_product(&f, &apply_t(&g)));
        prop_assert!(inner_product(&apply_t(&f), &f) >= int(0));
    }

    #[test]
    fn t_preserves_bidegree(f in polynomial(), d in 0usize..=8, l in 0usize..=8) {
        let b = Bidegree::new(d, l);
        prop_assert_eq!(apply_t(&f).component(b), apply_t(&f.component(b)));
    }

    #[test]
    fn structural_formula_in_any_factor_order(seq in factor_sequence(12), rot in 0usize..4) {
        let mut seq = seq;
        let n = seq.len();
        seq.rotate_left(rot % n);
        let p = GProduct::new(seq.iter().map(|&(d, l)| GIndex::new(d, l))).unwrap();
        prop_assert_eq!(apply_t_structural(&p).unwrap().expand(), apply_t(&p.expand()));
    }

    #[test]
    fn hook_profile_round_trip(p in partition(20)) {
        let prof = hook_leg_profile(&p).unwrap();
        let seq = prof.hook_increment_pairs();
        prop_assert!(is_admissible(&seq));
        prop_assert_eq!(seq.iter().map(|s| s.0).sum::<usize>(), p.size());
        prop_assert_eq!(seq.iter().map(|s| s.1).sum::<usize>(), p.len());
        prop_assert_eq!(profile_to_partition(&seq).unwrap(), p);
    }

    #[test]
    fn gbasis_coordinates_reconstruct((b, f) in homogeneous(8)) {
        let coords = expand_in_gbasis(&f, b.d, b.len).unwrap();
        let rebuilt: Polynomial = s_basis(b.d, b.len)
            .iter()
            .zip(&coords)
            .map(|(p, c)| p.expand().scale(c))
            .sum();
        prop_assert_eq!(rebuilt, f);
    }
}

#[test]
fn admissible_sequences_are_counted_by_partitions() {
    for d in 1..=16 {
        for l in 1..=d {
            let seqs = admissible_sequences(d, l);
            assert_eq!(seqs.len() as u128, count_partitions(d, l), "F({d},{l})");
            for s in &seqs {
                let p = profile_to_partition(s).unwrap();
                assert_eq!((p.size(), p.len()), (d, l));
                assert_eq!(hook_leg_profile(&p).unwrap().hook_increment_pairs(), *s);
            }
        }
    }
}

#[test]
fn g_matches_series_exponentiation() {
    let table = common::g_table(10);
    for (d, row) in table.iter().enumerate() {
        for (l, g) in row.iter().enumerate() {
            assert_eq!(g_poly(d, l), *g, "g({d},{l})");
        }
    }
}

#[test]
fn h_matches_power_sum_expansion() {
    for k in 1..=8 {
        assert_eq!(complete_symmetric(k), common::h_newton(k), "h_{k}");
    }
}

#[test]
fn two_by_two_gbasis_example() {
    let x2sq = Polynomial::monomial(Monomial::from_pairs([(2, 2)]), int(1));
    assert_eq!(expand_in_gbasis(&x2sq, 4, 2).unwrap(), vec![int(2), int(-2)]);
}
