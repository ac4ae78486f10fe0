//! Cross-checks against an independent brute-force oracle.
//!
//! The oracle builds binomials by the Pascal-triangle recurrence — a
//! different route from the multiplicative formulas in the crate — and the
//! frozen sequence values below were computed from the definitions alone.

use num_bigint::BigInt;
use num_traits::Zero;

use narayana::{
    catalan, derivative_identity_first, derivative_identity_second, lassalle_numbers,
    moment, narayana_poly_direct, narayana_row, weighted_sum_first, weighted_sum_second,
    Rational,
};

/// `binom(n, k)` by the additive Pascal recurrence, no division anywhere.
fn pascal_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::from(1));
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row[k as usize].clone()
}

fn brute_force_row(r: u64) -> Vec<BigInt> {
    (1..=r)
        .map(|k| {
            let prod = pascal_binomial(r, k - 1) * pascal_binomial(r, k);
            let (q, rem) = num_integer::Integer::div_rem(&prod, &BigInt::from(r));
            assert!(rem.is_zero());
            q
        })
        .collect()
}

#[test]
fn rows_match_the_pascal_oracle() {
    for r in 1..=25u32 {
        let row = narayana_row(r).unwrap();
        assert_eq!(row.entries(), &brute_force_row(r as u64)[..], "row {r}");
    }
}

#[test]
fn catalan_matches_the_pascal_oracle() {
    for n in 1..=25u32 {
        let prod = pascal_binomial(2 * n as u64, n as u64);
        let (q, rem) = num_integer::Integer::div_rem(&prod, &BigInt::from(n + 1));
        assert!(rem.is_zero());
        assert_eq!(catalan(n).unwrap(), q, "C_{n}");
    }
}

#[test]
fn frozen_lassalle_values() {
    // Computed from the alternating recurrence and the Pascal binomials alone.
    let expected = [
        "1",
        "1",
        "5",
        "56",
        "1092",
        "32670",
        "1387815",
        "79389310",
        "5882844968",
        "548129834616",
        "62720089624920",
        "8646340208462880",
        "1413380381699497200",
        "270316008395632253340",
        "59800308109377016336155",
    ];
    let a = lassalle_numbers(15).unwrap();
    let expected: Vec<BigInt> = expected.iter().map(|s| s.parse().unwrap()).collect();
    assert_eq!(a.values(), &expected[..]);
}

#[test]
fn weighted_sums_are_the_derivative_polynomials_at_one() {
    let one = Rational::one();
    assert!(weighted_sum_first(1).unwrap().is_zero());
    assert!(weighted_sum_second(1).unwrap().is_zero());
    for r in 2..=50u32 {
        assert_eq!(
            Rational::from(weighted_sum_first(r).unwrap()),
            derivative_identity_first(r).unwrap().eval(&one),
            "first weighted sum, r={r}"
        );
        assert_eq!(
            Rational::from(weighted_sum_second(r).unwrap()),
            derivative_identity_second(r).unwrap().eval(&one),
            "second weighted sum, r={r}"
        );
    }
}

#[test]
fn even_moments_are_scaled_catalan_numbers() {
    for n in 1..=15u32 {
        let four_n = BigInt::from(1) << (2 * n as usize);
        let scaled = moment(2 * n) * Rational::from(four_n);
        assert_eq!(scaled, Rational::from(catalan(n).unwrap()), "moment 2n={}", 2 * n);
    }
}

#[test]
fn catalan_equals_narayana_poly_at_one() {
    for r in 1..=50u32 {
        assert_eq!(
            narayana_poly_direct(r).unwrap().eval(&Rational::one()),
            Rational::from(catalan(r).unwrap()),
            "N_{r}(1)"
        );
    }
}
