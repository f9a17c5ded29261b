//! Recomputes Bernoulli numbers by the Akiyama–Tanigawa triangle, an
//! algorithm independent of the defining recurrence used in the library,
//! and checks the depth-1 zeta values hanging off them.

use num_bigint::BigInt;
use qsh_core::{bernoulli, zeta_depth1, Rat};

/// Akiyama–Tanigawa, adjusted to the `B₁ = -1/2` convention (the triangle
/// natively produces `B₁ = +1/2`; all other values agree).
fn bernoulli_at(n: usize) -> Rat {
    let mut row: Vec<Rat> = (0..=n)
        .map(|m| Rat::new(BigInt::from(1), BigInt::from(m as i64 + 1)))
        .collect();
    for j in (1..=n).rev() {
        for m in 0..j {
            let diff = row[m].clone() - row[m + 1].clone();
            row[m] = diff * Rat::from_integer(BigInt::from((m + 1) as i64));
        }
        row.truncate(j);
    }
    if n == 1 {
        -row[0].clone()
    } else {
        row[0].clone()
    }
}

#[test]
fn recurrence_agrees_with_akiyama_tanigawa() {
    for n in 0..=20 {
        assert_eq!(bernoulli(n), bernoulli_at(n), "B_{n}");
    }
}

#[test]
fn zeta_values_follow_the_independent_path() {
    for k in (-10..=0).rev() {
        let n = (-k) as usize;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expected = Rat::from_integer(BigInt::from(sign)) * bernoulli_at(n + 1)
            / Rat::from_integer(BigInt::from(n as i64 + 1));
        assert_eq!(zeta_depth1(k).unwrap(), expected, "zeta({k})");
    }
    // even negative arguments vanish
    for m in 1..=5i64 {
        assert!(num_traits::Zero::is_zero(&zeta_depth1(-2 * m).unwrap()));
    }
}
