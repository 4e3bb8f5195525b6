//! Small exact integer helpers shared by the enumerators and the recurrences.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn binomial_i(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(n, k))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow_u(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// Bit mask with the low `n` bits set.
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Serializes a sequence of integers as decimal strings.
pub(crate) fn serialize_decimal<T: std::fmt::Display, S: serde::Serializer>(
    values: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(|v| v.to_string()))
}
