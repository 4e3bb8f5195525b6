use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{next_submask, Family};
use crate::numbers::{binomial, low_bits};
use crate::polynomials::families;

/// Where a count came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Every object was listed.
    Enumerated,
    /// The size exceeded the enumeration cap and a closed formula was used.
    ClosedForm,
}

/// Counts indexed by weight `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    #[serde(serialize_with = "crate::numbers::serialize_decimal")]
    pub values: Vec<BigUint>,
    pub provenance: Provenance,
}

impl Counts {
    pub fn get(&self, k: usize) -> BigUint {
        self.values.get(k).cloned().unwrap_or_default()
    }
}

/// Adds, by weight, the number of ways to partition `rest` into an ordered
/// sequence of blocks with chosen subsets.
fn count_rec(rest: u64, weight: usize, proper: bool, out: &mut [u64]) {
    if rest == 0 {
        out[weight] += 1;
        return;
    }
    let mut block = next_submask(0, rest);
    while block != 0 {
        let after = rest & !block;
        let mut chosen = next_submask(0, block);
        while chosen != 0 {
            if !(proper && chosen == block) {
                count_rec(after, weight + chosen.count_ones() as usize, proper, out);
            }
            chosen = next_submask(chosen, block);
        }
        block = next_submask(block, rest);
    }
}

fn enumerate(n: usize, family: Family) -> Vec<BigUint> {
    let all = low_bits(n);
    let grounds: Vec<u64> = if family.partial { (0..=all).collect() } else { vec![all] };
    // Split on the first block so workers share nothing.
    let mut jobs: Vec<(u64, u64)> = Vec::new();
    let mut totals = vec![0u64; n + 1];
    for s in grounds {
        if s == 0 {
            totals[0] += 1;
            continue;
        }
        let mut b = next_submask(0, s);
        while b != 0 {
            jobs.push((s, b));
            b = next_submask(b, s);
        }
    }
    let partial: Vec<u64> = jobs
        .par_iter()
        .map(|&(s, block)| {
            let mut out = vec![0u64; n + 1];
            let mut chosen = next_submask(0, block);
            while chosen != 0 {
                if !(family.proper && chosen == block) {
                    count_rec(s & !block, chosen.count_ones() as usize, family.proper, &mut out);
                }
                chosen = next_submask(chosen, block);
            }
            out
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    totals.iter().zip(partial).map(|(a, b)| BigUint::from(a + b)).collect()
}

fn counts_or_formula(n: usize, cap: usize, family: Family, formula: impl Fn(usize) -> Vec<BigUint>) -> Counts {
    if n <= cap && n < 63 {
        Counts {
            values: enumerate(n, family),
            provenance: Provenance::Enumerated,
        }
    } else {
        Counts {
            values: formula(n),
            provenance: Provenance::ClosedForm,
        }
    }
}

fn coeffs_u(p: &crate::polynomials::IntPolynomial, n: usize) -> Vec<BigUint> {
    p.padded(n)
        .into_iter()
        .map(|c| c.to_biguint().expect("nonnegative count"))
        .collect()
}

/// Multi-pointed partial ordered partitions of `[n]` by weight; these count
/// the faces of the antiprism triangulation of the simplex.
pub fn multipointed_partial_counts(n: usize, cap: usize) -> Counts {
    counts_or_formula(n, cap, Family::PARTIAL, |n| {
        (0..=n)
            .map(|k| (0..=n).map(|s| binomial(n, s) * families::q_a(s, k)).sum())
            .collect()
    })
}

/// Multi-pointed ordered partitions of `[n]` itself by weight.
pub fn multipointed_full_counts(n: usize, cap: usize) -> Counts {
    counts_or_formula(n, cap, Family::FULL, |n| (0..=n).map(|k| families::q_a(n, k)).collect())
}

/// Proper multi-pointed ordered partitions of `[n]` by weight.
pub fn proper_multipointed_counts(n: usize, cap: usize) -> Counts {
    counts_or_formula(n, cap, Family::PROPER, |n| coeffs_u(&families::ell_a_closed(n), n))
}

/// Proper multi-pointed partial ordered partitions of `[n]` by weight.
pub fn proper_partial_counts(n: usize, cap: usize) -> Counts {
    counts_or_formula(n, cap, Family::PROPER_PARTIAL, |n| {
        coeffs_u(&families::h_a_closed(n), n)
    })
}

pub fn multipointed_partial(n: usize, k: usize, cap: usize) -> BigUint {
    multipointed_partial_counts(n, cap).get(k)
}

pub fn multipointed_full(n: usize, k: usize, cap: usize) -> BigUint {
    multipointed_full_counts(n, cap).get(k)
}

pub fn proper_multipointed(n: usize, k: usize, cap: usize) -> BigUint {
    proper_multipointed_counts(n, cap).get(k)
}
