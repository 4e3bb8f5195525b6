use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::check_cap;
use crate::error::Result;
use crate::numbers::binomial;

/// Positions `i` (1-based) with `w(i) > i`; `w` is in one-line notation
/// with values `1..=n`.
pub fn excedance_set(w: &[usize]) -> Vec<usize> {
    w.iter()
        .enumerate()
        .filter(|&(i, &v)| v > i + 1)
        .map(|(i, _)| i + 1)
        .collect()
}

/// `c(n, k)` and `d(n, k)`: permutations, respectively derangements, of
/// `[n]` whose excedance set is exactly `{1, ..., k}`, for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcedanceCounts {
    pub c: Vec<BigUint>,
    pub d: Vec<BigUint>,
}

/// Lists all `n!` permutations (Heap's algorithm).
pub fn excedance_prefix_counts(n: usize, cap: usize) -> Result<ExcedanceCounts> {
    check_cap("permutation size", n, cap)?;
    let mut c = vec![0u64; n + 1];
    let mut d = vec![0u64; n + 1];
    let mut w: Vec<usize> = (1..=n).collect();
    let mut tally = |w: &[usize]| {
        let mut exc = 0u64;
        let mut fixed = false;
        for (i, &v) in w.iter().enumerate() {
            if v > i + 1 {
                exc |= 1 << i;
            }
            fixed |= v == i + 1;
        }
        if exc & (exc + 1) == 0 {
            let k = exc.count_ones() as usize;
            c[k] += 1;
            if !fixed {
                d[k] += 1;
            }
        }
    };
    tally(&w);
    let mut stack = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                w.swap(0, i);
            } else {
                w.swap(stack[i], i);
            }
            tally(&w);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    let big = |v: Vec<u64>| v.into_iter().map(BigUint::from).collect();
    Ok(ExcedanceCounts { c: big(c), d: big(d) })
}

pub fn count_exc_prefix(n: usize, k: usize, cap: usize) -> Result<BigUint> {
    Ok(excedance_prefix_counts(n, cap)?.c.get(k).cloned().unwrap_or_default())
}

pub fn count_derangement_exc(n: usize, k: usize, cap: usize) -> Result<BigUint> {
    Ok(excedance_prefix_counts(n, cap)?.d.get(k).cloned().unwrap_or_default())
}

/// Rows `c(m, 0..=m)` for `m = 0..=n` from
/// `c(n,k) = 1 + sum_{m=1}^{n-k-1} C(n-k, m) c(k+m, m)`, `c(n,n) = 0` for
/// `n >= 1`, and `c(0,0) = 1` (the empty permutation).
pub fn c_recurrence(n: usize) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for row in 1..=n {
        let mut r = vec![BigUint::zero(); row + 1];
        for k in 0..row {
            let mut v = BigUint::one();
            for m in 1..row - k {
                v += binomial(row - k, m) * &table[k + m][m];
            }
            r[k] = v;
        }
        table.push(r);
    }
    table
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling2_rows(n).swap_remove(n).swap_remove(k)
}

/// Rows `S(m, 0..=m)` for `m = 0..=n`.
pub fn stirling2_rows(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut next = vec![BigUint::zero(); m + 1];
        for j in 1..=m {
            let stay = prev.get(j).map(|s| s * BigUint::from(j)).unwrap_or_default();
            next[j] = &prev[j - 1] + stay;
        }
        rows.push(next);
    }
    rows
}

/// Number of ordered set partitions of an `n`-set.
pub fn fubini(n: usize) -> BigUint {
    let mut f = vec![BigUint::one()];
    for m in 1..=n {
        let v = (1..=m).map(|k| binomial(m, k) * &f[m - k]).sum();
        f.push(v);
    }
    f[n].clone()
}
