//! Named polynomial families for the antiprism triangulation of a simplex,
//! together with Eulerian-type companions.
//!
//! Recurrence-defined families are memoized in process-wide tables that
//! only ever grow.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::IntPolynomial;
use crate::enumeration::stirling2_rows;
use crate::error::{Error, Result};
use crate::numbers::{binomial, binomial_i, factorial, pow_u};

/// Largest `n` accepted by the public drivers.
pub const MEMO_CAP: usize = 64;

pub fn check_memo_cap(n: usize) -> Result<()> {
    if n > MEMO_CAP {
        Err(Error::Capacity {
            what: "polynomial index",
            requested: n,
            limit: MEMO_CAP,
        })
    } else {
        Ok(())
    }
}

type Table = Mutex<Vec<IntPolynomial>>;

fn memo(table: &Table, n: usize, step: impl Fn(usize, &[IntPolynomial]) -> IntPolynomial) -> IntPolynomial {
    let mut t = table.lock().expect("memo table poisoned");
    while t.len() <= n {
        let k = t.len();
        let p = step(k, &t);
        t.push(p);
    }
    t[n].clone()
}

static H_A: Table = Mutex::new(Vec::new());
static ELL_A: Table = Mutex::new(Vec::new());
static EULERIAN: Table = Mutex::new(Vec::new());
static DERANGEMENT: Table = Mutex::new(Vec::new());

/// `h_A(σ_n, x)`: `h_A(0) = 1` and
/// `h_A(n) = sum_{k<n} C(n,k) x^k h_A(k, 1/x)`.
pub fn h_a(n: usize) -> IntPolynomial {
    memo(&H_A, n, |n, prev| {
        if n == 0 {
            return IntPolynomial::one();
        }
        (0..n)
            .map(|k| prev[k].reverse(k).expect("degree below k").scale(&binomial_i(n, k)))
            .sum::<IntPolynomial>()
            .with_nominal_degree(n)
            .expect("degree below n")
    })
}

/// `ℓ_A(σ_n, x)`: `ℓ_A(0) = 1`, `ℓ_A(1) = 0` and
/// `ℓ_A(n) = sum_{k<n} C(n,k) ℓ_A(k) ((1+x)^(n-k) - 1 - x^(n-k))`.
pub fn ell_a(n: usize) -> IntPolynomial {
    memo(&ELL_A, n, |n, prev| match n {
        0 => IntPolynomial::one(),
        1 => IntPolynomial::zero(),
        _ => (0..n)
            .map(|k| {
                let m = n - k;
                let w = &(&IntPolynomial::one_plus_x_pow(m) - &IntPolynomial::one())
                    - &IntPolynomial::monomial(BigInt::from(1), m);
                (&prev[k] * &w).scale(&binomial_i(n, k))
            })
            .sum(),
    })
}

/// `h_A(∂σ_n, x) = sum_{k<n} C(n,k) ℓ_A(k) (1 + x + ... + x^(n-k-1))` for
/// `n >= 1`; zero for `n = 0`.
pub fn h_a_boundary(n: usize) -> IntPolynomial {
    (0..n)
        .map(|k| (&ell_a(k) * &IntPolynomial::geometric(n - k)).scale(&binomial_i(n, k)))
        .sum()
}

/// `θ_A(σ_n, x) = h_A(σ_n, x) - h_A(∂σ_n, x)`.
pub fn theta_a(n: usize) -> IntPolynomial {
    &h_a(n) - &h_a_boundary(n)
}

/// Eulerian polynomial: `A_0 = 1`, `A_n = sum_{k<n} C(n,k) A_k (x-1)^(n-k-1)`.
pub fn eulerian(n: usize) -> IntPolynomial {
    memo(&EULERIAN, n, |n, prev| {
        if n == 0 {
            return IntPolynomial::one();
        }
        let x_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
        (0..n)
            .map(|k| (&prev[k] * &x_minus_1.pow((n - k - 1) as u32)).scale(&binomial_i(n, k)))
            .sum()
    })
}

/// Derangement polynomial, from `A_n = sum_k C(n,k) d_k`.
pub fn derangement(n: usize) -> IntPolynomial {
    memo(&DERANGEMENT, n, |n, prev| {
        let lower: IntPolynomial = (0..n).map(|k| prev[k].scale(&binomial_i(n, k))).sum();
        &eulerian(n) - &lower
    })
}

/// Binomial Eulerian polynomial `1 + x sum_{k=1}^n C(n,k) A_k`.
pub fn binomial_eulerian(n: usize) -> IntPolynomial {
    let s: IntPolynomial = (1..=n).map(|k| eulerian(k).scale(&binomial_i(n, k))).sum();
    &IntPolynomial::one() + &s.shift(1)
}

/// `q_{n,r}(x) = sum_{k=0}^n C(n,k) x^(k+r) h_A(σ_{k+r}, 1/x)`.
pub fn q_nr(n: usize, r: usize) -> IntPolynomial {
    (0..=n)
        .map(|k| {
            h_a(k + r)
                .reverse(k + r)
                .expect("degree below k + r")
                .scale(&binomial_i(n, k))
        })
        .sum()
}

/// Coefficients of `h_A(σ_n, x)` from the Stirling-number expression.
pub fn h_a_closed(n: usize) -> IntPolynomial {
    if n == 0 {
        return IntPolynomial::one();
    }
    let s = stirling2_rows(n + 1);
    let coeffs = (0..n)
        .map(|k| {
            let mut acc = BigInt::zero();
            for j in 1..=k + 1 {
                let term = BigInt::from(factorial(j) * &s[k + 1][j] * pow_u(j, n - k - 1));
                if (k + 1 - j) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc * binomial_i(n, k)
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// Coefficients of `ℓ_A(σ_n, x)` from the Stirling-number expression.
pub fn ell_a_closed(n: usize) -> IntPolynomial {
    let s = stirling2_rows(n);
    let coeffs = (0..=n)
        .map(|k| {
            let sum: BigUint = (0..=k.min(n - k))
                .map(|j| {
                    let f = factorial(j);
                    &f * &f * &s[k][j] * &s[n - k][j]
                })
                .sum();
            BigInt::from(sum * binomial(n, k))
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// `q_A(n,k) = C(n,k) sum_j j! S(k,j) j^(n-k)`, with `0^0 = 1`.
pub fn q_a(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let s = stirling2_rows(k);
    let sum: BigUint = (0..=k).map(|j| factorial(j) * &s[k][j] * pow_u(j, n - k)).sum();
    sum * binomial(n, k)
}

fn divide_by_binomials(p: &IntPolynomial, n: usize, what: &str) -> Result<IntPolynomial> {
    let coeffs = p
        .padded(n)
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let b = binomial_i(n, k);
            if (&c % &b).is_zero() {
                Ok(c / b)
            } else {
                Err(Error::Integrity(format!(
                    "coefficient {k} of {what}({n}) is not divisible by C({n},{k})"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// `p̄_A(σ_n)` and `ℓ̄_A(σ_n)`: coefficients of `h_A` and `ℓ_A` divided by
/// `C(n,k)`. Any inexact division is an integrity error.
pub fn bar_polys(n: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    Ok((
        divide_by_binomials(&h_a(n), n, "h_A")?,
        divide_by_binomials(&ell_a(n), n, "ell_A")?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{c_recurrence, excedance_prefix_counts};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn h_a_small() {
        assert_eq!(h_a(0), p(&[1]));
        assert_eq!(h_a(1), p(&[1]));
        assert_eq!(h_a(2), p(&[1, 2]));
        assert_eq!(h_a(3), p(&[1, 9, 3]));
        assert_eq!(h_a(4), p(&[1, 28, 42, 4]));
        assert_eq!(h_a(4).nominal_degree(), Some(4));
    }

    #[test]
    fn ell_a_small() {
        assert_eq!(ell_a(2), p(&[0, 2]));
        assert_eq!(ell_a(3), p(&[0, 3, 3]));
        assert_eq!(ell_a(5), p(&[0, 5, 130, 130, 5]));
    }

    #[test]
    fn closed_forms_match_recurrences() {
        for n in 0..=12 {
            assert_eq!(h_a_closed(n), h_a(n), "h n = {n}");
            assert_eq!(ell_a_closed(n), ell_a(n), "ell n = {n}");
        }
    }

    #[test]
    fn ell_a_is_symmetric() {
        for n in 0..=15 {
            assert!(ell_a(n).is_symmetric(n), "n = {n}");
        }
    }

    #[test]
    fn h_is_sum_of_local_h() {
        for n in 0..=12 {
            let rhs: IntPolynomial = (0..=n).map(|k| ell_a(k).scale(&binomial_i(n, k))).sum();
            assert_eq!(h_a(n), rhs, "n = {n}");
        }
    }

    #[test]
    fn boundary_and_theta() {
        assert_eq!(h_a_boundary(2), p(&[1, 1]));
        assert_eq!(theta_a(2), p(&[0, 1]));
        assert_eq!(h_a_boundary(3), p(&[1, 7, 1]));
        assert_eq!(theta_a(3), p(&[0, 2, 2]));
        for n in 1..=12 {
            assert!(h_a_boundary(n).is_symmetric(n - 1), "n = {n}");
        }
    }

    #[test]
    fn eulerian_family() {
        assert_eq!(eulerian(3), p(&[1, 4, 1]));
        assert_eq!(eulerian(4), p(&[1, 11, 11, 1]));
        assert_eq!(derangement(2), p(&[0, 1]));
        assert_eq!(derangement(3), p(&[0, 1, 1]));
        assert_eq!(binomial_eulerian(3), p(&[1, 7, 7, 1]));
    }

    #[test]
    fn derangement_matches_brute_force() {
        // d_n(x) counts derangements by number of excedances.
        for n in 0..=7usize {
            let mut counts = vec![0i64; n + 1];
            let mut w: Vec<usize> = (1..=n).collect();
            permute_all(&mut w, 0, &mut |w| {
                if w.iter().enumerate().all(|(i, &v)| v != i + 1) {
                    let e = w.iter().enumerate().filter(|&(i, &v)| v > i + 1).count();
                    counts[e] += 1;
                }
            });
            assert_eq!(derangement(n), p(&counts), "n = {n}");
        }
    }

    fn permute_all(w: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == w.len() {
            f(w);
            return;
        }
        for j in i..w.len() {
            w.swap(i, j);
            permute_all(w, i + 1, f);
            w.swap(i, j);
        }
    }

    #[test]
    fn q_nr_identities() {
        assert_eq!(q_nr(1, 1), p(&[0, 3, 1]));
        assert_eq!(q_nr(3, 0), p(&[1, 12, 12, 1]));
        assert_eq!(q_nr(2, 2), p(&[0, 12, 61, 30, 1]));
        for n in 1..=10 {
            for r in 0..=3 {
                assert_eq!(q_nr(n, r), &q_nr(n - 1, r) + &q_nr(n - 1, r + 1), "n={n} r={r}");
            }
            let h = h_a(n);
            assert_eq!(q_nr(n, 0), &h + &h.reverse(n).unwrap());
            assert_eq!(q_nr(0, n), h.reverse(n).unwrap());
            let total: IntPolynomial = (0..=n).map(|r| q_nr(n - r, r)).sum();
            assert_eq!(total, h_a(n + 1), "n={n}");
        }
    }

    #[test]
    fn bar_polys_are_excedance_counts() {
        let rec = c_recurrence(8);
        for n in 1..=8 {
            let (pbar, lbar) = bar_polys(n).unwrap();
            let exc = excedance_prefix_counts(n, 10).unwrap();
            let as_poly = |v: &[BigUint]| IntPolynomial::from_coeffs(v.iter().cloned().map(BigInt::from).collect());
            assert_eq!(pbar, as_poly(&exc.c), "n = {n}");
            assert_eq!(pbar, as_poly(&rec[n]), "n = {n}");
            assert_eq!(lbar, as_poly(&exc.d), "n = {n}");
        }
        assert_eq!(bar_polys(4).unwrap().1, p(&[0, 1, 5, 1]));
        assert_eq!(bar_polys(5).unwrap().0, p(&[1, 15, 31, 15, 1]));
    }

    #[test]
    fn q_a_values() {
        assert_eq!(q_a(0, 0), BigUint::from(1u32));
        assert_eq!(q_a(2, 0), BigUint::zero());
        assert_eq!(q_a(2, 1), BigUint::from(2u32));
        assert_eq!(q_a(2, 2), BigUint::from(3u32));
    }
}
