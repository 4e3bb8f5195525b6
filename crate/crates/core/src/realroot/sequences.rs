use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomials::IntPolynomial;

/// Unimodality of a coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unimodality {
    pub holds: bool,
    /// Every `k` with `a_0 ≤ ... ≤ a_k ≥ ... ≥ a_n`; empty when not
    /// unimodal.
    pub peaks: Vec<usize>,
}

/// `a_0 ≤ a_1 ≤ ... ≤ a_k ≥ a_{k+1} ≥ ... ≥ a_n` for some `k`.
pub fn unimodal(coeffs: &[BigInt]) -> Unimodality {
    let n = coeffs.len();
    if n == 0 {
        return Unimodality {
            holds: true,
            peaks: Vec::new(),
        };
    }
    // rising[k]: a_0 ≤ ... ≤ a_k; falling[k]: a_k ≥ ... ≥ a_n.
    let mut rising = vec![true; n];
    for k in 1..n {
        rising[k] = rising[k - 1] && coeffs[k - 1] <= coeffs[k];
    }
    let mut falling = vec![true; n];
    for k in (0..n - 1).rev() {
        falling[k] = falling[k + 1] && coeffs[k] >= coeffs[k + 1];
    }
    let peaks: Vec<usize> = (0..n).filter(|&k| rising[k] && falling[k]).collect();
    Unimodality {
        holds: !peaks.is_empty(),
        peaks,
    }
}

/// `a_0 ≤ a_n ≤ a_1 ≤ a_{n-1} ≤ ... ≤ a_{⌈n/2⌉}`.
pub fn alternatingly_increasing(p: &IntPolynomial, n: usize) -> bool {
    if p.degree().is_some_and(|d| d > n) {
        return false;
    }
    let (mut lo, mut hi) = (0usize, n);
    let mut order = Vec::with_capacity(n + 1);
    loop {
        order.push(lo);
        if lo == hi {
            break;
        }
        order.push(hi);
        lo += 1;
        if lo == hi {
            break;
        }
        hi -= 1;
    }
    order.windows(2).all(|w| p.coeff(w[0]) <= p.coeff(w[1]))
}

/// The `γ_j` with `p = sum_j γ_j x^j (1+x)^(n-2j)`, for `p` symmetric with
/// center `n/2`.
pub fn gamma_vector(p: &IntPolynomial, n: usize) -> Result<Vec<BigInt>> {
    if p.degree().is_some_and(|d| d > n) || !p.is_symmetric(n) {
        return Err(Error::NotSymmetric(n));
    }
    let mut rest = p.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for j in 0..=n / 2 {
        let g = rest.coeff(j);
        rest = &rest - &IntPolynomial::one_plus_x_pow(n - 2 * j).shift(j).scale(&g);
        gamma.push(g);
    }
    if !rest.is_zero() {
        return Err(Error::Integrity(format!("gamma expansion of {p} leaves {rest}")));
    }
    Ok(gamma)
}

/// Outcome of Macaulay's test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MSequenceCheck {
    pub holds: bool,
    pub reason: Option<String>,
}

fn binom_big(k: &BigUint, i: usize) -> BigUint {
    if *k < BigUint::from(i) {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for t in 0..i {
        num *= k - BigUint::from(t);
        den *= BigUint::from(t + 1);
    }
    num / den
}

/// Largest `k` with `C(k, i) ≤ a`, for `a ≥ 1` and `i ≥ 1`.
fn largest_k(a: &BigUint, i: usize) -> BigUint {
    let mut lo = BigUint::from(i);
    let mut hi = a + BigUint::from(i);
    while lo < hi {
        let mid: BigUint = (&lo + &hi + 1u32) >> 1;
        if binom_big(&mid, i) <= *a {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    lo
}

/// `a^<i>` from the `i`-binomial representation
/// `a = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j)`.
pub fn macaulay_bound(a: &BigUint, i: usize) -> BigUint {
    let mut rest = a.clone();
    let mut out = BigUint::zero();
    let mut t = i;
    while !rest.is_zero() && t >= 1 {
        let k = largest_k(&rest, t);
        rest -= binom_big(&k, t);
        out += binom_big(&(k + 1u32), t + 1);
        t -= 1;
    }
    out
}

/// Macaulay's characterization: `a_0 = 1` and `a_{i+1} ≤ a_i^<i>` for
/// `i ≥ 1`, all entries nonnegative.
pub fn is_m_sequence(seq: &[BigInt]) -> MSequenceCheck {
    let fail = |r: String| MSequenceCheck {
        holds: false,
        reason: Some(r),
    };
    if seq.is_empty() || !seq[0].is_one() {
        return fail("first entry must be 1".into());
    }
    if let Some(i) = seq.iter().position(|a| a.is_negative()) {
        return fail(format!("entry {i} is negative"));
    }
    let vals: Vec<BigUint> = seq.iter().map(|a| a.to_biguint().expect("nonnegative")).collect();
    for i in 1..vals.len().saturating_sub(1) {
        let bound = macaulay_bound(&vals[i], i);
        if vals[i + 1] > bound {
            return fail(format!(
                "entry {} = {} exceeds the bound {} from entry {i}",
                i + 1,
                vals[i + 1],
                bound
            ));
        }
    }
    MSequenceCheck {
        holds: true,
        reason: None,
    }
}

/// `(1, h_1 - h_0, ..., h_⌊n/2⌋ - h_{⌊n/2⌋-1})`.
pub fn g_vector(h: &IntPolynomial, n: usize) -> Vec<BigInt> {
    let mut g = vec![BigInt::one()];
    for i in 1..=n / 2 {
        g.push(h.coeff(i) - h.coeff(i - 1));
    }
    g
}

/// Whether some peak of `h` sits where a unimodal h-vector of an
/// `(n-1)`-dimensional Cohen-Macaulay complex is expected: at `n/2` for
/// even `n`, at `(n-1)/2` or `(n+1)/2` for odd `n`.
pub fn peak_in_middle(h: &IntPolynomial, n: usize) -> bool {
    let u = unimodal(&h.padded(n));
    let allowed: Vec<usize> = if n.is_multiple_of(2) {
        vec![n / 2]
    } else {
        vec![(n - 1) / 2, n.div_ceil(2)]
    };
    u.holds && u.peaks.iter().any(|p| allowed.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::families::{ell_a, h_a, h_a_boundary};

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unimodal_examples() {
        let u = unimodal(&bi(&[1, 2, 5]));
        assert!(u.holds);
        assert_eq!(u.peaks, vec![2]);
        assert!(!unimodal(&bi(&[1, 0, 1])).holds);
        assert_eq!(unimodal(&bi(&[1, 3, 3, 1])).peaks, vec![1, 2]);
    }

    #[test]
    fn alternating_examples() {
        assert!(alternatingly_increasing(&h_a(3), 2));
        assert!(!alternatingly_increasing(&IntPolynomial::from_i64s(&[3, 9, 1]), 2));
        assert!(alternatingly_increasing(&IntPolynomial::from_i64s(&[1, 2, 3, 1]), 3));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_vector(&ell_a(4), 4).unwrap(), bi(&[0, 4, 22]));
        assert!(matches!(
            gamma_vector(&IntPolynomial::from_i64s(&[1, 2]), 1),
            Err(Error::NotSymmetric(1))
        ));
        for n in 1..=15 {
            let g = gamma_vector(&h_a_boundary(n), n - 1).unwrap();
            assert!(g.iter().all(|x| !x.is_negative()), "n = {n}");
        }
    }

    #[test]
    fn macaulay_examples() {
        assert!(is_m_sequence(&bi(&[1, 8])).holds);
        assert!(!is_m_sequence(&bi(&[1, 2, 5])).holds);
        assert!(is_m_sequence(&bi(&[1, 2, 3])).holds);
        assert!(is_m_sequence(&bi(&[1])).holds);
        assert!(!is_m_sequence(&bi(&[2, 1])).holds);
        assert_eq!(macaulay_bound(&BigUint::from(2u32), 1), BigUint::from(3u32));
        // 5 = C(3,2) + C(2,1) so 5^<2> = C(4,3) + C(3,2) = 7.
        assert_eq!(macaulay_bound(&BigUint::from(5u32), 2), BigUint::from(7u32));
        assert_eq!(g_vector(&h_a(3), 3), bi(&[1, 8]));
    }

    #[test]
    fn middle_peaks() {
        for n in 1..=10 {
            assert!(peak_in_middle(&h_a(n), n), "n = {n}");
        }
    }
}
