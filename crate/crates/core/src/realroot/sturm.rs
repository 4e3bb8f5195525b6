use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomials::IntPolynomial;

/// Bisection stops once an interval is narrower than `2^-WIDTH_FLOOR_BITS`.
pub const WIDTH_FLOOR_BITS: u32 = 256;

/// Sturm sequence `p, p', -rem(p, p'), ...` kept integral by dividing out
/// positive contents, which leaves every sign unchanged.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

fn drop_content(p: &IntPolynomial) -> IntPolynomial {
    let g = p.content();
    if g.is_zero() || g.is_one() {
        return p.clone();
    }
    IntPolynomial::from_coeffs(p.coeffs().iter().map(|c| c / &g).collect())
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut chain = Vec::new();
        if p.is_zero() {
            return SturmChain { chain };
        }
        chain.push(drop_content(p));
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(drop_content(&d));
        loop {
            let n = chain.len();
            let (r, steps) = chain[n - 2].pseudo_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // lc^steps * a = q b + r, so -rem(a, b) is a positive multiple of
            // -r unless lc < 0 and steps is odd.
            let flip = chain[n - 1].leading_coeff().is_negative() && steps % 2 == 1;
            let next = if flip { r } else { -&r };
            chain.push(drop_content(&next));
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.chain
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_pos_inf()))
    }

    fn variations_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_neg_inf()))
    }

    /// Distinct real roots.
    pub fn count_real(&self) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_neg_inf() - self.variations_pos_inf()
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        self.variations_at(lo) - self.variations_at(hi)
    }
}

/// An interval holding exactly one distinct real root: either the single
/// point `lo = hi`, or the open interval `(lo, hi)` with `p(hi) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RootInterval", 3)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Exact isolation of the real roots of an integer polynomial.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub degree: usize,
    pub squarefree_part: IntPolynomial,
    pub sturm_chain: Vec<IntPolynomial>,
    /// Increasing, pairwise disjoint.
    pub intervals: Vec<RootInterval>,
}

impl RootIsolation {
    /// Real roots counted with multiplicity.
    pub fn real_root_count(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }

    pub fn is_real_rooted(&self) -> bool {
        self.real_root_count() == self.degree
    }
}

/// A power of two strictly larger than every root's absolute value.
pub(crate) fn root_bound(p: &IntPolynomial) -> BigRational {
    let lc = p.leading_coeff().abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    // Cauchy: |r| < 1 + max|a_i| / |a_d|.
    let bound = BigRational::new(max, lc) + BigRational::one();
    let mut b = BigRational::one();
    while b <= bound {
        b *= BigRational::from_integer(BigInt::from(2));
    }
    b
}

/// Isolating intervals for the distinct real roots of a squarefree
/// polynomial, in increasing order.
pub(crate) fn isolate_squarefree(g: &IntPolynomial, chain: &SturmChain) -> Result<Vec<(BigRational, BigRational)>> {
    if g.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let b = root_bound(g);
    let floor = BigRational::new(BigInt::one(), BigInt::one() << WIDTH_FLOOR_BITS);
    let mut out = Vec::new();
    let two = BigRational::from_integer(2.into());
    // (lo, hi, hi_is_known_root): the interval (lo, hi], or (lo, hi) when the
    // upper end is a root already recorded.
    let mut stack = vec![(-b.clone(), b, false)];
    while let Some((lo, hi, known)) = stack.pop() {
        let count = chain.count_in(&lo, &hi) - usize::from(known);
        if count == 0 {
            continue;
        }
        if !known && g.sign_at(&hi) == Ordering::Equal {
            out.push((hi.clone(), hi.clone()));
            if count > 1 {
                stack.push((lo, hi, true));
            }
            continue;
        }
        if count == 1 && !known {
            out.push((lo, hi));
            continue;
        }
        if &hi - &lo < floor {
            return Err(Error::Internal("root isolation reached the width floor".into()));
        }
        let mid = (&lo + &hi) / &two;
        stack.push((mid.clone(), hi, known));
        stack.push((lo, mid, false));
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out)
}

/// Narrows an isolating interval of a squarefree `g` to width below `width`.
pub fn refine(
    g: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> (BigRational, BigRational) {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let s_hi = g.sign_at(&hi);
    if lo == hi || s_hi == Ordering::Equal {
        return (hi.clone(), hi);
    }
    while &(&hi - &lo) >= width {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        match g.sign_at(&mid) {
            Ordering::Equal => return (mid.clone(), mid),
            s if s == s_hi => hi = mid,
            _ => lo = mid,
        }
    }
    (lo, hi)
}

/// `true` iff every complex root is real; the zero polynomial counts as
/// real-rooted.
pub fn is_real_rooted(p: &IntPolynomial) -> bool {
    let Some(d) = p.degree() else {
        return true;
    };
    if d == 0 {
        return true;
    }
    let factors = p.squarefree_decomposition();
    let real: usize = factors
        .iter()
        .enumerate()
        .map(|(i, f)| (i + 1) * SturmChain::new(f).count_real())
        .sum();
    real == d
}

/// Isolating intervals and multiplicities for the real roots of `p`.
pub fn isolate(p: &IntPolynomial) -> Result<RootIsolation> {
    let degree = p.degree().unwrap_or(0);
    let g = p.squarefree_part();
    let chain = SturmChain::new(&g);
    let factors = p.squarefree_decomposition();
    let chains: Vec<SturmChain> = factors.iter().map(SturmChain::new).collect();
    let mut intervals = Vec::new();
    for (lo, hi) in isolate_squarefree(&g, &chain)? {
        let multiplicity = multiplicity_in(&factors, &chains, &lo, &hi)?;
        intervals.push(RootInterval { lo, hi, multiplicity });
    }
    Ok(RootIsolation {
        degree,
        squarefree_part: g,
        sturm_chain: chain.chain,
        intervals,
    })
}

/// Multiplicity, in `prod_i factors[i]^(i+1)`, of the unique root inside an
/// isolating interval of a polynomial divisible by every factor's roots.
pub(crate) fn multiplicity_in(
    factors: &[IntPolynomial],
    chains: &[SturmChain],
    lo: &BigRational,
    hi: &BigRational,
) -> Result<usize> {
    let mut m = 0;
    for (i, (f, c)) in factors.iter().zip(chains).enumerate() {
        let hit = if lo == hi {
            f.sign_at(hi) == Ordering::Equal
        } else {
            c.count_in(lo, hi) > 0
        };
        if hit {
            if m != 0 {
                return Err(Error::Internal("squarefree factors share a root".into()));
            }
            m = i + 1;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::families::h_a;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        assert!(is_real_rooted(&p(&[1, 9, 3])));
        assert!(!is_real_rooted(&p(&[1, 1, 1])));
        assert!(is_real_rooted(&IntPolynomial::zero()));
        assert!(is_real_rooted(&p(&[5])));
        assert!(is_real_rooted(&h_a(7)));
    }

    #[test]
    fn isolation_with_multiplicities() {
        // (x - 1)^2 (x + 2) (x^2 + 1)
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1])) * &p(&[1, 0, 1]);
        let iso = isolate(&f).unwrap();
        assert_eq!(iso.degree, 5);
        assert_eq!(iso.real_root_count(), 3);
        assert!(!iso.is_real_rooted());
        assert_eq!(iso.intervals.len(), 2);
        assert_eq!(iso.intervals[0].multiplicity, 1);
        assert_eq!(iso.intervals[1].multiplicity, 2);
        assert!(iso.intervals[0].hi <= iso.intervals[1].lo);
    }

    #[test]
    fn exact_rational_roots_are_points() {
        let f = &p(&[-1, 2]) * &p(&[3, 1]);
        let iso = isolate(&f).unwrap();
        assert_eq!(iso.intervals.len(), 2);
        for i in &iso.intervals {
            assert!(f.sign_at(&i.hi) == Ordering::Equal || i.lo < i.hi);
        }
        let (lo, hi) = refine(&p(&[-2, 0, 1]), &r(1, 1), &r(2, 1), &r(1, 1000));
        assert!(&hi - &lo < r(1, 1000));
        assert!(lo < r(1415, 1000) && hi > r(1414, 1000));
    }

    #[test]
    fn sturm_counts_in_intervals() {
        let f = p(&[0, -1, 0, 1]); // x^3 - x
        let c = SturmChain::new(&f);
        assert_eq!(c.count_real(), 3);
        assert_eq!(c.count_in(&r(-1, 1), &r(1, 1)), 2);
        assert_eq!(c.count_in(&r(-2, 1), &r(-1, 1)), 1);
    }

    fn product(roots: &[i64], dens: &[i64]) -> IntPolynomial {
        roots
            .iter()
            .zip(dens)
            .fold(IntPolynomial::one(), |acc, (&a, &d)| &acc * &p(&[-a, d]))
    }

    proptest! {
        #[test]
        fn products_of_linear_factors_are_real_rooted(
            pairs in prop::collection::vec((-20i64..20, 1i64..5), 1..=12)
        ) {
            let (roots, dens): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
            let f = product(&roots, &dens);
            prop_assert!(is_real_rooted(&f));
            let iso = isolate(&f).unwrap();
            prop_assert_eq!(iso.real_root_count(), roots.len());
            for w in iso.intervals.windows(2) {
                prop_assert!(w[0].hi <= w[1].lo);
            }
        }

        #[test]
        fn complex_pair_breaks_real_rootedness(
            pairs in prop::collection::vec((-20i64..20, 1i64..5), 0..=10),
            a in -10i64..10,
            b in 1i64..10,
        ) {
            let (roots, dens): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
            // (x - a)^2 + b^2 has the roots a ± bi.
            let quad = p(&[a * a + b * b, -2 * a, 1]);
            let f = &product(&roots, &dens) * &quad;
            prop_assert!(!is_real_rooted(&f));
        }
    }
}
