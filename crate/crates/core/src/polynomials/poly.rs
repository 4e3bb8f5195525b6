use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored lowest degree first with trailing zeros trimmed.
/// An optional nominal degree records the `n` used when the polynomial is
/// read as `x^n p(1/x)`; it never takes part in equality.
#[derive(Clone, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
    nominal: Option<usize>,
}

impl PartialEq for IntPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for IntPolynomial {}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs, nominal: None }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(1 + x)^m`.
    pub fn one_plus_x_pow(m: usize) -> Self {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut c = BigInt::one();
        coeffs.push(c.clone());
        for k in 1..=m {
            c = c * BigInt::from(m - k + 1) / BigInt::from(k);
            coeffs.push(c.clone());
        }
        Self::from_coeffs(coeffs)
    }

    /// `1 + x + ... + x^(m-1)`; zero for `m = 0`.
    pub fn geometric(m: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one(); m])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Coefficients `0..=n`, zero padded.
    pub fn padded(&self, n: usize) -> Vec<BigInt> {
        (0..=n).map(|k| self.coeff(k)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn nominal_degree(&self) -> Option<usize> {
        self.nominal
    }

    pub fn with_nominal_degree(mut self, n: usize) -> Result<Self> {
        self.check_reversible(n)?;
        self.nominal = Some(n);
        Ok(self)
    }

    fn check_reversible(&self, n: usize) -> Result<()> {
        match self.degree() {
            Some(d) if d > n => Err(Error::ReverseDegree { degree: d, n }),
            _ => Ok(()),
        }
    }

    /// `x^n p(1/x)`.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        self.check_reversible(n)?;
        let mut coeffs = self.padded(n);
        coeffs.reverse();
        let mut out = Self::from_coeffs(coeffs);
        out.nominal = Some(n);
        Ok(out)
    }

    /// Reversal with respect to the nominal degree, or the actual degree.
    pub fn reversed(&self) -> Self {
        let n = self.nominal.or(self.degree()).unwrap_or(0);
        self.reverse(n).expect("nominal degree bounds the degree")
    }

    pub fn is_symmetric(&self, n: usize) -> bool {
        self.reverse(n).is_ok_and(|r| r == *self)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(r)` for a rational `r`, computed without division.
    pub fn sign_at(&self, r: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let (p, q) = (r.numer(), r.denom());
        let (p, q) = if q.is_negative() {
            (-p, -q)
        } else {
            (p.clone(), q.clone())
        };
        let mut acc = self.coeffs[d].clone();
        let mut qpow = BigInt::one();
        for i in (0..d).rev() {
            qpow *= &q;
            acc = acc * &p + &self.coeffs[i] * &qpow;
        }
        acc.sign_ordering()
    }

    /// Sign of the polynomial as `x -> +inf`.
    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.leading_coeff().sign_ordering()
    }

    /// Sign of the polynomial as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.sign_at_pos_inf();
        if self.degree().unwrap_or(0) % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder of `self` by `divisor` together with the number of
    /// reduction steps `s`: `lc(divisor)^s * self = q * divisor + r`.
    pub fn pseudo_rem(&self, divisor: &Self) -> (Self, usize) {
        assert!(!divisor.is_zero(), "pseudo-remainder by zero polynomial");
        let db = divisor.coeffs.len() - 1;
        let lc = divisor.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut steps = 0;
        while r.len() > db && !r.is_empty() {
            let lr = r.last().cloned().expect("nonempty");
            let off = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[off + i] -= &lr * b;
            }
            steps += 1;
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        (Self::from_coeffs(r), steps)
    }

    /// Exact quotient over the integers, or `None` if the division leaves a
    /// remainder or needs fractions.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let da = self.degree()?;
        if da < db {
            return None;
        }
        let lc = divisor.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for off in (0..=da - db).rev() {
            let top = &r[off + db];
            if top.is_zero() {
                continue;
            }
            let (quot, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                r[off + i] -= &quot * b;
            }
            q[off] = quot;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::from_coeffs(q))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient, scaled by the gcd of
    /// the contents. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&content)
    }

    /// Yun's squarefree decomposition of the primitive part:
    /// `primitive_part(self) = prod_i factors[i]^(i+1)` with every factor
    /// primitive, squarefree and pairwise coprime. Constant factors are kept
    /// so the index still encodes the multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<Self> {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df).primitive_part();
        // Quotients of primitive polynomials by a primitive divisor stay
        // integral, so every step below is exact over Z.
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut factors = Vec::new();
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d).primitive_part();
            let nb = b.div_exact(&a).expect("gcd divides b");
            let nc = d.div_exact(&a).expect("gcd divides d");
            factors.push(a);
            b = nb;
            d = &nc - &b.derivative();
        }
        while factors.last().is_some_and(|p| p.degree() == Some(0)) {
            factors.pop();
        }
        factors
    }

    /// Squarefree part of the primitive part.
    pub fn squarefree_part(&self) -> Self {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return f;
        }
        let g = f.gcd(&f.derivative());
        f.div_exact(&g).expect("gcd divides f").primitive_part()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        match self.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

fn zip_coeffs(a: &IntPolynomial, b: &IntPolynomial, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPolynomial {
    let zero = BigInt::zero();
    let n = a.coeffs.len().max(b.coeffs.len());
    IntPolynomial::from_coeffs(
        (0..n)
            .map(|i| f(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        zip_coeffs(self, rhs, |a, b| a + b)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        zip_coeffs(self, rhs, |a, b| a - b)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}

/// Serialized as the list of coefficients in decimal, lowest degree first.
impl serde::Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                _ => write!(f, "{abs}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p(&[1, 2]).reverse(2).unwrap(), p(&[0, 2, 1]));
        assert!(p(&[1, 2, 3]).reverse(1).is_err());
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 9, 3]).to_string(), "1 + 9x + 3x^2");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "-x + 2x^3");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-3, 1]).to_string(), "-3 + x");
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn sign_at_rational() {
        let q = p(&[-1, 0, 2]); // 2x^2 - 1
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(q.sign_at(&half), Ordering::Less);
        let one = BigRational::from_integer(1.into());
        assert_eq!(q.sign_at(&one), Ordering::Greater);
        let neg = BigRational::new((-3).into(), 4.into());
        assert_eq!(q.sign_at(&neg), Ordering::Greater);
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]);
        let b = p(&[-2, 3]);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(p(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn gcd_finds_common_factor() {
        let f = p(&[1, 1]);
        let g = p(&[-2, 3]);
        let h = p(&[5, 0, 1]);
        let a = &(&f * &g) * &p(&[6]);
        let b = &(&f * &h) * &p(&[4]);
        assert_eq!(a.gcd(&b), p(&[2, 2]));
    }

    #[test]
    fn yun_multiplicities() {
        let f = p(&[1, 1]);
        let g = p(&[-2, 3]);
        let h = p(&[5, 0, 1]);
        let prod = &(&f * &g.pow(2)) * &h.pow(3);
        let dec = prod.scale(&BigInt::from(-6)).squarefree_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], f);
        assert_eq!(dec[1], g);
        assert_eq!(dec[2], h);
    }

    #[test]
    fn yun_skips_missing_multiplicity() {
        let f = p(&[1, 1]);
        let g = p(&[0, 1]);
        let prod = &f * &g.pow(3);
        let dec = prod.squarefree_decomposition();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec[0], f);
        assert_eq!(dec[1], p(&[1]));
        assert_eq!(dec[2], g);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn reverse_is_involution(a in small_poly(), extra in 0usize..3) {
            let n = a.degree().unwrap_or(0) + extra;
            prop_assert_eq!(a.reverse(n).unwrap().reverse(n).unwrap(), a);
        }

        #[test]
        fn multiplication_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn eval_is_ring_homomorphism(a in small_poly(), b in small_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn pseudo_remainder_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (r, s) = a.pseudo_rem(&b);
            let scaled = a.scale(&b.leading_coeff().pow(s as u32));
            let diff = &scaled - &r;
            prop_assert!(r.degree() < b.degree() || r.is_zero());
            prop_assert!(diff.div_exact(&b).is_some());
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let ac = &a * &c;
            let bc = &b * &c;
            let g = ac.gcd(&bc);
            prop_assert!(ac.div_exact(&g).is_some());
            prop_assert!(bc.div_exact(&g).is_some());
            prop_assert!(g.degree() >= c.degree());
        }
    }
}
