use super::IntPolynomial;
use crate::error::{Error, Result};

/// The unique `p = a + x b` with `a` symmetric about `n/2` and `b` about
/// `(n-1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDecomposition {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub n: usize,
}

impl SymmetricDecomposition {
    pub fn is_nonnegative(&self) -> bool {
        self.a.is_nonnegative() && self.b.is_nonnegative()
    }
}

/// Computes `b = (p - x^n p(1/x)) / (x - 1)` and `a = p - x b`.
pub fn symmetric_decomposition(p: &IntPolynomial, n: usize) -> Result<SymmetricDecomposition> {
    let diff = p - &p.reverse(n)?;
    let b = diff
        .div_exact(&IntPolynomial::from_i64s(&[-1, 1]))
        .ok_or_else(|| Error::Internal("p - rev(p) not divisible by x - 1".into()))?;
    let a = p - &b.shift(1);
    debug_assert!(a.is_symmetric(n));
    debug_assert!(n == 0 || b.is_symmetric(n - 1));
    Ok(SymmetricDecomposition { a, b, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomials::families::{h_a, h_a_boundary, theta_a};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn linear_example() {
        let d = symmetric_decomposition(&p(&[1, 2]), 1).unwrap();
        assert_eq!(d.a, p(&[1, 1]));
        assert_eq!(d.b, p(&[1]));
        assert!(symmetric_decomposition(&p(&[1, 2, 3]), 1).is_err());
    }

    #[test]
    fn antiprism_split_is_boundary_plus_theta() {
        for n in 1..=12 {
            let d = symmetric_decomposition(&h_a(n), n - 1).unwrap();
            assert_eq!(d.a, h_a_boundary(n), "n = {n}");
            assert_eq!(d.b.shift(1), theta_a(n), "n = {n}");
            assert!(d.is_nonnegative());
        }
    }

    proptest! {
        #[test]
        fn decomposition_is_exact(c in prop::collection::vec(-30i64..30, 0..8), extra in 0usize..3) {
            let q = IntPolynomial::from_i64s(&c);
            let n = q.degree().unwrap_or(0) + extra;
            let d = symmetric_decomposition(&q, n).unwrap();
            prop_assert_eq!(&d.a + &d.b.shift(1), q);
            prop_assert!(d.a.is_symmetric(n));
            if n > 0 {
                prop_assert!(d.b.is_symmetric(n - 1));
            }
        }
    }
}
