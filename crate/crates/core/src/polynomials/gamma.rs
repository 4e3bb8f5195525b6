//! Closed expressions for `Γ_A(Δ)` when `Δ` triangulates `∂(2^V)` and its
//! restrictions to faces of the same size all look alike.

use serde::Serialize;

use super::IntPolynomial;
use crate::complex::{FVector, Face};
use crate::error::{Error, Result};
use crate::numbers::binomial_i;
use crate::subdivision::{antiprism_over, local_h, restriction, Subdivision};

const GAMMA_CAP: usize = 16;

/// Every expression for the invariants of `Γ_A(Δ)`, next to the values read
/// off the built complex.
#[derive(Clone, Debug, Serialize)]
pub struct GammaFormulas {
    pub n: usize,
    /// `h(Δ_F)` for `|F| = k`, `k < n`.
    pub restriction_h: Vec<IntPolynomial>,
    /// `ℓ_F(Δ_F)` for `|F| = k`, `k < n`.
    pub restriction_local_h: Vec<IntPolynomial>,
    /// `sum_k C(n,k) x^k h_k(1/x)`.
    pub h_from_h: IntPolynomial,
    /// `sum_k C(n,k) ℓ_k ((1+x)^(n-k) - x^(n-k))`.
    pub h_from_local: IntPolynomial,
    /// `sum_k C(n,k) ℓ_k ((1+x)^(n-k) - 1 - x^(n-k))`.
    pub local_h: IntPolynomial,
    /// `sum_k C(n,k) ℓ_k ((1+x)^(n-k) - 1 - x - ... - x^(n-k))`.
    pub interior_from_local: IntPolynomial,
    /// `sum_k C(n,k) h_k (x^(n-k) - x (x-1)^(n-k-1))`.
    pub interior_from_h: IntPolynomial,
    /// `sum_k C(n,k) ℓ_k (1 + x + ... + x^(n-k-1))`.
    pub boundary_from_local: IntPolynomial,
    /// `h(u ∗ Δ) = sum_k C(n,k) h_k (x-1)^(n-k-1)`.
    pub cone_from_h: IntPolynomial,
    /// `h(Γ_A(Δ))` of the constructed complex.
    pub h_direct: IntPolynomial,
    /// `ℓ_V(Γ_A(Δ))` of the constructed complex.
    pub local_h_direct: IntPolynomial,
    /// `h(Δ)`.
    pub boundary_direct: IntPolynomial,
    /// Names of the expressions that disagree with the direct values.
    pub mismatches: Vec<String>,
}

impl GammaFormulas {
    pub fn is_consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn subsets_of_size(base: &Face, k: usize) -> Vec<Face> {
    let n = base.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| {
            Face::new(
                base.vertices()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, v)| v.clone()),
            )
            .expect("subset of a face")
        })
        .collect()
}

/// Evaluates every expression for `Γ_A(bd)` and compares them with the
/// built complex. Fails if restrictions to faces of equal size differ.
pub fn gamma_a_formulas(bd: &Subdivision, base: &Face) -> Result<GammaFormulas> {
    let n = base.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty base simplex".into()));
    }
    if n > GAMMA_CAP {
        return Err(Error::Capacity {
            what: "antiprism formula base size",
            requested: n,
            limit: GAMMA_CAP,
        });
    }
    let mut hs = Vec::with_capacity(n);
    let mut ls = Vec::with_capacity(n);
    for k in 0..n {
        let faces = subsets_of_size(base, k);
        let mut first: Option<(FVector, &Face)> = None;
        for f in &faces {
            let fv = restriction(&bd.complex, &bd.carriers, f)?.f_vector();
            match &first {
                None => first = Some((fv, f)),
                Some((g, f0)) if *g != fv => {
                    return Err(Error::NonUniform(format!("restrictions to {f0} and {f} differ")))
                }
                _ => {}
            }
        }
        let f0 = first.expect("some subset of each size").1;
        let r = restriction(&bd.complex, &bd.carriers, f0)?;
        hs.push(h_with_rank(&r.f_vector(), k));
        ls.push(local_h(&bd.complex, &bd.carriers, f0)?);
    }

    let x = IntPolynomial::x();
    let x_minus_1 = IntPolynomial::from_i64s(&[-1, 1]);
    let one = IntPolynomial::one();
    let term = |k: usize, p: &IntPolynomial, w: IntPolynomial| (p * &w).scale(&binomial_i(n, k));
    let sum = |f: &dyn Fn(usize) -> IntPolynomial| -> IntPolynomial { (0..n).map(f).sum() };
    let xp = |m: usize| one.shift(m);

    let h_from_h = sum(&|k| term(k, &hs[k].reverse(k).expect("restriction of rank k"), one.clone()));
    let h_from_local = sum(&|k| term(k, &ls[k], &IntPolynomial::one_plus_x_pow(n - k) - &xp(n - k)));
    let local = sum(&|k| term(k, &ls[k], &(&IntPolynomial::one_plus_x_pow(n - k) - &one) - &xp(n - k)));
    let interior_from_local = sum(&|k| {
        term(
            k,
            &ls[k],
            &IntPolynomial::one_plus_x_pow(n - k) - &IntPolynomial::geometric(n - k + 1),
        )
    });
    let interior_from_h = sum(&|k| term(k, &hs[k], &xp(n - k) - &(&x * &x_minus_1.pow((n - k - 1) as u32))));
    let boundary_from_local = sum(&|k| term(k, &ls[k], IntPolynomial::geometric(n - k)));
    let cone_from_h = sum(&|k| term(k, &hs[k], x_minus_1.pow((n - k - 1) as u32)));

    let built = antiprism_over(bd, base)?;
    let h_direct = h_with_rank(&built.complex.f_vector(), n);
    let local_h_direct = built.local_h(base)?;
    let boundary_direct = h_with_rank(&bd.complex.f_vector(), n - 1);

    let interior_direct = &h_direct - &boundary_direct;
    let checks: [(&str, &IntPolynomial, &IntPolynomial); 7] = [
        ("h_from_h", &h_from_h, &h_direct),
        ("h_from_local", &h_from_local, &h_direct),
        ("local_h", &local, &local_h_direct),
        ("interior_from_local", &interior_from_local, &interior_direct),
        ("interior_from_h", &interior_from_h, &interior_direct),
        ("boundary_from_local", &boundary_from_local, &boundary_direct),
        ("cone_from_h", &cone_from_h, &boundary_direct),
    ];
    let mismatches = checks
        .iter()
        .filter(|(_, a, b)| a != b)
        .map(|(name, _, _)| name.to_string())
        .collect();

    Ok(GammaFormulas {
        n,
        restriction_h: hs,
        restriction_local_h: ls,
        h_from_h,
        h_from_local,
        local_h: local,
        interior_from_local,
        interior_from_h,
        boundary_from_local,
        cone_from_h,
        h_direct,
        local_h_direct,
        boundary_direct,
        mismatches,
    })
}

fn h_with_rank(f: &FVector, rank: usize) -> IntPolynomial {
    let f: Vec<_> = f.counts().iter().cloned().map(Into::into).collect();
    crate::complex::h_from_f(&f, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{face, SimplicialComplex};
    use crate::polynomials::families::{binomial_eulerian, ell_a, eulerian, h_a};
    use crate::subdivision::{antiprism_triangulation, barycentric, CarrierMap};

    fn base(n: usize) -> Face {
        face(&(1..=n as i64).collect::<Vec<_>>())
    }

    #[test]
    fn over_barycentric_boundary() {
        for n in 1..=5 {
            let bd = barycentric(&SimplicialComplex::simplex_boundary(n));
            let g = gamma_a_formulas(&bd, &base(n)).unwrap();
            assert!(g.is_consistent(), "n = {n}: {:?}", g.mismatches);
            let expected = &binomial_eulerian(n) - &eulerian(n).shift(1);
            assert_eq!(g.h_from_h, expected, "n = {n}");
        }
        let bd = barycentric(&SimplicialComplex::simplex_boundary(3));
        let g = gamma_a_formulas(&bd, &base(3)).unwrap();
        assert_eq!(g.h_direct, IntPolynomial::from_i64s(&[1, 6, 3]));
    }

    #[test]
    fn over_antiprism_boundary() {
        for n in 1..=5 {
            let bd = antiprism_triangulation(&SimplicialComplex::simplex_boundary(n));
            let g = gamma_a_formulas(&bd, &base(n)).unwrap();
            assert!(g.is_consistent(), "n = {n}: {:?}", g.mismatches);
            assert_eq!(g.h_direct, h_a(n));
            assert_eq!(g.local_h, ell_a(n));
        }
    }

    #[test]
    fn over_trivial_boundary() {
        for n in 1..=6 {
            let bd = Subdivision::trivial(&SimplicialComplex::simplex_boundary(n));
            let g = gamma_a_formulas(&bd, &base(n)).unwrap();
            assert!(g.is_consistent(), "n = {n}: {:?}", g.mismatches);
        }
    }

    #[test]
    fn non_uniform_is_rejected() {
        // Subdivide only the edge {1,2} of the triangle boundary.
        let c = SimplicialComplex::from_facets(vec![vec![1i64, 4], vec![4, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let mut cm = CarrierMap::identity(&c);
        cm.insert(4.into(), face(&[1, 2]));
        let bd = Subdivision {
            complex: c,
            carriers: cm,
        };
        assert!(matches!(gamma_a_formulas(&bd, &base(3)), Err(Error::NonUniform(_))));
    }
}
