mod common;

use antiprism_core::complex::h_from_f;
use antiprism_core::enumeration::{
    bijection_check_halfblocks, c_recurrence, excedance_prefix_counts, multipointed_full_counts,
    multipointed_partial_counts, proper_multipointed_counts, proper_partial_counts, Provenance, DEFAULT_ENUM_CAP,
};
use antiprism_core::polynomials::families::{bar_polys, ell_a, h_a, h_a_boundary, q_a};
use antiprism_core::polynomials::{f_transform, h_transform, TransformTable};
use antiprism_core::subdivision::{
    antiprism_by_crossings, antiprism_from_partitions, antiprism_sphere, antiprism_triangulation, contract_interior,
};
use antiprism_core::{IntPolynomial, SimplicialComplex};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn as_poly(v: &[BigUint]) -> IntPolynomial {
    IntPolynomial::from_coeffs(v.iter().cloned().map(BigInt::from).collect())
}

fn h_of(c: &SimplicialComplex) -> Vec<BigInt> {
    let f: Vec<BigInt> = c.f_vector().counts().iter().cloned().map(BigInt::from).collect();
    h_from_f(&f, c.rank()).padded(c.rank())
}

#[test]
fn enumeration_matches_formulas() {
    for n in 0..=6 {
        let proper_partial = proper_partial_counts(n, DEFAULT_ENUM_CAP);
        assert_eq!(proper_partial.provenance, Provenance::Enumerated);
        assert_eq!(as_poly(&proper_partial.values), h_a(n), "h n = {n}");
        assert_eq!(
            as_poly(&proper_multipointed_counts(n, DEFAULT_ENUM_CAP).values),
            ell_a(n),
            "ell n = {n}"
        );
        let full = multipointed_full_counts(n, DEFAULT_ENUM_CAP);
        for k in 0..=n {
            assert_eq!(full.get(k), q_a(n, k), "q n = {n} k = {k}");
        }
    }
}

#[test]
fn excedance_counts_match_recurrence() {
    let rec = c_recurrence(7);
    for n in 1..=7 {
        let exc = excedance_prefix_counts(n, DEFAULT_ENUM_CAP).unwrap();
        let (pbar, lbar) = bar_polys(n).unwrap();
        assert_eq!(as_poly(&exc.c), pbar, "n = {n}");
        assert_eq!(as_poly(&rec[n]), pbar, "n = {n}");
        assert_eq!(as_poly(&exc.d), lbar, "n = {n}");
    }
}

#[test]
fn colored_partition_bijection() {
    for n in 1..=5 {
        for k in 0..=n {
            let b = bijection_check_halfblocks(n, k, DEFAULT_ENUM_CAP).unwrap();
            assert!(b.holds, "{b:?}");
        }
    }
}

#[test]
fn face_counts_of_simplex_subdivision() {
    // Faces of sd_A(σ_n) are the multi-pointed partial ordered partitions.
    for n in 1..=5 {
        let sd = antiprism_triangulation(&SimplicialComplex::simplex(n));
        let f = sd.complex.f_vector();
        let counts = multipointed_partial_counts(n, DEFAULT_ENUM_CAP);
        let total: BigUint = counts.values.iter().sum();
        let faces: BigUint = f.counts().iter().sum();
        assert_eq!(faces, total, "n = {n}");
    }
}

#[test]
fn three_constructions_agree_on_random_complexes() {
    let mut rng = common::rng(1);
    for _ in 0..10 {
        let c = common::random_complex(&mut rng, 6, 3, 5);
        let cliques = antiprism_triangulation(&c).complex;
        assert_eq!(antiprism_from_partitions(&c).unwrap(), cliques, "{}", c.to_facet_list());
        assert_eq!(antiprism_by_crossings(&c).unwrap(), cliques, "{}", c.to_facet_list());
    }
}

#[test]
fn transforms_agree_on_random_shellable_complexes() {
    let mut rng = common::rng(2);
    let table = TransformTable::new(4);
    let mut nontrivial = 0;
    for i in 0..10 {
        let dim = 1 + i % 3;
        let c = common::random_shellable(&mut rng, dim, 5);
        assert!(matches!(c.is_shellable(12), Ok(Some(_))));
        if c.facet_count() > 1 {
            nontrivial += 1;
        }
        let n = c.rank();
        let sd = antiprism_triangulation(&c).complex;
        assert_eq!(
            table.h_transform(&h_of(&c), n).unwrap(),
            h_of(&sd),
            "{}",
            c.to_facet_list()
        );
        let f = c.f_vector().counts().to_vec();
        assert_eq!(
            table.f_transform(&f, n).unwrap(),
            sd.f_vector().counts().to_vec(),
            "{}",
            c.to_facet_list()
        );
    }
    assert!(nontrivial >= 5);
}

#[test]
fn boundary_and_sphere_h() {
    for n in 2..=5 {
        let bd = antiprism_triangulation(&SimplicialComplex::simplex_boundary(n)).complex;
        assert_eq!(bd.h_polynomial(), h_a_boundary(n), "n = {n}");
    }
    for n in 1..=4 {
        let sd = antiprism_triangulation(&SimplicialComplex::simplex(n));
        let base = antiprism_core::face(&(1..=n as i64).collect::<Vec<_>>());
        let sphere = antiprism_sphere(&sd, &base).unwrap();
        let h = h_a(n);
        assert_eq!(sphere.h_polynomial(), &h + &h.reverse(n).unwrap(), "n = {n}");
    }
}

#[test]
fn contraction_sequence() {
    for n in 2..=4 {
        let sd = antiprism_triangulation(&SimplicialComplex::simplex(n));
        assert!(contract_interior(&sd.complex).unwrap().all_hold(), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn h_transform_matches_construction(seed in any::<u64>(), dim in 0usize..3) {
        let mut rng = common::rng(seed);
        let c = common::random_shellable(&mut rng, dim, 4);
        let n = c.rank();
        let sd = antiprism_triangulation(&c).complex;
        prop_assert_eq!(h_transform(&h_of(&c), n).unwrap(), h_of(&sd));
        prop_assert_eq!(f_transform(c.f_vector().counts(), n).unwrap(), sd.f_vector().counts().to_vec());
    }

    #[test]
    fn sd_preserves_euler_characteristic(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = common::random_complex(&mut rng, 5, 3, 4);
        let sd = antiprism_triangulation(&c).complex;
        prop_assert_eq!(sd.f_vector().euler_characteristic(), c.f_vector().euler_characteristic());
    }
}
