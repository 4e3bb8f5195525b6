#![allow(dead_code)]

use antiprism_core::complex::DEFAULT_SHELL_CAP;
use antiprism_core::SimplicialComplex;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_a171;

pub fn rng(offset: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED.wrapping_add(offset))
}

/// Grows a pure `dim`-complex one facet at a time, each new facet sharing a
/// ridge with an old one, and keeps a facet only if the result stays
/// shellable.
pub fn random_shellable(rng: &mut ChaCha8Rng, dim: usize, max_facets: usize) -> SimplicialComplex {
    let mut facets: Vec<Vec<i64>> = vec![(1..=dim as i64 + 1).collect()];
    let mut next = dim as i64 + 2;
    let target = rng.random_range(1..=max_facets);
    let mut attempts = 0;
    while facets.len() < target && attempts < 200 {
        attempts += 1;
        let g = facets.choose(rng).expect("nonempty").clone();
        let drop = rng.random_range(0..g.len());
        let fresh = rng.random_bool(0.5);
        let w = if fresh {
            next
        } else {
            let pool: Vec<i64> = (1..next).filter(|v| !g.contains(v)).collect();
            match pool.choose(rng) {
                Some(&v) => v,
                None => continue,
            }
        };
        let mut f: Vec<i64> = g
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, &v)| v)
            .collect();
        f.push(w);
        f.sort_unstable();
        if facets.contains(&f) {
            continue;
        }
        let mut candidate = facets.clone();
        candidate.push(f);
        let c = SimplicialComplex::from_facets(candidate.clone()).expect("valid facets");
        if matches!(c.is_shellable(DEFAULT_SHELL_CAP), Ok(Some(_))) {
            facets = candidate;
            if fresh {
                next += 1;
            }
        }
    }
    SimplicialComplex::from_facets(facets).expect("valid facets")
}

/// Arbitrary, not necessarily pure, complex on `1..=nv` with faces of size
/// at most `max_size`.
pub fn random_complex(rng: &mut ChaCha8Rng, nv: i64, max_size: usize, facets: usize) -> SimplicialComplex {
    let sets: Vec<Vec<i64>> = (0..facets)
        .map(|_| {
            let size = rng.random_range(1..=max_size);
            let mut pool: Vec<i64> = (1..=nv).collect();
            let mut f = Vec::with_capacity(size);
            for _ in 0..size {
                let i = rng.random_range(0..pool.len());
                f.push(pool.swap_remove(i));
            }
            f
        })
        .collect();
    SimplicialComplex::from_facets(sets).expect("valid facets")
}
