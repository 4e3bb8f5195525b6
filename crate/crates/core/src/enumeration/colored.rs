use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::{check_cap, multipointed_masks, next_submask, Family, OrderedPartitionMasks};
use crate::error::Result;
use crate::numbers::low_bits;

/// Outcome of running an explicit map from multi-pointed partitions to
/// ordered partitions and comparing its image with the target family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionCheck {
    pub n: usize,
    pub k: usize,
    pub sources: usize,
    pub targets: usize,
    pub injective: bool,
    pub holds: bool,
}

/// `(C_1, ..., C_r, B_1 ∖ C_1, ..., B_r ∖ C_r)` followed by the unused
/// elements as a final block when there are any.
fn split_blocks(all: u64, blocks: &[u64], chosen: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> = chosen.to_vec();
    out.extend(blocks.iter().zip(chosen).map(|(b, c)| b & !c));
    let used = blocks.iter().fold(0, |a, b| a | b);
    if all & !used != 0 {
        out.push(all & !used);
    }
    out
}

fn half_union(p: &[u64]) -> u32 {
    p[..p.len() / 2].iter().fold(0u64, |a, b| a | b).count_ones()
}

fn check(n: usize, k: usize, family: Family, even_only: bool, cap: usize) -> Result<BijectionCheck> {
    check_cap("bijection check size", n, cap)?;
    let all = low_bits(n);
    let mut sources = 0;
    let mut image = HashSet::new();
    for (blocks, chosen) in multipointed_masks(n, family, cap)? {
        let w: u32 = chosen.iter().map(|c| c.count_ones()).sum();
        if w as usize != k {
            continue;
        }
        sources += 1;
        image.insert(split_blocks(all, &blocks, &chosen));
    }
    let targets: HashSet<Vec<u64>> = OrderedPartitionMasks::new(all)
        .filter(|p| (!even_only || p.len() % 2 == 0) && half_union(p) as usize == k)
        .collect();
    let injective = image.len() == sources;
    Ok(BijectionCheck {
        n,
        k,
        sources,
        targets: targets.len(),
        injective,
        holds: injective && image == targets,
    })
}

/// Proper multi-pointed partial partitions of weight `k` against ordered
/// partitions `(B_1, ..., B_m)` of `[n]` whose first `⌊m/2⌋` blocks cover
/// exactly `k` elements.
pub fn bijection_check_halfblocks(n: usize, k: usize, cap: usize) -> Result<BijectionCheck> {
    check(n, k, Family::PROPER_PARTIAL, false, cap)
}

/// Proper multi-pointed partitions of `[n]` of weight `k` against ordered
/// partitions with an even number of blocks whose first half covers `k`
/// elements.
pub fn bijection_check_evenblocks(n: usize, k: usize, cap: usize) -> Result<BijectionCheck> {
    check(n, k, Family::PROPER, true, cap)
}

fn monochromatic(block: u64, black: u64) -> bool {
    block & black == 0 || block & !black == 0
}

/// Ordered partitions of `[n]` with a black/white coloring, no
/// monochromatic block, and some black element of the last block larger
/// than some white element of it; counted by number of black elements.
pub fn theta_colored_counts(n: usize, cap: usize) -> Result<Vec<BigUint>> {
    check_cap("colored partition size", n, cap)?;
    let all = low_bits(n);
    let mut counts = vec![0u64; n + 1];
    for p in OrderedPartitionMasks::new(all) {
        let Some(&last) = p.last() else { continue };
        let mut black = 0u64;
        loop {
            if p.iter().all(|&b| !monochromatic(b, black)) {
                let b_in = last & black;
                let w_in = last & !black;
                // Highest black bit above lowest white bit.
                if b_in != 0 && w_in != 0 && (63 - b_in.leading_zeros()) > w_in.trailing_zeros() {
                    counts[black.count_ones() as usize] += 1;
                }
            }
            black = next_submask(black, all);
            if black == 0 {
                break;
            }
        }
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// For fixed `k`, counts by `j` the choices of `[k] ⊆ S ⊆ [n]`, an ordered
/// partition of `S` and a coloring of `S` with `j` black elements in which
/// the only block allowed to be monochromatic is a first block contained in
/// `[k]` and colored entirely black.
pub fn transform_colored_counts(n: usize, k: usize, cap: usize) -> Result<Vec<BigUint>> {
    check_cap("colored partition size", n, cap)?;
    let all = low_bits(n);
    let fixed = low_bits(k.min(n));
    let mut counts = vec![0u64; n + 1];
    let mut extra = 0u64;
    loop {
        let s = fixed | extra;
        for p in OrderedPartitionMasks::new(s) {
            let mut black = 0u64;
            loop {
                let ok = p
                    .iter()
                    .enumerate()
                    .all(|(i, &b)| !monochromatic(b, black) || (i == 0 && b & !fixed == 0 && b & !black == 0));
                if ok {
                    counts[black.count_ones() as usize] += 1;
                }
                black = next_submask(black, s);
                if black == 0 {
                    break;
                }
            }
        }
        extra = next_submask(extra, all & !fixed);
        if extra == 0 {
            break;
        }
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn halfblock_examples() {
        let c = bijection_check_halfblocks(3, 1, 8).unwrap();
        assert!(c.holds);
        assert_eq!((c.sources, c.targets), (9, 9));
        let c = bijection_check_halfblocks(4, 3, 8).unwrap();
        assert!(c.holds);
        assert_eq!((c.sources, c.targets), (4, 4));
        for n in 0..=5 {
            let c = bijection_check_halfblocks(n, 0, 8).unwrap();
            assert!(c.holds);
            assert_eq!((c.sources, c.targets), (1, 1));
        }
    }

    #[test]
    fn halfblock_bijection_all_small() {
        for n in 0..=5 {
            for k in 0..=n {
                assert!(bijection_check_halfblocks(n, k, 8).unwrap().holds, "n={n} k={k}");
                assert!(bijection_check_evenblocks(n, k, 8).unwrap().holds, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn theta_counts_small() {
        assert_eq!(theta_colored_counts(2, 8).unwrap(), u(&[0, 1, 0]));
        assert_eq!(theta_colored_counts(3, 8).unwrap(), u(&[0, 2, 2, 0]));
    }

    #[test]
    fn transform_counts_small() {
        assert_eq!(transform_colored_counts(2, 0, 8).unwrap(), u(&[1, 2, 0]));
        assert_eq!(transform_colored_counts(2, 1, 8).unwrap(), u(&[0, 3, 0]));
        assert_eq!(transform_colored_counts(2, 2, 8).unwrap(), u(&[0, 2, 1]));
    }
}
