//! Brute-force combinatorial oracles.
//!
//! Everything here is computed by listing objects, never by a formula, so
//! it can serve as ground truth for the recurrences. Sets are handled as
//! bit masks over `[n] = {1, ..., n}`, bit `i - 1` standing for `i`.

mod colored;
mod counts;
mod permutations;

use crate::error::{Error, Result};
use crate::numbers::low_bits;

pub use colored::{
    bijection_check_evenblocks, bijection_check_halfblocks, theta_colored_counts, transform_colored_counts,
    BijectionCheck,
};
pub use counts::{
    multipointed_full, multipointed_full_counts, multipointed_partial, multipointed_partial_counts,
    proper_multipointed, proper_multipointed_counts, proper_partial_counts, Counts, Provenance,
};
pub use permutations::{
    c_recurrence, count_derangement_exc, count_exc_prefix, excedance_prefix_counts, excedance_set, fubini, stirling2,
    stirling2_rows, ExcedanceCounts,
};

/// Default bound for streaming ordered partitions.
pub const DEFAULT_STREAM_CAP: usize = 12;
/// Default bound for counts computed by listing every object.
pub const DEFAULT_ENUM_CAP: usize = 8;

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap || n > 63 {
        Err(Error::Capacity {
            what,
            requested: n,
            limit: cap.min(63),
        })
    } else {
        Ok(())
    }
}

pub(crate) fn mask_elems(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Next nonempty submask of `set` after `sub` in increasing numeric order,
/// or 0 after the last one.
#[inline]
pub(crate) fn next_submask(sub: u64, set: u64) -> u64 {
    (sub | !set).wrapping_add(1) & set
}

/// Ordered set partitions of a bit set, as block masks.
///
/// Blocks are chosen in increasing numeric order of their masks, so the
/// first partition produced is the one into singletons in increasing order.
pub struct OrderedPartitionMasks {
    stack: Vec<(u64, u64)>,
    pending: bool,
}

impl OrderedPartitionMasks {
    pub fn new(set: u64) -> Self {
        let mut it = OrderedPartitionMasks {
            stack: Vec::new(),
            pending: true,
        };
        it.fill(set);
        it
    }

    fn fill(&mut self, mut rest: u64) {
        while rest != 0 {
            let block = next_submask(0, rest);
            self.stack.push((rest, block));
            rest &= !block;
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((rest, block)) = self.stack.pop() {
            let next = next_submask(block, rest);
            if next != 0 {
                self.stack.push((rest, next));
                self.fill(rest & !next);
                return true;
            }
        }
        false
    }
}

impl Iterator for OrderedPartitionMasks {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if !self.pending && (self.stack.is_empty() || !self.advance()) {
            self.stack.clear();
            return None;
        }
        self.pending = false;
        Some(self.stack.iter().map(|&(_, b)| b).collect())
    }
}

/// A sequence of nonempty, pairwise disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition<T> {
    blocks: Vec<Vec<T>>,
}

impl<T: Ord + Clone> OrderedSetPartition<T> {
    pub fn new(blocks: Vec<Vec<T>>) -> Result<Self> {
        let mut blocks = blocks;
        let mut seen: Vec<&T> = Vec::new();
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block in ordered partition".into()));
            }
            b.sort();
        }
        for b in &blocks {
            seen.extend(b.iter());
        }
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("blocks of an ordered partition overlap".into()));
        }
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<T>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The underlying set, sorted.
    pub fn ground_set(&self) -> Vec<T> {
        let mut all: Vec<T> = self.blocks.iter().flatten().cloned().collect();
        all.sort();
        all
    }
}

/// An ordered partition `π = (B_1, ..., B_m)` together with chosen subsets
/// `∅ ≠ C_i ⊆ B_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPointedOrderedPartition<T> {
    pi: OrderedSetPartition<T>,
    tau: Vec<Vec<T>>,
}

impl<T: Ord + Clone> MultiPointedOrderedPartition<T> {
    pub fn new(pi: OrderedSetPartition<T>, tau: Vec<Vec<T>>) -> Result<Self> {
        if pi.num_blocks() != tau.len() {
            return Err(Error::LengthMismatch {
                expected: pi.num_blocks(),
                got: tau.len(),
            });
        }
        let mut tau = tau;
        for (b, c) in pi.blocks.iter().zip(tau.iter_mut()) {
            c.sort();
            c.dedup();
            if c.is_empty() || c.iter().any(|x| b.binary_search(x).is_err()) {
                return Err(Error::InvalidArgument(
                    "chosen set must be a nonempty subset of its block".into(),
                ));
            }
        }
        Ok(MultiPointedOrderedPartition { pi, tau })
    }

    pub fn pi(&self) -> &OrderedSetPartition<T> {
        &self.pi
    }

    pub fn tau(&self) -> &[Vec<T>] {
        &self.tau
    }

    /// Total number of chosen elements.
    pub fn weight(&self) -> usize {
        self.tau.iter().map(Vec::len).sum()
    }

    /// Every chosen set is a proper subset of its block.
    pub fn is_proper(&self) -> bool {
        self.pi.blocks.iter().zip(&self.tau).all(|(b, c)| c.len() < b.len())
    }
}

/// Every ordered set partition of `set` (distinct elements), lazily.
pub fn ordered_partitions<T: Ord + Clone>(
    set: &[T],
    cap: usize,
) -> Result<impl Iterator<Item = OrderedSetPartition<T>>> {
    check_cap("ordered partition ground set", set.len(), cap)?;
    let mut sorted = set.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Malformed("repeated element in ground set".into()));
    }
    Ok(
        OrderedPartitionMasks::new(low_bits(sorted.len())).map(move |blocks| OrderedSetPartition {
            blocks: blocks
                .into_iter()
                .map(|b| mask_elems(b).into_iter().map(|i| sorted[i - 1].clone()).collect())
                .collect(),
        }),
    )
}

/// Which family of multi-pointed ordered partitions of `[n]` to list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    /// Partitions of arbitrary subsets of `[n]` rather than of `[n]` itself.
    pub partial: bool,
    /// Every chosen set is a proper subset of its block.
    pub proper: bool,
}

impl Family {
    pub const FULL: Family = Family {
        partial: false,
        proper: false,
    };
    pub const PARTIAL: Family = Family {
        partial: true,
        proper: false,
    };
    pub const PROPER: Family = Family {
        partial: false,
        proper: true,
    };
    pub const PROPER_PARTIAL: Family = Family {
        partial: true,
        proper: true,
    };
}

/// Lists the multi-pointed ordered partitions of `[n]` in a family, as
/// pairs of block masks and chosen-set masks.
pub fn multipointed_masks(n: usize, family: Family, cap: usize) -> Result<impl Iterator<Item = (Vec<u64>, Vec<u64>)>> {
    check_cap("multi-pointed partition ground set", n, cap)?;
    let all = low_bits(n);
    let grounds: Vec<u64> = if family.partial { (0..=all).collect() } else { vec![all] };
    Ok(grounds
        .into_iter()
        .flat_map(move |s| OrderedPartitionMasks::new(s).flat_map(move |blocks| Choices::new(blocks, family.proper))))
}

/// Multi-pointed ordered partitions of an arbitrary bit set.
pub(crate) fn multipointed_masks_of(set: u64, proper: bool) -> impl Iterator<Item = (Vec<u64>, Vec<u64>)> {
    OrderedPartitionMasks::new(set).flat_map(move |blocks| Choices::new(blocks, proper))
}

/// The same stream as [`multipointed_masks`], with element labels `1..=n`.
pub fn multipointed_partitions(
    n: usize,
    family: Family,
    cap: usize,
) -> Result<impl Iterator<Item = MultiPointedOrderedPartition<usize>>> {
    Ok(
        multipointed_masks(n, family, cap)?.map(|(blocks, chosen)| MultiPointedOrderedPartition {
            pi: OrderedSetPartition {
                blocks: blocks.iter().map(|&b| mask_elems(b)).collect(),
            },
            tau: chosen.iter().map(|&c| mask_elems(c)).collect(),
        }),
    )
}

/// Odometer over the chosen subsets of a fixed block sequence.
struct Choices {
    blocks: Vec<u64>,
    chosen: Vec<u64>,
    proper: bool,
    done: bool,
}

impl Choices {
    fn new(blocks: Vec<u64>, proper: bool) -> Self {
        let chosen: Vec<u64> = blocks.iter().map(|&b| next_submask(0, b)).collect();
        let done = proper && blocks.iter().any(|b| b.count_ones() < 2);
        Choices {
            blocks,
            chosen,
            proper,
            done,
        }
    }

    fn step(&mut self) -> bool {
        for i in (0..self.blocks.len()).rev() {
            let mut next = next_submask(self.chosen[i], self.blocks[i]);
            if self.proper && next == self.blocks[i] {
                next = 0;
            }
            if next != 0 {
                self.chosen[i] = next;
                return true;
            }
            self.chosen[i] = next_submask(0, self.blocks[i]);
        }
        false
    }
}

impl Iterator for Choices {
    type Item = (Vec<u64>, Vec<u64>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = (self.blocks.clone(), self.chosen.clone());
        self.done = !self.step();
        Some(item)
    }
}
