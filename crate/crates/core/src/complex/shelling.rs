use std::collections::HashSet;

use super::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Default bound on the number of facets accepted by the shelling search.
pub const DEFAULT_SHELL_CAP: usize = 12;

impl SimplicialComplex {
    /// Searches for a shelling order of a pure complex.
    ///
    /// Returns `Some(order)` for a shellable complex and `None` once every
    /// ordering has been ruled out. More than `facet_cap` facets is a
    /// capacity error rather than a verdict.
    pub fn is_shellable(&self, facet_cap: usize) -> Result<Option<Vec<Face>>> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let m = self.facets.len();
        if m > facet_cap || m > 63 {
            return Err(Error::Capacity {
                what: "facets for shelling search",
                requested: m,
                limit: facet_cap.min(63),
            });
        }
        if m == 0 {
            return Ok(Some(Vec::new()));
        }
        let mut search = Search {
            facets: &self.facets,
            dead: HashSet::new(),
            order: Vec::with_capacity(m),
        };
        if search.extend(0) {
            Ok(Some(
                search.order.iter().map(|&i| self.face_of(&self.facets[i])).collect(),
            ))
        } else {
            Ok(None)
        }
    }
}

struct Search<'a> {
    facets: &'a [Vec<u32>],
    dead: HashSet<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// Whether the placed set can be completed; `placed` determines the
    /// future, so failures are memoized by it alone.
    fn extend(&mut self, placed: u64) -> bool {
        if self.order.len() == self.facets.len() {
            return true;
        }
        if self.dead.contains(&placed) {
            return false;
        }
        for j in 0..self.facets.len() {
            if placed >> j & 1 == 1 || !self.attaches(placed, j) {
                continue;
            }
            self.order.push(j);
            if self.extend(placed | 1 << j) {
                return true;
            }
            self.order.pop();
        }
        self.dead.insert(placed);
        false
    }

    /// The faces of facet `j` not already covered must have a unique minimal
    /// element.
    fn attaches(&self, placed: u64, j: usize) -> bool {
        let g = &self.facets[j];
        let overlaps: Vec<u64> = (0..self.facets.len())
            .filter(|&i| placed >> i & 1 == 1)
            .map(|i| {
                g.iter()
                    .enumerate()
                    .filter(|(_, v)| self.facets[i].contains(v))
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        let is_new = |s: u64| overlaps.iter().all(|&o| s & !o != 0);
        let full = (1u64 << g.len()) - 1;
        let mut minimal = None;
        for s in 0..=full {
            if !is_new(s) {
                continue;
            }
            let has_new_proper_subset = (0..g.len()).filter(|&k| s >> k & 1 == 1).any(|k| is_new(s & !(1 << k)));
            if !has_new_proper_subset {
                if minimal.is_some() {
                    return false;
                }
                minimal = Some(s);
            }
        }
        minimal.is_some()
    }
}
