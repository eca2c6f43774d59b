//! Exhaustive minimum bin count for small instances.
//!
//! Bins are built one at a time: the search either puts an item of a color
//! different from the top onto the open bin, or closes it and opens a new
//! bin. Every packing can be produced that way, so the search is exact.
//! Colors are interchangeable except for their remaining count and whether
//! they are on top of the open bin, which gives the canonical state key used
//! both to skip symmetric branches and as a transposition table.

use std::collections::HashMap;

use crate::error::OracleError;
use crate::model::Instance;
use crate::solve;
use crate::validate::validate_packing;

pub const DEFAULT_ITEM_LIMIT: usize = 12;

/// Minimum number of bins over all valid packings.
///
/// The bound starts at the size of the solver's packing when that packing
/// validates, and at `n` otherwise.
pub fn optimal_bins(instance: &Instance, item_limit: usize) -> Result<usize, OracleError> {
    check_limit(instance, item_limit)?;
    let seed = solve(instance)
        .ok()
        .filter(|p| validate_packing(instance, p).is_valid())
        .map(|p| p.bin_count());
    Ok(search_minimum(instance, seed))
}

/// Same search without any solver input. `upper_bound` is a bin count known
/// to be achievable; pass `None` to start from one bin per item.
pub fn optimal_bins_unseeded(instance: &Instance, item_limit: usize) -> Result<usize, OracleError> {
    check_limit(instance, item_limit)?;
    Ok(search_minimum(instance, None))
}

fn check_limit(instance: &Instance, item_limit: usize) -> Result<(), OracleError> {
    if instance.len() > item_limit {
        return Err(OracleError::LimitExceeded {
            items: instance.len(),
            limit: item_limit,
        });
    }
    Ok(())
}

fn search_minimum(instance: &Instance, upper_bound: Option<usize>) -> usize {
    let n = instance.len();
    if n == 0 {
        return 0;
    }
    let mut search = Search {
        limit: instance.effective_limit(),
        counts: instance
            .counts()
            .iter()
            .copied()
            .filter(|&c| c > 0)
            .collect(),
        best: upper_bound.unwrap_or(n).min(n),
        seen: HashMap::new(),
    };
    search.descend(None, 0, 0, n);
    search.best
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct StateKey {
    top_count: Option<usize>,
    others: Vec<usize>,
    free: usize,
}

struct Search {
    limit: usize,
    counts: Vec<usize>,
    best: usize,
    seen: HashMap<StateKey, usize>,
}

impl Search {
    fn key(&self, top: Option<usize>, free: usize) -> StateKey {
        // A closed bin and a full bin are the same state.
        let top = if free == 0 { None } else { top };
        let mut others: Vec<usize> = self
            .counts
            .iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != top)
            .map(|(_, &c)| c)
            .collect();
        others.sort_unstable();
        StateKey {
            top_count: top.map(|t| self.counts[t]),
            others,
            free,
        }
    }

    fn lower_bound(&self, free: usize, remaining: usize) -> usize {
        let by_weight = remaining.saturating_sub(free).div_ceil(self.limit);
        if free > 0 {
            return by_weight;
        }
        // Every new bin holds at most one more item of a color than of the rest.
        let max = self.counts.iter().copied().max().unwrap_or(0);
        let disc = (2 * max).saturating_sub(remaining);
        by_weight.max(disc)
    }

    fn descend(&mut self, top: Option<usize>, free: usize, used: usize, remaining: usize) {
        if remaining == 0 {
            self.best = self.best.min(used);
            return;
        }
        if used + self.lower_bound(free, remaining) >= self.best {
            return;
        }
        let key = self.key(top, free);
        match self.seen.get(&key) {
            Some(&prev) if prev <= used => return,
            _ => {
                self.seen.insert(key, used);
            }
        }

        // Extend the open bin. Colors other than the top with equal counts
        // are symmetric, so only the first of each count is tried.
        if free > 0 {
            let mut tried: Vec<usize> = Vec::new();
            for c in 0..self.counts.len() {
                let count = self.counts[c];
                if count == 0 || Some(c) == top || tried.contains(&count) {
                    continue;
                }
                tried.push(count);
                self.counts[c] -= 1;
                self.descend(Some(c), free - 1, used, remaining - 1);
                self.counts[c] += 1;
            }
        }

        // Close it and open a new bin; every color is symmetric here.
        let mut tried: Vec<usize> = Vec::new();
        for c in 0..self.counts.len() {
            let count = self.counts[c];
            if count == 0 || tried.contains(&count) {
                continue;
            }
            tried.push(count);
            self.counts[c] -= 1;
            self.descend(Some(c), self.limit - 1, used + 1, remaining - 1);
            self.counts[c] += 1;
        }
    }
}
