//! Optimal packing when items weigh nothing.
//!
//! With discrepancy `D <= 0` every item fits in one bin. Other colors are
//! first alternated among themselves until exactly `MaxCount - 1` of them
//! remain, then MaxColor and other items alternate, starting and ending with
//! MaxColor. With `D > 0` one bin takes every other item between `OtherCount
//! + 1` MaxColor items and the leftover MaxColor items go one per bin, for
//! `D` bins in total.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::SolveError;
use crate::model::{Bin, ColorId, Instance, InstanceStats, Packing, WeightMode};

/// Orders a multiset (per-color counts indexed by id) into one sequence with
/// no two equal neighbours.
///
/// The first phase repeatedly takes the other color with the most items
/// left that differs from the previous item, lower ids winning ties. The
/// second phase consumes other colors in id order.
pub fn zero_sequence(counts: &[usize]) -> Result<Vec<ColorId>, SolveError> {
    let Some(stats) = InstanceStats::of_counts(counts) else {
        return Ok(Vec::new());
    };
    if stats.discrepancy > 0 {
        return Err(SolveError::InfeasibleSequence {
            discrepancy: stats.discrepancy,
        });
    }
    let max = stats.max_color;
    let mut remaining = counts.to_vec();
    let mut seq = Vec::with_capacity(stats.max_count + stats.other_count);

    // Phase 1: other colors only, until MaxCount - 1 of them remain.
    let mut others_left = stats.other_count;
    let target = stats.max_count - 1;
    let mut heap: BinaryHeap<(usize, Reverse<ColorId>)> = remaining
        .iter()
        .enumerate()
        .filter(|&(i, &c)| i != max.index() && c > 0)
        .map(|(i, &c)| (c, Reverse(ColorId::from_index(i))))
        .collect();
    let mut top: Option<ColorId> = None;
    while others_left > target {
        let first = heap.pop().ok_or(SolveError::Stuck {
            remaining: others_left,
        })?;
        let (count, Reverse(color)) = if Some(first.1 .0) == top {
            let second = heap.pop().ok_or(SolveError::Stuck {
                remaining: others_left,
            })?;
            heap.push(first);
            second
        } else {
            first
        };
        seq.push(color);
        remaining[color.index()] -= 1;
        others_left -= 1;
        if count > 1 {
            heap.push((count - 1, Reverse(color)));
        }
        top = Some(color);
    }

    // Phase 2: MaxColor, other, MaxColor, ..., MaxColor.
    seq.push(max);
    let mut cursor = OtherCursor::new(&remaining, max);
    while let Some(color) = cursor.next_item() {
        seq.push(color);
        seq.push(max);
    }
    Ok(seq)
}

/// Packs a zero-weight instance into `max(1, D)` bins (0 when empty).
pub fn pack_zero(instance: &Instance) -> Result<Packing, SolveError> {
    if instance.mode() != WeightMode::Zero {
        return Err(SolveError::WrongMode {
            expected: "zero",
            found: instance.mode().as_str(),
        });
    }
    let Some(stats) = InstanceStats::of_counts(instance.counts()) else {
        return Ok(Packing::default());
    };
    if stats.discrepancy <= 0 {
        let seq = zero_sequence(instance.counts())?;
        return Ok(Packing::new(vec![Bin::from_items(seq)]));
    }

    let max = stats.max_color;
    let mut cursor = OtherCursor::new(instance.counts(), max);
    let mut first = Bin::with_capacity(2 * stats.other_count + 1);
    first.push(max);
    while let Some(color) = cursor.next_item() {
        first.push(color);
        first.push(max);
    }
    let mut bins = Vec::with_capacity(stats.discrepancy as usize);
    bins.push(first);
    bins.extend((1..stats.discrepancy).map(|_| Bin::single(max)));
    Ok(Packing::new(bins))
}

/// Hands out the items of every color except `skip`, in id order.
#[derive(Debug, Clone)]
pub(crate) struct OtherCursor {
    remaining: Vec<usize>,
    color: usize,
    left: usize,
}

impl OtherCursor {
    pub(crate) fn new(counts: &[usize], skip: ColorId) -> Self {
        let mut remaining = counts.to_vec();
        if let Some(c) = remaining.get_mut(skip.index()) {
            *c = 0;
        }
        let left = remaining.iter().sum();
        OtherCursor {
            remaining,
            color: 0,
            left,
        }
    }

    pub(crate) fn left(&self) -> usize {
        self.left
    }

    pub(crate) fn next_item(&mut self) -> Option<ColorId> {
        while self.color < self.remaining.len() {
            if self.remaining[self.color] > 0 {
                self.remaining[self.color] -= 1;
                self.left -= 1;
                return Some(ColorId::from_index(self.color));
            }
            self.color += 1;
        }
        None
    }

    /// Counts not handed out yet, MaxColor excluded.
    pub(crate) fn into_remaining(self) -> Vec<usize> {
        self.remaining
    }
}
