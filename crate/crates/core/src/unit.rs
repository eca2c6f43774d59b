//! Optimal packing of unit-weight items into bins of
//! capacity `L`, plus the Combine step used when `L` is even.

use std::collections::VecDeque;

use crate::error::SolveError;
use crate::model::{Bin, ColorId, Instance, InstanceStats, Packing, WeightMode};
use crate::zero::{zero_sequence, OtherCursor};

/// Role of a bin when Combine starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinClass {
    /// A single MaxColor item.
    M,
    /// Mixed bin topped with MaxColor and room for at least two more items.
    P,
    /// Full bin topped with an other color.
    F,
    /// Mixed bin topped with MaxColor and exactly one free slot.
    Partial,
    /// Anything else, including bins built by Combine itself.
    Combined,
}

pub fn classify(bin: &Bin, capacity: usize, max_color: ColorId) -> BinClass {
    let Some(top) = bin.top() else {
        return BinClass::Combined;
    };
    if bin.len() == 1 && top == max_color {
        return BinClass::M;
    }
    if bin.len() == capacity && top != max_color {
        return BinClass::F;
    }
    let mixed = bin.items().iter().any(|&c| c != max_color);
    if top == max_color && mixed && bin.len() < capacity {
        return match capacity - bin.len() {
            1 => BinClass::Partial,
            _ => BinClass::P,
        };
    }
    BinClass::Combined
}

/// Packs a unit-weight instance with the minimum number of bins.
pub fn pack_unit(instance: &Instance) -> Result<Packing, SolveError> {
    if instance.mode() != WeightMode::Unit {
        return Err(SolveError::WrongMode {
            expected: "unit",
            found: instance.mode().as_str(),
        });
    }
    let capacity = instance.capacity();
    let Some(stats) = InstanceStats::of_counts(instance.counts()) else {
        return Ok(Packing::default());
    };

    if capacity == 1 {
        let bins = instance
            .colors()
            .ids()
            .flat_map(|c| std::iter::repeat_n(c, instance.count(c)))
            .map(Bin::single)
            .collect();
        return Ok(Packing::new(bins));
    }

    if stats.discrepancy <= 0 {
        let seq = zero_sequence(instance.counts())?;
        return Ok(Packing::new(split(&seq, capacity)));
    }

    let max = stats.max_color;
    let mut fill = AlternatingFill {
        max,
        max_left: stats.max_count,
        others: OtherCursor::new(instance.counts(), max),
        capacity,
    };
    let mut bins = Vec::new();

    if capacity.is_multiple_of(2) {
        while fill.others.left() > 0 {
            bins.push(fill.next_bin());
        }
        bins.extend((0..fill.max_left).map(|_| Bin::single(max)));
        return Ok(Packing::new(combine(bins, capacity, max)?));
    }

    let discrepancy = stats.discrepancy as usize;
    if discrepancy <= stats.other_count.div_ceil(capacity / 2) {
        for _ in 0..discrepancy {
            bins.push(fill.next_bin());
        }
        let max_left = fill.max_left;
        let mut rest = fill.others.into_remaining();
        rest[max.index()] = max_left;
        let seq = zero_sequence(&rest)?;
        bins.extend(split(&seq, capacity));
    } else {
        while fill.others.left() > 0 {
            bins.push(fill.next_bin());
        }
        bins.extend((0..fill.max_left).map(|_| Bin::single(max)));
    }
    Ok(Packing::new(bins))
}

/// Chops a valid sequence into bins of `capacity` items; the last may be
/// shorter. Splitting only removes adjacencies, so every bin stays valid.
fn split(seq: &[ColorId], capacity: usize) -> Vec<Bin> {
    seq.chunks(capacity).map(Bin::from_slice).collect()
}

/// Opens bins that start with MaxColor and alternate with other items,
/// topping with MaxColor whenever there is room.
struct AlternatingFill {
    max: ColorId,
    max_left: usize,
    others: OtherCursor,
    capacity: usize,
}

impl AlternatingFill {
    fn next_bin(&mut self) -> Bin {
        let mut bin = Bin::with_capacity(self.capacity);
        bin.push(self.max);
        self.max_left -= 1;
        while bin.len() < self.capacity {
            let Some(other) = self.others.next_item() else {
                break;
            };
            bin.push(other);
            if bin.len() == self.capacity || self.max_left == 0 {
                break;
            }
            bin.push(self.max);
            self.max_left -= 1;
        }
        bin
    }
}

/// Result of Combine together with the sizes of the F and M sets at exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombineOutcome {
    pub bins: Vec<Bin>,
    pub full_left: usize,
    pub singles_left: usize,
}

/// Merges single MaxColor bins using the other-color tops of full bins.
///
/// Bins keep their relative order; M-bins that donate their item are
/// removed. Requires an even capacity and at most one P-bin.
pub fn combine(
    bins: Vec<Bin>,
    capacity: usize,
    max_color: ColorId,
) -> Result<Vec<Bin>, SolveError> {
    combine_with_outcome(bins, capacity, max_color).map(|o| o.bins)
}

pub fn combine_with_outcome(
    mut bins: Vec<Bin>,
    capacity: usize,
    max_color: ColorId,
) -> Result<CombineOutcome, SolveError> {
    if capacity == 0 || !capacity.is_multiple_of(2) {
        return Err(SolveError::ContractViolation(
            "combine needs an even capacity",
        ));
    }
    let mut full = VecDeque::new();
    let mut singles = VecDeque::new();
    let mut partial = None;
    for (i, bin) in bins.iter().enumerate() {
        match classify(bin, capacity, max_color) {
            BinClass::F => full.push_back(i),
            BinClass::M => singles.push_back(i),
            BinClass::P if partial.is_some() => {
                return Err(SolveError::ContractViolation(
                    "combine allows at most one P-bin",
                ))
            }
            BinClass::P => partial = Some(i),
            BinClass::Partial | BinClass::Combined => {}
        }
    }

    // With L = 2 a combined bin could never take a pair.
    let mut removed = vec![false; bins.len()];
    let mut current = if capacity < 4 {
        None
    } else {
        partial.or_else(|| singles.pop_front())
    };
    while let Some(cur) = current {
        if full.is_empty() || singles.is_empty() {
            break;
        }
        if bins[cur].len() + 2 > capacity {
            current = singles.pop_front();
            continue;
        }
        let f = full.pop_front().expect("checked non-empty");
        let m = singles.pop_front().expect("checked non-empty");
        let x = bins[f].pop().expect("F-bins are full");
        let y = bins[m].pop().expect("M-bins hold one item");
        removed[m] = true;
        bins[cur].push(x);
        bins[cur].push(y);
    }

    let (full_left, singles_left) = (full.len(), singles.len());
    let bins = bins
        .into_iter()
        .zip(removed)
        .filter_map(|(b, gone)| (!gone).then_some(b))
        .collect();
    Ok(CombineOutcome {
        bins,
        full_left,
        singles_left,
    })
}
