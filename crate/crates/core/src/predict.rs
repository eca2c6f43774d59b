//! Closed-form optimal bin counts, computed without building a packing.
//!
//! For unit weights with an even capacity and positive discrepancy the count
//! follows the Combine step: `F` full bins and an optional partial bin come
//! out of the initial fill, the partial bin (when it has room) absorbs `P`
//! extra pairs, and the remaining full-bin tops are paired with single
//! MaxColor items into combined bins. The leftover singleton count `X`
//! subtracts the `P` MaxColor items taken by the partial bin; leaving that
//! term out overcounts by one on the `15W 4B 3Y 3G, L = 6` instance (6 bins
//! instead of 5).

use std::fmt;

use crate::error::SolveError;
use crate::model::{Instance, InstanceStats, WeightMode};

/// Which closed form produced the total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Empty,
    /// Zero weight, `D <= 0`: one bin.
    SingleBin,
    /// Zero weight, `D > 0`: `D` bins.
    DiscrepancyBound,
    /// Unit weight, `D <= 0`: `ceil(n / L)` bins.
    CapacityBound,
    /// Unit weight, `L = 1`: one bin per item.
    CapacityOne,
    /// Unit weight, even `L`, `D > 0`.
    EvenCombine,
    /// Unit weight, odd `L`, discrepancy reducible to zero.
    OddReducible,
    /// Unit weight, odd `L`, MaxColor singletons remain.
    OddSingletons,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Empty => "empty",
            CaseTag::SingleBin => "single-bin",
            CaseTag::DiscrepancyBound => "discrepancy-bound",
            CaseTag::CapacityBound => "capacity-bound",
            CaseTag::CapacityOne => "capacity-one",
            CaseTag::EvenCombine => "even-combine",
            CaseTag::OddReducible => "odd-reducible",
            CaseTag::OddSingletons => "odd-singletons",
        }
    }

    pub const ALL: [CaseTag; 8] = [
        CaseTag::Empty,
        CaseTag::SingleBin,
        CaseTag::DiscrepancyBound,
        CaseTag::CapacityBound,
        CaseTag::CapacityOne,
        CaseTag::EvenCombine,
        CaseTag::OddReducible,
        CaseTag::OddSingletons,
    ];
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Quantities behind the even-capacity count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenBreakdown {
    /// `F`: full bins of the initial fill.
    pub full_bins: usize,
    /// `R`: other items in the partial bin of the initial fill.
    pub remainder: usize,
    /// `P`: pairs the partial bin can still take (0 unless it has room for two).
    pub pair_capacity: usize,
    /// `M`: single MaxColor bins after the initial fill.
    pub singles: usize,
    /// `C`: combined bins filled to `L - 1` items.
    pub combined: usize,
    /// `RO`: full-bin tops left in the last, partly filled combined bin.
    pub leftover_tops: usize,
    /// `X`: single MaxColor bins left after Combine.
    pub leftover_singles: usize,
    capacity: usize,
}

impl EvenBreakdown {
    fn compute(capacity: usize, max_count: usize, other_count: usize) -> Self {
        let half = capacity / 2;
        let full_bins = other_count / half;
        let remainder = other_count % half;
        let (pair_capacity, singles) = if remainder > 0 {
            let free = capacity - (2 * remainder + 1);
            let pairs = if free >= 2 {
                (capacity - 1 - remainder - remainder - 1) / 2
            } else {
                0
            };
            (pairs, max_count - full_bins * half - remainder - 1)
        } else {
            (0, max_count - full_bins * half)
        };

        // Pairs actually placed in the partial bin, then what is left for
        // combined bins of `per_bin` pairs on top of one base item.
        let absorbed = pair_capacity.min(full_bins).min(singles);
        let tops = full_bins - absorbed;
        let rest = singles - absorbed;
        let per_bin = (capacity - 1) / 2;
        let (combined, leftover_tops, leftover_singles) = match tops.checked_div(per_bin) {
            None => (0, 0, rest),
            Some(by_tops) => {
                let combined = by_tops.min(rest / (per_bin + 1));
                let tops_left = tops - combined * per_bin;
                let rest_left = rest - combined * (per_bin + 1);
                let ro = if tops_left > 0 && rest_left >= 2 {
                    tops_left.min(rest_left - 1)
                } else {
                    0
                };
                let x = rest_left - if ro > 0 { ro + 1 } else { 0 };
                (combined, ro, x)
            }
        };

        EvenBreakdown {
            full_bins,
            remainder,
            pair_capacity,
            singles,
            combined,
            leftover_tops,
            leftover_singles,
            capacity,
        }
    }

    pub fn total(&self) -> usize {
        self.full_bins
            + usize::from(self.remainder > 0)
            + self.combined
            + usize::from(self.leftover_tops > 0)
            + self.leftover_singles
    }

    /// Total when the leftover singletons are counted as
    /// `M - C * ceil((L-1)/2) - (RO > 0 ? RO + 1 : 0)`, i.e. without removing
    /// the `P` items the partial bin absorbs, and with `C` and `RO` taken as
    /// plain quotient and remainder of `F - P`.
    pub fn total_without_absorption(&self) -> usize {
        let per_bin = (self.capacity - 1) / 2;
        let spare = self.full_bins.saturating_sub(self.pair_capacity);
        let c = spare.checked_div(per_bin).unwrap_or(0);
        let ro = spare.checked_rem(per_bin).unwrap_or(0);
        let used = c * (self.capacity - 1).div_ceil(2) + if ro > 0 { ro + 1 } else { 0 };
        let x = self.singles.saturating_sub(used);
        self.full_bins + usize::from(self.remainder > 0) + c + usize::from(ro > 0) + x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountBreakdown {
    pub mode: WeightMode,
    pub case: CaseTag,
    /// `D`; 0 for the empty instance.
    pub discrepancy: i64,
    /// Present only for [`CaseTag::EvenCombine`].
    pub even: Option<EvenBreakdown>,
    pub total: usize,
}

/// `max(1, D)` bins, or 0 for the empty instance.
pub fn predicted_bins_zero(instance: &Instance) -> Result<CountBreakdown, SolveError> {
    if instance.mode() != WeightMode::Zero {
        return Err(SolveError::WrongMode {
            expected: "zero",
            found: instance.mode().as_str(),
        });
    }
    let Some(stats) = InstanceStats::of_counts(instance.counts()) else {
        return Ok(empty(WeightMode::Zero));
    };
    let d = stats.discrepancy;
    let (case, total) = if d <= 0 {
        (CaseTag::SingleBin, 1)
    } else {
        (CaseTag::DiscrepancyBound, d as usize)
    };
    Ok(CountBreakdown {
        mode: WeightMode::Zero,
        case,
        discrepancy: d,
        even: None,
        total,
    })
}

/// Optimal bin count for unit-weight items.
pub fn predicted_bins_unit(instance: &Instance) -> Result<CountBreakdown, SolveError> {
    if instance.mode() != WeightMode::Unit {
        return Err(SolveError::WrongMode {
            expected: "unit",
            found: instance.mode().as_str(),
        });
    }
    let Some(stats) = InstanceStats::of_counts(instance.counts()) else {
        return Ok(empty(WeightMode::Unit));
    };
    let n = instance.len();
    let l = instance.capacity();
    let d = stats.discrepancy;
    let mut even = None;

    let (case, total) = if l == 1 {
        (CaseTag::CapacityOne, n)
    } else if d <= 0 {
        (CaseTag::CapacityBound, n.div_ceil(l))
    } else if l.is_multiple_of(2) {
        let b = EvenBreakdown::compute(l, stats.max_count, stats.other_count);
        even = Some(b);
        (CaseTag::EvenCombine, b.total())
    } else {
        let d = d as usize;
        if d <= stats.other_count.div_ceil(l / 2) {
            // D full bins, then ceil((n - D*L) / L) more, never negative.
            let rest = n.saturating_sub(d * l);
            (CaseTag::OddReducible, d + rest.div_ceil(l))
        } else {
            (CaseTag::OddSingletons, d)
        }
    };
    Ok(CountBreakdown {
        mode: WeightMode::Unit,
        case,
        discrepancy: d,
        even,
        total,
    })
}

/// Dispatches on the instance's weight mode.
pub fn predicted_bins(instance: &Instance) -> CountBreakdown {
    match instance.mode() {
        WeightMode::Zero => predicted_bins_zero(instance),
        WeightMode::Unit => predicted_bins_unit(instance),
    }
    .expect("mode matches")
}

fn empty(mode: WeightMode) -> CountBreakdown {
    CountBreakdown {
        mode,
        case: CaseTag::Empty,
        discrepancy: 0,
        even: None,
        total: 0,
    }
}
