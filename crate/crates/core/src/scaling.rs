//! Timing harness for the linear-time claim.
//!
//! Each [`Branch`] has a fixed instance shape; only the split of the other
//! items among three colors is random. Solves are timed without I/O and
//! without validation, which runs afterwards on every packing.

use std::time::{Duration, Instant};

use crate::generate::{color_names, Draws};
use crate::model::Instance;
use crate::predict::{predicted_bins, CaseTag};
use crate::solve;
use crate::validate::validate_packing;

/// Solver branch exercised by a bench row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    ZeroSingleBin,
    ZeroDiscrepancy,
    UnitCapacityBound,
    UnitEvenCombine,
    UnitOddReducible,
    UnitOddSingletons,
}

impl Branch {
    pub const ALL: [Branch; 6] = [
        Branch::ZeroSingleBin,
        Branch::ZeroDiscrepancy,
        Branch::UnitCapacityBound,
        Branch::UnitEvenCombine,
        Branch::UnitOddReducible,
        Branch::UnitOddSingletons,
    ];

    /// (capacity, share of the most frequent color in percent)
    fn shape(self) -> (usize, usize) {
        match self {
            Branch::ZeroSingleBin => (0, 30),
            Branch::ZeroDiscrepancy => (0, 70),
            Branch::UnitCapacityBound => (7, 30),
            Branch::UnitEvenCombine => (6, 60),
            Branch::UnitOddReducible => (5, 55),
            Branch::UnitOddSingletons => (5, 80),
        }
    }

    pub fn case(self) -> CaseTag {
        match self {
            Branch::ZeroSingleBin => CaseTag::SingleBin,
            Branch::ZeroDiscrepancy => CaseTag::DiscrepancyBound,
            Branch::UnitCapacityBound => CaseTag::CapacityBound,
            Branch::UnitEvenCombine => CaseTag::EvenCombine,
            Branch::UnitOddReducible => CaseTag::OddReducible,
            Branch::UnitOddSingletons => CaseTag::OddSingletons,
        }
    }

    pub fn as_str(self) -> &'static str {
        self.case().as_str()
    }

    /// Deterministic instance of about `n` items hitting this branch.
    pub fn instance(self, n: usize, seed: u64) -> Instance {
        let (capacity, share) = self.shape();
        let max = (n * share / 100).max(1);
        let mut draws = Draws::new(seed ^ (self as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut counts = vec![max, 0, 0, 0];
        for _ in 0..n.saturating_sub(max) {
            counts[1 + draws.below(3)] += 1;
        }
        Instance::new(capacity, color_names(4).into_iter().zip(counts)).expect("fixed names")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub capacity: usize,
    pub branch: Branch,
    /// Fastest of the trials.
    pub time: Duration,
    pub bins: usize,
}

impl BenchRow {
    pub fn nanos_per_item(&self) -> f64 {
        self.time.as_nanos() as f64 / self.n.max(1) as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchSummary {
    pub branch: Branch,
    /// Least-squares slope of time (ns) against n.
    pub slope_ns_per_item: f64,
    /// time(n_{i+1}) / time(n_i) for consecutive sizes.
    pub ratios: Vec<f64>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub summaries: Vec<BranchSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("{branch} at n = {n}: packing failed validation")]
    Invalid { branch: &'static str, n: usize },
    #[error("{branch} at n = {n}: instance landed in {got} instead")]
    WrongBranch {
        branch: &'static str,
        n: usize,
        got: &'static str,
    },
    #[error("{branch} at n = {n}: {bins} bins, predicted {predicted}")]
    CountMismatch {
        branch: &'static str,
        n: usize,
        bins: usize,
        predicted: usize,
    },
    #[error("solver error: {0}")]
    Solve(#[from] crate::error::SolveError),
}

/// Times every branch at every size, keeping the fastest of `trials` runs.
/// With `trials == 0` nothing is run and the report is empty.
pub fn run_bench(
    sizes: &[usize],
    trials: usize,
    seed: u64,
    branches: &[Branch],
) -> Result<BenchReport, BenchError> {
    let mut report = BenchReport::default();
    if trials == 0 {
        return Ok(report);
    }
    for &branch in branches {
        let mut times = Vec::new();
        for &n in sizes {
            let instance = branch.instance(n, seed);
            let predicted = predicted_bins(&instance);
            if predicted.case != branch.case() {
                return Err(BenchError::WrongBranch {
                    branch: branch.as_str(),
                    n,
                    got: predicted.case.as_str(),
                });
            }
            let mut best = Duration::MAX;
            let mut packing = None;
            for _ in 0..trials {
                let start = Instant::now();
                let p = solve(&instance)?;
                best = best.min(start.elapsed());
                packing = Some(p);
            }
            let packing = packing.expect("trials > 0");
            if !validate_packing(&instance, &packing).is_valid() {
                return Err(BenchError::Invalid {
                    branch: branch.as_str(),
                    n,
                });
            }
            if packing.bin_count() != predicted.total {
                return Err(BenchError::CountMismatch {
                    branch: branch.as_str(),
                    n,
                    bins: packing.bin_count(),
                    predicted: predicted.total,
                });
            }
            report.rows.push(BenchRow {
                n,
                capacity: instance.capacity(),
                branch,
                time: best,
                bins: packing.bin_count(),
            });
            times.push((n as f64, best.as_nanos() as f64));
        }
        report.summaries.push(BranchSummary {
            branch,
            slope_ns_per_item: slope(&times),
            ratios: times.windows(2).map(|w| w[1].1 / w[0].1.max(1.0)).collect(),
        });
    }
    Ok(report)
}

fn slope(points: &[(f64, f64)]) -> f64 {
    if points.len() < 2 {
        return points.first().map_or(0.0, |&(x, y)| y / x.max(1.0));
    }
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}
