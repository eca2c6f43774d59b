//! Optimal packing of colored items into bins so that no two items of the
//! same color are adjacent within a bin.
//!
//! Two settings are covered, both solved optimally in linear time:
//!
//! - zero-weight items ([`pack_zero`]): bins are unbounded, the optimum is
//!   `max(1, D)` where `D` is the discrepancy, i.e. the count of the most
//!   frequent color minus the count of all others;
//! - unit-weight items ([`pack_unit`]): bins hold at most `L` items.
//!
//! [`predicted_bins`] gives the optimal count in closed form and
//! [`oracle::optimal_bins`] finds it by exhaustive search on small inputs.

pub mod error;
pub mod generate;
pub mod io;
pub mod model;
pub mod oracle;
pub mod predict;
pub mod scaling;
pub mod unit;
pub mod validate;
pub mod zero;

pub use error::{GenError, ModelError, OracleError, ParseError, ParseErrorKind, SolveError};
pub use generate::{generate, GenSpec, Generated, Skew};
pub use io::{parse_instance, parse_packing, serialize_instance, serialize_packing, PackingFormat};
pub use model::{
    compute_stats, discrepancy, Bin, ColorId, ColorTable, EmptyInstance, Instance, InstanceStats,
    Packing, WeightMode,
};
pub use oracle::optimal_bins;
pub use predict::{
    predicted_bins, predicted_bins_unit, predicted_bins_zero, CaseTag, CountBreakdown,
    EvenBreakdown,
};
pub use unit::{combine, pack_unit, BinClass};
pub use validate::{validate_packing, ValidationReport, Violation};
pub use zero::{pack_zero, zero_sequence};

/// Packs with the solver matching the instance's weight mode.
pub fn solve(instance: &Instance) -> Result<Packing, SolveError> {
    match instance.mode() {
        WeightMode::Zero => pack_zero(instance),
        WeightMode::Unit => pack_unit(instance),
    }
}
