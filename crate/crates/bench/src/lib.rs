//! Shared inputs for the criterion benches in `benches/`.

use colorpack::scaling::Branch;
use colorpack::Instance;

/// Sizes used by the scaling group: four doublings from 10^5.
pub const SIZES: [usize; 4] = [100_000, 200_000, 400_000, 800_000];

pub const SEED: u64 = 0x00c0_10a5;

/// One instance per solver branch at size `n`.
pub fn instances(n: usize) -> Vec<(Branch, Instance)> {
    Branch::ALL
        .iter()
        .map(|&b| (b, b.instance(n, SEED)))
        .collect()
}
