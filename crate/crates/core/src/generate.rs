//! Seeded random instances.
//!
//! The generator is SplitMix64 (`rand_xoshiro::SplitMix64`) with its state
//! initialised to the 64-bit seed as-is. A value below `bound` is drawn as
//! the high 64 bits of `next_u64() * bound` (128-bit product). Given those two
//! rules the procedure below can be replayed in any language:
//!
//! - Colors are named `A`..`Z` when `k <= 26`, otherwise `C0`..`C{k-1}`.
//! - `uniform`: when `n >= k` every color first gets one item; each of the
//!   remaining items then picks its color with one draw below `k`.
//! - `max-heavy`: one draw below `k` picks the heavy color; its count is
//!   `lo + draw(hi - lo + 1)` with `lo = n/2 + 1` and `hi = n - (k - 1)`
//!   (just `lo` when `hi < lo`). The rest is spread like `uniform` over the
//!   other `k - 1` colors. A single color simply gets all `n` items.
//! - `balanced`: `uniform` first, then while the largest count exceeds half
//!   of `n`, one item moves from the largest color to the smallest (lowest
//!   index wins ties on both sides).

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::GenError;
use crate::model::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Skew {
    Uniform,
    /// Guarantees `D > 0`.
    MaxHeavy,
    /// Guarantees `D <= 0`.
    Balanced,
}

impl Skew {
    pub fn as_str(self) -> &'static str {
        match self {
            Skew::Uniform => "uniform",
            Skew::MaxHeavy => "max-heavy",
            Skew::Balanced => "balanced",
        }
    }
}

impl fmt::Display for Skew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Skew {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Skew::Uniform),
            "max-heavy" => Ok(Skew::MaxHeavy),
            "balanced" => Ok(Skew::Balanced),
            other => Err(GenError::UnknownSkew(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub colors: usize,
    pub items: usize,
    pub capacity: usize,
    pub seed: u64,
    pub skew: Skew,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub instance: Instance,
    /// Colors that received at least one item.
    pub populated: usize,
}

impl Generated {
    /// True when fewer than the requested number of colors got items.
    pub fn underpopulated(&self, spec: &GenSpec) -> bool {
        self.populated < spec.colors
    }
}

/// SplitMix64 plus the bounded draw described in the module docs.
pub struct Draws(SplitMix64);

impl Draws {
    pub fn new(seed: u64) -> Self {
        Draws(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish value in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.0.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

pub fn color_names(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k)
            .map(|i| char::from(b'A' + i as u8).to_string())
            .collect()
    } else {
        (0..k).map(|i| format!("C{i}")).collect()
    }
}

/// Spreads `items` over `slots`, one each first when there are enough.
fn spread(draws: &mut Draws, items: usize, slots: usize) -> Vec<usize> {
    let mut counts = vec![0; slots];
    if slots == 0 {
        return counts;
    }
    let mut left = items;
    if items >= slots {
        counts.iter_mut().for_each(|c| *c = 1);
        left -= slots;
    }
    for _ in 0..left {
        counts[draws.below(slots)] += 1;
    }
    counts
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    let k = spec.colors;
    let n = spec.items;
    if k == 0 {
        return Err(GenError::NoColors);
    }
    let mut draws = Draws::new(spec.seed);
    let counts = match spec.skew {
        Skew::Uniform => spread(&mut draws, n, k),
        Skew::MaxHeavy => {
            if n == 0 {
                vec![0; k]
            } else if k == 1 {
                vec![n]
            } else {
                let heavy = draws.below(k);
                let lo = n / 2 + 1;
                let hi = n.saturating_sub(k - 1);
                let max = if hi >= lo {
                    lo + draws.below(hi - lo + 1)
                } else {
                    lo
                };
                let mut rest = spread(&mut draws, n - max, k - 1);
                rest.insert(heavy, max);
                rest
            }
        }
        Skew::Balanced => {
            // Two colors must split evenly; one color, or one item, cannot.
            if n > 0 && (k == 1 || n == 1 || (k == 2 && n % 2 == 1)) {
                return Err(GenError::Unsatisfiable {
                    colors: k,
                    items: n,
                });
            }
            let mut counts = spread(&mut draws, n, k);
            loop {
                let (hi, &max) = counts
                    .iter()
                    .enumerate()
                    .rev()
                    .max_by_key(|&(_, c)| c)
                    .expect("k > 0");
                if 2 * max <= n {
                    break;
                }
                let lo = (0..k).min_by_key(|&i| counts[i]).expect("k > 0");
                counts[hi] -= 1;
                counts[lo] += 1;
            }
            counts
        }
    };

    let populated = counts.iter().filter(|&&c| c > 0).count();
    let instance = Instance::new(spec.capacity, color_names(k).into_iter().zip(counts))
        .expect("generated names are valid and distinct");
    Ok(Generated {
        instance,
        populated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::discrepancy;

    fn spec(colors: usize, items: usize, seed: u64, skew: Skew) -> GenSpec {
        GenSpec {
            colors,
            items,
            capacity: 3,
            seed,
            skew,
        }
    }

    #[test]
    fn reproducible() {
        let s = spec(3, 9, 42, Skew::Balanced);
        assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs of SplitMix64 seeded with 0.
        let mut d = Draws::new(0);
        assert_eq!(d.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(d.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn skews_hold() {
        for seed in 0..200 {
            for k in 1..6 {
                for n in [1, 2, 5, 10, 31] {
                    let g = generate(&spec(k, n, seed, Skew::MaxHeavy)).unwrap();
                    assert!(discrepancy(&g.instance) > 0);
                    assert_eq!(g.instance.len(), n);
                    if let Ok(g) = generate(&spec(k, n, seed, Skew::Balanced)) {
                        assert!(discrepancy(&g.instance) <= 0);
                        assert_eq!(g.instance.len(), n);
                    }
                    let g = generate(&spec(k, n, seed, Skew::Uniform)).unwrap();
                    assert_eq!(g.instance.len(), n);
                    if n >= k {
                        assert_eq!(g.populated, k);
                    }
                }
            }
        }
    }

    #[test]
    fn underpopulated_is_flagged() {
        let s = spec(5, 2, 1, Skew::Uniform);
        let g = generate(&s).unwrap();
        assert!(g.underpopulated(&s));
        assert_eq!(g.instance.colors().len(), 5);
    }

    #[test]
    fn balanced_impossible_cases() {
        assert!(generate(&spec(1, 4, 0, Skew::Balanced)).is_err());
        assert!(generate(&spec(2, 5, 0, Skew::Balanced)).is_err());
        assert!(generate(&spec(3, 1, 0, Skew::Balanced)).is_err());
        assert!(generate(&spec(2, 0, 0, Skew::Balanced)).is_ok());
        assert!(generate(&spec(0, 4, 0, Skew::Uniform)).is_err());
    }

    #[test]
    fn skew_parses() {
        assert_eq!("max-heavy".parse::<Skew>(), Ok(Skew::MaxHeavy));
        assert!("lopsided".parse::<Skew>().is_err());
    }
}
