//! Checking a packing against its instance.

use std::fmt;

use crate::model::{ColorId, ColorTable, Instance, Packing, WeightMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Item at `position` has the same color as the one below it.
    Adjacency {
        bin: usize,
        position: usize,
    },
    /// Bin holds more items than the capacity allows.
    Capacity {
        bin: usize,
        len: usize,
        capacity: usize,
    },
    /// Color appears a different number of times than in the instance.
    /// Ids outside the instance table always end up here.
    Conservation {
        color: ColorId,
        expected: usize,
        found: usize,
    },
    EmptyBin {
        bin: usize,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Adjacency { .. } => "adjacency",
            Violation::Capacity { .. } => "capacity",
            Violation::Conservation { .. } => "conservation",
            Violation::EmptyBin { .. } => "empty-bin",
        }
    }

    /// Renders the violation with color names taken from `table`, falling
    /// back to `extra` (ids past the table) and then to `#id`.
    pub fn describe(&self, table: &ColorTable, extra: &[String]) -> String {
        match self {
            Violation::Conservation {
                color,
                expected,
                found,
            } => {
                let name = table
                    .name(*color)
                    .map(str::to_owned)
                    .or_else(|| extra.get(color.index() - table.len()).cloned())
                    .unwrap_or_else(|| format!("#{}", color.0));
                format!("conservation: color {name} expected {expected}, found {found}")
            }
            other => other.to_string(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Adjacency { bin, position } => {
                write!(f, "adjacency: bin {bin} position {position}")
            }
            Violation::Capacity { bin, len, capacity } => {
                write!(f, "capacity: bin {bin} holds {len} > {capacity}")
            }
            Violation::Conservation {
                color,
                expected,
                found,
            } => write!(
                f,
                "conservation: color #{} expected {expected}, found {found}",
                color.0
            ),
            Violation::EmptyBin { bin } => write!(f, "empty-bin: bin {bin}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every adjacency, capacity, conservation and empty-bin violation.
pub fn validate_packing(instance: &Instance, packing: &Packing) -> ValidationReport {
    let mut violations = Vec::new();
    let mut found = vec![0usize; instance.colors().len()];
    let mut unknown: Vec<(ColorId, usize)> = Vec::new();

    for (b, bin) in packing.bins.iter().enumerate() {
        if bin.is_empty() {
            violations.push(Violation::EmptyBin { bin: b });
            continue;
        }
        if instance.mode() == WeightMode::Unit && bin.len() > instance.capacity() {
            violations.push(Violation::Capacity {
                bin: b,
                len: bin.len(),
                capacity: instance.capacity(),
            });
        }
        for (p, pair) in bin.items().windows(2).enumerate() {
            if pair[0] == pair[1] {
                violations.push(Violation::Adjacency {
                    bin: b,
                    position: p + 1,
                });
            }
        }
        for &c in bin.items() {
            match found.get_mut(c.index()) {
                Some(slot) => *slot += 1,
                None => match unknown.iter_mut().find(|(id, _)| *id == c) {
                    Some((_, n)) => *n += 1,
                    None => unknown.push((c, 1)),
                },
            }
        }
    }

    for (i, (&expected, &got)) in instance.counts().iter().zip(&found).enumerate() {
        if expected != got {
            violations.push(Violation::Conservation {
                color: ColorId::from_index(i),
                expected,
                found: got,
            });
        }
    }
    unknown.sort();
    violations.extend(
        unknown
            .into_iter()
            .map(|(color, n)| Violation::Conservation {
                color,
                expected: 0,
                found: n,
            }),
    );

    ValidationReport { violations }
}
