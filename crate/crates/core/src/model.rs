//! Colors, instances, bins and packings.

use std::collections::HashSet;
use std::fmt;

use smallvec::SmallVec;

use crate::error::ModelError;

/// Dense index of a color inside a [`ColorTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId(pub u32);

impl ColorId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub(crate) fn from_index(index: usize) -> Self {
        ColorId(index as u32)
    }
}

/// Interned color names.
///
/// Ids are assigned by descending item count, ties broken by name, so
/// `ColorId(0)` is always the most frequent color of the instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorTable {
    names: Vec<String>,
}

impl ColorTable {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: ColorId) -> Option<&str> {
        self.names.get(id.index()).map(String::as_str)
    }

    pub fn id_of(&self, name: &str) -> Option<ColorId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(ColorId::from_index)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn ids(&self) -> impl Iterator<Item = ColorId> {
        (0..self.names.len()).map(ColorId::from_index)
    }

    /// True when every name is a single character, which lets packings be
    /// written without separators inside a bin.
    pub fn single_char_names(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }
}

/// Color names must match `[A-Za-z][A-Za-z0-9_]*`.
pub fn is_valid_color_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Whether bins have a weight limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// Items weigh nothing; only adjacency binds.
    Zero,
    /// Every item weighs one; bins hold at most `capacity` items.
    Unit,
}

impl WeightMode {
    pub fn as_str(self) -> &'static str {
        match self {
            WeightMode::Zero => "zero",
            WeightMode::Unit => "unit",
        }
    }
}

impl fmt::Display for WeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A multiset of colored items together with the bin capacity.
///
/// Capacity 0 is the zero-weight sentinel: bins are unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    capacity: usize,
    table: ColorTable,
    counts: Vec<usize>,
    total: usize,
}

impl Instance {
    /// Builds an instance from `(name, count)` pairs in any order.
    pub fn new<S, I>(capacity: usize, colors: I) -> Result<Self, ModelError>
    where
        S: Into<String>,
        I: IntoIterator<Item = (S, usize)>,
    {
        let mut entries: Vec<(String, usize)> =
            colors.into_iter().map(|(n, c)| (n.into(), c)).collect();
        let mut seen = HashSet::new();
        for (name, _) in &entries {
            if !is_valid_color_name(name) {
                return Err(ModelError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(ModelError::DuplicateColor(name.clone()));
            }
        }
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let total = entries.iter().map(|(_, c)| c).sum();
        let (names, counts) = entries.into_iter().unzip();
        Ok(Instance {
            capacity,
            table: ColorTable { names },
            counts,
            total,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn mode(&self) -> WeightMode {
        if self.capacity == 0 {
            WeightMode::Zero
        } else {
            WeightMode::Unit
        }
    }

    pub fn colors(&self) -> &ColorTable {
        &self.table
    }

    /// Item count per color, indexed by [`ColorId`].
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, id: ColorId) -> usize {
        self.counts.get(id.index()).copied().unwrap_or(0)
    }

    /// Total number of items.
    pub fn len(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Same items with a different capacity.
    pub fn with_capacity(&self, capacity: usize) -> Self {
        Instance {
            capacity,
            ..self.clone()
        }
    }

    /// Effective bin limit: `n` (at least 1) in zero-weight mode.
    pub fn effective_limit(&self) -> usize {
        match self.mode() {
            WeightMode::Zero => self.total.max(1),
            WeightMode::Unit => self.capacity,
        }
    }
}

/// Items stored inline before a bin spills to the heap.
const INLINE_ITEMS: usize = 6;

/// Items of one bin, bottom to top.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Bin {
    items: SmallVec<[ColorId; INLINE_ITEMS]>,
}

impl Bin {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Bin {
            items: SmallVec::with_capacity(capacity),
        }
    }

    pub fn from_items(items: Vec<ColorId>) -> Self {
        Bin {
            items: SmallVec::from_vec(items),
        }
    }

    pub fn from_slice(items: &[ColorId]) -> Self {
        Bin {
            items: SmallVec::from_slice(items),
        }
    }

    pub fn single(color: ColorId) -> Self {
        let mut items = SmallVec::new();
        items.push(color);
        Bin { items }
    }

    pub fn items(&self) -> &[ColorId] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn top(&self) -> Option<ColorId> {
        self.items.last().copied()
    }

    pub fn push(&mut self, color: ColorId) {
        self.items.push(color);
    }

    pub fn pop(&mut self) -> Option<ColorId> {
        self.items.pop()
    }

    pub fn contains(&self, color: ColorId) -> bool {
        self.items.contains(&color)
    }
}

impl From<Vec<ColorId>> for Bin {
    fn from(items: Vec<ColorId>) -> Self {
        Bin::from_items(items)
    }
}

/// The bins produced for an instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Packing {
    pub bins: Vec<Bin>,
}

impl Packing {
    pub fn new(bins: Vec<Bin>) -> Self {
        Packing { bins }
    }

    pub fn bin_count(&self) -> usize {
        self.bins.len()
    }

    pub fn item_count(&self) -> usize {
        self.bins.iter().map(Bin::len).sum()
    }
}

/// Most frequent color and the discrepancy it induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceStats {
    pub max_color: ColorId,
    pub max_count: usize,
    pub other_count: usize,
    pub discrepancy: i64,
}

impl InstanceStats {
    /// Stats of an arbitrary per-color count vector. The first color (in id
    /// order) with the highest count wins ties. Returns `None` when empty.
    pub fn of_counts(counts: &[usize]) -> Option<Self> {
        let total: usize = counts.iter().sum();
        if total == 0 {
            return None;
        }
        let (max_index, &max_count) = counts.iter().enumerate().fold(
            None,
            |best: Option<(usize, &usize)>, (i, c)| match best {
                Some((_, b)) if b >= c => best,
                _ => Some((i, c)),
            },
        )?;
        let other_count = total - max_count;
        Some(InstanceStats {
            max_color: ColorId::from_index(max_index),
            max_count,
            other_count,
            discrepancy: max_count as i64 - other_count as i64,
        })
    }
}

/// Returned by [`compute_stats`] for an instance without items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("instance has no items")]
pub struct EmptyInstance;

/// MaxColor, MaxCount, OtherCount and discrepancy of an instance.
///
/// Ties on the maximum count go to the lexicographically smallest name,
/// which is also the smallest id under the interning order.
pub fn compute_stats(instance: &Instance) -> Result<InstanceStats, EmptyInstance> {
    InstanceStats::of_counts(instance.counts()).ok_or(EmptyInstance)
}

/// Discrepancy with the empty instance mapped to 0.
pub fn discrepancy(instance: &Instance) -> i64 {
    compute_stats(instance).map_or(0, |s| s.discrepancy)
}
