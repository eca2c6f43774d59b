//! Instance files and packing serialization.
//!
//! Instance format (UTF-8):
//!
//! ```text
//! # comment
//! capacity: 3
//! W 4
//! B 3
//! Y 2
//! ```
//!
//! Capacity 0 selects zero-weight mode. Blank lines and `#` lines are
//! ignored anywhere. Color names match `[A-Za-z][A-Za-z0-9_]*`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, ParseErrorKind};
use crate::model::{is_valid_color_name, Bin, ColorId, Instance, Packing};
use crate::validate::validate_packing;

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut capacity = None;
    let mut colors: Vec<(String, usize)> = Vec::new();
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if capacity.is_none() {
            let value = line
                .strip_prefix("capacity:")
                .ok_or_else(|| ParseError::new(line_no, ParseErrorKind::MissingCapacity))?
                .trim();
            let parsed = value.parse::<usize>().map_err(|_| {
                ParseError::new(line_no, ParseErrorKind::InvalidCapacity(value.to_owned()))
            })?;
            capacity = Some(parsed);
            continue;
        }

        let mut fields = line.split_whitespace();
        let (Some(name), Some(count), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(ParseError::new(
                line_no,
                ParseErrorKind::Malformed(line.to_owned()),
            ));
        };
        if !is_valid_color_name(name) {
            return Err(ParseError::new(
                line_no,
                ParseErrorKind::InvalidName(name.to_owned()),
            ));
        }
        let count = count.parse::<usize>().map_err(|_| {
            ParseError::new(line_no, ParseErrorKind::InvalidCount(count.to_owned()))
        })?;
        if !seen.insert(name.to_owned()) {
            return Err(ParseError::new(
                line_no,
                ParseErrorKind::DuplicateColor(name.to_owned()),
            ));
        }
        colors.push((name.to_owned(), count));
    }

    let capacity = capacity.ok_or_else(|| {
        ParseError::new(text.lines().count().max(1), ParseErrorKind::MissingCapacity)
    })?;
    // Names and duplicates were checked above.
    Ok(Instance::new(capacity, colors).expect("validated color list"))
}

/// Writes an instance in the file format, colors in interning order.
pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = format!("capacity: {}\n", instance.capacity());
    for (name, count) in instance.colors().names().zip(instance.counts()) {
        out.push_str(&format!("{name} {count}\n"));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingFormat {
    /// Bins separated by ` / `, items concatenated (single-character names)
    /// or comma-separated.
    Text,
    /// JSON document with the instance echo, bins, bin count and validity.
    Structured,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ColorCount {
    pub name: String,
    pub count: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub capacity: usize,
    pub counts: Vec<ColorCount>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PackingDocument {
    pub instance: InstanceEcho,
    pub bins: Vec<Vec<String>>,
    pub bin_count: usize,
    pub valid: bool,
}

fn color_name(instance: &Instance, id: ColorId) -> String {
    instance
        .colors()
        .name(id)
        .map_or_else(|| format!("#{}", id.0), str::to_owned)
}

pub fn packing_document(instance: &Instance, packing: &Packing) -> PackingDocument {
    PackingDocument {
        instance: InstanceEcho {
            capacity: instance.capacity(),
            counts: instance
                .colors()
                .names()
                .zip(instance.counts())
                .map(|(name, &count)| ColorCount {
                    name: name.to_owned(),
                    count,
                })
                .collect(),
        },
        bins: packing
            .bins
            .iter()
            .map(|b| b.items().iter().map(|&c| color_name(instance, c)).collect())
            .collect(),
        bin_count: packing.bin_count(),
        valid: validate_packing(instance, packing).is_valid(),
    }
}

pub fn serialize_packing(instance: &Instance, packing: &Packing, format: PackingFormat) -> String {
    match format {
        PackingFormat::Text => {
            let sep = if instance.colors().single_char_names() {
                ""
            } else {
                ","
            };
            packing
                .bins
                .iter()
                .map(|b| {
                    b.items()
                        .iter()
                        .map(|&c| color_name(instance, c))
                        .collect::<Vec<_>>()
                        .join(sep)
                })
                .collect::<Vec<_>>()
                .join(" / ")
        }
        PackingFormat::Structured => {
            serde_json::to_string_pretty(&packing_document(instance, packing))
                .expect("packing document serializes")
        }
    }
}

/// A packing read back from text. Names missing from the instance get ids
/// past the end of its color table, in order of first appearance, so that
/// validation reports them as conservation violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedPacking {
    pub packing: Packing,
    pub unknown: Vec<String>,
}

/// Reads either the text form or the structured (JSON) form.
pub fn parse_packing(instance: &Instance, text: &str) -> Result<ParsedPacking, ParseError> {
    let trimmed = text.trim();
    let mut unknown: Vec<String> = Vec::new();
    let mut resolve = |name: &str| -> ColorId {
        if let Some(id) = instance.colors().id_of(name) {
            return id;
        }
        let pos = unknown.iter().position(|u| u == name).unwrap_or_else(|| {
            unknown.push(name.to_owned());
            unknown.len() - 1
        });
        ColorId((instance.colors().len() + pos) as u32)
    };

    if trimmed.starts_with('{') {
        let doc: PackingDocument = serde_json::from_str(trimmed)
            .map_err(|e| ParseError::new(e.line(), ParseErrorKind::Structured(e.to_string())))?;
        let bins = doc
            .bins
            .iter()
            .map(|b| Bin::from_items(b.iter().map(|n| resolve(n)).collect()))
            .collect();
        return Ok(ParsedPacking {
            packing: Packing::new(bins),
            unknown,
        });
    }

    let single_char = instance.colors().single_char_names();
    let mut bins = Vec::new();
    // Line breaks are treated like bin separators.
    let joined = trimmed
        .lines()
        .map(str::trim)
        .collect::<Vec<_>>()
        .join(" / ");
    if joined.trim().is_empty() {
        return Ok(ParsedPacking {
            packing: Packing::default(),
            unknown,
        });
    }
    for (i, token) in joined.split('/').enumerate() {
        let token = token.trim();
        let names: Vec<String> = if token.contains(',') || !single_char {
            token
                .split(',')
                .map(|s| s.trim().to_owned())
                .filter(|s| !s.is_empty())
                .collect()
        } else {
            token
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(String::from)
                .collect()
        };
        if let Some(bad) = names.iter().find(|n| !is_valid_color_name(n)) {
            return Err(ParseError::new(
                1,
                ParseErrorKind::InvalidName(format!("{bad} (bin {i})")),
            ));
        }
        bins.push(Bin::from_items(names.iter().map(|n| resolve(n)).collect()));
    }
    Ok(ParsedPacking {
        packing: Packing::new(bins),
        unknown,
    })
}
