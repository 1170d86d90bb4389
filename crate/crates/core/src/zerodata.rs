//! Zeta-zero ordinate tables.
//!
//! Tables follow the layout of the publicly distributed Odlyzko files: one
//! decimal number per line, blank lines and `#` comments ignored. High tables
//! store offsets from a large base height; the base and the index of the first
//! zero travel out of band, either as arguments or through a small manifest.
//!
//! Ordinates are kept in offset form. Near 2.68·10¹¹ an absolute height in
//! `f64` carries only about five decimals while consecutive zeros sit ~0.2
//! apart, so differences `t − γ` must be formed between offsets.

use std::fs;
use std::io::{self, BufRead, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use crate::decimal::Decimal;
use crate::error::{domain, Error, Result};
use crate::GAMMA1;

/// Immutable table of consecutive zero ordinates `base_height + offsets[i]`.
#[derive(Debug, Clone)]
pub struct ZeroTable {
    base_height: Decimal,
    offsets: Vec<f64>,
    first_index: u64,
    source_label: String,
}

// Tables are printed to nine decimals; the lowest ordinate may be rounded.
const GAMMA1_SLACK: f64 = 5e-9;

impl ZeroTable {
    pub fn new(
        base_height: Decimal,
        offsets: Vec<f64>,
        first_index: u64,
        source_label: impl Into<String>,
    ) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::Empty);
        }
        let mut prev = 0.0;
        for (i, &x) in offsets.iter().enumerate() {
            if !(x > prev) {
                return Err(Error::NonMonotone { line: i + 1, value: x });
            }
            prev = x;
        }
        Self::validated(base_height, offsets, first_index, source_label.into())
    }

    fn validated(
        base_height: Decimal,
        offsets: Vec<f64>,
        first_index: u64,
        source_label: String,
    ) -> Result<Self> {
        if first_index < 1 {
            return Err(domain("zero table", "first_index must be at least 1"));
        }
        if base_height.value() < 0.0 {
            return Err(domain("zero table", "base height must be nonnegative"));
        }
        if base_height.value() + offsets[0] < GAMMA1 - GAMMA1_SLACK {
            return Err(domain(
                "zero table",
                format!("first ordinate {} lies below γ₁", base_height.value() + offsets[0]),
            ));
        }
        Ok(ZeroTable { base_height, offsets, first_index, source_label })
    }

    /// Parses a plain-text table. Line numbers in errors are 1-based and count
    /// every physical line, comments included.
    pub fn parse<R: BufRead>(
        reader: R,
        base_height: Decimal,
        first_index: u64,
        source_label: impl Into<String>,
    ) -> Result<Self> {
        let mut offsets = Vec::new();
        let mut prev = 0.0;
        for (i, line) in reader.lines().enumerate() {
            let line_no = i + 1;
            let line = line?;
            let token = line.trim();
            if token.is_empty() || token.starts_with('#') {
                continue;
            }
            let value = token
                .parse::<Decimal>()
                .map_err(|_| Error::MalformedLine { line: line_no, token: token.to_string() })?
                .value();
            if !(value > prev) {
                return Err(Error::NonMonotone { line: line_no, value });
            }
            prev = value;
            offsets.push(value);
        }
        if offsets.is_empty() {
            return Err(Error::Empty);
        }
        Self::validated(base_height, offsets, first_index, source_label.into())
    }

    pub fn parse_str(
        text: &str,
        base_height: Decimal,
        first_index: u64,
        source_label: impl Into<String>,
    ) -> Result<Self> {
        Self::parse(text.as_bytes(), base_height, first_index, source_label)
    }

    pub fn from_path(path: &Path, base_height: Decimal, first_index: u64) -> Result<Self> {
        let file = fs::File::open(path)?;
        Self::parse(io::BufReader::new(file), base_height, first_index, path.display().to_string())
    }

    pub fn base_height(&self) -> f64 {
        self.base_height.value()
    }

    pub fn base_height_text(&self) -> &str {
        self.base_height.text()
    }

    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn first_index(&self) -> u64 {
        self.first_index
    }

    pub fn last_index(&self) -> u64 {
        self.first_index + self.offsets.len() as u64 - 1
    }

    pub fn index_range(&self) -> RangeInclusive<u64> {
        self.first_index..=self.last_index()
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// Largest ordinate, as an absolute height.
    pub fn max_height(&self) -> f64 {
        self.base_height() + self.offsets[self.offsets.len() - 1]
    }

    /// Number of ordinates ≤ `t`, or `None` when the table cannot answer:
    /// it does not start at the first zero, or `t` lies past its last entry.
    pub fn count_up_to(&self, t: f64) -> Option<u64> {
        if self.first_index != 1 || t > self.max_height() {
            return None;
        }
        let rel = t - self.base_height();
        Some(self.offsets.partition_point(|&x| x <= rel) as u64)
    }

    /// `(base_height, offset)` of the k-th zero (1-based global numbering).
    pub fn ordinate(&self, k: u64) -> Result<(f64, f64)> {
        let i = self.position(k)?;
        Ok((self.base_height(), self.offsets[i]))
    }

    pub(crate) fn position(&self, k: u64) -> Result<usize> {
        if k < self.first_index || k > self.last_index() {
            return Err(Error::IndexOutOfRange {
                index: k,
                first: self.first_index,
                last: self.last_index(),
            });
        }
        Ok((k - self.first_index) as usize)
    }

    /// Offsets for the global index range `range`, after bounds checks.
    pub fn slice(&self, range: &RangeInclusive<u64>) -> Result<&[f64]> {
        let lo = self.position(*range.start())?;
        let hi = self.position(*range.end())?;
        if lo > hi {
            return Ok(&[]);
        }
        Ok(&self.offsets[lo..=hi])
    }

    /// Writes the table in the same format `parse` reads. Offsets use the
    /// shortest representation that parses back to the same `f64`.
    pub fn write_plain<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "# {}", self.source_label)?;
        writeln!(w, "# base {}, first index {}", self.base_height, self.first_index)?;
        for x in &self.offsets {
            writeln!(w, "{x}")?;
        }
        Ok(())
    }
}

/// One table entry of a manifest: `path`, `base`, `first_index` as
/// `key=value` lines. Relative paths resolve against the manifest's directory.
#[derive(Debug, Clone, PartialEq)]
pub struct TableManifest {
    pub path: PathBuf,
    pub base: Decimal,
    pub first_index: u64,
}

impl TableManifest {
    pub fn parse(text: &str, dir: &Path) -> Result<Self> {
        let mut path = None;
        let mut base = None;
        let mut first_index = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = || Error::MalformedLine { line: i + 1, token: line.to_string() };
            let (key, value) = line.split_once('=').ok_or_else(malformed)?;
            let value = value.trim();
            match key.trim() {
                "path" => path = Some(dir.join(value)),
                "base" => base = Some(value.parse::<Decimal>().map_err(|_| malformed())?),
                "first_index" => first_index = Some(value.parse::<u64>().map_err(|_| malformed())?),
                _ => return Err(malformed()),
            }
        }
        Ok(TableManifest {
            path: path.ok_or_else(|| domain("table manifest", "missing `path`"))?,
            base: base.unwrap_or_else(|| Decimal::from(0.0)),
            first_index: first_index.unwrap_or(1),
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text, path.parent().unwrap_or_else(|| Path::new(".")))
    }

    pub fn load(&self) -> Result<ZeroTable> {
        ZeroTable::from_path(&self.path, self.base.clone(), self.first_index)
    }
}
