//! Membership scans of (σ, t) lattices and their CSV/SVG emission.

use std::fmt::Write as _;
use std::io::{BufRead, Write};
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use crate::bounds::tail_bound_hypothetical;
use crate::error::{domain, Error, Result};
use crate::sums::{neumaier_sum, re_sum_critical, EvalPoint, HypotheticalZero};
use crate::zerodata::ZeroTable;

pub const DEFAULT_RESOLUTION: usize = 400;

/// A rectangular lattice. Points include both ends of each axis; heights are
/// `t_base + t_offset` with offsets in `[t_min, t_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub n_sigma: usize,
    pub t_base: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub n_t: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        let ok_sigma = 0.0 <= self.sigma_min && self.sigma_min < self.sigma_max && self.sigma_max <= 1.0;
        if !ok_sigma {
            return Err(domain(
                "GridSpec",
                format!("σ range [{}, {}] not inside [0, 1]", self.sigma_min, self.sigma_max),
            ));
        }
        if !(self.t_min < self.t_max) || !self.t_base.is_finite() {
            return Err(domain("GridSpec", "t_min must be below t_max"));
        }
        if self.n_sigma < 1 || self.n_t < 1 {
            return Err(domain("GridSpec", "resolutions must be positive"));
        }
        Ok(())
    }

    fn axis(lo: f64, hi: f64, n: usize, j: usize) -> f64 {
        if n == 1 {
            lo
        } else {
            lo + (hi - lo) * (j as f64 / (n - 1) as f64)
        }
    }

    pub fn sigma_at(&self, j: usize) -> f64 {
        Self::axis(self.sigma_min, self.sigma_max, self.n_sigma, j)
    }

    pub fn t_offset_at(&self, i: usize) -> f64 {
        Self::axis(self.t_min, self.t_max, self.n_t, i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionKind {
    /// 0.28c/(σ − ½) < Σ over a table range.
    CriticalFiniteSum,
    /// Σ (σ − β̃)/((σ − β̃)² + (t − γ̃)²) > −0.28c/(σ − ½).
    HypotheticalFinite,
    /// As above with ½·(tail bound) subtracted from the left side.
    HypotheticalInfinite,
}

impl RegionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionKind::CriticalFiniteSum => "critical_finite_sum",
            RegionKind::HypotheticalFinite => "hypothetical_finite",
            RegionKind::HypotheticalInfinite => "hypothetical_infinite",
        }
    }
}

impl FromStr for RegionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "critical_finite_sum" => Ok(RegionKind::CriticalFiniteSum),
            "hypothetical_finite" => Ok(RegionKind::HypotheticalFinite),
            "hypothetical_infinite" => Ok(RegionKind::HypotheticalInfinite),
            other => Err(format!("unknown region kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub enum ZeroSource {
    Table { table: Arc<ZeroTable>, k_range: RangeInclusive<u64> },
    Hypothetical(Vec<HypotheticalZero>),
}

#[derive(Debug, Clone)]
pub struct RegionCriterion {
    pub kind: RegionKind,
    pub c: f64,
    pub threshold_constant: f64,
    pub source: Option<ZeroSource>,
}

impl RegionCriterion {
    pub fn new(kind: RegionKind, c: f64, source: Option<ZeroSource>) -> Self {
        RegionCriterion { kind, c, threshold_constant: 0.28, source }
    }

    fn checked_source(&self) -> Result<&ZeroSource> {
        match (&self.kind, &self.source) {
            (RegionKind::CriticalFiniteSum, Some(s @ ZeroSource::Table { .. })) => Ok(s),
            (RegionKind::CriticalFiniteSum, _) => {
                Err(Error::SourceMissing("critical_finite_sum needs a zero table range"))
            }
            (_, Some(s @ ZeroSource::Hypothetical(_))) => Ok(s),
            (_, _) => Err(Error::SourceMissing("hypothetical kinds need a hypothetical zero list")),
        }
    }
}

/// Boolean mask over a [`GridSpec`], row-major with t outer and σ inner.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    pub spec: GridSpec,
    pub mask: Vec<bool>,
}

impl RegionGrid {
    pub fn get(&self, i_t: usize, j_sigma: usize) -> bool {
        self.mask[i_t * self.spec.n_sigma + j_sigma]
    }

    pub fn count_true(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }
}

fn near_sum(sigma: f64, t_base: f64, t_offset: f64, zeros: &[HypotheticalZero]) -> f64 {
    neumaier_sum(zeros.iter().map(|z| {
        let x = sigma - z.beta();
        let d = (t_base - z.gamma()) + t_offset;
        if x == 0.0 {
            0.0
        } else {
            x / (x * x + d * d)
        }
    }))
}

/// Evaluates the strict inequality of `criterion` at one lattice point.
/// Points with σ ≤ ½ are outside every region.
pub fn in_region(criterion: &RegionCriterion, sigma: f64, t_base: f64, t_offset: f64) -> Result<bool> {
    let source = criterion.checked_source()?;
    let x = sigma - 0.5;
    if !(x > 0.0) {
        return Ok(false);
    }
    let level = criterion.threshold_constant * criterion.c / x;
    match (criterion.kind, source) {
        (RegionKind::CriticalFiniteSum, ZeroSource::Table { table, k_range }) => {
            // σ = 1 is a lattice edge; the sum itself is defined there.
            let point = EvalPoint::unchecked(sigma, t_base, t_offset);
            let sum = re_sum_critical(&point, table, k_range)?;
            Ok(level < sum)
        }
        (RegionKind::HypotheticalFinite, ZeroSource::Hypothetical(zeros)) => {
            Ok(near_sum(sigma, t_base, t_offset, zeros) > -level)
        }
        (RegionKind::HypotheticalInfinite, ZeroSource::Hypothetical(zeros)) => {
            let mut lhs = near_sum(sigma, t_base, t_offset, zeros);
            if let Some(lowest) = zeros.iter().map(|z| z.gamma()).min_by(f64::total_cmp) {
                lhs -= 0.5 * tail_bound_hypothetical((t_base + t_offset).max(0.0), lowest)?;
            }
            Ok(lhs > -level)
        }
        _ => unreachable!("checked_source pairs kinds with sources"),
    }
}

pub fn scan(criterion: &RegionCriterion, spec: &GridSpec) -> Result<RegionGrid> {
    spec.validate()?;
    criterion.checked_source()?;
    let mut mask = Vec::with_capacity(spec.n_t * spec.n_sigma);
    for i in 0..spec.n_t {
        let t_offset = spec.t_offset_at(i);
        for j in 0..spec.n_sigma {
            mask.push(in_region(criterion, spec.sigma_at(j), spec.t_base, t_offset)?);
        }
    }
    Ok(RegionGrid { spec: spec.clone(), mask })
}

pub const CSV_HEADER: &str = "sigma,t_offset,in_region";

pub fn emit_csv<W: Write>(grid: &RegionGrid, mut sink: W) -> Result<()> {
    let mut out = String::with_capacity(grid.mask.len() * 24);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for i in 0..grid.spec.n_t {
        let t = grid.spec.t_offset_at(i);
        for j in 0..grid.spec.n_sigma {
            let flag = if grid.get(i, j) { 1 } else { 0 };
            let _ = writeln!(out, "{},{},{}", grid.spec.sigma_at(j), t, flag);
        }
    }
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(())
}

/// Reads back `(sigma, t_offset, in_region)` rows written by [`emit_csv`].
pub fn parse_csv<R: BufRead>(reader: R) -> Result<Vec<(f64, f64, bool)>> {
    let mut rows = Vec::new();
    for (n, line) in reader.lines().enumerate() {
        let line = line?;
        if n == 0 {
            if line.trim() != CSV_HEADER {
                return Err(Error::MalformedLine { line: 1, token: line });
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let bad = || Error::MalformedLine { line: n + 1, token: line.clone() };
        let mut cols = line.split(',');
        let sigma: f64 = cols.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let t: f64 = cols.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let flag = match cols.next() {
            Some("1") => true,
            Some("0") => false,
            _ => return Err(bad()),
        };
        if cols.next().is_some() {
            return Err(bad());
        }
        rows.push((sigma, t, flag));
    }
    Ok(rows)
}

#[derive(Debug, Clone)]
pub struct SvgStyle {
    pub width: f64,
    pub height: f64,
    pub fill: String,
    pub boundary: bool,
    pub title: Option<String>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { width: 640.0, height: 640.0, fill: "#a0a0a0".into(), boundary: true, title: None }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Static SVG 1.1: one gray rectangle per true lattice point, σ horizontal,
/// t vertical (increasing upwards), and the strip edge σ = ½ + 1/√(log t)
/// dashed where it falls inside the σ range.
pub fn emit_svg<W: Write>(grid: &RegionGrid, style: &SvgStyle, mut sink: W) -> Result<()> {
    let spec = &grid.spec;
    let (ml, mr, mt, mb) = (70.0, 20.0, 30.0, 50.0);
    let pw = style.width - ml - mr;
    let ph = style.height - mt - mb;
    let cw = pw / spec.n_sigma as f64;
    let ch = ph / spec.n_t as f64;
    let sigma_span = spec.sigma_max - spec.sigma_min;
    let t_span = spec.t_max - spec.t_min;
    let x_of = |sigma: f64| ml + cw / 2.0 + (sigma - spec.sigma_min) / sigma_span * (pw - cw);
    let y_of = |t: f64| mt + ph - ch / 2.0 - (t - spec.t_min) / t_span * (ph - ch);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        style.width, style.height, style.width, style.height
    );
    if let Some(title) = &style.title {
        let _ = writeln!(out, "<title>{}</title>", escape(title));
    }
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{:.0}" height="{:.0}" fill="white"/>"#, style.width, style.height);
    let _ = writeln!(out, r#"<g fill="{}" stroke="none">"#, escape(&style.fill));
    for i in 0..spec.n_t {
        for j in 0..spec.n_sigma {
            if grid.get(i, j) {
                let x = ml + j as f64 * cw;
                let y = mt + ph - (i + 1) as f64 * ch;
                let _ = writeln!(
                    out,
                    r#"<rect x="{x:.3}" y="{y:.3}" width="{:.3}" height="{:.3}"/>"#,
                    cw, ch
                );
            }
        }
    }
    let _ = writeln!(out, "</g>");

    if style.boundary {
        let mut pts = Vec::new();
        let samples = spec.n_t.max(2);
        for i in 0..samples {
            let t_off = GridSpec::axis(spec.t_min, spec.t_max, samples, i);
            let t = spec.t_base + t_off;
            if t > std::f64::consts::E {
                let sigma = 0.5 + 1.0 / t.ln().sqrt();
                if sigma >= spec.sigma_min && sigma <= spec.sigma_max {
                    pts.push(format!("{:.3},{:.3}", x_of(sigma), y_of(t_off)));
                }
            }
        }
        if pts.len() >= 2 {
            let _ = writeln!(
                out,
                r##"<polyline points="{}" fill="none" stroke="#505050" stroke-width="1.5" stroke-dasharray="6,4"/>"##,
                pts.join(" ")
            );
        }
    }

    let x0 = ml;
    let y0 = mt + ph;
    let _ = writeln!(
        out,
        r#"<g stroke="black" stroke-width="1" fill="none"><line x1="{x0:.3}" y1="{y0:.3}" x2="{:.3}" y2="{y0:.3}"/><line x1="{x0:.3}" y1="{y0:.3}" x2="{x0:.3}" y2="{mt:.3}"/></g>"#,
        ml + pw
    );
    let _ = writeln!(out, r#"<g font-family="serif" font-size="13" fill="black">"#);
    let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">σ</text>"#, ml + pw / 2.0, style.height - 12.0);
    let _ = writeln!(
        out,
        r#"<text x="18" y="{:.3}" text-anchor="middle" transform="rotate(-90 18 {:.3})">t</text>"#,
        mt + ph / 2.0,
        mt + ph / 2.0
    );
    let _ = writeln!(out, r#"<text x="{x0:.3}" y="{:.3}" text-anchor="start">{}</text>"#, y0 + 18.0, spec.sigma_min);
    let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{}</text>"#, ml + pw, y0 + 18.0, spec.sigma_max);
    let base = if spec.t_base != 0.0 { format!("{} + ", spec.t_base) } else { String::new() };
    let _ = writeln!(out, r#"<text x="{:.3}" y="{y0:.3}" text-anchor="end">{base}{}</text>"#, ml - 4.0, spec.t_min);
    let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{base}{}</text>"#, ml - 4.0, mt + 10.0, spec.t_max);
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(())
}

// Presets.

pub const PRESETS: [&str; 4] = ["fig1", "scenario1", "scenario2", "merging"];

/// Index of the first zero in the `fig1` window.
pub const FIG1_FIRST_INDEX: u64 = 1_000_000_000_001;

/// Heights for the placeholder hypothetical zeros, above the verified range.
pub const PRESET_T_BASE: f64 = 4e12;

/// Placeholder hypothetical zeros for a preset, as offsets from [`PRESET_T_BASE`].
pub fn preset_zeros(name: &str) -> Result<Vec<HypotheticalZero>> {
    let spec: &[(f64, f64)] = match name {
        "scenario1" => &[(0.75, 1.0)],
        "scenario2" => &[(0.62, 0.4), (0.85, 1.2), (0.7, 2.1)],
        "merging" => &[(0.68, 0.9), (0.72, 1.05), (0.66, 1.2)],
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    spec.iter().map(|&(b, g)| HypotheticalZero::new(b, PRESET_T_BASE + g)).collect()
}

/// Criterion and lattice of a named preset. `fig1` needs the table holding
/// zeros 10¹²+1 … 10¹²+10; the scenarios take `zeros` in place of the
/// placeholders when given.
pub fn preset(
    name: &str,
    c: f64,
    table: Option<Arc<ZeroTable>>,
    zeros: Option<Vec<HypotheticalZero>>,
) -> Result<(RegionCriterion, GridSpec)> {
    match name {
        "fig1" => {
            let table = table.ok_or(Error::SourceMissing("fig1 needs the table around zero 10^12+1"))?;
            let j = FIG1_FIRST_INDEX;
            let (_, first) = table.ordinate(j)?;
            table.ordinate(j + 9)?;
            let spec = GridSpec {
                sigma_min: 0.5,
                sigma_max: 1.0,
                n_sigma: DEFAULT_RESOLUTION,
                t_base: table.base_height(),
                t_min: first - 0.2,
                t_max: first + 2.7,
                n_t: DEFAULT_RESOLUTION,
            };
            let source = ZeroSource::Table { table, k_range: j..=j + 9 };
            Ok((RegionCriterion::new(RegionKind::CriticalFiniteSum, c, Some(source)), spec))
        }
        "scenario1" | "scenario2" | "merging" => {
            let zeros = match zeros {
                Some(z) => z,
                None => preset_zeros(name)?,
            };
            let (lo, hi) = zeros.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), z| {
                (lo.min(z.gamma()), hi.max(z.gamma()))
            });
            let (t_min, t_max) = if zeros.is_empty() {
                (0.0, 2.5)
            } else {
                (lo - PRESET_T_BASE - 1.0, hi - PRESET_T_BASE + 1.0)
            };
            let spec = GridSpec {
                sigma_min: 0.5,
                sigma_max: 1.0,
                n_sigma: DEFAULT_RESOLUTION,
                t_base: PRESET_T_BASE,
                t_min,
                t_max,
                n_t: DEFAULT_RESOLUTION,
            };
            let source = ZeroSource::Hypothetical(zeros);
            Ok((RegionCriterion::new(RegionKind::HypotheticalFinite, c, Some(source)), spec))
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}
