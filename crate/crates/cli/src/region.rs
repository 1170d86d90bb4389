//! `key = value` run manifests for custom region scans.
//!
//! ```text
//! kind = hypothetical_finite
//! c = 1
//! sigma = 0.5, 1
//! t_base = 4000000000000
//! t = 0, 3
//! resolution = 200, 200
//! zero = 0.75, 4000000000001.5
//! ```
//!
//! `critical_finite_sum` takes `table = <table manifest>` and `range = k1, k2`
//! instead of `zero` lines. Relative paths resolve against the manifest.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use xipos::regions::{GridSpec, RegionCriterion, RegionKind, ZeroSource, DEFAULT_RESOLUTION};
use xipos::{Decimal, HypotheticalZero, TableManifest};

pub struct RunManifest {
    pub name: String,
    pub criterion: RegionCriterion,
    pub spec: GridSpec,
    /// Every key with its exact source text, for echoing.
    pub params: BTreeMap<String, String>,
}

fn decimals(value: &str, n: usize, key: &str) -> Result<Vec<Decimal>> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != n {
        bail!("`{key}` needs {n} comma-separated numbers, got `{value}`");
    }
    parts
        .iter()
        .map(|p| p.parse::<Decimal>().map_err(|e| anyhow!("`{key}`: {e}")))
        .collect()
}

pub fn parse_zero(value: &str) -> Result<HypotheticalZero> {
    let d = decimals(value, 2, "zero")?;
    Ok(HypotheticalZero::new(d[0].value(), d[1].value())?)
}

pub fn load(path: &Path) -> Result<RunManifest> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut params = BTreeMap::new();
    let mut zeros = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected `key = value`", path.display(), i + 1))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "zero" {
            zeros.push(parse_zero(value).with_context(|| format!("{}:{}", path.display(), i + 1))?);
            params.insert(format!("zero.{}", zeros.len()), value.to_string());
        } else {
            params.insert(key.to_string(), value.to_string());
        }
    }
    let get = |k: &str| params.get(k).map(String::as_str);
    let kind: RegionKind = get("kind")
        .ok_or_else(|| anyhow!("manifest needs `kind`"))?
        .parse()
        .map_err(|e: String| anyhow!(e))?;
    let c = match get("c") {
        Some(v) => v.parse::<Decimal>()?.value(),
        None => 1.0,
    };
    let sigma = match get("sigma") {
        Some(v) => decimals(v, 2, "sigma")?.iter().map(Decimal::value).collect(),
        None => vec![0.5, 1.0],
    };
    let t = decimals(get("t").ok_or_else(|| anyhow!("manifest needs `t = lo, hi`"))?, 2, "t")?;
    let t_base = match get("t_base") {
        Some(v) => v.parse::<Decimal>()?.value(),
        None => 0.0,
    };
    let (n_sigma, n_t) = match get("resolution") {
        Some(v) => {
            let parts: Vec<&str> = v.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                bail!("`resolution` needs two integers");
            }
            (parts[0].parse()?, parts[1].parse()?)
        }
        None => (DEFAULT_RESOLUTION, DEFAULT_RESOLUTION),
    };
    let source = match kind {
        RegionKind::CriticalFiniteSum => {
            let table_path = dir.join(get("table").ok_or_else(|| anyhow!("manifest needs `table`"))?);
            let table = TableManifest::from_path(&table_path)
                .and_then(|m| m.load())
                .with_context(|| format!("loading {}", table_path.display()))?;
            let range = match get("range") {
                Some(v) => {
                    let parts: Vec<&str> = v.split(',').map(str::trim).collect();
                    if parts.len() != 2 {
                        bail!("`range` needs two indices");
                    }
                    parts[0].parse::<u64>()?..=parts[1].parse::<u64>()?
                }
                None => table.index_range(),
            };
            Some(ZeroSource::Table { table: Arc::new(table), k_range: range })
        }
        _ if zeros.is_empty() => None,
        _ => Some(ZeroSource::Hypothetical(zeros)),
    };
    let name = get("name")
        .map(str::to_string)
        .or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "region".into());
    let spec = GridSpec {
        sigma_min: sigma[0],
        sigma_max: sigma[1],
        n_sigma,
        t_base,
        t_min: t[0].value(),
        t_max: t[1].value(),
        n_t,
    };
    Ok(RunManifest { name, criterion: RegionCriterion::new(kind, c, source), spec, params })
}
