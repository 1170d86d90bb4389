mod lemmas;
mod region;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use xipos::bounds::{epsilon_t, find_threshold_in, THRESHOLD_WINDOW};
use xipos::regions::{self, emit_csv, emit_svg, scan, SvgStyle};
use xipos::sums::{re_sum_critical, s1_s2, truncation_tail_estimate};
use xipos::{BoundParams, Decimal, EpsilonVariant, EvalPoint, TableManifest, ZeroTable};

use report::{Check, Report};

/// Explicit bounds for Re ξ′/ξ near the critical line, checked against
/// zeta-zero tables.
#[derive(Parser)]
#[command(name = "xipos", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Fraction of zeros known to lie on the critical line.
    #[arg(long, global = true, default_value = "1")]
    c: Decimal,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Locate the sign change of 0.28 − ε(t).
    VerifyThreshold {
        /// Restrict to one reading of ε(t); both are reported by default.
        #[arg(long)]
        variant: Option<EpsilonVariant>,
        /// Search window `lo,hi`.
        #[arg(long, value_parser = parse_window)]
        window: Option<(Decimal, Decimal)>,
    },
    /// Run the lemma checks, optionally against zero tables.
    CheckLemmas {
        /// Table manifest (repeatable).
        #[arg(long)]
        table: Vec<PathBuf>,
    },
    /// Evaluate Re Σ 1/(s − ρ) over a range of tabulated zeros.
    Sum(SumArgs),
    /// Scan a region and write CSV and SVG.
    Region(RegionArgs),
}

#[derive(Args)]
struct SumArgs {
    #[arg(long)]
    table: PathBuf,
    #[arg(long)]
    sigma: Decimal,
    /// Height measured from the table's base height.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "at_zero")]
    t_offset: Option<Decimal>,
    /// Evaluate at the ordinate of this zero.
    #[arg(long)]
    at_zero: Option<u64>,
    /// First zero index of the sum (defaults to the table's first, or `--at-zero`).
    #[arg(long)]
    from: Option<u64>,
    /// Number of zeros summed (defaults to the rest of the table).
    #[arg(long)]
    count: Option<u64>,
}

#[derive(Args)]
struct RegionArgs {
    /// fig1, scenario1, scenario2 or merging.
    #[arg(long, conflicts_with = "manifest")]
    preset: Option<String>,
    /// Run manifest describing a custom scan.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Table manifest (needed by fig1).
    #[arg(long)]
    table: Option<PathBuf>,
    /// Hypothetical zero `beta,gamma` replacing the preset placeholders (repeatable).
    #[arg(long)]
    zero: Vec<String>,
    /// Lattice points per axis for presets.
    #[arg(long)]
    resolution: Option<usize>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn parse_window(s: &str) -> std::result::Result<(Decimal, Decimal), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let lo: Decimal = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: Decimal = hi.parse().map_err(|e| format!("{e}"))?;
    Ok((lo, hi))
}

fn load_table(path: &Path) -> Result<ZeroTable> {
    let manifest =
        TableManifest::from_path(path).with_context(|| format!("reading manifest {}", path.display()))?;
    manifest.load().with_context(|| format!("loading table {}", manifest.path.display()))
}

fn two_sig_figs(x: f64) -> f64 {
    let exp = x.abs().log10().floor() - 1.0;
    let scale = 10f64.powf(exp);
    (x / scale).round() * scale
}

fn verify_threshold(
    report: &mut Report,
    variant: Option<EpsilonVariant>,
    window: Option<(Decimal, Decimal)>,
) -> Result<()> {
    let (lo, hi) = match &window {
        Some((lo, hi)) => {
            report.input("window", format!("{lo},{hi}"));
            (lo.value(), hi.value())
        }
        None => THRESHOLD_WINDOW,
    };
    let variants = match variant {
        Some(v) => {
            report.input("variant", v);
            vec![v]
        }
        None => EpsilonVariant::ALL.to_vec(),
    };
    for v in variants {
        let th = find_threshold_in(v, lo, hi)?;
        let after = 0.28 - epsilon_t(2.0 * th.root, v)?;
        let before = 0.28 - epsilon_t(th.root / 2.0, v)?;
        report.value(
            &format!("threshold.{v}"),
            json!({
                "root": th.root,
                "bracket": [th.bracket.0, th.bracket.1],
                "scan_points": th.scan_points,
                "margin_at_2root": after,
                "margin_at_half_root": before,
            }),
        );
        let rounded = two_sig_figs(th.root);
        report.check(Check::new(
            &format!("threshold({v})"),
            (rounded - 3.1e10).abs() < 1e-3 * 3.1e10 && after > 0.0 && before < 0.0,
            Some(0.05e10 - (th.root - 3.1e10).abs()),
            format!(
                "root {:.6e} ≈ {rounded:.1e}; single sign change over {} scan points in [{lo:e}, {hi:e}]",
                th.root, th.scan_points
            ),
        ));
    }
    Ok(())
}

fn sum_command(report: &mut Report, c: f64, args: SumArgs) -> Result<()> {
    let SumArgs { table: table_path, sigma, t_offset, at_zero, from, count } = args;
    let table = load_table(&table_path)?;
    report.input("table", table_path.display());
    report.input("sigma", &sigma);
    let offset = match (&t_offset, at_zero) {
        (Some(t), _) => {
            report.input("t_offset", t);
            t.value()
        }
        (None, Some(k)) => {
            report.input("at_zero", k);
            table.ordinate(k)?.1
        }
        (None, None) => bail!("give --t-offset or --at-zero"),
    };
    let first = from.or(at_zero).unwrap_or(table.first_index());
    let last = match count {
        Some(n) if n >= 1 => first + n - 1,
        Some(_) => bail!("--count must be positive"),
        None => table.last_index(),
    };
    let range = first..=last;
    let point = EvalPoint::with_base(sigma.value(), table.base_height(), offset)?;
    let value = re_sum_critical(&point, &table, &range)?;
    let (s1, s2) = s1_s2(&point, &table, &range)?;
    let level = 0.28 * c / (sigma.value() - 0.5);
    report.value("range", format!("{first}..={last}"));
    report.value("t", format!("{} + {offset}", table.base_height_text()));
    report.value("re_sum", value);
    report.value("s1", s1);
    report.value("s2", s2);
    report.value("threshold_0.28c_over_sigma_minus_half", level);
    if last == table.last_index() && table.first_index() == 1 {
        if let Ok(tail) = truncation_tail_estimate(&point, table.max_height()) {
            report.value("omitted_tail_upper_bound", tail);
        }
    }
    report.check(Check::new(
        "sum_exceeds_threshold",
        sigma.value() > 0.5 && level < value,
        Some(value - level),
        format!("Re Σ = {value:.9} vs 0.28c/(σ − 1/2) = {level:.9}"),
    ));
    Ok(())
}

fn region_command(report: &mut Report, c: f64, args: RegionArgs) -> Result<()> {
    let RegionArgs { preset, manifest, table, zero, resolution, out } = args;
    let (name, criterion, spec) = match (preset, manifest) {
        (Some(name), None) => {
            report.input("preset", &name);
            let table = match &table {
                Some(p) => {
                    report.input("table", p.display());
                    Some(Arc::new(load_table(p)?))
                }
                None => None,
            };
            let zeros = if zero.is_empty() {
                None
            } else {
                for (i, z) in zero.iter().enumerate() {
                    report.input(&format!("zero.{}", i + 1), z);
                }
                Some(zero.iter().map(|z| region::parse_zero(z)).collect::<Result<Vec<_>>>()?)
            };
            let (criterion, mut spec) = regions::preset(&name, c, table, zeros)?;
            if let Some(n) = resolution {
                report.input("resolution", n);
                spec.n_sigma = n;
                spec.n_t = n;
            }
            (name, criterion, spec)
        }
        (None, Some(path)) => {
            report.input("manifest", path.display());
            let m = region::load(&path)?;
            for (k, v) in &m.params {
                report.input(k, v);
            }
            (m.name, m.criterion, m.spec)
        }
        _ => bail!("give exactly one of --preset or --manifest"),
    };
    let grid = scan(&criterion, &spec)?;
    fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
    let csv_path = out.join(format!("{name}.csv"));
    let svg_path = out.join(format!("{name}.svg"));
    let csv = fs::File::create(&csv_path).with_context(|| format!("creating {}", csv_path.display()))?;
    emit_csv(&grid, std::io::BufWriter::new(csv))?;
    let svg = fs::File::create(&svg_path).with_context(|| format!("creating {}", svg_path.display()))?;
    let style = SvgStyle { title: Some(format!("{name}: {}", criterion.kind.as_str())), ..SvgStyle::default() };
    emit_svg(&grid, &style, std::io::BufWriter::new(svg))?;
    report.value("kind", criterion.kind.as_str());
    report.value("lattice", format!("{} x {} (sigma x t)", spec.n_sigma, spec.n_t));
    report.value("t_base", spec.t_base);
    report.value("t_offset_range", json!([spec.t_min, spec.t_max]));
    report.value("cells_in_region", grid.count_true());
    report.value("csv", csv_path.display().to_string());
    report.value("svg", svg_path.display().to_string());
    Ok(())
}

fn run(cli: Cli) -> Result<Report> {
    let c = cli.c.value();
    let params = BoundParams::with_c(c)?;
    let mut report;
    match cli.command {
        Command::VerifyThreshold { variant, window } => {
            report = Report::new("verify-threshold");
            report.input("c", &cli.c);
            verify_threshold(&mut report, variant, window)?;
        }
        Command::CheckLemmas { table } => {
            report = Report::new("check-lemmas");
            report.input("c", &cli.c);
            let mut tables = Vec::new();
            for (i, path) in table.iter().enumerate() {
                report.input(&format!("table.{}", i + 1), path.display());
                tables.push((path.display().to_string(), load_table(path)?));
            }
            lemmas::run(&mut report, &params, &tables)?;
        }
        Command::Sum(args) => {
            report = Report::new("sum");
            report.input("c", &cli.c);
            sum_command(&mut report, c, args)?;
        }
        Command::Region(args) => {
            report = Report::new("region");
            report.input("c", &cli.c);
            report.input("out", args.out.display());
            region_command(&mut report, c, args)?;
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_out = cli.json;
    match run(cli) {
        Ok(report) => {
            if json_out {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.render_text());
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            if json_out {
                let msg = json!({ "error": format!("{err:#}") });
                println!("{}", serde_json::to_string_pretty(&msg).expect("error serializes"));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(2)
        }
    }
}
