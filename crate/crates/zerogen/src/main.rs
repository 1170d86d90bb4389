//! Generates zeta-zero ordinate tables in the plain one-value-per-line format
//! read by `xipos`. Used to build the fixtures under `data/`.

mod dd;
mod search;
mod siegel;

use clap::{Parser, Subcommand};
use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "zerogen", about = "Riemann-Siegel zero table generator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print Z(base + offset) and θ(base + offset) mod 2π.
    Z {
        #[arg(long, default_value_t = 0.0)]
        base: f64,
        #[arg(long, allow_hyphen_values = true)]
        offset: Vec<f64>,
    },
    /// Isolate and refine consecutive zeros after a Gram point.
    Zeros {
        #[arg(long, default_value_t = 0.0)]
        base: f64,
        /// Gram index to start from (stepped back to a good Gram point).
        #[arg(long)]
        start_gram: i64,
        /// Rough offset of that Gram point.
        #[arg(long)]
        guess: f64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_offset: f64,
        /// "index value" lines, values measured from `base`: prepended below
        /// the first generated index and compared on overlap.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Drop generated zeros numbered below this index.
        #[arg(long)]
        min_index: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "")]
        label: String,
    },
}

fn read_reference(path: &PathBuf) -> BTreeMap<u64, String> {
    let text = fs::read_to_string(path).expect("reference file");
    text.lines()
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            Some((it.next()?.parse().ok()?, it.next()?.to_string()))
        })
        .collect()
}

fn main() {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Z { base, offset } => {
            let max = offset.iter().cloned().fold(0.0, f64::max);
            let z = siegel::SiegelZ::new(base, max);
            for x in offset {
                println!("{x} {:.15e} {:.15}", z.z(x), z.theta(x).rem_two_pi());
            }
        }
        Cmd::Zeros { base, start_gram, guess, count, max_offset, reference, min_index, out, label } => {
            let z = siegel::SiegelZ::new(base, max_offset);
            let mut zeros = search::zeros_from_gram(&z, start_gram, guess, count)
                .unwrap_or_else(|e| panic!("zero search failed: {e}"));
            if let Some(min) = min_index {
                zeros.retain(|zero| zero.index >= min);
            }
            let first = zeros[0].index;
            let reference = reference.as_ref().map(read_reference).unwrap_or_default();
            let mut worst: f64 = 0.0;
            for zero in &zeros {
                if let Some(r) = reference.get(&zero.index) {
                    let r: f64 = r.parse().unwrap();
                    worst = worst.max((r - zero.offset).abs());
                }
            }
            let prefix: Vec<(&u64, &String)> = reference.range(..first).collect();
            eprintln!(
                "generated {} zeros, indices {}..={}; {} prepended from reference; max |diff| on overlap {worst:e}",
                zeros.len(),
                first,
                zeros.last().unwrap().index,
                prefix.len()
            );
            let first_index = prefix.first().map(|p| *p.0).unwrap_or(first);
            let file = fs::File::create(&out).expect("output file");
            let mut w = BufWriter::new(file);
            writeln!(w, "# {label}").unwrap();
            writeln!(w, "# base {base:.0}, first index {first_index}").unwrap();
            for (_, v) in prefix {
                let v: f64 = v.parse().unwrap();
                writeln!(w, "{v:.9}").unwrap();
            }
            for zero in zeros {
                writeln!(w, "{:.9}", zero.offset).unwrap();
            }
        }
    }
}
