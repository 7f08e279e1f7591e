//! `pucks` command line: verification grids, involution audits, object
//! enumeration dumps, OEIS emission, and lattice-path rendering.
//!
//! Exit codes: 0 on success / all checks passing, 1 when a verification or
//! audit check fails, 2 for invalid arguments, malformed input, or an
//! enumeration-budget refusal.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pucks::exact::{binomial, composition_universe, composition_universe_size, Composition, ExactInt};
use pucks::identity::{self, VerificationReport, DEFAULT_BUDGET};
use pucks::involution::{audit, enumerate_universe, fixed_point_census, universe_size, Params};
use pucks::lattice::{enumerate_sequences, path_stats, LatticeSequence};
use pucks::tableau::{count_tableaux, enumerate_tableaux};
use pucks::Error;

use render::{Marker, MarkerRole, RenderFormat, RenderSpec};

#[derive(Parser)]
#[command(name = "pucks", version, about = "Exact verification of hockey-stick-style binomial identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the identity for k = 0..=K at fixed r and n.
    Verify {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "k-max")]
        k_max: usize,
        /// Also enumerate each universe and record its weight sum.
        #[arg(long)]
        audit: bool,
        /// Emit one JSON document instead of the human table.
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit CSV instead of the human table.
        #[arg(long)]
        csv: bool,
        /// Enumeration budget in universe elements.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Exhaustively audit the involution over one universe.
    Audit {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Write per-element records (element, case, mate index) as JSON.
        #[arg(long)]
        dump: Option<PathBuf>,
        /// Enumeration budget in universe elements.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List combinatorial objects in their canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Size bound (compositions, universe).
        #[arg(long)]
        k: Option<usize>,
        /// Part/label bound parameter (compositions, tableaux, universe).
        #[arg(long)]
        r: Option<usize>,
        /// Offset parameter (universe).
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated tableau shape; omit for the empty shape.
        #[arg(long)]
        shape: Option<String>,
        /// Sequence width (sequences).
        #[arg(long)]
        width: Option<usize>,
        /// Sequence height (sequences).
        #[arg(long)]
        height: Option<usize>,
        /// Emit one JSON document instead of one line per object.
        #[arg(long)]
        json: bool,
        /// Enumeration budget in elements.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List or tally the fixed points of the involution.
    FixedPoints {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Tally per vertical-rise class against the closed form.
        #[arg(long = "by-omega")]
        by_omega: bool,
        /// Enumeration budget in elements.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print leading terms of the sequence at fixed r and n.
    Oeis {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        terms: usize,
    },
    /// Draw a lattice sequence as an SVG document or an ASCII grid.
    Render {
        /// Comma-separated entries, e.g. 0,0,0,2,3,5.
        #[arg(long)]
        seq: String,
        /// Draw a dashed guide at this column.
        #[arg(long)]
        eta: Option<usize>,
        /// Also mark the rightmost ascent west of --eta.
        #[arg(long, requires = "eta")]
        gamma: bool,
        #[arg(long, value_enum)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG cell size in pixels.
        #[arg(long, default_value_t = 24)]
        cell: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Compositions,
    Tableaux,
    Sequences,
    Universe,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Verify {
            r,
            n,
            k_max,
            audit,
            json,
            csv,
            budget,
        } => {
            let reports = identity::verify_grid(r, n, k_max, audit, budget)?;
            if json {
                let docs: Vec<serde_json::Value> =
                    reports.iter().map(VerificationReport::to_json).collect();
                println!("{}", serde_json::Value::Array(docs));
            } else if csv {
                println!("{}", VerificationReport::csv_header());
                for report in &reports {
                    println!("{}", report.csv_row());
                }
            } else {
                print_verify_table(&reports);
            }
            let passed = reports.iter().all(VerificationReport::passed);
            Ok(exit_flag(passed))
        }
        Command::Audit {
            r,
            n,
            k,
            dump,
            budget,
        } => {
            check_budget(universe_size(k, n, r), budget)?;
            let report = audit(k, n, r);
            println!("audit {}", Params::new(k, n, r));
            println!("universe size: {}", report.universe_size);
            println!("fixed points: {}", report.fixed_count);
            println!("weight sum: {}", report.weight_sum);
            println!("involution (tau o tau = id): {}", ok(report.involution_ok));
            println!("sign reversal: {}", ok(report.sign_ok));
            println!("fixed-point characterization: {}", ok(report.fixed_set_ok));
            println!("case pairing: {}", ok(report.case_pairing_ok));
            println!("type invariants: {}", ok(report.type_ok));
            println!("result: {}", if report.passed() { "pass" } else { "fail" });
            if let Some(path) = dump {
                fs::write(&path, report.records_json().to_string())?;
            }
            Ok(exit_flag(report.passed()))
        }
        Command::Enumerate {
            kind,
            k,
            r,
            n,
            shape,
            width,
            height,
            json,
            budget,
        } => run_enumerate(kind, k, r, n, shape, width, height, json, budget),
        Command::FixedPoints {
            r,
            n,
            k,
            by_omega,
            budget,
        } => {
            let eta = Params::new(k, n, r).eta();
            check_budget(binomial((eta + k) as u64, k as i64), budget)?;
            if by_omega {
                let census = fixed_point_census(k, n, r);
                println!("fixed points {}", Params::new(k, n, r));
                let mut total = 0usize;
                let mut all_match = true;
                println!("omega  i  count  expected  status");
                for class in &census {
                    let expected = binomial(((r + 1) * class.i + n) as u64, class.i as i64);
                    let matches = ExactInt::from(class.count) == expected;
                    all_match &= matches;
                    total += class.count;
                    println!(
                        "{:>5}  {}  {:>5}  {:>8}  {}",
                        class.omega,
                        class.i,
                        class.count,
                        expected,
                        if matches { "ok" } else { "MISMATCH" }
                    );
                }
                println!("total: {total}");
                Ok(exit_flag(all_match))
            } else {
                let fixed = pucks::involution::fixed_points(k, n, r);
                for x in &fixed {
                    println!("{}", x.sequence());
                }
                println!("total: {}", fixed.len());
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Oeis { r, n, terms } => {
            let values = identity::oeis_terms(r, n, terms);
            let rendered: Vec<String> = values.iter().map(ExactInt::to_string).collect();
            println!("{}", rendered.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Render {
            seq,
            eta,
            gamma,
            format,
            out,
            cell,
        } => {
            let sequence = parse_sequence(&seq)?;
            let mut markers = Vec::new();
            if let Some(eta) = eta {
                let stats = path_stats(&sequence, eta)?;
                markers.push(Marker {
                    x: eta,
                    role: MarkerRole::Eta,
                });
                if gamma && stats.gamma >= 0 {
                    markers.push(Marker {
                        x: stats.gamma as usize,
                        role: MarkerRole::Gamma,
                    });
                }
            }
            let spec = RenderSpec {
                sequence,
                markers,
                format: match format {
                    Format::Svg => RenderFormat::Svg,
                    Format::Ascii => RenderFormat::Ascii,
                },
                cell,
            };
            let drawing = spec.render()?;
            match out {
                Some(path) => fs::write(&path, drawing)?,
                None => print!("{drawing}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_enumerate(
    kind: Kind,
    k: Option<usize>,
    r: Option<usize>,
    n: Option<usize>,
    shape: Option<String>,
    width: Option<usize>,
    height: Option<usize>,
    json: bool,
    budget: u64,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match kind {
        Kind::Compositions => {
            let k = require(k, "--k")?;
            let r = require(r, "--r")?;
            check_budget(composition_universe_size(k, r), budget)?;
            let items = composition_universe(k, r);
            if json {
                println!("{}", serde_json::to_string(&items)?);
            } else {
                for alpha in &items {
                    println!("{alpha}");
                }
                println!("total: {}", items.len());
            }
        }
        Kind::Tableaux => {
            let r = require(r, "--r")?;
            let shape = match shape {
                Some(text) => parse_shape(&text)?,
                None => Composition::empty(),
            };
            check_budget(count_tableaux(&shape, r), budget)?;
            let items = enumerate_tableaux(&shape, r)?;
            if json {
                println!("{}", serde_json::to_string(&items)?);
            } else {
                for tableau in &items {
                    println!("{tableau}");
                }
                println!("total: {}", items.len());
            }
        }
        Kind::Sequences => {
            let width = require(width, "--width")?;
            let height = require(height, "--height")?;
            check_budget(binomial((width + height) as u64, width as i64), budget)?;
            let items = enumerate_sequences(width, height);
            if json {
                println!("{}", serde_json::to_string(&items)?);
            } else {
                for sequence in &items {
                    println!("{sequence}");
                }
                println!("total: {}", items.len());
            }
        }
        Kind::Universe => {
            let k = require(k, "--k")?;
            let n = require(n, "--n")?;
            let r = require(r, "--r")?;
            check_budget(universe_size(k, n, r), budget)?;
            let items = enumerate_universe(k, n, r);
            if json {
                println!("{}", serde_json::to_string(&items)?);
            } else {
                for x in &items {
                    println!(
                        "shape={} tableau={} seq={}",
                        x.tableau().shape(),
                        x.tableau(),
                        x.sequence()
                    );
                }
                println!("total: {}", items.len());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_verify_table(reports: &[VerificationReport]) {
    let headers = ["k", "n", "r", "lhs", "rhs", "weight_sum", "universe", "status"];
    let rows: Vec<[String; 8]> = reports
        .iter()
        .map(|rep| {
            [
                rep.k.to_string(),
                rep.n.to_string(),
                rep.r.to_string(),
                rep.lhs.to_string(),
                rep.rhs.to_string(),
                rep.weight_sum
                    .as_ref()
                    .map_or_else(|| "-".into(), ExactInt::to_string),
                rep.universe_size
                    .map_or_else(|| "-".into(), |u| u.to_string()),
                rep.status().to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, header)| {
            rows.iter()
                .map(|row| row[i].len())
                .chain(std::iter::once(header.len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let render_row = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:>width$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    println!("{}", render_row(&header_cells));
    for row in &rows {
        println!("{}", render_row(row));
    }
    let passed = reports.iter().filter(|rep| rep.passed()).count();
    println!("{passed}/{} pass", reports.len());
}

fn parse_sequence(text: &str) -> Result<LatticeSequence, Box<dyn std::error::Error>> {
    let entries = text
        .split(',')
        .map(|piece| piece.trim().parse::<i64>())
        .collect::<Result<Vec<i64>, _>>()
        .map_err(|e| format!("invalid sequence entry in {text:?}: {e}"))?;
    Ok(LatticeSequence::new(entries)?)
}

fn parse_shape(text: &str) -> Result<Composition, Box<dyn std::error::Error>> {
    if text.trim().is_empty() {
        return Ok(Composition::empty());
    }
    let parts = text
        .split(',')
        .map(|piece| piece.trim().parse::<usize>())
        .collect::<Result<Vec<usize>, _>>()
        .map_err(|e| format!("invalid shape part in {text:?}: {e}"))?;
    Ok(Composition::new(parts)?)
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Box<dyn std::error::Error>> {
    value.ok_or_else(|| format!("{flag} is required for this kind").into())
}

fn check_budget(size: ExactInt, budget: u64) -> Result<(), Error> {
    if size > ExactInt::from(budget) {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(())
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAIL"
    }
}

fn exit_flag(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
