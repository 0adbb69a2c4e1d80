//! `assoc`: enumerate, triangulate, label, validate and count.
//!
//! Exit codes: 0 success, 1 validation or domain failure, 2 usage.

mod bundle;
mod off;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use associahedron::geometry::{SampleOptions, ValidationReport};
use associahedron::numbers::catalan;
use associahedron::parking::{
    abel_sum, classification_table, decompose_pf, for_each_parking, parking_count,
    simplex_recursion,
};
use associahedron::permutohedron::{self, zp_table};
use associahedron::{assoc, ParkingFunction, PolytopeKind, Triangulation};
use bundle::Bundle;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

const MAX_TREES_WITH_COORDS: usize = 12;
const MAX_TREES: usize = 20;
const MAX_PARKING_TABLE: usize = 8;
const MAX_ENUMERATED_PARKING: usize = 8;
const MAX_COUNTS: usize = 30;

#[derive(Parser)]
#[command(
    name = "assoc",
    version,
    about = "Parking-function triangulations of the associahedron and permutohedron"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Polytope {
    Assoc,
    Perm,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeshFormat {
    Json,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountKind {
    Simplices,
    Parking,
    Zp,
}

#[derive(Subcommand)]
enum Command {
    /// List planar binary trees with n internal vertices in canonical order.
    Trees {
        #[arg(long)]
        n: usize,
        /// Omit the Loday coordinates.
        #[arg(long)]
        no_coords: bool,
        /// Print only the number of trees.
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TreeFormat,
    },
    /// Build a triangulation and export it.
    Triangulate {
        #[arg(long, value_enum)]
        polytope: Polytope,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: MeshFormat,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random interior points per simplex in the embedded validation.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Run the validation suite on a fresh triangulation or a JSON bundle.
    #[command(group(ArgGroup::new("source").required(true).args(["n", "check_file"])))]
    Verify {
        #[arg(long, value_enum, requires = "n", conflicts_with = "check_file")]
        polytope: Option<Polytope>,
        #[arg(long, requires = "polytope")]
        n: Option<usize>,
        #[arg(long)]
        check_file: Option<PathBuf>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 200)]
        hull_samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Classification table of parking functions, or the decomposition of one.
    #[command(group(ArgGroup::new("query").required(true).args(["n", "decompose"])))]
    Parking {
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated sequence, e.g. 3,6,1,7,2,1,3,6.
        #[arg(long, allow_hyphen_values = true)]
        decompose: Option<String>,
    },
    /// Counts by recursion and closed form.
    Counts {
        #[arg(long, value_enum)]
        what: CountKind,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

fn kind_of(p: Polytope) -> PolytopeKind {
    match p {
        Polytope::Assoc => PolytopeKind::Associahedron,
        Polytope::Perm => PolytopeKind::Permutohedron,
    }
}

fn max_dim(kind: PolytopeKind) -> usize {
    match kind {
        PolytopeKind::Associahedron => assoc::MAX_TRIANGULATION,
        PolytopeKind::Permutohedron => permutohedron::MAX_TRIANGULATION,
    }
}

fn build(kind: PolytopeKind, n: usize) -> anyhow::Result<Triangulation> {
    if n > max_dim(kind) {
        return usage(format!("{kind} supports n <= {}", max_dim(kind)));
    }
    Ok(match kind {
        PolytopeKind::Associahedron => assoc::triangulate_associahedron(n)?,
        PolytopeKind::Permutohedron => permutohedron::triangulate_permutohedron(n)?,
    })
}

fn validate(tri: &Triangulation, opts: SampleOptions) -> anyhow::Result<ValidationReport> {
    if tri.dim > max_dim(tri.kind) {
        anyhow::bail!(
            "{} validation supports n <= {}",
            tri.kind,
            max_dim(tri.kind)
        );
    }
    Ok(match tri.kind {
        PolytopeKind::Associahedron => assoc::validate_associahedron_triangulation(tri, opts)?,
        PolytopeKind::Permutohedron => {
            permutohedron::validate_permutohedron_triangulation(tri, opts)?
        }
    })
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn fmt_point(p: &[u64]) -> String {
    let parts: Vec<String> = p.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn cmd_trees(
    n: usize,
    no_coords: bool,
    count_only: bool,
    format: TreeFormat,
) -> anyhow::Result<ExitCode> {
    if count_only {
        emit(None, &format!("{}\n", catalan(n as u64)))?;
        return Ok(ExitCode::SUCCESS);
    }
    if n > MAX_TREES {
        return usage(format!(
            "listing supports n <= {MAX_TREES}; use --count-only"
        ));
    }
    if !no_coords && n > MAX_TREES_WITH_COORDS {
        return usage(format!(
            "coordinates are listed for n <= {MAX_TREES_WITH_COORDS}; pass --no-coords"
        ));
    }
    let trees = associahedron::trees::enumerate_trees(n)?;
    let point = |t: &associahedron::Tree| -> Vec<u64> {
        if t.is_leaf() {
            Vec::new()
        } else {
            t.loday_point().expect("nonempty tree has coordinates")
        }
    };
    let mut out = String::new();
    match format {
        TreeFormat::Text => {
            for t in &trees {
                if no_coords {
                    out.push_str(&format!("{t}\n"));
                } else {
                    out.push_str(&format!("{t}\t{}\n", fmt_point(&point(t))));
                }
            }
        }
        TreeFormat::Json => {
            let rows: Vec<serde_json::Value> = trees
                .iter()
                .map(|t| {
                    let mut row = serde_json::Map::new();
                    row.insert("tree".into(), t.to_string().into());
                    if !no_coords {
                        row.insert("coords".into(), point(t).into());
                    }
                    row.into()
                })
                .collect();
            out = serde_json::to_string_pretty(&rows)? + "\n";
        }
    }
    emit(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_triangulate(
    polytope: Polytope,
    n: usize,
    format: MeshFormat,
    out: Option<PathBuf>,
    seed: u64,
    samples: usize,
) -> anyhow::Result<ExitCode> {
    let kind = kind_of(polytope);
    if matches!(format, MeshFormat::Off) && n > off::MAX_DIM {
        return usage(format!("OFF export supports n <= {}", off::MAX_DIM));
    }
    let tri = build(kind, n)?;
    let text = match format {
        MeshFormat::Off => off::to_off(&tri),
        MeshFormat::Json => {
            let opts = SampleOptions {
                seed,
                per_simplex: samples,
                ..SampleOptions::default()
            };
            let report = validate(&tri, opts)?;
            Bundle::new(&tri, seed, Some(&report))?.to_json()?
        }
    };
    emit(out.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    polytope: Option<Polytope>,
    n: Option<usize>,
    check_file: Option<PathBuf>,
    opts: SampleOptions,
) -> anyhow::Result<ExitCode> {
    let tri = match (check_file, polytope, n) {
        (Some(path), _, _) => {
            let text =
                fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            Bundle::from_json(&text)?.triangulation()?
        }
        (None, Some(p), Some(n)) => build(kind_of(p), n)?,
        _ => return usage("pass --polytope and --n, or --check-file"),
    };
    let report = validate(&tri, opts)?;
    let value = serde_json::to_value(&report)?;
    emit(None, &(serde_json::to_string_pretty(&value)? + "\n"))?;
    if report.pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("failed checks: {}", report.failures().join(", "));
        Ok(ExitCode::from(1))
    }
}

fn cmd_parking(n: Option<usize>, decompose: Option<String>) -> anyhow::Result<ExitCode> {
    if let Some(seq) = decompose {
        let pf: ParkingFunction = seq.parse()?;
        let d = decompose_pf(&pf)?;
        emit(
            None,
            &format!(
                "a={} p={} q={} f={} g={} θ={}\n",
                d.a,
                d.p(),
                d.q(),
                d.f,
                d.g,
                d.theta
            ),
        )?;
        return Ok(ExitCode::SUCCESS);
    }
    let n = n.expect("clap requires --n or --decompose");
    if n > MAX_PARKING_TABLE {
        return usage(format!("the table supports n <= {MAX_PARKING_TABLE}"));
    }
    emit(None, &classification_table([n])?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_counts(what: CountKind, n_max: usize) -> anyhow::Result<ExitCode> {
    if n_max > MAX_COUNTS {
        return usage(format!("--n-max must be <= {MAX_COUNTS}"));
    }
    // (n, recursion, closed form)
    let rows: Vec<(usize, String, Option<String>)> = match what {
        CountKind::Simplices => {
            let d = simplex_recursion(n_max);
            (1..=n_max)
                .map(|n| (n, d[n].to_string(), Some(parking_count(n).to_string())))
                .collect()
        }
        CountKind::Parking => (1..=n_max)
            .map(|n| {
                let counted = if n <= MAX_ENUMERATED_PARKING {
                    let mut c = 0u64;
                    for_each_parking(n, |_| c += 1)?;
                    c.to_string()
                } else {
                    abel_sum(n).to_string()
                };
                Ok((n, counted, Some(parking_count(n).to_string())))
            })
            .collect::<anyhow::Result<_>>()?,
        CountKind::Zp => zp_table(n_max)
            .into_iter()
            .enumerate()
            .map(|(n, z)| (n, z.to_string(), None))
            .collect(),
    };
    let header = match what {
        CountKind::Simplices => "recursion",
        CountKind::Parking => "enumerated",
        CountKind::Zp => "recursion",
    };
    let mut out = format!("n\t{header}\tclosed form\n");
    let mut mismatches = 0;
    for (n, value, closed) in &rows {
        let closed_col = closed.as_deref().unwrap_or("-");
        let flag = match closed {
            Some(c) if c != value => {
                mismatches += 1;
                "\tMISMATCH"
            }
            _ => "",
        };
        out.push_str(&format!("{n}\t{value}\t{closed_col}{flag}\n"));
    }
    let seq: Vec<&str> = rows.iter().map(|(_, v, _)| v.as_str()).collect();
    out.push_str(&format!("sequence: {}\n", seq.join(",")));
    emit(None, &out)?;
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Trees {
            n,
            no_coords,
            count_only,
            format,
        } => cmd_trees(n, no_coords, count_only, format),
        Command::Triangulate {
            polytope,
            n,
            format,
            out,
            seed,
            samples,
        } => cmd_triangulate(polytope, n, format, out, seed, samples),
        Command::Verify {
            polytope,
            n,
            check_file,
            samples,
            hull_samples,
            seed,
        } => cmd_verify(
            polytope,
            n,
            check_file,
            SampleOptions {
                seed,
                per_simplex: samples,
                hull: hull_samples,
            },
        ),
        Command::Parking { n, decompose } => cmd_parking(n, decompose),
        Command::Counts { what, n_max } => cmd_counts(what, n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<Usage>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
