//! `bdisk`: evaluate disk operators, write meshes, reproduce RMSE tables and
//! extract cross-sections. Data goes to files (or stdout with `--out -`),
//! diagnostics to stderr.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bernstein_disk::experiment::{
    cross_section, format_significant, mesh_quadrant_disk, mesh_stancu_disk, run_example,
    write_mesh_csv, write_section_csv, write_table_csv, BuiltinFunction, OperatorSpec, Segment,
    DEFAULT_DEGREES,
};
use bernstein_disk::{DiskPoint, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable naming the default output directory.
const OUT_DIR_ENV: &str = "BDISK_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "bdisk", version, about = "Bernstein-type operators on the unit disk")]
struct Cli {
    /// Worker threads for mesh sweeps (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce an RMSE table: writes table_exampleN.csv.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
        example: u32,
        /// Comma-separated degrees.
        #[arg(long = "n", value_delimiter = ',', default_values_t = DEFAULT_DEGREES)]
        degrees: Vec<u32>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Evaluate one operator at one point and print the value.
    Eval {
        #[arg(long = "op")]
        op: OperatorSpec,
        #[arg(long = "fn")]
        function: BuiltinFunction,
        #[arg(long = "n")]
        n: u32,
        /// `x,y`
        #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
        point: (f64, f64),
        /// Print a JSON object instead of the bare value.
        #[arg(long)]
        json: bool,
    },
    /// Write a node mesh: mesh_<kind>_<n>.csv.
    Mesh {
        #[arg(long)]
        kind: MeshChoice,
        #[arg(long = "n")]
        n: u32,
        /// Drop quadrant nodes shared by adjacent quadrants.
        #[arg(long)]
        dedup: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sample an operator along a chord: section_<op>_<fn>.csv.
    Section {
        #[arg(long = "op")]
        op: OperatorSpec,
        #[arg(long = "fn")]
        function: BuiltinFunction,
        #[arg(long = "n", value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_point, default_value = "-1,0")]
        from: (f64, f64),
        #[arg(long, allow_hyphen_values = true, value_parser = parse_point, default_value = "1,0")]
        to: (f64, f64),
        #[arg(long, default_value_t = 801)]
        samples: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Output directory, or `-` for stdout. Defaults to $BDISK_OUT_DIR, then `.`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MeshChoice {
    Stancu,
    Quadrant,
}

fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `x,y`, got `{s}`"))?;
    let coord = |v: &str| {
        v.trim()
            .parse::<f64>()
            .ok()
            .filter(|c| c.is_finite())
            .ok_or_else(|| format!("`{v}` is not a finite number"))
    };
    Ok((coord(x)?, coord(y)?))
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Internal(e.to_string()),
            Error::AtPoint { ref source, .. } if matches!(**source, Error::Io(_)) => {
                Failure::Internal(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// Opens the destination for `file_name` under the chosen directory.
fn sink(out: &OutArgs, file_name: &str) -> Result<(Box<dyn Write>, Option<PathBuf>), Failure> {
    let dir = out
        .out
        .clone()
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    if dir == Path::new("-") {
        return Ok((Box::new(io::stdout().lock()), None));
    }
    let path = dir.join(file_name);
    let file = File::create(&path)
        .map_err(|e| Failure::Internal(format!("cannot create {}: {e}", path.display())))?;
    Ok((Box::new(BufWriter::new(file)), Some(path)))
}

fn check_degrees(degrees: &[u32]) -> Result<(), Failure> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Failure::Usage("degrees must be positive integers".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Table {
            example,
            degrees,
            out,
        } => {
            check_degrees(&degrees)?;
            let table = run_example(example, &degrees)?;
            for r in &table.rows {
                let reference = table
                    .reference(r.n)
                    .map(|(c, b)| format!(" (reference {c}, {b})"))
                    .unwrap_or_default();
                eprintln!(
                    "n = {:>3}: Cbar {} Bstancu-disk {}{reference}",
                    r.n,
                    format_significant(r.cbar.rmse(), 6),
                    format_significant(r.stancu.rmse(), 6),
                );
            }
            let (w, path) = sink(&out, &table.file_name())?;
            write_table_csv(&table, w)?;
            finish_path(path)
        }
        Command::Eval {
            op,
            function,
            n,
            point: (x, y),
            json,
        } => {
            DiskPoint::new(x, y)?;
            let prepared = op.prepare(|x, y| function.eval(x, y), n)?;
            let value = prepared.eval(x, y)?;
            let text = trim_zeros(format_significant(value, 12));
            if json {
                let obj = serde_json::json!({
                    "operator": op.name(),
                    "function": function.id(),
                    "n": n,
                    "x": x,
                    "y": y,
                    "value": value,
                });
                println!("{obj}");
            } else {
                println!("{text}");
            }
            Ok(())
        }
        Command::Mesh {
            kind,
            n,
            dedup,
            out,
        } => {
            let mesh = match kind {
                MeshChoice::Stancu => mesh_stancu_disk(n)?,
                MeshChoice::Quadrant => mesh_quadrant_disk(n, dedup)?,
            };
            let spec = mesh.spec();
            eprintln!(
                "{spec}: {} entries, RMSE normalised by {}",
                mesh.len(),
                spec.nominal_count()
            );
            if matches!(kind, MeshChoice::Quadrant) && dedup {
                eprintln!(
                    "note: the distinct quadrant nodes number 2n(n+1)+1; the extra point is the origin, shared by all four quadrants"
                );
            }
            let name = format!("mesh_{}_{n}.csv", spec.kind.name());
            let (w, path) = sink(&out, &name)?;
            write_mesh_csv(&mesh, w)?;
            finish_path(path)
        }
        Command::Section {
            op,
            function,
            degrees,
            from,
            to,
            samples,
            out,
        } => {
            check_degrees(&degrees)?;
            let segment = Segment::new(DiskPoint::new(from.0, from.1)?, DiskPoint::new(to.0, to.1)?)?;
            let section = cross_section(&op, |x, y| function.eval(x, y), &degrees, &segment, samples)?;
            let (w, path) = sink(&out, &section.file_name(function.short_name()))?;
            write_section_csv(&section, w)?;
            finish_path(path)
        }
    }
}

fn finish_path(path: Option<PathBuf>) -> Result<(), Failure> {
    if let Some(p) = path {
        eprintln!("wrote {}", p.display());
    }
    Ok(())
}

/// `1.00000000000` -> `1`, `0.250000000000` -> `0.25`; scientific notation
/// keeps its exponent.
fn trim_zeros(s: String) -> String {
    match s.split_once('e') {
        Some((m, e)) => format!("{}e{e}", trim_zeros(m.to_string())),
        None if s.contains('.') => s.trim_end_matches('0').trim_end_matches('.').to_string(),
        None => s,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(t))
            .build_global()
        {
            eprintln!("error: cannot start thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
