mod plot;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bjortho::{
    f_cone, find_x_for_cone, g_cone, is_approx_orth_b, is_approx_orth_d, is_bj_orthogonal, normalize, orth_report,
    s_set, scan_csv, scan_f, scan_g, ConePair, ConverseOutcome, Norm, NormSpec, NormalCone2D, OrthReport, VectorN,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_HOLDS: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_FAILS: u8 = 2;
const EXIT_NO_SOLUTION: u8 = 3;
const PRECISION: usize = 6;

/// Birkhoff-James orthogonality and approximate-orthogonality cones.
#[derive(Parser)]
#[command(name = "bjortho", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct NormArg {
    /// Norm description file (JSON).
    #[arg(long, value_name = "PATH")]
    norm: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Test a relation between x and y and print the orthogonality profile.
    Check {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        x: VectorN,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        y: VectorN,
        /// Tolerance of the approximate relation; without it plain Birkhoff-James orthogonality is tested.
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<f64>,
        #[arg(long, value_enum, default_value_t = Kind::D, ignore_case = true)]
        kind: Kind,
    },
    /// Boundary of the F(x, eps) cone pair.
    ConeF(ConeArgs),
    /// Boundary of the G(x, eps) cone pair (x must be a smooth point).
    ConeG(ConeArgs),
    /// The exceptional set S(x, eps).
    SSet {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        x: VectorN,
        #[arg(long, allow_hyphen_values = true)]
        eps: f64,
    },
    /// Find (x, eps) whose F cone pair is spanned by v1 and v2.
    FindX {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        v1: VectorN,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        v2: VectorN,
    },
    /// Sample F and G membership on the unit sphere and write CSV.
    Scan {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        x: VectorN,
        #[arg(long, allow_hyphen_values = true)]
        eps: f64,
        #[arg(long, default_value_t = 3600)]
        n: usize,
        /// Output file; standard output when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the orthogonality profile of (x, y) as JSON.
    Report {
        #[command(flatten)]
        norm: NormArg,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        x: VectorN,
        #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
        y: VectorN,
    },
}

#[derive(Args)]
struct ConeArgs {
    #[command(flatten)]
    norm: NormArg,
    /// Base vector; normalized before use.
    #[arg(long, value_parser = parse_vector, allow_hyphen_values = true)]
    x: VectorN,
    #[arg(long, allow_hyphen_values = true)]
    eps: f64,
    /// Write an SVG drawing of the unit sphere, x and the cone arcs.
    #[arg(long, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Write the sampled unit sphere with cone membership as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    D,
    B,
}

fn parse_vector(s: &str) -> Result<VectorN, String> {
    let coords = s
        .split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|_| format!("malformed coordinate {:?} in {s:?}", c.trim())))
        .collect::<Result<Vec<_>, _>>()?;
    VectorN::new(coords).map_err(|e| e.to_string())
}

fn load_norm(arg: &NormArg) -> Result<NormSpec> {
    let text =
        fs::read_to_string(&arg.norm).with_context(|| format!("cannot read norm file {}", arg.norm.display()))?;
    NormSpec::from_json(&text).with_context(|| format!("in {}", arg.norm.display()))
}

fn expect_dim(norm: &NormSpec, name: &str, v: &VectorN) -> Result<()> {
    if v.dim() != norm.dim() {
        bail!("{name} has {} coordinates but the norm is on R^{}", v.dim(), norm.dim());
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn print_report(r: &OrthReport) {
    println!("bj: {}", r.bj);
    println!("in_plus: {}", r.in_plus);
    println!("in_minus: {}", r.in_minus);
    println!("eps_D_min: {:.p$}", r.eps_d_min, p = PRECISION);
    println!("eps_B_min: {:.p$}", r.eps_b_min, p = PRECISION);
    println!("degenerate: {}", r.degenerate);
}

fn print_cone(pair: &ConePair) {
    println!("v1: {:.p$}", pair.cone.v1(), p = PRECISION);
    println!("v2: {:.p$}", pair.cone.v2(), p = PRECISION);
}

fn cone_artifacts(norm: &NormSpec, x: &VectorN, pair: &ConePair, args: &ConeArgs) -> Result<()> {
    if let Some(path) = &args.svg {
        write_file(path, &plot::svg(norm, x, pair))?;
    }
    if let Some(path) = &args.csv {
        write_file(path, &plot::cone_csv(norm, pair))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check { norm, x, y, eps, kind } => {
            let norm = load_norm(&norm)?;
            expect_dim(&norm, "x", &x)?;
            expect_dim(&norm, "y", &y)?;
            let holds = match (eps, kind) {
                (None, _) => is_bj_orthogonal(&norm, &x, &y)?,
                (Some(e), Kind::D) => is_approx_orth_d(&norm, &x, &y, e)?,
                (Some(e), Kind::B) => is_approx_orth_b(&norm, &x, &y, e)?,
            };
            print_report(&orth_report(&norm, &x, &y)?);
            println!("holds: {holds}");
            Ok(if holds { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::ConeF(args) => {
            let norm = load_norm(&args.norm)?;
            expect_dim(&norm, "x", &args.x)?;
            let x = normalize(&norm, &args.x)?;
            let f = f_cone(&norm, &x, args.eps)?;
            println!("x: {:.p$}", x, p = PRECISION);
            print_cone(&f.pair);
            println!("t1: {:.p$}", f.t1, p = PRECISION);
            println!("t2: {:.p$}", f.t2, p = PRECISION);
            cone_artifacts(&norm, &x, &f.pair, &args)?;
            Ok(EXIT_HOLDS)
        }
        Command::ConeG(args) => {
            let norm = load_norm(&args.norm)?;
            expect_dim(&norm, "x", &args.x)?;
            let x = normalize(&norm, &args.x)?;
            let pair = g_cone(&norm, &x, args.eps)?;
            println!("x: {:.p$}", x, p = PRECISION);
            print_cone(&pair);
            cone_artifacts(&norm, &x, &pair, &args)?;
            Ok(EXIT_HOLDS)
        }
        Command::SSet { norm, x, eps } => {
            let norm = load_norm(&norm)?;
            expect_dim(&norm, "x", &x)?;
            let x = normalize(&norm, &x)?;
            for z in s_set(&norm, &x, eps)? {
                println!("{:.p$}", z, p = PRECISION);
            }
            Ok(EXIT_HOLDS)
        }
        Command::FindX { norm, v1, v2 } => {
            let norm = load_norm(&norm)?;
            expect_dim(&norm, "v1", &v1)?;
            expect_dim(&norm, "v2", &v2)?;
            let cone = NormalCone2D::from_directions(&norm, &v1, &v2)?;
            match find_x_for_cone(&norm, &cone)? {
                ConverseOutcome::Found { x, eps } => {
                    println!("x: {:.p$}", x, p = PRECISION);
                    println!("eps: {:.p$}", eps, p = PRECISION);
                    Ok(EXIT_HOLDS)
                }
                ConverseOutcome::NoSolution { reason } => {
                    println!("NO-SOLUTION: {reason}");
                    Ok(EXIT_NO_SOLUTION)
                }
            }
        }
        Command::Scan { norm, x, eps, n, out } => {
            let norm = load_norm(&norm)?;
            expect_dim(&norm, "x", &x)?;
            let f = scan_f(&norm, &x, eps, n)?;
            let g = scan_g(&norm, &x, eps, n)?;
            let csv = scan_csv(&norm, &f, &g)?;
            match out {
                Some(path) => write_file(&path, &csv)?,
                None => print!("{csv}"),
            }
            Ok(EXIT_HOLDS)
        }
        Command::Report { norm, x, y } => {
            let norm = load_norm(&norm)?;
            expect_dim(&norm, "x", &x)?;
            expect_dim(&norm, "y", &y)?;
            let report = orth_report(&norm, &x, &y)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(EXIT_HOLDS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
