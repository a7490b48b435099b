use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lcdkit::codecore::{Form, DEFAULT_DISTANCE_BUDGET};
use lcdkit::lcdforge::{LcdifyOptions, DEFAULT_SEARCH_BUDGET};
use lcdkit::shell::commands::{self, BoundsQuery, CmdResult, LcdifyArgs};

#[derive(Parser)]
#[command(name = "lcdkit", version, about = "Build LCD codes from linear codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print n, k, Gram rank, hull dimension and the LCD verdict.
    Analyze {
        file: PathBuf,
        /// Also compute the minimum distance and Singleton defect.
        #[arg(long)]
        mindist: bool,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
        /// Drop dependent generator rows instead of rejecting the file.
        #[arg(long)]
        reduce: bool,
    },
    /// Rescale a code into an equivalent LCD code and write a certificate.
    Lcdify {
        file: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Use zero scalars when the field is too small for nonzero ones.
        #[arg(long)]
        allow_zero: bool,
        /// Maximum number of principal minors the deletion search may evaluate.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u128,
        #[arg(long)]
        reduce: bool,
    },
    /// Re-check an lcdify result against the original code.
    Verify {
        original: PathBuf,
        transformed: PathBuf,
        cert: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
    /// Re-check an extend result against the original code.
    VerifyExt {
        original: PathBuf,
        extended: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
    /// Append h coordinates to obtain an LCD [n+h, k, >= d] code.
    Extend {
        file: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long)]
        reduce: bool,
    },
    /// Draw a seeded random full-rank code.
    Random {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "euclidean")]
        form: Form,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Exact minimum distance by projective enumeration.
    Mindist {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
        #[arg(long)]
        reduce: bool,
    },
    /// q-ary entropy and GV rate at delta, or the same at d/n plus the Singleton defect.
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long, conflicts_with_all = ["n", "k", "d"], required_unless_present = "n")]
        delta: Option<f64>,
        #[arg(long, requires_all = ["k", "d"])]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
}

fn run(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Analyze { file, mindist, budget, reduce } => {
            commands::analyze(&file, reduce, mindist, budget)
        }
        Cmd::Lcdify { file, out, cert, allow_zero, budget, reduce } => {
            commands::lcdify_cmd(&LcdifyArgs {
                input: &file,
                output: &out,
                cert: &cert,
                reduce,
                opts: LcdifyOptions { allow_zero, search_budget: budget },
            })
        }
        Cmd::Verify { original, transformed, cert, reduce } => {
            commands::verify_cmd(&original, &transformed, &cert, reduce)
        }
        Cmd::VerifyExt { original, extended, reduce } => {
            commands::verify_extension_cmd(&original, &extended, reduce)
        }
        Cmd::Extend { file, out, reduce } => commands::extend_cmd(&file, &out, reduce),
        Cmd::Random { q, n, k, seed, form, out } => {
            let text = commands::random_cmd(q, n, k, seed, form)?;
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map(|()| String::new())
                    .map_err(|e| commands::CommandError {
                        code: commands::exit::IO,
                        message: format!("{}: {e}", path.display()),
                    }),
                None => Ok(text),
            }
        }
        Cmd::Mindist { file, budget, reduce } => commands::mindist_cmd(&file, reduce, budget),
        Cmd::Bounds { q, delta, n, k, d } => {
            let query = match (delta, n, k, d) {
                (Some(delta), ..) => BoundsQuery::Delta(delta),
                (None, Some(n), Some(k), Some(d)) => BoundsQuery::Code { n, k, d },
                _ => unreachable!("clap enforces --delta or --n/--k/--d"),
            };
            commands::bounds_cmd(q, query)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
