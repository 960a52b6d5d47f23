//! The `apolar` command line tool.
//!
//! Subcommands: `analyze` (full report over an input file, text or JSON),
//! `construct` (witness generators for an admissible h-vector),
//! `admissible` (table of admissible h-vectors), `growth` (Macaulay bound),
//! and `module-equal` (exact module comparison of two systems).
//!
//! Exit codes: 0 success, 1 inadmissible input or negative answer,
//! 2 malformed input, 3 unsupported request.

use apolar_core::apolar::InverseSystem;
use apolar_core::hvectors::{
    construct, enumerate_admissible, macaulay_growth, HVector, HvectorError,
};
use apolar_core::report::{analyze, parse_input, InputFile, Report};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "apolar", version, about = "Inverse-system workbench for Artinian level local algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the inverse system in FILE (or every file in a directory)
    Analyze {
        /// Input file; omit when using --batch
        file: Option<PathBuf>,
        /// Analyze every file in this directory instead
        #[arg(long, conflicts_with = "file")]
        batch: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct generators realizing the h-vector "1,m,t" or "1,m,n,t"
    Construct {
        /// Comma-separated h-vector, e.g. 1,4,5,6
        hvector: String,
    },
    /// List all admissible h-vectors for fixed embedding dimension and socle degree
    Admissible {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        socle: usize,
        /// Restrict to a fixed type (last entry)
        #[arg(long = "type")]
        type_filter: Option<usize>,
    },
    /// Macaulay growth bound N^<D>
    Growth { n: usize, d: u32 },
    /// Decide whether two inverse systems span the same module
    ModuleEqual { first: PathBuf, second: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            file,
            batch,
            format,
        } => cmd_analyze(file, batch, format),
        Command::Construct { hvector } => cmd_construct(&hvector),
        Command::Admissible {
            m,
            socle,
            type_filter,
        } => cmd_admissible(m, socle, type_filter),
        Command::Growth { n, d } => {
            println!("{}", macaulay_growth(n, d.max(1)));
            EXIT_OK
        }
        Command::ModuleEqual { first, second } => cmd_module_equal(&first, &second),
    };
    ExitCode::from(code)
}

fn read_input(path: &Path) -> Result<InputFile, (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn analyze_path(path: &Path, format: Format) -> Result<String, (u8, String)> {
    let input = read_input(path)?;
    let report: Report =
        analyze(&input).map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))?;
    Ok(match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    })
}

fn cmd_analyze(file: Option<PathBuf>, batch: Option<PathBuf>, format: Format) -> u8 {
    match (file, batch) {
        (Some(path), None) => match analyze_path(&path, format) {
            Ok(out) => {
                print!("{out}");
                EXIT_OK
            }
            Err((code, msg)) => {
                eprintln!("error: {msg}");
                code
            }
        },
        (None, Some(dir)) => {
            let mut paths: Vec<PathBuf> = match std::fs::read_dir(&dir) {
                Ok(entries) => entries
                    .filter_map(|e| e.ok())
                    .map(|e| e.path())
                    .filter(|p| p.is_file())
                    .collect(),
                Err(e) => {
                    eprintln!("error: {}: {e}", dir.display());
                    return EXIT_INPUT;
                }
            };
            paths.sort();
            let results: Vec<(PathBuf, Result<String, (u8, String)>)> = paths
                .par_iter()
                .map(|p| (p.clone(), analyze_path(p, format)))
                .collect();
            let mut failed = false;
            for (path, res) in results {
                println!("== {}", path.display());
                match res {
                    Ok(out) => print!("{out}"),
                    Err((_, msg)) => {
                        failed = true;
                        println!("error: {msg}");
                    }
                }
            }
            if failed {
                EXIT_INPUT
            } else {
                EXIT_OK
            }
        }
        (None, None) => {
            eprintln!("error: analyze needs a FILE or --batch DIR");
            EXIT_INPUT
        }
        (Some(_), Some(_)) => unreachable!("clap forbids this combination"),
    }
}

fn cmd_construct(text: &str) -> u8 {
    let h = match HVector::parse(text) {
        Ok(h) => h,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match construct(&h) {
        Ok(report) => {
            println!("h-vector: {}", report.target);
            println!("branch: {}", report.tag);
            println!(
                "homogeneous: {}",
                if report.homogeneous { "yes" } else { "no" }
            );
            println!("generators:");
            for g in &report.generators {
                println!("  {g}");
            }
            println!(
                "verification: h-vector {}, level type {}",
                report.verified_hf, report.level_type
            );
            EXIT_OK
        }
        Err(HvectorError::Inadmissible { condition }) => {
            eprintln!("inadmissible: {condition}");
            EXIT_NEGATIVE
        }
        Err(HvectorError::UnsupportedSocleDegree(s)) => {
            eprintln!("unsupported socle degree {s}");
            EXIT_UNSUPPORTED
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn cmd_admissible(m: usize, socle: usize, type_filter: Option<usize>) -> u8 {
    match enumerate_admissible(m, socle, type_filter) {
        Ok(rows) => {
            for row in rows {
                let homog = if row.homogeneous_witness {
                    "homogeneous"
                } else {
                    "inhomogeneous"
                };
                match &row.note {
                    Some(note) => println!("{} {} {} # {}", row.hvector, row.tag, homog, note),
                    None => println!("{} {} {}", row.hvector, row.tag, homog),
                }
            }
            EXIT_OK
        }
        Err(HvectorError::UnsupportedSocleDegree(s)) => {
            eprintln!("unsupported socle degree {s}");
            EXIT_UNSUPPORTED
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn cmd_module_equal(first: &Path, second: &Path) -> u8 {
    let load = |path: &Path| -> Result<InverseSystem, (u8, String)> {
        let input = read_input(path)?;
        InverseSystem::build(input.polys, input.num_vars)
            .map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))
    };
    let a = match load(first) {
        Ok(s) => s,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    let b = match load(second) {
        Ok(s) => s,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            return code;
        }
    };
    match a.module_equal(&b) {
        Ok(true) => {
            println!("yes");
            EXIT_OK
        }
        Ok(false) => {
            println!("no");
            EXIT_NEGATIVE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
