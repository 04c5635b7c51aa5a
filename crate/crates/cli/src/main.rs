//! Command-line workbench for cubic implication algebras.
//!
//! Exit codes: 0 when every requested check passes (or the command
//! succeeds), 1 when an axiom or property check finds violations (the
//! report is printed), 2 for malformed input, bad flags, or files that
//! cannot be used at all.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use cubic_core::axioms::{
    check_caret_axioms_on, check_cubic_on, check_mr_axiom_on, check_p_freedom_on,
    check_thm_mr_conditions_on,
};
use cubic_core::collapse::build_quotient;
use cubic_core::reconstruct::reconstruct_iso;
use cubic_core::search::search_models;
use cubic_core::{Algebra, AxiomReport, Error, SearchConfig};

use cubic_cli::io::StructureFile;
use cubic_cli::{dot, io};

#[derive(Parser)]
#[command(
    name = "cubic",
    version,
    about = "Generate, check, search, collapse, and reconstruct finite MR-algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a structure file for one of the built-in families.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Run an axiom suite against a structure file.
    Check {
        suite: Suite,
        file: PathBuf,
        /// Emit the reports as JSON instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively search for models of the caret axioms, streaming
    /// each model as a table-format JSON line plus a count summary.
    Search {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Also impose the extra axiom pinning caret to its meet form.
        #[arg(long)]
        extra: bool,
        /// Split the search across threads (needs the `parallel` build).
        #[arg(long)]
        parallel: bool,
    },
    /// Collapse a structure onto its implication lattice.
    Collapse {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Rebuild the interval-algebra isomorphism from bare tables.
    Reconstruct {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Write the Hasse diagram (covering relation) as a DOT digraph.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Export the order of the similarity quotient instead.
        #[arg(long)]
        quotient: bool,
    },
    /// Print the composition/caret agreement table for signed sets.
    Compose {
        #[arg(long)]
        n: u8,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Signed subsets of an n-element ground set.
    Signed {
        #[arg(long)]
        n: u8,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Intervals of the powerset of an n-element ground set.
    Interval {
        #[arg(long)]
        n: u8,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The filter subalgebra with the given principal generator.
    Filter {
        #[arg(long)]
        n: u8,
        /// Generator elements, 1-based, comma separated (e.g. --f 1,3).
        #[arg(long, value_delimiter = ',')]
        f: Vec<u32>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Cubic axioms (a)-(f) over the delta table.
    Cubic,
    /// The meet condition linking reflections and missing meets.
    Mr,
    /// Caret axioms (a)-(h).
    Caret,
    /// Caret axioms (a)-(h) plus the extra pinning axiom (i).
    CaretExtra,
    /// The three bottomed-lattice conditions.
    ThmMr,
    /// Substitution freedom of the caret below both bounds.
    PFreedom,
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
            eprintln!("{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Gen { family } => gen(family),
        Cmd::Check { suite, file, json } => check(suite, &file, json),
        Cmd::Search {
            max_size,
            extra,
            parallel,
        } => search(max_size, extra, parallel),
        Cmd::Collapse { file, out } => collapse(&file, &out),
        Cmd::Reconstruct { file, out } => reconstruct(&file, &out),
        Cmd::ExportDot {
            file,
            out,
            quotient,
        } => export_dot(&file, &out, quotient),
        Cmd::Compose { n } => {
            print!("{}", io::compose_demo(n)?);
            Ok(0)
        }
    }
}

fn gen(family: GenCmd) -> Result<u8, String> {
    let (file, path) = match family {
        GenCmd::Signed { n, out } => (
            StructureFile::Signed {
                version: io::FORMAT_VERSION,
                n,
            },
            out,
        ),
        GenCmd::Interval { n, out } => (
            StructureFile::Interval {
                version: io::FORMAT_VERSION,
                n,
            },
            out,
        ),
        GenCmd::Filter { n, f, out } => (
            StructureFile::Filter {
                version: io::FORMAT_VERSION,
                n,
                f,
            },
            out,
        ),
    };
    // Reject descriptors that cannot be expanded before writing them.
    io::realize(&file)?;
    io::save(&path, &file)?;
    Ok(0)
}

fn print_reports(reports: &[AxiomReport], json: bool) -> u8 {
    if json {
        println!(
            "{}",
            serde_json::to_string(reports).expect("reports serialize")
        );
    } else {
        for r in reports {
            if r.passed {
                println!("ok    {:<12} checked {}", r.axiom, r.checked);
            } else {
                let first = r
                    .counterexamples
                    .first()
                    .map(|c| format!("{c:?}"))
                    .unwrap_or_default();
                println!(
                    "FAIL  {:<12} violations {} of {} checked, first {first}",
                    r.axiom, r.violations, r.checked
                );
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}

fn check(suite: Suite, file: &Path, json: bool) -> Result<u8, String> {
    let (_, loaded) = io::load(file)?;
    let alg = Algebra::new(&loaded.structure).map_err(|e| e.to_string())?;
    let parallel = cfg!(feature = "parallel");
    let to_usable = |e: Error| e.to_string();
    match suite {
        Suite::Cubic => {
            let reports = check_cubic_on(&alg, parallel).map_err(to_usable)?;
            Ok(print_reports(&reports, json))
        }
        Suite::Mr => {
            let report = check_mr_axiom_on(&alg, parallel).map_err(to_usable)?;
            Ok(print_reports(std::slice::from_ref(&report), json))
        }
        Suite::Caret => {
            let reports = check_caret_axioms_on(&alg, false, parallel).map_err(to_usable)?;
            Ok(print_reports(&reports, json))
        }
        Suite::CaretExtra => {
            let reports = check_caret_axioms_on(&alg, true, parallel).map_err(to_usable)?;
            Ok(print_reports(&reports, json))
        }
        Suite::ThmMr => {
            let reports = check_thm_mr_conditions_on(&alg, parallel).map_err(to_usable)?;
            Ok(print_reports(&reports, json))
        }
        Suite::PFreedom => {
            let pf = check_p_freedom_on(&alg, parallel).map_err(to_usable)?;
            if json {
                println!("{}", serde_json::to_string(&pf).expect("report serializes"));
                Ok(if pf.report.passed { 0 } else { 1 })
            } else {
                let code = print_reports(std::slice::from_ref(&pf.report), json);
                println!(
                    "max substitute choices at an incomparable pair: {}",
                    pf.max_incomparable_choices
                );
                Ok(code)
            }
        }
    }
}

fn search(max_size: usize, extra: bool, parallel: bool) -> Result<u8, String> {
    if (7..=8).contains(&max_size) {
        eprintln!("note: sizes above 6 can take a long time");
    }
    if parallel && !cfg!(feature = "parallel") {
        eprintln!("note: built without the parallel feature; searching sequentially");
    }
    let catalog = search_models(&SearchConfig {
        max_size,
        include_extra: extra,
        parallel,
    })
    .map_err(|e| e.to_string())?;
    for size in 1..=max_size {
        for model in catalog.models(size).unwrap_or(&[]) {
            println!("{}", io::to_json_line(&io::to_table_file(model)));
        }
    }
    println!("{}", catalog.summary());
    Ok(0)
}

/// Failures of the checked properties of the *input* exit with 1; files
/// that cannot be interpreted at all exit with 2.
fn property_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotMr(_) | Error::Congruence(_) | Error::NotBoolean { .. } | Error::IsoCheck(_)
    )
}

fn collapse(file: &Path, out: &Path) -> Result<u8, String> {
    let (_, loaded) = io::load(file)?;
    let alg = Algebra::new(&loaded.structure).map_err(|e| e.to_string())?;
    match build_quotient(&alg) {
        Ok(q) => {
            io::save_json(out, &io::QuotientFile::of(&q))?;
            println!(
                "collapsed {} elements onto {} classes",
                alg.size(),
                q.len()
            );
            Ok(0)
        }
        Err(e) if property_failure(&e) => {
            println!("FAIL  collapse: {e}");
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn reconstruct(file: &Path, out: &Path) -> Result<u8, String> {
    let (_, loaded) = io::load(file)?;
    match reconstruct_iso(&loaded.structure) {
        Ok(rec) => {
            io::save_json(out, &io::IsoFile::of(&rec))?;
            println!(
                "reconstructed a dimension-{} cube isomorphism for {} elements",
                rec.dim,
                loaded.structure.size()
            );
            Ok(0)
        }
        Err(e) if property_failure(&e) => {
            println!("FAIL  reconstruct: {e}");
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn export_dot(file: &Path, out: &Path, quotient: bool) -> Result<u8, String> {
    let (_, loaded) = io::load(file)?;
    let text = if quotient {
        let alg = Algebra::new(&loaded.structure).map_err(|e| e.to_string())?;
        match build_quotient(&alg) {
            Ok(q) => dot::quotient_dot(&q),
            Err(e) if property_failure(&e) => {
                println!("FAIL  collapse: {e}");
                return Ok(1);
            }
            Err(e) => return Err(e.to_string()),
        }
    } else {
        dot::structure_dot(&loaded)?
    };
    std::fs::write(out, text).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    Ok(0)
}
