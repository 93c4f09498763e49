//! Command-line surface. [`run`] never touches the process: it returns the
//! exit code and both output streams, so commands are testable in-process.
//!
//! Exit codes: 0 success, 1 a mathematical negative (no quotient found,
//! failed verification, rejected word), 2 usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::certificate;
use crate::coset_table::{CosetTable, Presentation};
use crate::error::{Error, Result};
use crate::lemma::{run_lemma, verify_certificate, DEFAULT_MAX_DEGREE};
use crate::low_index::{low_index_tables_bounded, DEFAULT_MAX_INDEX};
use crate::rewrite::{rewrite_presentation, surface_report_bounded, SurfaceBounds};
use crate::transversal::{basis_through_word, schreier_basis, AlphabetOrientation, SchreierTransversal};
use crate::word::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { exit_code: 0, stdout, stderr: String::new() }
    }

    fn negative(stdout: String) -> Self {
        CommandOutcome { exit_code: 1, stdout, stderr: String::new() }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        CommandOutcome { exit_code: 2, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

#[derive(Debug, Parser)]
#[command(name = "relator-basis", version, about = "Finite quotients and subgroup bases through relators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Freely reduce a word.
    Reduce {
        word: String,
        /// Generator names; defaults to a..z.
        #[arg(long)]
        gens: Option<String>,
    },
    /// Find a separating finite quotient and emit a basis certificate.
    Witness {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        relator: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Independently re-check a certificate.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Schreier transversal and basis of a coset table.
    Basis {
        #[arg(long)]
        table: PathBuf,
        /// Seed the transversal so the basis contains this word.
        #[arg(long)]
        through: Option<String>,
    },
    /// Validate and echo a table, or list all tables of a given index.
    Table {
        #[arg(long, conflicts_with_all = ["presentation", "index"])]
        table: Option<PathBuf>,
        #[arg(long, requires = "index")]
        presentation: Option<PathBuf>,
        #[arg(long, requires = "presentation")]
        index: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_INDEX)]
        max_index: usize,
    },
    /// Rank formula reports for finite-index subgroups of a surface group.
    Surface {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value_t = SurfaceBounds::default().max_genus)]
        max_genus: usize,
        #[arg(long, default_value_t = SurfaceBounds::default().max_index)]
        max_index: usize,
    },
    /// Reidemeister-Schreier presentation of the subgroup of a table.
    Rewrite {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        table: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutcome::ok(text)
            } else {
                CommandOutcome { exit_code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => CommandOutcome::input_error(e),
    }
}

fn dispatch(command: Command) -> Result<CommandOutcome> {
    match command {
        Command::Reduce { word, gens } => {
            let alphabet = match gens {
                Some(g) => Alphabet::new(g.chars().collect())?,
                None => Alphabet::standard(26)?,
            };
            let w = alphabet.parse_word(&word)?;
            Ok(CommandOutcome::ok(format!("{}\n", alphabet.format_word(&w))))
        }
        Command::Witness { presentation, relator, max_degree } => {
            let p = Presentation::from_text(&read(&presentation)?)?;
            let r = p.alphabet().parse_word(&relator)?;
            if r.is_empty() {
                return Err(Error::EmptyWord);
            }
            match run_lemma(&p, &r, max_degree)? {
                Some(c) => Ok(CommandOutcome::ok(certificate::to_json(&c))),
                None => Ok(CommandOutcome::negative("NOTFOUND\n".into())),
            }
        }
        Command::Verify { certificate: path } => {
            let c = certificate::from_json(&read(&path)?)?;
            let report = verify_certificate(&c);
            if report.is_ok() {
                Ok(CommandOutcome::ok("OK\n".into()))
            } else {
                let out: String = report.failed.iter().map(|f| format!("FAIL {f}\n")).collect();
                Ok(CommandOutcome::negative(out))
            }
        }
        Command::Basis { table, through } => {
            let t = CosetTable::from_text(&read(&table)?)?;
            match through {
                None => {
                    let tr = SchreierTransversal::new(&t, None)?;
                    let b = schreier_basis(&tr, &AlphabetOrientation::identity())?;
                    Ok(CommandOutcome::ok(format!("{}\n{}", tr.to_text(), b.to_text())))
                }
                Some(word) => {
                    let w = t.alphabet().parse_word(&word)?;
                    match basis_through_word(&t, &w) {
                        Ok(out) => Ok(CommandOutcome::ok(format!(
                            "{}\n{}r_position={}\nmatched_inverse={}\n",
                            out.basis.transversal.to_text(),
                            out.basis.to_text(),
                            out.position,
                            out.matched_inverse
                        ))),
                        Err(e @ (Error::EmptyWord | Error::NotInSubgroup | Error::PrefixesNotSeparated)) => {
                            Ok(CommandOutcome::negative(format!("REJECTED {e}\n")))
                        }
                        Err(e) => Err(e),
                    }
                }
            }
        }
        Command::Table { table, presentation, index, max_index } => match (table, presentation, index) {
            (Some(path), _, _) => {
                let t = CosetTable::from_text(&read(&path)?)?;
                Ok(CommandOutcome::ok(t.to_text()))
            }
            (None, Some(path), Some(n)) => {
                let p = Presentation::from_text(&read(&path)?)?;
                let tables = low_index_tables_bounded(&p, n, max_index)?;
                let mut out = String::new();
                for t in &tables {
                    out.push_str(&t.to_text());
                    out.push('\n');
                }
                let _ = writeln!(out, "subgroups={}", tables.len());
                Ok(CommandOutcome::ok(out))
            }
            _ => Err(Error::BadBound("table needs --table FILE or --presentation FILE --index N".into())),
        },
        Command::Surface { genus, index, max_genus, max_index } => {
            let reports = surface_report_bounded(genus, index, SurfaceBounds { max_genus, max_index })?;
            let mut out = String::new();
            let pass = reports.iter().all(|r| r.checks_pass());
            for r in &reports {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
            let _ = writeln!(out, "subgroups={} all_checks={}", reports.len(), if pass { "pass" } else { "fail" });
            Ok(if pass { CommandOutcome::ok(out) } else { CommandOutcome::negative(out) })
        }
        Command::Rewrite { presentation, table } => {
            let p = Presentation::from_text(&read(&presentation)?)?;
            let t = CosetTable::from_text(&read(&table)?)?;
            match rewrite_presentation(&p, &t) {
                Ok(sub) => Ok(CommandOutcome::ok(sub.to_text())),
                Err(e @ Error::RelatorNotKilled { .. }) => Ok(CommandOutcome::negative(format!("REJECTED {e}\n"))),
                Err(e) => Err(e),
            }
        }
    }
}
