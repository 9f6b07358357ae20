//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | unreadable, malformed or invalid input; bad arguments |
//! | 3 | contradiction while refining bounds |
//! | 4 | a rotation number needed for `c` is missing |
//! | 5 | `c` is not in the image of the intersection form (non-torsion) |
//! | 6 | sigma override used while `c` is nonzero |
//! | 7 | `paper-check` found a mismatch |
//! | 8 | `classify` needs a page of genus one with one boundary component |
//! | 9 | homology data incomplete or inconsistent (missing H1 class, form basis not spanning H2) |

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::constructions::{self, boundary_connect_sum, make_phi_nm, preset_fig8_planar, preset_pprime};
use crate::format::{self, format_rational, FormatError};
use crate::invariants::{self, gap, refine_traced, table1_text, InvariantError, TwistRegime};
use crate::lefschetz::{self, FormSource, LefschetzError};
use crate::monodromy::{self, count_left_twists, MonodromyError};
use crate::reproduction;
use crate::surface::OpenBookDesc;

#[derive(Debug, Parser)]
#[command(name = "openbook", version, about = "Exact invariants of contact open books")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Page type, page norm, handle counts and number of left twists.
    Describe { path: PathBuf },
    /// Nielsen-Thurston type of a one-holed torus monodromy.
    Classify { path: PathBuf },
    /// The d3 invariant of the supported plane field.
    D3 {
        path: PathBuf,
        /// `preset` (form embedded in the file), `file=PATH`, or `sigma=INT`.
        #[arg(long)]
        form: Option<String>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Refine the bounds in a record file.
    Bounds {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The bounds table for the figure-eight family.
    Table1,
    /// Recompute every published value and report pass/fail.
    PaperCheck,
    /// Write a built-in open book or record as JSON.
    ExportPreset {
        /// disk, fig8-planar, phi-nm, pprime, nine-binding, or
        /// table1-{positive,zero,minus-one,less-than-minus-one}
        name: String,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        m: i64,
        /// Comma-separated tuple for phi-nm.
        #[arg(long, default_value = "1")]
        n: String,
        /// Keep the boundary twist as a literal curve in phi-nm.
        #[arg(long)]
        unexpanded: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Lefschetz(#[from] LefschetzError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error("a recomputed value differs from the expected one")]
    PaperCheck,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Format { .. } | CliError::Construction(_) => 2,
            CliError::Invariant(InvariantError::Contradiction { .. } | InvariantError::Inconsistent { .. }) => 3,
            CliError::Invariant(_) => 2,
            CliError::Lefschetz(e) => match e {
                LefschetzError::MissingRotation(_) => 4,
                LefschetzError::NonTorsionObstruction => 5,
                LefschetzError::SigmaOverrideUnsound(_) => 6,
                LefschetzError::MissingClass { .. }
                | LefschetzError::BasisMismatch
                | LefschetzError::Dimension(_) => 9,
            },
            CliError::Monodromy(MonodromyError::WrongPage(_)) => 8,
            CliError::Monodromy(_) => 9,
            CliError::PaperCheck => 7,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            if !matches!(e, CliError::PaperCheck) {
                let _ = writeln!(err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_book(path: &Path) -> Result<format::OpenBookFile, CliError> {
    format::parse_open_book(&read(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Describe { path } => {
            let book = load_book(&path)?.book;
            emit(out, &describe(&book))
        }
        Command::Classify { path } => {
            let book = load_book(&path)?.book;
            let class = monodromy::torus_nielsen_thurston(&book)?;
            let action = monodromy::h1_action(&book, &monodromy::torus_pairing())?;
            emit(out, &format!("trace = {}\nclass = {class}", action.trace()))
        }
        Command::D3 { path, form, json } => {
            let file = load_book(&path)?;
            let source = form_source(&file, form.as_deref(), &path)?;
            let report = lefschetz::d3(&file.book, &source)?;
            if json {
                emit(out, &format::d3_report_to_json(&report))
            } else {
                emit(
                    out,
                    &format!(
                        "chi_x = {}\nsigma_x = {}\nq = {}\nc_squared = {}\nd3 = {}\nform = {}",
                        report.chi_x,
                        report.sigma_x,
                        report.q,
                        format_rational(&report.c_squared),
                        format_rational(&report.d3),
                        report.provenance
                    ),
                )
            }
        }
        Command::Bounds { path, json } => {
            let rec = format::parse_record(&read(&path)?).map_err(|source| CliError::Format {
                path: path.display().to_string(),
                source,
            })?;
            let (first, trace) = refine_traced(&rec)?;
            let refined = invariants::planar_low_bn_tags(&first)?;
            let mut rules = trace.rules().to_vec();
            if refined != first {
                rules.push("planar-binding");
            }
            if json {
                return emit(out, &format::record_to_json(&refined));
            }
            let gap_text = match gap(&refined) {
                Ok(g) => g.to_string(),
                Err(_) => "unbounded".into(),
            };
            let tags: Vec<String> = refined.tags.iter().map(|t| format!("{t:?}")).collect();
            emit(
                out,
                &format!(
                    "sg={} bn={} sn={} gap={}\ntags: {}\nrules: {}",
                    refined.sg,
                    refined.bn,
                    refined.sn,
                    gap_text,
                    if tags.is_empty() { "-".into() } else { tags.join(",") },
                    if rules.is_empty() { "-".into() } else { rules.join(",") }
                ),
            )
        }
        Command::Table1 => {
            let text = table1_text();
            emit(out, text.trim_end())
        }
        Command::PaperCheck => {
            let items = reproduction::paper_check();
            for item in &items {
                emit(out, &item.line())?;
            }
            emit(out, table1_text().trim_end())?;
            let failed = items.iter().filter(|i| !i.passed).count();
            emit(out, &format!("{} passed, {} failed", items.len() - failed, failed))?;
            if failed > 0 {
                Err(CliError::PaperCheck)
            } else {
                Ok(())
            }
        }
        Command::ExportPreset { name, m, n, unexpanded } => emit(out, &export_preset(&name, m, &n, unexpanded)?),
    }
}

pub fn describe(book: &OpenBookDesc) -> String {
    let page = book.page();
    format!(
        "page {page}, −χ={}, N={}, k={}, q={}",
        page.page_norm(),
        book.h1_rank(),
        book.word().len(),
        count_left_twists(book.word())
    )
}

fn form_source(file: &format::OpenBookFile, choice: Option<&str>, path: &Path) -> Result<FormSource, CliError> {
    match choice {
        None => match file.form_source() {
            Some(s) => Ok(s),
            None => {
                // Without a form only an empty H2 can be handled.
                let cx = lefschetz::build_complex(&file.book)?;
                if lefschetz::kernel_d2(&cx).is_empty() {
                    Ok(FormSource::SigmaOverride(0))
                } else {
                    Err(CliError::Usage(format!(
                        "{}: H2 has rank {}; pass --form preset, --form file=PATH or --form sigma=INT",
                        path.display(),
                        lefschetz::kernel_d2(&cx).len()
                    )))
                }
            }
        },
        Some("preset") => file
            .form_source()
            .ok_or_else(|| CliError::Usage(format!("{} has no embedded intersection_form", path.display()))),
        Some(s) if s.starts_with("sigma=") => s["sigma=".len()..]
            .parse::<i64>()
            .map(FormSource::SigmaOverride)
            .map_err(|_| CliError::Usage(format!("bad sigma value in `{s}`"))),
        Some(s) if s.starts_with("file=") => {
            let form_path = Path::new(&s["file=".len()..]);
            let (form, basis) = format::parse_form(&read(form_path)?, file.book.word().len()).map_err(|source| {
                CliError::Format {
                    path: form_path.display().to_string(),
                    source,
                }
            })?;
            Ok(FormSource::Form { form, basis })
        }
        Some(other) => Err(CliError::Usage(format!(
            "unknown --form `{other}`; expected preset, file=PATH or sigma=INT"
        ))),
    }
}

fn export_preset(name: &str, m: i64, n: &str, unexpanded: bool) -> Result<String, CliError> {
    let record = |regime| format::record_to_json(&invariants::table1(regime));
    Ok(match name {
        "disk" => format::open_book_to_json(&OpenBookDesc::disk(), None),
        "fig8-planar" => {
            let p = preset_fig8_planar(m)?;
            format::open_book_to_json(&p.book, Some((&p.form, &p.basis)))
        }
        "phi-nm" => {
            let tuple = n
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Usage(format!("bad tuple `{n}`")))?;
            format::open_book_to_json(&make_phi_nm(&tuple, m, !unexpanded)?, None)
        }
        "pprime" => format::open_book_to_json(&preset_pprime().0, None),
        "nine-binding" => {
            let p = preset_fig8_planar(m)?;
            format::open_book_to_json(&boundary_connect_sum(&p.book, &preset_pprime().0), None)
        }
        "table1-positive" => record(TwistRegime::Positive),
        "table1-zero" => record(TwistRegime::Zero),
        "table1-minus-one" => record(TwistRegime::MinusOne),
        "table1-less-than-minus-one" => record(TwistRegime::LessThanMinusOne),
        other => return Err(CliError::Usage(format!("unknown preset `{other}`"))),
    })
}
