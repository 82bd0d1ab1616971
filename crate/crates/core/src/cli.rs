//! Command-line front end.
//!
//! Solving follows the usual argumentation-competition interface:
//!
//! ```text
//! afmatrix -p EE-ST -f framework.apx -fo apx
//! afmatrix -p DC-AD -f framework.tgf -fo tgf -a 5
//! afmatrix --problems
//! afmatrix validate --trials 500 --n-min 1 --n-max 8 --p 0.1,0.25,0.5 --seed 42 --report out.json
//! afmatrix matrix -f framework.apx
//! ```
//!
//! Exit status is 0 on success, 1 on input or solver errors, 2 on usage
//! errors and 3 when a validation campaign finds a block characterization
//! that disagrees with the oracle.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::af::{parse_apx, parse_tgf, ArgumentationFramework};
use crate::argset::ArgSet;
use crate::error::Error as AfError;
use crate::extension::{ExtensionSet, SemanticsId};
use crate::harness::{run_campaign, CampaignConfig};
use crate::matrix::build_matrix;
use crate::semantics::{enumerate_with_limit, DEFAULT_ENUMERATION_LIMIT};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FALSIFIED: i32 = 3;

const USAGE: &str =
    "usage: afmatrix -p <TASK>-<SEM> -f <file> [-fo apx|tgf] [-a <arg>] [--limit <n>] \
| afmatrix validate [options] | afmatrix matrix -f <file> [-fo apx|tgf] | afmatrix --problems";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: AfError },
    #[error("{0}")]
    Solve(#[from] AfError),
}

impl CliError {
    fn status(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_ERROR,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    SomeExtension,
    EnumerateExtensions,
    Credulous,
    Skeptical,
}

impl Task {
    pub const ALL: [Task; 4] = [
        Task::SomeExtension,
        Task::EnumerateExtensions,
        Task::Credulous,
        Task::Skeptical,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Task::SomeExtension => "SE",
            Task::EnumerateExtensions => "EE",
            Task::Credulous => "DC",
            Task::Skeptical => "DS",
        }
    }

    fn needs_argument(self) -> bool {
        matches!(self, Task::Credulous | Task::Skeptical)
    }
}

impl FromStr for Task {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown task `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Apx,
    Tgf,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(Format::Apx),
            "tgf" => Ok(Format::Tgf),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

impl Format {
    fn from_path(path: &Path) -> Option<Format> {
        path.extension()?.to_str()?.parse().ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub task: Task,
    pub semantics: SemanticsId,
    pub file: PathBuf,
    pub format: Format,
    pub query: Option<String>,
}

/// Runs the command line `args` (without the program name).
pub fn run<S: AsRef<str>>(args: &[S]) -> Outcome {
    let args: Vec<&str> = args.iter().map(AsRef::as_ref).collect();
    match dispatch(&args) {
        Ok((status, stdout)) => Outcome {
            status,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: e.status(),
            stdout: String::new(),
            stderr: format!("afmatrix: {e}\n"),
        },
    }
}

fn dispatch(args: &[&str]) -> Result<(i32, String), CliError> {
    match args.first().copied() {
        None => Ok((
            EXIT_OK,
            format!("afmatrix {}\n{USAGE}\n", env!("CARGO_PKG_VERSION")),
        )),
        Some("--problems") => Ok((EXIT_OK, problems_line())),
        Some("--formats") => Ok((EXIT_OK, "[apx,tgf]\n".into())),
        Some("validate") => validate(&args[1..]),
        Some("matrix") => print_matrix(&args[1..]),
        Some(_) => solve(args),
    }
}

fn problems_line() -> String {
    let items: Vec<String> = SemanticsId::ALL
        .iter()
        .flat_map(|sem| {
            Task::ALL
                .iter()
                .map(move |t| format!("{}-{}", t.code(), sem))
        })
        .collect();
    format!("[{}]\n", items.join(","))
}

/// Splits `args` into `flag -> value` pairs; `switches` take no value.
fn parse_flags<'a>(
    args: &[&'a str],
    valued: &[&str],
    switches: &[&str],
) -> Result<Vec<(&'a str, Option<&'a str>)>, CliError> {
    let mut out = Vec::new();
    let mut it = args.iter();
    while let Some(&flag) = it.next() {
        if switches.contains(&flag) {
            out.push((flag, None));
        } else if valued.contains(&flag) {
            let value = it
                .next()
                .ok_or_else(|| usage(format!("flag {flag} needs a value")))?;
            out.push((flag, Some(*value)));
        } else {
            return Err(usage(format!("unexpected argument `{flag}`; {USAGE}")));
        }
    }
    Ok(out)
}

fn parse_value<T: FromStr>(flag: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| usage(format!("invalid value `{value}` for {flag}")))
}

fn read_framework(path: &Path, format: Format) -> Result<ArgumentationFramework, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let parsed = match format {
        Format::Apx => parse_apx(&text),
        Format::Tgf => parse_tgf(&text),
    };
    parsed.map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn resolve_format(path: &Path, explicit: Option<&str>) -> Result<Format, CliError> {
    match explicit {
        Some(f) => f.parse().map_err(usage),
        None => Format::from_path(path)
            .ok_or_else(|| usage("cannot infer the input format; pass -fo apx|tgf")),
    }
}

struct SolveArgs {
    problem: ProblemSpec,
    limit: usize,
}

fn parse_solve(args: &[&str]) -> Result<SolveArgs, CliError> {
    let flags = parse_flags(args, &["-p", "-f", "-fo", "-a", "--limit"], &[])?;
    let get = |name: &str| {
        flags
            .iter()
            .rev()
            .find(|(f, _)| *f == name)
            .and_then(|(_, v)| *v)
    };

    let problem = get("-p").ok_or_else(|| usage("missing -p <TASK>-<SEM>"))?;
    let (task, sem) = problem.split_once('-').ok_or_else(|| {
        usage(format!(
            "malformed problem `{problem}`, expected e.g. EE-ST"
        ))
    })?;
    let task: Task = task.parse().map_err(usage)?;
    let semantics: SemanticsId = sem.parse().map_err(usage)?;

    let file = PathBuf::from(get("-f").ok_or_else(|| usage("missing -f <file>"))?);
    let format = resolve_format(&file, get("-fo"))?;

    let query = get("-a").map(str::to_string);
    match (task.needs_argument(), &query) {
        (true, None) => {
            return Err(usage(format!(
                "task {} requires -a <argument>",
                task.code()
            )))
        }
        (false, Some(_)) => return Err(usage(format!("task {} does not take -a", task.code()))),
        _ => {}
    }
    let limit = match get("--limit") {
        Some(v) => parse_value("--limit", v)?,
        None => DEFAULT_ENUMERATION_LIMIT,
    };
    Ok(SolveArgs {
        problem: ProblemSpec {
            task,
            semantics,
            file,
            format,
            query,
        },
        limit,
    })
}

fn render_extension(af: &ArgumentationFramework, s: &ArgSet) -> String {
    if s.is_empty() {
        return "[ ]".into();
    }
    let labels: Vec<&str> = s.iter().map(|i| af.label(i)).collect();
    format!("[{}]", labels.join(","))
}

fn solve(args: &[&str]) -> Result<(i32, String), CliError> {
    let SolveArgs { problem, limit } = parse_solve(args)?;
    let af = read_framework(&problem.file, problem.format)?;
    let query = match &problem.query {
        Some(label) => Some(af.index_of(label).ok_or_else(|| CliError::Input {
            path: problem.file.clone(),
            source: AfError::UnknownArgument {
                label: label.clone(),
                line: None,
            },
        })?),
        None => None,
    };
    let family = enumerate_with_limit(&build_matrix(&af), problem.semantics, limit)?;
    Ok((EXIT_OK, answer(&af, &problem, &family, query)))
}

fn answer(
    af: &ArgumentationFramework,
    problem: &ProblemSpec,
    family: &ExtensionSet,
    query: Option<usize>,
) -> String {
    let yes_no = |b: bool| if b { "YES\n" } else { "NO\n" }.to_string();
    match problem.task {
        Task::EnumerateExtensions if family.is_empty() => "NO EXTENSIONS\n".into(),
        Task::EnumerateExtensions => family.iter().fold(String::new(), |mut out, s| {
            let _ = writeln!(out, "{}", render_extension(af, s));
            out
        }),
        Task::SomeExtension => match family.iter().next() {
            Some(s) => format!("{}\n", render_extension(af, s)),
            None => "NO\n".into(),
        },
        Task::Credulous => {
            let a = query.expect("query checked during parsing");
            yes_no(family.iter().any(|s| s.contains(a)))
        }
        // An empty family can only come from ST; skeptical acceptance is
        // then vacuously YES.
        Task::Skeptical => {
            let a = query.expect("query checked during parsing");
            yes_no(family.iter().all(|s| s.contains(a)))
        }
    }
}

fn print_matrix(args: &[&str]) -> Result<(i32, String), CliError> {
    let flags = parse_flags(args, &["-f", "-fo"], &[])?;
    let get = |name: &str| {
        flags
            .iter()
            .rev()
            .find(|(f, _)| *f == name)
            .and_then(|(_, v)| *v)
    };
    let file = PathBuf::from(get("-f").ok_or_else(|| usage("missing -f <file>"))?);
    let format = resolve_format(&file, get("-fo"))?;
    let af = read_framework(&file, format)?;
    Ok((EXIT_OK, build_matrix(&af).to_string()))
}

fn validate(args: &[&str]) -> Result<(i32, String), CliError> {
    let flags = parse_flags(
        args,
        &[
            "--trials", "--n-min", "--n-max", "--p", "--seed", "--report",
        ],
        &["--no-self-attacks"],
    )?;
    let mut cfg = CampaignConfig::default();
    let mut report_path = None;
    for (flag, value) in flags {
        let v = value.unwrap_or_default();
        match flag {
            "--trials" => cfg.trials = parse_value(flag, v)?,
            "--n-min" => cfg.n_min = parse_value(flag, v)?,
            "--n-max" => cfg.n_max = parse_value(flag, v)?,
            "--p" => {
                cfg.p_list = v
                    .split(',')
                    .map(|p| parse_value(flag, p.trim()))
                    .collect::<Result<_, _>>()?
            }
            "--seed" => cfg.base_seed = parse_value(flag, v)?,
            "--report" => report_path = Some(PathBuf::from(v)),
            "--no-self-attacks" => cfg.allow_self_attacks = false,
            _ => unreachable!("flag list is closed"),
        }
    }
    let report = run_campaign(&cfg)?;
    if let Some(path) = report_path {
        fs::write(&path, report.to_json() + "\n")
            .map_err(|source| CliError::Io { path, source })?;
    }
    let status = if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_FALSIFIED
    };
    Ok((status, report.summary()))
}
