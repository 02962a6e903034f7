//! `bicat` — tables, verification, and inspection for doubled Catalan
//! combinatorics.
//!
//! Three subcommands:
//!
//! * `tables` prints the counting table (total counts and coefficient rows)
//!   with a per-row record of which independent pipelines produced it.
//! * `verify` runs the acceptance suite, a single section of it, or one named
//!   identity, and exits nonzero if any check fails.
//! * `inspect` dumps one concrete object: a permutation's arc diagram and
//!   sortability verdict, or the diagram rebuilt from a pair of endpoint
//!   sets.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use bicat_core::arcs::{
    classify_arc, delta, eta, is_bisortable, pi_map, validate_line, Arc, ArcClass, ArcDiagram,
    Barring,
};
use bicat_core::roots::GroupType;
use bicat_core::suite::{self, SectionReport, SECTION_NAMES};
use bicat_core::tables::{render_markdown, render_plain, select_types, table_row, TableRow};
use bicat_core::verify::{run_all_identities, verify_identity};

/// Writes a line to stdout, exiting quietly (with the conventional SIGPIPE
/// status) when the consumer has closed the pipe, e.g. under `bicat … | head`.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

/// [`outln!`] without the trailing newline.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "bicat",
    version,
    about = "Doubled Catalan tables, cross-checked three ways"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Markdown,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the counting tables for a family or for every built-in type.
    Tables(TablesArgs),
    /// Run the verification suite and report pass/fail with timings.
    Verify(VerifyArgs),
    /// Dump one concrete object in detail.
    Inspect(InspectArgs),
}

#[derive(Args)]
struct TablesArgs {
    /// Family letter: A, B, D, E, F, G, H, or I.
    #[arg(long)]
    family: Option<String>,
    /// Rank within the family.
    #[arg(long)]
    rank: Option<usize>,
    /// Dihedral order, for family I.
    #[arg(long)]
    m: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Also run the element-enumeration pipeline wherever the group order
    /// stays within the cap (slow for the largest groups).
    #[arg(long)]
    extended: bool,
    /// Directory for serialized weak orders (overrides BICAT_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Explain which pipelines ran per row.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated section names to run (default: all).
    #[arg(long)]
    only: Option<String>,
    /// Comma-separated type names (e.g. A4,B3,D4,F4) for the pipelines
    /// section.
    #[arg(long)]
    types: Option<String>,
    /// Check a single named identity instead of the suite.
    #[arg(long)]
    identity: Option<String>,
    /// Largest rank for type-indexed identity instances.
    #[arg(long, default_value_t = 10)]
    max_rank: usize,
    /// Widen instance lists to the larger tier (minutes, not seconds).
    #[arg(long)]
    extended: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Directory for serialized weak orders (overrides BICAT_CACHE_DIR).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Print every check, not just the failures.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Args)]
struct InspectArgs {
    #[command(subcommand)]
    what: InspectWhat,
}

#[derive(Subcommand)]
enum InspectWhat {
    /// A permutation in one-line notation: its arc diagram, arc classes,
    /// endpoint sets, and sortability verdict.
    Perm(PermArgs),
    /// The diagram rebuilt from two equal-size endpoint sets.
    Eta(EtaArgs),
}

#[derive(Args)]
struct PermArgs {
    /// One-line notation: digits (`5371624`) or comma-separated values.
    line: String,
    /// Orientation for the verdict: `bipartite`, `linear`, or
    /// `word:<letters>` (generator letters, e.g. `word:213`).
    #[arg(long, default_value = "bipartite")]
    coxeter: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct EtaArgs {
    /// Bottom endpoint set, comma-separated ('' for empty).
    #[arg(long = "S", default_value = "")]
    s: String,
    /// Top endpoint set, comma-separated ('' for empty).
    #[arg(long = "T", default_value = "")]
    t: String,
    /// Largest allowed endpoint value (points run 0 through n).
    #[arg(long)]
    n: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

fn main() -> ExitCode {
    match run() {
        Ok(failures) if failures == 0 => ExitCode::SUCCESS,
        Ok(_) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// Runs the selected command and returns the number of failed checks.
fn run() -> anyhow::Result<usize> {
    match Cli::parse().command {
        Command::Tables(args) => cmd_tables(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Inspect(args) => match args.what {
            InspectWhat::Perm(p) => cmd_inspect_perm(p),
            InspectWhat::Eta(e) => cmd_inspect_eta(e),
        },
    }
}

/// The cache directory: the flag wins, then the environment.
fn cache_dir(flag: &Option<PathBuf>) -> Option<PathBuf> {
    flag.clone()
        .or_else(|| std::env::var_os("BICAT_CACHE_DIR").map(PathBuf::from))
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

fn cmd_tables(args: TablesArgs) -> anyhow::Result<usize> {
    if args.extended {
        eprintln!(
            "note: --extended enumerates weak orders up to ~50k elements; expect extra minutes"
        );
    }
    let cache = cache_dir(&args.cache_dir);
    let types = select_types(args.family.as_deref(), args.rank, args.m)?;
    let rows: Vec<TableRow> = types
        .par_iter()
        .map(|&t| table_row(t, args.extended, cache.as_deref()))
        .collect::<Result<_, _>>()?;
    match args.format {
        Format::Json => outln!("{}", serde_json::to_string_pretty(&rows)?),
        Format::Markdown => out!("{}", render_markdown(&rows)),
        Format::Plain => out!("{}", render_plain(&rows)),
    }
    if args.verbose && args.format != Format::Plain {
        for row in &rows {
            eprintln!("{}: pipelines {}", row.label(), row.sources.join("+"));
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<usize> {
    if args.extended {
        eprintln!(
            "note: --extended enumerates weak orders up to ~50k elements; expect extra minutes"
        );
    }
    let cache = cache_dir(&args.cache_dir);

    if let Some(name) = &args.identity {
        let start = Instant::now();
        let checks = verify_identity(name, args.max_rank)?;
        let report = SectionReport {
            name: "identity",
            checks,
            millis: start.elapsed().as_millis(),
        };
        return print_reports(&[report], args.format, args.verbose);
    }

    let sections: Vec<&'static str> = match &args.only {
        None => SECTION_NAMES.to_vec(),
        Some(list) => {
            let mut picked = Vec::new();
            for token in list.split(',').map(str::trim) {
                match SECTION_NAMES
                    .iter()
                    .find(|n| n.eq_ignore_ascii_case(token))
                {
                    Some(&name) => picked.push(name),
                    None => bail!(
                        "unknown section `{token}`; available: {}",
                        SECTION_NAMES.join(", ")
                    ),
                }
            }
            picked
        }
    };

    if let Some(list) = &args.types {
        if sections != ["pipelines"] {
            bail!("--types applies only to `--only pipelines`");
        }
        let types: Vec<GroupType> = list
            .split(',')
            .map(str::trim)
            .map(GroupType::parse)
            .collect::<Result<_, _>>()?;
        let start = Instant::now();
        let checks = suite::pipeline_agreement_for(&types, cache.as_deref())?;
        let report = SectionReport {
            name: "pipelines",
            checks,
            millis: start.elapsed().as_millis(),
        };
        return print_reports(&[report], args.format, args.verbose);
    }

    let reports: Vec<SectionReport> = sections
        .par_iter()
        .map(|&name| -> anyhow::Result<SectionReport> {
            if name == "identities" {
                let start = Instant::now();
                let checks = run_all_identities(args.max_rank)?;
                Ok(SectionReport {
                    name,
                    checks,
                    millis: start.elapsed().as_millis(),
                })
            } else {
                let mut r = suite::run_sections(Some(name), args.extended, cache.as_deref())?;
                Ok(r.pop().expect("one section per filter"))
            }
        })
        .collect::<Result<_, _>>()?;

    print_reports(&reports, args.format, args.verbose)
}

/// Single-threaded report assembly; returns the total failure count.
fn print_reports(
    reports: &[SectionReport],
    format: Format,
    verbose: bool,
) -> anyhow::Result<usize> {
    let failures: usize = reports.iter().map(SectionReport::failures).sum();
    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let millis: u128 = reports.iter().map(|r| r.millis).sum();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "sections": reports.iter().map(|r| serde_json::json!({
                    "name": r.name,
                    "millis": r.millis,
                    "failures": r.failures(),
                    "checks": r.checks,
                })).collect::<Vec<_>>(),
                "checks": checks,
                "failures": failures,
            });
            outln!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Markdown => {
            outln!("| section | checks | failures | time (ms) |");
            outln!("| --- | ---: | ---: | ---: |");
            for r in reports {
                outln!(
                    "| {} | {} | {} | {} |",
                    r.name,
                    r.checks.len(),
                    r.failures(),
                    r.millis
                );
            }
            outln!();
            for r in reports {
                for c in r.checks.iter().filter(|c| !c.pass) {
                    outln!("- **FAIL** {} [{}]: {}", c.name, c.instance, c.detail);
                }
            }
            outln!(
                "\n**{}**: {checks} checks, {failures} failures in {millis} ms",
                if failures == 0 { "PASS" } else { "FAIL" }
            );
        }
        Format::Plain => {
            for r in reports {
                let status = if r.failures() == 0 { "PASS" } else { "FAIL" };
                outln!(
                    "{:<10} {status} — {} checks in {} ms",
                    r.name,
                    r.checks.len(),
                    r.millis
                );
                for c in &r.checks {
                    if !c.pass {
                        outln!("    FAIL {} [{}]: {}", c.name, c.instance, c.detail);
                    } else if verbose {
                        outln!("    ok   {} [{}]: {}", c.name, c.instance, c.detail);
                    }
                }
            }
            outln!(
                "{}: {checks} checks, {failures} failures in {millis} ms",
                if failures == 0 { "PASS" } else { "FAIL" }
            );
        }
    }
    Ok(failures)
}

// ---------------------------------------------------------------------------
// inspect
// ---------------------------------------------------------------------------

fn class_name(class: ArcClass) -> &'static str {
    match class {
        ArcClass::RightEven => "right-even",
        ArcClass::LeftEven => "left-even",
        ArcClass::Both => "both",
        ArcClass::Neither => "neither",
    }
}

/// One arc as `bottom top L:{points}`.
fn arc_line(a: &Arc) -> String {
    let left: Vec<String> = (a.bottom + 1..a.top)
        .filter(|&p| a.passes_left_of(p))
        .map(|p| p.to_string())
        .collect();
    format!("{} {} L:{{{}}}", a.bottom, a.top, left.join(","))
}

fn arc_json(a: &Arc) -> serde_json::Value {
    let left: Vec<u8> = (a.bottom + 1..a.top)
        .filter(|&p| a.passes_left_of(p))
        .collect();
    serde_json::json!({
        "bottom": a.bottom,
        "top": a.top,
        "left": left,
        "class": class_name(classify_arc(a)),
    })
}

fn print_diagram(d: &ArcDiagram, with_class: bool) {
    if d.num_arcs() == 0 {
        outln!("empty diagram");
        return;
    }
    for a in d.arcs() {
        if with_class {
            outln!("{}  {}", arc_line(a), class_name(classify_arc(a)));
        } else {
            outln!("{}", arc_line(a));
        }
    }
}

/// One-line notation: contiguous digits (`31452`) or comma-separated values.
fn parse_line(text: &str) -> anyhow::Result<Vec<u8>> {
    let line: Vec<u8> = if text.contains(',') {
        text.split(',')
            .map(|v| v.trim().parse::<u8>())
            .collect::<Result<_, _>>()
            .with_context(|| format!("cannot read `{text}` as one-line notation"))?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as u8)
                    .with_context(|| format!("cannot read `{text}` as one-line notation"))
            })
            .collect::<Result<_, _>>()?
    };
    validate_line(&line)?;
    Ok(line)
}

/// Comma-separated point values; the empty string is the empty set.
fn parse_subset(text: &str) -> anyhow::Result<Vec<u8>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|v| v.trim().parse::<u8>())
        .collect::<Result<_, _>>()
        .with_context(|| format!("cannot read `{text}` as a point set"))
}

/// The over/under marks named by `--coxeter` for lines of length `len`.
fn parse_barring(choice: &str, len: usize) -> anyhow::Result<Barring> {
    match choice {
        "bipartite" => Ok(Barring::bipartite(len)),
        "linear" => {
            let word: Vec<u8> = (0..len as u8 - 1).collect();
            Ok(Barring::from_word(&word)?)
        }
        _ => {
            let Some(digits) = choice.strip_prefix("word:") else {
                bail!("--coxeter takes `bipartite`, `linear`, or `word:<letters>`");
            };
            let mut word: Vec<u8> = digits
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .with_context(|| format!("cannot read `{digits}` as a word"))
                })
                .collect::<Result<_, _>>()?;
            // Letters may be given 1-indexed; shift them down when no 0 occurs.
            if !word.contains(&0) {
                for w in &mut word {
                    *w -= 1;
                }
            }
            Ok(Barring::from_word(&word)?)
        }
    }
}

fn cmd_inspect_perm(args: PermArgs) -> anyhow::Result<usize> {
    let line = parse_line(&args.line)?;
    let barring = parse_barring(&args.coxeter, line.len())?;
    let d = delta(&line);
    let alternating: usize = d
        .arcs()
        .iter()
        .filter(|a| !matches!(classify_arc(a), ArcClass::Neither))
        .count();
    let endpoints = if d.is_alternating() {
        Some(pi_map(&d)?)
    } else {
        None
    };
    let bisortable = is_bisortable(&line, &barring);

    if args.format == Format::Json {
        let value = serde_json::json!({
            "line": line,
            "arcs": d.arcs().iter().map(arc_json).collect::<Vec<_>>(),
            "alternating_arcs": alternating,
            "alternating": d.is_alternating(),
            "s": endpoints.as_ref().map(|(s, _)| s.clone()),
            "t": endpoints.as_ref().map(|(_, t)| t.clone()),
            "coxeter": args.coxeter,
            "bisortable": bisortable,
        });
        outln!("{}", serde_json::to_string_pretty(&value)?);
        return Ok(0);
    }

    outln!(
        "one-line: {}",
        line.iter()
            .map(u8::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    print_diagram(&d, true);
    let plural = if alternating == 1 { "arc" } else { "arcs" };
    if alternating == d.num_arcs() {
        outln!("{alternating} alternating {plural}");
    } else {
        outln!("{alternating} alternating {plural} of {}", d.num_arcs());
    }
    match &endpoints {
        Some((s, t)) => outln!("endpoint sets: S={s:?} T={t:?}"),
        None => outln!("endpoint sets: none (diagram is not alternating)"),
    }
    outln!(
        "{} ({})",
        if bisortable {
            "bisortable"
        } else {
            "not bisortable"
        },
        args.coxeter
    );
    Ok(0)
}

fn cmd_inspect_eta(args: EtaArgs) -> anyhow::Result<usize> {
    let s = parse_subset(&args.s)?;
    let t = parse_subset(&args.t)?;
    let d = eta(&s, &t, args.n)?;
    if args.format == Format::Json {
        let value = serde_json::json!({
            "n": args.n,
            "s": s,
            "t": t,
            "arcs": d.arcs().iter().map(arc_json).collect::<Vec<_>>(),
        });
        outln!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        print_diagram(&d, false);
    }
    Ok(0)
}
