//! Command-line front end: scenario documents, builtin scenarios, report
//! rendering, and the argument-driven entry point.
//!
//! Exit codes: 0 when the requested output was produced (and, for `verify`
//! and `scan`, every executed check passed), 1 for failed checks or runtime
//! errors, 2 for bad arguments.

pub mod builtin;
pub mod document;
pub mod report;

use crate::error::Result;
use crate::rgroup::{FamilyPolicy, Scenario};
use builtin::{builtin_scenario, BUILTIN_NAMES};
use clap::{Args, Parser, Subcommand};
use document::{build, parse_document};
use report::{
    render_chartable, render_dual, render_info, render_scan, render_steinberg,
    render_verify, Format,
};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "steindual",
    version,
    about = "Exact checker for duality identities of finite R-group scenarios"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the geometry of a scenario: roots, lattice, strata
    Info(TargetArgs),
    /// Print the character table of the total group
    Chartable(TargetArgs),
    /// Print the duality operator on the chi-isotypic basis
    Dual(TargetArgs),
    /// Print the Steinberg character and its ellipticity
    Steinberg(TargetArgs),
    /// Check every duality claim on one scenario
    Verify(TargetArgs),
    /// Check every claim on every builtin scenario
    Scan(ScanArgs),
}

#[derive(Args)]
struct TargetArgs {
    /// Path to a scenario document (TOML)
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "builtin",
        required_unless_present = "builtin"
    )]
    scenario: Option<PathBuf>,

    /// Name of a bundled scenario
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,

    /// Override the Levi family policy of the document
    #[arg(long, value_parser = ["arthur", "all", "support"])]
    family: Option<String>,

    /// Output format
    #[arg(long, default_value = "table", value_parser = ["table", "machine"])]
    format: String,

    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Override the Levi family policy of every builtin
    #[arg(long, value_parser = ["arthur", "all", "support"])]
    family: Option<String>,

    /// Output format
    #[arg(long, default_value = "table", value_parser = ["table", "machine"])]
    format: String,

    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        // clap exits 2 on usage errors and 0 on --help/--version
        Err(e) => e.exit(),
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Info(a) => simple(&a, render_info),
        Command::Chartable(a) => simple(&a, render_chartable),
        Command::Dual(a) => simple(&a, render_dual),
        Command::Steinberg(a) => simple(&a, render_steinberg),
        Command::Verify(a) => {
            let s = load(&a)?;
            let rep = crate::duality::verify(&s)?;
            let text = render_verify(&rep, Format::parse(&a.format)?);
            deliver(&text, &a.out)?;
            Ok(if rep.all_executed_pass() { 0 } else { 1 })
        }
        Command::Scan(a) => {
            let policy = parse_policy(&a.family)?;
            let label = a.family.as_deref().unwrap_or("default").to_string();
            let mut reports = Vec::with_capacity(BUILTIN_NAMES.len());
            for name in BUILTIN_NAMES {
                let s = builtin_scenario(name, policy)?;
                reports.push(crate::duality::verify(&s)?);
            }
            let text = render_scan(&label, &reports, Format::parse(&a.format)?);
            deliver(&text, &a.out)?;
            Ok(if reports.iter().all(|r| r.all_executed_pass()) { 0 } else { 1 })
        }
    }
}

fn simple(a: &TargetArgs, render: fn(&Scenario, Format) -> Result<String>) -> Result<i32> {
    let s = load(a)?;
    let text = render(&s, Format::parse(&a.format)?)?;
    deliver(&text, &a.out)?;
    Ok(0)
}

fn parse_policy(family: &Option<String>) -> Result<Option<FamilyPolicy>> {
    family.as_deref().map(FamilyPolicy::parse).transpose()
}

fn load(a: &TargetArgs) -> Result<Scenario> {
    let policy = parse_policy(&a.family)?;
    match (&a.scenario, &a.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            let doc = parse_document(&text)?;
            build(&doc, policy)
        }
        (None, Some(name)) => builtin_scenario(name, policy),
        // clap enforces exactly one of the two flags
        _ => unreachable!(),
    }
}

fn deliver(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
