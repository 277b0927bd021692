//! Command-line front end for `mvcomp`: reads JSON descriptions of finite
//! MV-algebras and spectral signatures and writes deterministic reports.

pub mod commands;
pub mod description;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mvcomp::signatures::Divisibility;
use mvcomp::{Limits, MvError};
use serde_json::Value;

use commands::Context;
use description::{parse_description, Description};
use report::Report;

#[derive(Debug, Parser)]
#[command(name = "mvcomp", version, about = "Exact computations with finite MV-algebras and their completions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    pub output: Output,

    /// Largest carrier any construction may build.
    #[arg(long, value_name = "N", global = true)]
    pub max_carrier: Option<usize>,

    /// Read the divisibility condition literally: (n0 - 1) | n.
    #[arg(long, global = true)]
    pub strict_divisibility: bool,

    /// Rebuild every printed witness from its element map and re-check it.
    #[arg(long, global = true)]
    pub verify_witness: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the MV-algebra axioms.
    Validate { file: PathBuf },
    /// Maximal ideals, their ranks and the radical.
    Spectrum { file: PathBuf },
    /// Every ideal, with primality and maximality.
    Ideals { file: PathBuf },
    /// Build a completion.
    Complete {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Decide one of the characterisation results.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        other: Option<PathBuf>,
    },
    /// Reason about spectral signatures.
    Signature {
        #[arg(value_enum)]
        kind: SignatureKind,
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        other: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    InverseLimit,
    MaxfProduct,
    Macneille,
    Both,
}

impl Method {
    pub fn id(self) -> &'static str {
        match self {
            Method::InverseLimit => "inverse-limit",
            Method::MaxfProduct => "maxf-product",
            Method::Macneille => "macneille",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    MainTheorem,
    SelfIso,
    MacCriterion,
    ProductPreservation,
    Regularity,
    CenterPreservation,
}

impl CheckKind {
    pub fn id(self) -> &'static str {
        match self {
            CheckKind::MainTheorem => "main-theorem",
            CheckKind::SelfIso => "self-iso",
            CheckKind::MacCriterion => "mac-criterion",
            CheckKind::ProductPreservation => "product-preservation",
            CheckKind::Regularity => "regularity",
            CheckKind::CenterPreservation => "center-preservation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignatureKind {
    Profinite,
    Macneille,
    MacCriterion,
    Divisibility,
    Equal,
}

impl SignatureKind {
    pub fn id(self) -> &'static str {
        match self {
            SignatureKind::Profinite => "profinite",
            SignatureKind::Macneille => "macneille",
            SignatureKind::MacCriterion => "mac-criterion",
            SignatureKind::Divisibility => "divisibility",
            SignatureKind::Equal => "equal",
        }
    }
}

impl Command {
    fn file(&self) -> &Path {
        match self {
            Command::Validate { file }
            | Command::Spectrum { file }
            | Command::Ideals { file }
            | Command::Complete { file, .. }
            | Command::Check { file, .. }
            | Command::Signature { file, .. } => file,
        }
    }

    fn other(&self) -> Option<&Path> {
        match self {
            Command::Check { other, .. } | Command::Signature { other, .. } => other.as_deref(),
            _ => None,
        }
    }

    fn label(&self) -> String {
        match self {
            Command::Validate { .. } => "validate".into(),
            Command::Spectrum { .. } => "spectrum".into(),
            Command::Ideals { .. } => "ideals".into(),
            Command::Complete { method, .. } => format!("complete --method {}", method.id()),
            Command::Check { kind, .. } => format!("check {}", kind.id()),
            Command::Signature { kind, .. } => format!("signature {}", kind.id()),
        }
    }
}

fn load(path: &Path) -> Result<Description, MvError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| MvError::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    parse_description(&text)
        .map_err(|e| MvError::Format(format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli, report: &mut Report, description: &Description) -> Result<(), MvError> {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_carrier {
        limits.max_carrier = n;
    }
    let ctx = Context {
        limits,
        divisibility: if cli.strict_divisibility {
            Divisibility::Literal
        } else {
            Divisibility::Subalgebra
        },
    };
    if let Command::Validate { .. } = cli.command {
        return commands::validate(report, description, &ctx);
    }
    let subject = description.build(&ctx.limits)?;
    let other = cli
        .command
        .other()
        .map(|p| load(p)?.build(&ctx.limits))
        .transpose()?;
    match cli.command {
        Command::Validate { .. } => unreachable!("handled above"),
        Command::Spectrum { .. } => commands::spectrum(report, subject, &ctx),
        Command::Ideals { .. } => commands::ideals(report, subject, &ctx),
        Command::Complete { method, .. } => commands::complete(report, subject, method, &ctx),
        Command::Check { kind, .. } => commands::check(report, kind, subject, other, &ctx),
        Command::Signature { kind, .. } => commands::signature(report, kind, subject, other, &ctx),
    }
}

/// Runs one invocation and returns its report; never panics on bad input.
pub fn run(cli: &Cli) -> Report {
    let mut report = Report::new(cli.command.label(), Value::Null);
    let description = match load(cli.command.file()) {
        Ok(d) => d,
        Err(e) => {
            report.fail_with(&e);
            return report;
        }
    };
    report.subject = serde_json::to_value(&description).expect("descriptions serialize");
    if let Err(e) = execute(cli, &mut report, &description) {
        report.witnesses.clear();
        report.fail_with(&e);
        return report;
    }
    if cli.verify_witness {
        report.verify_witnesses();
    }
    report
}

/// Renders a report in the requested format.
pub fn render(cli: &Cli, report: &Report) -> String {
    match cli.output {
        Output::Json => report.to_json(),
        Output::Text => report.to_text(),
    }
}

pub fn exit_code(report: &Report) -> i32 {
    i32::from(report.exit_hint)
}

