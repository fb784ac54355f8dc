//! Command-line front end for the `alcove` library.
//!
//! Every run prints the fully resolved job configuration together with its result, so any
//! output can be regenerated from its own header.

pub mod certify;
pub mod commands;
pub mod config;
pub mod coxeter;
pub mod output;
pub mod pipeline;
pub mod tables;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{DdahaArgs, SpiralArgs, Which};
use crate::config::{Format, JobConfig, Overrides, ThetaBasis};
use crate::output::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Check = 1,
    Config = 2,
    Cap = 3,
}

#[derive(Debug, Clone)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn new(exit: Exit, message: impl Into<String>) -> Self {
        Self { exit, message: message.into() }
    }
}

impl From<alcove::Error> for CliError {
    fn from(e: alcove::Error) -> Self {
        use alcove::Error::*;
        let exit = match &e {
            BallTooLarge { .. } | BallTooSmall { .. } => Exit::Cap,
            IllegalType(_) | NotIrreducible | InvalidRootData(_) | NotAdmissible(_) | ImproperType(_)
            | InvalidParameters(_) | UnknownNode(_) | Parse(_) | Dimension { .. } | TypesDiffer
            | TypeNotContained | NotRelevant | NotFinite(_) => Exit::Config,
            _ => Exit::Check,
        };
        Self::new(exit, e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Debug, Parser)]
#[command(name = "alcove", version, about = "Exact computations with affine Weyl groups, relative Coxeter groups, spirals and degenerate double affine Hecke algebras")]
#[command(after_help = "Exit codes: 0 ok, 1 check failure, 2 configuration error, 3 resource cap hit.")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// TOML job file; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Root system label, e.g. B2, C3, BC1, G2.
    #[arg(long, global = true)]
    pub system: Option<String>,
    /// Use the finite Weyl group (nodes 1..n) instead of the affine one.
    #[arg(long, global = true)]
    pub finite: bool,
    /// Parabolic subset Σ, e.g. 1,3.
    #[arg(long, global = true, value_name = "NODES")]
    pub sigma: Option<String>,
    /// Grading cocharacter θ̃ as a rational vector, e.g. "1/2" or "[1,0]".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, global = true, value_enum)]
    pub theta_basis: Option<ThetaBasis>,
    #[arg(long, global = true)]
    pub m: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Hecke parameters: one value for every node, or node=value pairs.
    #[arg(long, global = true)]
    pub c: Option<String>,
    /// Specialization point of u in h = u c (default d/2m).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub u: Option<String>,
    /// Accept degenerate Hecke parameters (c < 2, h = 0).
    #[arg(long, global = true)]
    pub unsafe_params: bool,
    /// Random samples per randomized check.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Maximum number of group elements any enumeration may visit.
    #[arg(long, global = true)]
    pub ball_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data, positive roots and the affine simple roots.
    Root,
    /// Ball sizes by length, or details of one element.
    Weyl {
        /// Element as a word, e.g. s1*s0*s2.
        #[arg(long)]
        word: Option<String>,
    },
    /// The relative Coxeter system of Σ.
    Relative,
    /// Facets, relative positions and fixed chambers.
    Complex {
        #[command(subcommand)]
        cmd: ComplexCmd,
    },
    /// P/L/U membership table of a spiral.
    Spiral(SpiralOpts),
    /// Normal forms, relations and standard modules of the Hecke algebra.
    Ddaha {
        /// Element literal, e.g. "s1*s0*x1^2 + (3/2)*s1".
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        /// Right factor multiplied onto --expr.
        #[arg(long, allow_hyphen_values = true)]
        times: Option<String>,
        /// Verify involutions, braid and cross relations.
        #[arg(long)]
        check: bool,
        /// Weight of the standard module, truncated at --depth.
        #[arg(long, allow_hyphen_values = true)]
        lambda0: Option<String>,
        /// Also list the orbit of --lambda0 up to --radius.
        #[arg(long)]
        orbit: bool,
        /// Build the algebra over the root system identified from the relative system of Σ.
        #[arg(long)]
        from_sigma: bool,
    },
    /// Run the invariant suite for the configured system.
    Certify,
    /// Emit a table. Columns:
    /// weyl-ball: length, word, mu, w;
    /// facets: rep, length, type, dim, interior;
    /// spiral: n, member, P, L, U;
    /// relpos: nu, nuprime, double_coset, good, relative_element;
    /// weights: weight, multiplicity, eigenspace_dim, semisimple.
    #[command(verbatim_doc_comment)]
    Table {
        #[arg(value_enum)]
        which: Which,
        #[command(flatten)]
        spiral: SpiralOpts,
        #[arg(long, allow_hyphen_values = true)]
        lambda0: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct SpiralOpts {
    /// Facet label word|{J}; defaults to the fundamental alcove.
    #[arg(long)]
    pub facet: Option<String>,
    /// Cocharacter λ in coweight coordinates instead of a facet.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, default_value = "-4:4", allow_hyphen_values = true)]
    pub window: String,
}

#[derive(Debug, Subcommand)]
pub enum ComplexCmd {
    /// All facets y W_J with ℓ(y) ≤ radius.
    Facets,
    /// Relative position of two facets given as word|{J}.
    Relpos {
        #[arg(long)]
        nu: String,
        #[arg(long)]
        nuprime: String,
    },
    /// Chambers of the Σ-fixed subcomplex and the relative group action on them.
    Fixed,
}

impl GlobalArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            system: self.system.clone(),
            finite: self.finite,
            sigma: self.sigma.clone(),
            theta: self.theta.clone(),
            theta_basis: self.theta_basis,
            m: self.m,
            d: self.d,
            radius: self.radius,
            depth: self.depth,
            c: self.c.clone(),
            u: self.u.clone(),
            unsafe_params: self.unsafe_params,
            format: self.format,
            seed: self.seed,
            samples: self.samples,
            ball_cap: self.ball_cap,
        }
    }
}

fn spiral_args(o: &SpiralOpts) -> SpiralArgs<'_> {
    SpiralArgs { facet: o.facet.as_deref(), lambda: o.lambda.as_deref(), window: &o.window }
}

pub fn execute(cli: &Cli) -> Result<(JobConfig, Report), CliError> {
    let cfg = JobConfig::load(cli.global.config.as_deref(), &cli.global.overrides())?;
    let report = match &cli.command {
        Command::Root => commands::root(&cfg)?,
        Command::Weyl { word } => commands::weyl(&cfg, word.as_deref())?,
        Command::Relative => commands::relative(&cfg)?,
        Command::Complex { cmd } => match cmd {
            ComplexCmd::Facets => commands::complex_facets(&cfg)?,
            ComplexCmd::Relpos { nu, nuprime } => commands::complex_relpos(&cfg, nu, nuprime)?,
            ComplexCmd::Fixed => commands::complex_fixed(&cfg)?,
        },
        Command::Spiral(o) => commands::spiral(&cfg, &spiral_args(o))?,
        Command::Ddaha { expr, times, check, lambda0, orbit, from_sigma } => commands::ddaha(
            &cfg,
            &DdahaArgs {
                expr: expr.as_deref(),
                times: times.as_deref(),
                check: *check,
                lambda0: lambda0.as_deref(),
                orbit: *orbit,
                from_sigma: *from_sigma,
            },
        )?,
        Command::Certify => commands::certify(&cfg)?,
        Command::Table { which, spiral, lambda0 } => commands::table(&cfg, *which, &spiral_args(spiral), lambda0.as_deref())?,
    };
    Ok((cfg, report))
}

/// Parses `args`, runs the command and returns `(stdout, stderr, exit code)`.
pub fn run<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Config as i32 } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() { (String::new(), text, code) } else { (text, String::new(), code) };
        }
    };
    match execute(&cli) {
        Ok((cfg, report)) => (report.render(&cfg), String::new(), report.exit as i32),
        Err(e) => (String::new(), format!("error: {}\n", e.message), e.exit as i32),
    }
}
