//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeded (and, for `verify`, the
//! property holds), 1 when `verify` found a violation, 2 for bad input or
//! usage.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::color_instance;
use crate::graph::{Color, Coloring};
use crate::interval::floor_log2;
use crate::toolkit::{self, GenError, GenSpec, Instance, InstanceError};
use crate::tor::color_bound_tor;
use crate::verify::{
    self, HyperedgeMode, Property, VerifyError, DEFAULT_MAX_PATHS, DEFAULT_MAX_SUBGRAPH_VERTICES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Success,
    Violation,
    UsageError,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::Violation => 1,
            Exit::UsageError => 2,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Instance {
        path: PathBuf,
        #[source]
        source: InstanceError,
    },
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("missing --{0} for this kind")]
    MissingParam(&'static str),
    #[error("coloring has {actual} entries but the instance has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },
}

#[derive(Debug, Parser)]
#[command(name = "cfcolor", version, about = "Unique-min conflict-free colorings and their verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated instance.
    Generate(GenerateArgs),
    /// Color an instance with base color 1.
    Color(ColorArgs),
    /// Check a coloring by brute-force enumeration.
    Verify(VerifyArgs),
    /// Summarize color usage against the applicable bound.
    Stats(StatsArgs),
    /// Render an instance, optionally colored, as Graphviz DOT.
    ExportDot(ExportDotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Chain,
    Ring,
    Tree,
    TreeOfRings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeFlag {
    Paths,
    Connected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyFlag {
    UniqueMin,
    Cf,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub rings: Option<usize>,
    #[arg(long)]
    pub min_len: Option<usize>,
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    pub instance: PathBuf,
    #[arg(short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    pub coloring: PathBuf,
    #[arg(long, value_enum, default_value = "paths")]
    pub mode: ModeFlag,
    #[arg(long, value_enum, default_value = "unique-min")]
    pub property: PropertyFlag,
    #[arg(long, default_value_t = DEFAULT_MAX_SUBGRAPH_VERTICES)]
    pub max_subgraph_vertices: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_PATHS)]
    pub max_paths: u64,
    #[arg(short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub instance: PathBuf,
    pub coloring: PathBuf,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
    #[arg(short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    pub instance: PathBuf,
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(short = 'o')]
    pub out: Option<PathBuf>,
}

/// Color usage of one coloring against the bound for its topology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub kind: &'static str,
    pub n: usize,
    /// `|T|`, for trees of rings.
    pub num_rings: Option<usize>,
    /// `|R|`, for rings and trees of rings.
    pub max_ring_len: Option<usize>,
    pub colors_used: usize,
    pub max_color: Color,
    pub bound: Color,
    /// `bound - max_color`; negative means the bound is exceeded.
    pub margin: i64,
}

/// The largest color the construction may use on `instance`.
pub fn color_bound(instance: &Instance) -> Color {
    match instance {
        Instance::Chain { n } => floor_log2(*n) + 1,
        Instance::Ring { n } => floor_log2(n - 1) + 2,
        Instance::Tree(t) => floor_log2(t.vertex_count()) + 1,
        Instance::TreeOfRings(t) => color_bound_tor(t),
    }
}

pub fn stats(instance: &Instance, coloring: &Coloring) -> Result<Stats, CliError> {
    check_length(instance, coloring)?;
    let (num_rings, max_ring_len) = match instance {
        Instance::Ring { n } => (None, Some(*n)),
        Instance::TreeOfRings(t) => (Some(t.num_rings()), Some(t.max_ring_len())),
        _ => (None, None),
    };
    let bound = color_bound(instance);
    let max_color = coloring.max_color();
    Ok(Stats {
        kind: instance.kind(),
        n: instance.vertex_count(),
        num_rings,
        max_ring_len,
        colors_used: coloring.distinct_colors(),
        max_color,
        bound,
        margin: i64::from(bound) - i64::from(max_color),
    })
}

impl Stats {
    pub fn to_text(&self) -> String {
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        format!(
            "kind: {}\nn: {}\n|T|: {}\n|R|: {}\ncolors used: {}\nmax color: {}\nbound: {}\nmargin: {}\n",
            self.kind,
            self.n,
            opt(self.num_rings),
            opt(self.max_ring_len),
            self.colors_used,
            self.max_color,
            self.bound,
            self.margin
        )
    }
}

fn check_length(instance: &Instance, coloring: &Coloring) -> Result<(), CliError> {
    let expected = instance.vertex_count();
    if coloring.len() != expected {
        return Err(CliError::LengthMismatch {
            expected,
            actual: coloring.len(),
        });
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_instance(path: &Path) -> Result<Instance, CliError> {
    toolkit::read_instance(&read_file(path)?).map_err(|source| CliError::Instance {
        path: path.to_path_buf(),
        source,
    })
}

fn load_coloring(path: &Path) -> Result<Coloring, CliError> {
    toolkit::read_coloring(&read_file(path)?).map_err(|source| CliError::Instance {
        path: path.to_path_buf(),
        source,
    })
}

fn write_output(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => io::stdout().write_all(bytes).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

pub fn gen_spec(args: &GenerateArgs) -> Result<GenSpec, CliError> {
    let need = |v: Option<usize>, name: &'static str| v.ok_or(CliError::MissingParam(name));
    Ok(match args.kind {
        Kind::Chain => GenSpec::Chain {
            n: need(args.n, "n")?,
        },
        Kind::Ring => GenSpec::Ring {
            n: need(args.n, "n")?,
        },
        Kind::Tree => GenSpec::Tree {
            n: need(args.n, "n")?,
            seed: args.seed,
        },
        Kind::TreeOfRings => GenSpec::TreeOfRings {
            num_rings: need(args.rings, "rings")?,
            min_len: need(args.min_len, "min-len")?,
            max_len: need(args.max_len, "max-len")?,
            seed: args.seed,
        },
    })
}

pub fn run(cli: &Cli) -> Result<Exit, CliError> {
    match &cli.command {
        Command::Generate(args) => {
            let instance = toolkit::generate(gen_spec(args)?)?;
            write_output(args.out.as_deref(), &toolkit::write_instance(&instance))?;
            Ok(Exit::Success)
        }
        Command::Color(args) => {
            let instance = load_instance(&args.instance)?;
            let coloring = color_instance(&instance);
            write_output(args.out.as_deref(), &toolkit::write_coloring(&coloring))?;
            Ok(Exit::Success)
        }
        Command::Verify(args) => {
            let instance = load_instance(&args.instance)?;
            let coloring = load_coloring(&args.coloring)?;
            check_length(&instance, &coloring)?;
            let mode = match args.mode {
                ModeFlag::Paths => HyperedgeMode::paths(),
                ModeFlag::Connected => HyperedgeMode::connected_subgraphs(args.max_subgraph_vertices),
            };
            let property = match args.property {
                PropertyFlag::UniqueMin => Property::UniqueMin,
                PropertyFlag::Cf => Property::ConflictFree,
            };
            let report = verify::check_property_with_budget(
                &instance.graph(),
                &coloring,
                mode,
                property,
                args.max_paths,
            )?;
            let mut bytes = serde_json::to_vec(&report).expect("report serializes");
            bytes.push(b'\n');
            write_output(args.out.as_deref(), &bytes)?;
            Ok(if report.ok {
                Exit::Success
            } else {
                Exit::Violation
            })
        }
        Command::Stats(args) => {
            let instance = load_instance(&args.instance)?;
            let coloring = load_coloring(&args.coloring)?;
            let summary = stats(&instance, &coloring)?;
            let text = if args.json {
                let mut s = serde_json::to_string(&summary).expect("stats serialize");
                s.push('\n');
                s
            } else {
                summary.to_text()
            };
            write_output(args.out.as_deref(), text.as_bytes())?;
            Ok(Exit::Success)
        }
        Command::ExportDot(args) => {
            let instance = load_instance(&args.instance)?;
            let coloring = match &args.coloring {
                Some(path) => {
                    let c = load_coloring(path)?;
                    check_length(&instance, &c)?;
                    Some(c)
                }
                None => None,
            };
            let dot = toolkit::export_dot(&instance.graph(), coloring.as_ref());
            write_output(args.out.as_deref(), dot.as_bytes())?;
            Ok(Exit::Success)
        }
    }
}
