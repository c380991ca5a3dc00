//! Command-line front end for `vtcycle`: graph generation, per-graph
//! analysis, counting-inequality checks, batch corpus runs and brute-force
//! oracles.

mod batch;
mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use vtcycle_core::counting::LemmaError;
use vtcycle_core::{AnalysisConfig, AnalyzeError, GraphError, GroupError, SolverError};

pub use batch::{cmd_batch, BatchEntry, BatchOutcome};
pub use commands::{
    cmd_analyze, cmd_generate, cmd_oracle, cmd_verify_lemma2, cmd_write_corpus, parse_vertex_set, summary,
};

/// Process exit status. The numeric values are part of the interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    InputError = 2,
    /// A cap or time limit left the result incomplete.
    Incomplete = 3,
    /// A check that must always hold failed: a bug.
    CheckFailed = 4,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Graph {
        path: PathBuf,
        #[source]
        source: GraphError,
    },
    #[error("{path}: {source}")]
    GroupFile {
        path: PathBuf,
        #[source]
        source: GroupError,
    },
    #[error(transparent)]
    Generate(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Analyze(#[from] AnalyzeError),
    #[error(transparent)]
    Lemma(#[from] LemmaError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{0}")]
    BadArgument(String),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        let cap = matches!(
            self,
            CliError::Group(GroupError::CapExceeded(_))
                | CliError::Generate(GraphError::Group(GroupError::CapExceeded(_)))
                | CliError::Lemma(LemmaError::Group(GroupError::CapExceeded(_)))
                | CliError::Solver(SolverError::TimeLimit { .. })
        );
        if cap {
            Exit::Incomplete
        } else {
            Exit::InputError
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn seconds(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        Ok(_) => Err("must be a positive number of seconds".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Maximum number of longest cycles to enumerate
    #[arg(long, global = true, env = "VTCYCLE_CAP_CYCLES", default_value_t = 100_000, value_parser = positive)]
    pub cap_cycles: usize,
    /// Maximum number of group elements to enumerate
    #[arg(long, global = true, env = "VTCYCLE_CAP_GROUP", default_value_t = 1_000_000, value_parser = positive)]
    pub cap_group: usize,
    /// Wall-clock limit for the cycle search, in seconds [default: none]
    #[arg(long, global = true, env = "VTCYCLE_TIME_LIMIT", value_parser = seconds)]
    pub time_limit: Option<f64>,
    /// Write JSON output to this file instead of stdout
    #[arg(long, global = true, env = "VTCYCLE_JSON")]
    pub json: Option<PathBuf>,
    /// Worker threads for batch mode [default: all cores]
    #[arg(long, global = true, env = "VTCYCLE_WORKERS", value_parser = positive)]
    pub workers: Option<usize>,
    /// Suppress human-readable summaries
    #[arg(long, global = true, env = "VTCYCLE_QUIET")]
    pub quiet: bool,
}

/// Resolved run configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub cycle_cap: usize,
    pub group_cap: usize,
    pub time_limit: Option<Duration>,
    pub json: Option<PathBuf>,
    pub workers: Option<usize>,
    pub quiet: bool,
}

impl Default for Config {
    fn default() -> Self {
        let a = AnalysisConfig::default();
        Config {
            cycle_cap: a.cycle_cap,
            group_cap: a.group_cap,
            time_limit: None,
            json: None,
            workers: None,
            quiet: false,
        }
    }
}

impl From<&GlobalOpts> for Config {
    fn from(o: &GlobalOpts) -> Self {
        Config {
            cycle_cap: o.cap_cycles,
            group_cap: o.cap_group,
            time_limit: o.time_limit.map(Duration::from_secs_f64),
            json: o.json.clone(),
            workers: o.workers,
            quiet: o.quiet,
        }
    }
}

impl Config {
    pub fn analysis(&self) -> AnalysisConfig {
        AnalysisConfig {
            cycle_cap: self.cycle_cap,
            group_cap: self.group_cap,
            time_limit: self.time_limit,
            ..AnalysisConfig::default()
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "vtcycle", version, about = "Longest cycles in vertex-transitive graphs")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Graph file to write
    #[arg(short, long)]
    pub out: PathBuf,
    /// Also write a `.grp` sidecar holding a transitive group action
    #[arg(long)]
    pub with_group: bool,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Cycle C_n
    Cycle {
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Petersen graph, vertices labeled by 2-subsets of {0..4} in lex order
    Petersen {
        #[command(flatten)]
        output: Output,
    },
    /// Coxeter graph (28 vertices, cubic, girth 7)
    Coxeter {
        #[command(flatten)]
        output: Output,
    },
    /// Circulant graph on Z_n with comma-separated offsets, e.g. `8 1,4`
    Circulant {
        n: usize,
        offsets: String,
        #[command(flatten)]
        output: Output,
    },
    /// Cayley graph of the permutation group in a group file
    Cayley {
        /// Group file whose generators generate the group
        generators: PathBuf,
        /// Group file with the connection set [default: the generators]
        #[arg(long)]
        connection: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Truncation of a cubic graph read from a file
    Truncate {
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Circumference,
    Girth,
    Connectivity,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph from one of the built-in families
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Run the full analysis on one graph and report every bound check
    Analyze {
        graph: PathBuf,
        /// Group file with a transitive action [default: automorphism search for small graphs]
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Check |B||C| >= k n over every element of a transitive group
    #[command(name = "verify-lemma2")]
    VerifyLemma2 {
        graph: PathBuf,
        group: PathBuf,
        /// Vertex set B, e.g. `0,1,2`
        b: String,
        /// Vertex set C, e.g. `0,1,2`
        c: String,
    },
    /// Analyze every `.g` file in a directory, using `.grp` sidecars when present
    Batch { dir: PathBuf },
    /// Brute-force reference computations
    Oracle { kind: OracleKind, graph: PathBuf },
    /// Write the built-in vertex-transitive corpus (graphs with sidecars) to a directory
    Corpus { dir: PathBuf },
}

/// Runs a parsed command. JSON goes to `--json` or `out`; summaries go to
/// `out` when JSON went to a file and to `err` otherwise.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Exit {
    let config = Config::from(&cli.opts);
    let result = match &cli.command {
        Command::Generate { family } => cmd_generate(family, &config, out),
        Command::Analyze { graph, group } => cmd_analyze(graph, group.as_deref(), &config, out, err),
        Command::VerifyLemma2 { graph, group, b, c } => cmd_verify_lemma2(graph, group, b, c, &config, out),
        Command::Batch { dir } => cmd_batch(dir, &config).and_then(|o| o.emit(&config, out, err)),
        Command::Oracle { kind, graph } => cmd_oracle(*kind, graph, out),
        Command::Corpus { dir } => cmd_write_corpus(dir, out),
    };
    match result {
        Ok(exit) => exit,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit()
        }
    }
}

pub(crate) fn write_json(config: &Config, json: &str, out: &mut dyn Write) -> Result<bool, CliError> {
    match &config.json {
        Some(path) => {
            std::fs::write(path, json).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(true)
        }
        None => {
            out.write_all(json.as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
            Ok(false)
        }
    }
}

pub(crate) fn read_text(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}
