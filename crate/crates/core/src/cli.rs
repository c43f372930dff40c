//! The `pack2dom` command line.
//!
//! Exit codes: 0 success, 1 unexpected I/O failure while writing output,
//! 2 unreadable or unparseable input, 3 solver bound exceeded, 4 invalid
//! parameters, 5 a checked claim failed on some graph.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::edgelist::{looks_like_edge_list, parse_edge_lists, to_edge_list};
use crate::enumeration::{enumerate_connected, ingest_graph6, GraphStream};
use crate::error::GraphError;
use crate::family::{generate_family, recognize};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::verification::{run_survey, Claim, GraphReport, Invariants, LemmaMode, SurveyOptions};

pub mod exit {
    pub const OK: i32 = 0;
    pub const OUTPUT: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BOUND: i32 = 3;
    pub const PARAMS: i32 = 4;
    pub const COUNTEREXAMPLE: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "pack2dom",
    version,
    about = "Domination vs. edge 2-packing: exact invariants and exhaustive checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute n, m, γ, β, α, ν₂, Δ, δ and connectedness per input graph.
    Invariants(InvariantsArgs),
    /// Emit the tree T(s, t).
    Generate(GenerateArgs),
    /// Decide membership in the T(s, t) family per input graph.
    Recognize(RecognizeArgs),
    /// Dump the builtin connected-graph stream as graph6.
    Enumerate(EnumerateArgs),
    /// Check every claim over a corpus and write reports.
    Survey(SurveyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file, or "-" for stdin.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
    /// Output file (stdout when absent).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out_format: OutFormat,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(short)]
    pub s: usize,
    #[arg(short)]
    pub t: usize,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
    /// Also print the role map as JSON.
    #[arg(long)]
    pub roles: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[command(flatten)]
    pub io: InputArgs,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub builtin: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    /// Enumerate all connected graphs on exactly N vertices.
    #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
    pub builtin: Option<usize>,
    /// graph6 corpus, one graph per line ("-" for stdin).
    #[arg(long)]
    pub corpus: Option<String>,
    /// Per-graph reports destination (JSON lines, or CSV with --out-format csv).
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    pub out_format: OutFormat,
    /// Summary JSON destination (stdout when absent).
    #[arg(long)]
    pub summary: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Progress file; rerunning with the same file resumes the survey.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Skip 2-packing enumeration when a lemma's conclusion already holds.
    #[arg(long)]
    pub fast_lemmas: bool,
}

/// A user-facing failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        let code = if e.is_bound() {
            exit::BOUND
        } else if matches!(e, GraphError::InvalidParams(_)) {
            exit::PARAMS
        } else {
            exit::PARSE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure {
            code: exit::OUTPUT,
            message: format!("write failed: {e}"),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Failure {
        Failure {
            code: exit::OUTPUT,
            message: format!("csv output failed: {e}"),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::PARSE
            } else {
                exit::OK
            };
        }
    };
    let outcome = match cli.command {
        Command::Invariants(a) => cmd_invariants(&a),
        Command::Generate(a) => cmd_generate(&a),
        Command::Recognize(a) => cmd_recognize(&a),
        Command::Enumerate(a) => cmd_enumerate(&a),
        Command::Survey(a) => cmd_survey(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("pack2dom: {}", f.message);
            f.code
        }
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    match path {
        Some(p) => {
            let file = fs::File::create(p).map_err(|source| GraphError::Io {
                path: p.to_path_buf(),
                source,
            })?;
            Ok(Box::new(io::BufWriter::new(file)))
        }
        None => Ok(Box::new(io::BufWriter::new(io::stdout().lock()))),
    }
}

fn read_input(input: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if input == "-" {
        io::stdin()
            .lock()
            .read_to_string(&mut text)
            .map_err(|source| GraphError::Io {
                path: PathBuf::from("<stdin>"),
                source,
            })?;
    } else {
        text = fs::read_to_string(input).map_err(|source| GraphError::Io {
            path: PathBuf::from(input),
            source,
        })?;
    }
    Ok(text)
}

/// Input graphs, each with its graph6 string when it has one.
fn load_graphs(io_args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let text = read_input(&io_args.input)?;
    let label = if io_args.input == "-" {
        "<stdin>"
    } else {
        &io_args.input
    };
    let format = match io_args.format {
        InputFormat::Auto if looks_like_edge_list(&text) => InputFormat::Edgelist,
        InputFormat::Auto => InputFormat::Graph6,
        f => f,
    };
    match format {
        InputFormat::Edgelist => {
            let parsed = parse_edge_lists(&text).map_err(|e| match e {
                GraphError::AtLine { line, source, .. } => GraphError::AtLine {
                    path: label.to_string(),
                    line,
                    source,
                },
                other => other,
            })?;
            Ok(parsed
                .into_iter()
                .map(|p| {
                    if p.duplicates > 0 {
                        log::warn!(
                            "{label}:{}: collapsed {} duplicate edge(s)",
                            p.line,
                            p.duplicates
                        );
                    }
                    p.graph
                })
                .collect())
        }
        _ => {
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let g = parse_graph6(line).map_err(|e| GraphError::AtLine {
                    path: label.to_string(),
                    line: i + 1,
                    source: Box::new(e),
                })?;
                out.push(g);
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Serialize)]
struct InvariantRecord {
    index: usize,
    g6: Option<String>,
    n: usize,
    m: usize,
    gamma: usize,
    beta: usize,
    alpha: usize,
    nu2: usize,
    max_degree: usize,
    min_degree: usize,
    connected: bool,
}

pub fn cmd_invariants(args: &InvariantsArgs) -> CmdResult {
    let graphs = load_graphs(&args.io)?;
    let mut records = Vec::with_capacity(graphs.len());
    for (index, g) in graphs.iter().enumerate() {
        let inv = Invariants::compute(g)?;
        records.push(InvariantRecord {
            index,
            g6: to_graph6(g).ok(),
            n: inv.n,
            m: inv.m,
            gamma: inv.gamma,
            beta: inv.beta,
            alpha: inv.alpha,
            nu2: inv.nu2,
            max_degree: inv.max_degree,
            min_degree: inv.min_degree,
            connected: inv.connected,
        });
    }
    let mut out = open_output(args.io.output.as_deref())?;
    match args.out_format {
        OutFormat::Json => {
            for r in &records {
                serde_json::to_writer(&mut out, r).map_err(io::Error::from)?;
                out.write_all(b"\n")?;
            }
        }
        OutFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &records {
                w.serialize(r)?;
            }
            if records.is_empty() {
                w.write_record([
                    "index",
                    "g6",
                    "n",
                    "m",
                    "gamma",
                    "beta",
                    "alpha",
                    "nu2",
                    "max_degree",
                    "min_degree",
                    "connected",
                ])?;
            }
            w.flush()?;
        }
        OutFormat::Text => {
            for r in &records {
                writeln!(
                    out,
                    "#{} {} n={} m={} gamma={} beta={} alpha={} nu2={} max_degree={} min_degree={} connected={}",
                    r.index,
                    r.g6.as_deref().unwrap_or("-"),
                    r.n,
                    r.m,
                    r.gamma,
                    r.beta,
                    r.alpha,
                    r.nu2,
                    r.max_degree,
                    r.min_degree,
                    r.connected
                )?;
            }
        }
    }
    out.flush()?;
    Ok(exit::OK)
}

pub fn cmd_generate(args: &GenerateArgs) -> CmdResult {
    let (g, roles) = generate_family(args.s, args.t).map_err(|e| Failure {
        code: exit::PARAMS,
        message: e.to_string(),
    })?;
    let mut out = open_output(args.output.as_deref())?;
    match args.format {
        InputFormat::Edgelist => out.write_all(to_edge_list(&g).as_bytes())?,
        _ => writeln!(out, "{}", to_graph6(&g)?)?,
    }
    if args.roles {
        serde_json::to_writer(&mut out, &roles).map_err(io::Error::from)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(exit::OK)
}

pub fn cmd_recognize(args: &RecognizeArgs) -> CmdResult {
    let graphs = load_graphs(&args.io)?;
    let mut out = open_output(args.io.output.as_deref())?;
    for g in &graphs {
        writeln!(out, "{}", recognize(g))?;
    }
    out.flush()?;
    Ok(exit::OK)
}

pub fn cmd_enumerate(args: &EnumerateArgs) -> CmdResult {
    let stream = enumerate_connected(args.builtin)?;
    let mut out = open_output(args.output.as_deref())?;
    for g in stream {
        writeln!(out, "{}", to_graph6(&g)?)?;
    }
    out.flush()?;
    Ok(exit::OK)
}

fn write_survey_csv<W: Write>(out: W, reports: &[GraphReport]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = [
        "g6", "n", "m", "gamma", "beta", "alpha", "nu2", "family_s", "family_t",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    header.extend(Claim::ALL.iter().map(|c| c.id().to_string()));
    header.push("note".into());
    w.write_record(&header)?;
    for r in reports {
        let mut row = vec![
            r.g6.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.gamma.to_string(),
            r.beta.to_string(),
            r.alpha.to_string(),
            r.nu2.to_string(),
            r.family.map(|f| f.s.to_string()).unwrap_or_default(),
            r.family.map(|f| f.t.to_string()).unwrap_or_default(),
        ];
        row.extend(r.flags.iter().map(|(_, f)| f.as_str().to_string()));
        row.push(r.note.clone().unwrap_or_default());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_survey(args: &SurveyArgs) -> CmdResult {
    let stream: GraphStream = match (&args.builtin, &args.corpus) {
        (Some(n), _) => enumerate_connected(*n)?,
        (None, Some(path)) if path == "-" => crate::enumeration::ingest_graph6_reader(
            io::stdin().lock(),
            crate::enumeration::StreamSource::Named("stdin".into()),
            true,
        )?,
        (None, Some(path)) => ingest_graph6(Path::new(path), true)?,
        (None, None) => unreachable!("clap requires --builtin or --corpus"),
    };
    let json_reports = args.out_format == OutFormat::Json;
    let options = SurveyOptions {
        workers: args.workers,
        lemma_mode: if args.fast_lemmas {
            LemmaMode::ShortCircuit
        } else {
            LemmaMode::Exhaustive
        },
        reports_path: if json_reports {
            args.output.clone()
        } else {
            None
        },
        checkpoint: if json_reports {
            args.checkpoint.clone()
        } else {
            None
        },
        chunk_size: None,
    };
    if args.checkpoint.is_some() && options.checkpoint.is_none() {
        log::warn!("--checkpoint requires JSON reports written to --output; ignoring it");
    }
    let outcome = run_survey(stream, &options)?;
    if !json_reports {
        if let Some(path) = &args.output {
            write_survey_csv(open_output(Some(path))?, &outcome.reports)?;
        }
    }
    let mut out = open_output(args.summary.as_deref())?;
    serde_json::to_writer_pretty(&mut out, &outcome.summary).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    out.flush()?;
    if outcome.summary.failures() > 0 {
        for c in &outcome.summary.counterexamples {
            eprintln!("pack2dom: counterexample to {}: {}", c.claim, c.g6);
        }
        return Ok(exit::COUNTEREXAMPLE);
    }
    Ok(exit::OK)
}

/// Reads graph6 lines from a reader; used by tests and embedding callers.
pub fn graphs_from_graph6_reader<R: BufRead>(reader: R) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| GraphError::Io {
            path: PathBuf::from("<reader>"),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_graph6(&line).map_err(|e| GraphError::AtLine {
            path: "<reader>".into(),
            line: i + 1,
            source: Box::new(e),
        })?);
    }
    Ok(out)
}
