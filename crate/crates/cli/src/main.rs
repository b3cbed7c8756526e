//! `activity-vec`: activity log -> TF-IDF matrix -> bipartite graph ->
//! statistics or Gephi export.
//!
//! Exit codes: 0 success, 2 usage or I/O error (including malformed input),
//! 3 empty or degenerate input.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use activity_vec::{
    build_corpus, build_graph, corpus_csv, degree_statistics, edge_csv, matrix_csv, parse_csv,
    parse_jsonl, statistics, to_dot, to_gexf, vectorize, ActivityCorpus, BipartiteGraphF64,
    DisplayMode, Error, ExportFormat, GraphOptions, GraphStatisticsF64, TfMode,
};
use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "activity-vec",
    version,
    about = "TF-IDF analysis of social-network activity logs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the TF-IDF weight matrix as CSV.
    Vectorize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "full", value_name = "full|paper")]
        display: String,
        /// Also print the idf value of every actor.
        #[arg(long)]
        show_idf: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the graph statistics panel.
    Stats {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        graph: GraphArgs,
        /// Emit `key=value` lines instead of labelled text.
        #[arg(long)]
        porcelain: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the graph (or matrix/corpus) in an interchange format.
    Export {
        #[arg(long)]
        input: PathBuf,
        /// Output format: gexf, dot, edge-csv, matrix-csv or corpus-csv.
        #[arg(long, default_value = "gexf")]
        format: String,
        /// Input format; inferred from the file extension when omitted.
        #[arg(long, value_name = "jsonl|csv")]
        input_format: Option<String>,
        #[arg(long, default_value = "binary", value_name = "binary|raw_count")]
        tf_mode: String,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value = "full", value_name = "full|paper")]
        display: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, value_name = "jsonl|csv")]
    format: Option<String>,
    #[arg(long, default_value = "binary", value_name = "binary|raw_count")]
    tf_mode: String,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Keep edges whose weight is strictly above this value.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    threshold: f64,
    /// Keep objects and actors that end up without edges.
    #[arg(long)]
    keep_isolated: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Degenerate(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Degenerate(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Degenerate(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::EmptyCorpus | Error::StatisticsUndefined { .. } => {
                Self::Degenerate(err.to_string())
            }
            other => Self::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum InputFormat {
    Jsonl,
    Csv,
}

fn input_format(path: &Path, explicit: Option<&str>) -> CliResult<InputFormat> {
    let name = match explicit {
        Some(f) => f.to_owned(),
        None => path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .ok_or_else(|| {
                Failure::Usage(format!(
                    "cannot infer input format of {}; pass --format jsonl|csv",
                    path.display()
                ))
            })?,
    };
    match name.as_str() {
        "jsonl" | "ndjson" | "json" => Ok(InputFormat::Jsonl),
        "csv" => Ok(InputFormat::Csv),
        other => Err(Failure::Usage(format!(
            "unsupported input format {other:?} (expected jsonl or csv)"
        ))),
    }
}

fn load_corpus(path: &Path, format: InputFormat) -> CliResult<ActivityCorpus> {
    let file = File::open(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let reader = BufReader::new(file);
    let records = match format {
        InputFormat::Jsonl => parse_jsonl(reader),
        InputFormat::Csv => parse_csv(reader),
    }
    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(build_corpus(&records)?)
}

fn parse_flag<T: std::str::FromStr<Err = Error>>(value: &str) -> CliResult<T> {
    value
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn graph_options(args: &GraphArgs) -> GraphOptions<f64> {
    GraphOptions {
        threshold: args.threshold,
        keep_isolated: args.keep_isolated,
    }
}

/// Primary output goes to `--output` or stdout; progress and side reports go
/// to stdout when the primary output is a file, otherwise to stderr.
struct Sink {
    output: Option<PathBuf>,
}

impl Sink {
    fn write(&self, text: &str) -> CliResult<()> {
        match &self.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
            None => io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("cannot write to stdout: {e}"))),
        }
    }

    fn report(&self, line: &str) {
        if self.output.is_some() {
            println!("{line}");
        } else {
            eprintln!("{line}");
        }
    }
}

fn format_statistics(s: &GraphStatisticsF64, porcelain: bool) -> String {
    if porcelain {
        format!(
            "diameter={}\nradius={}\naverage_path_length={}\nnumber_of_shortest_paths={}\n\
             average_weighted_degree={}\ngraph_density={}\ncomponents={}\nnodes={}\nedges={}\n",
            s.diameter,
            s.radius,
            s.average_path_length,
            s.shortest_path_pair_count,
            s.average_weighted_degree,
            s.density,
            s.component_count,
            s.node_count,
            s.edge_count,
        )
    } else {
        format!(
            "Diameter: {}\nRadius: {}\nAverage Path length: {:.4}\nNumber of shortest paths: {}\n\
             Average Weighted Degree: {:.4}\nGraph Density: {:.3}\nComponents: {}\n",
            s.diameter,
            s.radius,
            s.average_path_length,
            s.shortest_path_pair_count,
            s.average_weighted_degree,
            s.density,
            s.component_count,
        )
    }
}

fn graph_statistics(graph: &BipartiteGraphF64) -> CliResult<GraphStatisticsF64> {
    statistics(graph).map_err(|e| {
        let degrees = degree_statistics(graph);
        Failure::Degenerate(format!(
            "{e} (graph has {} node(s), {} edge(s), average weighted degree {})",
            degrees.node_count, degrees.edge_count, degrees.average_weighted_degree
        ))
    })
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Vectorize {
            input,
            display,
            show_idf,
            output,
        } => {
            let display: DisplayMode = parse_flag(&display)?;
            let tf_mode: TfMode = parse_flag(&input.tf_mode)?;
            let corpus = load_corpus(
                &input.input,
                input_format(&input.input, input.format.as_deref())?,
            )?;
            let (idf, weights) = vectorize::<f64>(&corpus, tf_mode)?;
            let sink = Sink { output };
            sink.write(&matrix_csv(&weights, display))?;
            if show_idf {
                for (actor, value) in idf.iter() {
                    sink.report(&format!("idf {actor} = {}", display.render(value)));
                }
            }
        }
        Command::Stats {
            input,
            graph,
            porcelain,
            output,
        } => {
            let tf_mode: TfMode = parse_flag(&input.tf_mode)?;
            let corpus = load_corpus(
                &input.input,
                input_format(&input.input, input.format.as_deref())?,
            )?;
            let (_, weights) = vectorize::<f64>(&corpus, tf_mode)?;
            let g = build_graph(&weights, &graph_options(&graph))?;
            let stats = graph_statistics(&g)?;
            Sink { output }.write(&format_statistics(&stats, porcelain))?;
        }
        Command::Export {
            input,
            format,
            input_format: explicit_input,
            tf_mode,
            graph,
            display,
            output,
        } => {
            let format: ExportFormat = parse_flag(&format)?;
            let tf_mode: TfMode = parse_flag(&tf_mode)?;
            let display: DisplayMode = parse_flag(&display)?;
            let corpus = load_corpus(&input, input_format(&input, explicit_input.as_deref())?)?;
            let (_, weights) = vectorize::<f64>(&corpus, tf_mode)?;
            let g = build_graph(&weights, &graph_options(&graph))?;
            let text = match format {
                ExportFormat::Gexf => to_gexf(&g),
                ExportFormat::Dot => to_dot(&g),
                ExportFormat::EdgeCsv => edge_csv(&g),
                ExportFormat::MatrixCsv => matrix_csv(&weights, display),
                ExportFormat::CorpusCsv => corpus_csv(&corpus),
            };
            let sink = Sink { output };
            sink.write(&text)?;
            sink.report(&format!(
                "{}: {} nodes / {} edges",
                format.name(),
                g.node_count(),
                g.edge_count()
            ));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("activity-vec: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
