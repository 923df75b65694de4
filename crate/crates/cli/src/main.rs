//! `coverlab`: exact computations with the monomial ideals of graphs.
//!
//! Subcommands build graphs, print cover/edge ideals and their powers,
//! compute Hilbert series, Betti tables, regularity, and multiplicities, and
//! run the verification suite. Exit status: 0 on success, 1 on computation
//! errors, 2 on usage errors.

mod graphspec;
mod output;
mod report;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use coverlab_core::betti::betti_table;
use coverlab_core::graph::SimpleGraph;
use coverlab_core::hilbert::{
    closed_form_bracket, closed_form_crown, closed_form_symbolic_multipartite, numerator,
    symbolic_multiplicity, GraphIdealKind, HilbertSeries,
};
use coverlab_core::powers::{bracket_power, power, symbolic_power};
use coverlab_core::MonomialIdeal;

use graphspec::GraphSelect;

/// Errors carrying the process exit code: 1 for computation errors, 2 for
/// usage errors (bad flags or out-of-range parameters).
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl From<coverlab_core::Error> for CliError {
    fn from(e: coverlab_core::Error) -> Self {
        use coverlab_core::Error as E;
        // Out-of-range parameters are usage errors; the message names the
        // violated precondition. Everything else is a computation error.
        let code = match e {
            E::PowerTooSmall { .. }
            | E::CrownSize { .. }
            | E::TooFewParts { .. }
            | E::EmptyPart
            | E::StageIndex { .. } => 2,
            _ => 1,
        };
        CliError { code, message: e.to_string() }
    }
}

pub fn usage_error(message: String) -> CliError {
    CliError { code: 2, message }
}

#[derive(Parser)]
#[command(
    name = "coverlab",
    version,
    about = "Exact cover-ideal algebra for graphs: powers, Hilbert series, \
             regularity, multiplicity, and a verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    #[command(flatten)]
    format: FormatFlags,
    /// Write the output to a file instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
}

#[derive(Args, Default, Clone, Copy)]
#[group(multiple = false)]
struct FormatFlags {
    /// Plain-text output (the default)
    #[arg(long, global = true)]
    text: bool,
    /// JSON output
    #[arg(long, global = true)]
    json: bool,
    /// CSV output (verification reports only)
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

impl FormatFlags {
    fn resolve(self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            Format::Text
        }
    }
}

#[derive(Clone, Copy, Default, ValueEnum, PartialEq, Eq)]
enum IdealChoice {
    /// The cover ideal of the graph
    #[default]
    Cover,
    /// The edge ideal of the graph
    Edge,
}

#[derive(Args, Clone, Copy)]
struct VariantFlags {
    /// Take the symbolic power instead of the ordinary power
    #[arg(long, conflicts_with = "bracket")]
    symbolic: bool,
    /// Take the bracket power (generatorwise s-th powers)
    #[arg(long)]
    bracket: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print its vertices and edges
    Graph {
        #[command(subcommand)]
        family: GraphFamily,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimal generators of the cover ideal
    CoverIdeal {
        #[command(flatten)]
        select: GraphSelect,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generators of the edge ideal
    EdgeIdeal {
        #[command(flatten)]
        select: GraphSelect,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Ordinary power of the selected ideal
    Power {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, value_enum, default_value_t)]
        ideal: IdealChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bracket power (generatorwise s-th powers) of the selected ideal
    BracketPower {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent (s >= 1)
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, value_enum, default_value_t)]
        ideal: IdealChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symbolic power of the selected (squarefree) ideal
    SymbolicPower {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[arg(long, value_enum, default_value_t)]
        ideal: IdealChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Hilbert series numerator of the quotient by the selected power
    Hilbert {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[command(flatten)]
        variant: VariantFlags,
        #[arg(long, value_enum, default_value_t)]
        ideal: IdealChoice,
        /// Emit the family closed form instead of computing the numerator
        #[arg(long)]
        closed_form: bool,
        /// Cancel all (1-t) factors and report dimension and multiplicity
        #[arg(long)]
        reduced: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Multigraded Betti table, regularity, and projective dimension
    Betti {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[command(flatten)]
        variant: VariantFlags,
        #[arg(long, value_enum, default_value_t)]
        ideal: IdealChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Castelnuovo-Mumford regularity of the selected power
    Reg {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        #[command(flatten)]
        variant: VariantFlags,
        #[arg(long, value_enum, default_value_t)]
        ideal: IdealChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Multiplicity of the s-th symbolic power by the combinatorial formulas
    Mult {
        #[command(flatten)]
        select: GraphSelect,
        /// Power exponent
        #[arg(long, default_value_t = 1)]
        s: u32,
        /// Which ideal the multiplicity refers to
        #[arg(long, value_enum, default_value_t)]
        which: IdealChoice,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the verification suite and emit a report
    Verify {
        /// Which group of checks to run
        #[arg(value_enum)]
        scope: verify::Scope,
        /// Restrict crown checks to a single n
        #[arg(long)]
        n: Option<usize>,
        /// Largest power to check
        #[arg(long, value_name = "S")]
        s_max: Option<u32>,
        /// Restrict multipartite checks to one part tuple
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<u32>>,
        /// Restrict multiplicity checks to one named graph
        /// (`triangle`, `crown<N>`, `complete<N>`, `k<p1>,<p2>,..`)
        #[arg(long)]
        graph: Option<String>,
        /// Run checks beyond the desk-scale guards instead of skipping them
        #[arg(long)]
        force: bool,
        /// Omit elapsed-time fields so reruns are byte-identical
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum GraphFamily {
    /// Crown graph on 2n vertices (n >= 2)
    Crown {
        #[arg(long)]
        n: usize,
    },
    /// Complete multipartite graph
    Multipartite {
        #[arg(long, value_name = "P1,P2,..", value_delimiter = ',')]
        parts: Vec<u32>,
    },
    /// Complete graph on n vertices
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Graph from an edge-list file
    FromFile { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn emit(output: &OutputArgs, content: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, content).map_err(|e| CliError {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(content.as_bytes()).map_err(|e| CliError {
                code: 1,
                message: format!("cannot write to stdout: {e}"),
            })
        }
    }
}

/// Formats allowed outside `verify`.
fn text_or_json(format: FormatFlags) -> Result<Format, CliError> {
    match format.resolve() {
        Format::Csv => Err(usage_error(
            "--csv only applies to verification reports; use --text or --json".to_string(),
        )),
        f => Ok(f),
    }
}

enum PowerKind {
    Ordinary,
    Bracket,
    Symbolic,
}

impl VariantFlags {
    fn kind(self) -> PowerKind {
        if self.symbolic {
            PowerKind::Symbolic
        } else if self.bracket {
            PowerKind::Bracket
        } else {
            PowerKind::Ordinary
        }
    }
}

fn base_ideal(graph: &SimpleGraph, choice: IdealChoice) -> MonomialIdeal {
    match choice {
        IdealChoice::Cover => {
            let cover = graph.cover_ideal();
            if cover.edgeless {
                eprintln!("warning: graph has no edges; the cover ideal is the unit ideal");
            }
            cover.ideal
        }
        IdealChoice::Edge => graph.edge_ideal(),
    }
}

fn powered_ideal(
    graph: &SimpleGraph,
    choice: IdealChoice,
    kind: PowerKind,
    s: u32,
) -> Result<MonomialIdeal, CliError> {
    let base = base_ideal(graph, choice);
    let ideal = match kind {
        PowerKind::Ordinary => power(&base, s)?,
        PowerKind::Bracket => bracket_power(&base, s)?,
        PowerKind::Symbolic => symbolic_power(&base, s)?,
    };
    Ok(ideal)
}

fn ideal_output(
    graph: &SimpleGraph,
    ideal: &MonomialIdeal,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let content = match text_or_json(output.format)? {
        Format::Text => output::ideal_text(ideal, graph.labels()),
        Format::Json => output::ideal_json(ideal, graph.labels()),
        Format::Csv => unreachable!(),
    };
    emit(output, &content)
}

fn closed_form_series(
    select: &GraphSelect,
    kind: &PowerKind,
    ideal: IdealChoice,
    s: u32,
) -> Result<HilbertSeries, CliError> {
    if ideal == IdealChoice::Edge {
        return Err(usage_error(
            "--closed-form applies to cover ideals only".to_string(),
        ));
    }
    if let Some(n) = select.crown {
        return match kind {
            // Crown graphs are bipartite, so ordinary and symbolic powers
            // share the closed form.
            PowerKind::Ordinary | PowerKind::Symbolic => {
                closed_form_crown(n, s).map_err(CliError::from)
            }
            PowerKind::Bracket => Err(usage_error(
                "no closed form for bracket powers of crown cover ideals".to_string(),
            )),
        };
    }
    let parts: Vec<u32> = if let Some(parts) = &select.multipartite {
        parts.clone()
    } else if let Some(n) = select.complete {
        vec![1; n]
    } else {
        return Err(usage_error(
            "--closed-form needs a --crown, --multipartite, or --complete family".to_string(),
        ));
    };
    match kind {
        PowerKind::Bracket => closed_form_bracket(&parts, s).map_err(CliError::from),
        PowerKind::Symbolic => {
            closed_form_symbolic_multipartite(&parts, s).map_err(CliError::from)
        }
        PowerKind::Ordinary => Err(usage_error(
            "ordinary powers of multipartite cover ideals have no closed form here; \
             use --symbolic or --bracket"
                .to_string(),
        )),
    }
}

fn dispatch(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Graph { family, output } => {
            let graph = match family {
                GraphFamily::Crown { n } => SimpleGraph::crown(n)?,
                GraphFamily::Multipartite { parts } => {
                    SimpleGraph::complete_multipartite(&parts)?
                }
                GraphFamily::Complete { n } => SimpleGraph::complete(n)?,
                GraphFamily::FromFile { file } => graphspec::load_edge_file(&file)?,
            };
            let content = match text_or_json(output.format)? {
                Format::Text => output::graph_text(&graph),
                Format::Json => output::graph_json(&graph),
                Format::Csv => unreachable!(),
            };
            emit(&output, &content)?;
            Ok(0)
        }
        Command::CoverIdeal { select, output } => {
            let graph = select.resolve()?;
            let ideal = base_ideal(&graph, IdealChoice::Cover);
            ideal_output(&graph, &ideal, &output)?;
            Ok(0)
        }
        Command::EdgeIdeal { select, output } => {
            let graph = select.resolve()?;
            let ideal = graph.edge_ideal();
            ideal_output(&graph, &ideal, &output)?;
            Ok(0)
        }
        Command::Power { select, s, ideal, output } => {
            let graph = select.resolve()?;
            let powered = powered_ideal(&graph, ideal, PowerKind::Ordinary, s)?;
            ideal_output(&graph, &powered, &output)?;
            Ok(0)
        }
        Command::BracketPower { select, s, ideal, output } => {
            let graph = select.resolve()?;
            let powered = powered_ideal(&graph, ideal, PowerKind::Bracket, s)?;
            ideal_output(&graph, &powered, &output)?;
            Ok(0)
        }
        Command::SymbolicPower { select, s, ideal, output } => {
            let graph = select.resolve()?;
            let powered = powered_ideal(&graph, ideal, PowerKind::Symbolic, s)?;
            ideal_output(&graph, &powered, &output)?;
            Ok(0)
        }
        Command::Hilbert { select, s, variant, ideal, closed_form, reduced, output } => {
            let series = if closed_form {
                closed_form_series(&select, &variant.kind(), ideal, s)?
            } else {
                let graph = select.resolve()?;
                let powered = powered_ideal(&graph, ideal, variant.kind(), s)?;
                numerator(&powered)
            };
            let format = text_or_json(output.format)?;
            let content = if reduced {
                let r = series.reduce()?;
                let reduced_series =
                    HilbertSeries::new(r.h_polynomial.clone(), r.dimension);
                match format {
                    Format::Text => format!(
                        "{}multiplicity: {}\n",
                        output::series_text(&reduced_series),
                        r.multiplicity
                    ),
                    Format::Json => {
                        let mult = r.multiplicity.to_i64().ok_or_else(|| CliError {
                            code: 1,
                            message: "multiplicity exceeds the JSON integer range".into(),
                        })?;
                        output::series_json(&reduced_series, Some(mult))?
                    }
                    Format::Csv => unreachable!(),
                }
            } else {
                match format {
                    Format::Text => output::series_text(&series),
                    Format::Json => output::series_json(&series, None)?,
                    Format::Csv => unreachable!(),
                }
            };
            emit(&output, &content)?;
            Ok(0)
        }
        Command::Betti { select, s, variant, ideal, output } => {
            let graph = select.resolve()?;
            let powered = powered_ideal(&graph, ideal, variant.kind(), s)?;
            let table = betti_table(&powered)?;
            let content = match text_or_json(output.format)? {
                Format::Text => output::betti_text(&table, graph.labels()),
                Format::Json => output::betti_json(&table),
                Format::Csv => unreachable!(),
            };
            emit(&output, &content)?;
            Ok(0)
        }
        Command::Reg { select, s, variant, ideal, output } => {
            let graph = select.resolve()?;
            let powered = powered_ideal(&graph, ideal, variant.kind(), s)?;
            let table = betti_table(&powered)?;
            let content = match text_or_json(output.format)? {
                Format::Text => format!("{}\n", table.regularity()),
                Format::Json => output::reg_json(table.regularity()),
                Format::Csv => unreachable!(),
            };
            emit(&output, &content)?;
            Ok(0)
        }
        Command::Mult { select, s, which, output } => {
            let graph = select.resolve()?;
            let kind = match which {
                IdealChoice::Cover => GraphIdealKind::Cover,
                IdealChoice::Edge => GraphIdealKind::Edge,
            };
            let value = symbolic_multiplicity(&graph, kind, s)?;
            let small = value.to_i64().ok_or_else(|| CliError {
                code: 1,
                message: "multiplicity exceeds the JSON integer range".into(),
            })?;
            let content = match text_or_json(output.format)? {
                Format::Text => format!("{small}\n"),
                Format::Json => output::mult_json(small),
                Format::Csv => unreachable!(),
            };
            emit(&output, &content)?;
            Ok(0)
        }
        Command::Verify { scope, n, s_max, parts, graph, force, no_timing, output } => {
            let report = verify::run(&verify::VerifyOptions {
                scope,
                n,
                s_max,
                parts,
                graph,
                force,
                no_timing,
            })?;
            let content = match output.format.resolve() {
                Format::Text => report.to_text(),
                Format::Json => format!("{}\n", report.to_json()),
                Format::Csv => report.to_csv(),
            };
            emit(&output, &content)?;
            Ok(if report.any_failures() { 1 } else { 0 })
        }
    }
}
