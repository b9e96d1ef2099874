mod output;
mod survey;

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use quasiforest::chordal::decompose_chordal;
use quasiforest::linres::{betti_from_numerator, hilbert_from_decomposition};
use quasiforest::simplicial::{as_quasi_forest, flag_complex, parse_complex, QuasiForestRejection};
use quasiforest::{classify, hochster_betti, parse_edge_list, parse_graph6, Error, Family, Graph, SimplicialComplex};

use output::{to_json, to_pretty};

pub const EXIT_PARTIAL: u8 = 1;
pub const EXIT_MALFORMED: u8 = 2;
pub const EXIT_SIZE_CAP: u8 = 3;
pub const EXIT_NOT_QUASI_FOREST: u8 = 4;

#[derive(Parser)]
#[command(name = "quasiforest", version, about = "Invariants of edge rings with 2-linear resolutions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one graph and print a JSON report.
    Analyze(AnalyzeArgs),
    /// Classify a stream of graphs, one JSON line each, then a summary line.
    Survey(SurveyArgs),
    /// Betti table by Hochster's formula, cross-checked against the closed form.
    Oracle(ComplexArgs),
    /// Quasi-forest decomposition: facets in construction order with d and r.
    Decompose(ComplexArgs),
    /// Gap pd - max degree for a member of a named graph family.
    Gap(GapArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6", "edges", "stdin"])))]
struct AnalyzeArgs {
    /// Graph in graph6.
    graph6: Option<String>,
    /// Edge list "n u v u v ...".
    #[arg(long)]
    edges: Option<String>,
    /// Read graph6 from the first line of standard input.
    #[arg(long)]
    stdin: bool,
    /// Human-readable key/value table instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
pub struct SurveyArgs {
    /// Enumerate every labeled graph on N vertices (N <= 7) instead of reading stdin.
    #[arg(long, value_name = "N")]
    pub all_labeled: Option<usize>,
    /// Emit only graphs whose complement is chordal.
    #[arg(long)]
    pub only_2linear: bool,
    /// Worker threads; output order does not depend on it.
    #[arg(long, default_value_t = 1, value_name = "J")]
    pub jobs: usize,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6", "complex"])))]
struct ComplexArgs {
    /// Graph in graph6; the complex is the flag complex of its complement.
    graph6: Option<String>,
    /// Complex fixture: vertex count, then one facet per line.
    #[arg(long, value_name = "FILE")]
    complex: Option<PathBuf>,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct GapArgs {
    /// complete-bipartite or barbell
    #[arg(long)]
    family: Family,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    pretty: bool,
}

/// Failure carrying its exit status.
pub struct Failure {
    pub code: u8,
    pub message: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedSize(_) => EXIT_SIZE_CAP,
            _ => EXIT_MALFORMED,
        };
        Failure { code, message: Some(e.to_string()) }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(inner) => inner.into(),
            Err(other) => Failure { code: EXIT_MALFORMED, message: Some(format!("{other:#}")) },
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_MALFORMED, message: Some(e.to_string()) }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Survey(s) => survey::run(&s),
        Command::Oracle(c) => oracle(c),
        Command::Decompose(c) => decompose(c),
        Command::Gap(g) => gap(g),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message {
                eprintln!("quasiforest: {m}");
            }
            ExitCode::from(f.code)
        }
    }
}

fn emit<T: serde::Serialize>(value: &T, pretty: bool) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    if pretty {
        write!(out, "{}", to_pretty(value))?;
    } else {
        writeln!(out, "{}", to_json(value))?;
    }
    Ok(())
}

fn read_graph(a: &AnalyzeArgs) -> Result<Graph, Failure> {
    if let Some(edges) = &a.edges {
        return Ok(parse_edge_list(edges)?);
    }
    if a.stdin {
        let mut line = String::new();
        io::stdin().lock().read_line(&mut line)?;
        return Ok(parse_graph6(line.as_bytes())?);
    }
    let text = a.graph6.as_deref().unwrap_or_default();
    Ok(parse_graph6(text.as_bytes())?)
}

fn analyze(a: AnalyzeArgs) -> Result<(), Failure> {
    let g = read_graph(&a)?;
    let report = classify(&g)?;
    emit(&output::analyze(&report)?, a.pretty)
}

/// The complex named on the command line, with the graph6 input if any.
fn read_complex(c: &ComplexArgs) -> Result<(SimplicialComplex, Option<String>), Failure> {
    if let Some(path) = &c.complex {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure { code: EXIT_MALFORMED, message: Some(format!("{}: {e}", path.display())) })?;
        return Ok((parse_complex(&text)?, None));
    }
    let text = c.graph6.as_deref().unwrap_or_default();
    let g = parse_graph6(text.as_bytes())?;
    Ok((flag_complex(&g.complement()), Some(quasiforest::to_graph6(&g)?)))
}

fn oracle(c: ComplexArgs) -> Result<(), Failure> {
    let (complex, input) = read_complex(&c)?;
    let table = hochster_betti(&complex)?;
    let formula = match as_quasi_forest(&complex) {
        Ok(q) => Some(betti_from_numerator(&hilbert_from_decomposition(&q)?)?),
        Err(_) => None,
    };
    emit(&output::OracleOutput::new(input, complex.facets(), &table, formula.as_ref()), c.pretty)
}

fn decompose(c: ComplexArgs) -> Result<(), Failure> {
    let result = match (&c.complex, &c.graph6) {
        (None, Some(text)) => {
            let g = parse_graph6(text.as_bytes())?;
            decompose_chordal(&g.complement()).map_err(QuasiForestRejection::SkeletonNotChordal)
        }
        _ => as_quasi_forest(&read_complex(&c)?.0),
    };
    match result {
        Ok(q) => emit(&output::DecomposeOutput::from(&q), c.pretty),
        Err(rejection) => {
            let cycle = match &rejection {
                QuasiForestRejection::SkeletonNotChordal(cycle) => Some(cycle.clone()),
                QuasiForestRejection::NotFlag => None,
            };
            emit(
                &output::DecomposeError { error: "not-quasi-forest", reason: rejection.tag(), chordless_cycle: cycle },
                c.pretty,
            )?;
            Err(Failure { code: EXIT_NOT_QUASI_FOREST, message: Some(format!("not a quasi-forest: {rejection}")) })
        }
    }
}

fn gap(a: GapArgs) -> Result<(), Failure> {
    let report = quasiforest::conjecture::gap_report(a.family, a.r)?;
    let out = output::GapOutput {
        family: a.family.name().into(),
        r: a.r,
        input: report.report.graph6.clone(),
        pd: report.report.pd,
        max_deg: report.report.max_deg,
        gap: report.gap,
        notes: report.notes,
    };
    emit(&out, a.pretty)
}
