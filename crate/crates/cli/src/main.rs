mod expr;
mod reports;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gwstar::analyzers::{
    check_freeness, check_r_diagonal, check_semicircular, claims_audit, decompose, required_depth,
};
use gwstar::cumulant::CumulantEngine;
use gwstar::{parse_graph, AlgebraElement, Backend, BackendKind, Graph};

use expr::ExprError;

#[derive(Parser)]
#[command(
    name = "gwstar",
    version,
    about = "Exact moment, cumulant and freeness computations on directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph file and summarize it.
    Validate(Common),
    /// List finite paths up to a length.
    Paths {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Free-product decomposition into the diagonal and edge blocks.
    Decompose {
        #[command(flatten)]
        common: Common,
        /// Longest basic loop listed in the finer view.
        #[arg(long, default_value_t = 3)]
        loop_bound: usize,
    },
    /// E(a^n) for one element, or E(a1 ... an) for several.
    Moments(Series),
    /// k_n(a, ..., a) for one element, or k_n(a1, ..., an) for several.
    Cumulants(Series),
    /// Test whether only the second cumulant of a self-adjoint element survives.
    CheckSemicircular {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        element: String,
    },
    /// Scan the cumulants of {L_w, L_w*} for the alternating pattern.
    CheckRdiagonal {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        engine: EngineArgs,
        /// A path such as `e1.e2`.
        #[arg(long)]
        word: String,
    },
    /// Scan mixed cumulants of two families and compare with diagram-distinctness.
    CheckFreeness {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long = "family-a", required = true)]
        family_a: Vec<String>,
        #[arg(long = "family-b", required = true)]
        family_b: Vec<String>,
    },
    /// Recompute the stated constants and relations under each backend.
    Audit {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = AuditBackend::Both)]
        backend: AuditBackend,
        #[arg(long = "max-order", visible_alias = "order", default_value_t = 6)]
        max_order: usize,
    },
}

#[derive(Args)]
struct Common {
    /// Graph description file.
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = BackendArg::Fock)]
    backend: BackendArg,
    /// Fock truncation depth; defaults to the depth that makes every product exact.
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long = "max-order", visible_alias = "order", default_value_t = 6)]
    max_order: usize,
}

#[derive(Args)]
struct Series {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    engine: EngineArgs,
    /// Element expression; repeat for a mixed value.
    #[arg(long, required = true)]
    element: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Axiomatic,
    Fock,
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditBackend {
    Both,
    Axiomatic,
    Fock,
}

/// Failure after argument parsing; always exit status 1.
#[derive(Debug)]
enum Failure {
    Domain(gwstar::Error),
    Expression(ExprError),
    Io(String),
}

impl Failure {
    fn kind(&self) -> &'static str {
        match self {
            Failure::Domain(e) => e.kind(),
            Failure::Expression(_) => "expression",
            Failure::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::Expression(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

impl From<gwstar::Error> for Failure {
    fn from(e: gwstar::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Expression(e)
    }
}

/// Rendered report in both forms.
struct Output {
    text: String,
    json: String,
}

fn output<T: Serialize>(report: &T, text: String) -> Output {
    let json = serde_json::to_string_pretty(report).expect("reports serialize");
    Output { text, json }
}

fn load_graph(path: &Path) -> Result<Arc<Graph>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(Arc::new(parse_graph(&text)?))
}

/// Parses `texts` and builds them under the requested backend. The fock
/// depth defaults to `required_depth(elements, order)`.
fn build_elements(
    g: &Arc<Graph>,
    texts: &[String],
    engine: &EngineArgs,
    order: usize,
) -> Result<(Vec<AlgebraElement>, Backend), Failure> {
    let exprs = texts.iter().map(|t| expr::parse(t)).collect::<Result<Vec<_>, _>>()?;
    let backend = match engine.backend {
        BackendArg::Axiomatic => Backend::Axiomatic,
        BackendArg::Fock => {
            let depth = match engine.depth {
                Some(d) => d,
                None => {
                    let probe_depth = exprs.iter().map(|e| e.length_bound()).max().unwrap_or(0).max(1);
                    let probes = exprs
                        .iter()
                        .map(|e| e.eval(g, Backend::Fock { depth: probe_depth }))
                        .collect::<Result<Vec<_>, _>>()?;
                    required_depth(&probes, order)
                }
            };
            Backend::Fock { depth }
        }
    };
    let elements = exprs
        .iter()
        .map(|e| e.eval(g, backend))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((elements, backend))
}

fn series(kind: &'static str, args: &Series) -> Result<Output, Failure> {
    let g = load_graph(&args.common.graph)?;
    let single = args.element.len() == 1;
    let order = if single {
        args.engine.max_order
    } else {
        args.element.len()
    };
    let (elements, backend) = build_elements(&g, &args.element, &args.engine, order)?;
    let mut engine = CumulantEngine::new(g.clone(), backend);
    let orders: Vec<usize> = if single { (1..=order).collect() } else { vec![order] };
    let mut rows = Vec::new();
    for n in orders {
        let slots = if single {
            vec![elements[0].clone(); n]
        } else {
            elements.clone()
        };
        let value = if kind == "moments" {
            engine.moment(&slots)?
        } else {
            engine.cumulant(&slots)?
        };
        rows.push(reports::SeriesRow {
            order: n,
            quantity: reports::quantity(kind, n, elements.len()),
            value: value.named(&g),
        });
    }
    let report = reports::SeriesReport {
        kind,
        backend: backend.to_string(),
        elements: elements.iter().map(|e| e.to_string()).collect(),
        element_terms: elements.iter().map(AlgebraElement::to_json).collect(),
        rows,
    };
    Ok(output(&report, report.to_text()))
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Validate(common) => {
            let g = load_graph(&common.graph)?;
            let r = reports::validate(&g);
            Ok(output(&r, r.to_text()))
        }
        Command::Paths { common, max_len } => {
            let g = load_graph(&common.graph)?;
            let r = reports::paths(&g, *max_len)?;
            Ok(output(&r, r.to_text()))
        }
        Command::Decompose { common, loop_bound } => {
            let g = load_graph(&common.graph)?;
            let r = decompose(&g, *loop_bound)?;
            Ok(output(&r, r.to_text()))
        }
        Command::Moments(args) => series("moments", args),
        Command::Cumulants(args) => series("cumulants", args),
        Command::CheckSemicircular {
            common,
            engine,
            element,
        } => {
            let g = load_graph(&common.graph)?;
            let (a, backend) = build_elements(&g, std::slice::from_ref(element), engine, engine.max_order)?;
            let r = check_semicircular(&a[0], engine.max_order, backend)?;
            Ok(output(&r, r.to_text()))
        }
        Command::CheckRdiagonal { common, engine, word } => {
            let g = load_graph(&common.graph)?;
            let w = g.parse_path(word)?;
            let backend = match engine.backend {
                BackendArg::Axiomatic => Backend::Axiomatic,
                BackendArg::Fock => Backend::Fock {
                    depth: engine.depth.unwrap_or((engine.max_order * w.len()).max(1)),
                },
            };
            let r = check_r_diagonal(&g, &w, engine.max_order, backend)?;
            Ok(output(&r, r.to_text()))
        }
        Command::CheckFreeness {
            common,
            engine,
            family_a,
            family_b,
        } => {
            let g = load_graph(&common.graph)?;
            let all: Vec<String> = family_a.iter().chain(family_b).cloned().collect();
            let (elements, backend) = build_elements(&g, &all, engine, engine.max_order)?;
            let (a, b) = elements.split_at(family_a.len());
            let r = check_freeness(a, b, engine.max_order, backend)?;
            Ok(output(&r, r.to_text()))
        }
        Command::Audit {
            common,
            backend,
            max_order,
        } => {
            let g = load_graph(&common.graph)?;
            let kinds: &[BackendKind] = match backend {
                AuditBackend::Both => &[BackendKind::Axiomatic, BackendKind::Fock],
                AuditBackend::Axiomatic => &[BackendKind::Axiomatic],
                AuditBackend::Fock => &[BackendKind::Fock],
            };
            let r = claims_audit(&g, kinds, *max_order)?;
            Ok(output(&r, r.to_text()))
        }
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Validate(c) => c,
        Command::Paths { common, .. }
        | Command::Decompose { common, .. }
        | Command::CheckSemicircular { common, .. }
        | Command::CheckRdiagonal { common, .. }
        | Command::CheckFreeness { common, .. }
        | Command::Audit { common, .. } => common,
        Command::Moments(s) | Command::Cumulants(s) => &s.common,
    }
}

fn emit(common: &Common, body: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = common(&cli.command);
    let json = common.format == Format::Json;
    let failure = match run(&cli.command) {
        Ok(out) => {
            let body = if json { out.json + "\n" } else { out.text };
            match emit(common, &body) {
                Ok(()) => return ExitCode::SUCCESS,
                Err(f) => f,
            }
        }
        Err(f) => f,
    };
    if json {
        let obj = serde_json::json!({ "error": { "kind": failure.kind(), "message": failure.message() } });
        println!(
            "{}",
            serde_json::to_string_pretty(&obj).expect("error object serializes")
        );
    } else {
        eprintln!("error: {}", failure.message());
    }
    ExitCode::from(1)
}
