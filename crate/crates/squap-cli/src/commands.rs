//! Command implementations and shared run configuration.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use squap_core::cq::{self, CqId};
use squap_core::factors::{
    enabled_factors, explain, materialize_occurrences, EnableMode, EnabledFactor, FactorError,
    MintingPolicy, DEFAULT_OCCURRENCE_BASE,
};
use squap_core::model::{self, vocab, CatalogError, FactorCatalog};
use squap_core::rdf::{Graph, PrefixMap};
use squap_core::reasoner::{
    check_consistency, materialize, validate_strict, AxiomSet, Diagnostic, Severity,
};
use squap_core::turtle::{self, ParseError};

#[derive(Parser)]
#[command(
    name = "squap",
    version,
    about = "Software-quality knowledge graphs: parse, reason, validate, query"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check consistency (and, with --strict, closed-world completeness)
    Validate(ValidateArgs),
    /// Infer enabled factors and materialize their occurrences
    Infer(InferArgs),
    /// Answer a competency question (cq1..cq5)
    Query(QueryArgs),
    /// Write the bundled ontology, catalog, and alignment files
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Any,
    All,
}

impl From<ModeArg> for EnableMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Any => EnableMode::Any,
            ModeArg::All => EnableMode::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// Turtle graphs and human-readable tables
    Turtle,
    /// Tab-separated records for scripting
    Records,
}

/// Options shared by the graph-consuming commands.
#[derive(Args)]
struct RunConfig {
    /// Turtle input files; their graphs are unioned
    #[arg(required = true, value_name = "FILE")]
    inputs: Vec<PathBuf>,

    /// Factor catalog file (defaults to the bundled catalog)
    #[arg(long, env = "SQUAP_CATALOG", value_name = "PATH")]
    catalog: Option<PathBuf>,

    /// Factor enablement semantics
    #[arg(long, value_enum, default_value_t = ModeArg::Any)]
    mode: ModeArg,

    /// Assume distinct IRIs denote distinct individuals (default)
    #[arg(long, overrides_with = "no_una")]
    una: bool,

    /// Disable the unique name assumption
    #[arg(long)]
    no_una: bool,

    /// Also audit existential/covering axioms (closed-world warnings)
    #[arg(long)]
    strict: bool,

    /// Base IRI for minted occurrence IRIs
    #[arg(long, value_name = "IRI", default_value = DEFAULT_OCCURRENCE_BASE)]
    base: String,

    /// Output path (occurrence graph for infer; directory for export)
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Turtle)]
    format: FormatArg,
}

impl RunConfig {
    fn una_enabled(&self) -> bool {
        !self.no_una
    }
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args)]
struct InferArgs {
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args)]
struct QueryArgs {
    /// Competency question id (cq1..cq5; any id works with --explain)
    #[arg(value_name = "CQ")]
    cq: String,

    /// Parameter IRI or prefixed name (required for cq2..cq5)
    #[arg(long, value_name = "IRI")]
    param: Option<String>,

    /// Explain a factor instead of running a fixed query
    #[arg(long, conflicts_with = "param", value_name = "IRI")]
    explain: Option<String>,

    #[command(flatten)]
    config: RunConfig,
}

#[derive(Args)]
struct ExportArgs {
    /// Directory to write squap.ttl, factors.ttl, alignments-dul.ttl
    #[arg(short = 'o', long = "output", value_name = "DIR", default_value = ".")]
    output: PathBuf,
}

#[derive(Debug)]
pub enum CliError {
    Parse { path: PathBuf, error: ParseError },
    Io { path: PathBuf, error: io::Error },
    Catalog(CatalogError),
    Factor(FactorError),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { path, error } => write!(f, "{}:{error}", path.display()),
            CliError::Io { path, error } => write!(f, "{}: {error}", path.display()),
            CliError::Catalog(e) => write!(f, "catalog: {e}"),
            CliError::Factor(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        CliError::Catalog(e)
    }
}

impl From<FactorError> for CliError {
    fn from(e: FactorError) -> Self {
        CliError::Factor(e)
    }
}

pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Validate(args) => cmd_validate(args),
        Command::Infer(args) => cmd_infer(args),
        Command::Query(args) => cmd_query(args),
        Command::Export(args) => cmd_export(args),
    }
}

/// Parses one Turtle file.
fn load_file(path: &Path) -> Result<(Graph, PrefixMap), CliError> {
    let source = fs::read_to_string(path).map_err(|error| CliError::Io {
        path: path.to_owned(),
        error,
    })?;
    turtle::parse(&source, None).map_err(|error| CliError::Parse {
        path: path.to_owned(),
        error,
    })
}

/// Parses and unions every input file; returns the union graph and the
/// merged prefix map (later files win on clashes).
fn load_inputs(paths: &[PathBuf]) -> Result<(Graph, PrefixMap), CliError> {
    let mut graph = Graph::new();
    let mut prefixes = vocab::default_prefixes();
    for path in paths {
        let (g, p) = load_file(path)?;
        graph.union_with(&g);
        prefixes.merge(&p);
    }
    Ok((graph, prefixes))
}

/// The catalog graph: an explicit file when given, the bundled catalog
/// otherwise.
fn load_catalog_graph(config: &RunConfig) -> Result<(Graph, PrefixMap), CliError> {
    match &config.catalog {
        Some(path) => load_file(path),
        None => Ok((model::bundled_catalog_graph(), vocab::default_prefixes())),
    }
}

fn cmd_validate(args: ValidateArgs) -> Result<u8, CliError> {
    let config = args.config;
    let (graph, _) = load_inputs(&config.inputs)?;
    let axioms = AxiomSet::standard();
    let closure = materialize(&graph, &axioms);

    let mut diagnostics = check_consistency(closure.graph(), &axioms, config.una_enabled());
    if config.strict {
        diagnostics.extend(validate_strict(closure.graph(), &axioms));
    }

    print_diagnostics(&diagnostics, config.format);
    let failed = diagnostics
        .iter()
        .any(|d| d.severity >= Severity::ConstraintViolation);
    Ok(if failed { 1 } else { 0 })
}

fn print_diagnostics(diagnostics: &[Diagnostic], format: FormatArg) {
    match format {
        FormatArg::Records => {
            for d in diagnostics {
                println!("{}", d.to_record());
            }
        }
        FormatArg::Turtle => {
            for d in diagnostics {
                println!("{d}");
            }
            let inconsistencies = diagnostics
                .iter()
                .filter(|d| d.severity == Severity::Inconsistency)
                .count();
            let violations = diagnostics
                .iter()
                .filter(|d| d.severity == Severity::ConstraintViolation)
                .count();
            let warnings = diagnostics
                .iter()
                .filter(|d| d.severity == Severity::Warning)
                .count();
            if diagnostics.is_empty() {
                println!("consistent: no diagnostics");
            } else {
                println!(
                    "{} diagnostic(s): {} inconsistencies, {} constraint violations, {} warnings",
                    diagnostics.len(),
                    inconsistencies,
                    violations,
                    warnings
                );
            }
        }
    }
}

fn cmd_infer(args: InferArgs) -> Result<u8, CliError> {
    let config = args.config;
    let (mut graph, mut prefixes) = load_inputs(&config.inputs)?;
    let (catalog_graph, catalog_prefixes) = load_catalog_graph(&config)?;
    let catalog = FactorCatalog::load(&catalog_graph)?;
    graph.union_with(&catalog_graph);
    prefixes.merge(&catalog_prefixes);

    let axioms = AxiomSet::standard();
    let closure = materialize(&graph, &axioms);
    let mode: EnableMode = config.mode.into();
    let enabled = enabled_factors(closure.graph(), &catalog, mode);
    let policy = MintingPolicy {
        base: config.base.clone(),
    };
    let occurrences = materialize_occurrences(closure.graph(), &catalog, &policy, mode)?;
    let rendered = turtle::serialize(&occurrences, &prefixes);

    match &config.output {
        Some(path) => {
            fs::write(path, rendered).map_err(|error| CliError::Io {
                path: path.clone(),
                error,
            })?;
            print_enabled_summary(&enabled, config.format, &mut io::stdout());
        }
        None => {
            // Keep stdout machine-readable: the graph goes to stdout,
            // the summary to stderr.
            print_enabled_summary(&enabled, config.format, &mut io::stderr());
            print!("{rendered}");
        }
    }
    Ok(0)
}

fn print_enabled_summary(enabled: &[EnabledFactor], format: FormatArg, out: &mut dyn io::Write) {
    match format {
        FormatArg::Records => {
            for f in enabled {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{:.2}\t{}",
                    f.factor,
                    f.label.as_deref().unwrap_or("-"),
                    f.matched.len(),
                    f.total_characteristics,
                    f.coverage(),
                    f.supporting_results().join(",")
                );
            }
        }
        FormatArg::Turtle => {
            if enabled.is_empty() {
                let _ = writeln!(out, "no factors enabled");
                return;
            }
            let _ = writeln!(out, "enabled factors ({}):", enabled.len());
            for f in enabled {
                let name = f.label.as_deref().unwrap_or(&f.factor);
                let _ = writeln!(
                    out,
                    "  {name}  {}/{} characteristics assessed, supported by {}",
                    f.matched.len(),
                    f.total_characteristics,
                    f.supporting_results().join(", ")
                );
            }
        }
    }
}

fn cmd_query(args: QueryArgs) -> Result<u8, CliError> {
    let config = args.config;
    let (mut graph, mut prefixes) = load_inputs(&config.inputs)?;
    let (catalog_graph, catalog_prefixes) = load_catalog_graph(&config)?;
    let catalog = FactorCatalog::load(&catalog_graph)?;
    graph.union_with(&catalog_graph);
    prefixes.merge(&catalog_prefixes);

    let closure = materialize(&graph, &AxiomSet::standard());

    if let Some(factor) = &args.explain {
        let factor_iri = resolve_param(factor, &prefixes)?;
        let report = explain(&factor_iri, closure.graph(), &catalog)?;
        match config.format {
            FormatArg::Turtle => print!("{}", report.to_text()),
            FormatArg::Records => print!("{}", report.to_records()),
        }
        return Ok(0);
    }

    let id: CqId = args
        .cq
        .parse()
        .map_err(|e: squap_core::cq::UnknownCqId| CliError::Usage(e.to_string()))?;
    let param = match &args.param {
        Some(p) => Some(resolve_param(p, &prefixes)?),
        None => None,
    };
    let result =
        cq::run(&closure, id, param.as_deref()).map_err(|e| CliError::Usage(e.to_string()))?;
    match config.format {
        FormatArg::Turtle => print!("{}", cq::render_text(&result)),
        FormatArg::Records => print!("{}", cq::render_records(&result)),
    }
    Ok(0)
}

/// Accepts `<iri>`, an absolute IRI, or a prefixed name resolvable
/// against the default and input prefixes.
fn resolve_param(param: &str, prefixes: &PrefixMap) -> Result<String, CliError> {
    let trimmed = param
        .strip_prefix('<')
        .and_then(|p| p.strip_suffix('>'))
        .unwrap_or(param);
    if let Some(expanded) = prefixes.resolve(trimmed) {
        return Ok(expanded);
    }
    if squap_core::rdf::Term::iri(trimmed).is_ok() {
        return Ok(trimmed.to_owned());
    }
    Err(CliError::Usage(format!(
        "cannot resolve {param:?}: not an absolute IRI and no declared prefix matches"
    )))
}

fn cmd_export(args: ExportArgs) -> Result<u8, CliError> {
    let dir = args.output;
    fs::create_dir_all(&dir).map_err(|error| CliError::Io {
        path: dir.clone(),
        error,
    })?;
    for (name, contents) in [
        ("squap.ttl", model::TBOX_TTL),
        ("factors.ttl", model::CATALOG_TTL),
        ("alignments-dul.ttl", model::ALIGNMENTS_TTL),
    ] {
        let path = dir.join(name);
        fs::write(&path, contents).map_err(|error| CliError::Io {
            path: path.clone(),
            error,
        })?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

// Re-exported for tests that drive commands without spawning a process.
#[allow(unused)]
pub fn parse_cli_from<I, T>(args: I) -> Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args)
}
