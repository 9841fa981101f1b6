//! Command-line front end for the pentaplane toolkit.
//!
//! Reports go to stdout as JSON, diagnostics to stderr. Exit codes: 0 on
//! success, 1 on usage or input errors, 2 when a graph fails validation and
//! 3 when a checked claim has a counterexample.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pentaplane::enumerate::DEFAULT_CAP;
use pentaplane::{
    build_extremal, check_graph, diameter, enumerate_pentagulations, enumerate_resumable, girth,
    io, lemma_suite, max_degree, named_graph, verify_graphs, verify_theorems, EnumerationConfig,
    FamilyParams, Filters, PlaneGraph, NAMED_GRAPHS, SCHEMA_VERSION,
};
use serde_json::json;

const CAP_VAR: &str = "PENTAPLANE_CAP";

#[derive(Parser)]
#[command(
    name = "pentaplane",
    version,
    about = "Analyse and enumerate pentagulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a graph file is a pentagulation.
    Validate { path: PathBuf },
    /// Run the lemma checks on one graph.
    Lemmas {
        path: PathBuf,
        /// Face used as the outer face.
        #[arg(long, default_value_t = 0)]
        outer_face: usize,
    },
    /// Enumerate pentagulations and check every lemma on each.
    Verify(SweepArgs),
    /// Enumerate pentagulations as newline-delimited JSON.
    Enumerate(SweepArgs),
    /// Build the extremal graph for an odd maximum degree.
    Family {
        #[arg(long)]
        delta: usize,
        /// Write the graph here instead of embedding it in the summary.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Convert a graph file to another format.
    Export {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Print a built-in graph.
    Fixture {
        /// Fixture name; omit to list them.
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    diameter: Option<usize>,
    #[arg(long)]
    girth_min: Option<usize>,
    #[arg(long)]
    delta_min: Option<usize>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Journal of finished subtrees, created if missing.
    #[arg(long)]
    resume: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Rotations,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<pentaplane::Error> for Failure {
    fn from(e: pentaplane::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Lemmas { path, outer_face } => cmd_lemmas(&path, outer_face),
        Command::Verify(args) => cmd_verify(&args),
        Command::Enumerate(args) => cmd_enumerate(&args),
        Command::Family { delta, output } => cmd_family(delta, output.as_deref()),
        Command::Export { path, format } => cmd_export(&path, format),
        Command::Fixture { name, format } => cmd_fixture(name.as_deref(), format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(path: &Path) -> Result<PlaneGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    io::parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn cmd_validate(path: &Path) -> CmdResult {
    let g = read_graph(path)?;
    let report = check_graph(&g);
    print_json(&json!({
        "schema_version": SCHEMA_VERSION,
        "report": report,
        "diameter": diameter(&g),
        "girth": girth(&g).ok(),
        "max_degree": max_degree(&g),
    }));
    Ok(if report.is_pentagulation { 0 } else { 2 })
}

fn cmd_lemmas(path: &Path, outer_face: usize) -> CmdResult {
    let g = read_graph(path)?;
    if !g.is_pentagulation() {
        eprintln!("error: {} is not a pentagulation", path.display());
        return Ok(2);
    }
    let report = lemma_suite(&g, outer_face)?;
    print_json(&json!({ "schema_version": SCHEMA_VERSION, "report": report }));
    Ok(if report.all_passed() { 0 } else { 3 })
}

fn cap() -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::usage(format!(
                "{CAP_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn config(args: &SweepArgs) -> Result<EnumerationConfig, Failure> {
    let filters = Filters {
        diameter: args.diameter,
        girth_min: args.girth_min,
        delta_min: args.delta_min,
    };
    Ok(EnumerationConfig::new(args.max_n)
        .with_filters(filters)
        .with_jobs(args.jobs)
        .with_cap(cap()?))
}

fn enumerate(cfg: &EnumerationConfig, resume: Option<&Path>) -> Result<Vec<PlaneGraph>, Failure> {
    Ok(match resume {
        Some(path) => enumerate_resumable(cfg, path)?,
        None => enumerate_pentagulations(cfg)?,
    })
}

fn cmd_verify(args: &SweepArgs) -> CmdResult {
    let cfg = config(args)?;
    let report = match &args.resume {
        Some(path) => verify_graphs(&enumerate(&cfg, Some(path))?, &cfg)?,
        None => verify_theorems(&cfg)?,
    };
    print_json(&serde_json::to_value(&report).expect("report serializes"));
    if report.is_clean() {
        eprintln!("{} graphs checked, no violations", report.graphs_checked);
        Ok(0)
    } else {
        for t in report.tallies.iter().filter(|t| t.violations > 0) {
            eprintln!("violation: {} in {} graphs", t.name, t.violations);
        }
        Ok(3)
    }
}

fn cmd_enumerate(args: &SweepArgs) -> CmdResult {
    let cfg = config(args)?;
    let graphs = enumerate(&cfg, args.resume.as_deref())?;
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&io::to_json(g));
    }
    print!("{out}");
    eprintln!("{} graphs", graphs.len());
    Ok(0)
}

fn cmd_family(delta: usize, output: Option<&Path>) -> CmdResult {
    let params = FamilyParams::new(delta)?;
    let g = build_extremal(params);
    let mut summary = json!({
        "schema_version": SCHEMA_VERSION,
        "n": g.vertex_count(),
        "delta": max_degree(&g),
        "diameter": diameter(&g),
        "canonical_code": g.canonical_code().to_hex(),
    });
    match output {
        Some(path) => {
            std::fs::write(path, io::to_json(&g))
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        }
        None => summary["graph"] = serde_json::to_value(&g).expect("graph serializes"),
    }
    print_json(&summary);
    Ok(0)
}

fn render(g: &PlaneGraph, format: Format) -> String {
    match format {
        Format::Json => io::to_json(g),
        Format::Rotations => io::to_text(g),
        Format::Dot => to_dot(g),
    }
}

fn to_dot(g: &PlaneGraph) -> String {
    let mut s = String::from("graph pentaplane {\n");
    for (f, walk) in g.faces().walks.iter().enumerate() {
        let vs: Vec<String> = walk.vertices().iter().map(usize::to_string).collect();
        writeln!(s, "  // face {f}: {}", vs.join(" ")).unwrap();
    }
    for v in 0..g.vertex_count() {
        writeln!(s, "  {v};").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(s, "  {a} -- {b};").unwrap();
    }
    s.push_str("}\n");
    s
}

fn cmd_export(path: &Path, format: Format) -> CmdResult {
    let g = read_graph(path)?;
    print!("{}", render(&g, format));
    Ok(0)
}

fn cmd_fixture(name: Option<&str>, format: Format) -> CmdResult {
    let Some(name) = name else {
        for n in NAMED_GRAPHS {
            println!("{n}");
        }
        return Ok(0);
    };
    let named = named_graph(name)?;
    print!("{}", render(&named.graph, format));
    Ok(0)
}
