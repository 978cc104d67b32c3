//! `repdim`: Euclidean representation numbers from the command line.

mod input;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand};
use repdim::embed::minimal_embedding;
use repdim::graph::{encode_graph6, parse_graph6};
use repdim::oracle::{brute_force_rep, verify_embedding, DEFAULT_GRID};
use repdim::repnum::representation_number;
use repdim::spectral::spectrum;
use repdim::{Exec, Graph, ToleranceConfig};
use serde_json::{Map, Value};

use input::{InputFormat, Source};
use render::{OutFormat, Record};

#[derive(Parser, Debug)]
#[command(name = "repdim", version, about = "Minimal two-distance Euclidean representations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Representation number with case and certificate.
    Repnum(Common),
    /// Explicit points in the minimum dimension.
    Embed(Common),
    /// Distinct eigenvalues, multiplicities and main angles.
    Spectrum(Common),
    /// Check coordinates against a graph.
    Verify(VerifyArgs),
    /// Brute-force scan over distance ratios.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Input file; standard input when absent or `-`.
    #[arg(short = 'i', long, conflicts_with = "inline")]
    input: Option<PathBuf>,
    /// Graph given directly on the command line.
    #[arg(long)]
    inline: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    #[arg(long, value_enum, default_value = "json")]
    out: OutFormat,
    #[arg(long, allow_negative_numbers = true)]
    tol_group: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    tol_equality: Option<f64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Coordinates as CSV rows or JSON.
    #[arg(long)]
    coords: PathBuf,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    common: Common,
    /// Uniform grid points per side.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
}

#[derive(Debug)]
pub enum CliError {
    EmptyInput,
    Usage(String),
    Parse(String),
    Core(repdim::Error),
}

impl From<repdim::Error> for CliError {
    fn from(e: repdim::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        use repdim::Error as E;
        match self {
            CliError::EmptyInput | CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Core(e) if e.is_parse() => 2,
            CliError::Core(E::InvalidInput(_) | E::Inapplicable(_)) => 1,
            CliError::Core(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self.code() {
            1 => "usage",
            2 => "parse",
            _ => "numeric",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::EmptyInput => "empty input".into(),
            CliError::Usage(m) | CliError::Parse(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

#[derive(Clone, Copy)]
enum Task<'a> {
    Repnum,
    Embed,
    Spectrum,
    Verify(&'a Path),
    Oracle(usize),
}

fn run_one(task: Task, g: &Graph, cfg: &ToleranceConfig) -> Result<Record, CliError> {
    Ok(match task {
        Task::Repnum => render::repnum(&representation_number(g, cfg)?),
        Task::Embed => {
            let (e, r) = minimal_embedding(g, cfg)?;
            render::embed(&e, &r)
        }
        Task::Spectrum => render::spectrum(&spectrum(g, cfg)?),
        Task::Verify(path) => {
            let e = input::load_coords(path, g)?;
            render::verify(&verify_embedding(g, &e, cfg), &e)
        }
        Task::Oracle(grid) => render::oracle(&brute_force_rep(g, grid, cfg)?),
    })
}

fn tolerances(c: &Common) -> Result<ToleranceConfig, CliError> {
    let mut cfg = ToleranceConfig::default();
    if let Some(x) = c.tol_group {
        cfg.tol_group = x;
    }
    if let Some(x) = c.tol_equality {
        cfg.tol_equality = x;
    }
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(cfg)
}

fn batch_line(task: Task, line: usize, text: &str, cfg: &ToleranceConfig) -> (Value, u8) {
    let mut rec = Map::new();
    rec.insert("line".into(), line.into());
    let result = parse_graph6(text).map_err(CliError::from).and_then(|g| {
        rec.insert("graph6".into(), encode_graph6(&g).into());
        run_one(task, &g, cfg)
    });
    match result {
        Ok(r) => {
            match r.json {
                Value::Object(o) => rec.extend(o),
                v => {
                    rec.insert("result".into(), v);
                }
            }
            (Value::Object(rec), 0)
        }
        Err(e) => {
            rec.entry("graph6").or_insert_with(|| text.into());
            let mut err = Map::new();
            err.insert("code".into(), e.code().into());
            err.insert("kind".into(), e.kind().into());
            err.insert("message".into(), e.message().into());
            rec.insert("error".into(), Value::Object(err));
            (Value::Object(rec), e.code())
        }
    }
}

fn run(task: Task, common: &Common) -> Result<u8, CliError> {
    let cfg = tolerances(common)?;
    let text = input::read_text(common.input.as_deref(), common.inline.as_deref())?;
    match input::load(&text, common.format)? {
        Source::Single(g) => {
            let rec = run_one(task, &g, &cfg)?;
            print!("{}", rec.render(common.out));
            Ok(0)
        }
        Source::Batch(lines) => {
            if matches!(task, Task::Verify(_)) {
                return Err(CliError::Usage("verify takes a single graph".into()));
            }
            let results = Exec::default().map(&lines, |(line, g6)| batch_line(task, *line, g6, &cfg));
            let mut out = String::new();
            let mut code = 0;
            for (v, c) in results {
                out.push_str(&v.to_string());
                out.push('\n');
                code = code.max(c);
            }
            print!("{out}");
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (task, common, name) = match &cli.command {
        Command::Repnum(c) => (Task::Repnum, c, "repnum"),
        Command::Embed(c) => (Task::Embed, c, "embed"),
        Command::Spectrum(c) => (Task::Spectrum, c, "spectrum"),
        Command::Verify(v) => (Task::Verify(&v.coords), &v.common, "verify"),
        Command::Oracle(o) => (Task::Oracle(o.grid), &o.common, "oracle"),
    };
    match run(task, common) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            if matches!(e, CliError::EmptyInput) {
                let mut cmd = Cli::command();
                cmd.build();
                if let Some(sub) = cmd.find_subcommand_mut(name) {
                    eprintln!("{}", sub.render_usage());
                    eprintln!("Give a graph with --inline, --input PATH or on standard input.");
                }
            }
            ExitCode::from(e.code())
        }
    }
}
