//! `chromindex`: edge-coloring, criticality and vertex-splitting sweeps from
//! the command line.
//!
//! Exit status: 0 success or PASS, 1 violation found, 2 search budget hit
//! or INCOMPLETE, 64 bad arguments, 65 unreadable input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use chromindex::chromatic::{
    chromatic_index_with, is_critical_edge_with, vizing_color, Budget, ChromaticError, EdgeClass,
};
use chromindex::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};
use chromindex::verifier::{
    run_lemma_suites, verify_conjecture, verify_theorem1, Mode, VerificationReport, VerifyConfig,
    VerifyError,
};
use chromindex::{Graph, SplitSpec, Vertex};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "chromindex",
    version,
    about = "Edge-coloring and criticality toolkit"
)]
struct Cli {
    /// Print more detail to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact chromatic index and class.
    Chi {
        #[command(flatten)]
        input: Input,
        /// Write the witness coloring here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// A (Δ+1)-edge-coloring by Vizing's fan-and-path recoloring.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split a vertex into two adjacent vertices.
    Split {
        #[command(flatten)]
        input: Input,
        /// Vertex to split.
        #[arg(long)]
        vertex: Vertex,
        /// Neighbors kept by the original vertex, comma separated; the rest
        /// move to the new vertex (labelled n).
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        part_a: Vec<Vertex>,
        #[command(flatten)]
        emit: Emit,
    },
    /// Merge two adjacent vertices with no common neighbor.
    Contract {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        u: Vertex,
        #[arg(long)]
        v: Vertex,
        #[command(flatten)]
        emit: Emit,
    },
    /// Per-edge criticality and the Δ-critical verdict.
    Critical {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Exhaustive vertex-splitting sweep; writes text and JSON reports.
    Verify {
        #[arg(long, value_enum, default_value_t = ModeArg::Theorem1)]
        mode: ModeArg,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Lemma-checker suites; same as `verify --mode lemmas`.
    Lemmas {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Convert between graph6 and edge-list.
    Fmt {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        emit: Emit,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(conflicts_with = "graph6", required_unless_present = "graph6")]
    path: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    input_format: Option<Format>,
}

#[derive(Args, Debug)]
struct Emit {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Node budget per exact coloring search.
    #[arg(long, env = "CHROMINDEX_BUDGET_NODES")]
    budget_nodes: Option<u64>,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Largest even base order.
    #[arg(long)]
    m_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Colorings sampled per edge when a universe is too large to list.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Worker threads (default: available CPUs).
    #[arg(long)]
    workers: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Directory for the reports.
    #[arg(short, long, default_value = ".")]
    output: PathBuf,
    /// Record wall-clock times in the reports.
    #[arg(long)]
    timings: bool,
    /// Append a Unix timestamp to report file names.
    #[arg(long)]
    timestamp: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Theorem1,
    Conjecture,
    Lemmas,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Theorem1 => Mode::Theorem1,
            ModeArg::Conjecture => Mode::Conjecture,
            ModeArg::Lemmas => Mode::Lemmas,
        }
    }
}

/// An error with the exit status it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            error: anyhow::anyhow!(msg.into()),
        }
    }

    fn data(error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: EXIT_DATA,
            error: error.into(),
        }
    }
}

impl From<ChromaticError> for Failure {
    fn from(e: ChromaticError) -> Self {
        let code = match e {
            ChromaticError::SearchLimitExceeded { .. } => 2,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        let code = match e {
            VerifyError::InfeasibleSpec(_) => EXIT_USAGE,
            VerifyError::BudgetExceeded { .. } => 2,
            VerifyError::Pool(_) => 1,
        };
        Failure {
            code,
            error: e.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            error: e.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

fn detect(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty() && !l.starts_with(">>graph6<<"));
    match first {
        Some(l) if l.split_whitespace().count() == 2 => Format::EdgeList,
        _ => Format::Graph6,
    }
}

fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph, Failure> {
    let parsed = match format.unwrap_or_else(|| detect(text)) {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            from_graph6(line)
        }
        Format::EdgeList => from_edge_list(text),
    };
    parsed.map_err(Failure::data)
}

impl Input {
    fn read(&self) -> Result<Graph, Failure> {
        if let Some(s) = &self.graph6 {
            return parse_graph(s, Some(self.input_format.unwrap_or(Format::Graph6)));
        }
        let path = self.path.as_deref().expect("clap requires one input");
        let text = if path == Path::new("-") {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::data)?
        };
        parse_graph(&text, self.input_format)
    }
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        Format::EdgeList => to_edge_list(g),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn budget(b: &BudgetArgs, g: &Graph) -> Budget {
    match b.budget_nodes {
        Some(n) => Budget(Some(n)),
        None => Budget::default_for(g),
    }
}

fn degree_line(g: &Graph) -> String {
    match g.degree_profile() {
        Ok(p) => format!(
            "overfull={} order={} size={} max_degree={} min_degree={} regular={}",
            g.is_overfull(),
            g.order(),
            g.size(),
            p.max,
            p.min,
            p.regular
        ),
        Err(_) => format!("overfull={} order={} size=0", g.is_overfull(), g.order()),
    }
}

fn report_stem(mode: Mode, m_max: usize, timestamp: bool) -> String {
    let mut stem = format!("verify-{}-m{m_max}", mode.name());
    if timestamp {
        let secs = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        stem.push_str(&format!("-{secs}"));
    }
    stem
}

fn run_verify(mode: Mode, run: &RunArgs, verbose: bool) -> Result<u8, Failure> {
    if run.m_max < 4 || run.m_max % 2 == 1 {
        return Err(Failure::usage(format!(
            "--m-max must be even and at least 4, got {}",
            run.m_max
        )));
    }
    let cfg = VerifyConfig {
        workers: run.workers,
        budget_nodes: run.budget.budget_nodes,
        seed: run.seed,
        samples: run.samples,
        timings: run.timings,
        ..VerifyConfig::new(run.m_max)
    };
    let report: VerificationReport = match mode {
        Mode::Theorem1 => verify_theorem1(&cfg)?,
        Mode::Conjecture => verify_conjecture(&cfg)?,
        Mode::Lemmas => run_lemma_suites(&cfg)?,
    };
    fs::create_dir_all(&run.output)
        .with_context(|| format!("creating {}", run.output.display()))?;
    let stem = report_stem(mode, run.m_max, run.timestamp);
    let text_path = run.output.join(format!("{stem}.txt"));
    let json_path = run.output.join(format!("{stem}.json"));
    let text = report.to_text();
    fs::write(&text_path, &text).with_context(|| format!("writing {}", text_path.display()))?;
    fs::write(&json_path, report.to_json() + "\n")
        .with_context(|| format!("writing {}", json_path.display()))?;
    if verbose {
        eprint!("{text}");
    }
    let c = &report.counts;
    println!(
        "{} {}: {} base graphs, {} split graphs, {} violations, {} undecided",
        report.verdict,
        mode.name(),
        c.base_graphs,
        c.split_graphs_tested,
        report.violations.len(),
        report.undecided.len()
    );
    println!("reports: {} {}", text_path.display(), json_path.display());
    Ok(report.verdict.exit_code() as u8)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Chi {
            input,
            output,
            budget: b,
        } => {
            let g = input.read()?;
            let c = chromatic_index_with(&g, budget(&b, &g))?;
            let class = match c.class {
                EdgeClass::One => 1,
                EdgeClass::Two => 2,
            };
            println!("chi'={} class={class}", c.index);
            if let Some(p) = output {
                write_out(Some(&p), &c.witness.to_text())?;
            }
        }
        Command::Color { input, output } => {
            let g = input.read()?;
            write_out(output.as_deref(), &vizing_color(&g).to_text())?;
        }
        Command::Split {
            input,
            vertex,
            part_a,
            emit,
        } => {
            let g = input.read()?;
            let spec = SplitSpec::from_part_a(&g, vertex, &part_a).map_err(Failure::data)?;
            let h = g.split_vertex(&spec).map_err(Failure::data)?;
            write_out(emit.output.as_deref(), &render(&h, emit.format))?;
            eprintln!("split {spec}");
            eprintln!("{}", degree_line(&h));
        }
        Command::Contract { input, u, v, emit } => {
            let g = input.read()?;
            let h = g.contract_pair(u, v).map_err(Failure::data)?;
            write_out(emit.output.as_deref(), &render(&h, emit.format))?;
        }
        Command::Critical { input, budget: b } => {
            let g = input.read()?;
            let budget = budget(&b, &g);
            let class = chromatic_index_with(&g, budget)?.class;
            let mut all = true;
            let mut out = String::new();
            for &e in g.edges() {
                let critical = is_critical_edge_with(&g, e, budget)?;
                all &= critical;
                out.push_str(&format!("{} {} critical={critical}\n", e.lo(), e.hi()));
            }
            out.push_str(&format!(
                "delta_critical={}\n",
                all && class == EdgeClass::Two
            ));
            write_out(None, &out)?;
        }
        Command::Verify { mode, run } => return run_verify(mode.into(), &run, cli.verbose),
        Command::Lemmas { run } => return run_verify(Mode::Lemmas, &run, cli.verbose),
        Command::Fmt { input, emit } => {
            let g = input.read()?;
            write_out(emit.output.as_deref(), &render(&g, emit.format))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
