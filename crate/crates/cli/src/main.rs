use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlag::harness::{run_claim, sig15, ClaimId, ClaimRequest, Verdict};
use hyperlag::{
    evaluate, is_left_compressed, left_compress, link, solve, RUniformHypergraph,
    SolveReport, Weighting,
};

mod config;
mod weights;

const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

/// Lagrangians of r-uniform hypergraphs.
#[derive(Parser, Debug)]
#[command(name = "hyperlag", version, about)]
struct Cli {
    /// TOML file with `[solver]` and `[budget]` tables.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Report wall-clock time (verify: adds `runtime_seconds` to the report).
    #[arg(long, global = true)]
    timing: bool,

    #[command(flatten)]
    solver: SolverFlags,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct SolverFlags {
    /// Seed for random restarts (default: $HYPERLAG_SEED, else 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    restarts: Option<usize>,
    #[arg(long, global = true)]
    max_iterations: Option<usize>,
    #[arg(long, global = true)]
    kkt_tolerance: Option<f64>,
    #[arg(long, global = true)]
    equality_tolerance: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a colex or complete graph.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Maximize the Lagrangian of a graph file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate λ(G, x) at the given weights ("1/3" and "0.25" both work).
    Eval {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        weights: Vec<String>,
    },
    /// Write the left-compressed image of a graph.
    Compress {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the order of a largest clique.
    Clique {
        file: PathBuf,
        /// Also print the clique's vertices.
        #[arg(long)]
        vertices: bool,
        /// Refuse exhaustive search above this many vertices.
        #[arg(long, default_value_t = 20)]
        vertex_limit: usize,
    },
    /// Print the link of one or two vertices.
    Link {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        pin: Vec<u32>,
        #[arg(long)]
        complement: bool,
        /// Difference link E_{i\k}: sets through i that do not complete through k.
        #[arg(long)]
        minus: Option<u32>,
    },
    /// Run a verification sweep for a named claim.
    Verify {
        /// Claim identifier, e.g. lemma-2.2 or theorem-3.1.
        claim: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Enumeration limits, e.g. `max-edges=60,max-instances=500000`.
        #[arg(long)]
        budget: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// The first m r-sets in colex order.
    Colex {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// All r-subsets of [t].
    Complete {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    let mut cfg = config::load(cli.config.as_deref())?;
    config::apply_flags(&mut cfg.solver, &cli.solver);
    cfg.solver.validate()?;
    let started = Instant::now();

    match cli.command {
        Command::Gen { kind } => {
            let (g, output) = match kind {
                GenKind::Colex { r, m, output } => (RUniformHypergraph::colex(r, m)?, output),
                GenKind::Complete { r, t, output } => (RUniformHypergraph::complete(t, r)?, output),
            };
            emit(output.as_deref(), &g.to_text())?;
        }
        Command::Solve { file, format } => {
            let g = read_graph(&file)?;
            let report = solve(&g, &cfg.solver)?;
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report)?;
                    s.push('\n');
                    s
                }
                Format::Text => solve_text(&report),
                Format::Csv => return Err(CliError("solve supports --format json or text".into())),
            };
            emit(None, &text)?;
            if cli.timing {
                eprintln!("runtime {:.3}s", started.elapsed().as_secs_f64());
            }
        }
        Command::Eval { file, weights } => {
            let g = read_graph(&file)?;
            let x = Weighting::new(weights::parse_all(&weights)?)?;
            emit(None, &format!("{}\n", sig15(evaluate(&g, &x)?)))?;
        }
        Command::Compress { file, output } => {
            let g = read_graph(&file)?;
            let compressed = if is_left_compressed(&g) { g } else { left_compress(&g) };
            emit(output.as_deref(), &compressed.to_text())?;
        }
        Command::Clique {
            file,
            vertices,
            vertex_limit,
        } => {
            let g = read_graph(&file)?;
            let clique = hyperlag::clique::max_clique_within(&g, vertex_limit)?;
            let mut s = format!("{}\n", clique.len());
            if vertices {
                let labels: Vec<String> = clique.iter().map(u32::to_string).collect();
                s.push_str(&labels.join(" "));
                s.push('\n');
            }
            emit(None, &s)?;
        }
        Command::Link {
            file,
            pin,
            complement,
            minus,
        } => {
            let g = read_graph(&file)?;
            emit(None, &link(&g, &pin, complement, minus)?.to_text())?;
        }
        Command::Verify {
            claim,
            t,
            r,
            m,
            format,
            budget,
            output,
        } => {
            if let Some(spec) = budget {
                config::apply_budget(&mut cfg.budget, &spec)?;
            }
            let claim: ClaimId = claim.parse()?;
            let mut report = run_claim(&ClaimRequest { claim, t, r, m }, &cfg)?;
            if cli.timing {
                report.runtime_seconds = Some(started.elapsed().as_secs_f64());
            }
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv()?,
                Format::Text => report.to_text(),
            };
            emit(output.as_deref(), &text)?;
            return Ok(match report.verdict {
                Verdict::Pass => 0,
                Verdict::Fail => EXIT_FAIL,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
            });
        }
    }
    Ok(0)
}

fn read_graph(path: &Path) -> CliResult<RUniformHypergraph> {
    let text = fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    RUniformHypergraph::from_text(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn solve_text(rep: &SolveReport) -> String {
    let join = |w: &Weighting| {
        w.as_slice()
            .iter()
            .map(|&v| sig15(v))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let support: Vec<String> = rep.support.iter().map(u32::to_string).collect();
    let mut s = format!(
        "value        {}\nweighting    {}\nraw          {}\nsupport      {}\nkkt          {}\nconverged    {}\npairs        {}\niterations   {}\nrestarts     {} (best {})\n",
        sig15(rep.value),
        join(&rep.weighting),
        join(&rep.raw_weighting),
        support.join(" "),
        sig15(rep.kkt_residual),
        rep.converged,
        rep.support_pairs_covered,
        rep.iterations,
        rep.restarts_used,
        rep.best_restart,
    );
    if let (Some(order), Some(bound)) = (rep.clique_order, rep.clique_lower_bound) {
        s.push_str(&format!("clique       {order} (bound {})\n", sig15(bound)));
    }
    if let Some(ms) = rep.motzkin_straus_value {
        s.push_str(&format!("clique value {}\n", sig15(ms)));
    }
    s
}
