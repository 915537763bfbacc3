//! Command-line front end.
//!
//! Exit codes: 0 = all checks passed, 1 = a verified violation or failed
//! re-validation was emitted, 2 = usage or input error. Results stream as
//! JSON lines to stdout or to `--output`.

use clap::{Args, Parser, Subcommand};
use representativity::{
    analyze_full, chess_demo, check_lemma_2_2, equality_family, parse_corpus, parse_graph_spec,
    sweep_theorem_2_2, to_graph6, Certificate, CopySemantics, NormalizationFlags,
};
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "upsilon", version, about = "Vertex representativity and symmetry-price verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpt {
    /// Write JSON lines here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one host against one pattern and emit a certificate.
    Analyze {
        /// Host as a named graph (d5, k<n>, c<n>, p<n>, petersen) or graph6.
        #[arg(long, conflicts_with = "graph6")]
        graph: Option<String>,
        /// Host as a raw graph6 string.
        #[arg(long)]
        graph6: Option<String>,
        /// Pattern: d5, k<n>, c<n>, p<n>, or graph6.
        #[arg(long)]
        pattern: String,
        /// Induced-copy semantics (experimentation only).
        #[arg(long)]
        induced: bool,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Sweep a corpus (built-in enumeration or a graph6 file) for violations.
    Sweep {
        /// Enumerate all connected graphs on 1..=n vertices (n <= 7).
        #[arg(long, conflicts_with = "input")]
        n: Option<usize>,
        /// Newline-separated graph6 corpus file.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "d5")]
        pattern: String,
        /// Which claim to sweep.
        #[arg(long, default_value = "theorem22", value_parser = ["theorem22", "lemma22"])]
        check: String,
        /// Random subsets per orbit pair for the lemma22 sweep.
        #[arg(long, default_value_t = 32)]
        trials: usize,
        /// Worker threads (also UPSILON_WORKERS).
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Re-validate certificates from a JSON-lines file.
    Certify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Emit one graph6 line per connected graph on n vertices.
    Generate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// Worked examples from the write-up.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// m disjoint K5 against the chair: the bound is attained exactly.
    Equality {
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Invariant deletion sets killing every K_k of a friendship graph.
    Chess {
        #[arg(long, default_value = "k5")]
        graph: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

fn emit(out: &OutputOpt, lines: &[String]) -> representativity::Result<()> {
    match &out.output {
        Some(path) => {
            let mut f = fs::File::create(path)?;
            for line in lines {
                writeln!(f, "{line}")?;
            }
        }
        None => {
            let stdout = std::io::stdout();
            let mut f = stdout.lock();
            for line in lines {
                writeln!(f, "{line}")?;
            }
        }
    }
    Ok(())
}

fn configure_workers(workers: Option<usize>) {
    let count = workers.or_else(|| {
        std::env::var("UPSILON_WORKERS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(count) = count {
        // Ignore failure: the global pool may already exist in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build_global();
    }
}

fn json(cert: &Certificate) -> String {
    serde_json::to_string(cert).expect("certificate serializes")
}

fn run(cli: Cli) -> representativity::Result<u8> {
    match cli.command {
        Command::Analyze { graph, graph6, pattern, induced, out } => {
            let (host, _) = match (graph, graph6) {
                (Some(spec), None) => parse_graph_spec(&spec)?,
                (None, Some(g6)) => (representativity::parse_graph6(&g6)?, g6),
                _ => {
                    return Err(representativity::Error::InvalidParameter(
                        "exactly one of --graph / --graph6 is required".into(),
                    ))
                }
            };
            let (pat, label) = parse_graph_spec(&pattern)?;
            let semantics = if induced { CopySemantics::Induced } else { CopySemantics::Subgraph };
            let cert = analyze_full(&host, &pat, &label, &NormalizationFlags::default(), semantics)?;
            emit(&out, &[json(&cert)])?;
            Ok(0)
        }
        Command::Sweep { n, input, pattern, check, trials, workers, out } => {
            configure_workers(workers);
            let (pat, label) = parse_graph_spec(&pattern)?;
            let (corpus, descriptor, mut errors) = match (n, input) {
                (Some(n), None) => {
                    let mut graphs = Vec::new();
                    for size in 1..=n {
                        graphs.extend(representativity::enumerate_connected(size)?);
                    }
                    (graphs, format!("connected graphs, n <= {n}"), Vec::new())
                }
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path)?;
                    let load = parse_corpus(&text);
                    (load.graphs, path.display().to_string(), load.errors)
                }
                _ => {
                    return Err(representativity::Error::InvalidParameter(
                        "exactly one of --n / --input is required".into(),
                    ))
                }
            };
            match check.as_str() {
                "theorem22" => {
                    let mut report = sweep_theorem_2_2(&corpus, &pat, &label, &descriptor)?;
                    report.corpus_errors.append(&mut errors);
                    emit(&out, &[serde_json::to_string(&report).unwrap()])?;
                    Ok(if report.passed() { 0 } else { 1 })
                }
                _ => {
                    let mut lines = Vec::new();
                    let mut failed = false;
                    for host in &corpus {
                        let report = check_lemma_2_2(host, trials, 0x5eed)?;
                        failed |= !report.passed();
                        lines.push(serde_json::to_string(&report).unwrap());
                    }
                    emit(&out, &lines)?;
                    Ok(if failed { 1 } else { 0 })
                }
            }
        }
        Command::Certify { input } => {
            let text = fs::read_to_string(&input)?;
            let mut bad = 0usize;
            let mut total = 0usize;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                total += 1;
                let cert: Certificate = serde_json::from_str(line).map_err(|e| {
                    representativity::Error::InvalidParameter(format!("line {}: {e}", i + 1))
                })?;
                if let Err(e) = representativity::revalidate(&cert) {
                    eprintln!("line {}: {e}", i + 1);
                    bad += 1;
                }
            }
            println!("certified {}/{} certificates", total - bad, total);
            Ok(if bad == 0 { 0 } else { 1 })
        }
        Command::Generate { n, out } => {
            let graphs = representativity::enumerate_connected(n)?;
            let lines: Vec<String> = graphs
                .iter()
                .map(|g| to_graph6(g))
                .collect::<representativity::Result<_>>()?;
            emit(&out, &lines)?;
            Ok(0)
        }
        Command::Demo { which } => {
            let cert = match which {
                DemoCommand::Equality { m } => equality_family(m)?,
                DemoCommand::Chess { graph, k } => {
                    let (host, _) = parse_graph_spec(&graph)?;
                    chess_demo(&host, k)?
                }
            };
            emit(&OutputOpt { output: None }, &[json(&cert)])?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // Theorem-level inconsistencies are findings, not usage errors.
                representativity::Error::Inconsistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
