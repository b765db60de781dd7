//! `bhcycle`: generate balanced hypercubes, embed cycles and run the
//! verification campaigns.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a guarantee was violated.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bh_core::embed::{Embedder, FaultSet};
use bh_core::oracle::{self, CampaignReport, Execution};
use bh_core::topology::MAX_DIMENSION;
use bh_core::{BalancedHypercube, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "bhcycle",
    version,
    about = "Fault-tolerant cycle embedding in balanced hypercubes BH_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the edge list of BH_n
    Gen {
        /// Dimension n >= 1
        #[arg(short = 'n')]
        n: usize,
        /// Output format (default: text)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Embed a fault-free cycle of a given length through an edge
    Embed(EmbedArgs),
    /// Verify the embedder: exhaustively on BH_2, or on concentrated fault sets
    Verify {
        #[command(flatten)]
        common: Common,
        /// Every fault set with at most 2 faults, every edge and length (n = 2 only)
        #[arg(long)]
        exhaustive: bool,
        /// Seed for the concentrated fault sets
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Embed and validate seeded random instances
    Stress {
        #[command(flatten)]
        common: Common,
        /// Number of random instances
        #[arg(long, default_value_t = 5000)]
        trials: usize,
        /// Seed for all randomness
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Reproduce the two-fault instance without a 4-cycle and the
    /// (2n-1)-fault optimality probe, checked by brute force
    Counterexample {
        #[command(flatten)]
        common: Common,
        /// Node-expansion cap for the brute-force search
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run the per-lemma property suites: two_path_exit, eight_cycle_cross, splits
    Lemmas {
        #[command(flatten)]
        common: Common,
        /// Samples for the 8-cycle suite
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Seed for the 8-cycle suite
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Dimension n >= 2
    #[arg(short = 'n')]
    n: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; 0 uses one per core
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Include wall-clock time in reports (breaks byte-identical output)
    #[arg(long)]
    timing: bool,
}

impl Common {
    fn exec(&self) -> Execution {
        Execution::Parallel(self.workers)
    }
}

#[derive(Args, Debug)]
struct EmbedArgs {
    /// Dimension n >= 2
    #[arg(short = 'n')]
    n: usize,
    /// Edge as u-v, e.g. 00-10
    #[arg(short = 'e', long = "edge")]
    edge: String,
    /// Cycle length
    #[arg(short = 'l', long = "length")]
    length: usize,
    /// Fault file: one edge u-v per line, '#' comments
    #[arg(long)]
    faults: Option<PathBuf>,
    /// Search budget when the request lies outside the guarantee
    #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u64,
    /// Allow length 4 through bounded search
    #[arg(long)]
    best_effort: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A reason to stop, with its exit code.
enum Stop {
    Input(String),
    Violation(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Stop::Violation(e.to_string())
        } else {
            Stop::Input(e.to_string())
        }
    }
}

type Outcome = Result<(), Stop>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn check_dimension(n: usize, min: usize) -> Outcome {
    if n < min || n > MAX_DIMENSION {
        return Err(Stop::Input(format!(
            "n must lie in {min}..={MAX_DIMENSION}, got {n}"
        )));
    }
    Ok(())
}

fn cmd_gen(n: usize, format: Format) -> Outcome {
    check_dimension(n, 1)?;
    let g = BalancedHypercube::new(n)?;
    match format {
        Format::Text => print!("{}", g.edge_list_text()),
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: usize,
                vertices: usize,
                edges: Vec<String>,
            }
            let mut edges: Vec<String> = g.edges().iter().map(|e| e.label(n)).collect();
            edges.sort();
            println!(
                "{}",
                json(&Out {
                    n,
                    vertices: g.vertex_count(),
                    edges
                })
            );
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct EmbedOut {
    n: usize,
    edge: String,
    length: usize,
    cycle: Vec<String>,
    trace: Vec<String>,
}

fn cmd_embed(a: &EmbedArgs) -> Outcome {
    check_dimension(a.n, 2)?;
    let emb = Embedder::new(a.n)?;
    let g = emb.graph();
    let e = g.parse_edge(&a.edge)?;
    let faults = match &a.faults {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|err| Stop::Input(format!("cannot read {}: {err}", path.display())))?;
            FaultSet::parse_text(g, &text)?
        }
        None => FaultSet::empty(a.n),
    };
    let result = match emb.embed(e, a.length, &faults) {
        Err(Error::GuaranteeVoid(_)) => emb.embed_best_effort(e, a.length, &faults, a.budget),
        Err(Error::UnsupportedLength(4)) if a.best_effort => {
            emb.embed_best_effort(e, 4, &faults, a.budget)
        }
        other => other,
    };
    let (cycle, trace) = result?;
    oracle::validate_cycle(a.n, &cycle, e, a.length, &faults)
        .map_err(|v| Stop::Violation(format!("constructed cycle failed validation: {v}")))?;
    let out = EmbedOut {
        n: a.n,
        edge: e.label(a.n),
        length: a.length,
        cycle: cycle.labels(a.n),
        trace: trace.steps().iter().map(|s| s.label.clone()).collect(),
    };
    match a.format {
        Format::Json => println!("{}", json(&out)),
        Format::Text => {
            println!("edge {} length {}", out.edge, out.length);
            println!("cycle {}", out.cycle.join(" "));
            for line in trace.lines() {
                println!("  {line}");
            }
        }
    }
    Ok(())
}

fn emit_reports(reports: &[CampaignReport], format: Format) {
    match format {
        Format::Json if reports.len() == 1 => println!("{}", reports[0].to_json()),
        Format::Json => println!("{}", json(&reports)),
        Format::Text => {
            for r in reports {
                print!("{}", r.to_text());
            }
        }
    }
}

fn finish(mut reports: Vec<CampaignReport>, common: &Common, start: Instant) -> Outcome {
    if common.timing {
        let t = start.elapsed().as_secs_f64();
        for r in &mut reports {
            r.elapsed_seconds = Some(t);
        }
    }
    emit_reports(&reports, common.format);
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    if failed > 0 {
        return Err(Stop::Violation(format!("{failed} instance(s) failed")));
    }
    Ok(())
}

fn cmd_verify(common: &Common, exhaustive: bool, seed: u64) -> Outcome {
    let start = Instant::now();
    let report = if exhaustive {
        if common.n != 2 {
            return Err(Stop::Input(format!(
                "exhaustive verification is only feasible for n = 2, got n = {}",
                common.n
            )));
        }
        oracle::campaign_exhaustive_bh2(common.exec())?
    } else {
        check_dimension(common.n, 2)?;
        oracle::campaign_adversarial(common.n, seed, common.exec())?
    };
    finish(vec![report], common, start)
}

fn cmd_stress(common: &Common, trials: usize, seed: u64) -> Outcome {
    check_dimension(common.n, 2)?;
    if trials == 0 {
        return Err(Stop::Input("--trials must be at least 1".into()));
    }
    let start = Instant::now();
    let report = oracle::campaign_random(common.n, trials, seed, common.exec())?;
    finish(vec![report], common, start)
}

fn cmd_counterexample(common: &Common, budget: u64) -> Outcome {
    check_dimension(common.n, 2)?;
    let start = Instant::now();
    let four = oracle::verify_counterexample(common.n, budget)?;
    let opt = oracle::verify_optimality(common.n, budget)?;
    let elapsed = common.timing.then(|| start.elapsed().as_secs_f64());
    match common.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                four_cycle: &'a oracle::CounterexampleCheck,
                optimality: &'a oracle::OptimalityCheck,
                #[serde(skip_serializing_if = "Option::is_none")]
                elapsed_seconds: Option<f64>,
            }
            println!(
                "{}",
                json(&Out {
                    four_cycle: &four,
                    optimality: &opt,
                    elapsed_seconds: elapsed
                })
            );
        }
        Format::Text => {
            println!("edge {} faults [{}]", four.edge, four.faults.join(", "));
            println!("  length 4: {}", four.four_cycle);
            println!("  length 6: {}", four.six_cycle);
            println!("  embedder failures at lengths {:?}", four.failed_lengths);
            println!(
                "optimality probe: edge {} faults [{}]",
                opt.edge,
                opt.faults.join(", ")
            );
            println!("  lengths not refuted by search: {:?}", opt.not_refuted);
            for r in &opt.restored {
                println!(
                    "  without {}: failures at lengths {:?}",
                    r.removed, r.failed_lengths
                );
            }
            if let Some(t) = elapsed {
                println!("elapsed {t:.3} s");
            }
        }
    }
    if four.holds && opt.holds {
        Ok(())
    } else {
        Err(Stop::Violation(
            "oracle did not confirm the construction".into(),
        ))
    }
}

fn cmd_lemmas(common: &Common, trials: usize, seed: u64) -> Outcome {
    check_dimension(common.n, 2)?;
    let start = Instant::now();
    let n = common.n;
    let mut reports = Vec::new();
    if n == 2 {
        reports.push(oracle::suite_two_path_bh2(common.exec())?);
        reports.push(oracle::suite_ham_bh2(common.exec())?);
    }
    reports.push(oracle::suite_family(n)?);
    reports.push(oracle::suite_eight_cycle(n, trials, seed, common.exec())?);
    reports.push(oracle::suite_splits(n)?);
    finish(reports, common, start)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { n, format } => cmd_gen(n, format),
        Command::Embed(args) => cmd_embed(&args),
        Command::Verify {
            common,
            exhaustive,
            seed,
        } => cmd_verify(&common, exhaustive, seed),
        Command::Stress {
            common,
            trials,
            seed,
        } => cmd_stress(&common, trials, seed),
        Command::Counterexample { common, budget } => cmd_counterexample(&common, budget),
        Command::Lemmas {
            common,
            trials,
            seed,
        } => cmd_lemmas(&common, trials, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Stop::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Stop::Violation(msg)) => {
            eprintln!("guarantee violated: {msg}");
            ExitCode::from(2)
        }
    }
}
