use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use tough_closure::closure::t_closure;
use tough_closure::degree::{chvatal_condition, predicate_pt, DegreeVerdict};
use tough_closure::graph6::{encode_graph6, parse_graph6_lines};
use tough_closure::hamiltonicity::{find_hamiltonian_cycle_with, HamiltonicityCertificate, SegmentRule};
use tough_closure::rational::parse_rational;
use tough_closure::toughness::toughness_with;
use tough_closure::{Graph, Rational};
use tough_closure_harness::corpus::check_records;
use tough_closure_harness::record::{now_utc, SCHEMA_VERSION};
use tough_closure_harness::tightness::recheck_finding;
use tough_closure_harness::{
    run_sweep, run_tightness_search, Density, ExperimentRecord, Family, Filter, SweepConfig, SweepPlan, Task,
    Verdict,
};

/// Exact toughness, closures and Hamiltonicity experiments on small graphs.
#[derive(Parser)]
#[command(name = "tough-closure", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the t-closure of each input graph.
    Closure {
        #[arg(long, default_value_t = 0)]
        t: u32,
        /// Also print every added edge with its degree sum.
        #[arg(long)]
        trace: bool,
        input: Option<PathBuf>,
    },
    /// Print the toughness and a minimising cut-set.
    Toughness { input: Option<PathBuf> },
    /// Decide Hamiltonicity and print a cycle when there is one.
    Ham { input: Option<PathBuf> },
    /// Evaluate the degree-sequence predicate P(t).
    Pt {
        #[arg(long)]
        t: usize,
        input: Option<PathBuf>,
    },
    /// Evaluate Chvátal's degree condition.
    Chvatal { input: Option<PathBuf> },
    /// Sweep a graph family and check a lemma on every instance.
    Verify(Box<VerifyArgs>),
    /// Look for non-Hamiltonian graphs that become Hamiltonian after one
    /// high-degree-sum edge, ranked by toughness.
    SearchTightness {
        #[arg(long, value_parser = parse_range, default_value = "6..10")]
        n: RangeInclusive<usize>,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run stored JSONL records and compare verdicts.
    CorpusCheck { records: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Lemma {
    Bc,
    L7,
    L8,
    L9,
    L11,
    Corollary,
    Theorem6,
    Rotations,
    Chvatal,
    Identities,
}

#[derive(Clone, Copy, ValueEnum)]
enum Segments {
    DyToDx,
    CommonNeighbours,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    lemma: Lemma,

    /// Every labeled graph on N vertices.
    #[arg(long, value_name = "N", group = "family")]
    exhaustive: Option<usize>,
    /// G(n, p) samples with n in LO..HI.
    #[arg(long, value_name = "LO..HI", value_parser = parse_range, group = "family")]
    random: Option<RangeInclusive<usize>>,
    /// Rejection samples of toughness at least --tough-t, n in LO..HI.
    #[arg(long, value_name = "LO..HI", value_parser = parse_range, group = "family")]
    tough_sampled: Option<RangeInclusive<usize>>,
    /// graph6 file, one graph per line.
    #[arg(long, group = "family")]
    corpus: Option<PathBuf>,

    /// Edge probability for --random, or "sweep" for 1/10..9/10.
    #[arg(long, default_value = "sweep")]
    p: Density,
    #[arg(long, value_parser = parse_rat)]
    tough_t: Option<Rational>,
    #[arg(long, default_value_t = 1000)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Allow exhaustive enumeration above n = 7.
    #[arg(long)]
    exhaustive_max_n: Option<usize>,

    /// Integer t for l9 and l11 (and the closure threshold for bc).
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, value_parser = parse_rat, default_value = "1/2")]
    eps: Rational,
    /// Accept eps = 1/4 in l8.
    #[arg(long)]
    allow_quarter: bool,
    /// l9 requires d(x) + d(y) = n - t exactly.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_parser = parse_rat, default_value = "5/2")]
    t_prime: Rational,
    #[arg(long, value_enum, default_value = "dy-to-dx")]
    segments: Segments,

    /// Gate: toughness at least TAU.
    #[arg(long, value_parser = parse_rat, value_name = "TAU")]
    min_toughness: Option<Rational>,
    /// Gate: P(T) holds.
    #[arg(long, value_name = "T")]
    pt: Option<usize>,
    /// Gate: Chvatal's degree condition holds.
    #[arg(long)]
    chvatal: bool,
    /// Gate: skip complete graphs.
    #[arg(long)]
    not_complete: bool,

    /// Per-instance time budget.
    #[arg(long, default_value_t = 10_000)]
    timeout_ms: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.parse().map_err(|_| format!("bad range {s:?}"))?;
    let hi: usize = hi.parse().map_err(|_| format!("bad range {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn parse_rat(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn read_graphs(input: Option<&Path>) -> Result<Vec<Graph>> {
    let mut text = String::new();
    match input {
        Some(p) => {
            File::open(p)
                .with_context(|| format!("opening {}", p.display()))?
                .read_to_string(&mut text)?;
        }
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    parse_graph6_lines(&text).map_err(|(line, e)| anyhow::anyhow!("line {line}: {e}"))
}

fn open_out(out: Option<&Path>) -> Result<Option<BufWriter<File>>> {
    out.map(|p| File::create(p).with_context(|| format!("creating {}", p.display())).map(BufWriter::new))
        .transpose()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let config = SweepConfig::from_env()?;
    let limits = config.limits.clone();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Closure { t, trace, input } => {
            for g in read_graphs(input.as_deref())? {
                let r = t_closure(&g, t);
                writeln!(out, "{} added={}", encode_graph6(&r.closed), r.trace.len())?;
                if trace {
                    for e in &r.trace {
                        writeln!(out, "  {} {} sum={}", e.u, e.v, e.degree_sum)?;
                    }
                }
            }
        }
        Command::Toughness { input } => {
            for g in read_graphs(input.as_deref())? {
                let r = toughness_with(&g, &limits)?;
                match r.witness {
                    Some(w) => writeln!(out, "{} witness={w}", r.value)?,
                    None => writeln!(out, "{} witness=none", r.value)?,
                }
            }
        }
        Command::Ham { input } => {
            for g in read_graphs(input.as_deref())? {
                if g.order() < 3 {
                    writeln!(out, "non-hamiltonian n={}", g.order())?;
                    continue;
                }
                match find_hamiltonian_cycle_with(&g, &limits)? {
                    HamiltonicityCertificate::Cycle { cycle, nodes } => {
                        let order: Vec<String> = cycle.order.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "hamiltonian nodes={nodes} cycle={}", order.join(" "))?;
                    }
                    HamiltonicityCertificate::NonHamiltonian { nodes } => writeln!(out, "non-hamiltonian nodes={nodes}")?,
                }
            }
        }
        Command::Pt { t, input } => {
            for g in read_graphs(input.as_deref())? {
                print_degree_verdict(&mut out, predicate_pt(&g.degree_sequence(), t))?;
            }
        }
        Command::Chvatal { input } => {
            for g in read_graphs(input.as_deref())? {
                print_degree_verdict(&mut out, chvatal_condition(&g.degree_sequence()))?;
            }
        }
        Command::Verify(args) => return verify(*args, config, &mut out),
        Command::SearchTightness { n, t, budget, seed, out: path } => {
            let report = run_tightness_search(n, t, budget, seed, &limits)?;
            let mut sink = open_out(path.as_deref())?;
            let mut rechecked_ok = true;
            for (k, f) in report.findings.iter().enumerate() {
                let check = recheck_finding(f, t, &limits)?;
                rechecked_ok &= check.all();
                if let Some(w) = sink.as_mut() {
                    let record = ExperimentRecord {
                        schema: SCHEMA_VERSION,
                        experiment_id: format!("search-tightness-t{t}"),
                        timestamp: now_utc(),
                        instance: f.instance.clone(),
                        index: k as u64,
                        parameters: serde_json::json!({
                            "t": t, "n_min": report.n_min, "n_max": report.n_max,
                            "budget": budget, "seed": seed,
                        }),
                        verdict: if f.contradiction { Verdict::Counterexample } else { Verdict::Pass },
                        detail: serde_json::json!({ "finding": f, "recheck": check }),
                        runtime_ms: 0,
                    };
                    serde_json::to_writer(&mut *w, &record)?;
                    writeln!(w)?;
                }
            }
            if let Some(mut w) = sink {
                w.flush()?;
            }
            writeln!(
                out,
                "examined={} hits={} kept={} max_toughness={} contradiction={} rechecked={}",
                report.examined,
                report.hits,
                report.findings.len(),
                report.max_toughness().map_or("none".to_string(), |t| t.to_string()),
                report.contradiction,
                rechecked_ok,
            )?;
            if report.contradiction || !rechecked_ok {
                return Ok(2);
            }
        }
        Command::CorpusCheck { records } => {
            let file = File::open(&records).with_context(|| format!("opening {}", records.display()))?;
            let check = check_records(BufReader::new(file), &limits)?;
            writeln!(
                out,
                "records={} reproduced={} skipped={} mismatches={}",
                check.records,
                check.reproduced,
                check.skipped,
                check.mismatches.len()
            )?;
            for (line, why) in &check.mismatches {
                writeln!(out, "  line {line}: {why}")?;
            }
            if !check.mismatches.is_empty() {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn print_degree_verdict(out: &mut impl Write, v: DegreeVerdict) -> io::Result<()> {
    match v {
        DegreeVerdict::Holds => writeln!(out, "holds"),
        DegreeVerdict::Violated { i } => writeln!(out, "violated i={i}"),
    }
}

fn verify(args: VerifyArgs, mut config: SweepConfig, out: &mut impl Write) -> Result<u8> {
    let family = if let Some(n) = args.exhaustive {
        Family::Exhaustive { n }
    } else if let Some(n) = args.random.clone() {
        Family::random(n, args.p, args.count, args.seed)
    } else if let Some(n) = args.tough_sampled.clone() {
        let Some(t) = args.tough_t else { bail!("--tough-sampled needs --tough-t") };
        Family::tough_sampled(n, t, args.count, args.seed)
    } else if let Some(path) = args.corpus.clone() {
        Family::Corpus { path }
    } else {
        bail!("pick a family: --exhaustive, --random, --tough-sampled or --corpus");
    };
    let mut plan = SweepPlan::new(family);
    if let Some(tau) = args.min_toughness {
        plan = plan.filter(Filter::MinToughness { tau });
    }
    if let Some(t) = args.pt {
        plan = plan.filter(Filter::Pt { t });
    }
    if args.chvatal {
        plan = plan.filter(Filter::Chvatal);
    }
    if args.not_complete {
        plan = plan.filter(Filter::NotComplete);
    }
    let need_t = |name: &str| args.t.with_context(|| format!("--lemma {name} needs --t"));
    let task = match args.lemma {
        Lemma::Bc => match args.t {
            None | Some(0) => Task::Bc,
            Some(t) => Task::Closure { t },
        },
        Lemma::L7 => Task::L7,
        Lemma::L8 => Task::L8 { eps: args.eps, allow_quarter: args.allow_quarter },
        Lemma::L9 => Task::L9 { t: need_t("l9")?, strict: args.strict },
        Lemma::L11 => Task::L11 { t: need_t("l11")? },
        Lemma::Corollary => Task::Corollary { t_prime: args.t_prime },
        Lemma::Theorem6 => Task::Theorem6,
        Lemma::Rotations => Task::Rotations,
        Lemma::Chvatal => Task::Chvatal,
        Lemma::Identities => Task::Identities {
            rule: match args.segments {
                Segments::DyToDx => SegmentRule::DyToDx,
                Segments::CommonNeighbours => SegmentRule::CommonNeighbours,
            },
        },
    };
    config.timeout = Some(Duration::from_millis(args.timeout_ms));
    if let Some(n) = args.exhaustive_max_n {
        config.exhaustive_max_n = n;
    }
    let mut sink = open_out(args.out.as_deref())?;
    let mut shown = 0;
    let summary = run_sweep(&plan, &task, &config, &mut |r| {
        if let Some(w) = sink.as_mut() {
            serde_json::to_writer(&mut *w, r)?;
            writeln!(w)?;
        }
        if r.verdict == Verdict::Counterexample && shown < 5 {
            shown += 1;
            eprintln!("COUNTEREXAMPLE #{} {}", r.index, r.instance);
        }
        Ok(())
    })?;
    if let Some(mut w) = sink {
        w.flush()?;
    }
    writeln!(out, "{} {summary}", task.id())?;
    Ok(if summary.counterexample > 0 { 2 } else { 0 })
}
