//! Command line front end: `analyze` decides a single system file, `randcheck`
//! drives the randomized cross-validation campaign, `examples` replays the
//! bundled systems against their recorded verdicts.
//!
//! Exit codes for `analyze`: 0 guaranteed-yes, 1 guaranteed-no,
//! 2 hypothesis-not-met; with `--oracle` the code follows the exact rank
//! condition instead (0 holds, 1 fails). Unreadable or malformed input exits
//! with 64. `randcheck` and `examples` exit 0 exactly when nothing failed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use larc::criteria::{analyze, Analysis, OracleReport, Status, Verdict};
use larc::fuzz::{run_campaign, CampaignConfig};
use larc::system::{BilinearSystem, InteractionGraph};
use larc::systems::{golden_cases, GoldenCase};
use larc::{Algebra, Family};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "larc",
    version,
    about = "Graph criteria with an exact rank oracle for bilinear systems on so/sl/gl"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide controllability or accessibility of one system file
    Analyze {
        /// System file in the `.sys` grammar
        path: PathBuf,
        /// Run the exact rank oracle and let it drive the exit code
        #[arg(long)]
        oracle: bool,
        /// Emit a machine-readable report instead of prose
        #[arg(long)]
        json: bool,
        /// Write contr.dot, drift.dot and union.dot into this directory
        #[arg(long, value_name = "DIR")]
        dot_dir: Option<PathBuf>,
    },
    /// Cross-validate random systems against the exact oracle
    Randcheck {
        /// Algebra family to sample in
        #[arg(long, value_enum)]
        group: Group,
        /// Matrix dimension n
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=16))]
        n: u64,
        /// Number of sampled systems
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Campaign seed; a fixed seed reproduces the exact campaign
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper bound on sampled control directions per system
        #[arg(long, default_value_t = 6)]
        max_controls: usize,
    },
    /// Replay the bundled example systems against their recorded verdicts
    Examples {
        /// Emit a machine-readable pass/fail list
        #[arg(long)]
        json: bool,
        /// Load <name>.sys files from this directory instead of the bundled sources
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    So,
    Sl,
    Gl,
}

impl From<Group> for Family {
    fn from(g: Group) -> Family {
        match g {
            Group::So => Family::So,
            Group::Sl => Family::Sl,
            Group::Gl => Family::Gl,
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Analyze {
            path,
            oracle,
            json,
            dot_dir,
        } => cmd_analyze(&path, oracle, json, dot_dir.as_deref()),
        Cmd::Randcheck {
            group,
            n,
            trials,
            seed,
            max_controls,
        } => cmd_randcheck(group.into(), n as usize, trials, seed, max_controls),
        Cmd::Examples { json, dir } => cmd_examples(json, dir.as_deref()),
    }
}

const EX_DATAERR: u8 = 64;

/// Connectivity shape of one interaction graph. For directed graphs
/// `components` counts weak components and `connected` means strongly
/// connected; undirected graphs have no self-loops by construction.
#[derive(Serialize)]
struct GraphStats {
    components: usize,
    connected: bool,
    self_loops: usize,
}

fn graph_stats(g: &InteractionGraph) -> GraphStats {
    match g {
        InteractionGraph::Undirected(u) => GraphStats {
            components: u.components().len(),
            connected: u.connected(),
            self_loops: 0,
        },
        InteractionGraph::Directed(d) => GraphStats {
            components: d.weak_components().len(),
            connected: d.strongly_connected(),
            self_loops: d.self_loop_count(),
        },
    }
}

#[derive(Serialize)]
struct SystemSummary {
    family: String,
    n: usize,
    controls: usize,
    driftless: bool,
}

#[derive(Serialize)]
struct GraphSection {
    drift: GraphStats,
    control: GraphStats,
    union: GraphStats,
}

/// The analyze report. Field order is the JSON key order; timing is kept out
/// so identical input produces byte-identical output across runs.
#[derive(Serialize)]
struct Report<'a> {
    system: SystemSummary,
    graphs: GraphSection,
    verdict: &'a Verdict,
    oracle: Option<OracleReport>,
}

fn cmd_analyze(path: &Path, with_oracle: bool, json: bool, dot_dir: Option<&Path>) -> ExitCode {
    let parse_started = Instant::now();
    let source = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(EX_DATAERR);
        }
    };
    let sys = match BilinearSystem::parse(&source) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EX_DATAERR);
        }
    };
    let parse_time = parse_started.elapsed();

    let decide_started = Instant::now();
    let analysis = match analyze(&sys, with_oracle) {
        Ok(a) => a,
        Err(e) => {
            // A decided verdict contradicting the oracle is a bug in the
            // criteria, not in the input; make it loud.
            eprintln!("internal error: {e}");
            return ExitCode::from(70);
        }
    };
    let decide_time = decide_started.elapsed();

    if let Some(dir) = dot_dir {
        if let Err(e) = write_dot_files(&sys, dir) {
            eprintln!("error: cannot write DOT files to {}: {e}", dir.display());
            return ExitCode::from(EX_DATAERR);
        }
    }

    let algebra = sys.algebra();
    if json {
        let report = Report {
            system: SystemSummary {
                family: algebra.family().name().to_string(),
                n: algebra.n(),
                controls: sys.controls().len(),
                driftless: sys.is_driftless(),
            },
            graphs: GraphSection {
                drift: graph_stats(&sys.drift_graph()),
                control: graph_stats(&sys.control_graph()),
                union: graph_stats(&sys.union_graph()),
            },
            verdict: &analysis.verdict,
            oracle: analysis.oracle,
        };
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        print_human(&sys, &analysis, parse_time, decide_time, with_oracle);
    }

    exit_code_for(&analysis)
}

fn exit_code_for(analysis: &Analysis) -> ExitCode {
    match analysis.oracle {
        Some(o) => ExitCode::from(u8::from(!o.holds)),
        None => match analysis.verdict.status {
            Status::GuaranteedYes => ExitCode::from(0),
            Status::GuaranteedNo => ExitCode::from(1),
            Status::HypothesisNotMet => ExitCode::from(2),
        },
    }
}

fn print_human(
    sys: &BilinearSystem,
    analysis: &Analysis,
    parse_time: Duration,
    decide_time: Duration,
    with_oracle: bool,
) {
    let algebra = sys.algebra();
    let drift = if sys.is_driftless() {
        "driftless"
    } else {
        "with drift"
    };
    println!(
        "system: {algebra}, {} controls, {drift}",
        sys.controls().len()
    );
    let v = &analysis.verdict;
    println!("verdict: {} for {} [{}]", v.status, v.property, v.criterion);
    let reasons: Vec<String> = v.reasons.iter().map(ToString::to_string).collect();
    println!("reasons: {}", reasons.join(", "));
    if let Some(o) = &analysis.oracle {
        let outcome = if o.holds { "holds" } else { "fails" };
        println!(
            "oracle: closure dimension {} of {}, rank condition {outcome}",
            o.dimension, o.full_dimension
        );
    }
    let phase = if with_oracle {
        "decide+oracle"
    } else {
        "decide"
    };
    println!("timing: parse {parse_time:?}, {phase} {decide_time:?}");
}

fn write_dot_files(sys: &BilinearSystem, dir: &Path) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("contr.dot"), sys.control_graph().to_dot())?;
    fs::write(dir.join("drift.dot"), sys.drift_graph().to_dot())?;
    fs::write(dir.join("union.dot"), sys.union_graph().to_dot())?;
    Ok(())
}

fn cmd_randcheck(
    family: Family,
    n: usize,
    trials: u64,
    seed: u64,
    max_controls: usize,
) -> ExitCode {
    let algebra = match Algebra::new(family, n) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = CampaignConfig {
        algebra,
        trials,
        seed,
        max_controls,
    };
    let started = Instant::now();
    let summary = run_campaign(&cfg);
    let elapsed = started.elapsed();

    println!("campaign: {algebra}, {trials} trials, seed {seed}, max {max_controls} controls");
    println!("guaranteed-yes      {:>8}", summary.confirmed_yes);
    println!("guaranteed-no       {:>8}", summary.confirmed_no);
    println!("hypothesis-not-met  {:>8}", summary.hypothesis_not_met);
    println!("violations          {:>8}", summary.violation_count());
    println!("elapsed             {elapsed:>8.2?}");
    for v in &summary.violations {
        eprintln!(
            "violation at trial {}: verdict {:?} vs oracle {}/{}",
            v.trial, v.verdict.status, v.oracle.dimension, v.oracle.full_dimension
        );
        eprint!("{}", v.system);
    }
    ExitCode::from(u8::from(summary.violation_count() > 0))
}

#[derive(Serialize)]
struct ExampleRow {
    name: &'static str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn run_example(case: &GoldenCase, dir: Option<&Path>) -> Result<(), String> {
    let source = match dir {
        None => case.source.to_string(),
        Some(d) => {
            let path = d.join(format!("{}.sys", case.name));
            fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        }
    };
    let sys = BilinearSystem::parse(&source).map_err(|e| e.to_string())?;
    let analysis = analyze(&sys, true).map_err(|e| e.to_string())?;
    let v = &analysis.verdict;
    if v.status != case.status || v.property != case.property || v.criterion != case.criterion {
        return Err(format!(
            "verdict {} for {} [{}], recorded {} for {} [{}]",
            v.status, v.property, v.criterion, case.status, case.property, case.criterion
        ));
    }
    let o = analysis.oracle.expect("analysis ran with the oracle");
    if o.dimension != case.dimension || o.full_dimension != case.full_dimension {
        return Err(format!(
            "oracle dimension {}/{}, recorded {}/{}",
            o.dimension, o.full_dimension, case.dimension, case.full_dimension
        ));
    }
    Ok(())
}

fn cmd_examples(json: bool, dir: Option<&Path>) -> ExitCode {
    let mut rows = Vec::new();
    for case in golden_cases() {
        let row = match run_example(&case, dir) {
            Ok(()) => ExampleRow {
                name: case.name,
                pass: true,
                detail: None,
            },
            Err(detail) => ExampleRow {
                name: case.name,
                pass: false,
                detail: Some(detail),
            },
        };
        rows.push((row, case));
    }

    let failed: Vec<&str> = rows
        .iter()
        .filter(|(r, _)| !r.pass)
        .map(|(r, _)| r.name)
        .collect();
    if json {
        let list: Vec<&ExampleRow> = rows.iter().map(|(r, _)| r).collect();
        println!("{}", serde_json::to_string(&list).expect("rows serialize"));
    } else {
        for (row, case) in &rows {
            match &row.detail {
                None => println!(
                    "{}: pass ({} [{}], {}/{})",
                    row.name, case.status, case.criterion, case.dimension, case.full_dimension
                ),
                Some(detail) => println!("{}: FAIL ({detail})", row.name),
            }
        }
        match failed.as_slice() {
            [] => println!("all {} examples pass", rows.len()),
            names => println!(
                "{} of {} examples failed: {}",
                names.len(),
                rows.len(),
                names.join(", ")
            ),
        }
    }
    ExitCode::from(u8::from(!failed.is_empty()))
}
