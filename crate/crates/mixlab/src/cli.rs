//! The `mixlab` command line.
//!
//! Exit codes: 0 success, 2 usage, 3 engine or capacity failure, 4 I/O or
//! parse failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::{
    gen_parity, gen_partitioned, gen_random, gen_threshold, read_class_path, write_class_path, HypothesisClass,
};
use crate::memory_learner::{
    read_table_learner_path, run_targets, sample_complexity, FiniteStateLearner, Sampling, SimulationConfig,
    ThresholdIntervalLearner, VersionSpaceLearner,
};
use crate::mixing::{check_theorem1_preconditions, compute, Baseline, Method, MixingReport, Theorem1Report};
use crate::partition::{check_partition_mc_bound, coarsest_partition, SufficientPartition};
use crate::perturbation::{flip_cells, random_cells, Cell, FlipReport};
use crate::randomization::{randomization_test, RandomizationConfig};
use crate::report::sig12;
use crate::rng;
use crate::vc::{greedy_shattered_set, vc_dim_exact, GreedyOutcome, VcDimension};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "mixlab", version, about = "Mixing complexity of finite hypothesis classes")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated class in the text format.
    Generate(GenerateArgs),
    /// Mixing parameter, partition, VC-dimension and optional theorem checks.
    Analyze(AnalyzeArgs),
    /// Mixing complexity under increasing label corruption.
    RandomizationTest(RandomizationArgs),
    /// Run a bounded-memory learner against targets from the class.
    Simulate(SimulateArgs),
    /// Flip labels and write the perturbed class.
    Perturb(PerturbArgs),
    /// Exact VC-dimension or a greedy shattered set.
    Vc(VcArgs),
    /// Coarsest sufficient partition of the examples.
    Partition(PartitionArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Threshold,
    Parity,
    Random,
    Partitioned,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of examples.
    #[arg(long)]
    x: Option<usize>,
    /// Number of parity bits.
    #[arg(long)]
    n: Option<u32>,
    /// Number of hypotheses.
    #[arg(long)]
    h: Option<usize>,
    /// Number of parts.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DminMethod {
    Exact,
    Spectral,
    Search,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BaselineArg {
    Half,
    Density,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VcMethod {
    Exact,
    Greedy,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    dmin: DminMethod,
    #[arg(long, value_enum, default_value = "half")]
    baseline: BaselineArg,
    #[arg(long, default_value_t = 1.0)]
    mixing_constant: f64,
    #[arg(long, value_enum, default_value = "exact")]
    vc: VcMethod,
    /// Balance tolerance for the greedy shattered set.
    #[arg(long, default_value_t = 0.25)]
    epsilon: f64,
    /// Seed for the search method.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Theorem parameters, e.g. `--theorem1 a=0.05 s=0.1`.
    #[arg(long, num_args = 1..=2, value_name = "KEY=VALUE")]
    theorem1: Option<Vec<String>>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SweepMethod {
    Auto,
    Exact,
    Spectral,
}

#[derive(Args, Debug)]
struct RandomizationArgs {
    path: PathBuf,
    #[arg(long, default_value_t = 4)]
    levels: usize,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "auto")]
    dmin: SweepMethod,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LearnerKind {
    Threshold,
    VersionSpace,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SamplingArg {
    Iid,
    Epochs,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    path: PathBuf,
    #[arg(long, value_enum)]
    learner: LearnerKind,
    /// Table learner file, required with `--learner table`.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Target hypothesis; derived from the seed when omitted.
    #[arg(long, conflicts_with = "all_targets")]
    target: Option<usize>,
    /// Worst case over all targets (or a seeded sample of `--max-targets`).
    #[arg(long)]
    all_targets: bool,
    #[arg(long, default_value_t = 64)]
    max_targets: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.25)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.25)]
    delta: f64,
    #[arg(long, default_value_t = 1000)]
    max_examples: usize,
    #[arg(long, value_enum, default_value = "iid")]
    sampling: SamplingArg,
    /// Also write one CSV row per trial here.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PerturbArgs {
    path: PathBuf,
    /// Number of distinct random cells to flip.
    #[arg(long, conflicts_with = "cells", required_unless_present = "cells")]
    flips: Option<usize>,
    /// Explicit cells, e.g. `0:1,3:2`.
    #[arg(long, value_delimiter = ',')]
    cells: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also compare mixing parameters before and after.
    #[arg(long, value_enum)]
    dmin: Option<DminMethod>,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VcArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    method: VcMethod,
    #[arg(long, default_value_t = 0.25)]
    epsilon: f64,
    /// Upper bound on the mixing parameter for the greedy trace; the
    /// spectral bound when omitted.
    #[arg(long)]
    d: Option<f64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    path: PathBuf,
    /// Also check `MC <= 2 sqrt(2r)` with the exact mixing parameter.
    #[arg(long)]
    check_bound: bool,
    #[arg(long)]
    json: bool,
}

/// Entry point for the binary: parses `std::env::args_os`, configures the
/// worker pool from `MIXLAB_THREADS`, and returns the exit code.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) => EXIT_USAGE,
        Error::Capacity(_) | Error::Convergence { .. } => EXIT_ENGINE,
        Error::Parse { .. } | Error::Io(_) => EXIT_IO,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("MIXLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("MIXLAB_THREADS must be a non-negative integer, got `{value}`")))?;
    // a pool that is already configured (e.g. in tests) is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::RandomizationTest(a) => cmd_randomization(a, out),
        Command::Simulate(a) => cmd_simulate(a, out),
        Command::Perturb(a) => cmd_perturb(a, out),
        Command::Vc(a) => cmd_vc(a, out),
        Command::Partition(a) => cmd_partition(a, out),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", crate::report::to_json(value))?;
    Ok(())
}

fn fmt(x: f64) -> String {
    if x.is_finite() {
        format!("{}", crate::report::round_sig12(x))
    } else {
        "inf".to_string()
    }
}

fn load(path: &Path) -> Result<HypothesisClass> {
    read_class_path(path)
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let given = [("--x", a.x.is_some()), ("--n", a.n.is_some()), ("--h", a.h.is_some()), ("--r", a.r.is_some()), ("--seed", a.seed.is_some())];
    let allowed: &[&str] = match a.family {
        Family::Threshold => &["--x"],
        Family::Parity => &["--n"],
        Family::Random => &["--h", "--x", "--seed"],
        Family::Partitioned => &["--h", "--x", "--r", "--seed"],
    };
    if let Some((flag, _)) = given.iter().find(|(f, set)| *set && !allowed.contains(f)) {
        return Err(Error::input(format!("{flag} does not apply to the {:?} family", a.family).to_lowercase()));
    }
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::input(format!("this family needs {flag}")));
    let seed = a.seed.unwrap_or(0);
    let class = match a.family {
        Family::Threshold => gen_threshold(need(a.x, "--x")?)?,
        Family::Parity => gen_parity(a.n.ok_or_else(|| Error::input("this family needs --n"))?)?,
        Family::Random => gen_random(need(a.h, "--h")?, need(a.x, "--x")?, seed)?,
        Family::Partitioned => gen_partitioned(need(a.h, "--h")?, need(a.x, "--x")?, need(a.r, "--r")?, seed)?,
    };
    write_class_path(&class, &a.output)?;
    writeln!(
        out,
        "wrote {} ({} hypotheses x {} examples)",
        a.output.display(),
        class.num_hypotheses(),
        class.num_examples()
    )?;
    Ok(())
}

fn method_for(kind: DminMethod, seed: u64) -> Method {
    match kind {
        DminMethod::Exact => Method::exact(),
        DminMethod::Spectral => Method::spectral(),
        DminMethod::Search => Method::search(seed),
        DminMethod::Oracle => Method::Oracle,
    }
}

#[derive(Serialize)]
struct ClassInfo {
    hypotheses: usize,
    examples: usize,
    edges: u64,
    #[serde(serialize_with = "sig12")]
    density: f64,
}

impl ClassInfo {
    fn of(class: &HypothesisClass) -> Self {
        let d = class.density();
        ClassInfo {
            hypotheses: class.num_hypotheses(),
            examples: class.num_examples(),
            edges: d.edges,
            density: d.as_f64(),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "method", rename_all = "lowercase")]
enum VcReport {
    Exact(VcDimension),
    Greedy(GreedySummary),
}

#[derive(Serialize)]
struct GreedySummary {
    /// Size of the shattered set found: a lower bound on the VC-dimension.
    lower_bound: usize,
    #[serde(flatten)]
    outcome: GreedyOutcome,
}

#[derive(Serialize)]
struct AnalyzeReport {
    class: ClassInfo,
    mixing: MixingReport,
    r: usize,
    vc: VcReport,
    theorem1: Option<Theorem1Report>,
}

fn parse_theorem1(tokens: &[String]) -> Result<(f64, f64)> {
    let (mut a, mut s) = (None, None);
    for kv in tokens.iter().flat_map(|t| t.split(',')).filter(|t| !t.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::input(format!("expected key=value in --theorem1, got `{kv}`")))?;
        let v: f64 = v.parse().map_err(|_| Error::input(format!("--theorem1 {k}: `{v}` is not a number")))?;
        match k {
            "a" => a = Some(v),
            "s" => s = Some(v),
            _ => return Err(Error::input(format!("unknown --theorem1 key `{k}`"))),
        }
    }
    match (a, s) {
        (Some(a), Some(s)) => Ok((a, s)),
        _ => Err(Error::input("--theorem1 needs both a=<a> and s=<s>")),
    }
}

fn vc_report(class: &HypothesisClass, method: VcMethod, epsilon: f64, d: f64) -> Result<VcReport> {
    Ok(match method {
        VcMethod::Exact => VcReport::Exact(vc_dim_exact(class)?),
        VcMethod::Greedy => {
            let outcome = greedy_shattered_set(class, epsilon, d)?;
            VcReport::Greedy(GreedySummary {
                lower_bound: outcome.certificate.example_set.len(),
                outcome,
            })
        }
    })
}

fn write_vc_text(out: &mut dyn Write, vc: &VcReport) -> Result<()> {
    match vc {
        VcReport::Exact(v) => writeln!(out, "vc dimension    {} (witness {:?})", v.dimension, v.witness)?,
        VcReport::Greedy(g) => writeln!(
            out,
            "vc lower bound  {} (greedy set {:?}, stop {:?})",
            g.lower_bound, g.outcome.certificate.example_set, g.outcome.stop
        )?,
    }
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Result<()> {
    let theorem = a.theorem1.as_deref().map(parse_theorem1).transpose()?;
    if !(a.mixing_constant > 0.0 && a.mixing_constant.is_finite()) {
        return Err(Error::input("--mixing-constant must be positive"));
    }
    let class = load(&a.path)?;
    let baseline = match a.baseline {
        BaselineArg::Half => Baseline::Half,
        BaselineArg::Density => Baseline::Density,
    };
    let mixing = compute(&class, &method_for(a.dmin, a.seed), baseline)?.with_mixing_constant(a.mixing_constant);
    let r = coarsest_partition(&class).r;
    let vc = vc_report(&class, a.vc, a.epsilon, mixing.d_value)?;
    let theorem1 = theorem
        .map(|(ta, ts)| check_theorem1_preconditions(&class, ta, ts, mixing.d_value))
        .transpose()?;
    let report = AnalyzeReport {
        class: ClassInfo::of(&class),
        mixing,
        r,
        vc,
        theorem1,
    };
    if a.json {
        return emit_json(out, &report);
    }
    let m = &report.mixing;
    writeln!(out, "class           {} x {}", report.class.hypotheses, report.class.examples)?;
    writeln!(out, "density         {}", fmt(report.class.density))?;
    writeln!(out, "method          {:?}", m.method)?;
    writeln!(out, "d               {}", fmt(m.d_value))?;
    writeln!(out, "mc              {} ({:?})", fmt(m.mixing_complexity), m.mc_kind)?;
    writeln!(out, "is_mixing       {} (C = {})", m.is_mixing, fmt(m.mixing_constant))?;
    if let Some(w) = &m.witness {
        writeln!(out, "witness         T={:?} S={:?}", w.hyp_subset, w.ex_subset)?;
    }
    writeln!(out, "r               {r}")?;
    write_vc_text(out, &report.vc)?;
    if let Some(t) = &report.theorem1 {
        writeln!(out, "theorem1        a={} s={} d={}", fmt(t.a), fmt(t.s), fmt(t.d))?;
        writeln!(out, "  mixing        {} (d^2 <= {})", t.mixing_condition, fmt(t.mixing_rhs))?;
        writeln!(out, "  density       {} ({} <= {})", t.density_condition, fmt(t.density_lhs), fmt(t.density_rhs))?;
        writeln!(out, "  memory states {} ({} bits)", fmt(t.memory_state_bound), fmt(t.memory_bits))?;
        writeln!(out, "  preconditions {}", t.preconditions_hold)?;
    }
    for w in &m.warnings {
        writeln!(out, "warning: {w}")?;
    }
    Ok(())
}

fn cmd_randomization(a: RandomizationArgs, out: &mut dyn Write) -> Result<()> {
    let class = load(&a.path)?;
    let method = match a.dmin {
        SweepMethod::Auto => None,
        SweepMethod::Exact => Some(Method::exact()),
        SweepMethod::Spectral => Some(Method::spectral()),
    };
    let report = randomization_test(
        &class,
        &RandomizationConfig {
            levels: a.levels,
            trials: a.trials,
            seed: a.seed,
            method,
        },
    )?;
    if a.json {
        return emit_json(out, &report);
    }
    writeln!(out, "method {:?}, mc {:?}, d0 {}", report.method, report.mc_kind, fmt(report.d_original))?;
    writeln!(out, "{:>5} {:>9} {:>9} {:>12} {:>6}", "level", "fraction", "flipped", "mean_mc", "bound")?;
    for l in &report.levels {
        let flipped = l.flipped.iter().sum::<usize>() as f64 / l.flipped.len() as f64;
        writeln!(
            out,
            "{:>5} {:>9} {:>9} {:>12} {:>6}",
            l.level,
            fmt(l.fraction),
            fmt(flipped),
            fmt(l.mean_mc),
            if l.flip_bound_holds { "ok" } else { "FAIL" }
        )?;
    }
    Ok(())
}

fn cmd_simulate(a: SimulateArgs, out: &mut dyn Write) -> Result<()> {
    let class = load(&a.path)?;
    let learner: Box<dyn FiniteStateLearner> = match (a.learner, &a.table) {
        (LearnerKind::Threshold, None) => Box::new(ThresholdIntervalLearner::for_class(&class)?),
        (LearnerKind::VersionSpace, None) => Box::new(VersionSpaceLearner::new(&class)?),
        (LearnerKind::Table, Some(p)) => Box::new(read_table_learner_path(p)?),
        (LearnerKind::Table, None) => return Err(Error::input("--learner table needs --table FILE")),
        (_, Some(_)) => return Err(Error::input("--table only applies to --learner table")),
    };
    let config = SimulationConfig {
        epsilon: a.epsilon,
        delta: a.delta,
        max_examples: a.max_examples,
        trials: a.trials,
        seed: a.seed,
        sampling: match a.sampling {
            SamplingArg::Iid => Sampling::Iid,
            SamplingArg::Epochs => Sampling::Epochs,
        },
        max_targets: a.max_targets,
        ..SimulationConfig::default()
    };
    let outcome = if a.all_targets {
        sample_complexity(learner.as_ref(), &class, &config)?
    } else {
        let target = a
            .target
            .unwrap_or_else(|| (rng::derive_seed(a.seed, u64::MAX - 1) % class.num_hypotheses() as u64) as usize);
        run_targets(learner.as_ref(), &class, &[target], &config)?
    };
    if let Some(p) = &a.csv {
        outcome.write_csv(std::io::BufWriter::new(std::fs::File::create(p)?))?;
    }
    if a.json {
        return emit_json(out, &outcome);
    }
    writeln!(out, "learner states  {} ({} bits)", outcome.learner_states, outcome.learner_bits)?;
    writeln!(out, "{:>8} {:>9} {:>7} {:>7}", "target", "successes", "trials", "m_hat")?;
    for t in &outcome.per_target {
        let m = t.m_hat.map_or("-".to_string(), |m| m.to_string());
        writeln!(out, "{:>8} {:>9} {:>7} {:>7}", t.target, t.successes, t.trials, m)?;
    }
    writeln!(out, "success rate    {}", fmt(outcome.success_probability))?;
    let m = outcome.m_hat.map_or("none within budget".to_string(), |m| m.to_string());
    writeln!(out, "m_hat           {m}")?;
    Ok(())
}

fn parse_cell(s: &str) -> Result<Cell> {
    let bad = || Error::input(format!("expected a cell as `hyp:example`, got `{s}`"));
    let (h, x) = s.split_once(':').ok_or_else(bad)?;
    Ok((h.trim().parse().map_err(|_| bad())?, x.trim().parse().map_err(|_| bad())?))
}

#[derive(Serialize)]
struct PerturbReport {
    output: String,
    cells: Vec<Cell>,
    comparison: Option<FlipReport>,
}

fn cmd_perturb(a: PerturbArgs, out: &mut dyn Write) -> Result<()> {
    let class = load(&a.path)?;
    let cells = match a.flips {
        Some(n) => random_cells(&class, n, a.seed)?,
        None => a.cells.iter().map(|s| parse_cell(s)).collect::<Result<Vec<_>>>()?,
    };
    let after = flip_cells(&class, &cells)?;
    let comparison = match a.dmin {
        Some(kind) => {
            let method = method_for(kind, a.seed);
            let before = compute(&class, &method, Baseline::Half)?.d_value;
            let d_after = compute(&after, &method, Baseline::Half)?.d_value;
            Some(FlipReport::new(cells.len(), before, d_after))
        }
        None => None,
    };
    write_class_path(&after, &a.output)?;
    let report = PerturbReport {
        output: a.output.display().to_string(),
        cells,
        comparison,
    };
    if a.json {
        return emit_json(out, &report);
    }
    writeln!(out, "flipped {} cells, wrote {}", report.cells.len(), report.output)?;
    if let Some(c) = &report.comparison {
        writeln!(
            out,
            "d {} -> {} (bound {}, {})",
            fmt(c.d_before),
            fmt(c.d_after),
            fmt(c.bound),
            if c.holds { "holds" } else { "VIOLATED" }
        )?;
    }
    Ok(())
}

fn cmd_vc(a: VcArgs, out: &mut dyn Write) -> Result<()> {
    let class = load(&a.path)?;
    let d = match (a.method, a.d) {
        (VcMethod::Greedy, None) => compute(&class, &Method::spectral(), Baseline::Half)?.d_value,
        (_, d) => d.unwrap_or(0.0),
    };
    let report = vc_report(&class, a.method, a.epsilon, d)?;
    if a.json {
        return emit_json(out, &report);
    }
    write_vc_text(out, &report)
}

#[derive(Serialize)]
struct PartitionReport {
    #[serde(flatten)]
    partition: SufficientPartition,
    bound: Option<crate::partition::PartitionBoundReport>,
}

fn cmd_partition(a: PartitionArgs, out: &mut dyn Write) -> Result<()> {
    let class = load(&a.path)?;
    let (partition, bound) = if a.check_bound {
        let b = check_partition_mc_bound(&class, &Default::default())?;
        (b.partition.clone(), Some(b))
    } else {
        (coarsest_partition(&class), None)
    };
    if a.json {
        return emit_json(out, &PartitionReport { partition, bound });
    }
    writeln!(out, "r = {}", partition.r)?;
    for (i, p) in partition.parts.iter().enumerate() {
        writeln!(out, "part {i}: {p:?}")?;
    }
    if let Some(b) = bound {
        writeln!(
            out,
            "mc {} <= {}: {}",
            fmt(b.mc),
            fmt(b.bound),
            if b.holds { "holds" } else { "VIOLATED" }
        )?;
    }
    Ok(())
}
