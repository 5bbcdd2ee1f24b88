//! `ramsey-arena` — play, sweep, solve, bound, and verify online Ramsey games.
//!
//! Exit codes follow one convention across subcommands: `0` means the command
//! succeeded (for `play`, the builder won; for `verify`, the trace is clean),
//! `1` means the game or check failed honestly (budget ran out, trace is
//! dirty), and `2` means the invocation itself was unusable.

use clap::{Args, Parser, Subcommand};
use ramsey_arena::builders::builder_from_token;
use ramsey_arena::engine::{default_budget, play, verify_trace, GameTrace, Outcome};
use ramsey_arena::graph::{
    beck_beta, lower_bound_online, strategy_round_bound, Color, ColoredGraph, InducedMode,
    TargetSpec,
};
use ramsey_arena::painters::painter_from_token;
use ramsey_arena::solver::{GameValue, Solver};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ramsey-arena",
    version,
    about = "Online Ramsey game arena: builder strategies, painters, bounds, and an exact solver"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Play one game and report rounds, outcome, and bound comparison.
    Play(PlayArgs),
    /// Play a parameter range and emit one CSV row per game.
    Sweep(SweepArgs),
    /// Query the exact small-board solver.
    Solve(SolveArgs),
    /// Print lower and upper bounds for a target.
    Bounds(BoundsArgs),
    /// Re-verify a trace file produced by `play --trace`.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ModeArgs {
    /// Require the winning copy to be induced in the strict sense (no extra
    /// edge of any color inside the copy).
    #[arg(long, conflicts_with = "induced_own_color")]
    induced: bool,
    /// Require the winning copy to be induced only against its own color.
    #[arg(long)]
    induced_own_color: bool,
}

impl ModeArgs {
    fn mode(&self) -> InducedMode {
        if self.induced {
            InducedMode::Strict
        } else if self.induced_own_color {
            InducedMode::OwnColor
        } else {
            InducedMode::Off
        }
    }
}

#[derive(Args)]
struct PlayArgs {
    /// Target token, e.g. `path:5`, `cycle:9`, `spider:3,2`, `centipede:2,3`,
    /// `explicit:0-1,1-2`.
    #[arg(long)]
    target: String,
    /// Builder token: `path`, `cycle`, `cycle-noninduced`, `spider`,
    /// `spider-noninduced`, `centipede`, or `exact`.
    #[arg(long)]
    builder: String,
    /// Painter token: `lemma5`, `random:<seed>[,<red bias>]`,
    /// `minimax:<horizon>,<max vertices>`, `script:<RB...>`, `stdin`.
    #[arg(long)]
    painter: String,
    #[command(flatten)]
    mode: ModeArgs,
    /// Round budget; defaults to a slack multiple of the strategy bound.
    #[arg(long)]
    budget: Option<u32>,
    /// Write the full game trace as JSON to this file.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Target family: `path`, `cycle`, `spider`, or `centipede`.
    #[arg(long)]
    family: String,
    /// Size range for paths (edges) and cycles (vertices), e.g. `2..16` or `8`.
    #[arg(long)]
    n: Option<String>,
    /// Leg count (spider) or thorn count (centipede) range.
    #[arg(long)]
    k: Option<String>,
    /// Leg length (spider) or spine length (centipede) range.
    #[arg(long)]
    l: Option<String>,
    /// Comma-separated painter tokens; one game is played per (target, painter).
    #[arg(long)]
    painters: String,
    /// Builder token; defaults to the family's induced-copy builder.
    #[arg(long)]
    builder: Option<String>,
    #[command(flatten)]
    mode: ModeArgs,
    /// Also report rounds / (beta/4) per game for tree targets.
    #[arg(long)]
    gap: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    target: String,
    #[command(flatten)]
    mode: ModeArgs,
    /// Largest board the solver may examine.
    #[arg(long, default_value_t = 6)]
    max_vertices: usize,
    /// Round horizon for the search.
    #[arg(long, default_value_t = 6)]
    max_rounds: u32,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    target: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Trace file written by `play --trace`.
    #[arg(long)]
    trace: PathBuf,
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Play(a) => cmd_play(&a),
        Cmd::Sweep(a) => cmd_sweep(&a),
        Cmd::Solve(a) => cmd_solve(&a),
        Cmd::Bounds(a) => cmd_bounds(&a),
        Cmd::Verify(a) => cmd_verify(&a),
    };
    ExitCode::from(code)
}

/// `RAMSEY_ARENA_THREADS` caps sweep parallelism; unset means rayon's default.
fn init_threads() {
    if let Some(t) = std::env::var("RAMSEY_ARENA_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t >= 1)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}

fn usage_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn induced_str(mode: InducedMode) -> &'static str {
    match mode {
        InducedMode::Off => "false",
        InducedMode::OwnColor => "own-color",
        InducedMode::Strict => "true",
    }
}

fn outcome_str(o: &Outcome) -> &'static str {
    match o {
        Outcome::BuilderWin { .. } => "builder-win",
        Outcome::BudgetExhausted { .. } => "budget-exhausted",
        Outcome::BuilderResigned { .. } => "builder-resigned",
    }
}

/// The round-bound formula that matches a builder token, when one exists.
fn builder_bound(builder: &str, spec: &TargetSpec) -> Option<i64> {
    match builder {
        "cycle-noninduced" | "spider-noninduced" => strategy_round_bound(spec, false),
        "exact" => None,
        _ => strategy_round_bound(spec, true),
    }
}

fn lower_bound(spec: &TargetSpec) -> Option<u64> {
    let h = spec.expand().ok()?;
    lower_bound_online(&h).ok()
}

fn opt_i64(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |b| b.to_string())
}

fn opt_u64(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |b| b.to_string())
}

fn cmd_play(args: &PlayArgs) -> u8 {
    let spec: TargetSpec = match args.target.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let mode = args.mode.mode();
    let budget = match args.budget {
        Some(b) => b,
        None => match default_budget(&spec, mode) {
            Ok(b) => b,
            Err(e) => return usage_error(e),
        },
    };
    let mut builder = match builder_from_token(&args.builder, &spec, mode) {
        Ok(b) => b,
        Err(e) => return usage_error(e),
    };
    let mut painter = match painter_from_token(&args.painter, &spec, mode) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let trace = match play(&spec, mode, budget, builder.as_mut(), painter.as_mut()) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };

    let bound = builder_bound(&args.builder, &spec);
    let lower = lower_bound(&spec);
    let rounds = trace.len();
    println!(
        "target={spec} builder={} painter={} induced={} budget={budget}",
        args.builder,
        args.painter,
        induced_str(mode)
    );
    println!("rounds={rounds} outcome={}", outcome_str(&trace.outcome));
    let within = match bound {
        Some(b) if trace.outcome.is_win() => {
            if (rounds as i64) <= b {
                "yes"
            } else {
                "no"
            }
        }
        _ => "-",
    };
    println!(
        "bound={} lower={} within-bound={within}",
        opt_i64(bound),
        opt_u64(lower)
    );

    if let Some(path) = &args.trace {
        if let Err(e) = std::fs::write(path, trace.to_json()) {
            return usage_error(format!("cannot write trace {}: {e}", path.display()));
        }
    }
    u8::from(!trace.outcome.is_win())
}

/// One finished sweep game, ready to print.
struct Row {
    target: String,
    builder: String,
    painter: String,
    seed: String,
    induced: &'static str,
    rounds: usize,
    bound: Option<i64>,
    lower: Option<u64>,
    outcome: &'static str,
    win: bool,
    /// `rounds / (beta/4)` for tree targets when `--gap` is on.
    gap: Option<f64>,
}

fn parse_range(label: &str, s: Option<&String>) -> Result<(usize, usize), String> {
    let Some(s) = s else {
        return Err(format!("this family needs --{label}"));
    };
    let parse_one = |p: &str| {
        p.trim()
            .parse::<usize>()
            .map_err(|_| format!("--{label}: `{s}` is not a number or `lo..hi` range"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let lo = parse_one(a)?;
        let hi = parse_one(b)?;
        if hi < lo {
            return Err(format!("--{label}: range `{s}` is empty"));
        }
        Ok((lo, hi))
    } else {
        let v = parse_one(s)?;
        Ok((v, v))
    }
}

/// Painter column and seed column for one token: `random:<seed>` splits into
/// the two, everything else keeps its token and an empty seed.
fn painter_columns(token: &str) -> (String, String) {
    if let Some(rest) = token.strip_prefix("random:") {
        let seed = rest.split(',').next().unwrap_or("").trim().to_string();
        ("random".to_string(), seed)
    } else {
        (token.to_string(), String::new())
    }
}

fn cmd_sweep(args: &SweepArgs) -> u8 {
    let mode = args.mode.mode();
    let painters: Vec<String> = args
        .painters
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    if painters.is_empty() {
        return usage_error("--painters needs at least one painter token");
    }

    let targets: Vec<TargetSpec> = match args.family.as_str() {
        "path" => match parse_range("n", args.n.as_ref()) {
            Ok((lo, hi)) => (lo..=hi).map(|n| TargetSpec::Path { edges: n }).collect(),
            Err(e) => return usage_error(e),
        },
        "cycle" => match parse_range("n", args.n.as_ref()) {
            Ok((lo, hi)) => (lo..=hi).map(|n| TargetSpec::Cycle { vertices: n }).collect(),
            Err(e) => return usage_error(e),
        },
        "spider" => {
            let (klo, khi) = match parse_range("k", args.k.as_ref()) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let (llo, lhi) = match parse_range("l", args.l.as_ref()) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            (klo..=khi)
                .flat_map(|k| {
                    (llo..=lhi).map(move |l| TargetSpec::Spider {
                        legs: k,
                        leg_len: l,
                    })
                })
                .collect()
        }
        "centipede" => {
            let (klo, khi) = match parse_range("k", args.k.as_ref()) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let (llo, lhi) = match parse_range("l", args.l.as_ref()) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            (klo..=khi)
                .flat_map(|k| {
                    (llo..=lhi).map(move |l| TargetSpec::Centipede {
                        thorns: k,
                        spine_len: l,
                    })
                })
                .collect()
        }
        other => return usage_error(format!("unknown family `{other}`")),
    };

    let builder_token = args
        .builder
        .clone()
        .unwrap_or_else(|| args.family.clone());

    // Validate every target against the builder and painters up front so a
    // typo fails with a usage error instead of surfacing mid-sweep.
    for spec in &targets {
        if let Err(e) = spec.expand() {
            return usage_error(e);
        }
        if let Err(e) = builder_from_token(&builder_token, spec, mode) {
            return usage_error(e);
        }
        for p in &painters {
            if let Err(e) = painter_from_token(p, spec, mode) {
                return usage_error(e);
            }
        }
    }

    // Jobs in canonical order: target parameters ascending, then the painter
    // list as given. Parallel collect preserves this order.
    let jobs: Vec<(TargetSpec, String)> = targets
        .iter()
        .flat_map(|t| painters.iter().map(move |p| (t.clone(), p.clone())))
        .collect();

    let rows: Vec<Result<Row, String>> = jobs
        .par_iter()
        .map(|(spec, painter_token)| run_sweep_game(spec, &builder_token, painter_token, mode, args.gap))
        .collect();

    let mut out = String::new();
    out.push_str("target,builder,painter,seed,induced,rounds,bound,lower,outcome\n");
    let mut all_won = true;
    let mut worst_ratio: Option<f64> = None;
    let mut gap_lines = String::new();
    for row in rows {
        let row = match row {
            Ok(r) => r,
            Err(e) => return usage_error(e),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.target,
            row.builder,
            row.painter,
            row.seed,
            row.induced,
            row.rounds,
            opt_i64(row.bound),
            opt_u64(row.lower),
            row.outcome
        );
        all_won &= row.win;
        if let Some(b) = row.bound.filter(|&b| b > 0) {
            if row.win {
                let r = row.rounds as f64 / b as f64;
                worst_ratio = Some(worst_ratio.map_or(r, |w: f64| w.max(r)));
            }
        }
        if let Some(g) = row.gap {
            let _ = writeln!(
                gap_lines,
                "# gap target={} painter={} ratio={g:.6}",
                row.target, row.painter
            );
        }
    }
    out.push_str(&gap_lines);
    match worst_ratio {
        Some(w) => {
            let _ = writeln!(out, "# max-rounds/bound={w:.6}");
        }
        None => out.push_str("# max-rounds/bound=-\n"),
    }

    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out) {
                return usage_error(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{out}"),
    }
    u8::from(!all_won)
}

fn run_sweep_game(
    spec: &TargetSpec,
    builder_token: &str,
    painter_token: &str,
    mode: InducedMode,
    want_gap: bool,
) -> Result<Row, String> {
    let mut builder = builder_from_token(builder_token, spec, mode).map_err(|e| e.to_string())?;
    let mut painter = painter_from_token(painter_token, spec, mode).map_err(|e| e.to_string())?;
    let budget = default_budget(spec, mode).map_err(|e| e.to_string())?;
    let trace = play(spec, mode, budget, builder.as_mut(), painter.as_mut())
        .map_err(|e| e.to_string())?;

    let (painter_name, seed) = painter_columns(painter_token);
    let rounds = trace.len();
    let gap = if want_gap {
        spec.expand()
            .ok()
            .and_then(|h| beck_beta(&h).ok())
            .map(|beta| rounds as f64 / (beta as f64 / 4.0))
    } else {
        None
    };
    Ok(Row {
        target: spec.to_string(),
        builder: builder_token.to_string(),
        painter: painter_name,
        seed,
        induced: induced_str(mode),
        rounds,
        bound: builder_bound(builder_token, spec),
        lower: lower_bound(spec),
        outcome: outcome_str(&trace.outcome),
        win: trace.outcome.is_win(),
        gap,
    })
}

fn cmd_solve(args: &SolveArgs) -> u8 {
    let spec: TargetSpec = match args.target.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let mode = args.mode.mode();
    let mut solver = match Solver::new(&spec, mode, args.max_vertices) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    println!(
        "target={spec} induced={} max-vertices={} max-rounds={}",
        induced_str(mode),
        args.max_vertices,
        args.max_rounds
    );
    match solver.solve(args.max_rounds) {
        GameValue::Unknown => {
            println!("value=unknown");
        }
        GameValue::Win(total) => {
            println!("value={total}");
            // Principal variation: best builder move, then the painter's most
            // stubborn color, until the copy is on the board.
            let mut g = ColoredGraph::new();
            let mut left = total;
            let mut pv = String::new();
            while left > 0 && solver.value(&g, left) != GameValue::Win(0) {
                let Some(((u, v), _)) = solver.best_move(&g, left) else {
                    break;
                };
                let c = solver.painter_reply(&g, (u, v), left);
                let letter = match c {
                    Color::Red => 'R',
                    Color::Blue => 'B',
                };
                let _ = write!(pv, " {u}-{v}:{letter}");
                let _ = g.add_edge(u, v, c);
                left -= 1;
            }
            println!("pv:{pv}");
        }
    }
    0
}

fn cmd_bounds(args: &BoundsArgs) -> u8 {
    let spec: TargetSpec = match args.target.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let h = match spec.expand() {
        Ok(h) => h,
        Err(e) => return usage_error(e),
    };
    println!("target={spec}");
    println!("lower={}", opt_u64(lower_bound_online(&h).ok()));
    println!("upper-induced={}", opt_i64(strategy_round_bound(&spec, true)));
    println!(
        "upper-subgraph={}",
        opt_i64(strategy_round_bound(&spec, false))
    );
    if let Ok(beta) = beck_beta(&h) {
        println!("beta={beta}");
        println!("beta/4={}", beta as f64 / 4.0);
    }
    0
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let text = match std::fs::read_to_string(&args.trace) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("cannot read {}: {e}", args.trace.display())),
    };
    let trace = match GameTrace::from_json(&text) {
        Ok(t) => t,
        Err(e) => return usage_error(format!("not a trace file: {e}")),
    };
    println!(
        "target={} induced={} rounds={} outcome={}",
        trace.target,
        induced_str(trace.induced),
        trace.len(),
        outcome_str(&trace.outcome)
    );
    let report = verify_trace(&trace);
    println!("{report}");
    u8::from(!report.is_clean())
}
