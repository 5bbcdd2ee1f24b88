//! Painter strategies: the adversaries builder strategies are tested against.

use std::io::{BufRead, StderrLock, StdinLock, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::engine::{GameView, PainterStrategy};
use crate::graph::{Color, InducedMode, TargetError, TargetGraph, TargetSpec, Vertex};
use crate::solver::{SolveError, Solver};

/// Colors an edge blue only while both endpoints can afford it, keeping the
/// blue graph's maximum degree below the target's. Known in the registry as
/// `lemma5`.
///
/// With threshold `d`, an edge is blue iff both endpoints currently touch
/// fewer than `d` blue edges; otherwise red. Against a target with maximum
/// degree `d + 1` the blue graph then never contains a copy, so the builder
/// must win in red, and every red edge certifies `d` blue edges at one of its
/// endpoints. That pay-for-every-red-edge accounting is what the
/// [`lower_bound_online`](crate::graph::lower_bound_online) formula counts.
pub struct DegreeThresholdPainter {
    threshold: usize,
}

impl DegreeThresholdPainter {
    pub fn new(threshold: usize) -> Self {
        DegreeThresholdPainter { threshold }
    }

    /// Threshold one below the target's maximum degree, the largest value
    /// that still shuts blue copies out entirely.
    pub fn for_target(h: &TargetGraph) -> Self {
        Self::new(h.max_degree().saturating_sub(1))
    }
}

impl PainterStrategy for DegreeThresholdPainter {
    fn color(&mut self, view: &GameView, (u, v): (Vertex, Vertex)) -> Option<Color> {
        let cheap = |w| view.graph.mono_degree(w, Color::Blue) < self.threshold;
        Some(if cheap(u) && cheap(v) {
            Color::Blue
        } else {
            Color::Red
        })
    }
}

/// Colors edges by independent biased coin flips from a seeded generator.
pub struct RandomPainter {
    rng: ChaCha8Rng,
    red_bias: f64,
}

impl RandomPainter {
    pub fn new(seed: u64) -> Self {
        Self::with_bias(seed, 0.5)
    }

    /// `red_bias` is the probability of red; `1.0` paints everything red.
    pub fn with_bias(seed: u64, red_bias: f64) -> Self {
        RandomPainter {
            rng: ChaCha8Rng::seed_from_u64(seed),
            red_bias,
        }
    }
}

impl PainterStrategy for RandomPainter {
    fn color(&mut self, _view: &GameView, _edge: (Vertex, Vertex)) -> Option<Color> {
        Some(if self.rng.gen_bool(self.red_bias.clamp(0.0, 1.0)) {
            Color::Red
        } else {
            Color::Blue
        })
    }
}

/// Plays a fixed color sequence, then stops answering. Handy for replaying
/// known games and for exercising the engine's input-closed path.
pub struct ScriptedPainter {
    script: Vec<Color>,
    at: usize,
}

impl ScriptedPainter {
    pub fn new(script: Vec<Color>) -> Self {
        ScriptedPainter { script, at: 0 }
    }

    /// Parses a string of `R`/`B` letters (case-insensitive).
    pub fn from_codes(codes: &str) -> Option<Self> {
        codes
            .chars()
            .map(Color::from_code)
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }
}

impl PainterStrategy for ScriptedPainter {
    fn color(&mut self, _view: &GameView, _edge: (Vertex, Vertex)) -> Option<Color> {
        let c = self.script.get(self.at).copied();
        self.at += 1;
        c
    }
}

/// Asks a human (or any line-oriented stream) for each color.
///
/// Prompts go to the writer, answers come from the reader one line at a time:
/// `r`/`red` or `b`/`blue`, case-insensitive. Unrecognized lines are
/// re-prompted; end of input ends the game.
pub struct StdinPainter<R, W> {
    input: R,
    prompt: W,
}

impl StdinPainter<StdinLock<'static>, StderrLock<'static>> {
    /// Interactive painter on the process's real stdin/stderr. Prompts go to
    /// stderr so stdout stays clean for traces and CSV.
    pub fn from_stdin() -> Self {
        StdinPainter {
            input: std::io::stdin().lock(),
            prompt: std::io::stderr().lock(),
        }
    }
}

impl<R: BufRead, W: Write> StdinPainter<R, W> {
    pub fn new(input: R, prompt: W) -> Self {
        StdinPainter { input, prompt }
    }
}

impl<R: BufRead, W: Write> PainterStrategy for StdinPainter<R, W> {
    fn color(&mut self, view: &GameView, (u, v): (Vertex, Vertex)) -> Option<Color> {
        loop {
            let _ = write!(
                self.prompt,
                "round {}: color edge {u}-{v}? [r/b] ",
                view.round
            );
            let _ = self.prompt.flush();
            let mut line = String::new();
            if self.input.read_line(&mut line).ok()? == 0 {
                return None; // end of input
            }
            match line.trim().to_ascii_lowercase().as_str() {
                "r" | "red" => return Some(Color::Red),
                "b" | "blue" => return Some(Color::Blue),
                "" => continue,
                other => {
                    let _ = writeln!(self.prompt, "unrecognized color {other:?}");
                }
            }
        }
    }
}

/// Replies with the exact worst color for the builder, via the game-tree
/// solver. Only viable for tiny targets and boards; beyond its caps the
/// solver sees every line as unknown and the painter falls back to red.
pub struct MinimaxPainter {
    solver: Solver,
    horizon: u32,
}

impl MinimaxPainter {
    /// `horizon` is how many rounds ahead each reply looks; `max_vertices`
    /// caps the boards the solver will examine.
    pub fn new(
        target: &TargetSpec,
        mode: InducedMode,
        horizon: u32,
        max_vertices: usize,
    ) -> Result<Self, SolveError> {
        Ok(MinimaxPainter {
            solver: Solver::new(target, mode, max_vertices)?,
            horizon,
        })
    }
}

impl PainterStrategy for MinimaxPainter {
    fn color(&mut self, view: &GameView, edge: (Vertex, Vertex)) -> Option<Color> {
        Some(self.solver.painter_reply(view.graph, edge, self.horizon))
    }
}

/// Ways a painter token can fail to produce a painter.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PainterTokenError {
    #[error("unknown painter `{0}`")]
    Unknown(String),
    #[error("painter `{token}`: {detail}")]
    BadArgument { token: String, detail: String },
    #[error(transparent)]
    Target(#[from] TargetError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Builds a painter from its registry token.
///
/// Recognized tokens: `lemma5`, `random:<seed>` or `random:<seed>,<red
/// bias>`, `minimax:<horizon>,<max vertices>`, `script:<RBRB...>`, `stdin`.
/// The target and induced mode are needed because some painters tune
/// themselves to the game being played.
pub fn painter_from_token(
    token: &str,
    target: &TargetSpec,
    mode: InducedMode,
) -> Result<Box<dyn PainterStrategy>, PainterTokenError> {
    let bad = |detail: &str| PainterTokenError::BadArgument {
        token: token.to_string(),
        detail: detail.to_string(),
    };
    let (name, args) = match token.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (token, None),
    };
    match (name, args) {
        ("lemma5", None) => {
            let h = target.expand()?;
            Ok(Box::new(DegreeThresholdPainter::for_target(&h)))
        }
        ("random", Some(a)) => {
            let (seed_s, bias_s) = match a.split_once(',') {
                Some((s, b)) => (s, Some(b)),
                None => (a, None),
            };
            let seed: u64 = seed_s
                .trim()
                .parse()
                .map_err(|_| bad("seed must be an unsigned integer"))?;
            let bias: f64 = match bias_s {
                Some(b) => {
                    let b: f64 = b
                        .trim()
                        .parse()
                        .map_err(|_| bad("bias must be a number in 0..=1"))?;
                    if !(0.0..=1.0).contains(&b) {
                        return Err(bad("bias must be a number in 0..=1"));
                    }
                    b
                }
                None => 0.5,
            };
            Ok(Box::new(RandomPainter::with_bias(seed, bias)))
        }
        ("minimax", Some(a)) => {
            let (r, v) = a
                .split_once(',')
                .ok_or_else(|| bad("expected `minimax:<horizon>,<max vertices>`"))?;
            let horizon: u32 = r
                .trim()
                .parse()
                .map_err(|_| bad("horizon must be an unsigned integer"))?;
            let vertices: usize = v
                .trim()
                .parse()
                .map_err(|_| bad("max vertices must be an unsigned integer"))?;
            Ok(Box::new(MinimaxPainter::new(target, mode, horizon, vertices)?))
        }
        ("script", Some(a)) => ScriptedPainter::from_codes(a.trim())
            .map(|p| Box::new(p) as Box<dyn PainterStrategy>)
            .ok_or_else(|| bad("script must be a string of R and B letters")),
        ("stdin", None) => Ok(Box::new(StdinPainter::from_stdin())),
        _ => Err(PainterTokenError::Unknown(token.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{play, BuilderAction, BuilderStrategy};
    use crate::graph::ColoredGraph;

    use Color::{Blue, Red};

    fn ask(p: &mut impl PainterStrategy, g: &ColoredGraph, edge: (Vertex, Vertex)) -> Option<Color> {
        p.color(
            &GameView {
                graph: g,
                round: g.edge_count() as u32 + 1,
            },
            edge,
        )
    }

    #[test]
    fn degree_threshold_pays_blue_until_the_cap() {
        // Threshold 2 (target maximum degree 3, e.g. a three-legged spider).
        let mut p = DegreeThresholdPainter::new(2);
        let mut g = ColoredGraph::new();
        // Star at 0: first two edges blue, third red.
        for (edge, want) in [((0, 1), Blue), ((0, 2), Blue), ((0, 3), Red)] {
            let c = ask(&mut p, &g, edge).unwrap();
            assert_eq!(c, want, "edge {edge:?}");
            g.add_edge(edge.0, edge.1, c).unwrap();
        }
        // A far-away edge is still cheap.
        assert_eq!(ask(&mut p, &g, (4, 5)), Some(Blue));
        // An edge whose one endpoint is saturated is red even if the other
        // end is fresh.
        assert_eq!(ask(&mut p, &g, (0, 4)), Some(Red));
    }

    #[test]
    fn degree_threshold_from_target_shuts_out_blue_copies() {
        let spec = TargetSpec::Spider {
            legs: 3,
            leg_len: 2,
        };
        let h = spec.expand().unwrap();
        assert_eq!(h.max_degree(), 3);
        let mut p = DegreeThresholdPainter::for_target(&h);
        let mut g = ColoredGraph::new();
        // Greedily build a big blue blob; the painter must keep every blue
        // degree below 3.
        for u in 0..6 {
            for v in u + 1..8 {
                if g.check_edge(u, v).is_ok() {
                    let c = ask(&mut p, &g, (u, v)).unwrap();
                    g.add_edge(u, v, c).unwrap();
                }
            }
        }
        for v in 0..g.vertex_count() {
            assert!(g.mono_degree(v, Blue) < 3, "vertex {v}");
        }
    }

    #[test]
    fn zero_threshold_paints_everything_red() {
        let mut p = DegreeThresholdPainter::new(0);
        let g = ColoredGraph::new();
        assert_eq!(ask(&mut p, &g, (0, 1)), Some(Red));
    }

    #[test]
    fn random_painter_is_seed_deterministic() {
        let g = ColoredGraph::new();
        let seq = |seed| {
            let mut p = RandomPainter::new(seed);
            (0..32)
                .map(|_| ask(&mut p, &g, (0, 1)).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(seq(7), seq(7));
        assert_ne!(seq(7), seq(8));
        let of_bias = |bias| {
            let mut p = RandomPainter::with_bias(3, bias);
            (0..32).map(|_| ask(&mut p, &g, (0, 1)).unwrap()).collect::<Vec<_>>()
        };
        assert!(of_bias(1.0).iter().all(|&c| c == Red));
        assert!(of_bias(0.0).iter().all(|&c| c == Blue));
    }

    #[test]
    fn scripted_painter_runs_out() {
        let mut p = ScriptedPainter::from_codes("rB").unwrap();
        let g = ColoredGraph::new();
        assert_eq!(ask(&mut p, &g, (0, 1)), Some(Red));
        assert_eq!(ask(&mut p, &g, (0, 1)), Some(Blue));
        assert_eq!(ask(&mut p, &g, (0, 1)), None);
        assert!(ScriptedPainter::from_codes("rx").is_none());
    }

    #[test]
    fn stdin_painter_reads_prompts_and_reprompts() {
        let input = std::io::Cursor::new(b"r\nBlue\nnope\nred\n".to_vec());
        let mut prompts = Vec::new();
        let mut answers = Vec::new();
        {
            let mut p = StdinPainter::new(input, &mut prompts);
            let g = ColoredGraph::new();
            answers.push(ask(&mut p, &g, (0, 1)));
            answers.push(ask(&mut p, &g, (1, 2)));
            answers.push(ask(&mut p, &g, (2, 3))); // eats "nope", then "red"
            answers.push(ask(&mut p, &g, (3, 4))); // end of input
        }
        assert_eq!(answers, vec![Some(Red), Some(Blue), Some(Red), None]);
        let text = String::from_utf8(prompts).unwrap();
        assert!(text.contains("color edge 0-1? [r/b]"), "{text}");
        assert!(text.contains("unrecognized color \"nope\""), "{text}");
    }

    /// Builder that stars every edge at vertex 0.
    struct StarBuilder;

    impl BuilderStrategy for StarBuilder {
        fn next_move(&mut self, view: &GameView) -> BuilderAction {
            let n = view.graph.vertex_count().max(1);
            BuilderAction::draw(0, n)
        }
    }

    #[test]
    fn minimax_painter_survives_as_long_as_possible() {
        // Against the two-edge path the best any painter can do is lose on
        // round three.
        let spec = TargetSpec::Path { edges: 2 };
        let mut b = StarBuilder;
        let mut p = MinimaxPainter::new(&spec, InducedMode::Off, 6, 8).unwrap();
        let t = play(&spec, InducedMode::Off, 10, &mut b, &mut p).unwrap();
        assert_eq!(t.outcome.rounds_used(), Some(3));
    }

    #[test]
    fn tokens_build_the_right_painters() {
        let spec = TargetSpec::Path { edges: 2 };
        let mode = InducedMode::Off;
        for ok in [
            "lemma5",
            "random:42",
            "random:42,0.75",
            "minimax:4,6",
            "script:RBRB",
        ] {
            assert!(painter_from_token(ok, &spec, mode).is_ok(), "{ok}");
        }
        for bad in [
            "nope",
            "random:abc",
            "random:1,2.5",
            "minimax:4",
            "script:xyz",
            "lemma5:3",
        ] {
            assert!(painter_from_token(bad, &spec, mode).is_err(), "{bad}");
        }
        // The scripted painter built from a token plays its script.
        let mut p = painter_from_token("script:BR", &spec, mode).unwrap();
        let g = ColoredGraph::new();
        let view = GameView {
            graph: &g,
            round: 1,
        };
        assert_eq!(p.color(&view, (0, 1)), Some(Blue));
        assert_eq!(p.color(&view, (0, 1)), Some(Red));
        assert_eq!(p.color(&view, (0, 1)), None);
    }
}
