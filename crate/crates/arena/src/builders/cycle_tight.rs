//! Builder strategies for cycle targets when copies need not be induced.
//!
//! The even core mirrors [`super::cycle`] but packs the host much tighter:
//! a monochromatic path of `ceil(17n/2)` edges carved into six rows (three
//! pairs) plus a tail, with no gaps. Probing is adaptive: each step offers a
//! primary edge and only falls back to a retry edge `n - 2` further along
//! the row when the primary comes back in the host color. Two host-colored
//! answers in one step close a host-colored `C_n` through the prober; a
//! concession extends the step's off-color walk. Each of the three walks
//! runs from a fresh hub to an end of the tail in exactly `n/2` edges, so
//! two of them share a tail end and close the off-color `C_n`.
//!
//! Odd cycles double up as in the induced module: force `C_{2n}`, then draw
//! chords at stride `n - 1`. Here a chord pair may already carry an edge —
//! necessarily off-color, or the game would have ended when it appeared —
//! which counts as progress without spending a round.

use crate::builders::path_machine::{MachineStep, MonoPathProvider, PathMachine, VertexSource};
use crate::engine::{BuilderAction, BuilderStrategy, GameView};
use crate::graph::{Color, ColoredGraph, Vertex};

enum CoreStep {
    Draw { u: Vertex, v: Vertex, note: String },
    Done { cycle: Vec<Vertex> },
}

enum Probing {
    /// Primary probe on the board; concession takes it, host color retries.
    Primary { from: Vertex, t1: Vertex, t2: Vertex },
    Retry { from: Vertex, t1: Vertex, t2: Vertex },
}

struct TightEvenCore {
    m: usize,
    host: Box<dyn MonoPathProvider>,
    path: Vec<Vertex>,
    host_color: Option<Color>,
    /// Six probing rows followed by the tail row.
    rows: Vec<Vec<Vertex>>,
    hub: Option<Vertex>,
    pair: usize,
    step: usize,
    probing: Option<Probing>,
    walk: Vec<Vertex>,
    walks: Vec<Vec<Vertex>>,
    done: Option<Vec<Vertex>>,
}

impl TightEvenCore {
    fn new(m: usize) -> Self {
        debug_assert!(m >= 4 && m % 2 == 0);
        let host_edges = (17 * m).div_ceil(2);
        TightEvenCore {
            m,
            host: Box::new(PathMachine::new(host_edges, VertexSource::Fresh)),
            path: Vec::new(),
            host_color: None,
            rows: Vec::new(),
            hub: None,
            pair: 0,
            step: 0,
            probing: None,
            walk: Vec::new(),
            walks: Vec::new(),
            done: None,
        }
    }

    fn steps_per_pair(&self) -> usize {
        self.m / 2
    }

    fn carve(&mut self) {
        let n = self.m;
        let row_len = (n / 2 - 2) / 2 + n - 1; // vertices
        for t in 0..6 {
            let start = t * row_len;
            self.rows.push(self.path[start..start + row_len].to_vec());
        }
        let start = 6 * row_len;
        self.rows.push(self.path[start..start + n - 1].to_vec());
        debug_assert!(start + n - 1 <= self.path.len());
    }

    /// Row and 1-based primary/retry positions for the current step.
    fn step_targets(&self) -> (usize, usize, usize) {
        let n = self.m;
        if self.step == 0 {
            (2 * self.pair, 1, n - 1)
        } else if self.step < self.steps_per_pair() - 1 {
            let i = self.step;
            let row = 2 * self.pair + if i % 2 == 1 { 1 } else { 0 };
            let j = i / 2;
            (row, j + 1, j + n - 1)
        } else {
            (6, 1, n - 1)
        }
    }

    /// Handles a conceded (off-color) probe target.
    fn concede(&mut self, chosen: Vertex) -> Option<CoreStep> {
        self.walk.push(chosen);
        self.probing = None;
        if self.step == self.steps_per_pair() - 1 {
            for earlier in &self.walks {
                if earlier.last() == Some(&chosen) {
                    let mut cycle = self.walk.clone();
                    cycle.extend(earlier[1..earlier.len() - 1].iter().rev());
                    self.done = Some(cycle);
                    return Some(CoreStep::Done {
                        cycle: self.done.clone().expect("just set"),
                    });
                }
            }
            self.walks.push(std::mem::take(&mut self.walk));
            self.pair += 1;
            self.step = 0;
        } else {
            self.step += 1;
        }
        None
    }

    fn next(&mut self, g: &ColoredGraph) -> CoreStep {
        if let Some(cycle) = &self.done {
            return CoreStep::Done {
                cycle: cycle.clone(),
            };
        }
        if self.host_color.is_none() {
            match self.host.next(g) {
                MachineStep::Draw { u, v, note } => {
                    return CoreStep::Draw {
                        u,
                        v,
                        note: format!("host {note}"),
                    }
                }
                MachineStep::Done { path, color } => {
                    self.path = path;
                    self.host_color = Some(color);
                    self.carve();
                }
            }
        }
        let x = self.host_color.expect("host finished above");
        match self.probing.take() {
            Some(Probing::Primary { from, t1, t2 }) => {
                let c = g.color_of(from, t1).expect("primary was played");
                if c != x {
                    if let Some(done) = self.concede(t1) {
                        return done;
                    }
                } else {
                    self.probing = Some(Probing::Retry { from, t1, t2 });
                    return CoreStep::Draw {
                        u: from,
                        v: t2,
                        note: format!("pair {} step {} retry", self.pair + 1, self.step),
                    };
                }
            }
            Some(Probing::Retry { from, t1, t2 }) => {
                let c = g.color_of(from, t2).expect("retry was played");
                if c == x {
                    // Both probes host-colored: prober plus the row stretch
                    // between the targets is a host-colored C_n.
                    let (row, p1, p2) = self.step_targets();
                    let window = &self.rows[row][p1 - 1..p2];
                    let mut cycle = Vec::with_capacity(self.m);
                    cycle.push(from);
                    cycle.extend_from_slice(window);
                    debug_assert_eq!(cycle[1], t1);
                    self.done = Some(cycle.clone());
                    return CoreStep::Done { cycle };
                }
                if let Some(done) = self.concede(t2) {
                    return done;
                }
            }
            None => {}
        }
        if self.pair >= 3 {
            let n = g.vertex_count();
            return CoreStep::Draw {
                u: n,
                v: n + 1,
                note: "probe-exhausted".to_owned(),
            };
        }
        let (row, p1, p2) = self.step_targets();
        let t1 = self.rows[row][p1 - 1];
        let t2 = self.rows[row][p2 - 1];
        let from = if self.step == 0 {
            let hub = *self.hub.get_or_insert_with(|| g.vertex_count());
            self.walk = vec![hub];
            hub
        } else {
            *self.walk.last().expect("walk starts at the hub")
        };
        self.probing = Some(Probing::Primary { from, t1, t2 });
        CoreStep::Draw {
            u: from,
            v: t1,
            note: format!("pair {} step {} probe", self.pair + 1, self.step),
        }
    }
}

/// Builder for cycles of any size `n >= 3` in the plain (non-induced) game.
pub struct CycleTightBuilder {
    core: TightEvenCore,
    chords: Option<ChordPhase>,
}

struct ChordPhase {
    n: usize,
    next: usize,
}

impl CycleTightBuilder {
    pub fn new(vertices: usize) -> Self {
        let (core_size, chords) = if vertices % 2 == 0 {
            (vertices, None)
        } else {
            (
                2 * vertices,
                Some(ChordPhase {
                    n: vertices,
                    next: 0,
                }),
            )
        };
        CycleTightBuilder {
            core: TightEvenCore::new(core_size),
            chords,
        }
    }
}

impl BuilderStrategy for CycleTightBuilder {
    fn next_move(&mut self, view: &GameView) -> BuilderAction {
        match self.core.next(view.graph) {
            CoreStep::Draw { u, v, note } => BuilderAction::Draw {
                u,
                v,
                note: Some(note),
            },
            CoreStep::Done { cycle } => {
                if let Some(ch) = &mut self.chords {
                    let two_n = cycle.len();
                    while ch.next < ch.n {
                        let j = ch.next;
                        ch.next += 1;
                        let a = cycle[(j * (ch.n - 1)) % two_n];
                        let b = cycle[((j + 1) * (ch.n - 1)) % two_n];
                        if view.graph.has_edge(a, b) {
                            // Pre-existing and necessarily off-color: a free
                            // chord.
                            continue;
                        }
                        return BuilderAction::Draw {
                            u: a,
                            v: b,
                            note: Some(format!("chord {}/{}", j + 1, ch.n)),
                        };
                    }
                }
                let n = view.graph.vertex_count();
                BuilderAction::draw_noted(n, n + 1, "machine-done")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{play, Outcome, PainterStrategy};
    use crate::graph::{strategy_round_bound, InducedMode, TargetSpec};
    use crate::painters::{DegreeThresholdPainter, RandomPainter, ScriptedPainter};

    fn trio(spec: &TargetSpec, budget: usize) -> Vec<(String, Box<dyn PainterStrategy>)> {
        let h = spec.expand().unwrap();
        vec![
            (
                "lemma5".into(),
                Box::new(DegreeThresholdPainter::for_target(&h)),
            ),
            (
                "all-red".into(),
                Box::new(ScriptedPainter::from_codes(&"R".repeat(budget)).unwrap()),
            ),
            (
                "all-blue".into(),
                Box::new(ScriptedPainter::from_codes(&"B".repeat(budget)).unwrap()),
            ),
        ]
    }

    #[test]
    fn deterministic_painters_stay_within_the_tight_bound() {
        // The nominal bound leaves only 3n/2 probing rounds, which holds for
        // tame painters but not for every adversary; these three are the
        // deterministic reference opponents.
        for n in [4usize, 6, 8, 5, 7] {
            let spec = TargetSpec::Cycle { vertices: n };
            let bound = strategy_round_bound(&spec, false).unwrap() as u32;
            for (name, mut painter) in trio(&spec, bound as usize) {
                let mut builder = CycleTightBuilder::new(n);
                let t = play(&spec, InducedMode::Off, bound, &mut builder, &mut *painter).unwrap();
                let Outcome::BuilderWin { rounds_used, .. } = &t.outcome else {
                    panic!("{name} C_{n}: {:?}", t.outcome);
                };
                assert!(
                    *rounds_used <= bound,
                    "{name} C_{n}: {rounds_used} > {bound}"
                );
            }
        }
    }

    #[test]
    fn random_painters_lose_with_headroom() {
        // Random answers force retries, so allow the extra n probes they can
        // cost over the nominal bound.
        for n in [4usize, 6, 5] {
            let spec = TargetSpec::Cycle { vertices: n };
            let bound = strategy_round_bound(&spec, false).unwrap() as u32;
            let budget = bound + 3 * n as u32;
            for seed in 0..8u64 {
                let mut builder = CycleTightBuilder::new(n);
                let mut painter = RandomPainter::new(seed);
                let t = play(&spec, InducedMode::Off, budget, &mut builder, &mut painter).unwrap();
                assert!(t.outcome.is_win(), "seed {seed} C_{n}: {:?}", t.outcome);
                for r in &t.rounds {
                    if let Some(note) = &r.note {
                        assert!(!note.contains("machine-done"), "{note}");
                        assert!(!note.contains("probe-exhausted"), "{note}");
                    }
                }
            }
        }
    }

    #[test]
    fn row_carve_fits_for_all_even_sizes() {
        for n in (4usize..=120).step_by(2) {
            let row_len = (n / 2 - 2) / 2 + n - 1;
            let need = 6 * row_len + (n - 1);
            let host_vertices = (17 * n).div_ceil(2) + 1;
            assert!(need <= host_vertices, "n={n}: {need} > {host_vertices}");
        }
    }
}
