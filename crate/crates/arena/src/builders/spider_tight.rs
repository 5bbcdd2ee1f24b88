//! Builder strategy for spider targets when copies need not be induced.
//!
//! Without the induced requirement the host can be packed much tighter than
//! in [`super::spider`]: `2k` segments of `2l` edges tiled edge-to-edge over
//! a host path of `4kl` edges, with adjacent segments sharing a boundary
//! vertex. Interior positions are handed out through claim flags so that no
//! vertex serves two legs.
//!
//! The opening fans probes from a fresh hub onto segment position 1 until
//! either `k` host-colored answers (a host-colored spider at the hub, game
//! over) or `k` concessions, which seed all `k` legs at once. Legs then
//! advance one position per step exactly as in the induced strategy, except
//! that candidate segments are any with the wanted position unclaimed —
//! sequential leg growth keeps at least `k` of the `2k` segments available
//! at every step.

use crate::builders::path_machine::{MachineStep, PathMachine, VertexSource};
use crate::engine::{BuilderAction, BuilderStrategy, GameView};
use crate::graph::{Color, ColoredGraph, Vertex};

struct Probe {
    from: Vertex,
    targets: Vec<usize>,
    next: usize,
}

/// Seeding state: conceded leg starts and host-colored replies so far.
struct Opening {
    probed: usize,
    conceded: Vec<usize>,
    host_colored: usize,
}

pub struct SpiderTightBuilder {
    legs: usize,
    leg_len: usize,
    host: PathMachine,
    host_color: Option<Color>,
    /// `2k` segments of `2l + 1` vertices; consecutive segments share a
    /// boundary vertex.
    segments: Vec<Vec<Vertex>>,
    /// `claimed[segment][position]` marks vertices consumed by a leg.
    claimed: Vec<Vec<bool>>,
    hub: Option<Vertex>,
    opening: Option<Opening>,
    /// Per-leg (segment, end vertex) once seeded.
    leg_ends: Vec<(usize, Vertex)>,
    leg: usize,
    step: usize,
    probe: Option<Probe>,
    spent: bool,
}

impl SpiderTightBuilder {
    pub fn new(legs: usize, leg_len: usize) -> Self {
        debug_assert!(legs >= 3 && leg_len >= 2);
        SpiderTightBuilder {
            legs,
            leg_len,
            host: PathMachine::new(4 * legs * leg_len, VertexSource::Fresh),
            host_color: None,
            segments: Vec::new(),
            claimed: Vec::new(),
            hub: None,
            opening: Some(Opening {
                probed: 0,
                conceded: Vec::new(),
                host_colored: 0,
            }),
            leg_ends: Vec::new(),
            leg: 0,
            step: 2,
            probe: None,
            spent: false,
        }
    }

    fn carve(&mut self, path: &[Vertex]) {
        let width = 2 * self.leg_len;
        for s in 0..2 * self.legs {
            let start = s * width;
            self.segments.push(path[start..=start + width].to_vec());
            self.claimed.push(vec![false; width + 1]);
        }
    }

    /// Segments other than `own` whose `pos` is still unclaimed.
    fn available(&self, own: usize, pos: usize) -> Vec<usize> {
        (0..self.segments.len())
            .filter(|&m| m != own && !self.claimed[m][pos])
            .collect()
    }

    fn advance(&mut self, g: &ColoredGraph) -> Option<(Vertex, Vertex, String)> {
        let x = self.host_color.expect("host is finished");
        // Opening: seed every leg from the hub.
        if let Some(op) = &mut self.opening {
            if op.probed > 0 {
                let seg = op.probed - 1;
                let hub = self.hub.expect("hub exists once probing started");
                let c = g.color_of(hub, self.segments[seg][1]).expect("was played");
                if c == x {
                    op.host_colored += 1;
                    if op.host_colored == self.legs {
                        // Host-colored spider at the hub; game should be over.
                        self.spent = true;
                        return None;
                    }
                } else {
                    op.conceded.push(seg);
                    self.claimed[seg][1] = true;
                }
            }
            if op.conceded.len() == self.legs {
                self.leg_ends = op
                    .conceded
                    .iter()
                    .map(|&s| (s, self.segments[s][1]))
                    .collect();
                self.opening = None;
            } else {
                let seg = op.probed;
                op.probed += 1;
                let hub = *self.hub.get_or_insert_with(|| g.vertex_count());
                return Some((
                    hub,
                    self.segments[seg][1],
                    format!("seed probe {}", seg + 1),
                ));
            }
        }
        // Legs advance one position at a time.
        loop {
            if let Some(p) = &self.probe {
                let probed = p.targets[p.next - 1];
                let target = self.segments[probed][self.step];
                let c = g.color_of(p.from, target).expect("probe was played");
                if c != x {
                    self.claimed[probed][self.step] = true;
                    self.leg_ends[self.leg] = (probed, target);
                    self.probe = None;
                    if self.step == self.leg_len {
                        self.leg += 1;
                        self.step = 2;
                    } else {
                        self.step += 1;
                    }
                } else if p.next == p.targets.len() {
                    // A host-colored spider centered on the leg end exists.
                    self.spent = true;
                    return None;
                }
            }
            if self.leg == self.legs {
                // Every leg reached full length: off-color spider at the hub.
                self.spent = true;
                return None;
            }
            let (own, end) = self.leg_ends[self.leg];
            match &mut self.probe {
                Some(p) => p.next += 1,
                None => {
                    // Sequential growth leaves at least k candidates here; we
                    // only ever need the first k - 1 of them.
                    let mut targets = self.available(own, self.step);
                    targets.truncate(self.legs - 1);
                    self.probe = Some(Probe {
                        from: end,
                        targets,
                        next: 1,
                    });
                }
            }
            let p = self.probe.as_ref().expect("probe was just set");
            let m = p.targets[p.next - 1];
            return Some((
                end,
                self.segments[m][self.step],
                format!("leg {} step {} probe {}", self.leg + 1, self.step, p.next),
            ));
        }
    }
}

impl BuilderStrategy for SpiderTightBuilder {
    fn next_move(&mut self, view: &GameView) -> BuilderAction {
        if self.host_color.is_none() {
            match self.host.next(view.graph) {
                MachineStep::Draw { u, v, note } => {
                    return BuilderAction::Draw {
                        u,
                        v,
                        note: Some(format!("host {note}")),
                    }
                }
                MachineStep::Done { path, color } => {
                    self.host_color = Some(color);
                    self.carve(&path);
                }
            }
        }
        if !self.spent {
            if let Some((u, v, note)) = self.advance(view.graph) {
                return BuilderAction::Draw {
                    u,
                    v,
                    note: Some(note),
                };
            }
        }
        let n = view.graph.vertex_count();
        BuilderAction::draw_noted(n, n + 1, "machine-done")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{play, Outcome, PainterStrategy};
    use crate::graph::{strategy_round_bound, InducedMode, TargetSpec};
    use crate::painters::{DegreeThresholdPainter, RandomPainter, ScriptedPainter};

    fn zoo(spec: &TargetSpec, budget: usize) -> Vec<(String, Box<dyn PainterStrategy>)> {
        let h = spec.expand().unwrap();
        let mut zoo: Vec<(String, Box<dyn PainterStrategy>)> = vec![
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
            (
                "alternate".into(),
                Box::new(ScriptedPainter::from_codes(&"RB".repeat(budget / 2 + 1)).unwrap()),
            ),
        ];
        for seed in 0..3u64 {
            zoo.push((format!("random:{seed}"), Box::new(RandomPainter::new(seed))));
        }
        zoo
    }

    #[test]
    fn tight_spiders_win_the_plain_game_within_the_bound() {
        for (k, l) in [(3, 2), (3, 3), (4, 2)] {
            let spec = TargetSpec::Spider {
                legs: k,
                leg_len: l,
            };
            let bound = strategy_round_bound(&spec, false).unwrap() as u32;
            for (name, mut painter) in zoo(&spec, bound as usize) {
                let mut builder = SpiderTightBuilder::new(k, l);
                let t = play(&spec, InducedMode::Off, bound, &mut builder, &mut *painter).unwrap();
                let Outcome::BuilderWin { rounds_used, .. } = &t.outcome else {
                    panic!("{name} spider {k},{l}: {:?}", t.outcome);
                };
                assert!(
                    *rounds_used <= bound,
                    "{name} spider {k},{l}: {rounds_used} > {bound}"
                );
                for r in &t.rounds {
                    if let Some(note) = &r.note {
                        assert!(!note.contains("machine-done"), "{note}");
                        assert!(!note.contains("pool-exhausted"), "{note}");
                    }
                }
            }
        }
    }

    #[test]
    fn tight_host_is_smaller_than_the_induced_host() {
        // The whole point of the variant: 4kl host edges instead of
        // k^2 (2l + 1).
        for (k, l) in [(3usize, 2usize), (4, 3), (5, 2)] {
            assert!(4 * k * l < k * k * (2 * l + 1));
        }
    }
}
