//! Builder strategy for path targets.

use crate::builders::path_machine::{MachineStep, PathMachine, VertexSource};
use crate::engine::{BuilderAction, BuilderStrategy, GameView};

/// Forces an induced monochromatic path with `edges` edges within
/// `28*edges - 27` rounds, whatever the painter does.
pub struct PathBuilder {
    machine: PathMachine,
}

impl PathBuilder {
    pub fn new(edges: usize) -> Self {
        PathBuilder {
            machine: PathMachine::new(edges, VertexSource::Fresh),
        }
    }
}

impl BuilderStrategy for PathBuilder {
    fn next_move(&mut self, view: &GameView) -> BuilderAction {
        match self.machine.next(view.graph) {
            MachineStep::Draw { u, v, note } => BuilderAction::Draw {
                u,
                v,
                note: Some(note),
            },
            // By the machine's accounting the game is already over; if the
            // engine still asks for moves, keep the game legal with fresh
            // doodles rather than stalling.
            MachineStep::Done { .. } => {
                let n = view.graph.vertex_count();
                BuilderAction::draw_noted(n, n + 1, "machine-done")
            }
        }
    }
}
