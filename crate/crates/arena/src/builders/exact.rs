//! Solver-backed builder: plays the exact minimax move every round.
//!
//! Only practical for tiny targets — the solver caps boards at
//! [`crate::solver::MAX_SOLVER_VERTICES`] vertices and explores every line —
//! but within that range it is optimal by construction and doubles as a
//! cross-check on the hand-crafted strategies.

use crate::engine::{BuilderAction, BuilderStrategy, GameView};
use crate::graph::{InducedMode, TargetSpec};
use crate::solver::{GameValue, SolveError, Solver};

pub struct ExactBuilder {
    solver: Solver,
    horizon: u32,
}

impl ExactBuilder {
    /// `horizon` is how many rounds ahead each move is searched; a horizon
    /// at least the game value makes the play perfect.
    pub fn new(
        target: &TargetSpec,
        mode: InducedMode,
        horizon: u32,
        max_vertices: usize,
    ) -> Result<Self, SolveError> {
        Ok(ExactBuilder {
            solver: Solver::new(target, mode, max_vertices)?,
            horizon,
        })
    }
}

impl BuilderStrategy for ExactBuilder {
    fn next_move(&mut self, view: &GameView) -> BuilderAction {
        match self.solver.best_move(view.graph, self.horizon) {
            Some(((u, v), value)) => {
                let note = match value {
                    GameValue::Win(r) => format!("win in {r}"),
                    GameValue::Unknown => "beyond horizon".to_owned(),
                };
                BuilderAction::Draw {
                    u,
                    v,
                    note: Some(note),
                }
            }
            None => {
                // Board saturated under the solver's vertex cap.
                let n = view.graph.vertex_count();
                BuilderAction::draw_noted(n, n + 1, "machine-done")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{play, Outcome};
    use crate::painters::{MinimaxPainter, RandomPainter, ScriptedPainter};

    #[test]
    fn exact_builder_wins_two_edge_paths_in_three_rounds_against_anyone() {
        let spec = TargetSpec::Path { edges: 2 };
        for codes in ["RRRR", "BBBB", "RBRB", "BRRB"] {
            let mut builder = ExactBuilder::new(&spec, InducedMode::Off, 6, 6).unwrap();
            let mut painter = ScriptedPainter::from_codes(codes).unwrap();
            let t = play(&spec, InducedMode::Off, 10, &mut builder, &mut painter).unwrap();
            let Outcome::BuilderWin { rounds_used, .. } = t.outcome else {
                panic!("{codes}: {:?}", t.outcome);
            };
            assert!(rounds_used <= 3, "{codes}: {rounds_used}");
        }
    }

    #[test]
    fn exact_builder_meets_the_optimal_painter_at_the_exact_value() {
        // Both sides perfect: the game lasts exactly the solved value.
        let spec = TargetSpec::Path { edges: 2 };
        let mut builder = ExactBuilder::new(&spec, InducedMode::Off, 8, 7).unwrap();
        let mut painter = MinimaxPainter::new(&spec, InducedMode::Off, 8, 7).unwrap();
        let t = play(&spec, InducedMode::Off, 10, &mut builder, &mut painter).unwrap();
        assert_eq!(t.outcome.rounds_used(), Some(3), "{:?}", t.outcome);
    }

    #[test]
    fn exact_builder_handles_single_edge_and_random_painters() {
        let spec = TargetSpec::Path { edges: 1 };
        for seed in 0..4 {
            let mut builder = ExactBuilder::new(&spec, InducedMode::Off, 4, 5).unwrap();
            let mut painter = RandomPainter::new(seed);
            let t = play(&spec, InducedMode::Off, 5, &mut builder, &mut painter).unwrap();
            assert_eq!(t.outcome.rounds_used(), Some(1));
        }
    }
}
