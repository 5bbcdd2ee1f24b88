//! The game loop.
//!
//! One round: the builder proposes an edge, the painter colors it, the edge
//! enters the shared background graph, and the engine checks whether a
//! monochromatic copy of the target now exists. The engine is the sole
//! authority on wins — builder strategies may *believe* they have finished,
//! but only the engine's own detector ends the game. Because every new copy
//! must use the newest edge, scanning through that edge after each round is
//! both sound and complete.

mod trace;

pub use trace::{verify_trace, GameTrace, RoundRecord, VerifyReport};

use crate::graph::{
    find_mono_copy_through, strategy_round_bound, verify_embedding, Color, ColoredGraph,
    Embedding, InducedMode, TargetError, TargetSpec, Vertex,
};

/// Read-only snapshot handed to both players each round.
pub struct GameView<'a> {
    /// The background graph built so far.
    pub graph: &'a ColoredGraph,
    /// The 1-based number of the round being played.
    pub round: u32,
}

/// What the builder does with its turn.
pub enum BuilderAction {
    /// Propose the edge `{u, v}`. The optional note is carried into the
    /// trace verbatim; strategies use it to label the role an edge plays.
    Draw {
        u: Vertex,
        v: Vertex,
        note: Option<String>,
    },
    /// Claim the game is already won. The engine validates the claim; a bogus
    /// one forfeits the game.
    DeclareWin(Embedding),
}

impl BuilderAction {
    /// Plain edge proposal without a note.
    pub fn draw(u: Vertex, v: Vertex) -> Self {
        BuilderAction::Draw { u, v, note: None }
    }

    /// Edge proposal with a note for the trace.
    pub fn draw_noted(u: Vertex, v: Vertex, note: impl Into<String>) -> Self {
        BuilderAction::Draw {
            u,
            v,
            note: Some(note.into()),
        }
    }
}

/// Chooses the builder's action each round.
pub trait BuilderStrategy {
    fn next_move(&mut self, view: &GameView) -> BuilderAction;
}

/// Chooses a color for each proposed edge.
///
/// Returning `None` means the painter has no more answers to give (an
/// interactive painter whose input closed, for instance). The engine treats
/// that as the game ending without the edge being drawn.
pub trait PainterStrategy {
    fn color(&mut self, view: &GameView, edge: (Vertex, Vertex)) -> Option<Color>;
}

/// How a finished game ended.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    /// The target appeared in one color; the embedding is the engine's own
    /// witness (or a validated builder claim).
    BuilderWin {
        rounds_used: u32,
        embedding: Embedding,
    },
    /// The round budget ran out, or the painter stopped answering
    /// (`note: "input-closed"`), without a monochromatic copy.
    BudgetExhausted {
        budget: u32,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        note: Option<String>,
    },
    /// The builder proposed an illegal edge or made a bogus win claim.
    BuilderResigned { reason: String },
}

impl Outcome {
    pub fn is_win(&self) -> bool {
        matches!(self, Outcome::BuilderWin { .. })
    }

    /// Rounds actually drawn on the board when the game ended.
    pub fn rounds_used(&self) -> Option<u32> {
        match self {
            Outcome::BuilderWin { rounds_used, .. } => Some(*rounds_used),
            _ => None,
        }
    }
}

/// Round budget used when the caller does not supply one: four times the
/// strategy guarantee when a finite one is known for the target family,
/// otherwise a generous multiple of the target's size, plus slack so tiny
/// targets still get room to move.
pub fn default_budget(spec: &TargetSpec, mode: InducedMode) -> Result<u32, TargetError> {
    let h = spec.expand()?;
    let base = match strategy_round_bound(spec, mode.is_induced()) {
        Some(b) if b > 0 => b as u64,
        _ => h.edge_count() as u64 * 8,
    };
    Ok((4 * base + 64).min(u32::MAX as u64) as u32)
}

/// Plays one full game and returns its trace.
///
/// Fails only if the target itself is malformed; everything that can go wrong
/// *during* play is reported through the trace's outcome instead.
pub fn play(
    target: &TargetSpec,
    mode: InducedMode,
    budget: u32,
    builder: &mut dyn BuilderStrategy,
    painter: &mut dyn PainterStrategy,
) -> Result<GameTrace, TargetError> {
    let h = target.expand()?;
    let mut g = ColoredGraph::new();
    let mut rounds: Vec<RoundRecord> = Vec::new();

    let outcome = loop {
        if rounds.len() as u32 >= budget {
            break Outcome::BudgetExhausted {
                budget,
                note: None,
            };
        }
        let round = rounds.len() as u32 + 1;
        let action = builder.next_move(&GameView {
            graph: &g,
            round,
        });
        let (u, v, note) = match action {
            BuilderAction::Draw { u, v, note } => (u, v, note),
            BuilderAction::DeclareWin(emb) => {
                match verify_embedding(&g, &h, &emb, mode) {
                    // The detector runs after every round, so a valid claim
                    // here means it failed earlier; honor the claim anyway.
                    Ok(()) => {
                        break Outcome::BuilderWin {
                            rounds_used: rounds.len() as u32,
                            embedding: emb,
                        }
                    }
                    Err(e) => {
                        break Outcome::BuilderResigned {
                            reason: format!("invalid win claim: {e}"),
                        }
                    }
                }
            }
        };
        if let Err(e) = g.check_edge(u, v) {
            break Outcome::BuilderResigned {
                reason: format!("illegal move: {e}"),
            };
        }
        let Some(color) = painter.color(
            &GameView {
                graph: &g,
                round,
            },
            (u, v),
        ) else {
            break Outcome::BudgetExhausted {
                budget,
                note: Some("input-closed".to_owned()),
            };
        };
        g.add_edge(u, v, color)
            .expect("edge was checked before the painter saw it");
        rounds.push(RoundRecord {
            i: round,
            u: u.min(v),
            v: u.max(v),
            color,
            note,
        });
        if let Some(emb) = find_mono_copy_through(&g, &h, None, mode, (u, v)) {
            break Outcome::BuilderWin {
                rounds_used: round,
                embedding: emb,
            };
        }
    };

    Ok(GameTrace {
        target: target.clone(),
        induced: mode,
        rounds,
        outcome,
    })
}
