//! Serializable game records and an independent replay checker.

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

use crate::engine::Outcome;
use crate::graph::{
    find_mono_copy_through, verify_embedding, Color, ColoredGraph, InducedMode, TargetSpec,
    Vertex,
};

/// One colored edge as it entered the board.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    /// 1-based round number.
    pub i: u32,
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Full record of one game: target, rules, every round, and the outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTrace {
    pub target: TargetSpec,
    #[serde(with = "induced_repr")]
    pub induced: InducedMode,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

/// `induced` is written as `false`/`true` for the common modes so traces stay
/// readable; the third mode gets a distinguishing string.
mod induced_repr {
    use super::*;

    pub fn serialize<S: Serializer>(m: &InducedMode, s: S) -> Result<S::Ok, S::Error> {
        match m {
            InducedMode::Off => s.serialize_bool(false),
            InducedMode::Strict => s.serialize_bool(true),
            InducedMode::OwnColor => s.serialize_str("own-color"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<InducedMode, D::Error> {
        struct ModeVisitor;

        impl Visitor<'_> for ModeVisitor {
            type Value = InducedMode;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a boolean or the string \"own-color\"")
            }

            fn visit_bool<E: de::Error>(self, b: bool) -> Result<InducedMode, E> {
                Ok(if b { InducedMode::Strict } else { InducedMode::Off })
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<InducedMode, E> {
                match s {
                    "own-color" => Ok(InducedMode::OwnColor),
                    other => Err(E::invalid_value(de::Unexpected::Str(other), &self)),
                }
            }
        }

        d.deserialize_any(ModeVisitor)
    }
}

impl GameTrace {
    /// Pretty-printed JSON with a trailing newline, suitable for files.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Rounds actually recorded.
    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }
}

/// Everything the replay checker found wrong with a trace.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn flag(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            f.write_str("clean")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Replays a trace from scratch and checks that every move was legal, that
/// the claimed outcome matches what actually happens on the board, and that a
/// claimed winning embedding really is one.
///
/// The checker shares the engine's detector but none of its game state, so a
/// doctored trace cannot sneak past by reusing stale bookkeeping.
pub fn verify_trace(trace: &GameTrace) -> VerifyReport {
    let mut report = VerifyReport::default();
    let h = match trace.target.expand() {
        Ok(h) => h,
        Err(e) => {
            report.flag(format!("target is invalid: {e}"));
            return report;
        }
    };
    let mode = trace.induced;

    let mut g = ColoredGraph::new();
    let mut first_win: Option<u32> = None;
    for (idx, r) in trace.rounds.iter().enumerate() {
        let want = idx as u32 + 1;
        if r.i != want {
            report.flag(format!("round {want} is numbered {}", r.i));
        }
        if let Err(e) = g.add_edge(r.u, r.v, r.color) {
            report.flag(format!("round {}: illegal edge: {e}", r.i));
            return report;
        }
        if first_win.is_none()
            && find_mono_copy_through(&g, &h, Some(r.color), mode, (r.u, r.v)).is_some()
        {
            first_win = Some(want);
        }
    }
    if let Some(w) = first_win {
        if (w as usize) < trace.rounds.len() {
            report.flag(format!(
                "a monochromatic copy exists after round {w} but the trace keeps playing"
            ));
        }
    }

    match &trace.outcome {
        Outcome::BuilderWin {
            rounds_used,
            embedding,
        } => {
            if *rounds_used != trace.rounds.len() as u32 {
                report.flag(format!(
                    "outcome says {rounds_used} rounds but {} are recorded",
                    trace.rounds.len()
                ));
            }
            match first_win {
                Some(w) if w == trace.rounds.len() as u32 => {}
                Some(_) => {} // already flagged above
                None => report.flag(
                    "outcome claims a win but no monochromatic copy appears during replay"
                        .to_owned(),
                ),
            }
            if let Err(e) = verify_embedding(&g, &h, embedding, mode) {
                report.flag(format!("winning embedding is invalid: {e}"));
            }
        }
        Outcome::BudgetExhausted { budget, note } => {
            if let Some(w) = first_win {
                report.flag(format!(
                    "outcome says the budget ran out but a copy exists from round {w}"
                ));
            }
            let played = trace.rounds.len() as u32;
            if played > *budget {
                report.flag(format!("{played} rounds played under a budget of {budget}"));
            }
            if note.is_none() && played < *budget {
                report.flag(format!(
                    "only {played} of {budget} rounds played with no reason to stop early"
                ));
            }
        }
        Outcome::BuilderResigned { .. } => {
            if let Some(w) = first_win {
                report.flag(format!(
                    "outcome says the builder resigned but a copy exists from round {w}"
                ));
            }
        }
    }
    report
}
