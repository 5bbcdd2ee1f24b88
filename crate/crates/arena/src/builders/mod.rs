//! Builder strategies: one per target family, plus a solver-backed exact
//! builder for tiny targets.

pub mod centipede;
pub mod cycle;
pub mod cycle_tight;
pub mod exact;
pub mod path;
pub mod path_machine;
pub mod spider;
pub mod spider_tight;

pub use centipede::CentipedeBuilder;
pub use cycle::CycleBuilder;
pub use cycle_tight::CycleTightBuilder;
pub use exact::ExactBuilder;
pub use path::PathBuilder;
pub use path_machine::{
    path_machine_round_bound, path_machine_vertex_bound, MachineStep, MonoPathProvider,
    PathMachine, VertexSource,
};
pub use spider::SpiderBuilder;
pub use spider_tight::SpiderTightBuilder;

use crate::engine::BuilderStrategy;
use crate::graph::{InducedMode, TargetSpec};
use crate::solver::{SolveError, MAX_SOLVER_VERTICES};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BuilderTokenError {
    #[error("unknown builder {0:?}")]
    Unknown(String),
    #[error("builder {builder:?} does not play {target} targets")]
    FamilyMismatch { builder: String, target: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Instantiates a builder by registry name, checked against the target
/// family it is about to play.
///
/// Known names: `path`, `cycle`, `cycle-noninduced`, `spider`,
/// `spider-noninduced`, `centipede`, and `exact` (any family, tiny targets).
pub fn builder_from_token(
    token: &str,
    target: &TargetSpec,
    mode: InducedMode,
) -> Result<Box<dyn BuilderStrategy>, BuilderTokenError> {
    let mismatch = || BuilderTokenError::FamilyMismatch {
        builder: token.to_owned(),
        target: target.to_string(),
    };
    match token {
        "path" => match target {
            TargetSpec::Path { edges } => Ok(Box::new(PathBuilder::new(*edges))),
            _ => Err(mismatch()),
        },
        "cycle" => match target {
            TargetSpec::Cycle { vertices } => Ok(Box::new(CycleBuilder::new(*vertices))),
            _ => Err(mismatch()),
        },
        "cycle-noninduced" => match target {
            TargetSpec::Cycle { vertices } => Ok(Box::new(CycleTightBuilder::new(*vertices))),
            _ => Err(mismatch()),
        },
        "spider" => match target {
            TargetSpec::Spider { legs, leg_len } => {
                Ok(Box::new(SpiderBuilder::new(*legs, *leg_len)))
            }
            _ => Err(mismatch()),
        },
        "spider-noninduced" => match target {
            TargetSpec::Spider { legs, leg_len } => {
                Ok(Box::new(SpiderTightBuilder::new(*legs, *leg_len)))
            }
            _ => Err(mismatch()),
        },
        "centipede" => match target {
            TargetSpec::Centipede { thorns, spine_len } => {
                Ok(Box::new(CentipedeBuilder::new(*thorns, *spine_len)))
            }
            _ => Err(mismatch()),
        },
        "exact" => {
            let vertices = target
                .expand()
                .map(|h| h.vertex_count() + 3)
                .unwrap_or(MAX_SOLVER_VERTICES)
                .min(MAX_SOLVER_VERTICES);
            let builder = ExactBuilder::new(target, mode, 16, vertices)?;
            Ok(Box::new(builder))
        }
        other => Err(BuilderTokenError::Unknown(other.to_owned())),
    }
}
