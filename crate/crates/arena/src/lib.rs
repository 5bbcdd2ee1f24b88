//! Game engine, strategy library, and exact solver for online Ramsey games.
//!
//! Two players share an initially empty board with an unlimited supply of
//! vertices. Each round the *builder* draws one new edge and the *painter*
//! immediately colors it red or blue. The builder tries to force a
//! monochromatic copy of a fixed target graph — optionally an induced copy —
//! in as few rounds as possible; the painter tries to hold out.
//!
//! The crate provides:
//!
//! - [`graph`]: the colored board, target families (paths, cycles, spiders,
//!   centipedes, explicit edge lists), monochromatic-copy detection, and
//!   closed-form round bounds.
//! - [`engine`]: the round loop, traces, and an independent trace verifier.
//! - [`builders`]: builder strategies with proven round guarantees for each
//!   target family, plus an exact solver-backed builder for tiny targets.
//! - [`painters`]: adversaries to test builders against, from scripted and
//!   random painters to a degree-threshold painter and an exact minimax one.
//! - [`solver`]: exhaustive game-tree search with canonicalization, for exact
//!   values of small games.
//! - [`oracle`]: deliberately naive reference implementations used by the
//!   test suite to cross-check the fast paths.

pub mod builders;
pub mod engine;
pub mod graph;
pub mod oracle;
pub mod painters;
pub mod solver;
