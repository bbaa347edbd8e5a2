//! Bounded Borda preference dynamics on weighted directed influence networks.
//!
//! Each node of an influence network holds a weak order over `m`
//! alternatives. A node averages its in-neighbors' Borda score vectors with
//! row-stochastic weights, projects the result back to a weak order (its
//! target) and then moves one edge of the weak-order cover graph toward that
//! target. The crate simulates the synchronous and asynchronous variants with
//! pinned (persistent) nodes, detects transients and periods, and ships
//! scenario builders plus verifiers for consensus, traveling waves on directed
//! cycles, bipartite period lifting, forced oscillations under contrarian
//! camps and robustness to weight perturbations.
//!
//! All scores and weights are exact rationals, so ties in the projection are
//! decided exactly.

pub mod cli;
pub mod dynamics;
pub mod error;
pub mod influence;
pub mod move_graph;
pub mod preference;
pub mod rational;
pub mod scenario;
pub mod theorems;

pub use dynamics::{BordaSystem, OrbitReport, PersistentConfig, Profile, Schedule};
pub use error::{Error, Result};
pub use influence::{ClassStructure, InfluenceNetwork};
pub use move_graph::{MoveGraph, StepPolicy};
pub use preference::{OrderId, PreferenceSpace, ScoreVector, WeakOrder};
pub use rational::{Margin, Rational};
pub use theorems::{ScenarioConfig, VerificationOutcome};
