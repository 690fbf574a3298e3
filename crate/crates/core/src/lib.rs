//! Exact toolkit for bipartite correlation behaviors `p(a,b|x,y)`.
//!
//! The crate builds behaviors from finite-mixture local models in exact
//! rational arithmetic, determinizes stochastic models without changing their
//! behavior, checks the no-signalling property, decides local-polytope
//! membership by exact LP feasibility with Bell-functional certificates,
//! produces quantum behaviors from density matrices and measurement
//! assemblages, and samples models reproducibly for statistical comparison.

pub mod behavior;
pub mod determinize;
pub mod error;
pub mod model;
pub mod nosignalling;
pub mod rational;
pub mod scenario;

pub use behavior::{AnyBehavior, Behavior, ExactBehavior, FloatBehavior, Scalar, ValidationReport};
pub use determinize::{breakpoints, determinize, IntervalAtom};
pub use error::{Error, Result};
pub use model::{behavior_of_model, Component, LocalModel};
pub use nosignalling::{check_no_signalling, NoSignallingReport, Party, SignallingWitness};
pub use rational::Rational;
pub use scenario::Scenario;
