//! Exact metric dimension of generalized theta graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`theta`]: graph specs, symbolic vertices, closed-form and BFS distances.
//! * [`resolving`]: vector representations, resolving-set verification, the
//!   certified minimum-resolving-set search and the structural analyzers
//!   (MMD sets, identical paths, twin-path lemmas, two-landmark bases).
//! * [`constructions`]: theorem registry: closed-form β predictions and
//!   explicit witness landmark sets.
//! * [`cycle`]: native cycle routines used for the `m = 2` case.

pub mod constructions;
pub mod cycle;
pub mod error;
pub mod resolving;
pub mod theta;

pub use constructions::{
    applicable_theorems, predict_beta, BetaPrediction, PredictionKind, TheoremApplicability,
};
pub use error::{Error, Result};
pub use resolving::{
    metric_dimension, metric_dimension_bounded, verify_resolving, BetaResult, DistanceVector,
    LandmarkSet, ResolutionVerdict, SearchOptions,
};
pub use theta::{GraphSpec, ThetaGraph, VertexId};
