//! Sweep driver, report types and text output behind the `thetamd` binary.

pub mod cycles;
pub mod report;
pub mod sweep;

use std::fmt::Write as _;

use thetamd_core::{
    metric_dimension_bounded, predict_beta, verify_resolving, BetaPrediction, GraphSpec,
    LandmarkSet, PredictionKind, SearchOptions, ThetaGraph, VertexId,
};

pub use sweep::{
    enumerate_specs, evaluate_spec, open_cases, run_sweep, OpenCase, Row, SweepConfig,
};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass = 0,
    Failure = 1,
    Usage = 2,
    GuardExceeded = 3,
}

impl Outcome {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Text plus exit status of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub outcome: Outcome,
}

impl CommandOutput {
    fn new(text: String, outcome: Outcome) -> Self {
        Self { text, outcome }
    }
}

pub fn parse_spec(literal: &str) -> Result<GraphSpec, String> {
    literal
        .trim()
        .parse()
        .map_err(|e| format!("invalid spec `{literal}`: {e}"))
}

/// Parses a vertex literal whose path index is the caller's own label and
/// maps it onto canonical path order.
pub fn parse_vertex(spec: &GraphSpec, literal: &str) -> Result<VertexId, String> {
    let raw: VertexId = literal
        .trim()
        .parse()
        .map_err(|e| format!("invalid vertex `{literal}`: {e}"))?;
    match raw {
        VertexId::Internal { path, pos } => {
            let canonical = spec
                .canonical_path(path)
                .ok_or_else(|| format!("invalid vertex `{literal}`: no path {path}"))?;
            if pos == 0 || pos > spec.length(canonical) {
                return Err(format!(
                    "invalid vertex `{literal}`: path {path} has {} internal vertices",
                    spec.length(canonical)
                ));
            }
            Ok(VertexId::v(canonical, pos))
        }
        centre => Ok(centre),
    }
}

/// Inverse of [`parse_vertex`]: renders a canonical vertex with the caller's path label.
pub fn user_vertex(spec: &GraphSpec, v: VertexId) -> String {
    match v {
        VertexId::Internal { path, pos } => VertexId::v(spec.original_label(path), pos).to_string(),
        centre => centre.to_string(),
    }
}

pub fn user_set(spec: &GraphSpec, w: &LandmarkSet) -> String {
    let items: Vec<String> = w.vertices().iter().map(|&v| user_vertex(spec, v)).collect();
    format!("{{{}}}", items.join(", "))
}

fn prediction_text(p: &BetaPrediction) -> String {
    match p.kind {
        PredictionKind::Exact(v) => format!("{v}"),
        PredictionKind::Interval(lo, hi) => format!("[{lo},{hi}]"),
    }
}

pub struct BetaArgs {
    pub guard_n: usize,
    pub force: bool,
    pub all_witnesses: bool,
}

/// `beta`: exact metric dimension, the registered prediction, and witnesses.
pub fn cmd_beta(spec: &GraphSpec, args: &BetaArgs) -> CommandOutput {
    let n = spec.vertex_count();
    if n > args.guard_n && !args.force {
        return CommandOutput::new(
            format!(
                "n={n} exceeds the vertex guard {}; rerun with --force or raise --guard-n\n",
                args.guard_n
            ),
            Outcome::GuardExceeded,
        );
    }
    let graph = ThetaGraph::new(spec.clone());
    let opts = SearchOptions::with_cap(if args.all_witnesses { None } else { Some(1) });
    let result = metric_dimension_bounded(&graph, opts).expect("unbounded search always finishes");
    let prediction = predict_beta(spec);

    let mut out = String::new();
    if spec.is_cycle() {
        writeln!(out, "beta={} (cycle C{n})", result.beta).unwrap();
    } else {
        writeln!(
            out,
            "beta={} predicted={} ({})",
            result.beta,
            prediction_text(&prediction),
            prediction.theorem_id
        )
        .unwrap();
    }
    if let Some(first) = result.witnesses.first() {
        writeln!(out, "witness {}", user_set(spec, first)).unwrap();
    }
    if let Some(w) = &prediction.witness {
        writeln!(
            out,
            "constructed {} ({})",
            user_set(spec, w),
            prediction.witness_source.unwrap_or(prediction.theorem_id)
        )
        .unwrap();
    }
    if args.all_witnesses {
        writeln!(out, "bases {}", result.witness_count).unwrap();
        for w in &result.witnesses {
            writeln!(out, "  {}", user_set(spec, w)).unwrap();
        }
    }
    let outcome = if prediction.contains(result.beta) {
        Outcome::Pass
    } else {
        Outcome::Failure
    };
    CommandOutput::new(out, outcome)
}

/// `verify`: whether the landmarks resolve, with the first collision if not.
pub fn cmd_verify(spec: &GraphSpec, landmarks: &[VertexId]) -> Result<CommandOutput, String> {
    let graph = ThetaGraph::new(spec.clone());
    let w = LandmarkSet::new(landmarks.to_vec()).map_err(|e| e.to_string())?;
    let verdict = verify_resolving(&graph, &w).map_err(|e| e.to_string())?;
    let suffix = if spec.is_cycle() {
        format!(" (cycle C{})", spec.vertex_count())
    } else {
        String::new()
    };
    Ok(match verdict.witness_collision {
        None => CommandOutput::new(format!("resolving{suffix}\n"), Outcome::Pass),
        Some((a, b)) => {
            let rep = thetamd_core::resolving::vector_representation(&graph, &w, a)
                .map_err(|e| e.to_string())?;
            CommandOutput::new(
                format!(
                    "NOT resolving: {} ~ {} both {rep}{suffix}\n",
                    user_vertex(spec, a),
                    user_vertex(spec, b)
                ),
                Outcome::Failure,
            )
        }
    })
}
