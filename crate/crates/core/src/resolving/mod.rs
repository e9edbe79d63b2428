//! Resolving sets: vector representations, verification, exact search and
//! the structural facts the theorem registry leans on.

mod search;
mod structure;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use search::{
    certify_no_resolving_set, combinations, find_resolving_set_of_size, metric_dimension,
    metric_dimension_bounded, BetaResult, Combinations, SearchOptions, DEFAULT_WITNESS_CAP,
};
pub use structure::{
    check_generalized_twin_lemma, check_ip_internal_vertex_condition, check_twin_path_lemma,
    closer_center, cycle_restriction, identical_path_set, ip_lower_bound, khuller_conditions,
    mmd_set, IPEntry, KhullerReport,
};

use crate::error::{Error, Result};
use crate::theta::{ThetaGraph, VertexId};

/// Ordered set of distinct landmarks; order fixes the coordinate order of
/// vector representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LandmarkSet(Vec<VertexId>);

impl LandmarkSet {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        for (k, v) in vertices.iter().enumerate() {
            if vertices[..k].contains(v) {
                return Err(Error::DuplicateLandmark(*v));
            }
        }
        Ok(Self(vertices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// Same members in canonical vertex order.
    pub fn sorted(&self) -> Self {
        let mut vs = self.0.clone();
        vs.sort();
        Self(vs)
    }

    /// Whether some landmark is an internal vertex of canonical path `path`.
    pub fn hits_path(&self, path: usize) -> bool {
        self.0.iter().any(|v| v.path() == Some(path))
    }

    pub(crate) fn indices(&self, graph: &ThetaGraph) -> Result<Vec<usize>> {
        self.0.iter().map(|&v| graph.index_of(v)).collect()
    }
}

impl FromIterator<VertexId> for LandmarkSet {
    /// Collects without the duplicate check; callers own that invariant.
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for LandmarkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// `r(v|W)`: distances from `v` to each landmark, in landmark order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DistanceVector(pub Vec<u32>);

impl fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

pub fn vector_representation(
    graph: &ThetaGraph,
    landmarks: &LandmarkSet,
    v: VertexId,
) -> Result<DistanceVector> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let target = graph.index_of(v)?;
    let dist = graph.distances();
    let coords = landmarks
        .indices(graph)?
        .into_iter()
        .map(|w| dist.get(w, target))
        .collect();
    Ok(DistanceVector(coords))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionVerdict {
    pub resolved: bool,
    pub witness_collision: Option<(VertexId, VertexId)>,
}

impl ResolutionVerdict {
    /// Re-checks a reported collision against the distance table.
    pub fn collision_holds(&self, graph: &ThetaGraph, landmarks: &LandmarkSet) -> Result<bool> {
        match self.witness_collision {
            None => Ok(self.resolved),
            Some((a, b)) => Ok(a != b
                && vector_representation(graph, landmarks, a)?
                    == vector_representation(graph, landmarks, b)?),
        }
    }
}

/// Checks that all `n` vector representations are pairwise distinct. On
/// failure the reported pair is the lexicographically first colliding pair
/// in canonical vertex order.
pub fn verify_resolving(graph: &ThetaGraph, landmarks: &LandmarkSet) -> Result<ResolutionVerdict> {
    let idx = landmarks.indices(graph)?;
    let dist = graph.distances();
    // earliest and second-earliest vertex per representation
    let mut first: HashMap<Vec<u32>, (usize, Option<usize>)> = HashMap::with_capacity(graph.n());
    for v in 0..graph.n() {
        let key: Vec<u32> = idx.iter().map(|&w| dist.get(w, v)).collect();
        first
            .entry(key)
            .and_modify(|e| {
                if e.1.is_none() {
                    e.1 = Some(v);
                }
            })
            .or_insert((v, None));
    }
    let collision = first
        .values()
        .filter_map(|&(a, b)| b.map(|b| (a, b)))
        .min()
        .map(|(a, b)| (graph.vertex(a), graph.vertex(b)));
    Ok(ResolutionVerdict {
        resolved: collision.is_none(),
        witness_collision: collision,
    })
}
