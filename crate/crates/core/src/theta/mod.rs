//! Generalized theta graphs `Θ(s1, …, sm)`: two centers joined by `m`
//! internally disjoint paths, path `i` carrying `si` internal vertices.

mod distance;
mod graph;
mod spec;
mod vertex;

pub use distance::{closed_form_distance, sequence_distance};
pub use graph::{bfs_distance_matrix, vertices, DistanceMatrix, EdgeList};
pub use spec::GraphSpec;
pub use vertex::VertexId;

use crate::error::Result;

/// A spec together with its materialized adjacency and distance table.
///
/// Distances come from [`closed_form_distance`]; the BFS table is kept as an
/// independent oracle in tests.
#[derive(Clone, Debug)]
pub struct ThetaGraph {
    spec: GraphSpec,
    edges: EdgeList,
    dist: DistanceMatrix,
}

impl ThetaGraph {
    pub fn new(spec: GraphSpec) -> Self {
        let edges = EdgeList::new(&spec);
        let vs = edges.vertices().to_vec();
        let dist = DistanceMatrix::from_fn(vs.len(), |a, b| {
            closed_form_distance(&spec, vs[a], vs[b]).expect("vertices come from the spec") as u32
        });
        Self { spec, edges, dist }
    }

    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        GraphSpec::new(lengths).map(Self::new)
    }

    pub fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    pub fn edges(&self) -> &EdgeList {
        &self.edges
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        self.edges.vertices()
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize> {
        self.edges.index_of(v)
    }

    pub fn vertex(&self, index: usize) -> VertexId {
        self.edges.vertex(index)
    }

    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<u32> {
        Ok(self.dist.get(self.index_of(u)?, self.index_of(v)?))
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.edges.degree(self.index_of(v)?))
    }
}
