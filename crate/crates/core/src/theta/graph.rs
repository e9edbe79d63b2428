use std::collections::VecDeque;

use super::{GraphSpec, VertexId};
use crate::error::{Error, Result};

/// Canonical vertex order: `c1`, `c2`, then `v:i:j` in lexicographic `(i, j)` order.
pub fn vertices(spec: &GraphSpec) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(spec.vertex_count());
    out.push(VertexId::C1);
    out.push(VertexId::C2);
    for (k, &s) in spec.lengths().iter().enumerate() {
        out.extend((1..=s).map(|pos| VertexId::v(k + 1, pos)));
    }
    out
}

/// Dense vertex indexing plus adjacency lists for a materialized theta graph.
#[derive(Clone, Debug)]
pub struct EdgeList {
    vertices: Vec<VertexId>,
    /// `offsets[k]` is the dense index of `v:(k+1):1`.
    offsets: Vec<usize>,
    lengths: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl EdgeList {
    pub fn new(spec: &GraphSpec) -> Self {
        let vertices = vertices(spec);
        let mut offsets = Vec::with_capacity(spec.m());
        let mut next = 2;
        for &s in spec.lengths() {
            offsets.push(next);
            next += s;
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut link = |a: usize, b: usize| {
            adjacency[a].push(b);
            adjacency[b].push(a);
        };
        for (k, &s) in spec.lengths().iter().enumerate() {
            let first = offsets[k];
            link(0, first);
            for j in 1..s {
                link(first + j - 1, first + j);
            }
            link(first + s - 1, 1);
        }
        Self {
            vertices,
            offsets,
            lengths: spec.lengths().to_vec(),
            adjacency,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> VertexId {
        self.vertices[index]
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize> {
        match v {
            VertexId::C1 => Ok(0),
            VertexId::C2 => Ok(1),
            VertexId::Internal { path, pos } => {
                if path == 0
                    || path > self.lengths.len()
                    || pos == 0
                    || pos > self.lengths[path - 1]
                {
                    Err(Error::InvalidVertex(v))
                } else {
                    Ok(self.offsets[path - 1] + pos - 1)
                }
            }
        }
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    /// Single-source BFS distances; `u32::MAX` marks unreachable vertices
    /// (only possible when `allowed` masks part of the graph out).
    pub fn bfs(&self, source: usize, allowed: Option<&[bool]>) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == u32::MAX && allowed.map_or(true, |mask| mask[y]) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// Dense symmetric all-pairs distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut data = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                data[a * n + b] = f(a, b);
            }
        }
        Self { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.data[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.data[a * self.n..(a + 1) * self.n]
    }

    pub fn max_entry(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// All-pairs distances by breadth-first search on the materialized graph.
/// Independent of the closed form and used to cross-check it.
pub fn bfs_distance_matrix(spec: &GraphSpec) -> DistanceMatrix {
    let edges = EdgeList::new(spec);
    let rows: Vec<Vec<u32>> = (0..edges.len()).map(|s| edges.bfs(s, None)).collect();
    DistanceMatrix::from_fn(edges.len(), |a, b| rows[a][b])
}
