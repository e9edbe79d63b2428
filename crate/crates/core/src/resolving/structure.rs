//! Structural analyzers: mutually maximally distant sets, identical-path
//! bundles, twin-path obstructions and two-landmark basis conditions.

use serde::{Deserialize, Serialize};

use super::{verify_resolving, LandmarkSet};
use crate::error::{Error, Result};
use crate::theta::{GraphSpec, ThetaGraph, VertexId};

/// Vertices of the cycle `C_{i,l}` induced by canonical paths `i` and `l`.
pub fn cycle_restriction(spec: &GraphSpec, i: usize, l: usize) -> Result<Vec<VertexId>> {
    if i == l || i == 0 || l == 0 || i > spec.m() || l > spec.m() {
        return Err(Error::InvalidPathPair(i, l));
    }
    let mut out = vec![VertexId::C1, VertexId::C2];
    for p in [i.min(l), i.max(l)] {
        out.extend((1..=spec.length(p)).map(|pos| VertexId::v(p, pos)));
    }
    Ok(out)
}

/// `M(v)`: vertices mutually maximally distant from `v`.
///
/// With a restriction the test runs on the induced subgraph: distances and
/// neighbourhoods are both taken inside it. The result is in canonical order.
pub fn mmd_set(
    graph: &ThetaGraph,
    v: VertexId,
    restriction: Option<&[VertexId]>,
) -> Result<Vec<VertexId>> {
    let edges = graph.edges();
    let target = graph.index_of(v)?;
    let n = graph.n();
    let mask: Option<Vec<bool>> = match restriction {
        None => None,
        Some(members) => {
            let mut mask = vec![false; n];
            for &u in members {
                mask[graph.index_of(u)?] = true;
            }
            if !mask[target] {
                return Err(Error::InvalidVertex(v));
            }
            Some(mask)
        }
    };
    let inside = |x: usize| mask.as_ref().map_or(true, |m| m[x]);
    // one BFS per vertex in scope; graphs here are tiny
    let dist: Vec<Vec<u32>> = (0..n)
        .map(|s| {
            if inside(s) {
                edges.bfs(s, mask.as_deref())
            } else {
                Vec::new()
            }
        })
        .collect();
    let maximally_distant = |u: usize, from: usize| {
        let d = dist[from][u];
        d != u32::MAX
            && edges
                .neighbors(u)
                .iter()
                .filter(|&&w| inside(w))
                .all(|&w| dist[from][w] <= d)
    };
    Ok((0..n)
        .filter(|&u| u != target && inside(u))
        .filter(|&u| maximally_distant(u, target) && maximally_distant(target, u))
        .map(|u| graph.vertex(u))
        .collect())
}

/// A maximal bundle of equal-length internally disjoint paths between two
/// vertices whose internal vertices all have degree 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IPEntry {
    pub u: VertexId,
    pub v: VertexId,
    /// Internal vertices per path (paths have `s + 1` edges).
    pub s: usize,
    pub count: usize,
}

/// In a theta graph the only such bundles join the two centers: one entry
/// per repeated length, with its full multiplicity.
pub fn identical_path_set(spec: &GraphSpec) -> Vec<IPEntry> {
    let mut out = Vec::new();
    let lengths = spec.lengths();
    let mut k = 0;
    while k < lengths.len() {
        let run = lengths[k..]
            .iter()
            .take_while(|&&s| s == lengths[k])
            .count();
        if run >= 2 {
            out.push(IPEntry {
                u: VertexId::C1,
                v: VertexId::C2,
                s: lengths[k],
                count: run,
            });
        }
        k += run;
    }
    out
}

/// `Σ (count − 1)` over the identical-path set.
pub fn ip_lower_bound(spec: &GraphSpec) -> usize {
    identical_path_set(spec).iter().map(|e| e.count - 1).sum()
}

/// Whether each bundle of `count` equal paths has a landmark inside at least
/// `count − 1` of them.
pub fn check_ip_internal_vertex_condition(spec: &GraphSpec, landmarks: &LandmarkSet) -> bool {
    identical_path_set(spec).iter().all(|entry| {
        let hit = (1..=spec.m())
            .filter(|&p| spec.length(p) == entry.s && landmarks.hits_path(p))
            .count();
        hit + 1 >= entry.count
    })
}

/// Two equal-length paths with no landmark inside are swapped by a graph
/// automorphism fixing every landmark, so their first vertices collide.
/// Returns that forced collision for the first such pair of paths.
pub fn check_twin_path_lemma(
    spec: &GraphSpec,
    landmarks: &LandmarkSet,
) -> Option<(VertexId, VertexId)> {
    let free: Vec<usize> = (1..=spec.m())
        .filter(|&p| !landmarks.hits_path(p))
        .collect();
    free.iter().enumerate().find_map(|(k, &a)| {
        free[k + 1..]
            .iter()
            .find(|&&b| spec.length(a) == spec.length(b))
            .map(|&b| (VertexId::v(a, 1), VertexId::v(b, 1)))
    })
}

/// True when paths `i` and `l` are both landmark-free and each has more than
/// `d(c1, c2) + 2` vertices; such a landmark set cannot resolve.
pub fn check_generalized_twin_lemma(
    spec: &GraphSpec,
    pair: (usize, usize),
    landmarks: &LandmarkSet,
) -> Result<bool> {
    let (i, l) = pair;
    if i == l || i == 0 || l == 0 || i > spec.m() || l > spec.m() {
        return Err(Error::InvalidPathPair(i, l));
    }
    let center_gap = spec.length(1) + 1;
    let long_enough = |p: usize| center_gap + 2 < spec.length(p) + 2;
    Ok(!landmarks.hits_path(i) && !landmarks.hits_path(l) && long_enough(i) && long_enough(l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhullerReport {
    pub shortest_path_count: u64,
    pub unique_shortest_path: bool,
    /// Both landmarks have degree at most 3.
    pub degrees_ok: bool,
    /// Every vertex strictly between the landmarks on a shortest path has degree at most 5.
    pub interior_degrees_ok: bool,
}

/// Necessary conditions satisfied by any two-element metric basis.
pub fn khuller_conditions(graph: &ThetaGraph, basis: &LandmarkSet) -> Result<KhullerReport> {
    if basis.len() != 2 {
        return Err(Error::LandmarkCount {
            expected: 2,
            actual: basis.len(),
        });
    }
    if !verify_resolving(graph, basis)?.resolved {
        return Err(Error::NotResolving);
    }
    let edges = graph.edges();
    let a = graph.index_of(basis.vertices()[0])?;
    let b = graph.index_of(basis.vertices()[1])?;
    let from_a = graph.distances().row(a);
    let from_b = graph.distances().row(b);
    let target = from_a[b];

    // shortest-path counts over the BFS layers of `a`
    let mut order: Vec<usize> = (0..graph.n()).collect();
    order.sort_by_key(|&x| from_a[x]);
    let mut paths = vec![0u64; graph.n()];
    paths[a] = 1;
    for &x in &order {
        if x == a {
            continue;
        }
        paths[x] = edges
            .neighbors(x)
            .iter()
            .filter(|&&y| from_a[y] + 1 == from_a[x])
            .map(|&y| paths[y])
            .sum();
    }
    let interior_ok = (0..graph.n())
        .filter(|&x| x != a && x != b && from_a[x] + from_b[x] == target)
        .all(|x| edges.degree(x) <= 5);
    Ok(KhullerReport {
        shortest_path_count: paths[b],
        unique_shortest_path: paths[b] == 1,
        degrees_ok: edges.degree(a) <= 3 && edges.degree(b) <= 3,
        interior_degrees_ok: interior_ok,
    })
}

/// 1 when `d(v, c1) <= d(v, c2)` (ties go to `c1`), else 2.
pub fn closer_center(graph: &ThetaGraph, v: VertexId) -> Result<u8> {
    let to_c1 = graph.distance(v, VertexId::C1)?;
    let to_c2 = graph.distance(v, VertexId::C2)?;
    Ok(if to_c1 <= to_c2 { 1 } else { 2 })
}
