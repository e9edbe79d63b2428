//! Cycles `C_n` with vertices `0..n` in cyclic order.
//!
//! A cycle is also the degenerate theta graph `Θ(s1, s2)` with
//! `s1 + s2 + 2 = n`; [`as_theta`] and [`theta_vertex`] give that view so the
//! two representations can be checked against each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resolving::combinations;
use crate::theta::{GraphSpec, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpec {
    n: usize,
}

impl CycleSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooSmall { n, min: 3 });
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        let gap = a.abs_diff(b) % self.n;
        gap.min(self.n - gap)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::CycleVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Vertices mutually maximally distant from `w`.
    pub fn mmd(&self, w: usize) -> Result<Vec<usize>> {
        self.check(w)?;
        let n = self.n;
        let md = |u: usize, from: usize| {
            let d = self.distance(u, from);
            self.distance((u + 1) % n, from) <= d && self.distance((u + n - 1) % n, from) <= d
        };
        Ok((0..n).filter(|&u| u != w && md(u, w) && md(w, u)).collect())
    }

    pub fn representation(&self, w1: usize, w2: usize, v: usize) -> (usize, usize) {
        (self.distance(w1, v), self.distance(w2, v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AntipodalStructure {
    pub antipode: usize,
    /// For each radius `1 <= i < n/2`, the two vertices at distance `i` from `u`.
    pub equidistant_pairs: Vec<(usize, usize)>,
}

/// In an even cycle every vertex has exactly one antipode and, at every
/// smaller radius, exactly one pair of vertices.
pub fn cycle_antipodal_structure(n: usize, u: usize) -> Result<AntipodalStructure> {
    let cycle = CycleSpec::new(n)?;
    if n % 2 == 1 {
        return Err(Error::OddCycle(n));
    }
    cycle.check(u)?;
    let equidistant_pairs = (1..n / 2)
        .map(|i| {
            let (a, b) = ((u + i) % n, (u + n - i) % n);
            (a.min(b), a.max(b))
        })
        .collect();
    Ok(AntipodalStructure {
        antipode: (u + n / 2) % n,
        equidistant_pairs,
    })
}

/// Whether `{w1, w2}` resolves `C_n`, by comparing all vector representations.
pub fn cycle_pair_resolves(n: usize, w1: usize, w2: usize) -> Result<bool> {
    let cycle = CycleSpec::new(n)?;
    cycle.check(w1)?;
    cycle.check(w2)?;
    if w1 == w2 {
        return Err(Error::CoincidentLandmarks);
    }
    let mut reps: Vec<(usize, usize)> = (0..n).map(|v| cycle.representation(w1, w2, v)).collect();
    reps.sort_unstable();
    Ok(reps.windows(2).all(|p| p[0] != p[1]))
}

/// The MMD obstruction: each landmark's MMD set is exactly the other one.
pub fn cycle_pair_mmd_obstruction(n: usize, w1: usize, w2: usize) -> Result<bool> {
    let cycle = CycleSpec::new(n)?;
    Ok(cycle.mmd(w1)? == [w2] && cycle.mmd(w2)? == [w1])
}

/// Whether three distinct vertices have representations `(i, i)`, `(j, j)`,
/// `(k, k)`, i.e. lie at equal distance from both landmarks.
pub fn cycle_double_place_criterion(n: usize, w1: usize, w2: usize) -> Result<bool> {
    if n < 6 {
        return Err(Error::CycleTooSmall { n, min: 6 });
    }
    Ok(equidistant_vertices(n, w1, w2)?.len() >= 3)
}

/// Vertices at equal distance from `w1` and `w2`.
pub fn equidistant_vertices(n: usize, w1: usize, w2: usize) -> Result<Vec<usize>> {
    let cycle = CycleSpec::new(n)?;
    cycle.check(w1)?;
    cycle.check(w2)?;
    if w1 == w2 {
        return Err(Error::CoincidentLandmarks);
    }
    Ok((0..n)
        .filter(|&v| cycle.distance(w1, v) == cycle.distance(w2, v))
        .collect())
}

/// Smallest `k` such that some `k`-subset resolves `C_n`, by exhaustive search.
pub fn cycle_metric_dimension(n: usize) -> Result<usize> {
    let cycle = CycleSpec::new(n)?;
    for k in 1..=n {
        let mut subsets = combinations(n, k);
        while let Some(w) = subsets.next_subset() {
            let mut reps: Vec<Vec<usize>> = (0..n)
                .map(|v| w.iter().map(|&x| cycle.distance(x, v)).collect())
                .collect();
            reps.sort_unstable();
            if reps.windows(2).all(|p| p[0] != p[1]) {
                return Ok(k);
            }
        }
    }
    unreachable!("the full vertex set resolves")
}

/// `C_n` as `Θ(s1, s2)` with `s1 = ⌊(n−2)/2⌋`; needs `n >= 4`.
pub fn as_theta(n: usize) -> Result<GraphSpec> {
    if n < 4 {
        return Err(Error::CycleTooSmall { n, min: 4 });
    }
    let s1 = (n - 2) / 2;
    GraphSpec::new(&[s1, n - 2 - s1])
}

/// Theta-graph vertex for cycle index `idx`: `0 = c1`, then along path 1 to
/// `c2 = s1 + 1`, then back along path 2.
pub fn theta_vertex(spec: &GraphSpec, idx: usize) -> VertexId {
    let s1 = spec.length(1);
    let s2 = spec.length(2);
    match idx {
        0 => VertexId::C1,
        i if i <= s1 => VertexId::v(1, i),
        i if i == s1 + 1 => VertexId::C2,
        i => VertexId::v(2, s2 + 1 - (i - s1 - 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::ThetaGraph;

    #[test]
    fn antipodal_examples() {
        let s = cycle_antipodal_structure(6, 0).unwrap();
        assert_eq!(s.antipode, 3);
        assert_eq!(s.equidistant_pairs, vec![(1, 5), (2, 4)]);
        assert_eq!(cycle_antipodal_structure(4, 2).unwrap().antipode, 0);
        assert_eq!(cycle_antipodal_structure(7, 0), Err(Error::OddCycle(7)));
    }

    #[test]
    fn antipode_unique_in_c10() {
        let c = CycleSpec::new(10).unwrap();
        for u in 0..10 {
            let far: Vec<usize> = (0..10).filter(|&v| c.distance(u, v) == 5).collect();
            assert_eq!(
                far,
                vec![cycle_antipodal_structure(10, u).unwrap().antipode]
            );
        }
    }

    #[test]
    fn pair_examples() {
        assert!(!cycle_pair_resolves(6, 0, 3).unwrap());
        assert!(cycle_pair_mmd_obstruction(6, 0, 3).unwrap());
        for a in 0..7 {
            for b in 0..7 {
                if a != b {
                    assert!(cycle_pair_resolves(7, a, b).unwrap());
                }
            }
        }
        assert!(cycle_pair_resolves(8, 0, 1).unwrap());
        assert_eq!(
            cycle_pair_resolves(8, 2, 2),
            Err(Error::CoincidentLandmarks)
        );
    }

    #[test]
    fn double_place_counts() {
        // a cycle never has more than two vertices equidistant from two landmarks
        assert_eq!(equidistant_vertices(8, 0, 4).unwrap(), vec![2, 6]);
        assert!(equidistant_vertices(6, 0, 3).unwrap().is_empty());
        assert!(!cycle_double_place_criterion(8, 0, 1).unwrap());
        assert!(!cycle_double_place_criterion(7, 0, 3).unwrap());
        assert!(cycle_double_place_criterion(5, 0, 1).is_err());
    }

    #[test]
    fn theta_view_matches_native_distances() {
        for n in 4..=12 {
            let spec = as_theta(n).unwrap();
            let graph = ThetaGraph::new(spec.clone());
            let c = CycleSpec::new(n).unwrap();
            for a in 0..n {
                for b in 0..n {
                    let d = graph
                        .distance(theta_vertex(&spec, a), theta_vertex(&spec, b))
                        .unwrap();
                    assert_eq!(d as usize, c.distance(a, b));
                }
            }
        }
        assert!(as_theta(3).is_err());
    }

    #[test]
    fn small_cycles_have_dimension_two() {
        for n in 3..=10 {
            assert_eq!(cycle_metric_dimension(n).unwrap(), 2);
        }
    }
}
