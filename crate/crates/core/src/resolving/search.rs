//! Certified exact search for minimum resolving sets.
//!
//! Sizes are tried in ascending order; within a size, subsets are visited in
//! lexicographic order over the dense vertex index, so the first size that
//! admits a resolving subset is the metric dimension and the witness list is
//! reproducible.

use serde::{Deserialize, Serialize};

use super::LandmarkSet;
use crate::theta::{ThetaGraph, VertexId};

pub const DEFAULT_WITNESS_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop collecting witnesses after this many (the count stays exact).
    pub witness_cap: Option<usize>,
    /// Give up above this subset size.
    pub max_size: Option<usize>,
    /// Visit one representative per orbit of equal-length path permutations.
    /// Keeps `beta` exact but thins the witness list.
    pub pruned: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            witness_cap: Some(DEFAULT_WITNESS_CAP),
            max_size: None,
            pruned: false,
        }
    }
}

impl SearchOptions {
    pub fn with_cap(cap: Option<usize>) -> Self {
        Self {
            witness_cap: cap,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaResult {
    pub beta: usize,
    /// Minimum resolving sets in canonical enumeration order, up to the cap.
    pub witnesses: Vec<LandmarkSet>,
    /// Exact number of minimum resolving sets visited (orbit representatives
    /// only in pruned mode).
    pub witness_count: u64,
    pub truncated: bool,
    pub subsets_examined: u64,
    pub pruned: bool,
}

/// Lexicographic `k`-subsets of `0..n`, yielded as sorted index slices.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: (0..k).collect(),
        started: false,
        done: k > n,
    }
}

impl Combinations {
    /// Advances to the next subset; `None` once exhausted. Lending-style to
    /// avoid an allocation per subset.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < self.n - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(&self.current);
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.next_subset().map(<[usize]>::to_vec)
    }
}

/// Distance rows packed for the inner loop.
struct Kernel<'g> {
    graph: &'g ThetaGraph,
    n: usize,
    rows: Vec<Vec<u128>>,
    bits: u32,
    /// `(path, pos)` per dense index; path 0 for centers.
    place: Vec<(usize, usize)>,
    /// Canonical paths `p` with `len(p) == len(p + 1)`.
    twin_runs: Vec<usize>,
}

impl<'g> Kernel<'g> {
    fn new(graph: &'g ThetaGraph) -> Self {
        let n = graph.n();
        let dist = graph.distances();
        let bits = 32 - (dist.max_entry() + 1).leading_zeros();
        let rows = (0..n)
            .map(|w| dist.row(w).iter().map(|&d| d as u128).collect())
            .collect();
        let place = graph
            .vertices()
            .iter()
            .map(|v| match *v {
                VertexId::Internal { path, pos } => (path, pos),
                _ => (0, 0),
            })
            .collect();
        let lengths = graph.spec().lengths();
        let twin_runs = (1..lengths.len())
            .filter(|&p| lengths[p - 1] == lengths[p])
            .collect();
        Self {
            graph,
            n,
            rows,
            bits: bits.max(1),
            place,
            twin_runs,
        }
    }

    fn packs(&self, k: usize) -> bool {
        k as u32 * self.bits <= 128
    }

    fn is_orbit_representative(&self, chosen: &[usize]) -> bool {
        if self.twin_runs.is_empty() {
            return true;
        }
        let positions = |path: usize| -> Vec<usize> {
            chosen
                .iter()
                .filter(|&&c| self.place[c].0 == path)
                .map(|&c| self.place[c].1)
                .collect()
        };
        self.twin_runs
            .iter()
            .all(|&p| positions(p) <= positions(p + 1))
    }

    fn distinct(scratch: &mut [u128]) -> bool {
        scratch.sort_unstable();
        scratch.windows(2).all(|w| w[0] != w[1])
    }

    /// Visits every `k`-subset in lexicographic order and reports the
    /// resolving ones to `found`; stops early when `found` returns `false`.
    fn scan(
        &self,
        k: usize,
        pruned: bool,
        examined: &mut u64,
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        if k == 0 || k > self.n {
            return;
        }
        if !self.packs(k) {
            self.scan_wide(k, pruned, examined, found);
            return;
        }
        let mut keys = vec![vec![0u128; self.n]; k + 1];
        let mut scratch = vec![0u128; self.n];
        let mut chosen = Vec::with_capacity(k);
        self.descend(
            0,
            k,
            pruned,
            &mut chosen,
            &mut keys,
            &mut scratch,
            examined,
            found,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        start: usize,
        k: usize,
        pruned: bool,
        chosen: &mut Vec<usize>,
        keys: &mut [Vec<u128>],
        scratch: &mut [u128],
        examined: &mut u64,
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let depth = chosen.len();
        if depth == k {
            if pruned && !self.is_orbit_representative(chosen) {
                return true;
            }
            *examined += 1;
            scratch.copy_from_slice(&keys[k]);
            if Self::distinct(scratch) {
                return found(chosen);
            }
            return true;
        }
        for c in start..=self.n - (k - depth) {
            let (lower, upper) = keys.split_at_mut(depth + 1);
            let (parent, child) = (&lower[depth], &mut upper[0]);
            let row = &self.rows[c];
            for v in 0..self.n {
                child[v] = (parent[v] << self.bits) | row[v];
            }
            chosen.push(c);
            let go_on = self.descend(c + 1, k, pruned, chosen, keys, scratch, examined, found);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    fn scan_wide(
        &self,
        k: usize,
        pruned: bool,
        examined: &mut u64,
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        let dist = self.graph.distances();
        let mut subsets = combinations(self.n, k);
        let mut reps: Vec<Vec<u32>> = vec![Vec::with_capacity(k); self.n];
        while let Some(chosen) = subsets.next_subset() {
            if pruned && !self.is_orbit_representative(chosen) {
                continue;
            }
            *examined += 1;
            for (v, rep) in reps.iter_mut().enumerate() {
                rep.clear();
                rep.extend(chosen.iter().map(|&w| dist.get(w, v)));
            }
            let mut sorted: Vec<&Vec<u32>> = reps.iter().collect();
            sorted.sort_unstable();
            if sorted.windows(2).all(|w| w[0] != w[1]) && !found(chosen) {
                return;
            }
        }
    }

    fn landmarks(&self, chosen: &[usize]) -> LandmarkSet {
        chosen.iter().map(|&c| self.graph.vertex(c)).collect()
    }
}

/// Exact metric dimension with the default options except the witness cap.
pub fn metric_dimension(graph: &ThetaGraph, witness_cap: Option<usize>) -> BetaResult {
    metric_dimension_bounded(graph, SearchOptions::with_cap(witness_cap))
        .expect("the full vertex set always resolves")
}

/// Exact search honouring `opts.max_size`; `None` means no resolving set of
/// size `<= max_size` exists.
pub fn metric_dimension_bounded(graph: &ThetaGraph, opts: SearchOptions) -> Option<BetaResult> {
    let kernel = Kernel::new(graph);
    let ceiling = opts.max_size.unwrap_or(kernel.n).min(kernel.n);
    let mut examined = 0u64;
    for k in 1..=ceiling {
        let mut witnesses = Vec::new();
        let mut count = 0u64;
        kernel.scan(k, opts.pruned, &mut examined, &mut |chosen| {
            count += 1;
            if opts.witness_cap.map_or(true, |cap| witnesses.len() < cap) {
                witnesses.push(kernel.landmarks(chosen));
            }
            true
        });
        if count > 0 {
            return Some(BetaResult {
                beta: k,
                truncated: (witnesses.len() as u64) < count,
                witnesses,
                witness_count: count,
                subsets_examined: examined,
                pruned: opts.pruned,
            });
        }
    }
    None
}

/// First resolving set of size exactly `k` in canonical order.
pub fn find_resolving_set_of_size(graph: &ThetaGraph, k: usize) -> Option<LandmarkSet> {
    let kernel = Kernel::new(graph);
    let mut hit = None;
    let mut examined = 0;
    kernel.scan(k, false, &mut examined, &mut |chosen| {
        hit = Some(kernel.landmarks(chosen));
        false
    });
    hit
}

/// Exhaustive certificate that no `k`-subset resolves the graph (hence no
/// smaller one does either, since supersets of resolving sets resolve).
pub fn certify_no_resolving_set(graph: &ThetaGraph, k: usize) -> bool {
    find_resolving_set_of_size(graph, k).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolving::verify_resolving;

    fn g(l: &[usize]) -> ThetaGraph {
        ThetaGraph::from_lengths(l).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<usize>> = combinations(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(5, 0).count(), 1);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(combinations(30, 3).count(), 4060);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(metric_dimension(&g(&[1, 2, 3]), None).beta, 2);
        assert_eq!(metric_dimension(&g(&[1, 1, 1]), None).beta, 3);
        assert_eq!(metric_dimension(&g(&[2, 2, 2, 4]), None).beta, 4);
    }

    #[test]
    fn witnesses_verify_and_are_ordered() {
        let graph = g(&[2, 3, 3]);
        let r = metric_dimension(&graph, None);
        assert!(!r.truncated);
        assert_eq!(r.witness_count as usize, r.witnesses.len());
        for w in &r.witnesses {
            assert_eq!(w.len(), r.beta);
            assert!(verify_resolving(&graph, w).unwrap().resolved);
        }
        let idx: Vec<Vec<usize>> = r
            .witnesses
            .iter()
            .map(|w| w.indices(&graph).unwrap())
            .collect();
        assert!(idx.windows(2).all(|p| p[0] < p[1]));
        assert!(certify_no_resolving_set(&graph, r.beta - 1));
    }

    #[test]
    fn cap_truncates_but_counts() {
        let graph = g(&[3, 3, 3, 3]);
        let full = metric_dimension(&graph, None);
        let capped = metric_dimension(&graph, Some(2));
        assert_eq!(capped.witnesses.len(), 2);
        assert_eq!(capped.witness_count, full.witness_count);
        assert!(capped.truncated);
        assert_eq!(&full.witnesses[..2], &capped.witnesses[..]);
    }

    #[test]
    fn bounded_search_gives_up() {
        let graph = g(&[1, 1, 1, 1]);
        let opts = SearchOptions {
            max_size: Some(3),
            ..SearchOptions::default()
        };
        assert!(metric_dimension_bounded(&graph, opts).is_none());
    }

    #[test]
    fn pruned_mode_agrees_on_beta() {
        for l in [
            vec![2, 2, 2],
            vec![1, 1, 3],
            vec![3, 3, 3, 3],
            vec![1, 2, 2, 5],
        ] {
            let graph = g(&l);
            let full = metric_dimension(&graph, None);
            let pruned = metric_dimension_bounded(
                &graph,
                SearchOptions {
                    pruned: true,
                    witness_cap: None,
                    max_size: None,
                },
            )
            .unwrap();
            assert_eq!(full.beta, pruned.beta, "{l:?}");
            assert!(pruned.witness_count <= full.witness_count);
            assert!(pruned.witnesses.iter().all(|w| full.witnesses.contains(w)));
        }
    }

    #[test]
    fn wide_keys_agree_with_packed() {
        let graph = g(&[2, 3]);
        let kernel = Kernel::new(&graph);
        for k in 1..=3 {
            let mut packed = Vec::new();
            let mut wide = Vec::new();
            let mut e = 0;
            kernel.scan(k, false, &mut e, &mut |c| {
                packed.push(c.to_vec());
                true
            });
            kernel.scan_wide(k, false, &mut e, &mut |c| {
                wide.push(c.to_vec());
                true
            });
            assert_eq!(packed, wide);
        }
    }
}
