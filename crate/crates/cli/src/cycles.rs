//! Per-cycle checks of the two-landmark resolving characterizations.

use serde::{Deserialize, Serialize};
use thetamd_core::cycle::{
    as_theta, cycle_antipodal_structure, cycle_double_place_criterion, cycle_metric_dimension,
    cycle_pair_mmd_obstruction, cycle_pair_resolves, CycleSpec,
};
use thetamd_core::{metric_dimension, ThetaGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRow {
    pub n: usize,
    pub beta: usize,
    /// β of the same cycle built as a two-path theta graph (n >= 4).
    pub beta_as_theta: Option<usize>,
    pub pairs: usize,
    pub non_resolving_pairs: usize,
    /// Each vertex has one antipode and one vertex pair per smaller radius (even n).
    pub antipodes_ok: Option<bool>,
    /// Non-resolving iff each landmark is the other's only MMD vertex.
    pub mmd_characterization_ok: bool,
    /// Odd cycles are resolved by every pair.
    pub odd_all_resolve: Option<bool>,
    /// Non-resolving iff three vertices sit at equal distance from both landmarks (n >= 6).
    pub double_place_ok: Option<bool>,
    /// Pairs on which the equal-distance test disagrees with resolution.
    pub double_place_mismatches: usize,
}

fn antipodes_hold(n: usize) -> bool {
    let c = CycleSpec::new(n).expect("n >= 3");
    (0..n).all(|u| {
        let Ok(s) = cycle_antipodal_structure(n, u) else {
            return false;
        };
        let far: Vec<usize> = (0..n).filter(|&v| c.distance(u, v) == n / 2).collect();
        let radii_ok = (1..n / 2).all(|i| {
            let at: Vec<usize> = (0..n).filter(|&v| c.distance(u, v) == i).collect();
            at == [s.equidistant_pairs[i - 1].0, s.equidistant_pairs[i - 1].1]
        });
        far == [s.antipode] && radii_ok
    })
}

pub fn check_cycle(n: usize) -> CycleRow {
    let mut pairs = 0;
    let mut bad = 0;
    let mut mmd_ok = true;
    let mut mismatches = 0;
    for a in 0..n {
        for b in a + 1..n {
            pairs += 1;
            let resolves = cycle_pair_resolves(n, a, b).expect("valid pair");
            bad += usize::from(!resolves);
            mmd_ok &= cycle_pair_mmd_obstruction(n, a, b).expect("valid pair") == !resolves;
            if n >= 6 {
                let blocked = cycle_double_place_criterion(n, a, b).expect("n >= 6");
                mismatches += usize::from(blocked == resolves);
            }
        }
    }
    CycleRow {
        n,
        beta: cycle_metric_dimension(n).expect("n >= 3"),
        beta_as_theta: as_theta(n)
            .ok()
            .map(|s| metric_dimension(&ThetaGraph::new(s), Some(1)).beta),
        pairs,
        non_resolving_pairs: bad,
        antipodes_ok: (n % 2 == 0).then(|| antipodes_hold(n)),
        mmd_characterization_ok: mmd_ok,
        odd_all_resolve: (n % 2 == 1).then_some(bad == 0),
        double_place_ok: (n >= 6).then_some(mismatches == 0),
        double_place_mismatches: mismatches,
    }
}

pub fn cycle_table(min_n: usize, max_n: usize) -> Vec<CycleRow> {
    (min_n.max(3)..=max_n).map(check_cycle).collect()
}
