//! Theorem registry: closed-form predictions of β with explicit witnesses.
//!
//! Each registered result is a pure predicate on the sorted length multiset
//! plus a predictor. Exact results give a single value, bound results an
//! interval; a bound result only constrains one side, and the other side is
//! filled from the general `max(2, m − 3) <= β <= m` range.

mod witness;

use serde::{Deserialize, Serialize};

pub use witness::{
    construct_consecutive, construct_distinct, construct_s1_pow_m1_s2, construct_s1_pow_m2_s2_s3,
    construct_s1_s2_pow_m1, construct_uniform, construct_upper_bound_general,
    is_one_different_exception, theta3_witness, theta4_witness, uniform_beta, Witness,
};

use crate::error::Result;
use crate::resolving::{ip_lower_bound, LandmarkSet};
use crate::theta::{GraphSpec, VertexId};
use witness::{
    is_consecutive, is_distinct, is_s1_pow_m1_s2, is_s1_pow_m2_s2_s3, is_s1_s2_pow_m1, shortest_run,
};

/// Stable theorem identifiers used in reports.
pub mod ids {
    pub const TOTAL_BOUND: &str = "thm:TotalBound";
    pub const UPPER_BOUND: &str = "thm:UpperBoundGTG";
    pub const LOWER_BOUND: &str = "thm:LowerBoundGTG";
    pub const IDENTICAL_PATHS: &str = "thm:IdenticalPathsTheorem";
    pub const UNIFORM_LOWER: &str = "cor:LowerBoundUniform";
    pub const TWO_BUNDLES: &str = "cor:s1m1s2m2";
    pub const SHORTEST_BUNDLE: &str = "cor:biggerThanShortestPaths";
    pub const ALL_BUT_ONE: &str = "cor:sallbuts2";
    pub const S1_POW_M2: &str = "thm:s^m-2,s2,s3";
    pub const ONE_DIFFERENT: &str = "thm:onedifferents1>s2";
    pub const ONE_SHORT: &str = "thm:Boundfors2<s1OneDifferent";
    pub const DISTINCT: &str = "thm:Distinct,si";
    pub const CONSECUTIVE: &str = "thm:Consecutive";
    pub const GAP_TWO: &str = "cor:DistinctGapTwo";
    pub const UNIFORM_ONES: &str = "thm:UGTG1^m";
    pub const UNIFORM_TWOS: &str = "thm:UGTG2^m";
    pub const UNIFORM: &str = "thm:Uniform Theta Proof";
    pub const GTG3_DIFF_PARITY: &str = "thm:GTG3DiffParitity";
    pub const GTG3_SAME_PARITY: &str = "thm:GTG3SameParitity";
    pub const GTG3_EXCEPTIONS: &str = "thm:GTG3Exceptions";
    pub const GTG3: &str = "thm:GTGEndResult";
    pub const MD4_ONE_SHORT: &str = "thm:MD43same1dif";
    pub const MD4_GAP: &str = "thm:4,s1+1<s2sup";
    pub const MD4_S2_EQ_S3_NEAR: &str = "thm:4,s1+1=s2=s3,s4-s1in{2,3}";
    pub const MD4_S2_EQ_S3_FAR: &str = "thm:distinct4consecutive";
    pub const MD4_S2_LT_S3: &str = "thm:4,s1+1=s2<s3";
    pub const MD4: &str = "thm:MD4Summary";
    pub const CYCLE: &str = "cycle";
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PredictionKind {
    Exact(usize),
    Interval(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaPrediction {
    pub kind: PredictionKind,
    pub theorem_id: &'static str,
    /// Landmark set of size [`BetaPrediction::hi`], when the result is constructive.
    pub witness: Option<LandmarkSet>,
    /// Result the witness comes from, when it differs from `theorem_id`.
    pub witness_source: Option<&'static str>,
}

impl BetaPrediction {
    fn exact(value: usize, theorem_id: &'static str, witness: Option<LandmarkSet>) -> Self {
        Self {
            kind: PredictionKind::Exact(value),
            theorem_id,
            witness,
            witness_source: None,
        }
    }

    fn interval(
        lo: usize,
        hi: usize,
        theorem_id: &'static str,
        witness: Option<LandmarkSet>,
    ) -> Self {
        let kind = if lo == hi {
            PredictionKind::Exact(lo)
        } else {
            PredictionKind::Interval(lo, hi)
        };
        Self {
            kind,
            theorem_id,
            witness,
            witness_source: None,
        }
    }

    fn sourced(mut self, source: &'static str) -> Self {
        if source != self.theorem_id {
            self.witness_source = Some(source);
        }
        self
    }

    pub fn lo(&self) -> usize {
        match self.kind {
            PredictionKind::Exact(v) => v,
            PredictionKind::Interval(lo, _) => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match self.kind {
            PredictionKind::Exact(v) => v,
            PredictionKind::Interval(_, hi) => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.kind, PredictionKind::Exact(_))
    }

    pub fn contains(&self, beta: usize) -> bool {
        (self.lo()..=self.hi()).contains(&beta)
    }
}

/// Outcome of evaluating one registered result against a spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremApplicability {
    pub theorem_id: &'static str,
    pub predicate: &'static str,
    pub matched: bool,
    /// Present iff `matched`.
    pub prediction: Option<BetaPrediction>,
    /// Set when the predicate matched but the witness formula failed.
    pub construction_error: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strength {
    Exact,
    Bound,
}

struct Theorem {
    id: &'static str,
    predicate: &'static str,
    strength: Strength,
    applies: fn(&GraphSpec) -> bool,
    predict: fn(&GraphSpec) -> Result<BetaPrediction>,
}

fn general_lo(spec: &GraphSpec) -> usize {
    spec.m().saturating_sub(3).max(2)
}

fn exact_from(witness: Witness, id: &'static str) -> BetaPrediction {
    BetaPrediction::exact(witness.beta, id, Some(witness.landmarks)).sourced(witness.source)
}

/// Exact β of a multiplicity-3 spec with its witness.
pub fn construct_theta3(spec: &GraphSpec) -> Result<BetaPrediction> {
    theta3_witness(spec).map(|w| exact_from(w, ids::GTG3))
}

/// Exact β of a multiplicity-4 spec with its witness.
pub fn construct_theta4(spec: &GraphSpec) -> Result<BetaPrediction> {
    theta4_witness(spec).map(|w| exact_from(w, ids::MD4))
}

fn cycle_witness(_: &GraphSpec) -> LandmarkSet {
    LandmarkSet::new(vec![VertexId::C1, VertexId::v(1, 1)]).expect("distinct")
}

fn four(spec: &GraphSpec) -> Option<(usize, usize, usize, usize)> {
    match *spec.lengths() {
        [a, b, c, d] => Some((a, b, c, d)),
        _ => None,
    }
}

/// Registry in dispatch priority order: within each strength the first
/// match wins.
static REGISTRY: &[Theorem] = &[
    Theorem {
        id: ids::CYCLE,
        predicate: "m = 2 (the cycle C_{s1+s2+2})",
        strength: Strength::Exact,
        applies: |s| s.m() == 2,
        predict: |s| Ok(BetaPrediction::exact(2, ids::CYCLE, Some(cycle_witness(s)))),
    },
    Theorem {
        id: ids::GTG3,
        predicate: "m = 3",
        strength: Strength::Exact,
        applies: |s| s.m() == 3,
        predict: construct_theta3,
    },
    Theorem {
        id: ids::ONE_DIFFERENT,
        predicate: "m >= 4, Θ(s1^(m-1), s2) with s2 > s1",
        strength: Strength::Exact,
        applies: |s| s.m() >= 4 && is_s1_pow_m1_s2(s),
        predict: |s| {
            let beta = if is_one_different_exception(s) {
                s.m()
            } else {
                s.m() - 1
            };
            let w = construct_s1_pow_m1_s2(s)?;
            let source = if is_one_different_exception(s) {
                ids::UPPER_BOUND
            } else {
                ids::ONE_DIFFERENT
            };
            Ok(BetaPrediction::exact(beta, ids::ONE_DIFFERENT, Some(w)).sourced(source))
        },
    },
    Theorem {
        id: ids::UNIFORM_ONES,
        predicate: "Θ(1^m), m >= 3",
        strength: Strength::Exact,
        applies: |s| s.m() >= 3 && s.is_uniform() && s.length(1) == 1,
        predict: |s| {
            Ok(BetaPrediction::exact(
                s.m(),
                ids::UNIFORM_ONES,
                Some(construct_upper_bound_general(s)?),
            )
            .sourced(ids::UPPER_BOUND))
        },
    },
    Theorem {
        id: ids::UNIFORM_TWOS,
        predicate: "Θ(2^m), m >= 3",
        strength: Strength::Exact,
        applies: |s| s.m() >= 3 && s.is_uniform() && s.length(1) == 2,
        predict: |s| {
            let beta = if s.m() <= 4 { s.m() } else { s.m() - 1 };
            let w = construct_uniform(s)?;
            let source = if s.m() <= 4 {
                ids::UPPER_BOUND
            } else {
                ids::UNIFORM_TWOS
            };
            Ok(BetaPrediction::exact(beta, ids::UNIFORM_TWOS, Some(w)).sourced(source))
        },
    },
    Theorem {
        id: ids::UNIFORM,
        predicate: "Θ(s^m), m >= 3",
        strength: Strength::Exact,
        applies: |s| s.m() >= 3 && s.is_uniform(),
        predict: |s| {
            let beta = uniform_beta(s.length(1), s.m());
            let source = if beta == s.m() {
                ids::UPPER_BOUND
            } else {
                ids::UNIFORM
            };
            Ok(
                BetaPrediction::exact(beta, ids::UNIFORM, Some(construct_uniform(s)?))
                    .sourced(source),
            )
        },
    },
    Theorem {
        id: ids::S1_POW_M2,
        predicate: "m >= 4, Θ(s1^(m-2), s2, s3) with s1 < s2 <= s3",
        strength: Strength::Exact,
        applies: is_s1_pow_m2_s2_s3,
        predict: |s| {
            Ok(BetaPrediction::exact(
                s.m() - 1,
                ids::S1_POW_M2,
                Some(construct_s1_pow_m2_s2_s3(s)?),
            ))
        },
    },
    Theorem {
        id: ids::MD4_ONE_SHORT,
        predicate: "m = 4, s1 < s2 = s3 = s4",
        strength: Strength::Exact,
        applies: |s| four(s).is_some_and(|(a, b, c, d)| a < b && b == c && c == d),
        predict: |s| {
            Ok(BetaPrediction::exact(
                3,
                ids::MD4_ONE_SHORT,
                Some(construct_s1_s2_pow_m1(s)?),
            ))
        },
    },
    Theorem {
        id: ids::MD4_GAP,
        predicate: "m = 4, s1 + 1 < s2",
        strength: Strength::Exact,
        applies: |s| four(s).is_some_and(|(a, b, _, _)| a + 1 < b),
        predict: |s| construct_theta4(s).map(|p| relabel(p, ids::MD4_GAP)),
    },
    Theorem {
        id: ids::MD4_S2_EQ_S3_NEAR,
        predicate: "m = 4, s1 + 1 = s2 = s3, s4 - s1 in {2, 3}",
        strength: Strength::Exact,
        applies: |s| {
            four(s).is_some_and(|(a, b, c, d)| b == a + 1 && b == c && (d == a + 2 || d == a + 3))
        },
        predict: |s| construct_theta4(s).map(|p| relabel(p, ids::MD4_S2_EQ_S3_NEAR)),
    },
    Theorem {
        id: ids::MD4_S2_EQ_S3_FAR,
        predicate: "m = 4, s1 + 1 = s2 = s3, s4 >= s1 + 4",
        strength: Strength::Exact,
        applies: |s| four(s).is_some_and(|(a, b, c, d)| b == a + 1 && b == c && d >= a + 4),
        predict: |s| construct_theta4(s).map(|p| relabel(p, ids::MD4_S2_EQ_S3_FAR)),
    },
    Theorem {
        id: ids::MD4_S2_LT_S3,
        predicate: "m = 4, s1 + 1 = s2 < s3 <= s4",
        strength: Strength::Exact,
        applies: |s| four(s).is_some_and(|(a, b, c, _)| b == a + 1 && b < c),
        predict: |s| construct_theta4(s).map(|p| relabel(p, ids::MD4_S2_LT_S3)),
    },
    Theorem {
        id: ids::MD4,
        predicate: "m = 4",
        strength: Strength::Exact,
        applies: |s| s.m() == 4,
        predict: construct_theta4,
    },
    Theorem {
        id: ids::CONSECUTIVE,
        predicate: "m > 6, s(i+1) = si + 1",
        strength: Strength::Exact,
        applies: |s| s.m() > 6 && is_consecutive(s),
        predict: |s| {
            Ok(BetaPrediction::exact(
                s.m() - 3,
                ids::CONSECUTIVE,
                Some(construct_consecutive(s)?),
            ))
        },
    },
    Theorem {
        id: ids::GAP_TWO,
        predicate: "m > 5, |si - sj| >= 2 for all i != j",
        strength: Strength::Exact,
        applies: |s| s.m() > 5 && s.lengths().windows(2).all(|w| w[1] >= w[0] + 2),
        predict: |s| {
            Ok(
                BetaPrediction::exact(s.m() - 2, ids::GAP_TWO, Some(construct_distinct(s)?))
                    .sourced(ids::DISTINCT),
            )
        },
    },
    Theorem {
        id: ids::ONE_SHORT,
        predicate: "m >= 4, Θ(s1, s2^(m-1)) with s1 < s2",
        strength: Strength::Bound,
        applies: |s| s.m() >= 4 && is_s1_s2_pow_m1(s),
        predict: |s| {
            Ok(BetaPrediction::interval(
                s.m() - 2,
                s.m() - 1,
                ids::ONE_SHORT,
                Some(construct_s1_s2_pow_m1(s)?),
            ))
        },
    },
    Theorem {
        id: ids::DISTINCT,
        predicate: "m > 5, all si distinct",
        strength: Strength::Bound,
        applies: |s| s.m() > 5 && is_distinct(s),
        predict: |s| {
            Ok(BetaPrediction::interval(
                general_lo(s),
                s.m() - 2,
                ids::DISTINCT,
                Some(construct_distinct(s)?),
            ))
        },
    },
    Theorem {
        id: ids::ALL_BUT_ONE,
        predicate: "m >= 3, Θ(s1^(m-1), s2) with s2 > s1",
        strength: Strength::Bound,
        applies: |s| s.m() >= 3 && is_s1_pow_m1_s2(s),
        predict: |s| {
            Ok(BetaPrediction::interval(
                s.m() - 1,
                s.m(),
                ids::ALL_BUT_ONE,
                None,
            ))
        },
    },
    Theorem {
        id: ids::SHORTEST_BUNDLE,
        predicate: "Θ(s1^p, s(p+1), ..., s(p+q)) with p, q >= 2",
        strength: Strength::Bound,
        applies: |s| shortest_run(s) >= 2 && s.m() - shortest_run(s) >= 2,
        predict: |s| {
            Ok(BetaPrediction::interval(
                shortest_run(s) + 1,
                s.m(),
                ids::SHORTEST_BUNDLE,
                None,
            ))
        },
    },
    Theorem {
        id: ids::TWO_BUNDLES,
        predicate: "Θ(s1^m1, s2^m2) with m1, m2 >= 2",
        strength: Strength::Bound,
        applies: |s| {
            let run = shortest_run(s);
            run >= 2
                && s.m() - run >= 2
                && s.lengths()[run..].iter().all(|&x| x == s.lengths()[run])
        },
        predict: |s| {
            Ok(BetaPrediction::interval(
                s.m() - 2,
                s.m(),
                ids::TWO_BUNDLES,
                None,
            ))
        },
    },
    Theorem {
        id: ids::UNIFORM_LOWER,
        predicate: "Θ(s^m)",
        strength: Strength::Bound,
        applies: |s| s.is_uniform(),
        predict: |s| {
            Ok(BetaPrediction::interval(
                (s.m() - 1).max(2),
                s.m(),
                ids::UNIFORM_LOWER,
                None,
            ))
        },
    },
    Theorem {
        id: ids::IDENTICAL_PATHS,
        predicate: "some length repeats",
        strength: Strength::Bound,
        applies: |s| ip_lower_bound(s) > 0,
        predict: |s| {
            Ok(BetaPrediction::interval(
                ip_lower_bound(s).max(general_lo(s)),
                s.m(),
                ids::IDENTICAL_PATHS,
                None,
            ))
        },
    },
    Theorem {
        id: ids::UPPER_BOUND,
        predicate: "m >= 3",
        strength: Strength::Bound,
        applies: |s| s.m() >= 3,
        predict: |s| {
            Ok(BetaPrediction::interval(
                general_lo(s),
                s.m(),
                ids::UPPER_BOUND,
                Some(construct_upper_bound_general(s)?),
            ))
        },
    },
    Theorem {
        id: ids::LOWER_BOUND,
        predicate: "m >= 3",
        strength: Strength::Bound,
        applies: |s| s.m() >= 3,
        predict: |s| {
            Ok(BetaPrediction::interval(
                general_lo(s),
                s.m(),
                ids::LOWER_BOUND,
                None,
            ))
        },
    },
    Theorem {
        id: ids::TOTAL_BOUND,
        predicate: "m >= 2",
        strength: Strength::Bound,
        applies: |s| s.m() >= 2,
        predict: |s| {
            Ok(BetaPrediction::interval(
                general_lo(s),
                s.m(),
                ids::TOTAL_BOUND,
                None,
            ))
        },
    },
];

fn relabel(mut p: BetaPrediction, id: &'static str) -> BetaPrediction {
    let source = p.witness_source.unwrap_or(p.theorem_id);
    p.theorem_id = id;
    p.witness_source = (source != id).then_some(source);
    p
}

/// Evaluates every registered result against `spec`, in registry order.
pub fn applicable_theorems(spec: &GraphSpec) -> Vec<TheoremApplicability> {
    REGISTRY
        .iter()
        .map(|t| {
            let matched = (t.applies)(spec);
            let (prediction, construction_error) = if matched {
                match (t.predict)(spec) {
                    Ok(p) => (Some(p), None),
                    Err(e) => (None, Some(e.to_string())),
                }
            } else {
                (None, None)
            };
            TheoremApplicability {
                theorem_id: t.id,
                predicate: t.predicate,
                matched,
                prediction,
                construction_error,
            }
        })
        .collect()
}

/// Most specific prediction: the first matching exact result, otherwise
/// the narrowest matching interval (earliest registered on ties).
pub fn predict_beta(spec: &GraphSpec) -> BetaPrediction {
    let matched: Vec<(Strength, BetaPrediction)> = REGISTRY
        .iter()
        .filter(|t| (t.applies)(spec))
        .map(|t| {
            // a failed witness formula degrades to the general range
            let p = (t.predict)(spec).unwrap_or_else(|_| {
                BetaPrediction::interval(general_lo(spec), spec.m(), t.id, None)
            });
            (t.strength, p)
        })
        .collect();
    if let Some((_, p)) = matched.iter().find(|(s, _)| *s == Strength::Exact) {
        return p.clone();
    }
    matched
        .into_iter()
        .map(|(_, p)| p)
        .min_by_key(|p| p.hi() - p.lo())
        .expect("the general bound matches every spec")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(l: &[usize]) -> GraphSpec {
        GraphSpec::new(l).unwrap()
    }

    fn matched_ids(l: &[usize]) -> Vec<&'static str> {
        applicable_theorems(&spec(l))
            .into_iter()
            .filter(|a| a.matched)
            .map(|a| a.theorem_id)
            .collect()
    }

    #[test]
    fn dispatcher_examples() {
        let p = predict_beta(&spec(&[2, 2, 2]));
        assert_eq!(
            (p.kind, p.theorem_id),
            (PredictionKind::Exact(3), ids::GTG3)
        );
        assert_eq!(
            predict_beta(&spec(&[1, 1, 3])).kind,
            PredictionKind::Exact(3)
        );
        let p = predict_beta(&spec(&[1, 3, 5, 7, 9, 11]));
        assert_eq!(
            (p.kind, p.theorem_id),
            (PredictionKind::Exact(4), ids::GAP_TWO)
        );
        let p = predict_beta(&spec(&[1, 2, 3]));
        assert_eq!(
            (p.kind, p.theorem_id),
            (PredictionKind::Exact(2), ids::GTG3)
        );
        let p = predict_beta(&spec(&[2, 2, 2, 4]));
        assert_eq!(
            (p.kind, p.theorem_id),
            (PredictionKind::Exact(4), ids::ONE_DIFFERENT)
        );
        assert_eq!(predict_beta(&spec(&[1, 1])).theorem_id, ids::CYCLE);
    }

    #[test]
    fn interval_fallbacks() {
        let p = predict_beta(&spec(&[1, 3, 3, 3, 3]));
        assert_eq!(
            (p.kind, p.theorem_id),
            (PredictionKind::Interval(3, 4), ids::ONE_SHORT)
        );
        assert_eq!(p.witness.as_ref().unwrap().len(), 4);
        let p = predict_beta(&spec(&[1, 2, 3, 4, 5]));
        assert_eq!(p.kind, PredictionKind::Interval(2, 5));
        assert_eq!(p.theorem_id, ids::UPPER_BOUND);
        let p = predict_beta(&spec(&[1, 2, 3, 4, 5, 7]));
        assert_eq!(
            (p.kind, p.theorem_id),
            (PredictionKind::Interval(3, 4), ids::DISTINCT)
        );
    }

    #[test]
    fn applicability_examples() {
        let ids_2224 = matched_ids(&[2, 2, 2, 4]);
        for id in [
            ids::ONE_DIFFERENT,
            ids::ALL_BUT_ONE,
            ids::TOTAL_BOUND,
            ids::MD4,
        ] {
            assert!(ids_2224.contains(&id), "{id}");
        }
        assert!(!ids_2224.contains(&ids::TWO_BUNDLES));
        let exact_123: Vec<_> = matched_ids(&[1, 2, 3])
            .into_iter()
            .filter(|id| ![ids::UPPER_BOUND, ids::LOWER_BOUND, ids::TOTAL_BOUND].contains(id))
            .collect();
        assert_eq!(exact_123, vec![ids::GTG3]);
        let ids_5 = matched_ids(&[5, 5, 5, 5, 5]);
        assert!(ids_5.contains(&ids::UNIFORM) && ids_5.contains(&ids::UNIFORM_LOWER));
    }

    #[test]
    fn witness_sizes_match_claims() {
        for l in [
            vec![2, 2, 2],
            vec![1, 2, 2, 5],
            vec![2, 2, 3, 5],
            vec![1, 3, 3, 3],
            vec![3, 3, 3, 3, 3],
        ] {
            for a in applicable_theorems(&spec(&l)) {
                if let Some(p) = a.prediction {
                    if let Some(w) = &p.witness {
                        assert_eq!(w.len(), p.hi(), "{l:?} {}", a.theorem_id);
                    }
                }
            }
        }
    }
}
