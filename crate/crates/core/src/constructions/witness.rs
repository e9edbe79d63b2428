//! Explicit landmark sets from the constructive proofs. Every index formula
//! is applied literally and the resulting position is range-checked; a
//! position outside `1..=s` surfaces as an error instead of being clamped.

use crate::error::{Error, Result};
use crate::resolving::LandmarkSet;
use crate::theta::{GraphSpec, VertexId};

fn ceil_half(x: usize) -> usize {
    x.div_ceil(2)
}

fn at(construction: &'static str, spec: &GraphSpec, path: usize, pos: i64) -> Result<VertexId> {
    let length = spec.length(path);
    if pos < 1 || pos as usize > length {
        return Err(Error::PositionOutOfRange {
            construction,
            path,
            position: pos,
            length,
        });
    }
    Ok(VertexId::v(path, pos as usize))
}

fn mismatch(construction: &'static str, spec: &GraphSpec) -> Error {
    Error::PatternMismatch {
        construction,
        spec: spec.literal(),
    }
}

fn need_m(
    construction: &'static str,
    spec: &GraphSpec,
    ok: bool,
    requirement: &'static str,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Multiplicity {
            construction,
            requirement,
            m: spec.m(),
        })
    }
}

/// Number of leading paths sharing the shortest length.
pub(crate) fn shortest_run(spec: &GraphSpec) -> usize {
    let s = spec.lengths();
    s.iter().take_while(|&&x| x == s[0]).count()
}

/// `Θ(s1^(m−2), s2, s3)` with `s1 < s2 <= s3`.
pub(crate) fn is_s1_pow_m2_s2_s3(spec: &GraphSpec) -> bool {
    spec.m() >= 4 && shortest_run(spec) == spec.m() - 2
}

/// `Θ(s1^(m−1), s2)` with `s1 < s2`.
pub(crate) fn is_s1_pow_m1_s2(spec: &GraphSpec) -> bool {
    spec.m() >= 3 && shortest_run(spec) == spec.m() - 1
}

/// `Θ(s1, s2^(m−1))` with `s1 < s2`.
pub(crate) fn is_s1_s2_pow_m1(spec: &GraphSpec) -> bool {
    let s = spec.lengths();
    spec.m() >= 3 && s[0] < s[1] && s[1..].iter().all(|&x| x == s[1])
}

pub(crate) fn is_distinct(spec: &GraphSpec) -> bool {
    spec.lengths().windows(2).all(|w| w[0] < w[1])
}

pub(crate) fn is_consecutive(spec: &GraphSpec) -> bool {
    spec.lengths().windows(2).all(|w| w[1] == w[0] + 1)
}

/// `{c1} ∪ {v(i, ⌈si/2⌉) : 2 <= i <= m}`, size `m`.
pub fn construct_upper_bound_general(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "upper-bound construction";
    need_m(NAME, spec, spec.m() >= 3, ">= 3")?;
    let mut out = vec![VertexId::C1];
    for i in 2..=spec.m() {
        out.push(at(NAME, spec, i, ceil_half(spec.length(i)) as i64)?);
    }
    LandmarkSet::new(out)
}

/// Size `m − 1`: `v(i, ⌈s1/2⌉)` on the first `m − 3` shortest paths plus
/// `v(j, ⌊(sj + s1 + 2)/2⌋)` on the two long paths `j = m − 1, m`.
pub fn construct_s1_pow_m2_s2_s3(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "Θ(s1^(m-2), s2, s3) construction";
    need_m(NAME, spec, spec.m() >= 4, ">= 4")?;
    if !is_s1_pow_m2_s2_s3(spec) {
        return Err(mismatch(NAME, spec));
    }
    let m = spec.m();
    let s1 = spec.length(1);
    let mut out = Vec::with_capacity(m - 1);
    for i in 1..=m - 3 {
        out.push(at(NAME, spec, i, ceil_half(s1) as i64)?);
    }
    for j in [m - 1, m] {
        out.push(at(NAME, spec, j, ((spec.length(j) + s1 + 2) / 2) as i64)?);
    }
    LandmarkSet::new(out)
}

/// Whether `Θ(s1^(m−1), s2)` is one of the two families that need `m` landmarks.
pub fn is_one_different_exception(spec: &GraphSpec) -> bool {
    let s = spec.lengths();
    let m = spec.m();
    is_s1_pow_m1_s2(spec)
        && ((s[0] == 1 && s[m - 1] == 3) || (m == 4 && s[0] == 2 && s[m - 1] == 4))
}

/// `Θ(s1^(m−1), s2)`, `m >= 4`: size `m − 1` outside the two exceptional
/// families, which fall back to the size-`m` general construction.
pub fn construct_s1_pow_m1_s2(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "Θ(s1^(m-1), s2) construction";
    need_m(NAME, spec, spec.m() >= 4, ">= 4")?;
    if !is_s1_pow_m1_s2(spec) {
        return Err(mismatch(NAME, spec));
    }
    if is_one_different_exception(spec) {
        return construct_upper_bound_general(spec);
    }
    let m = spec.m();
    let s1 = spec.length(1);
    let out = if s1 == 2 && m >= 5 {
        let k = (m - 1) / 2;
        (1..m)
            .map(|i| at(NAME, spec, i, if i <= k { 1 } else { 2 }))
            .collect::<Result<Vec<_>>>()?
    } else if s1 <= 2 {
        // s1 = 1, or Θ(2^3, s) with s != 4
        let mut out: Vec<VertexId> = (1..=m - 2).map(|i| VertexId::v(i, 1)).collect();
        out.push(VertexId::v(m, 1));
        out
    } else {
        let mut out: Vec<VertexId> = (1..=m - 2).map(|i| VertexId::v(i, 1)).collect();
        out.push(at(NAME, spec, m - 1, 2)?);
        out
    };
    LandmarkSet::new(out)
}

/// `Θ(s1, s2^(m−1))`: `{c1, v(2, γ), …, v(m−1, γ)}` with `γ = ⌊(s1 + s2)/2⌋ + 1`.
pub fn construct_s1_s2_pow_m1(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "Θ(s1, s2^(m-1)) construction";
    need_m(NAME, spec, spec.m() >= 4, ">= 4")?;
    if !is_s1_s2_pow_m1(spec) {
        return Err(mismatch(NAME, spec));
    }
    let gamma = (spec.length(1) + spec.length(2)) / 2 + 1;
    let mut out = vec![VertexId::C1];
    for i in 2..spec.m() {
        out.push(at(NAME, spec, i, gamma as i64)?);
    }
    LandmarkSet::new(out)
}

/// Parity-split position used by the distinct-lengths constructions: even
/// paths sit where they are MMD to `c1` in `C_{1,i}`, odd paths mirrored
/// towards `c2`.
fn parity_position(spec: &GraphSpec, i: usize, round_up: bool) -> i64 {
    let si = spec.length(i);
    let total = si + spec.length(1) + 2;
    let half = if round_up {
        total.div_ceil(2)
    } else {
        total / 2
    } as i64;
    if i % 2 == 0 {
        half
    } else {
        si as i64 + 1 - half
    }
}

/// All lengths distinct, `m > 5`: `{v(i, μ(i)) : 3 <= i <= m}`, size `m − 2`.
pub fn construct_distinct(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "distinct-lengths construction";
    need_m(NAME, spec, spec.m() > 5, "> 5")?;
    if !is_distinct(spec) {
        return Err(mismatch(NAME, spec));
    }
    (3..=spec.m())
        .map(|i| at(NAME, spec, i, parity_position(spec, i, false)))
        .collect::<Result<Vec<_>>>()
        .and_then(LandmarkSet::new)
}

/// Consecutive lengths `s(i+1) = si + 1`, `m > 6`: `{v(i, μ(i)) : 4 <= i <= m}`
/// with the rounded-up midpoint, size `m − 3`.
pub fn construct_consecutive(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "consecutive-lengths construction";
    need_m(NAME, spec, spec.m() > 6, "> 6")?;
    if !is_consecutive(spec) {
        return Err(mismatch(NAME, spec));
    }
    (4..=spec.m())
        .map(|i| at(NAME, spec, i, parity_position(spec, i, true)))
        .collect::<Result<Vec<_>>>()
        .and_then(LandmarkSet::new)
}

/// Metric dimension of the uniform graph `Θ(s^m)`, `m >= 3`.
pub fn uniform_beta(s: usize, m: usize) -> usize {
    if (m >= 5 && s >= 2) || (m == 4 && s > 2) {
        m - 1
    } else {
        m
    }
}

/// Uniform `Θ(s^m)`, `m >= 3`; the size always equals [`uniform_beta`].
///
/// For `Θ(2^m)` the first `⌊(m−1)/2⌋` landmarks sit at position 1 and the
/// rest at position 2. Splitting at `⌊(m+1)/2⌋` instead leaves a single
/// position-2 landmark when `m = 5` and fails to resolve `Θ(2^5)`.
pub fn construct_uniform(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "uniform construction";
    need_m(NAME, spec, spec.m() >= 3, ">= 3")?;
    if !spec.is_uniform() {
        return Err(mismatch(NAME, spec));
    }
    let (s, m) = (spec.length(1), spec.m());
    if s > 2 && m >= 4 {
        let mut out: Vec<VertexId> = (1..=m - 2).map(|i| VertexId::v(i, 1)).collect();
        out.push(VertexId::v(m - 1, 2));
        LandmarkSet::new(out)
    } else if s == 2 && m >= 5 {
        let k = (m - 1) / 2;
        LandmarkSet::new(
            (1..m)
                .map(|i| VertexId::v(i, if i <= k { 1 } else { 2 }))
                .collect(),
        )
    } else {
        construct_upper_bound_general(spec)
    }
}

/// A witness together with the result it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub beta: usize,
    pub landmarks: LandmarkSet,
    pub source: &'static str,
}

pub(crate) fn theta3_is_exception(s: &[usize]) -> bool {
    let (a, b, c) = (s[0], s[1], s[2]);
    (a == b && b == c) || (a == b && c == a + 2)
}

/// Multiplicity 3: β is 3 for `Θ(s^3)` and `Θ(s^2, s + 2)`, otherwise 2.
pub fn theta3_witness(spec: &GraphSpec) -> Result<Witness> {
    const NAME: &str = "multiplicity-3 construction";
    need_m(NAME, spec, spec.m() == 3, "= 3")?;
    let s = spec.lengths();
    let (a, b, c) = (s[0], s[1], s[2]);
    if theta3_is_exception(s) {
        return Ok(Witness {
            beta: 3,
            landmarks: construct_upper_bound_general(spec)?,
            source: super::ids::GTG3_EXCEPTIONS,
        });
    }
    let (landmarks, source) = if s.iter().any(|x| x % 2 == 1) && s.iter().any(|x| x % 2 == 0) {
        let odd = (1..=3)
            .find(|&p| spec.length(p) % 2 == 1)
            .expect("mixed parity");
        let even = (1..=3)
            .find(|&p| spec.length(p) % 2 == 0)
            .expect("mixed parity");
        let w = vec![
            at(NAME, spec, odd, ceil_half(spec.length(odd)) as i64)?,
            at(NAME, spec, even, (spec.length(even) / 2) as i64)?,
        ];
        (w, super::ids::GTG3_DIFF_PARITY)
    } else if a < b {
        let w = vec![
            at(NAME, spec, 2, ((a + b + 2) / 2) as i64)?,
            at(NAME, spec, 3, ((a + c + 2) / 2) as i64)?,
        ];
        (w, super::ids::GTG3_SAME_PARITY)
    } else {
        // a == b, c > a + 2
        (
            vec![VertexId::v(2, 1), VertexId::v(3, 1)],
            super::ids::GTG3_SAME_PARITY,
        )
    };
    Ok(Witness {
        beta: 2,
        landmarks: LandmarkSet::new(landmarks)?,
        source,
    })
}

pub(crate) fn theta4_is_exception(s: &[usize]) -> bool {
    matches!(s, [1, 1, 1, 1] | [1, 1, 1, 3] | [2, 2, 2, 2] | [2, 2, 2, 4])
}

/// `{c1, v(3, γ3), v(4, γ4)}` with `γi = ⌊(s1 + si + 2)/2⌋`.
fn theta4_center_witness(spec: &GraphSpec) -> Result<LandmarkSet> {
    const NAME: &str = "multiplicity-4 center construction";
    let s1 = spec.length(1);
    LandmarkSet::new(vec![
        VertexId::C1,
        at(NAME, spec, 3, ((s1 + spec.length(3) + 2) / 2) as i64)?,
        at(NAME, spec, 4, ((s1 + spec.length(4) + 2) / 2) as i64)?,
    ])
}

/// Multiplicity 4: β is 4 for four sporadic graphs, 2 when `s2 = s1 + 1`
/// and either `s2 = s3, s4 >= s1 + 4` or `s2 < s3`, and 3 otherwise.
pub fn theta4_witness(spec: &GraphSpec) -> Result<Witness> {
    const NAME: &str = "multiplicity-4 construction";
    use super::ids;
    need_m(NAME, spec, spec.m() == 4, "= 4")?;
    let s = spec.lengths();
    let (a, b, c, d) = (s[0], s[1], s[2], s[3]);
    if theta4_is_exception(s) {
        return Ok(Witness {
            beta: 4,
            landmarks: construct_upper_bound_general(spec)?,
            source: ids::UPPER_BOUND,
        });
    }
    if b == a + 1 && b == c && d >= a + 4 {
        let landmarks = LandmarkSet::new(vec![VertexId::v(3, 1), at(NAME, spec, 4, d as i64)?])?;
        return Ok(Witness {
            beta: 2,
            landmarks,
            source: ids::MD4_S2_EQ_S3_FAR,
        });
    }
    if b == a + 1 && b < c {
        let gamma = (b + c + 2) / 2;
        let landmarks =
            LandmarkSet::new(vec![VertexId::v(3, 1), at(NAME, spec, 3, gamma as i64)?])?;
        return Ok(Witness {
            beta: 2,
            landmarks,
            source: ids::MD4_S2_LT_S3,
        });
    }
    let (landmarks, source) = if a + 1 < b {
        (theta4_center_witness(spec)?, ids::MD4_GAP)
    } else if a == b {
        if spec.is_uniform() {
            (construct_uniform(spec)?, ids::UNIFORM)
        } else if is_s1_pow_m1_s2(spec) {
            (construct_s1_pow_m1_s2(spec)?, ids::ONE_DIFFERENT)
        } else {
            (construct_s1_pow_m2_s2_s3(spec)?, ids::S1_POW_M2)
        }
    } else if c == d {
        // s1 < s2 = s3 = s4
        (construct_s1_s2_pow_m1(spec)?, ids::MD4_ONE_SHORT)
    } else {
        // s2 = s3 = s1 + 1 < s4 <= s1 + 3
        (theta4_center_witness(spec)?, ids::MD4_S2_EQ_S3_NEAR)
    };
    Ok(Witness {
        beta: 3,
        landmarks,
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(l: &[usize]) -> GraphSpec {
        GraphSpec::new(l).unwrap()
    }

    fn set(vs: &[VertexId]) -> LandmarkSet {
        LandmarkSet::new(vs.to_vec()).unwrap()
    }

    use VertexId as V;

    #[test]
    fn upper_bound_instances() {
        assert_eq!(
            construct_upper_bound_general(&spec(&[1, 1, 1])).unwrap(),
            set(&[V::C1, V::v(2, 1), V::v(3, 1)])
        );
        assert_eq!(
            construct_upper_bound_general(&spec(&[2, 3, 4])).unwrap(),
            set(&[V::C1, V::v(2, 2), V::v(3, 2)])
        );
        assert!(matches!(
            construct_upper_bound_general(&spec(&[2, 3])),
            Err(Error::Multiplicity { .. })
        ));
    }

    #[test]
    fn s1_pow_m2_instances() {
        assert_eq!(
            construct_s1_pow_m2_s2_s3(&spec(&[2, 2, 3, 5])).unwrap(),
            set(&[V::v(1, 1), V::v(3, 3), V::v(4, 4)])
        );
        assert_eq!(
            construct_s1_pow_m2_s2_s3(&spec(&[1, 1, 1, 2, 4]))
                .unwrap()
                .len(),
            4
        );
        assert!(matches!(
            construct_s1_pow_m2_s2_s3(&spec(&[2, 2, 2, 5])),
            Err(Error::PatternMismatch { .. })
        ));
    }

    #[test]
    fn s1_pow_m1_instances() {
        assert!(is_one_different_exception(&spec(&[1, 1, 1, 3])));
        assert!(is_one_different_exception(&spec(&[1, 1, 1, 1, 1, 3])));
        assert!(is_one_different_exception(&spec(&[2, 2, 2, 4])));
        assert!(!is_one_different_exception(&spec(&[2, 2, 2, 2, 4])));
        assert_eq!(
            construct_s1_pow_m1_s2(&spec(&[1, 1, 1, 3])).unwrap().len(),
            4
        );
        assert_eq!(
            construct_s1_pow_m1_s2(&spec(&[2, 2, 2, 2, 5])).unwrap(),
            set(&[V::v(1, 1), V::v(2, 1), V::v(3, 2), V::v(4, 2)])
        );
        assert_eq!(
            construct_s1_pow_m1_s2(&spec(&[3, 3, 3, 7])).unwrap(),
            set(&[V::v(1, 1), V::v(2, 1), V::v(3, 2)])
        );
        assert_eq!(
            construct_s1_pow_m1_s2(&spec(&[1, 1, 1, 5])).unwrap(),
            set(&[V::v(1, 1), V::v(2, 1), V::v(4, 1)])
        );
    }

    #[test]
    fn s1_s2_pow_instances() {
        assert_eq!(
            construct_s1_s2_pow_m1(&spec(&[1, 3, 3, 3])).unwrap(),
            set(&[V::C1, V::v(2, 3), V::v(3, 3)])
        );
    }

    #[test]
    fn distinct_and_consecutive_instances() {
        // μ(3) = 3 + 1 − ⌊6/2⌋ = 1, μ(4) = ⌊7/2⌋ = 3, μ(5) = 6 − 4 = 2, μ(6) = ⌊9/2⌋ = 4
        assert_eq!(
            construct_distinct(&spec(&[1, 2, 3, 4, 5, 6])).unwrap(),
            set(&[V::v(3, 1), V::v(4, 3), V::v(5, 2), V::v(6, 4)])
        );
        // μ(4) = ⌈7/2⌉ = 4, μ(5) = 6 − 4 = 2, μ(6) = ⌈9/2⌉ = 5, μ(7) = 8 − 5 = 3
        assert_eq!(
            construct_consecutive(&spec(&[1, 2, 3, 4, 5, 6, 7])).unwrap(),
            set(&[V::v(4, 4), V::v(5, 2), V::v(6, 5), V::v(7, 3)])
        );
        assert!(construct_consecutive(&spec(&[1, 2, 3, 4, 5, 6])).is_err());
        assert!(construct_distinct(&spec(&[1, 2, 3, 4, 5, 5])).is_err());
    }

    #[test]
    fn uniform_instances() {
        assert_eq!(construct_uniform(&spec(&[1, 1, 1, 1])).unwrap().len(), 4);
        assert_eq!(construct_uniform(&spec(&[2, 2, 2, 2])).unwrap().len(), 4);
        assert_eq!(
            construct_uniform(&spec(&[3, 3, 3, 3])).unwrap(),
            set(&[V::v(1, 1), V::v(2, 1), V::v(3, 2)])
        );
        for (s, m) in [(1, 3), (2, 4), (2, 5), (3, 3), (3, 4), (5, 6)] {
            let w = construct_uniform(&GraphSpec::uniform(s, m).unwrap()).unwrap();
            assert_eq!(w.len(), uniform_beta(s, m));
        }
    }

    #[test]
    fn theta3_instances() {
        let w = theta3_witness(&spec(&[1, 2, 2])).unwrap();
        assert_eq!(w.beta, 2);
        assert_eq!(w.source, crate::constructions::ids::GTG3_DIFF_PARITY);
        assert_eq!(
            theta3_witness(&spec(&[2, 4, 6])).unwrap().landmarks,
            set(&[V::v(2, 4), V::v(3, 5)])
        );
        assert_eq!(
            theta3_witness(&spec(&[2, 2, 6])).unwrap().landmarks,
            set(&[V::v(2, 1), V::v(3, 1)])
        );
        assert_eq!(theta3_witness(&spec(&[1, 1, 3])).unwrap().beta, 3);
    }

    #[test]
    fn theta4_instances() {
        let w = theta4_witness(&spec(&[1, 2, 2, 5])).unwrap();
        assert_eq!((w.beta, w.landmarks), (2, set(&[V::v(3, 1), V::v(4, 5)])));
        assert_eq!(theta4_witness(&spec(&[1, 2, 3, 4])).unwrap().beta, 2);
        assert_eq!(theta4_witness(&spec(&[2, 2, 4, 4])).unwrap().beta, 3);
        assert_eq!(theta4_witness(&spec(&[2, 2, 2, 4])).unwrap().beta, 4);
    }
}
