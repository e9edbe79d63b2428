use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SPEC_PREFIX: &str = "theta:";

/// Canonical parameter vector of a generalized theta graph.
///
/// Path `i` (1-based) joins the two centers and carries `lengths[i - 1]`
/// internal vertices. Lengths are kept sorted non-decreasing; the order in
/// which the caller supplied them is remembered so user-facing path labels
/// can be mapped back and forth.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphSpec {
    lengths: Vec<usize>,
    /// `original[k]` is the 1-based label the caller used for canonical path `k + 1`.
    original: Vec<usize>,
}

impl GraphSpec {
    /// Validates and canonicalizes raw lengths. Zero or negative entries are
    /// rejected with the offending (0-based) index.
    pub fn build(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyLengths);
        }
        if let Some((index, &value)) = raw.iter().enumerate().find(|(_, &v)| v < 1) {
            return Err(Error::NonPositiveLength { index, value });
        }
        let mut labelled: Vec<(usize, usize)> = raw
            .iter()
            .enumerate()
            .map(|(i, &s)| (s as usize, i + 1))
            .collect();
        // stable: equal lengths keep their relative order
        labelled.sort_by_key(|&(s, _)| s);
        Ok(Self {
            lengths: labelled.iter().map(|&(s, _)| s).collect(),
            original: labelled.iter().map(|&(_, i)| i).collect(),
        })
    }

    pub fn new(lengths: &[usize]) -> Result<Self> {
        let raw: Vec<i64> = lengths.iter().map(|&s| s as i64).collect();
        Self::build(&raw)
    }

    /// Uniform spec `Θ(s^m)`.
    pub fn uniform(s: usize, m: usize) -> Result<Self> {
        Self::new(&vec![s; m])
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Multiplicity: number of internally disjoint center-to-center paths.
    pub fn m(&self) -> usize {
        self.lengths.len()
    }

    /// Internal-vertex count of canonical path `path` (1-based).
    pub fn length(&self, path: usize) -> usize {
        self.lengths[path - 1]
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.lengths.iter().sum::<usize>()
    }

    /// A multiplicity-2 spec is the cycle `C_{s1+s2+2}`.
    pub fn is_cycle(&self) -> bool {
        self.m() == 2
    }

    pub fn is_uniform(&self) -> bool {
        self.lengths.windows(2).all(|w| w[0] == w[1])
    }

    /// Caller-supplied label of canonical path `path`.
    pub fn original_label(&self, path: usize) -> usize {
        self.original[path - 1]
    }

    /// Canonical path carrying the caller's label `label`, if any.
    pub fn canonical_path(&self, label: usize) -> Option<usize> {
        self.original
            .iter()
            .position(|&o| o == label)
            .map(|k| k + 1)
    }

    /// Sort permutation as a list: entry `k` is the original label of path `k + 1`.
    pub fn permutation(&self) -> &[usize] {
        &self.original
    }

    /// Same lengths with the identity permutation.
    pub fn canonical(&self) -> Self {
        Self {
            lengths: self.lengths.clone(),
            original: (1..=self.m()).collect(),
        }
    }

    /// Literal form, e.g. `theta:1,2,3`.
    pub fn literal(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(SPEC_PREFIX)?;
        for (k, s) in self.lengths.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(literal: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            what: "spec",
            literal: literal.to_string(),
            reason,
        };
        let body = literal
            .trim()
            .strip_prefix(SPEC_PREFIX)
            .ok_or_else(|| parse_err(format!("missing `{SPEC_PREFIX}` prefix")))?;
        if body.trim().is_empty() {
            return Err(Error::EmptyLengths);
        }
        let raw = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|e| parse_err(format!("`{}`: {e}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(&raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_sorts_and_records_permutation() {
        let spec = GraphSpec::build(&[3, 1, 2]).unwrap();
        assert_eq!(spec.lengths(), &[1, 2, 3]);
        assert_eq!(spec.m(), 3);
        assert_eq!(spec.permutation(), &[2, 3, 1]);
        assert_eq!(spec.original_label(3), 1);
        assert_eq!(spec.canonical_path(1), Some(3));
        assert_eq!(spec.canonical_path(4), None);
    }

    #[test]
    fn already_canonical() {
        let spec = GraphSpec::build(&[2, 2, 2]).unwrap();
        assert_eq!(spec.lengths(), &[2, 2, 2]);
        assert_eq!(spec.permutation(), &[1, 2, 3]);
        assert!(spec.is_uniform());
    }

    #[test]
    fn rejects_zero_and_negative() {
        assert_eq!(
            GraphSpec::build(&[0, 1]),
            Err(Error::NonPositiveLength { index: 0, value: 0 })
        );
        assert_eq!(
            GraphSpec::build(&[2, 5, -1]),
            Err(Error::NonPositiveLength {
                index: 2,
                value: -1
            })
        );
        assert!(GraphSpec::build(&[0, 1])
            .unwrap_err()
            .to_string()
            .contains("length must be >= 1"));
        assert_eq!(GraphSpec::build(&[]), Err(Error::EmptyLengths));
    }

    #[test]
    fn m2_is_flagged_as_cycle() {
        let spec = GraphSpec::new(&[1, 1]).unwrap();
        assert!(spec.is_cycle());
        assert_eq!(spec.vertex_count(), 4);
    }

    #[test]
    fn literal_round_trip() {
        let spec: GraphSpec = "theta:3,1,2".parse().unwrap();
        assert_eq!(spec.lengths(), &[1, 2, 3]);
        assert_eq!(spec.literal(), "theta:1,2,3");
        assert!("1,2,3".parse::<GraphSpec>().is_err());
        assert!("theta:1,x".parse::<GraphSpec>().is_err());
        assert_eq!("theta:".parse::<GraphSpec>(), Err(Error::EmptyLengths));
        assert!(matches!(
            "theta:2,0".parse::<GraphSpec>(),
            Err(Error::NonPositiveLength { index: 1, .. })
        ));
    }
}
