use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Symbolic vertex of a generalized theta graph.
///
/// `Internal { path, pos }` is the vertex of path `path` at distance `pos`
/// from `c1` measured along that path; both indices are 1-based. The derived
/// ordering (`C1 < C2 < Internal` lexicographic) is the canonical vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexId {
    C1,
    C2,
    Internal { path: usize, pos: usize },
}

impl VertexId {
    pub fn v(path: usize, pos: usize) -> Self {
        VertexId::Internal { path, pos }
    }

    pub fn center(which: u8) -> Option<Self> {
        match which {
            1 => Some(VertexId::C1),
            2 => Some(VertexId::C2),
            _ => None,
        }
    }

    pub fn is_center(&self) -> bool {
        matches!(self, VertexId::C1 | VertexId::C2)
    }

    /// Path carrying this vertex, `None` for centers.
    pub fn path(&self) -> Option<usize> {
        match *self {
            VertexId::Internal { path, .. } => Some(path),
            _ => None,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::C1 => f.write_str("c1"),
            VertexId::C2 => f.write_str("c2"),
            VertexId::Internal { path, pos } => write!(f, "v:{path}:{pos}"),
        }
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(literal: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "vertex",
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        match literal.trim() {
            "c1" => return Ok(VertexId::C1),
            "c2" => return Ok(VertexId::C2),
            _ => {}
        }
        let mut parts = literal.trim().split(':');
        if parts.next() != Some("v") {
            return Err(err("expected `c1`, `c2` or `v:i:j`"));
        }
        let mut index = || -> Result<usize> {
            let tok = parts.next().ok_or_else(|| err("expected `v:i:j`"))?;
            match tok.parse::<usize>() {
                Ok(0) | Err(_) => Err(err("indices are positive integers")),
                Ok(x) => Ok(x),
            }
        };
        let path = index()?;
        let pos = index()?;
        if parts.next().is_some() {
            return Err(err("trailing components"));
        }
        Ok(VertexId::Internal { path, pos })
    }
}
