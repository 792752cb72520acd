use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::format::{self, ParseError};
use crate::vertex::{Dimension, Vertex};

/// An ordered, duplicate-free collection of vertices of one dimension.
///
/// Order is preserved so constructions and file round-trips are reproducible;
/// equality is order-sensitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    dim: Dimension,
    members: Vec<Vertex>,
}

impl VertexSet {
    /// Checked constructor: every member must fit `dim` and appear once.
    pub fn new(dim: Dimension, members: Vec<Vertex>) -> Result<Self, Error> {
        let mut seen = HashSet::with_capacity(members.len());
        for v in &members {
            if !v.fits(dim) {
                return Err(Error::VertexOutOfRange {
                    bits: v.bits(),
                    dim: dim.get(),
                });
            }
            if !seen.insert(v.bits()) {
                return Err(Error::DuplicateVertex { bits: v.bits() });
            }
        }
        Ok(Self { dim, members })
    }

    /// Constructor for the iterative procedures, whose outputs are distinct
    /// and in range by construction. Validated in debug builds only.
    pub(crate) fn from_parts_unchecked(dim: Dimension, members: Vec<Vertex>) -> Self {
        debug_assert!(members.iter().all(|v| v.fits(dim)));
        Self { dim, members }
    }

    pub fn dimension(&self) -> Dimension {
        self.dim
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }
}

/// Renders the set file format (header line plus one vertex per line).
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.dim)?;
        for v in &self.members {
            writeln!(f, "{}", v.to_bit_string(self.dim))?;
        }
        Ok(())
    }
}

impl FromStr for VertexSet {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        format::parse_set_str(s)
    }
}
