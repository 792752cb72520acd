//! Vertices of the hypercube `Q_n` as n-bit machine words, plus the Hamming
//! metric and neighbor enumeration.
//!
//! Bit position `i` of a word holds coordinate `c_i`. The dimension is not
//! stored per vertex; it is carried by the enclosing [`VertexSet`] or passed
//! explicitly, which keeps multi-million-member sets at one word per element.
//!
//! [`VertexSet`]: crate::VertexSet

use std::fmt;

use crate::error::Error;

/// Hypercube dimension, validated to `1..=62`.
///
/// The cap keeps every vertex in one `u64` word and every set cardinality in
/// range (the largest constructed bound value is `3 * 2^55`).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dimension(u8);

impl Dimension {
    pub const MIN: u32 = 1;
    pub const MAX: u32 = 62;

    pub fn new(n: u32) -> Result<Self, Error> {
        if (Self::MIN..=Self::MAX).contains(&n) {
            Ok(Self(n as u8))
        } else {
            Err(Error::InvalidDimension(n))
        }
    }

    pub const fn get(self) -> u32 {
        self.0 as u32
    }

    /// Number of vertices of `Q_n`, i.e. `2^n`.
    pub const fn vertex_count(self) -> u64 {
        1u64 << self.0
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One hypercube vertex: an n-bit binary word (bit `i` = coordinate `c_i`).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(u64);

impl Vertex {
    pub const ZERO: Vertex = Vertex(0);

    /// Checked constructor: every bit at position `>= dim` must be zero.
    pub fn new(bits: u64, dim: Dimension) -> Result<Self, Error> {
        let v = Vertex(bits);
        if v.fits(dim) {
            Ok(v)
        } else {
            Err(Error::VertexOutOfRange {
                bits,
                dim: dim.get(),
            })
        }
    }

    /// Internal constructor for call sites that guarantee the range invariant.
    pub(crate) const fn from_bits(bits: u64) -> Self {
        Vertex(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn fits(self, dim: Dimension) -> bool {
        self.0 >> dim.get() == 0
    }

    /// 0 for an even number of one-bits, 1 for odd.
    pub const fn parity(self) -> u8 {
        (self.0.count_ones() & 1) as u8
    }

    /// Coordinate string, most significant first: `c_{n-1} … c_0`.
    pub fn to_bit_string(self, dim: Dimension) -> String {
        debug_assert!(self.fits(dim));
        (0..dim.get())
            .rev()
            .map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({:#b})", self.0)
    }
}

/// Number of coordinates where `u` and `v` differ.
///
/// The value does not depend on the (shared) dimension of the two vertices,
/// so none is taken; mixing dimensions is prevented where sets are built.
pub fn hamming_distance(u: Vertex, v: Vertex) -> u32 {
    (u.0 ^ v.0).count_ones()
}

/// The `n` vertices at Hamming distance 1 from `v`, in ascending bit-position
/// order (flip bit 0 first). Deterministic; `v` itself is not included.
pub fn neighbors(v: Vertex, dim: Dimension) -> impl Iterator<Item = Vertex> {
    debug_assert!(v.fits(dim));
    (0..dim.get()).map(move |i| Vertex(v.0 ^ (1u64 << i)))
}
