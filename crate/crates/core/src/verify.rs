//! Certification that a vertex set is an independent dominating set.
//!
//! Independence is checked in O(|s| * n) expected time: members go into a
//! hashed set of machine words and each member probes its n neighbors. The
//! domination check allocates a dense 2^n-bit coverage map, marks every
//! member and its neighbors, and requires every bit to be set; at the default
//! cap of n = 30 the map is 128 MiB. Above the cap the outcome is the
//! distinct tri-state [`Domination::Unchecked`] rather than a silent pass.

use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};
use std::time::{Duration, Instant};

use crate::bounds::{lower_bound, upper_bound};
use crate::set::VertexSet;
use crate::vertex::{hamming_distance, Dimension, Vertex};

/// Multiply-xor hasher for vertex words; SipHash is needless overhead for
/// keys that are already uniform machine words, and independence sweeps of
/// multi-million-member sets issue hundreds of millions of probes.
#[derive(Default)]
struct WordHasher(u64);

impl Hasher for WordHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, _: &[u8]) {
        unreachable!("WordHasher only hashes u64 keys");
    }

    fn write_u64(&mut self, x: u64) {
        let h = x.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        self.0 = h ^ (h >> 32);
    }
}

type WordSet = HashSet<u64, BuildHasherDefault<WordHasher>>;

/// Knobs for [`certify_with`].
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Largest dimension for which the dense domination sweep runs.
    pub dense_cap: u32,
    /// Largest cardinality for which the exact pairwise minimum distance is
    /// computed (the sweep is quadratic in |s|).
    pub pairwise_distance_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            dense_cap: 30,
            pairwise_distance_cap: 10_000,
        }
    }
}

/// Tri-state domination outcome. `Unchecked` is never conflated with a pass
/// or a failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domination {
    Confirmed {
        /// Total closed-neighborhood marks issued: `|s| * (n + 1)`.
        marks_issued: u64,
        /// Marks landing on an already-covered vertex; zero for perfect codes.
        overlaps: u64,
    },
    Failed {
        uncovered: u64,
        /// Lowest-value uncovered vertex.
        witness: Vertex,
    },
    Unchecked {
        reason: String,
    },
}

impl Domination {
    pub fn confirmed(&self) -> bool {
        matches!(self, Domination::Confirmed { .. })
    }
}

/// How the cardinality compares against the bounds for the dimension.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BoundStatus {
    /// `lower_bound <= |s| <= upper_bound`.
    Meets,
    /// `|s| > upper_bound`.
    Exceeds,
    /// `|s| < lower_bound`; impossible for a true dominating set.
    BelowLower,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub dimension: Dimension,
    pub cardinality: usize,
    pub independent: bool,
    /// First adjacent pair found, if any: lowest-index member, lowest bit flip.
    pub adjacent_pair: Option<(Vertex, Vertex)>,
    pub domination: Domination,
    /// Exact pairwise minimum distance, when the set is small enough to sweep.
    pub min_pairwise_distance: Option<u32>,
    pub lower_bound: u64,
    pub upper_bound: u64,
    pub bound: BoundStatus,
    /// Set when the set is certified and meets the counting lower bound,
    /// which proves no smaller independent dominating set exists.
    pub provably_minimum: bool,
    pub elapsed: Duration,
    /// Bytes allocated for the coverage map (0 when domination is unchecked).
    pub peak_coverage_bytes: u64,
}

fn membership(s: &VertexSet) -> WordSet {
    let mut set = WordSet::with_capacity_and_hasher(s.len(), Default::default());
    set.extend(s.iter().map(Vertex::bits));
    set
}

/// True iff no two members are at Hamming distance 1. On failure returns the
/// violating pair found first when scanning members in order and flipping
/// bits in ascending position.
pub fn is_independent(s: &VertexSet) -> (bool, Option<(Vertex, Vertex)>) {
    let set = membership(s);
    let n = s.dimension().get();
    for v in s.iter() {
        for i in 0..n {
            let w = v.bits() ^ (1u64 << i);
            if set.contains(&w) {
                return (false, Some((v, Vertex::from_bits(w))));
            }
        }
    }
    (true, None)
}

/// Dense coverage sweep. Returns the outcome and the bytes allocated for the
/// coverage map.
pub fn is_dominating(s: &VertexSet, dense_cap: u32) -> (Domination, u64) {
    let n = s.dimension().get();
    if n > dense_cap {
        let reason = format!(
            "dimension {n} above dense coverage cap {dense_cap} (map would need 2^{} bytes)",
            n.saturating_sub(3)
        );
        return (Domination::Unchecked { reason }, 0);
    }

    let total = 1u64 << n;
    let words = total.div_ceil(64) as usize;
    let mut map = vec![0u64; words];
    for v in s.iter() {
        let b = v.bits();
        map[(b >> 6) as usize] |= 1u64 << (b & 63);
        for i in 0..n {
            let w = b ^ (1u64 << i);
            map[(w >> 6) as usize] |= 1u64 << (w & 63);
        }
    }

    let bytes = (words * 8) as u64;
    let covered: u64 = map.iter().map(|w| w.count_ones() as u64).sum();
    let marks_issued = s.len() as u64 * (n as u64 + 1);
    if covered == total {
        (
            Domination::Confirmed {
                marks_issued,
                overlaps: marks_issued - covered,
            },
            bytes,
        )
    } else {
        // Lowest uncovered vertex: bits at or above `total` are never set and
        // never real, but a word containing a real hole is reached first.
        let wi = map
            .iter()
            .position(|&w| w != u64::MAX)
            .expect("covered < total implies a hole");
        let witness = (wi as u64) * 64 + (!map[wi]).trailing_zeros() as u64;
        debug_assert!(witness < total);
        (
            Domination::Failed {
                uncovered: total - covered,
                witness: Vertex::from_bits(witness),
            },
            bytes,
        )
    }
}

fn min_pairwise_distance(s: &VertexSet) -> u32 {
    let members = s.members();
    let mut min = u32::MAX;
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            min = min.min(hamming_distance(a, b));
        }
    }
    min
}

/// Full certification with default configuration (dense cap 30).
pub fn certify(s: &VertexSet) -> VerifyReport {
    certify_with(s, &VerifyConfig::default())
}

pub fn certify_with(s: &VertexSet, cfg: &VerifyConfig) -> VerifyReport {
    let start = Instant::now();
    let n = s.dimension();
    let (independent, adjacent_pair) = is_independent(s);
    let (domination, peak_coverage_bytes) = is_dominating(s, cfg.dense_cap);
    let min_dist = if s.len() >= 2 && s.len() <= cfg.pairwise_distance_cap {
        Some(min_pairwise_distance(s))
    } else {
        None
    };
    let lower = lower_bound(n);
    let upper = upper_bound(n).value;
    let cardinality = s.len() as u64;
    let bound = if cardinality < lower {
        BoundStatus::BelowLower
    } else if cardinality > upper {
        BoundStatus::Exceeds
    } else {
        BoundStatus::Meets
    };
    VerifyReport {
        dimension: n,
        cardinality: s.len(),
        independent,
        adjacent_pair,
        provably_minimum: independent && domination.confirmed() && cardinality == lower,
        domination,
        min_pairwise_distance: min_dist,
        lower_bound: lower,
        upper_bound: upper,
        bound,
        elapsed: start.elapsed(),
        peak_coverage_bytes,
    }
}
