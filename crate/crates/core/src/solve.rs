//! Exact minimum independent dominating set search for small hypercubes.
//!
//! Branch and bound over `u128` vertex masks (dimensions 1..=7, so at most
//! 128 vertices). At each node the search picks the lowest-index undominated
//! vertex `v`; any valid completion must dominate `v` through a member of its
//! closed neighborhood, so it branches over adding each eligible member of
//! `N[v]` in ascending vertex order, excluding each candidate from later
//! siblings. A branch is cut when
//! `|S| + ceil(undominated / (n+1)) >= incumbent`, since one vertex dominates
//! at most `n+1` vertices including itself.
//!
//! The search is single-threaded and fully deterministic: identical inputs
//! explore identical node sequences.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::set::VertexSet;
use crate::vertex::{Dimension, Vertex};

/// Largest dimension the solver accepts (2^7 = 128 vertices).
pub const SOLVE_MAX_DIMENSION: u32 = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Search space exhausted; `alpha` is the exact independent domination
    /// number and `witness` a minimum independent dominating set.
    Optimal { alpha: u32, witness: VertexSet },
    /// Budget ran out first. Carries the best set found so far, if any.
    TimedOut { best: Option<(u32, VertexSet)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub dimension: Dimension,
    pub outcome: SolveOutcome,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Result of an exhaustive "no smaller set exists" run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoSmallerOutcome {
    /// Search exhausted: no independent dominating set below the stated size.
    Proven,
    /// Found a strictly smaller independent dominating set.
    Refuted { witness: VertexSet },
    /// Budget ran out before the search space was exhausted.
    TimedOut,
}

struct Search {
    n: u32,
    full: u128,
    /// `N[v]` as a mask, indexed by vertex.
    closed_mask: Vec<u128>,
    /// `N(v)` as a mask (open neighborhood).
    open_mask: Vec<u128>,
    /// `N[v]` as a sorted vertex list; fixes the branch order.
    closed_sorted: Vec<Vec<u8>>,
    chosen: Vec<u8>,
    best: Option<Vec<u8>>,
    /// Incumbent cardinality; only strictly smaller sets are accepted.
    bound: u32,
    stop_on_improvement: bool,
    improved: bool,
    nodes: u64,
    deadline: Instant,
    timed_out: bool,
}

impl Search {
    fn new(n: u32, bound: u32, stop_on_improvement: bool, budget: Duration) -> Self {
        let count = 1usize << n;
        let full = if count == 128 {
            u128::MAX
        } else {
            (1u128 << count) - 1
        };
        let mut closed_mask = vec![0u128; count];
        let mut open_mask = vec![0u128; count];
        let mut closed_sorted = vec![Vec::new(); count];
        for v in 0..count {
            let mut open = 0u128;
            for i in 0..n {
                open |= 1u128 << (v ^ (1 << i));
            }
            open_mask[v] = open;
            closed_mask[v] = open | (1u128 << v);
            let mut members: Vec<u8> = (0..n).map(|i| (v ^ (1 << i)) as u8).collect();
            members.push(v as u8);
            members.sort_unstable();
            closed_sorted[v] = members;
        }
        Search {
            n,
            full,
            closed_mask,
            open_mask,
            closed_sorted,
            chosen: Vec::new(),
            best: None,
            bound,
            stop_on_improvement,
            improved: false,
            nodes: 0,
            deadline: Instant::now() + budget,
            timed_out: false,
        }
    }

    fn done(&self) -> bool {
        self.timed_out || (self.stop_on_improvement && self.improved)
    }

    fn recurse(&mut self, dominated: u128, chosen_mask: u128, mut excluded: u128) {
        self.nodes += 1;
        if self.nodes & 0xFFF == 0 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.done() {
            return;
        }

        let undominated = self.full & !dominated;
        if undominated == 0 {
            // Chosen vertices are pairwise non-adjacent by construction, so
            // this is an independent dominating set.
            let size = self.chosen.len() as u32;
            if size < self.bound {
                self.bound = size;
                self.best = Some(self.chosen.clone());
                self.improved = true;
            }
            return;
        }

        let remaining = undominated.count_ones();
        let per_vertex = self.n + 1;
        if self.chosen.len() as u32 + remaining.div_ceil(per_vertex) >= self.bound {
            return;
        }

        let v = undominated.trailing_zeros() as usize;
        for i in 0..self.closed_sorted[v].len() {
            let w = self.closed_sorted[v][i];
            let w_bit = 1u128 << w;
            if excluded & w_bit != 0 || self.open_mask[w as usize] & chosen_mask != 0 {
                continue;
            }
            self.chosen.push(w);
            self.recurse(
                dominated | self.closed_mask[w as usize],
                chosen_mask | w_bit,
                excluded,
            );
            self.chosen.pop();
            excluded |= w_bit;
            if self.done() {
                return;
            }
        }
    }

    fn witness(&self, dim: Dimension) -> Option<(u32, VertexSet)> {
        self.best.as_ref().map(|chosen| {
            let members = chosen.iter().map(|&v| Vertex::from_bits(v as u64)).collect();
            (
                chosen.len() as u32,
                VertexSet::from_parts_unchecked(dim, members),
            )
        })
    }
}

fn check_args(n: Dimension, budget: Duration) -> Result<(), Error> {
    if n.get() > SOLVE_MAX_DIMENSION {
        return Err(Error::UnsupportedSolveDimension(n.get()));
    }
    if budget.is_zero() {
        return Err(Error::ZeroBudget);
    }
    Ok(())
}

/// Computes the independent domination number of `Q_n` with a certifying
/// witness, or the best set found if the budget expires first.
pub fn min_ids(n: Dimension, budget: Duration) -> Result<SolveResult, Error> {
    check_args(n, budget)?;
    let start = Instant::now();
    let mut search = Search::new(n.get(), u32::MAX, false, budget);
    search.recurse(0, 0, 0);
    let outcome = if search.timed_out {
        SolveOutcome::TimedOut {
            best: search.witness(n),
        }
    } else {
        let (alpha, witness) = search
            .witness(n)
            .expect("exhausted search always finds a dominating set");
        SolveOutcome::Optimal { alpha, witness }
    };
    Ok(SolveResult {
        dimension: n,
        outcome,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    })
}

/// Exhaustively proves (or refutes) that no independent dominating set of
/// cardinality below `size` exists in `Q_n`.
pub fn verify_no_smaller(
    n: Dimension,
    size: u32,
    budget: Duration,
) -> Result<NoSmallerOutcome, Error> {
    check_args(n, budget)?;
    let mut search = Search::new(n.get(), size, true, budget);
    search.recurse(0, 0, 0);
    if search.improved {
        let (_, witness) = search.witness(n).expect("improvement recorded a witness");
        Ok(NoSmallerOutcome::Refuted { witness })
    } else if search.timed_out {
        Ok(NoSmallerOutcome::TimedOut)
    } else {
        Ok(NoSmallerOutcome::Proven)
    }
}
