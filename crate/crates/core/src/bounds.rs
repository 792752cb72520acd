//! Dimension classification and the lower/upper bounds on the independent
//! domination number of `Q_n`.
//!
//! Every dimension `n` has a unique `k` with `2^k - 1 <= n < 2^(k+1) - 1`.
//! Within that window the applicable upper-bound formula splits at the
//! threshold `7 * 2^(k-2) - 1`:
//!
//! * `n = 2^k - 1`: the bound `2^(n-k)` is met with equality (perfect codes).
//! * below the threshold (case 1): `2^(n-k)`.
//! * at or above it (case 2, requires `k > 1`): `3 * 2^(n-k-2)`.
//!
//! All arithmetic is exact in `u64`; the largest value in range is
//! `3 * 2^55` at `n = 62`.

use std::fmt;

use crate::vertex::Dimension;

/// Which bound regime a dimension falls in.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DimensionCase {
    /// `n = 2^k - 1`; the upper bound is the exact domination number.
    Exact,
    /// `2^k - 1 < n < 7 * 2^(k-2) - 1`.
    Case1,
    /// `7 * 2^(k-2) - 1 <= n < 2^(k+1) - 1`, only for `k > 1`.
    Case2,
}

impl fmt::Display for DimensionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DimensionCase::Exact => "exact",
            DimensionCase::Case1 => "case1",
            DimensionCase::Case2 => "case2",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct DimensionClass {
    pub n: Dimension,
    pub k: u32,
    pub case: DimensionCase,
}

/// Finds the unique `k` and case for `n`.
pub fn classify(n: Dimension) -> DimensionClass {
    let nn = n.get() as u64;
    // floor(log2(n + 1)) gives 2^k - 1 <= n < 2^(k+1) - 1
    let k = 63 - (nn + 1).leading_zeros();
    debug_assert!((1u64 << k) - 1 <= nn && nn < (1u64 << (k + 1)) - 1);
    let case = if nn == (1u64 << k) - 1 {
        DimensionCase::Exact
    } else if k > 1 && nn >= 7 * (1u64 << (k - 2)) - 1 {
        DimensionCase::Case2
    } else {
        DimensionCase::Case1
    };
    DimensionClass { n, k, case }
}

/// `floor(2^n / (n + 1))`: no vertex dominates more than `n + 1` vertices
/// including itself, so at least this many are needed.
pub fn lower_bound(n: Dimension) -> u64 {
    n.vertex_count() / (n.get() as u64 + 1)
}

/// An upper bound on the independent domination number, kept in
/// `coefficient * 2^exponent` form so displays can mirror the closed formula.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct UpperBound {
    pub value: u64,
    pub coefficient: u32,
    pub exponent: u32,
    pub case: DimensionCase,
}

impl fmt::Display for UpperBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient == 1 {
            write!(f, "2^{}", self.exponent)
        } else {
            write!(f, "{}*2^{}", self.coefficient, self.exponent)
        }
    }
}

/// The constructive upper bound for `n`: `2^(n-k)` in the exact and case-1
/// regimes, `3 * 2^(n-k-2)` in case 2.
pub fn upper_bound(n: Dimension) -> UpperBound {
    let DimensionClass { k, case, .. } = classify(n);
    let (coefficient, exponent) = match case {
        DimensionCase::Exact | DimensionCase::Case1 => (1u32, n.get() - k),
        DimensionCase::Case2 => (3u32, n.get() - k - 2),
    };
    UpperBound {
        value: (coefficient as u64) << exponent,
        coefficient,
        exponent,
        case,
    }
}

/// True when the independent domination number of `Q_n` is exactly known:
/// the six smallest dimensions, `n = 2^k - 1`, and `n = 2^k`.
pub fn alpha_known_exact(n: Dimension) -> bool {
    let nn = n.get() as u64;
    nn <= 6 || (nn + 1).is_power_of_two() || nn.is_power_of_two()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: u32) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify(dim(7));
        assert_eq!((c.k, c.case), (3, DimensionCase::Exact));
        let c = classify(dim(9));
        assert_eq!((c.k, c.case), (3, DimensionCase::Case1));
        let c = classify(dim(13));
        assert_eq!((c.k, c.case), (3, DimensionCase::Case2));
    }

    #[test]
    fn classify_boundaries() {
        // n = 1, 2 sit in the k = 1 window where case 2 cannot arise.
        assert_eq!(classify(dim(1)).case, DimensionCase::Exact);
        assert_eq!(classify(dim(2)).case, DimensionCase::Case1);
        assert_eq!(classify(dim(2)).k, 1);
        // thresholds 7 * 2^(k-2) - 1 for k = 2..=5: 6, 13, 27, 55
        for (threshold, k) in [(6, 2), (13, 3), (27, 4), (55, 5)] {
            let c = classify(dim(threshold));
            assert_eq!((c.k, c.case), (k, DimensionCase::Case2), "n={threshold}");
            let c = classify(dim(threshold - 1));
            assert_eq!(c.case, DimensionCase::Case1, "n={}", threshold - 1);
        }
        for exact in [3, 7, 15, 31] {
            assert_eq!(classify(dim(exact)).case, DimensionCase::Exact);
        }
        let c = classify(dim(62));
        assert_eq!((c.k, c.case), (5, DimensionCase::Case2));
    }

    #[test]
    fn k_is_unique_over_the_whole_range() {
        for n in 1..=62u32 {
            let k = classify(dim(n)).k;
            assert!((1u64 << k) - 1 <= n as u64);
            assert!((n as u64) < (1u64 << (k + 1)) - 1);
        }
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(dim(7)), 16);
        assert_eq!(lower_bound(dim(3)), 2);
        // floor(64 / 7); strictly below the true value 12 for n = 6
        assert_eq!(lower_bound(dim(6)), 9);
    }

    #[test]
    fn upper_bound_examples() {
        let b = upper_bound(dim(6));
        assert_eq!((b.value, b.coefficient, b.exponent), (12, 3, 2));
        assert_eq!(b.to_string(), "3*2^2");
        let b = upper_bound(dim(13));
        assert_eq!((b.value, b.to_string()), (768, "3*2^8".into()));
        let b = upper_bound(dim(11));
        assert_eq!((b.value, b.to_string()), (256, "2^8".into()));
    }

    #[test]
    fn n60_follows_the_case2_formula() {
        // k = 5, so 3 * 2^(60 - 5 - 2); consistent with the neighboring rows
        // (n = 59 gives 3*2^52, n = 61 gives 3*2^54).
        let b = upper_bound(dim(60));
        assert_eq!(b.value, 3u64 << 53);
        assert_eq!(b.to_string(), "3*2^53");
        assert_eq!(upper_bound(dim(59)).value, 3u64 << 52);
        assert_eq!(upper_bound(dim(61)).value, 3u64 << 54);
    }

    #[test]
    fn bounds_are_ordered_and_case2_improves() {
        for n in 1..=62u32 {
            let d = dim(n);
            let ub = upper_bound(d);
            assert!(lower_bound(d) <= ub.value, "n={n}");
            if ub.case == DimensionCase::Case2 {
                let k = classify(d).k;
                let prior = 1u64 << (n - k);
                assert_eq!(ub.value, 3u64 << (n - k - 2), "n={n}");
                assert!(ub.value < prior, "n={n}");
                // exactly a 3/4 improvement
                assert_eq!(ub.value * 4, prior * 3, "n={n}");
            }
        }
    }

    #[test]
    fn exactness_marker() {
        let exact: Vec<u32> = (1..=62).filter(|&n| alpha_known_exact(dim(n))).collect();
        assert_eq!(exact, vec![1, 2, 3, 4, 5, 6, 7, 8, 15, 16, 31, 32]);
    }
}
