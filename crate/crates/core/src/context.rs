//! The parabolic pair: so(n+2k) with the k-th simple root crossed.

use crate::halfint::HalfInt;
use crate::root::{simple_roots, Root};
use crate::scalar::Scalar;
use crate::weight::Weight;

/// Hard cap on the rank supported by the exhaustive searches.
pub const MAX_RANK: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ContextError {
    #[error("n must be an odd integer >= 3, got {0}")]
    BadN(i64),
    #[error("k must be >= 1, got {0}")]
    BadK(i64),
    #[error("rank {rank} exceeds the supported bound {max}")]
    RankTooLarge { rank: usize, max: usize },
}

/// The pair (g, p): g = B_m = so(2m+1) with m = k + (n-1)/2, and p the
/// parabolic subalgebra with the k-th node crossed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParabolicContext {
    k: usize,
    n: usize,
}

impl ParabolicContext {
    pub fn new(k: i64, n: i64) -> Result<Self, ContextError> {
        if n < 3 || n % 2 == 0 {
            return Err(ContextError::BadN(n));
        }
        if k < 1 {
            return Err(ContextError::BadK(k));
        }
        let ctx = ParabolicContext { k: k as usize, n: n as usize };
        if ctx.rank() > MAX_RANK {
            return Err(ContextError::RankTooLarge { rank: ctx.rank(), max: MAX_RANK });
        }
        Ok(ctx)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank m = k + (n-1)/2.
    pub fn rank(&self) -> usize {
        self.k + (self.n - 1) / 2
    }

    /// The crossed simple root a_k.
    pub fn crossed_root(&self) -> Root {
        simple_roots(self.rank())[self.k - 1]
    }

    /// Simple roots of the reductive part, i.e. all simple roots except the
    /// crossed one, in index order.
    pub fn uncrossed_simple_roots(&self) -> Vec<Root> {
        simple_roots(self.rank())
            .into_iter()
            .enumerate()
            .filter(|(idx, _)| idx + 1 != self.k)
            .map(|(_, alpha)| alpha)
            .collect()
    }

    /// True when the whole orbit carries a second family of p-dominant
    /// weights (the two blocks can trade contents).
    pub fn has_mirror_family(&self) -> bool {
        self.k == (self.n - 1) / 2
    }

    /// Half the sum of positive roots: [m-1/2, ..., 3/2, 1/2], carrying this
    /// context's block split.
    pub fn delta<T: Scalar>(&self) -> Weight<T> {
        let m = self.rank();
        let coords = (1..=m)
            .map(|i| HalfInt::from_twice(T::from_i32((2 * (m - i) + 1) as i32)))
            .collect();
        Weight::new(coords, self.k)
    }

    /// Membership in the shifted dominant chamber for p: the pairing with
    /// every uncrossed simple coroot is a strictly positive integer. In
    /// block terms this is strict descent inside each block with integral
    /// steps, a strictly positive last coordinate, and a second block that
    /// is all integers or all strict half-integers.
    pub fn is_p_dominant_integral_shifted<T: Scalar>(&self, w: &Weight<T>) -> bool {
        debug_assert_eq!(w.rank(), self.rank(), "weight rank mismatch");
        self.uncrossed_simple_roots()
            .iter()
            .all(|&alpha| w.pairing(alpha).is_positive_integer())
    }

    /// Strict p-dominance without the integrality requirement, used for
    /// images of delta under Weyl group elements.
    pub fn is_strictly_p_dominant<T: Scalar>(&self, w: &Weight<T>) -> bool {
        self.uncrossed_simple_roots()
            .iter()
            .all(|&alpha| w.pairing(alpha).is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(k: i64, n: i64) -> ParabolicContext {
        ParabolicContext::new(k, n).unwrap()
    }

    fn w(s: &str) -> Weight<i64> {
        s.parse().unwrap()
    }

    #[test]
    fn construction_checks_arguments() {
        assert_eq!(ParabolicContext::new(2, 4), Err(ContextError::BadN(4)));
        assert_eq!(ParabolicContext::new(0, 3), Err(ContextError::BadK(0)));
        assert!(matches!(
            ParabolicContext::new(5, 7),
            Err(ContextError::RankTooLarge { rank: 8, .. })
        ));
        assert_eq!(ctx(2, 7).rank(), 5);
    }

    #[test]
    fn delta_values() {
        assert_eq!(ctx(1, 3).delta::<i64>(), w("[3/2|1/2]"));
        assert_eq!(ctx(2, 7).delta::<i64>(), w("[9/2,7/2|5/2,3/2,1/2]"));
    }

    #[test]
    fn delta_pairs_to_one_with_every_simple_root() {
        for (k, n) in [(1, 3), (2, 7), (3, 7), (4, 3), (1, 13)] {
            let c = ctx(k, n);
            let delta = c.delta::<i64>();
            for alpha in simple_roots(c.rank()) {
                assert_eq!(delta.pairing(alpha).twice(), 2, "alpha={alpha}");
            }
            assert!(!delta.is_singular());
            assert!(c.is_p_dominant_integral_shifted(&delta));
        }
    }

    #[test]
    fn p_dominance_examples() {
        let c = ctx(2, 7);
        assert!(c.is_p_dominant_integral_shifted(&w("[3/2,1/2|3,2,1]")));
        assert!(!c.is_p_dominant_integral_shifted(&w("[1/2,3/2|3,2,1]")));
        assert!(ctx(2, 5).is_p_dominant_integral_shifted(&w("[2,1|3/2,1/2]")));
        // mixed integer/half-integer second block fails integrality
        assert!(!ctx(2, 5).is_p_dominant_integral_shifted(&w("[5/2,1/2|3/2,1]")));
        // last coordinate must be strictly positive
        assert!(!ctx(1, 5).is_p_dominant_integral_shifted(&w("[5/2|1,0]")));
    }

    #[test]
    fn uncrossed_roots_skip_the_crossed_node() {
        assert_eq!(
            ctx(2, 7).uncrossed_simple_roots(),
            vec![
                Root::Diff(1, 2),
                Root::Diff(3, 4),
                Root::Diff(4, 5),
                Root::Short(5)
            ]
        );
        assert_eq!(ctx(2, 7).crossed_root(), Root::Diff(2, 3));
    }

    #[test]
    fn mirror_family_flag() {
        assert!(ctx(1, 3).has_mirror_family());
        assert!(ctx(2, 5).has_mirror_family());
        assert!(ctx(3, 7).has_mirror_family());
        assert!(!ctx(2, 7).has_mirror_family());
        assert!(!ctx(4, 3).has_mirror_family());
    }
}
