//! Positive roots of the type-B root system in the standard basis.

use std::fmt;

/// A positive root of B_m. Indices are 1-based and satisfy i < j.
///
/// `Diff(i,j)` is e_i - e_j, `Sum(i,j)` is e_i + e_j and `Short(i)` is e_i,
/// giving m^2 positive roots in total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    Diff(usize, usize),
    Sum(usize, usize),
    Short(usize),
}

impl Root {
    /// Largest coordinate index the root touches.
    pub fn max_index(self) -> usize {
        match self {
            Root::Diff(_, j) | Root::Sum(_, j) => j,
            Root::Short(i) => i,
        }
    }

    pub fn is_valid_for_rank(self, rank: usize) -> bool {
        match self {
            Root::Diff(i, j) | Root::Sum(i, j) => 1 <= i && i < j && j <= rank,
            Root::Short(i) => 1 <= i && i <= rank,
        }
    }

    /// Grading of the root space with respect to the block split at `k`:
    /// the number of indices in the first block, counted with sign pattern.
    /// This is the eigenvalue of the grading element on the root space.
    pub fn grading(self, k: usize) -> i64 {
        let ind = |i: usize| i64::from(i <= k);
        match self {
            Root::Diff(i, j) => ind(i) - ind(j),
            Root::Sum(i, j) => ind(i) + ind(j),
            Root::Short(i) => ind(i),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Short(i) => write!(f, "e{i}"),
        }
    }
}

/// All positive roots of B_m in a fixed deterministic order.
pub fn positive_roots(rank: usize) -> Vec<Root> {
    let mut roots = Vec::with_capacity(rank * rank);
    for i in 1..=rank {
        for j in (i + 1)..=rank {
            roots.push(Root::Diff(i, j));
        }
    }
    for i in 1..=rank {
        for j in (i + 1)..=rank {
            roots.push(Root::Sum(i, j));
        }
    }
    for i in 1..=rank {
        roots.push(Root::Short(i));
    }
    roots
}

/// The simple roots a_1, ..., a_m of B_m in index order: a_i = e_i - e_{i+1}
/// for i < m and a_m = e_m.
pub fn simple_roots(rank: usize) -> Vec<Root> {
    let mut simples: Vec<Root> =
        (1..rank).map(|i| Root::Diff(i, i + 1)).collect();
    simples.push(Root::Short(rank));
    simples
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_count_is_rank_squared() {
        for rank in 1..=7 {
            assert_eq!(positive_roots(rank).len(), rank * rank);
        }
    }

    #[test]
    fn simple_roots_in_index_order() {
        assert_eq!(
            simple_roots(3),
            vec![Root::Diff(1, 2), Root::Diff(2, 3), Root::Short(3)]
        );
    }

    #[test]
    fn root_gradings_for_split() {
        // split k=2 in rank 5
        assert_eq!(Root::Diff(1, 2).grading(2), 0);
        assert_eq!(Root::Diff(2, 3).grading(2), 1);
        assert_eq!(Root::Sum(1, 2).grading(2), 2);
        assert_eq!(Root::Sum(2, 5).grading(2), 1);
        assert_eq!(Root::Short(1).grading(2), 1);
        assert_eq!(Root::Short(4).grading(2), 0);
    }
}
