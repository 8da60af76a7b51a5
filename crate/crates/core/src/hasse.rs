//! The parabolic Hasse graph: minimal coset representatives with
//! length-raising reflection arrows.

use std::collections::HashMap;

use crate::context::ParabolicContext;
use crate::root::{positive_roots, Root};
use crate::weyl::{all_elements, in_wp, WeylElem};

/// Rank bound for building the whole graph; beyond this the group is too
/// large to sweep (|W| = 2^m m!).
pub const FULL_GRAPH_MAX_RANK: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HasseError {
    #[error(
        "rank {rank} too large for a full Hasse graph (bound {FULL_GRAPH_MAX_RANK}); \
         pass a maximum length to truncate"
    )]
    RankTooLarge { rank: usize },
}

/// An arrow w -> w' with w' = s_gamma w and l(w') = l(w) + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseArrow {
    pub from: usize,
    pub to: usize,
    pub gamma: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    /// Minimal coset representatives ordered by (length, images).
    pub vertices: Vec<WeylElem>,
    pub arrows: Vec<HasseArrow>,
}

impl HasseGraph {
    pub fn lengths(&self) -> Vec<usize> {
        self.vertices.iter().map(WeylElem::length).collect()
    }
}

/// Builds the parabolic Hasse graph up to `max_length` (`None` for the whole
/// graph, allowed through rank 5).
pub fn parabolic_hasse(
    ctx: &ParabolicContext,
    max_length: Option<usize>,
) -> Result<HasseGraph, HasseError> {
    let rank = ctx.rank();
    if max_length.is_none() && rank > FULL_GRAPH_MAX_RANK {
        return Err(HasseError::RankTooLarge { rank });
    }
    let cap = max_length.unwrap_or(rank * rank);
    let mut vertices: Vec<(usize, WeylElem)> = all_elements(rank)
        .filter(|w| w.length() <= cap && in_wp(w, ctx))
        .map(|w| (w.length(), w))
        .collect();
    vertices.sort_unstable_by(|a, b| (a.0, a.1.images()).cmp(&(b.0, b.1.images())));
    let index: HashMap<WeylElem, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, (_, w))| (w.clone(), i))
        .collect();
    let mut arrows = Vec::new();
    for (from, (len, w)) in vertices.iter().enumerate() {
        for gamma in positive_roots(rank) {
            let next = WeylElem::reflection(gamma, rank).compose(w);
            if next.length() == len + 1 {
                if let Some(&to) = index.get(&next) {
                    arrows.push(HasseArrow { from, to, gamma });
                }
            }
        }
    }
    Ok(HasseGraph {
        vertices: vertices.into_iter().map(|(_, w)| w).collect(),
        arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(k: i64, n: i64) -> ParabolicContext {
        ParabolicContext::new(k, n).unwrap()
    }

    #[test]
    fn b2_with_first_node_crossed_is_a_chain() {
        let graph = parabolic_hasse(&ctx(1, 3), None).unwrap();
        assert_eq!(graph.vertices.len(), 4);
        assert_eq!(graph.arrows.len(), 3);
        assert_eq!(graph.lengths(), vec![0, 1, 2, 3]);
        for (i, arrow) in graph.arrows.iter().enumerate() {
            assert_eq!((arrow.from, arrow.to), (i, i + 1));
        }
    }

    #[test]
    fn b3_with_first_node_crossed_is_a_chain() {
        // counts fixed by exhaustive enumeration
        let graph = parabolic_hasse(&ctx(1, 5), None).unwrap();
        assert_eq!(graph.vertices.len(), 6);
        assert_eq!(graph.arrows.len(), 5);
        assert_eq!(graph.lengths(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn arrows_connect_reflection_related_representatives() {
        let c = ctx(2, 3);
        let graph = parabolic_hasse(&c, None).unwrap();
        for arrow in &graph.arrows {
            let w = &graph.vertices[arrow.from];
            let w_prime = &graph.vertices[arrow.to];
            let s = WeylElem::reflection(arrow.gamma, c.rank());
            assert_eq!(&s.compose(w), w_prime);
            assert_eq!(w_prime.length(), w.length() + 1);
            assert!(in_wp(w, &c) && in_wp(w_prime, &c));
        }
    }

    #[test]
    fn truncation_by_length() {
        let c = ctx(1, 5);
        let graph = parabolic_hasse(&c, Some(2)).unwrap();
        assert_eq!(graph.vertices.len(), 3);
        assert!(graph.lengths().iter().all(|&l| l <= 2));
    }

    #[test]
    fn full_graph_refused_beyond_the_bound() {
        assert!(matches!(
            parabolic_hasse(&ctx(3, 7), None),
            Err(HasseError::RankTooLarge { rank: 6 })
        ));
        assert!(parabolic_hasse(&ctx(3, 7), Some(1)).is_ok());
    }
}
