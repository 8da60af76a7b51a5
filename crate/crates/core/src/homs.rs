//! Decision procedures for Verma module and generalized Verma module
//! homomorphisms, working entirely on shifted highest weights.
//!
//! A true Verma module homomorphism into the module of weight `lambda`
//! exists for weight `mu` exactly when a chain of root reflections, each
//! evaluated at the upper weight to a strictly positive integer pairing,
//! walks `lambda` down to `mu`. The chain search runs downward from the
//! upper weight because pairings must be evaluated there; the full downward
//! reach set is memoized per upper weight so that orbit-wide pair queries
//! cost one search per distinct upper weight.
//!
//! The standard homomorphism between the induced generalized modules is
//! nonzero exactly when the true Verma homomorphism exists and does not
//! factor through any wall reflection of the upper weight by an uncrossed
//! simple root.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock, RwLock};

use crate::context::ParabolicContext;
use crate::halfint::HalfInt;
use crate::root::Root;
use crate::scalar::Scalar;
use crate::weight::Weight;

const MAX_BFS_RANK: usize = 8;

/// Doubled coordinates, zero padded to fixed width.
type State = [i32; MAX_BFS_RANK];

type ReachKey = (u8, State);

static REACH_SETS: OnceLock<RwLock<HashMap<ReachKey, Arc<HashSet<State>>>>> =
    OnceLock::new();

fn reach_cache() -> &'static RwLock<HashMap<ReachKey, Arc<HashSet<State>>>> {
    REACH_SETS.get_or_init(|| RwLock::new(HashMap::new()))
}

fn encode<T: Scalar>(w: &Weight<T>) -> State {
    let mut state = [0i32; MAX_BFS_RANK];
    for (slot, c) in state.iter_mut().zip(w.coords()) {
        let twice = c.twice_i64();
        assert!(
            i64::from(i32::MIN / 4) < twice && twice < i64::from(i32::MAX / 4),
            "weight coordinate too large for the chain search"
        );
        *slot = twice as i32;
    }
    state
}

/// All weights reachable from `upper` by chains of reflections with strictly
/// positive integral pairing, `upper` included. The search stays on the
/// finite Weyl orbit, so it terminates on every input.
fn reach_set(upper: State, rank: usize) -> Arc<HashSet<State>> {
    let key = (rank as u8, upper);
    if let Some(hit) = reach_cache().read().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let mut seen: HashSet<State> = HashSet::new();
    seen.insert(upper);
    let mut queue: VecDeque<State> = VecDeque::new();
    queue.push_back(upper);
    while let Some(s) = queue.pop_front() {
        let mut push = |next: State| {
            if seen.insert(next) {
                queue.push_back(next);
            }
        };
        for i in 0..rank {
            // short root e_{i+1}: pairing is twice the coordinate
            if s[i] > 0 {
                let mut next = s;
                next[i] = -next[i];
                push(next);
            }
            for j in (i + 1)..rank {
                // e_i - e_j wants a positive even doubled difference
                let diff = s[i] - s[j];
                if diff > 0 && diff % 2 == 0 {
                    let mut next = s;
                    next.swap(i, j);
                    push(next);
                }
                let sum = s[i] + s[j];
                if sum > 0 && sum % 2 == 0 {
                    let mut next = s;
                    next[i] = -s[j];
                    next[j] = -s[i];
                    push(next);
                }
            }
        }
    }
    let set = Arc::new(seen);
    reach_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::clone(&set))
        .clone()
}

// Necessary condition for lower to be below upper in the chain order:
// every positive root has non-negative prefix sums, so prefix sums can
// only shrink along a chain.
fn prefix_sums_dominate(upper: &State, lower: &State, rank: usize) -> bool {
    let mut acc_u = 0i64;
    let mut acc_l = 0i64;
    for i in 0..rank {
        acc_u += i64::from(upper[i]);
        acc_l += i64::from(lower[i]);
        if acc_l > acc_u {
            return false;
        }
    }
    true
}

/// Existence of a nonzero true Verma module homomorphism from the module of
/// weight `mu` into the module of weight `lambda` (block splits ignored).
pub fn verma_hom_exists<T: Scalar>(mu: &Weight<T>, lambda: &Weight<T>) -> bool {
    assert_eq!(mu.rank(), lambda.rank(), "rank mismatch");
    let rank = mu.rank();
    assert!(rank <= MAX_BFS_RANK, "rank beyond the chain search bound");
    let upper = encode(lambda);
    let lower = encode(mu);
    if upper == lower {
        return true;
    }
    if !prefix_sums_dominate(&upper, &lower, rank) {
        return false;
    }
    reach_set(upper, rank).contains(&lower)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("weight {0} is not p-dominant p-integral (shifted)")]
pub struct NotPDominant(pub String);

/// Outcome of the standard homomorphism decision for a pair of shifted
/// p-dominant weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomVerdict<T: Scalar = i64> {
    /// A nonzero true Verma module homomorphism exists.
    pub true_verma_exists: bool,
    /// The standard homomorphism of the generalized modules is nonzero.
    pub standard_nonzero: bool,
    /// When the true Verma homomorphism exists but the standard one
    /// vanishes: the lowest-index uncrossed simple root it factors through.
    pub vanishing_witness: Option<Root>,
    /// Difference of grading evaluations; bounds the operator order.
    pub order_bound: HalfInt<T>,
}

/// Decides whether the standard homomorphism from the generalized module of
/// `mu` into that of `lambda` is nonzero: the true Verma homomorphism must
/// exist and must not land inside any wall module of `lambda` by an
/// uncrossed simple root.
pub fn standard_hom_nonzero<T: Scalar>(
    mu: &Weight<T>,
    lambda: &Weight<T>,
    ctx: &ParabolicContext,
) -> Result<HomVerdict<T>, NotPDominant> {
    for w in [mu, lambda] {
        if !ctx.is_p_dominant_integral_shifted(w) {
            return Err(NotPDominant(w.to_string()));
        }
    }
    let order_bound = lambda.grading_eval() - mu.grading_eval();
    let true_verma_exists = verma_hom_exists(mu, lambda);
    if !true_verma_exists {
        return Ok(HomVerdict {
            true_verma_exists,
            standard_nonzero: false,
            vanishing_witness: None,
            order_bound,
        });
    }
    let witness = ctx
        .uncrossed_simple_roots()
        .into_iter()
        .find(|&alpha| verma_hom_exists(mu, &lambda.reflect(alpha)));
    Ok(HomVerdict {
        true_verma_exists,
        standard_nonzero: witness.is_none(),
        vanishing_witness: witness,
        order_bound,
    })
}

/// Order data of the differential operator dual to an established nonzero
/// homomorphism: the grading difference bounds the order and equals it when
/// the bound is 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OperatorOrder<T: Scalar = i64> {
    pub bound: HalfInt<T>,
    pub order: Option<u8>,
}

pub fn operator_order<T: Scalar>(mu: &Weight<T>, lambda: &Weight<T>) -> OperatorOrder<T> {
    let bound = lambda.grading_eval() - mu.grading_eval();
    let order = match bound.twice_i64() {
        2 => Some(1),
        4 => Some(2),
        _ => None,
    };
    OperatorOrder { bound, order }
}

/// All p-dominant p-integral (shifted) weights on the Weyl orbit of a
/// dominant weight, enumerated by backtracking over strictly descending
/// signed selections for the first block; the full orbit is never
/// materialized. Results come back in canonical text order.
pub fn orbit_p_dominant<T: Scalar>(
    dominant: &Weight<T>,
    ctx: &ParabolicContext,
) -> Vec<Weight<T>> {
    assert!(dominant.is_dominant(), "orbit enumeration needs a dominant weight");
    assert_eq!(dominant.rank(), ctx.rank(), "rank mismatch");
    let values = dominant.coords();
    let k = ctx.k();
    let mut found: HashSet<Vec<HalfInt<T>>> = HashSet::new();
    let mut results: Vec<Weight<T>> = Vec::new();
    let mut chosen: Vec<HalfInt<T>> = Vec::with_capacity(k);
    let mut used = vec![false; values.len()];

    fn descend<T: Scalar>(
        values: &[HalfInt<T>],
        used: &mut Vec<bool>,
        chosen: &mut Vec<HalfInt<T>>,
        k: usize,
        ctx: &ParabolicContext,
        found: &mut HashSet<Vec<HalfInt<T>>>,
        results: &mut Vec<Weight<T>>,
    ) {
        if chosen.len() == k {
            // remaining values, all signs positive, sorted descending
            let mut rest: Vec<HalfInt<T>> = values
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(&v, _)| v)
                .collect();
            rest.sort_unstable_by(|a, b| b.cmp(a));
            let mut coords = chosen.clone();
            coords.extend(rest);
            let candidate = Weight::new(coords, k);
            if ctx.is_p_dominant_integral_shifted(&candidate)
                && found.insert(candidate.coords().to_vec())
            {
                results.push(candidate);
            }
            return;
        }
        for idx in 0..values.len() {
            if used[idx] || (idx > 0 && values[idx] == values[idx - 1] && !used[idx - 1]) {
                continue;
            }
            for value in [values[idx], -values[idx]] {
                if chosen.last().is_some_and(|&prev| value >= prev) {
                    continue;
                }
                used[idx] = true;
                chosen.push(value);
                descend(values, used, chosen, k, ctx, found, results);
                chosen.pop();
                used[idx] = false;
            }
        }
    }

    descend(values, &mut used, &mut chosen, k, ctx, &mut found, &mut results);
    results.sort_unstable_by_key(|w| w.to_string());
    results
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
    fn identity_chain_exists() {
        let lam = w("[3/2,1/2|3,2,1]");
        assert!(verma_hom_exists(&lam, &lam));
    }

    #[test]
    fn single_reflection_chains() {
        // the first two maps of the k=2 sequence at the true Verma level
        assert!(verma_hom_exists(&w("[3/2,-1/2|3,2,1]"), &w("[3/2,1/2|3,2,1]")));
        assert!(verma_hom_exists(&w("[1/2,-3/2|3,2,1]"), &w("[1/2,3/2|3,2,1]")));
        // and a failing direction: prefix sums rise
        assert!(!verma_hom_exists(&w("[3/2,1/2|3,2,1]"), &w("[3/2,-1/2|3,2,1]")));
    }

    #[test]
    fn transitivity_along_the_k2_chain() {
        let chain = [
            w("[3/2,1/2|3,2,1]"),
            w("[3/2,-1/2|3,2,1]"),
            w("[1/2,-3/2|3,2,1]"),
            w("[-1/2,-3/2|3,2,1]"),
        ];
        for i in 0..chain.len() {
            for j in i..chain.len() {
                assert!(verma_hom_exists(&chain[j], &chain[i]), "{i}->{j}");
            }
        }
    }

    #[test]
    fn standard_hom_verdicts_for_the_k2_sequence() {
        let c = ctx(2, 7);
        let lam = w("[3/2,1/2|3,2,1]");
        let mu = w("[3/2,-1/2|3,2,1]");
        let nu = w("[1/2,-3/2|3,2,1]");

        let v = standard_hom_nonzero(&mu, &lam, &c).unwrap();
        assert!(v.true_verma_exists && v.standard_nonzero);
        assert_eq!(v.vanishing_witness, None);
        assert_eq!(v.order_bound.to_string(), "1");

        // the composite map vanishes through the first simple root
        let v = standard_hom_nonzero(&nu, &lam, &c).unwrap();
        assert!(v.true_verma_exists && !v.standard_nonzero);
        assert_eq!(v.vanishing_witness, Some(Root::Diff(1, 2)));

        let v = standard_hom_nonzero(&lam, &lam, &c).unwrap();
        assert!(v.standard_nonzero);
        assert_eq!(v.order_bound.to_string(), "0");

        // the hard middle map is nonzero with order bound 2
        let v = standard_hom_nonzero(&nu, &mu, &c).unwrap();
        assert!(v.standard_nonzero);
        assert_eq!(v.order_bound.to_string(), "2");
    }

    #[test]
    fn standard_hom_requires_p_dominance() {
        let c = ctx(2, 7);
        let bad = w("[1/2,3/2|3,2,1]");
        let lam = w("[3/2,1/2|3,2,1]");
        assert_eq!(
            standard_hom_nonzero(&bad, &lam, &c),
            Err(NotPDominant(bad.to_string()))
        );
    }

    #[test]
    fn operator_orders() {
        let lam = w("[3/2,1/2|3,2,1]");
        let mu = w("[3/2,-1/2|3,2,1]");
        let nu = w("[1/2,-3/2|3,2,1]");
        assert_eq!(operator_order(&mu, &lam), OperatorOrder {
            bound: HalfInt::from_int(1),
            order: Some(1)
        });
        assert_eq!(operator_order(&nu, &mu), OperatorOrder {
            bound: HalfInt::from_int(2),
            order: Some(2)
        });
        assert_eq!(operator_order(&lam, &lam), OperatorOrder {
            bound: HalfInt::zero(),
            order: None
        });
    }

    #[test]
    fn orbit_enumeration_for_k2_n7() {
        let c = ctx(2, 7);
        let weights = orbit_p_dominant(&w("[3,2,3/2,1,1/2]"), &c);
        let strings: Vec<String> = weights.iter().map(|x| x.to_string()).collect();
        let mut expect = vec![
            "[3/2,1/2|3,2,1]",
            "[3/2,-1/2|3,2,1]",
            "[1/2,-3/2|3,2,1]",
            "[-1/2,-3/2|3,2,1]",
        ];
        expect.sort_unstable();
        assert_eq!(strings, expect);
    }

    #[test]
    fn orbit_enumeration_counts() {
        // 2^k whenever the two blocks cannot trade contents
        let c = ctx(3, 7);
        let dom = w("[3,5/2,2,3/2,1,1/2]");
        assert_eq!(orbit_p_dominant(&dom, &c).len(), 16);

        let c = ctx(2, 5);
        let dom = w("[2,3/2,1,1/2]");
        let weights = orbit_p_dominant(&dom, &c);
        assert_eq!(weights.len(), 8);
        let strings: Vec<String> = weights.iter().map(|x| x.to_string()).collect();
        for s in ["[2,1|3/2,1/2]", "[2,-1|3/2,1/2]", "[1,-2|3/2,1/2]", "[-1,-2|3/2,1/2]"] {
            assert!(strings.contains(&s.to_string()), "missing {s}");
        }
    }

    #[test]
    fn orbit_enumeration_handles_repeated_values() {
        // singular orbit: duplicates must not produce duplicate weights
        let c = ctx(1, 3);
        let weights = orbit_p_dominant(&w("[1,1]"), &c);
        let strings: Vec<String> = weights.iter().map(|x| x.to_string()).collect();
        assert_eq!(strings, vec!["[-1|1]", "[1|1]"]);
    }
}
