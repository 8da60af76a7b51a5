//! Bruhat order on the Weyl group, with an independent subword oracle.
//!
//! The primary decision procedure grows chains upward: `w <= w'` holds when
//! repeated left multiplication by root reflections, each raising the length
//! by exactly one, leads from `w` to `w'`. Upward reach sets are memoized
//! per start element behind a reader/writer lock, so repeated queries over a
//! whole group cost one search per element.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use crate::root::{positive_roots, simple_roots};
use crate::weyl::WeylElem;

type Key = [i8; 8];

static UP_SETS: OnceLock<RwLock<HashMap<Key, Arc<HashSet<Key>>>>> = OnceLock::new();

fn up_set_cache() -> &'static RwLock<HashMap<Key, Arc<HashSet<Key>>>> {
    UP_SETS.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Everything reachable from `w` by length-raising reflection steps,
/// including `w` itself; this is the upper Bruhat cone of `w`.
fn up_set(w: &WeylElem) -> Arc<HashSet<Key>> {
    if let Some(hit) = up_set_cache().read().unwrap().get(&w.key()) {
        return Arc::clone(hit);
    }
    let rank = w.rank();
    let reflections: Vec<WeylElem> = positive_roots(rank)
        .into_iter()
        .map(|beta| WeylElem::reflection(beta, rank))
        .collect();
    let mut seen: HashSet<Key> = HashSet::new();
    seen.insert(w.key());
    let mut frontier = vec![(w.clone(), w.length())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (u, len) in &frontier {
            for s in &reflections {
                let v = s.compose(u);
                let vlen = v.length();
                if vlen == len + 1 && seen.insert(v.key()) {
                    next.push((v, vlen));
                }
            }
        }
        frontier = next;
    }
    let set = Arc::new(seen);
    up_set_cache()
        .write()
        .unwrap()
        .entry(w.key())
        .or_insert_with(|| Arc::clone(&set))
        .clone()
}

/// Bruhat comparison via chain search, pruned by length.
pub fn bruhat_leq(w: &WeylElem, w_prime: &WeylElem) -> bool {
    assert_eq!(w.rank(), w_prime.rank(), "rank mismatch");
    if w == w_prime {
        return true;
    }
    if w.length() >= w_prime.length() {
        return false;
    }
    up_set(w).contains(&w_prime.key())
}

/// One reduced word for `w`, built by greedy left descent: always strip the
/// lowest-index simple reflection that lowers the length. Deterministic.
pub fn reduced_word(w: &WeylElem) -> Vec<usize> {
    let rank = w.rank();
    let simples: Vec<WeylElem> = simple_roots(rank)
        .into_iter()
        .map(|alpha| WeylElem::reflection(alpha, rank))
        .collect();
    let mut u = w.clone();
    let mut len = u.length();
    let mut word = Vec::with_capacity(len);
    while len > 0 {
        let (idx, stripped, l) = simples
            .iter()
            .enumerate()
            .find_map(|(idx, s)| {
                let cand = s.compose(&u);
                let l = cand.length();
                (l < len).then_some((idx, cand, l))
            })
            .expect("a non-identity element has a left descent");
        word.push(idx + 1);
        u = stripped;
        len = l;
    }
    word
}

/// Independent oracle for the Bruhat order: the subword property. Fixes the
/// greedy reduced word of `w_prime` and searches for a subword of length
/// l(w) multiplying to `w`. Exponential in l(w_prime); for cross-checks on
/// small ranks only.
pub fn bruhat_leq_oracle(w: &WeylElem, w_prime: &WeylElem) -> bool {
    assert_eq!(w.rank(), w_prime.rank(), "rank mismatch");
    let rank = w.rank();
    let word = reduced_word(w_prime);
    let target_len = w.length();
    if target_len > word.len() {
        return false;
    }
    let simples: Vec<WeylElem> = simple_roots(rank)
        .into_iter()
        .map(|alpha| WeylElem::reflection(alpha, rank))
        .collect();
    assert!(word.len() < 64, "oracle word too long");
    for mask in 0u64..(1 << word.len()) {
        if mask.count_ones() as usize != target_len {
            continue;
        }
        let mut prod = WeylElem::identity(rank);
        for (pos, &letter) in word.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                prod = prod.compose(&simples[letter - 1]);
            }
        }
        if &prod == w {
            return true;
        }
    }
    false
}
