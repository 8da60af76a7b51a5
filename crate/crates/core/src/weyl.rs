//! The Weyl group of B_m realized as signed permutations.
//!
//! An element stores one signed index per position: `images[i] = +-j`
//! (1-based) means that coordinate i of the image weight is +-(coordinate j
//! of the argument). With this convention `apply` is a linear orthogonal
//! action, composition satisfies `apply(u*v, w) = apply(u, apply(v, w))`,
//! and the reflection element of a root acts exactly like
//! [`Weight::reflect`].

use crate::context::ParabolicContext;
use crate::root::{positive_roots, Root};
use crate::scalar::Scalar;
use crate::weight::Weight;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElem {
    images: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("weight {0} is singular; the transporting element is not unique")]
    SingularWeight(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("{target} is not on the orbit of {dominant}")]
    NotOnOrbit { dominant: String, target: String },
}

impl WeylElem {
    pub fn identity(rank: usize) -> Self {
        WeylElem { images: (1..=rank as i8).collect() }
    }

    /// The reflection with respect to a positive root.
    pub fn reflection(beta: Root, rank: usize) -> Self {
        assert!(beta.is_valid_for_rank(rank));
        let mut w = WeylElem::identity(rank);
        match beta {
            Root::Diff(i, j) => {
                w.images[i - 1] = j as i8;
                w.images[j - 1] = i as i8;
            }
            Root::Sum(i, j) => {
                w.images[i - 1] = -(j as i8);
                w.images[j - 1] = -(i as i8);
            }
            Root::Short(i) => w.images[i - 1] = -(i as i8),
        }
        w
    }

    pub fn from_images(images: Vec<i8>) -> Self {
        let rank = images.len();
        let mut seen = vec![false; rank];
        for &v in &images {
            let j = v.unsigned_abs() as usize;
            assert!(j >= 1 && j <= rank && !seen[j - 1], "not a signed permutation");
            seen[j - 1] = true;
        }
        WeylElem { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as i8 + 1)
    }

    /// Group multiplication compatible with `apply`.
    pub fn compose(&self, rhs: &WeylElem) -> WeylElem {
        assert_eq!(self.rank(), rhs.rank());
        let images = self
            .images
            .iter()
            .map(|&u| {
                let v = rhs.images[u.unsigned_abs() as usize - 1];
                if u < 0 { -v } else { v }
            })
            .collect();
        WeylElem { images }
    }

    pub fn inverse(&self) -> WeylElem {
        let mut images = vec![0i8; self.rank()];
        for (pos, &v) in self.images.iter().enumerate() {
            let j = v.unsigned_abs() as usize;
            let signed_pos = pos as i8 + 1;
            images[j - 1] = if v < 0 { -signed_pos } else { signed_pos };
        }
        WeylElem { images }
    }

    /// Signed permutation action on a weight.
    pub fn apply<T: Scalar>(&self, w: &Weight<T>) -> Weight<T> {
        assert_eq!(self.rank(), w.rank(), "rank mismatch");
        let coords = self
            .images
            .iter()
            .map(|&v| {
                let c = w.coord(v.unsigned_abs() as usize);
                if v < 0 { -c } else { c }
            })
            .collect();
        Weight::new(coords, w.split())
    }

    /// Image of a positive root under the action, reported as a positive
    /// root together with the sign of the image.
    pub fn root_image(&self, beta: Root) -> (Root, bool) {
        Self::root_image_via_inverse(&self.inverse(), beta)
    }

    // The inverse tells where each coordinate lands: basis vector e_t maps
    // to +-e_p with inv.images[t-1] = +-p.
    fn root_image_via_inverse(inv: &WeylElem, beta: Root) -> (Root, bool) {
        let place = |t: usize| {
            let v = inv.images[t - 1];
            (v.unsigned_abs() as usize, v < 0)
        };
        match beta {
            Root::Short(i) => {
                let (p, neg) = place(i);
                (Root::Short(p), neg)
            }
            Root::Diff(i, j) | Root::Sum(i, j) => {
                let plus_j = matches!(beta, Root::Sum(..));
                let (pi, ni) = place(i);
                let (pj, nj_raw) = place(j);
                let nj = nj_raw ^ !plus_j; // sign of the e_j term in the image
                // image = s_i e_pi + s_j e_pj with s = (not n)
                let ((p1, n1), (p2, n2)) = if pi < pj {
                    ((pi, ni), (pj, nj))
                } else {
                    ((pj, nj), (pi, ni))
                };
                let root = if n1 == n2 {
                    Root::Sum(p1, p2)
                } else {
                    Root::Diff(p1, p2)
                };
                (root, n1)
            }
        }
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let inv = self.inverse();
        positive_roots(self.rank())
            .into_iter()
            .filter(|&beta| Self::root_image_via_inverse(&inv, beta).1)
            .count()
    }

    /// Canonical fixed-size encoding used as a cache key.
    pub(crate) fn key(&self) -> [i8; 8] {
        let mut key = [0i8; 8];
        key[..self.rank()].copy_from_slice(&self.images);
        key
    }
}

impl std::fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.images)
    }
}

/// Iterates over all 2^m * m! elements without materializing the group.
pub fn all_elements(rank: usize) -> impl Iterator<Item = WeylElem> {
    Permutations::new(rank).flat_map(move |perm| {
        (0u32..(1 << rank)).map(move |mask| {
            let images = perm
                .iter()
                .enumerate()
                .map(|(pos, &j)| if mask >> pos & 1 == 1 { -(j as i8) } else { j as i8 })
                .collect();
            WeylElem { images }
        })
    })
}

/// Lexicographic permutation stream of 1..=n.
struct Permutations {
    current: Option<Vec<u8>>,
}

impl Permutations {
    fn new(n: usize) -> Self {
        Permutations { current: Some((1..=n as u8).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let out = self.current.clone()?;
        let v = self.current.as_mut().unwrap();
        // standard next-permutation step
        let advance = (|| {
            let i = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1])?;
            let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
            Some(())
        })();
        if advance.is_none() {
            self.current = None;
        }
        Some(out)
    }
}

/// True when the element keeps every dominant weight p-dominant, tested on
/// delta alone (delta is strictly dominant, which decides the general case).
pub fn in_wp(w: &WeylElem, ctx: &ParabolicContext) -> bool {
    ctx.is_strictly_p_dominant(&w.apply(&ctx.delta::<i64>()))
}

/// Unique decomposition w = w_p * w^p with w^p the minimal-length coset
/// representative; lengths add. Computed by stripping uncrossed simple
/// reflections off the left while that lowers the length.
pub fn min_coset_rep(w: &WeylElem, ctx: &ParabolicContext) -> (WeylElem, WeylElem) {
    let rank = ctx.rank();
    assert_eq!(w.rank(), rank);
    let simples: Vec<WeylElem> = ctx
        .uncrossed_simple_roots()
        .into_iter()
        .map(|alpha| WeylElem::reflection(alpha, rank))
        .collect();
    let mut rep = w.clone();
    let mut parabolic = WeylElem::identity(rank);
    let mut len = rep.length();
    loop {
        let step = simples.iter().find_map(|s| {
            let cand = s.compose(&rep);
            let l = cand.length();
            (l < len).then_some((s, cand, l))
        });
        match step {
            Some((s, cand, l)) => {
                parabolic = parabolic.compose(s);
                rep = cand;
                len = l;
            }
            None => return (parabolic, rep),
        }
    }
}

/// The unique element taking a strictly dominant nonsingular weight to a
/// given weight on its orbit.
pub fn elem_taking<T: Scalar>(
    dominant: &Weight<T>,
    target: &Weight<T>,
) -> Result<WeylElem, OrbitError> {
    if !dominant.is_dominant() {
        return Err(OrbitError::NotDominant(dominant.to_string()));
    }
    if dominant.is_singular() {
        return Err(OrbitError::SingularWeight(dominant.to_string()));
    }
    let not_on_orbit = || OrbitError::NotOnOrbit {
        dominant: dominant.to_string(),
        target: target.to_string(),
    };
    if dominant.rank() != target.rank()
        || dominant.abs_multiset() != target.abs_multiset()
    {
        return Err(not_on_orbit());
    }
    // nonsingular dominant: coordinates strictly decreasing and positive,
    // so each |target coordinate| matches exactly one source position
    let images = target
        .coords()
        .iter()
        .map(|&c| {
            let j = dominant
                .coords()
                .iter()
                .position(|&d| d == c.abs())
                .expect("matched multiset");
            if c.is_positive() { j as i8 + 1 } else { -(j as i8 + 1) }
        })
        .collect();
    Ok(WeylElem { images })
}
