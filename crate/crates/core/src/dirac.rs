//! The Dirac-operator orbit pipeline: builds the distinguished weight for a
//! pair (k, n), computes the full standard-homomorphism relation on its
//! p-dominant orbit, reduces it to covering arrows with operator orders, and
//! compares the result against the recursively defined expected diagram.

use std::collections::HashMap;

use crate::context::{ContextError, ParabolicContext};
use crate::halfint::HalfInt;
use crate::homs::{operator_order, orbit_p_dominant, standard_hom_nonzero, verma_hom_exists};
use crate::root::positive_roots;
use crate::scalar::Scalar;
use crate::weight::Weight;
use crate::weyl::{elem_taking, in_wp, WeylElem};

/// The weight whose dual operator is the Dirac operator in k Clifford
/// variables on R^n: first block (2k-1)/2 down to 1/2, second block
/// (n-1)/2 down to 1.
pub fn dirac_weight<T: Scalar>(ctx: &ParabolicContext) -> Weight<T> {
    let k = ctx.k();
    let mut coords: Vec<HalfInt<T>> = (0..k)
        .map(|i| HalfInt::from_twice(T::from_i32((2 * (k - i) - 1) as i32)))
        .collect();
    for b in (1..=(ctx.n() - 1) / 2).rev() {
        coords.push(HalfInt::from_int(T::from_i32(b as i32)));
    }
    Weight::new(coords, k)
}

/// Prefixes (2k-1)/2 to the first block, lifting a rank m-1 weight with
/// split k-1 to rank m with split k.
pub fn embed_prefix<T: Scalar>(w: &Weight<T>, k: usize) -> Weight<T> {
    assert_eq!(w.split() + 1, k, "embedding expects split k-1");
    let mut coords = vec![HalfInt::from_twice(T::from_i32((2 * k - 1) as i32))];
    coords.extend_from_slice(w.coords());
    Weight::new(coords, k)
}

/// Appends -(2k-1)/2 to the first block.
pub fn embed_append<T: Scalar>(w: &Weight<T>, k: usize) -> Weight<T> {
    assert_eq!(w.split() + 1, k, "embedding expects split k-1");
    let mut coords = w.coords().to_vec();
    coords.insert(w.split(), HalfInt::from_twice(T::from_i32(-((2 * k - 1) as i32))));
    Weight::new(coords, k)
}

/// An arrow of the operator diagram, pointing in operator direction: the
/// arrow from `from` to `to` encodes a nonzero standard homomorphism of the
/// generalized module of `to` into that of `from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HomArrow {
    pub from: usize,
    pub to: usize,
    /// Operator order when the bound decides it (always 1 or 2 here).
    pub order: Option<u8>,
    /// Grading drop along the arrow, doubled.
    pub bound_twice: i64,
    /// True for arrows introduced at the top recursion level k, joining the
    /// two embedded copies.
    pub connecting: bool,
}

/// Diagram flags carried along with the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphFlags {
    /// The dominant representative of the orbit is singular.
    pub singular: bool,
    /// k = (n-1)/2: the orbit carries a second family of p-dominant weights
    /// with the block contents traded.
    pub mirror_family: bool,
}

/// A homomorphism diagram over weight labels. Vertices are kept in
/// canonical text order and arrows sorted by (from, to).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomGraph<T: Scalar = i64> {
    pub vertices: Vec<Weight<T>>,
    pub arrows: Vec<HomArrow>,
    pub flags: GraphFlags,
}

impl<T: Scalar> HomGraph<T> {
    /// Label-level equality on vertices, arrows and orders (flags ignored).
    pub fn same_diagram(&self, other: &HomGraph<T>) -> bool {
        self.vertices == other.vertices
            && self.arrows.len() == other.arrows.len()
            && self
                .arrows
                .iter()
                .zip(&other.arrows)
                .all(|(a, b)| (a.from, a.to, a.order) == (b.from, b.to, b.order))
    }

    pub fn order_two_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.order == Some(2)).count()
    }

    pub fn connecting_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.connecting).count()
    }

    /// The induced subgraph on a vertex subset, reindexed.
    pub fn induced(&self, keep: &[usize]) -> HomGraph<T> {
        let remap: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(HomArrow {
                    from: *remap.get(&a.from)?,
                    to: *remap.get(&a.to)?,
                    ..*a
                })
            })
            .collect();
        HomGraph { vertices, arrows, flags: self.flags }
    }
}

/// The expected diagram for k Clifford variables, built by the recursion:
/// two embedded copies of the (k-1)-diagram joined by order-2 connecting
/// arrows, one for each vertex of the (k-2)-diagram. Vertices are the 2^k
/// strictly descending signed arrangements of ((2k-1)/2, ..., 1/2) over the
/// fixed second block of the context.
pub fn sk_graph<T: Scalar>(ctx: &ParabolicContext) -> HomGraph<T> {
    let k = ctx.k();
    let tail: Vec<HalfInt<T>> = (1..=(ctx.n() - 1) / 2)
        .rev()
        .map(|b| HalfInt::from_int(T::from_i32(b as i32)))
        .collect();

    // recursion over the first block alone; arrows carry (from, to, order,
    // connecting at THIS level)
    fn build<T: Scalar>(k: usize) -> (Vec<Vec<HalfInt<T>>>, Vec<(usize, usize, u8, bool)>) {
        match k {
            0 => (vec![vec![]], vec![]),
            1 => {
                let up = HalfInt::from_twice(T::from_i32(1));
                (vec![vec![up], vec![-up]], vec![(0, 1, 1, false)])
            }
            _ => {
                let top = HalfInt::from_twice(T::from_i32((2 * k - 1) as i32));
                let (sub_vertices, sub_arrows) = build::<T>(k - 1);
                let mut vertices: Vec<Vec<HalfInt<T>>> = Vec::with_capacity(2 * sub_vertices.len());
                for v in &sub_vertices {
                    let mut prefixed = vec![top];
                    prefixed.extend(v.iter().copied());
                    vertices.push(prefixed);
                }
                let offset = sub_vertices.len();
                for v in &sub_vertices {
                    let mut appended = v.clone();
                    appended.push(-top);
                    vertices.push(appended);
                }
                let mut arrows: Vec<(usize, usize, u8, bool)> = Vec::new();
                for &(f, t, o, _) in &sub_arrows {
                    // embedded copies keep their orders but lose top-level status
                    arrows.push((f, t, o, false));
                    arrows.push((f + offset, t + offset, o, false));
                }
                let index: HashMap<&[HalfInt<T>], usize> = vertices
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (v.as_slice(), i))
                    .collect();
                let second = HalfInt::from_twice(T::from_i32((2 * k - 3) as i32));
                let (mids, _) = build::<T>(k - 2);
                for x in &mids {
                    let mut source = vec![top];
                    source.extend(x.iter().copied());
                    source.push(-second);
                    let mut target = vec![second];
                    target.extend(x.iter().copied());
                    target.push(-top);
                    arrows.push((index[source.as_slice()], index[target.as_slice()], 2, true));
                }
                (vertices, arrows)
            }
        }
    }

    let (blocks, raw_arrows) = build::<T>(k);
    let mut vertices: Vec<Weight<T>> = blocks
        .into_iter()
        .map(|mut block| {
            block.extend(tail.iter().copied());
            Weight::new(block, k)
        })
        .collect();

    // re-sort canonically and remap arrow endpoints
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_unstable_by_key(|&i| vertices[i].to_string());
    let remap: HashMap<usize, usize> =
        order.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    vertices = order.iter().map(|&i| vertices[i].clone()).collect();
    let mut arrows: Vec<HomArrow> = raw_arrows
        .into_iter()
        .map(|(f, t, o, connecting)| HomArrow {
            from: remap[&f],
            to: remap[&t],
            order: Some(o),
            bound_twice: 2 * i64::from(o),
            connecting,
        })
        .collect();
    arrows.sort_unstable();
    HomGraph {
        vertices,
        arrows,
        flags: GraphFlags { singular: false, mirror_family: ctx.has_mirror_family() },
    }
}

/// Full analysis of the p-dominant orbit of the Dirac weight.
#[derive(Debug, Clone)]
pub struct OrbitReport<T: Scalar = i64> {
    pub k: usize,
    pub n: usize,
    pub rank: usize,
    /// All p-dominant orbit weights in canonical text order.
    pub weights: Vec<Weight<T>>,
    /// Marks the weights belonging to the 2^k standard family (first block
    /// made of strict half-integers).
    pub in_standard_family: Vec<bool>,
    /// Covering arrows of the full relation over all orbit weights.
    pub graph: HomGraph<T>,
    /// Ordered pairs (i, j) with a nonzero standard homomorphism from the
    /// module of weight j into the module of weight i, identity excluded.
    pub full_relation: Vec<(usize, usize)>,
    /// The standard-family subgraph equals the expected recursive diagram,
    /// labels, arrows and orders included.
    pub matches_sk: bool,
    /// Consecutive covering arrows u -> v -> w whose composite standard
    /// homomorphism is nonzero (expected empty: the sequences are complexes).
    pub complex_violations: Vec<(usize, usize, usize)>,
}

impl<T: Scalar> OrbitReport<T> {
    /// Indices of the standard-family weights.
    pub fn standard_family(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&i| self.in_standard_family[i])
            .collect()
    }

    /// The induced diagram on the standard family; for contexts without a
    /// mirror family this is the whole graph.
    pub fn family_subgraph(&self) -> HomGraph<T> {
        self.graph.induced(&self.standard_family())
    }
}

// The standard family carries the strict half-integers (2k-1)/2, ..., 1/2
// (in absolute value) in its first block.
fn is_standard_family<T: Scalar>(w: &Weight<T>, k: usize) -> bool {
    let mut abs: Vec<T> = w.first_block().iter().map(|c| c.twice().abs()).collect();
    abs.sort_unstable();
    abs == (1..=k).map(|i| T::from_i32((2 * i - 1) as i32)).collect::<Vec<T>>()
}

/// Runs the whole pipeline for a pair (k, n).
pub fn analyze_orbit<T: Scalar>(k: i64, n: i64) -> Result<OrbitReport<T>, ContextError> {
    let ctx = ParabolicContext::new(k, n)?;
    let lambda: Weight<T> = dirac_weight(&ctx);
    let dominant = lambda.dominant_rep();
    let flags = GraphFlags {
        singular: dominant.is_singular(),
        mirror_family: ctx.has_mirror_family(),
    };
    let weights = orbit_p_dominant(&dominant, &ctx);
    let count = weights.len();
    let in_standard_family: Vec<bool> =
        weights.iter().map(|w| is_standard_family(w, ctx.k())).collect();

    // full relation: operator-directed pairs (i, j), nonzero standard hom
    // of the module of weights[j] into the module of weights[i]
    let mut related = vec![vec![false; count]; count];
    let mut full_relation = Vec::new();
    for i in 0..count {
        for j in 0..count {
            if i == j {
                continue;
            }
            let verdict = standard_hom_nonzero(&weights[j], &weights[i], &ctx)
                .expect("orbit weights are p-dominant");
            if verdict.standard_nonzero {
                related[i][j] = true;
                full_relation.push((i, j));
            }
        }
    }

    // covering arrows: related pairs that do not factor through any
    // intermediate orbit weight
    let mut arrows: Vec<HomArrow> = Vec::new();
    for &(i, j) in &full_relation {
        let factors = (0..count).any(|l| related[i][l] && related[l][j]);
        if factors {
            continue;
        }
        let oo = operator_order(&weights[j], &weights[i]);
        debug_assert!(oo.bound.is_positive_integer(), "grading must drop along arrows");
        arrows.push(HomArrow {
            from: i,
            to: j,
            order: oo.order,
            bound_twice: oo.bound.twice_i64(),
            connecting: false,
        });
    }
    arrows.sort_unstable();

    // a covering arrow is connecting when its endpoints live in opposite
    // embedded halves: source starts with the top value, target ends with
    // its negative
    let top = T::from_i32((2 * ctx.k() - 1) as i32);
    for arrow in &mut arrows {
        let src = &weights[arrow.from];
        let dst = &weights[arrow.to];
        arrow.connecting = ctx.k() >= 2
            && is_standard_family(src, ctx.k())
            && is_standard_family(dst, ctx.k())
            && src.first_block().first().map(|c| c.twice()) == Some(top)
            && dst.first_block().last().map(|c| c.twice()) == Some(-top);
    }

    let graph = HomGraph { vertices: weights.clone(), arrows, flags };

    let report_wo_checks = OrbitReport {
        k: ctx.k(),
        n: ctx.n(),
        rank: ctx.rank(),
        weights,
        in_standard_family,
        graph,
        full_relation,
        matches_sk: false,
        complex_violations: Vec::new(),
    };

    let expected = sk_graph::<T>(&ctx);
    let matches_sk = report_wo_checks.family_subgraph().same_diagram(&expected);

    let mut complex_violations = Vec::new();
    for a in &report_wo_checks.graph.arrows {
        for b in &report_wo_checks.graph.arrows {
            if a.to == b.from && related[a.from][b.to] {
                complex_violations.push((a.from, a.to, b.to));
            }
        }
    }

    Ok(OrbitReport { matches_sk, complex_violations, ..report_wo_checks })
}

/// Homomorphism existence cross-check over Hasse arrows inside the orbit:
/// whenever two orbit weights are linked by a length-raising reflection of
/// their transporting elements and a true Verma homomorphism exists, the
/// standard homomorphism must be nonzero. Returns the violating pairs
/// (expected none).
pub fn hasse_arrow_hom_violations<T: Scalar>(
    report: &OrbitReport<T>,
) -> Vec<(Weight<T>, Weight<T>)> {
    let ctx = ParabolicContext::new(report.k as i64, report.n as i64).expect("valid context");
    let rank = ctx.rank();
    let dominant = report.weights[0].dominant_rep();
    if dominant.is_singular() {
        // transporting elements are not unique; the check does not apply
        return Vec::new();
    }
    let elems: Vec<WeylElem> = report
        .weights
        .iter()
        .map(|w| elem_taking(&dominant, w).expect("orbit weight"))
        .collect();
    let reflections: Vec<WeylElem> = positive_roots(rank)
        .into_iter()
        .map(|beta| WeylElem::reflection(beta, rank))
        .collect();
    let mut violations = Vec::new();
    for (i, wi) in elems.iter().enumerate() {
        for (j, wj) in elems.iter().enumerate() {
            if i == j || wj.length() != wi.length() + 1 {
                continue;
            }
            let delta_elem = wj.compose(&wi.inverse());
            if !reflections.contains(&delta_elem) {
                continue;
            }
            if !(in_wp(wi, &ctx) && in_wp(wj, &ctx)) {
                continue;
            }
            if !verma_hom_exists(&report.weights[j], &report.weights[i]) {
                continue;
            }
            let verdict =
                standard_hom_nonzero(&report.weights[j], &report.weights[i], &ctx)
                    .expect("orbit weights are p-dominant");
            if !verdict.standard_nonzero {
                violations.push((report.weights[i].clone(), report.weights[j].clone()));
            }
        }
    }
    violations
}
