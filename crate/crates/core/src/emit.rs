//! Deterministic DOT and JSON renderings of orbit reports and Hasse graphs.
//!
//! Output is byte-stable: node and edge lines are emitted in sorted order
//! and all numeric data is printed in canonical form, so golden files can be
//! compared exactly.

use serde::{Deserialize, Serialize};

use crate::dirac::{HomArrow, HomGraph, OrbitReport};
use crate::halfint::HalfInt;
use crate::hasse::HasseGraph;
use crate::scalar::Scalar;
use crate::weight::{ParseWeightError, Weight};
use crate::weyl::WeylElem;

/// DOT digraph of an orbit report: nodes carry the canonical bracket label,
/// edges carry the operator order, and second-order edges are bold. Nodes
/// of the mirror family (when present) are drawn as boxes.
pub fn emit_dot<T: Scalar>(report: &OrbitReport<T>) -> String {
    let mut node_lines: Vec<String> = report
        .weights
        .iter()
        .zip(&report.in_standard_family)
        .map(|(w, &standard)| {
            if standard {
                format!("    \"{w}\";")
            } else {
                format!("    \"{w}\" [shape=box];")
            }
        })
        .collect();
    node_lines.sort_unstable();
    let mut edge_lines: Vec<String> = report
        .graph
        .arrows
        .iter()
        .map(|a| {
            let from = &report.weights[a.from];
            let to = &report.weights[a.to];
            let label = match a.order {
                Some(o) => o.to_string(),
                None => format!("<={}", HalfInt::<i64>::from_twice(a.bound_twice)),
            };
            if a.order == Some(2) {
                format!("    \"{from}\" -> \"{to}\" [label=\"{label}\", style=bold];")
            } else {
                format!("    \"{from}\" -> \"{to}\" [label=\"{label}\"];")
            }
        })
        .collect();
    edge_lines.sort_unstable();
    let mut out = String::from("digraph orbit {\n");
    for line in node_lines.iter().chain(edge_lines.iter()) {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

/// DOT digraph of a parabolic Hasse graph; vertices are labeled by the
/// image of delta, which determines the element.
pub fn emit_hasse_dot(graph: &HasseGraph, delta: &Weight<i64>) -> String {
    let label = |w: &WeylElem| w.apply(delta).to_string();
    let mut node_lines: Vec<String> = graph
        .vertices
        .iter()
        .map(|w| format!("    \"{}\";", label(w)))
        .collect();
    node_lines.sort_unstable();
    let mut edge_lines: Vec<String> = graph
        .arrows
        .iter()
        .map(|a| {
            format!(
                "    \"{}\" -> \"{}\" [label=\"{}\"];",
                label(&graph.vertices[a.from]),
                label(&graph.vertices[a.to]),
                a.gamma
            )
        })
        .collect();
    edge_lines.sort_unstable();
    let mut out = String::from("digraph hasse {\n");
    for line in node_lines.iter().chain(edge_lines.iter()) {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub order: Option<u8>,
    pub bound: String,
}

/// Machine-readable form of an orbit report. Field order is part of the
/// format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub k: usize,
    pub n: usize,
    pub rank: usize,
    pub singular: bool,
    pub weights: Vec<String>,
    pub edges: Vec<EdgeJson>,
    pub full_relation: Vec<(usize, usize)>,
    pub matches_sk: bool,
    pub complex_violations: Vec<(usize, usize, usize)>,
}

impl OrbitJson {
    pub fn from_report<T: Scalar>(report: &OrbitReport<T>) -> Self {
        OrbitJson {
            k: report.k,
            n: report.n,
            rank: report.rank,
            singular: report.graph.flags.singular,
            weights: report.weights.iter().map(|w| w.to_string()).collect(),
            edges: report
                .graph
                .arrows
                .iter()
                .map(|a| EdgeJson {
                    from: a.from,
                    to: a.to,
                    order: a.order,
                    bound: HalfInt::<i64>::from_twice(a.bound_twice).to_string(),
                })
                .collect(),
            full_relation: report.full_relation.clone(),
            matches_sk: report.matches_sk,
            complex_violations: report.complex_violations.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Rebuilds the weight labels and the diagram carried by the JSON.
    pub fn to_graph(&self) -> Result<HomGraph<i64>, ParseWeightError> {
        let vertices: Vec<Weight<i64>> =
            self.weights.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
        let arrows = self
            .edges
            .iter()
            .map(|e| {
                let bound: HalfInt<i64> =
                    e.bound.parse().map_err(ParseWeightError::BadToken)?;
                Ok(HomArrow {
                    from: e.from,
                    to: e.to,
                    order: e.order,
                    bound_twice: bound.twice(),
                    connecting: false,
                })
            })
            .collect::<Result<_, ParseWeightError>>()?;
        Ok(HomGraph {
            vertices,
            arrows,
            flags: Default::default(),
        })
    }
}

pub fn emit_json<T: Scalar>(report: &OrbitReport<T>) -> String {
    let mut out = serde_json::to_string_pretty(&OrbitJson::from_report(report))
        .expect("report serialization cannot fail");
    out.push('\n');
    out
}

/// Plain-text summary of an orbit report.
pub fn emit_text<T: Scalar>(report: &OrbitReport<T>) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let flags = report.graph.flags;
    writeln!(
        out,
        "orbit k={} n={} rank={} weights={} singular={}",
        report.k,
        report.n,
        report.rank,
        report.weights.len(),
        flags.singular
    )
    .unwrap();
    if flags.mirror_family {
        writeln!(
            out,
            "note: k = (n-1)/2, the orbit carries a mirror family of {} weights",
            report.weights.len() - report.standard_family().len()
        )
        .unwrap();
    }
    for (i, w) in report.weights.iter().enumerate() {
        let mark = if report.in_standard_family[i] { ' ' } else { '*' };
        writeln!(out, "  w{i}{mark} {w}").unwrap();
    }
    writeln!(out, "arrows (operator direction):").unwrap();
    for a in &report.graph.arrows {
        let order = match a.order {
            Some(o) => o.to_string(),
            None => format!("<={}", HalfInt::<i64>::from_twice(a.bound_twice)),
        };
        writeln!(
            out,
            "  {} -> {}  order {}{}",
            report.weights[a.from],
            report.weights[a.to],
            order,
            if a.connecting { "  (connecting)" } else { "" }
        )
        .unwrap();
    }
    writeln!(out, "full relation: {} pairs", report.full_relation.len()).unwrap();
    writeln!(out, "matches expected diagram: {}", report.matches_sk).unwrap();
    writeln!(
        out,
        "complex violations: {}",
        if report.complex_violations.is_empty() {
            "none".to_string()
        } else {
            format!("{:?}", report.complex_violations)
        }
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::ParabolicContext;
    use crate::dirac::analyze_orbit;
    use crate::hasse::parabolic_hasse;

    #[test]
    fn dot_for_the_k2_n7_orbit() {
        let report = analyze_orbit::<i64>(2, 7).unwrap();
        let dot = emit_dot(&report);
        let node_lines = dot.lines().filter(|l| l.ends_with("\";")).count();
        let edge_lines = dot.lines().filter(|l| l.contains("->")).count();
        let bold = dot.matches("style=bold").count();
        assert_eq!(node_lines, 4);
        assert_eq!(edge_lines, 3);
        assert_eq!(bold, 1);
        assert!(dot.starts_with("digraph orbit {\n"));
        assert!(dot.ends_with("}\n"));
        // emission is stable
        assert_eq!(dot, emit_dot(&report));
    }

    #[test]
    fn dot_marks_mirror_family_nodes() {
        let report = analyze_orbit::<i64>(2, 5).unwrap();
        let dot = emit_dot(&report);
        assert_eq!(dot.matches("[shape=box]").count(), 4);
    }

    #[test]
    fn dot_with_no_arrows_is_valid() {
        let mut report = analyze_orbit::<i64>(1, 5).unwrap();
        report.graph.arrows.clear();
        let dot = emit_dot(&report);
        assert!(!dot.contains("->"));
        assert!(dot.starts_with("digraph orbit {\n") && dot.ends_with("}\n"));
    }

    #[test]
    fn json_round_trip_reproduces_the_graph() {
        let report = analyze_orbit::<i64>(2, 7).unwrap();
        let text = emit_json(&report);
        let parsed = OrbitJson::parse(&text).unwrap();
        assert_eq!(parsed, OrbitJson::from_report(&report));
        let graph = parsed.to_graph().unwrap();
        assert_eq!(graph.vertices, report.weights);
        assert_eq!(graph.arrows.len(), report.graph.arrows.len());
        for (a, b) in graph.arrows.iter().zip(&report.graph.arrows) {
            assert_eq!((a.from, a.to, a.order, a.bound_twice),
                       (b.from, b.to, b.order, b.bound_twice));
        }
        assert!(parsed.matches_sk);
        assert_eq!(parsed.edges.len(), 3);
        // key order is part of the format
        let k_pos = text.find("\"k\"").unwrap();
        let weights_pos = text.find("\"weights\"").unwrap();
        let matches_pos = text.find("\"matches_sk\"").unwrap();
        assert!(k_pos < weights_pos && weights_pos < matches_pos);
    }

    #[test]
    fn json_for_k2_n5_lists_both_families() {
        let report = analyze_orbit::<i64>(2, 5).unwrap();
        let parsed = OrbitJson::parse(&emit_json(&report)).unwrap();
        assert_eq!(parsed.weights.len(), 8);
        assert!(parsed.weights.contains(&"[2,-1|3/2,1/2]".to_string()));
    }

    #[test]
    fn hasse_dot_is_deterministic() {
        let ctx = ParabolicContext::new(1, 3).unwrap();
        let graph = parabolic_hasse(&ctx, None).unwrap();
        let dot = emit_hasse_dot(&graph, &ctx.delta());
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 3);
        assert_eq!(dot, emit_hasse_dot(&graph, &ctx.delta()));
    }

    #[test]
    fn text_summary_mentions_the_mirror_family() {
        let report = analyze_orbit::<i64>(1, 3).unwrap();
        let text = emit_text(&report);
        assert!(text.contains("mirror family"));
        assert!(text.contains("matches expected diagram: true"));
    }
}
