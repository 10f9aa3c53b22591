//! Graph JSON input and JSON renderings of the analysis reports.

use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

use crate::cover::CoverAnalysis;
use crate::decomposition::DecompositionReport;
use crate::error::Error;
use crate::graph::{build_graph, RawGraph, WeightedOrientedGraph};
use crate::monomial::IrreducibleIdeal;
use crate::unmixed::{
    CharacterizationResult, CmStatus, FastCertificate, FastReason, MixedCertificate, UnmixedReport,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid graph: {0}")]
    Validation(#[from] Error),
}

pub fn parse_graph(text: &str) -> Result<WeightedOrientedGraph, LoadError> {
    let raw: RawGraph = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(build_graph(&raw)?)
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<WeightedOrientedGraph, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_graph(&text)
}

/// Graph JSON of the normalized graph.
pub fn graph_to_json(g: &WeightedOrientedGraph) -> String {
    serde_json::to_string_pretty(&g.to_raw()).expect("raw graphs always serialize")
}

fn names(g: &WeightedOrientedGraph, set: VertexSet) -> Value {
    json!(g.set_names(set))
}

fn edge_names(g: &WeightedOrientedGraph, edges: &[(usize, usize)]) -> Value {
    edges
        .iter()
        .map(|&(a, b)| json!([g.name(a), g.name(b)]))
        .collect()
}

/// A component in CAS syntax, e.g. `ideal(x1^3, x3)`.
pub fn component_cas(g: &WeightedOrientedGraph, c: &IrreducibleIdeal) -> String {
    c.to_ideal().display(g.names()).to_string()
}

pub fn cover_analysis_json(g: &WeightedOrientedGraph, a: &CoverAnalysis) -> Value {
    json!({
        "cover": names(g, a.cover),
        "l1": names(g, a.l1),
        "l2": names(g, a.l2),
        "l3": names(g, a.l3),
        "minimal": a.is_minimal,
        "strong": a.is_strong,
        "witness": a.strong_witness.as_ref().map(|w| {
            w.iter().map(|&(x, y)| json!({"vertex": g.name(x), "in_neighbor": g.name(y)})).collect::<Vec<_>>()
        }),
    })
}

pub fn decomposition_json(g: &WeightedOrientedGraph, r: &DecompositionReport) -> Value {
    let components: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            json!({
                "cover": names(g, c.analysis.cover),
                "ideal": component_cas(g, &c.ideal),
                "L1": names(g, c.analysis.l1),
                "L2": names(g, c.analysis.l2),
                "L3": names(g, c.analysis.l3),
            })
        })
        .collect();
    let mut out = json!({
        "edge_ideal": r.edge_ideal.display(g.names()).to_string(),
        "components": components,
        "ass": r.associated_primes.iter().map(|&p| names(g, p)).collect::<Vec<_>>(),
    });
    if let Some(v) = r.verified {
        out["verified"] = json!(v);
    }
    out
}

pub fn ass_json(g: &WeightedOrientedGraph, primes: &[VertexSet]) -> Value {
    json!({ "ass": primes.iter().map(|&p| names(g, p)).collect::<Vec<_>>() })
}

fn certificate_json(g: &WeightedOrientedGraph, c: &MixedCertificate) -> Value {
    match *c {
        MixedCertificate::StrongSizes { smaller, larger } => {
            json!({"kind": "strong_sizes", "smaller": names(g, smaller), "larger": names(g, larger)})
        }
        MixedCertificate::NonemptyL3 { cover, l3 } => {
            json!({"kind": "nonempty_l3", "cover": names(g, cover), "l3": names(g, l3)})
        }
        MixedCertificate::UnderlyingMixed { smaller, larger } => {
            json!({"kind": "underlying_mixed", "smaller": names(g, smaller), "larger": names(g, larger)})
        }
    }
}

pub fn fast_certificate_json(g: &WeightedOrientedGraph, c: &FastCertificate) -> Value {
    json!({
        "reason": match c.reason {
            FastReason::AllHeavy => "all_heavy",
            FastReason::FullVertexSetStrong => "full_vertex_set_strong",
        },
        "witness": edge_names(g, &c.witness),
    })
}

pub fn unmixed_json(g: &WeightedOrientedGraph, r: &UnmixedReport) -> Value {
    json!({
        "unmixed": r.unmixed,
        "minimal_strong": r.minimal_strong,
        "graph_unmixed": r.graph_unmixed,
        "criteria": {
            "strong_cardinality": r.criterion_strong_cardinality,
            "graph_unmixed_and_l3_empty": r.criterion_graph_unmixed_and_l3,
            "minimal_strong_and_graph_unmixed": r.criterion_minimal_strong_and_g,
        },
        "agreement": r.agreement,
        "certificates": r.certificates.iter().map(|c| certificate_json(g, c)).collect::<Vec<_>>(),
    })
}

pub fn characterization_json(g: &WeightedOrientedGraph, r: &CharacterizationResult) -> Value {
    json!({
        "shape": r.shape,
        "applicable": r.applicable,
        "verdict": r.verdict,
        "clause": r.clause,
        "witness_vertices": r.witness_vertices.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
        "witness_edges": edge_names(g, &r.witness_edges),
    })
}

pub fn cm_json(g: &WeightedOrientedGraph, s: &CmStatus) -> Value {
    match s {
        CmStatus::Decided(r) => json!({
            "status": "decided",
            "cohen_macaulay": r.verdict,
            "criterion": characterization_json(g, r),
        }),
        CmStatus::RequiresExternalCas {
            unmixed,
            minimal_strong,
        } => json!({
            "status": "requires external CAS",
            "unmixed": unmixed,
            "minimal_strong": minimal_strong,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        for name in fixtures::NAMES {
            let g = fixtures::by_name(name).unwrap();
            assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_graph("{\n  \"vertices\": [,]\n}") {
            Err(LoadError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 16)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_weight_is_a_validation_error() {
        let text = r#"{"vertices":[{"name":"a","weight":0}],"edges":[]}"#;
        assert!(matches!(
            parse_graph(text),
            Err(LoadError::Validation(Error::NonpositiveWeight { .. }))
        ));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"vertices":[],"edges":[],"extra":1}"#;
        assert!(matches!(parse_graph(text), Err(LoadError::Parse { .. })));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(
            load_graph("/nonexistent/graph.json"),
            Err(LoadError::Io { .. })
        ));
    }
}
