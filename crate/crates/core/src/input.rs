//! The JSON input format.
//!
//! ```json
//! {
//!   "vertices": [{"id": "E1", "weight": 2}, {"id": "E2", "weight": 5, "genus": 0}],
//!   "edges": [["E1", "E2"], ["E2", "E3", 1]],
//!   "boundary": [{"name": "C", "coeff": "1/2", "meets": {"E2": 1}}],
//!   "nef": {"M2": "2", "minMC": "1"}
//! }
//! ```
//!
//! Rationals are JSON integers or strings `"p/q"`; floats are rejected.

use std::collections::{BTreeMap, HashSet};

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cycles::{BoundaryComponent, BoundaryData};
use crate::error::Error;
use crate::graph::{DualGraph, Edge, Vertex};
use crate::rat::{self, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefData {
    pub m2: Rat,
    pub min_mc: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Input {
    pub graph: DualGraph,
    pub boundary: BoundaryData,
    pub nef: Option<NefData>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: `{literal}` is not an exact rational")]
    NonRational { path: String, literal: String },
    #[error("{path}: {source}")]
    Invalid {
        path: String,
        #[source]
        source: Error,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    vertices: Vec<RawVertex>,
    #[serde(default)]
    edges: Vec<RawEdge>,
    #[serde(default)]
    boundary: Vec<RawComponent>,
    #[serde(default)]
    nef: Option<RawNef>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: String,
    weight: u64,
    #[serde(default)]
    genus: u64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEdge {
    Pair(String, String),
    Weighted(String, String, u64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    name: String,
    coeff: Value,
    #[serde(default)]
    meets: BTreeMap<String, u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNef {
    #[serde(rename = "M2")]
    m2: Value,
    #[serde(rename = "minMC")]
    min_mc: Value,
}

fn invalid(path: impl Into<String>, source: Error) -> InputError {
    InputError::Invalid {
        path: path.into(),
        source,
    }
}

fn rational(path: String, v: &Value) -> Result<Rat, InputError> {
    let parsed = match v {
        Value::Number(n) => n.as_i64().map(rat::int),
        Value::String(s) => rat::parse(s),
        _ => None,
    };
    parsed.ok_or_else(|| InputError::NonRational {
        path,
        literal: v.to_string(),
    })
}

pub fn parse_input(text: &str) -> Result<Input, InputError> {
    let raw: RawInput = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut ids = HashSet::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if !ids.insert(v.id.as_str()) {
            return Err(invalid(
                format!("vertices[{i}].id"),
                Error::DuplicateVertex(v.id.clone()),
            ));
        }
        if v.weight == 0 {
            return Err(invalid(
                format!("vertices[{i}].weight"),
                Error::ZeroWeight(v.id.clone()),
            ));
        }
    }
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.into_iter().enumerate() {
        let (a, b, multiplicity) = match e {
            RawEdge::Pair(a, b) => (a, b, 1),
            RawEdge::Weighted(a, b, m) => (a, b, m),
        };
        let path = format!("edges[{i}]");
        for end in [&a, &b] {
            if !ids.contains(end.as_str()) {
                return Err(invalid(path, Error::UnknownVertex(end.clone())));
            }
        }
        if a == b {
            return Err(invalid(path, Error::SelfLoop(a)));
        }
        if multiplicity == 0 {
            return Err(invalid(path, Error::ZeroMultiplicity(a, b)));
        }
        edges.push(Edge { a, b, multiplicity });
    }
    let vertices: Vec<Vertex> = raw
        .vertices
        .into_iter()
        .map(|v| Vertex {
            id: v.id,
            weight: v.weight,
            genus: v.genus,
        })
        .collect();
    let graph = DualGraph::new(vertices, edges).map_err(|e| invalid("vertices", e))?;

    let mut components = Vec::with_capacity(raw.boundary.len());
    for (i, c) in raw.boundary.into_iter().enumerate() {
        let coeff = rational(format!("boundary[{i}].coeff"), &c.coeff)?;
        let mut meets = vec![0u64; graph.len()];
        for (id, count) in c.meets {
            let j = graph.index_of(&id).ok_or_else(|| {
                invalid(
                    format!("boundary[{i}].meets"),
                    Error::UnknownVertex(id.clone()),
                )
            })?;
            meets[j] = count;
        }
        let component = BoundaryComponent {
            name: c.name,
            coeff,
            meets,
        };
        // range check one component at a time to keep the index in the path
        BoundaryData::new(vec![component.clone()])
            .map_err(|e| invalid(format!("boundary[{i}].coeff"), e))?;
        components.push(component);
    }
    let boundary = BoundaryData::new(components).map_err(|e| invalid("boundary", e))?;

    let nef = raw
        .nef
        .map(|n| -> Result<NefData, InputError> {
            Ok(NefData {
                m2: rational("nef.M2".into(), &n.m2)?,
                min_mc: rational("nef.minMC".into(), &n.min_mc)?,
            })
        })
        .transpose()?;

    Ok(Input {
        graph,
        boundary,
        nef,
    })
}

impl Input {
    /// Canonical JSON form: every optional field spelled out, rationals as `"p/q"`.
    pub fn to_json(&self) -> Value {
        let g = &self.graph;
        let vertices: Vec<Value> = g
            .vertices()
            .iter()
            .map(|v| json!({"id": v.id, "weight": v.weight, "genus": v.genus}))
            .collect();
        let edges: Vec<Value> = g
            .edges()
            .iter()
            .map(|e| json!([e.a, e.b, e.multiplicity]))
            .collect();
        let boundary: Vec<Value> = self
            .boundary
            .components
            .iter()
            .map(|c| {
                let meets: serde_json::Map<String, Value> = c
                    .meets
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m != 0)
                    .map(|(j, &m)| (g.vertices()[j].id.clone(), json!(m)))
                    .collect();
                json!({"name": c.name, "coeff": rat::to_string(&c.coeff), "meets": meets})
            })
            .collect();
        let mut doc = json!({"vertices": vertices, "edges": edges, "boundary": boundary});
        if let Some(n) = &self.nef {
            doc["nef"] = json!({"M2": rat::to_string(&n.m2), "minMC": rat::to_string(&n.min_mc)});
        }
        doc
    }
}
