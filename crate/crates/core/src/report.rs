//! JSON and DOT renderings. All lists are sorted, so output is byte-stable.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::cyclo::CycElem;
use crate::expr::{eval_str, ExprError};
use crate::field::FieldDescriptor;
use crate::qgraph::{
    classify_rank2, classify_rank_ge3, compute_qk, extend_classes, partition_classes, QGraph,
    QGraphError, RankTwoClass,
};
use crate::rootsys::{GramMatrix, RootError, RootVec};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FieldJson {
    pub gens: Vec<u64>,
    pub modulus: u64,
    pub degree: u64,
}

impl From<&FieldDescriptor> for FieldJson {
    fn from(f: &FieldDescriptor) -> Self {
        FieldJson {
            gens: f.gens().to_vec(),
            modulus: f.modulus(),
            degree: f.degree(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct QkJson {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub components: Vec<Vec<u64>>,
    pub prime_power_classes: Vec<Vec<u64>>,
    pub composite_components: Vec<Vec<u64>>,
}

impl From<&QGraph> for QkJson {
    fn from(g: &QGraph) -> Self {
        let (p, r) = partition_classes(g);
        QkJson {
            vertices: g.vertices().to_vec(),
            edges: g.edges().iter().map(|&(x, y)| [x, y]).collect(),
            components: g.components().to_vec(),
            prime_power_classes: p.into_iter().map(|q| vec![q]).collect(),
            composite_components: r,
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassJson {
    pub label: String,
    pub mu_order: u64,
    pub kind: String,
    pub members: Vec<u64>,
}

impl From<&RankTwoClass> for ClassJson {
    fn from(c: &RankTwoClass) -> Self {
        ClassJson {
            label: c.label(),
            mu_order: c.mu_order,
            kind: c.kind_name().into(),
            members: c.members(),
        }
    }
}

/// The full classification report for one field.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub field: FieldJson,
    pub qk: QkJson,
    pub rank2: Vec<ClassJson>,
    pub rank_ge3: BTreeMap<String, bool>,
}

impl ReportDocument {
    pub fn build(f: &FieldDescriptor, n_max: usize) -> Result<Self, QGraphError> {
        let g = compute_qk(f);
        let table = classify_rank_ge3(f, n_max)?;
        Ok(ReportDocument {
            tool: TOOL.into(),
            version: VERSION.into(),
            field: f.into(),
            qk: (&g).into(),
            rank2: classify_rank2(f).iter().map(ClassJson::from).collect(),
            rank_ge3: table
                .families()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        })
    }

    /// Labels of the irreducible rank-2 classes, ascending by `|μ|`.
    pub fn irreducible_rank2(&self) -> Vec<&str> {
        self.rank2
            .iter()
            .filter(|c| c.mu_order != 4)
            .map(|c| c.label.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// `Q_K` in Graphviz form; prime powers are double circles.
pub fn qgraph_dot(g: &QGraph) -> String {
    let mut s = String::from("digraph QK {\n");
    for &v in g.vertices() {
        let shape = if g.is_prime_power(v) {
            "doublecircle"
        } else {
            "circle"
        };
        s.push_str(&format!("  \"{v}\" [shape={shape}];\n"));
    }
    for &(x, y) in g.edges() {
        s.push_str(&format!("  \"{x}\" -> \"{y}\";\n"));
    }
    s.push_str("}\n");
    s
}

pub fn qgraph_json(g: &QGraph) -> String {
    serde_json::to_string_pretty(&QkJson::from(g)).expect("graph serializes") + "\n"
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ExtensionJson {
    pub from: FieldJson,
    pub to: FieldJson,
    pub map: Vec<[ClassJson; 2]>,
}

pub fn extension_json(f1: &FieldDescriptor, f2: &FieldDescriptor) -> Result<String, QGraphError> {
    let map = extend_classes(f1, f2)?
        .iter()
        .map(|(a, b)| [a.into(), b.into()])
        .collect();
    let doc = ExtensionJson {
        from: f1.into(),
        to: f2.into(),
        map,
    };
    Ok(serde_json::to_string_pretty(&doc).expect("serializes") + "\n")
}

fn elem_str(c: &CycElem) -> String {
    c.canonicalize().to_string()
}

/// Gram matrix and roots, with entries in the expression grammar.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RootsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r#type: Option<String>,
    pub gram: Vec<Vec<String>>,
    pub count: usize,
    pub roots: Vec<Vec<String>>,
}

impl RootsJson {
    pub fn new(ty: Option<String>, g: &GramMatrix, roots: &[RootVec]) -> Self {
        RootsJson {
            r#type: ty,
            gram: g
                .rows()
                .iter()
                .map(|r| r.iter().map(elem_str).collect())
                .collect(),
            count: roots.len(),
            roots: sorted_root_strings(roots),
        }
    }

    /// Re-evaluates every entry.
    pub fn decode(&self) -> Result<(GramMatrix, Vec<RootVec>), DecodeError> {
        let g = gram_from_strings(&self.gram)?;
        let roots = self
            .roots
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| eval_str(s))
                    .collect::<Result<Vec<_>, _>>()
                    .map(RootVec)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((g, roots))
    }
}

/// Roots as coordinate strings, sorted by their serialization.
pub fn sorted_root_strings(roots: &[RootVec]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = roots
        .iter()
        .map(|r| r.coords().iter().map(elem_str).collect())
        .collect();
    out.sort();
    out
}

#[derive(Debug, thiserror::Error)]
pub enum DecodeError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// A Gram matrix file: `{"gram": [[...], ...]}` whose entries are integers or
/// expression strings.
#[derive(Deserialize)]
struct GramFile {
    gram: Vec<Vec<serde_json::Value>>,
}

pub fn gram_from_strings(rows: &[Vec<String>]) -> Result<GramMatrix, DecodeError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| eval_str(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GramMatrix::new(rows)?)
}

pub fn parse_gram_file(text: &str) -> Result<GramMatrix, DecodeError> {
    let file: GramFile = serde_json::from_str(text)?;
    let rows: Vec<Vec<String>> = file
        .gram
        .iter()
        .map(|r| {
            r.iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect()
        })
        .collect();
    gram_from_strings(&rows)
}
