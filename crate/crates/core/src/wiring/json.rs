//! Embedding serialization.
//!
//! ```text
//! {"vertices":{"0":[x,y],...},
//!  "edges":[{"from":0,"to":1,"path":[[x,y],...]},...],
//!  "volume":N,
//!  "bbox":[[minx,miny],[maxx,maxy]]}
//! ```
//!
//! Fields appear in exactly this order, vertex keys in numeric order, all
//! numbers are integers, and no whitespace is emitted. Optional `oracle` and
//! `meta` objects may follow; readers ignore them.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use super::{EdgePath, GridBox, GridPoint, GridWiring};
use crate::error::{Error, Result};
use crate::tree::NodeId;

struct Vertices<'a>(&'a BTreeMap<NodeId, GridPoint>);

impl Serialize for Vertices<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, p) in self.0 {
            map.serialize_entry(&v.0.to_string(), &[p.x, p.y])?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct EdgeOut {
    from: usize,
    to: usize,
    path: Vec<[i64; 2]>,
}

#[derive(Serialize)]
struct EmbeddingOut<'a> {
    vertices: Vertices<'a>,
    edges: Vec<EdgeOut>,
    volume: u64,
    bbox: [[i64; 2]; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'a Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<&'a Value>,
}

/// Extra blocks appended after the four embedding fields.
#[derive(Debug, Clone, Default)]
pub struct Extras {
    pub oracle: Option<Value>,
    pub meta: Option<Value>,
}

/// Canonical serialization of `w`. `w` must have at least one vertex.
pub fn to_json(w: &GridWiring) -> String {
    to_json_with(w, &Extras::default())
}

pub fn to_json_with(w: &GridWiring, extras: &Extras) -> String {
    let bbox = w
        .bounding_box()
        .unwrap_or_else(|| GridBox::point(GridPoint::ORIGIN));
    let doc = EmbeddingOut {
        vertices: Vertices(&w.vertices),
        edges: w
            .edges
            .iter()
            .map(|e| EdgeOut {
                from: e.from.0,
                to: e.to.0,
                path: e.path.iter().map(|p| [p.x, p.y]).collect(),
            })
            .collect(),
        volume: w.volume(),
        bbox: [[bbox.min.x, bbox.min.y], [bbox.max.x, bbox.max.y]],
        oracle: extras.oracle.as_ref(),
        meta: extras.meta.as_ref(),
    };
    serde_json::to_string(&doc).expect("embedding serializes")
}

#[derive(Deserialize)]
struct EdgeIn {
    from: usize,
    to: usize,
    path: Vec<[i64; 2]>,
}

#[derive(Deserialize)]
struct EmbeddingIn {
    vertices: BTreeMap<String, [i64; 2]>,
    edges: Vec<EdgeIn>,
    volume: u64,
    bbox: [[i64; 2]; 2],
}

/// An embedding read back from text, with the self-reported summary fields
/// kept alongside so they can be checked against a recount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedEmbedding {
    pub wiring: GridWiring,
    pub volume: u64,
    pub bbox: GridBox,
}

pub fn from_json(text: &str) -> Result<ParsedEmbedding> {
    let doc: EmbeddingIn =
        serde_json::from_str(text).map_err(|e| Error::Embedding(e.to_string()))?;
    let mut vertices = BTreeMap::new();
    for (key, [x, y]) in doc.vertices {
        let id: usize = key.parse().map_err(|_| {
            Error::Embedding(format!("vertex id {key:?} is not a non-negative integer"))
        })?;
        vertices.insert(NodeId(id), GridPoint::new(x, y));
    }
    if vertices.is_empty() {
        return Err(Error::Embedding("no vertices".into()));
    }
    let edges = doc
        .edges
        .into_iter()
        .map(|e| EdgePath {
            from: NodeId(e.from),
            to: NodeId(e.to),
            path: e
                .path
                .into_iter()
                .map(|[x, y]| GridPoint::new(x, y))
                .collect(),
        })
        .collect();
    let [[x0, y0], [x1, y1]] = doc.bbox;
    Ok(ParsedEmbedding {
        wiring: GridWiring { vertices, edges },
        volume: doc.volume,
        bbox: GridBox {
            min: GridPoint::new(x0, y0),
            max: GridPoint::new(x1, y1),
        },
    })
}
