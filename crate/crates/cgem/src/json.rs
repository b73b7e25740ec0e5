//! JSON graph format.
//!
//! ```json
//! {"dimension": 3,
//!  "vertices": [{"id": 0, "orientation": "red"}, ...],
//!  "edges": [{"color": 0, "u": 0, "v": 1}, ...]}
//! ```
//!
//! The `orientation` field is `"red"`, `"black"`, or absent; a graph with no
//! orientation fields is unlabeled. Serialization is canonical — vertices
//! sorted by id, edges by `(color, u, v)` — so parse ∘ serialize is the
//! identity on canonical output.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Orientation};

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OrientationJson {
    Red,
    Black,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    orientation: Option<OrientationJson>,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    color: usize,
    u: usize,
    v: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    dimension: usize,
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
}

impl From<&ColoredGraph> for GraphJson {
    fn from(g: &ColoredGraph) -> GraphJson {
        GraphJson {
            dimension: g.dimension(),
            vertices: (0..g.vertex_count())
                .map(|id| VertexJson {
                    id,
                    orientation: match g.orientation(id) {
                        Orientation::Red => Some(OrientationJson::Red),
                        Orientation::Black => Some(OrientationJson::Black),
                        Orientation::Unlabeled => None,
                    },
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeJson {
                    color: e.color,
                    u: e.u,
                    v: e.v,
                })
                .collect(),
        }
    }
}

/// Serializes a graph in canonical order (vertices by id, edges by
/// `(color, u, v)`), as a single JSON line without trailing newline.
pub fn to_json_string(graph: &ColoredGraph) -> String {
    serde_json::to_string(&GraphJson::from(graph)).expect("graph serialization cannot fail")
}

/// Parses and validates a graph. Vertex entries may arrive in any order but
/// their ids must form the dense range `0..len`.
pub fn from_json_str(s: &str) -> Result<ColoredGraph> {
    let raw: GraphJson = serde_json::from_str(s)?;
    let count = raw.vertices.len();
    let mut orientations: Vec<Option<Orientation>> = vec![None; count];
    for v in &raw.vertices {
        if v.id >= count {
            return Err(Error::VertexOutOfRange {
                vertex: v.id,
                count,
            });
        }
        if orientations[v.id].is_some() {
            return Err(Error::DuplicateVertexId { vertex: v.id });
        }
        orientations[v.id] = Some(match v.orientation {
            Some(OrientationJson::Red) => Orientation::Red,
            Some(OrientationJson::Black) => Orientation::Black,
            None => Orientation::Unlabeled,
        });
    }
    let orientations: Vec<Orientation> = orientations.into_iter().map(|o| o.unwrap()).collect();
    let edges = raw.edges.iter().map(|e| (e.color, e.u, e.v)).collect();
    ColoredGraph::build(raw.dimension, orientations, edges)
}
