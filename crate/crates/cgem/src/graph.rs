//! Finite (n+1)-regular properly edge-colored multigraphs.
//!
//! A graph of dimension `n` carries edges colored `0..=n` such that every
//! vertex is incident to exactly one edge of each color. Each color class is
//! therefore a perfect matching, parallel edges of distinct colors are
//! allowed, and self-loops are impossible (a loop would occupy two slots of
//! the same color at one vertex).
//!
//! Vertices optionally carry one of two orientations, "red" or "black". A
//! labeled graph must be fully labeled, every edge must join a red vertex to
//! a black one, and the two classes must have equal size.
//!
//! Graphs are immutable after construction: transformations elsewhere in the
//! crate return new graphs.

use crate::error::{Error, Result};

/// Dense vertex index, contiguous in `0..vertex_count`.
pub type VertexId = usize;

/// Edge color in `0..=dimension`.
pub type ColorIndex = usize;

/// Vertex orientation tag. Labeled graphs use `Red`/`Black` exclusively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Red,
    Black,
    Unlabeled,
}

impl Orientation {
    pub fn opposite(self) -> Orientation {
        match self {
            Orientation::Red => Orientation::Black,
            Orientation::Black => Orientation::Red,
            Orientation::Unlabeled => Orientation::Unlabeled,
        }
    }
}

/// A colored edge. Endpoints are normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub color: ColorIndex,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn new(color: ColorIndex, a: VertexId, b: VertexId) -> Edge {
        if a <= b {
            Edge { color, u: a, v: b }
        } else {
            Edge { color, u: b, v: a }
        }
    }

    /// The endpoint that is not `w`. Panics if `w` is not an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            assert_eq!(w, self.v, "vertex {w} is not an endpoint");
            self.u
        }
    }
}

/// One side of a bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A connected component extracted from a graph, with its vertices remapped
/// to a dense range. `vertex_map[new_id] = original_id`.
#[derive(Debug, Clone)]
pub struct Component {
    pub graph: ColoredGraph,
    pub vertex_map: Vec<VertexId>,
}

/// An (n+1)-regular properly edge-colored multigraph, optionally
/// orientation-labeled. Immutable after construction; all invariants are
/// enforced by [`ColoredGraph::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    dimension: usize,
    orientations: Vec<Orientation>,
    /// Sorted by `(color, u, v)`; this is the canonical edge order used by
    /// serialization and by edge indices everywhere in the crate.
    edges: Vec<Edge>,
    /// `incidence[vertex * (dimension + 1) + color]` is the index into
    /// `edges` of the unique edge of that color at that vertex.
    incidence: Vec<usize>,
}

impl ColoredGraph {
    /// Validates and builds a graph from raw parts.
    ///
    /// `edge_list` entries are `(color, u, v)` and may come in any order;
    /// endpoints are normalized and edges sorted into canonical order.
    pub fn build(
        dimension: usize,
        orientations: Vec<Orientation>,
        edge_list: Vec<(ColorIndex, VertexId, VertexId)>,
    ) -> Result<ColoredGraph> {
        let num_vertices = orientations.len();
        let num_colors = dimension + 1;

        let mut edges: Vec<Edge> = Vec::with_capacity(edge_list.len());
        for (color, a, b) in edge_list {
            if color > dimension {
                return Err(Error::ColorOutOfRange { color, dimension });
            }
            for w in [a, b] {
                if w >= num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: num_vertices,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a, color });
            }
            edges.push(Edge::new(color, a, b));
        }
        edges.sort_unstable();

        // One edge of each color at each vertex.
        let mut incidence = vec![usize::MAX; num_vertices * num_colors];
        for (idx, e) in edges.iter().enumerate() {
            for w in [e.u, e.v] {
                let slot = &mut incidence[w * num_colors + e.color];
                if *slot != usize::MAX {
                    return Err(Error::DuplicateColorAtVertex {
                        vertex: w,
                        color: e.color,
                    });
                }
                *slot = idx;
            }
        }
        for w in 0..num_vertices {
            for color in 0..num_colors {
                if incidence[w * num_colors + color] == usize::MAX {
                    return Err(Error::MissingColorAtVertex { vertex: w, color });
                }
            }
        }

        let graph = ColoredGraph {
            dimension,
            orientations,
            edges,
            incidence,
        };
        graph.check_orientations()?;
        Ok(graph)
    }

    fn check_orientations(&self) -> Result<()> {
        let labeled = self
            .orientations
            .iter()
            .filter(|o| **o != Orientation::Unlabeled)
            .count();
        if labeled == 0 {
            return Ok(());
        }
        if labeled != self.orientations.len() {
            return Err(Error::OrientationViolation(
                "graph mixes labeled and unlabeled vertices".into(),
            ));
        }
        let red = self
            .orientations
            .iter()
            .filter(|o| **o == Orientation::Red)
            .count();
        if red * 2 != self.orientations.len() {
            return Err(Error::OrientationViolation(format!(
                "{red} red vs {} black vertices",
                self.orientations.len() - red
            )));
        }
        for e in &self.edges {
            if self.orientations[e.u] == self.orientations[e.v] {
                return Err(Error::OrientationViolation(format!(
                    "color-{} edge joins two {:?} vertices ({}, {})",
                    e.color, self.orientations[e.u], e.u, e.v
                )));
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of edge colors, `dimension + 1`.
    pub fn num_colors(&self) -> usize {
        self.dimension + 1
    }

    pub fn vertex_count(&self) -> usize {
        self.orientations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn orientation(&self, v: VertexId) -> Orientation {
        self.orientations[v]
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    /// True when every vertex carries a red/black label.
    pub fn is_labeled(&self) -> bool {
        !self.orientations.is_empty() && self.orientations[0] != Orientation::Unlabeled
    }

    /// Edges in canonical `(color, u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// Index of the unique edge of `color` at `v`.
    pub fn edge_index_at(&self, v: VertexId, color: ColorIndex) -> usize {
        self.incidence[v * self.num_colors() + color]
    }

    pub fn edge_at(&self, v: VertexId, color: ColorIndex) -> &Edge {
        &self.edges[self.edge_index_at(v, color)]
    }

    /// The other endpoint of the unique edge of `color` at `v`.
    pub fn neighbor(&self, v: VertexId, color: ColorIndex) -> VertexId {
        self.edge_at(v, color).other(v)
    }

    /// Position of an edge in the canonical edge list, if present.
    pub fn find_edge(&self, color: ColorIndex, a: VertexId, b: VertexId) -> Option<usize> {
        let probe = Edge::new(color, a, b);
        self.edges.binary_search(&probe).ok()
    }

    /// Structural bipartiteness test, ignoring orientation labels.
    ///
    /// Returns a two-coloring indexed by vertex id with every edge crossing
    /// the two classes, or `None` when an odd cycle exists. The root of each
    /// component (smallest unvisited id) is assigned [`Side::A`], so the
    /// result is deterministic.
    pub fn is_bipartite(&self) -> Option<Vec<Side>> {
        let n = self.vertex_count();
        let mut side: Vec<Option<Side>> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::A);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                let flip = match sv {
                    Side::A => Side::B,
                    Side::B => Side::A,
                };
                for color in 0..self.num_colors() {
                    let w = self.neighbor(v, color);
                    match side[w] {
                        None => {
                            side[w] = Some(flip);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// Splits the graph into maximal connected subgraphs with dense,
    /// order-preserving vertex ids.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.vertex_count();
        let mut comp_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<VertexId>> = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if comp_of[root] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut verts = Vec::new();
            comp_of[root] = id;
            stack.push(root);
            while let Some(v) = stack.pop() {
                verts.push(v);
                for color in 0..self.num_colors() {
                    let w = self.neighbor(v, color);
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            members.push(verts);
        }

        members
            .into_iter()
            .map(|verts| {
                let mut new_id = vec![usize::MAX; n];
                for (i, &v) in verts.iter().enumerate() {
                    new_id[v] = i;
                }
                let orientations = verts.iter().map(|&v| self.orientations[v]).collect();
                let edge_list = self
                    .edges
                    .iter()
                    .filter(|e| new_id[e.u] != usize::MAX)
                    .map(|e| (e.color, new_id[e.u], new_id[e.v]))
                    .collect();
                let graph = ColoredGraph::build(self.dimension, orientations, edge_list)
                    .expect("component of a valid graph is valid");
                Component {
                    graph,
                    vertex_map: verts,
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for color in 0..self.num_colors() {
                let w = self.neighbor(v, color);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..vertex_count`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<ColoredGraph> {
        assert_eq!(perm.len(), self.vertex_count());
        let mut orientations = vec![Orientation::Unlabeled; self.vertex_count()];
        for (old, &new) in perm.iter().enumerate() {
            orientations[new] = self.orientations[old];
        }
        let edge_list = self
            .edges
            .iter()
            .map(|e| (e.color, perm[e.u], perm[e.v]))
            .collect();
        ColoredGraph::build(self.dimension, orientations, edge_list)
    }
}
