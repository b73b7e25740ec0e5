//! k-residues (bubbles): connected components of the subgraph induced by a
//! color subset, plus the counts and surface predicates built on them.
//!
//! For dimension 3 the counts `(v, e, b, t)` are the numbers of 0-, 1-, 2-
//! and 3-residues; 2-residues are exactly the faces seen by the amplitude
//! module, and 3-residues bound the dual vertices. A 3-colored residue is a
//! closed surface whose Euler characteristic decides whether it is a sphere
//! (`is_triball`).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColorIndex, ColoredGraph, VertexId};

/// A connected component of the subgraph induced by a color subset.
///
/// Member vertices keep their original ids; `subgraph` is a standalone copy
/// with vertices remapped to `0..len` (`vertex_map[new] = old`) and colors
/// remapped to `0..k` (`color_map[new] = old`). Rank-0 residues (empty color
/// set) are single vertices and carry no subgraph.
#[derive(Debug, Clone)]
pub struct Residue {
    colors: BTreeSet<ColorIndex>,
    vertex_map: Vec<VertexId>,
    color_map: Vec<ColorIndex>,
    subgraph: Option<ColoredGraph>,
}

impl Residue {
    pub fn colors(&self) -> &BTreeSet<ColorIndex> {
        &self.colors
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    /// Original-graph ids of the member vertices, ascending.
    pub fn member_vertices(&self) -> &[VertexId] {
        &self.vertex_map
    }

    /// Map from subgraph color index to original color.
    pub fn color_map(&self) -> &[ColorIndex] {
        &self.color_map
    }

    /// The remapped induced subgraph; `None` only for rank-0 residues.
    pub fn subgraph(&self) -> Option<&ColoredGraph> {
        self.subgraph.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_map.len()
    }

    pub fn edge_count(&self) -> usize {
        self.subgraph.as_ref().map_or(0, |g| g.edge_count())
    }

    /// Number of bicolored cycles inside this residue (its own 2-residues).
    pub fn own_2_residue_count(&self) -> usize {
        match &self.subgraph {
            None => 0,
            Some(g) => {
                let k = self.colors.len();
                let mut total = 0;
                for i in 0..k {
                    for j in (i + 1)..k {
                        total += component_count(g, &[i, j]);
                    }
                }
                total
            }
        }
    }
}

/// Residue counts of a 4-colored graph: vertices, edges, 2-residues and
/// 3-residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueCounts {
    pub v: usize,
    pub e: usize,
    pub b: usize,
    pub t: usize,
}

/// Number of connected components of the subgraph keeping only `colors`.
/// Isolated vertices count as components, so the result partitions V.
fn component_count(graph: &ColoredGraph, colors: &[ColorIndex]) -> usize {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut stack = Vec::new();
    let mut count = 0;
    for root in 0..n {
        if seen[root] {
            continue;
        }
        count += 1;
        seen[root] = true;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for &c in colors {
                let w = graph.neighbor(v, c);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Connected components of the subgraph induced by `colors`; every vertex of
/// the graph lands in exactly one residue.
pub fn residues_for(graph: &ColoredGraph, colors: &BTreeSet<ColorIndex>) -> Result<Vec<Residue>> {
    for &c in colors {
        if c > graph.dimension() {
            return Err(Error::ColorOutOfRange {
                color: c,
                dimension: graph.dimension(),
            });
        }
    }
    let color_map: Vec<ColorIndex> = colors.iter().copied().collect();
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut residues = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut members = Vec::new();
        seen[root] = true;
        stack.push(root);
        while let Some(v) = stack.pop() {
            members.push(v);
            for &c in &color_map {
                let w = graph.neighbor(v, c);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();

        let subgraph = if color_map.is_empty() {
            None
        } else {
            let mut new_id = vec![usize::MAX; n];
            for (i, &v) in members.iter().enumerate() {
                new_id[v] = i;
            }
            let mut edge_list = Vec::new();
            for (new_color, &c) in color_map.iter().enumerate() {
                for &v in &members {
                    let e = graph.edge_at(v, c);
                    if v == e.u {
                        edge_list.push((new_color, new_id[e.u], new_id[e.v]));
                    }
                }
            }
            let orientations = members.iter().map(|&v| graph.orientation(v)).collect();
            Some(
                ColoredGraph::build(color_map.len() - 1, orientations, edge_list)
                    .expect("induced residue subgraph is valid"),
            )
        };

        residues.push(Residue {
            colors: colors.clone(),
            vertex_map: members,
            color_map: color_map.clone(),
            subgraph,
        });
    }
    Ok(residues)
}

/// Residue counts (v, e, b, t) of a 4-colored graph. The graph need not be
/// connected; counts are additive over components.
pub fn residue_counts(graph: &ColoredGraph) -> Result<ResidueCounts> {
    if graph.dimension() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            actual: graph.dimension(),
        });
    }
    let by_rank = residue_counts_by_rank(graph);
    Ok(ResidueCounts {
        v: graph.vertex_count(),
        e: graph.edge_count(),
        b: by_rank[2],
        t: by_rank[3],
    })
}

/// Total residue count per rank k = 0..=n+1, summed over all k-subsets of
/// colors. Works in any dimension; `residue_counts` is the n=3 projection.
pub fn residue_counts_by_rank(graph: &ColoredGraph) -> Vec<usize> {
    let num_colors = graph.num_colors();
    let mut counts = vec![0usize; num_colors + 1];
    counts[0] = graph.vertex_count();
    if num_colors >= 1 {
        counts[1] = graph.edge_count();
    }
    for k in 2..=num_colors {
        let mut total = 0;
        for subset in subsets_of_size(num_colors, k) {
            total += component_count(graph, &subset);
        }
        counts[k] = total;
    }
    counts
}

fn subsets_of_size(num_colors: usize, k: usize) -> Vec<Vec<ColorIndex>> {
    use itertools::Itertools;
    (0..num_colors).combinations(k).collect()
}

/// Euler characteristic χ = v' − e' + f' of a 3-colored residue, where f'
/// is the number of its bicolored cycles. Equals `b − v'/2` for the cubic
/// graphs at hand; χ = 2 exactly for spheres.
pub fn euler_characteristic_2(residue: &Residue) -> Result<i64> {
    if residue.rank() != 3 {
        return Err(Error::WrongResidueRank {
            expected: 3,
            actual: residue.rank(),
        });
    }
    let v = residue.vertex_count() as i64;
    let e = residue.edge_count() as i64;
    let f = residue.own_2_residue_count() as i64;
    Ok(v - e + f)
}

/// True iff the 3-colored residue is a 2-sphere: `2·b − v' = 4` in terms of
/// its own bicolored-cycle count b.
pub fn is_triball(residue: &Residue) -> Result<bool> {
    if residue.rank() != 3 {
        return Err(Error::WrongResidueRank {
            expected: 3,
            actual: residue.rank(),
        });
    }
    let b = residue.own_2_residue_count() as i64;
    let v = residue.vertex_count() as i64;
    Ok(2 * b - v == 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Orientation;

    fn melon() -> ColoredGraph {
        ColoredGraph::build(
            3,
            vec![Orientation::Red, Orientation::Black],
            (0..4).map(|c| (c, 0, 1)).collect(),
        )
        .unwrap()
    }

    fn necklace() -> ColoredGraph {
        let mut edges = vec![(0, 0, 3), (0, 1, 2)];
        for c in 1..4 {
            edges.push((c, 0, 2));
            edges.push((c, 1, 3));
        }
        ColoredGraph::build(
            3,
            vec![
                Orientation::Red,
                Orientation::Red,
                Orientation::Black,
                Orientation::Black,
            ],
            edges,
        )
        .unwrap()
    }

    fn k4() -> ColoredGraph {
        ColoredGraph::build(
            2,
            vec![Orientation::Unlabeled; 4],
            vec![
                (0, 0, 1),
                (0, 2, 3),
                (1, 0, 2),
                (1, 1, 3),
                (2, 0, 3),
                (2, 1, 2),
            ],
        )
        .unwrap()
    }

    fn set(colors: &[usize]) -> BTreeSet<usize> {
        colors.iter().copied().collect()
    }

    #[test]
    fn melon_residues_123() {
        let rs = residues_for(&melon(), &set(&[1, 2, 3])).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].member_vertices(), &[0, 1]);
        assert_eq!(rs[0].edge_count(), 3);
    }

    #[test]
    fn melon_residues_01_is_a_2_cycle() {
        let rs = residues_for(&melon(), &set(&[0, 1])).unwrap();
        assert_eq!(rs.len(), 1);
        let sub = rs[0].subgraph().unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 2);
    }

    #[test]
    fn empty_color_set_yields_one_residue_per_vertex() {
        let g = necklace();
        let rs = residues_for(&g, &set(&[])).unwrap();
        assert_eq!(rs.len(), g.vertex_count());
        for (i, r) in rs.iter().enumerate() {
            assert_eq!(r.member_vertices(), &[i]);
            assert!(r.subgraph().is_none());
        }
    }

    #[test]
    fn color_out_of_range() {
        assert!(matches!(
            residues_for(&melon(), &set(&[7])).unwrap_err(),
            Error::ColorOutOfRange { color: 7, .. }
        ));
    }

    #[test]
    fn melon_counts() {
        let c = residue_counts(&melon()).unwrap();
        assert_eq!((c.v, c.e, c.b, c.t), (2, 4, 6, 4));
    }

    #[test]
    fn necklace_counts() {
        let c = residue_counts(&necklace()).unwrap();
        assert_eq!((c.v, c.e, c.b, c.t), (4, 8, 9, 5));
    }

    #[test]
    fn two_melons_counts_are_additive() {
        let g = ColoredGraph::build(
            3,
            vec![
                Orientation::Red,
                Orientation::Black,
                Orientation::Red,
                Orientation::Black,
            ],
            (0..4).flat_map(|c| vec![(c, 0, 1), (c, 2, 3)]).collect(),
        )
        .unwrap();
        let c = residue_counts(&g).unwrap();
        assert_eq!((c.v, c.e, c.b, c.t), (4, 8, 12, 8));
    }

    #[test]
    fn wrong_dimension_rejected() {
        assert!(matches!(
            residue_counts(&k4()).unwrap_err(),
            Error::WrongDimension { expected: 3, actual: 2 }
        ));
    }

    #[test]
    fn melon_residue_is_a_sphere() {
        let rs = residues_for(&melon(), &set(&[1, 2, 3])).unwrap();
        assert_eq!(euler_characteristic_2(&rs[0]).unwrap(), 2);
        assert!(is_triball(&rs[0]).unwrap());
    }

    #[test]
    fn k4_residue_is_a_projective_plane() {
        // The whole 3-colored K4 is its own single {0,1,2}-residue.
        let rs = residues_for(&k4(), &set(&[0, 1, 2])).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].own_2_residue_count(), 3);
        assert_eq!(euler_characteristic_2(&rs[0]).unwrap(), 1);
        assert!(!is_triball(&rs[0]).unwrap());
    }

    #[test]
    fn necklace_012_residue_is_triball() {
        let rs = residues_for(&necklace(), &set(&[0, 1, 2])).unwrap();
        assert_eq!(rs.len(), 1);
        assert_eq!(rs[0].vertex_count(), 4);
        assert_eq!(rs[0].edge_count(), 6);
        assert_eq!(rs[0].own_2_residue_count(), 4);
        assert!(is_triball(&rs[0]).unwrap());
    }

    #[test]
    fn wrong_rank_rejected() {
        let rs = residues_for(&melon(), &set(&[0, 1])).unwrap();
        assert!(matches!(
            euler_characteristic_2(&rs[0]).unwrap_err(),
            Error::WrongResidueRank { expected: 3, actual: 2 }
        ));
        assert!(matches!(
            is_triball(&rs[0]).unwrap_err(),
            Error::WrongResidueRank { .. }
        ));
    }

    #[test]
    fn partition_and_refinement_properties() {
        let g = necklace();
        let all = set(&[0, 1, 2, 3]);
        for colors in [set(&[]), set(&[2]), set(&[0, 1]), set(&[1, 2, 3]), all] {
            let rs = residues_for(&g, &colors).unwrap();
            let mut seen = vec![0usize; g.vertex_count()];
            for r in &rs {
                for &v in r.member_vertices() {
                    seen[v] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1), "partition property");
        }
        // Refinement: the partition by {1} refines the one by {1,2}.
        let coarse = residues_for(&g, &set(&[1, 2])).unwrap();
        let fine = residues_for(&g, &set(&[1])).unwrap();
        for f in &fine {
            let inside_one = coarse.iter().filter(|c| {
                f.member_vertices()
                    .iter()
                    .all(|v| c.member_vertices().contains(v))
            });
            assert_eq!(inside_one.count(), 1);
        }
    }
}
