//! Undirected graphs over the 1-based labeling x_1..x_N, plus BFS all-pairs
//! distances. Construction validates connectivity eagerly, so every
//! `LabeledGraph` in circulation is connected.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// 1-based vertex index into a `LabeledGraph`. Range checking against a
/// particular graph happens at the graph's API boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    pub fn new(index: usize) -> Result<Self> {
        if index == 0 {
            return Err(Error::domain("vertex index must be at least 1, got 0"));
        }
        Ok(VertexId(index))
    }

    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// Which construction produced a graph. `Generic` covers ad-hoc edge lists and
/// generic cartesian products.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    Cycle { n: usize },
    Path { k: usize },
    Cylinder { n: usize, k: usize },
    Prism { n: usize, k: usize, m: usize },
    Generic,
}

/// Connected undirected graph with vertices x_1..x_N and sorted adjacency
/// lists. Simple by construction: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    adjacency: Vec<Vec<VertexId>>,
    family: FamilyTag,
}

impl LabeledGraph {
    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, loops, duplicate edges, and disconnected inputs (naming one
    /// unreachable pair).
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
        family: FamilyTag,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::domain("vertex count must be at least 1, got 0"));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for e in [u, v] {
                if e == 0 || e > vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: e,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::domain(format!("loop edge at x{u} not allowed")));
            }
            adjacency[u - 1].push(VertexId(v));
            adjacency[v - 1].push(VertexId(u));
        }
        for (i, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::domain(format!("duplicate edge at x{}", i + 1)));
            }
        }
        let graph = LabeledGraph { adjacency, family };
        // Eager connectivity check: one BFS from x_1 reaches everything or we
        // report the first unreachable vertex.
        let mut dist = vec![u32::MAX; vertex_count];
        graph.bfs_into(0, &mut dist);
        if let Some(missing) = dist.iter().position(|&d| d == u32::MAX) {
            return Err(Error::Disconnected {
                from: 1,
                to: missing + 1,
            });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    /// Range-checked handle for the vertex labeled x_index.
    pub fn vertex(&self, index: usize) -> Result<VertexId> {
        if index == 0 || index > self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                index,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(VertexId(index))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (1..=self.vertex_count()).map(VertexId)
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        self.vertex(v.index())?;
        Ok(&self.adjacency[v.index() - 1])
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> Result<bool> {
        Ok(self.neighbors(u)?.binary_search(&v).is_ok())
    }

    /// All edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (i, list) in self.adjacency.iter().enumerate() {
            let u = VertexId(i + 1);
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// BFS 2-colorability; true iff the graph has no odd cycle.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        color[0] = 0;
        queue.push_back(0usize);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                let v = v.index() - 1;
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
        true
    }

    /// Distances from 0-based source into `dist` (u32::MAX = unreached).
    fn bfs_into(&self, source: usize, dist: &mut [u32]) {
        dist.fill(u32::MAX);
        dist[source] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &v in &self.adjacency[u] {
                let v = v.index() - 1;
                if dist[v] == u32::MAX {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
}

/// Cycle graph C_n, vertex x_i adjacent to x_{i±1} cyclically. Requires n >= 3.
pub fn build_cycle(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::domain(format!(
            "cycle length must be at least 3, got {n}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    LabeledGraph::from_edges(n, &edges, FamilyTag::Cycle { n })
}

/// Path graph P_k on vertices x_1..x_k. Requires k >= 2.
pub fn build_path(k: usize) -> Result<LabeledGraph> {
    if k < 2 {
        return Err(Error::domain(format!(
            "path length must be at least 2, got {k}"
        )));
    }
    let edges: Vec<(usize, usize)> = (1..k).map(|i| (i, i + 1)).collect();
    LabeledGraph::from_edges(k, &edges, FamilyTag::Path { k })
}

/// Symmetric integer distance matrix with zero diagonal, flat row-major
/// storage. Only produced by `all_pairs_distances`, so entries are finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    vertex_count: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// d(u, v). Callers pass ids validated against the same graph; mismatched
    /// ids at most panic on the slice bound, never alias another entry pair.
    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.entries[(u.index() - 1) * self.vertex_count + (v.index() - 1)]
    }

    /// Range check mirroring `LabeledGraph::vertex` for matrix consumers.
    pub fn check_vertex(&self, v: VertexId) -> Result<VertexId> {
        if v.index() == 0 || v.index() > self.vertex_count {
            return Err(Error::VertexOutOfRange {
                index: v.index(),
                vertex_count: self.vertex_count,
            });
        }
        Ok(v)
    }
}

/// One BFS per source vertex. Re-verifies reachability per row and names an
/// unreachable pair if the graph were somehow disconnected.
pub fn all_pairs_distances(g: &LabeledGraph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut entries = vec![0u32; n * n];
    for source in 0..n {
        let row = &mut entries[source * n..(source + 1) * n];
        g.bfs_into(source, row);
        if let Some(missing) = row.iter().position(|&d| d == u32::MAX) {
            return Err(Error::Disconnected {
                from: source + 1,
                to: missing + 1,
            });
        }
    }
    Ok(DistanceMatrix {
        vertex_count: n,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(g: &LabeledGraph, u: usize, v: usize) -> u32 {
        let m = all_pairs_distances(g).unwrap();
        m.get(g.vertex(u).unwrap(), g.vertex(v).unwrap())
    }

    #[test]
    fn cycle_shape() {
        let g = build_cycle(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.family(), FamilyTag::Cycle { n: 5 });
        let x1 = g.vertex(1).unwrap();
        assert_eq!(
            g.neighbors(x1).unwrap(),
            &[g.vertex(2).unwrap(), g.vertex(5).unwrap()]
        );
        for v in g.vertices() {
            assert_eq!(g.degree(v).unwrap(), 2);
        }
    }

    #[test]
    fn path_shape() {
        let g = build_path(4).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(g.vertex(1).unwrap()).unwrap(), 1);
        assert_eq!(g.degree(g.vertex(2).unwrap()).unwrap(), 2);
        assert_eq!(d(&g, 1, 4), 3);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(build_cycle(2), Err(Error::Domain(_))));
        assert!(matches!(build_path(1), Err(Error::Domain(_))));
        assert!(VertexId::new(0).is_err());
        let g = build_cycle(4).unwrap();
        assert_eq!(
            g.vertex(5),
            Err(Error::VertexOutOfRange {
                index: 5,
                vertex_count: 4
            })
        );
    }

    #[test]
    fn cycle_distances_match_closed_form() {
        for n in 3..=8 {
            let g = build_cycle(n).unwrap();
            let m = all_pairs_distances(&g).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let around = (i as i64 - j as i64).unsigned_abs() as usize;
                    let want = around.min(n - around) as u32;
                    assert_eq!(m.get(g.vertex(i).unwrap(), g.vertex(j).unwrap()), want);
                }
            }
        }
    }

    #[test]
    fn path_distances_match_closed_form() {
        for k in 2..=6 {
            let g = build_path(k).unwrap();
            let m = all_pairs_distances(&g).unwrap();
            for i in 1..=k {
                for j in 1..=k {
                    let want = (i as i64 - j as i64).unsigned_abs() as u32;
                    assert_eq!(m.get(g.vertex(i).unwrap(), g.vertex(j).unwrap()), want);
                }
            }
        }
    }

    #[test]
    fn distance_matrix_axioms() {
        for g in [build_cycle(6).unwrap(), build_path(5).unwrap()] {
            let m = all_pairs_distances(&g).unwrap();
            for u in g.vertices() {
                assert_eq!(m.get(u, u), 0);
                for v in g.vertices() {
                    assert_eq!(m.get(u, v), m.get(v, u));
                    assert_eq!(m.get(u, v) == 0, u == v);
                    for w in g.vertices() {
                        assert!(m.get(u, w) <= m.get(u, v) + m.get(v, w));
                    }
                }
            }
        }
    }

    #[test]
    fn disconnected_input_names_a_pair() {
        // two disjoint triangles
        let edges = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)];
        let err = LabeledGraph::from_edges(6, &edges, FamilyTag::Generic).unwrap_err();
        assert_eq!(err, Error::Disconnected { from: 1, to: 4 });
    }

    #[test]
    fn malformed_edge_lists_are_rejected() {
        assert!(LabeledGraph::from_edges(3, &[(1, 1)], FamilyTag::Generic).is_err());
        assert!(LabeledGraph::from_edges(3, &[(1, 4)], FamilyTag::Generic).is_err());
        assert!(
            LabeledGraph::from_edges(3, &[(1, 2), (2, 1), (2, 3), (1, 3)], FamilyTag::Generic)
                .is_err()
        );
    }

    #[test]
    fn bipartiteness() {
        assert!(build_cycle(4).unwrap().is_bipartite());
        assert!(!build_cycle(5).unwrap().is_bipartite());
        assert!(build_path(6).unwrap().is_bipartite());
    }
}
