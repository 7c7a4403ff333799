//! Representation vectors and the three set predicates. Each predicate scans
//! vertex pairs in ascending order and reports the lexicographically smallest
//! offending pair on failure, so failures are reproducible witnesses.
//!
//! The strong-resolving side works arithmetically: w covers the pair (u, v)
//! iff d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v), i.e. one endpoint
//! lies on a shortest path between w and the other. Mutually-maximally-distant
//! (MMD) pairs form the strong resolving graph; a set is strong resolving iff
//! it covers every MMD edge, which the search module exploits as an
//! independently tested candidate restriction.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, LabeledGraph, VertexId};

/// Ordered vertex subset; members are strictly increasing, and that order is
/// the coordinate order of every representation taken against the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    /// Sorts the given vertices and rejects duplicates.
    pub fn new(mut members: Vec<VertexId>) -> Result<Self> {
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex {
                index: w[0].index(),
            });
        }
        Ok(VertexSet { members })
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let ids = indices
            .iter()
            .map(|&i| VertexId::new(i))
            .collect::<Result<Vec<_>>>()?;
        VertexSet::new(ids)
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn indices(&self) -> Vec<usize> {
        self.members.iter().map(|v| v.index()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// The set with the member at `position` removed (for minimality checks).
    pub fn without_position(&self, position: usize) -> VertexSet {
        let mut members = self.members.clone();
        members.remove(position);
        VertexSet { members }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// r(v|Q): distances from v to each member of Q, in Q's ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    coords: Vec<u32>,
}

impl Representation {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_set(q: &VertexSet, d: &DistanceMatrix, min_len: usize) -> Result<()> {
    if q.len() < min_len {
        return Err(Error::domain(format!(
            "set must have at least {min_len} member(s), got {}",
            q.len()
        )));
    }
    for &v in q.members() {
        d.check_vertex(v)?;
    }
    Ok(())
}

/// Representation vector of v with respect to the non-empty set q.
pub fn representation(v: VertexId, q: &VertexSet, d: &DistanceMatrix) -> Result<Representation> {
    check_set(q, d, 1)?;
    d.check_vertex(v)?;
    Ok(Representation {
        coords: q.members().iter().map(|&w| d.get(v, w)).collect(),
    })
}

/// Outcome of the resolving test; `Unresolved` carries the smallest vertex
/// pair sharing a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolvability {
    Resolving,
    Unresolved { first: VertexId, second: VertexId },
}

impl Resolvability {
    pub fn holds(&self) -> bool {
        matches!(self, Resolvability::Resolving)
    }
}

/// Outcome of the doubly-resolving test; `ConstantDifference` carries the
/// smallest pair whose representation difference is the constant vector λ·I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleResolvability {
    DoublyResolving,
    ConstantDifference {
        first: VertexId,
        second: VertexId,
        lambda: i64,
    },
}

impl DoubleResolvability {
    pub fn holds(&self) -> bool {
        matches!(self, DoubleResolvability::DoublyResolving)
    }
}

/// Outcome of the strong-resolving test; `Uncovered` carries the smallest pair
/// no set member covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrongResolvability {
    StrongResolving,
    Uncovered { first: VertexId, second: VertexId },
}

impl StrongResolvability {
    pub fn holds(&self) -> bool {
        matches!(self, StrongResolvability::StrongResolving)
    }
}

/// First (lex) pair of vertices with identical representations, if any.
pub(crate) fn resolving_witness(
    members: &[VertexId],
    d: &DistanceMatrix,
) -> Option<(VertexId, VertexId)> {
    let n = d.vertex_count();
    for u in 1..=n {
        let u = VertexId::new(u).expect("positive");
        for v in (u.index() + 1)..=n {
            let v = VertexId::new(v).expect("positive");
            if members.iter().all(|&q| d.get(u, q) == d.get(v, q)) {
                return Some((u, v));
            }
        }
    }
    None
}

/// First (lex) pair whose representation difference is constant, if any.
pub(crate) fn doubly_witness(
    members: &[VertexId],
    d: &DistanceMatrix,
) -> Option<(VertexId, VertexId, i64)> {
    let n = d.vertex_count();
    for u in 1..=n {
        let u = VertexId::new(u).expect("positive");
        for v in (u.index() + 1)..=n {
            let v = VertexId::new(v).expect("positive");
            let q0 = members[0];
            let lambda = d.get(u, q0) as i64 - d.get(v, q0) as i64;
            if members[1..]
                .iter()
                .all(|&q| d.get(u, q) as i64 - d.get(v, q) as i64 == lambda)
            {
                return Some((u, v, lambda));
            }
        }
    }
    None
}

/// First (lex) pair not covered by any set member, if any.
pub(crate) fn strong_witness(
    members: &[VertexId],
    d: &DistanceMatrix,
) -> Option<(VertexId, VertexId)> {
    let n = d.vertex_count();
    for u in 1..=n {
        let u = VertexId::new(u).expect("positive");
        for v in (u.index() + 1)..=n {
            let v = VertexId::new(v).expect("positive");
            let duv = d.get(u, v);
            let covered = members.iter().any(|&w| {
                d.get(w, u) == d.get(w, v) + duv || d.get(w, v) == d.get(w, u) + duv
            });
            if !covered {
                return Some((u, v));
            }
        }
    }
    None
}

/// Is the map v -> r(v|Q) injective over all vertices? Requires |Q| >= 1.
pub fn is_resolving(q: &VertexSet, d: &DistanceMatrix) -> Result<Resolvability> {
    check_set(q, d, 1)?;
    Ok(match resolving_witness(q.members(), d) {
        None => Resolvability::Resolving,
        Some((first, second)) => Resolvability::Unresolved { first, second },
    })
}

/// Does no vertex pair have representations differing by λ·I? Requires
/// |Q| >= 2: against a single vertex every difference is the 1-vector (λ).
pub fn is_doubly_resolving(q: &VertexSet, d: &DistanceMatrix) -> Result<DoubleResolvability> {
    check_set(q, d, 2)?;
    Ok(match doubly_witness(q.members(), d) {
        None => DoubleResolvability::DoublyResolving,
        Some((first, second, lambda)) => DoubleResolvability::ConstantDifference {
            first,
            second,
            lambda,
        },
    })
}

/// Does every vertex pair have a member covering it (one endpoint on a
/// shortest path from the member to the other)? Requires |Q| >= 1.
pub fn is_strong_resolving(
    q: &VertexSet,
    g: &LabeledGraph,
    d: &DistanceMatrix,
) -> Result<StrongResolvability> {
    if g.vertex_count() != d.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: g.vertex_count(),
            right: d.vertex_count(),
        });
    }
    check_set(q, d, 1)?;
    Ok(match strong_witness(q.members(), d) {
        None => StrongResolvability::StrongResolving,
        Some((first, second)) => StrongResolvability::Uncovered { first, second },
    })
}

/// u is maximally distant from v iff no neighbor of u is farther from v than
/// u is. Defined for distinct vertices only.
pub fn is_maximally_distant(
    u: VertexId,
    v: VertexId,
    g: &LabeledGraph,
    d: &DistanceMatrix,
) -> Result<bool> {
    if g.vertex_count() != d.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: g.vertex_count(),
            right: d.vertex_count(),
        });
    }
    g.vertex(u.index())?;
    g.vertex(v.index())?;
    if u == v {
        return Err(Error::domain(format!(
            "maximal distance is defined for distinct vertices, got {u} twice"
        )));
    }
    let duv = d.get(u, v);
    Ok(g.neighbors(u)?.iter().all(|&w| d.get(w, v) <= duv))
}

/// Maximally distant in both directions.
pub fn is_mutually_maximally_distant(
    u: VertexId,
    v: VertexId,
    g: &LabeledGraph,
    d: &DistanceMatrix,
) -> Result<bool> {
    Ok(is_maximally_distant(u, v, g, d)? && is_maximally_distant(v, u, g, d)?)
}

/// The strong resolving graph: same vertex set, one edge per MMD pair. A set
/// is strong resolving iff it is a vertex cover of these edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongResolvingGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl StrongResolvingGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// MMD pairs as (u, v) with u < v, ascending.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices incident to at least one MMD pair, ascending.
    pub fn incident_vertices(&self) -> Vec<VertexId> {
        let mut seen = vec![false; self.vertex_count];
        for &(u, v) in &self.edges {
            seen[u.index() - 1] = true;
            seen[v.index() - 1] = true;
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| VertexId::new(i + 1).expect("positive"))
            .collect()
    }

    /// First (lex) MMD pair with neither endpoint in `members`, if any.
    pub fn uncovered_edge(&self, members: &[VertexId]) -> Option<(VertexId, VertexId)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| !members.contains(&u) && !members.contains(&v))
    }

    pub fn is_vertex_cover(&self, q: &VertexSet) -> bool {
        self.uncovered_edge(q.members()).is_none()
    }
}

/// Builds the strong resolving graph by testing every vertex pair for mutual
/// maximal distance.
pub fn strong_resolving_graph(
    g: &LabeledGraph,
    d: &DistanceMatrix,
) -> Result<StrongResolvingGraph> {
    if g.vertex_count() != d.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: g.vertex_count(),
            right: d.vertex_count(),
        });
    }
    let mut edges = Vec::new();
    let vertices: Vec<VertexId> = g.vertices().collect();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if is_mutually_maximally_distant(u, v, g, d)? {
                edges.push((u, v));
            }
        }
    }
    Ok(StrongResolvingGraph {
        vertex_count: g.vertex_count(),
        edges,
    })
}
