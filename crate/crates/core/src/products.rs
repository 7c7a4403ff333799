//! Cartesian products and the explicit layered constructions: the cylinder
//! C_n□P_k on vertices x_1..x_nk (layer V_p = {x_{(p-1)n+1}, ..., x_{(p-1)n+n}})
//! and the prism (C_n□P_k)□P_m made of m cylinder copies joined by rungs, with
//! x_t^(r) stored at global index (r-1)·nk + t.

use crate::error::{Error, Result};
use crate::graph::{FamilyTag, LabeledGraph, VertexId};

/// C_n□P_k under the explicit labeling. Requires n >= 3 and k >= 3 so every
/// layer is a proper cycle and the two boundary layers are distinct from the
/// interior ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderGraph {
    n: usize,
    k: usize,
    graph: LabeledGraph,
}

impl CylinderGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledGraph {
        self.graph
    }

    /// Layer index p = ceil(t/n) of vertex x_t, so x_t in V_p.
    pub fn layer_of(&self, v: VertexId) -> Result<usize> {
        self.graph.vertex(v.index())?;
        Ok((v.index() - 1) / self.n + 1)
    }

    /// Compatible vertices occupy the same cycle position in different layers:
    /// n divides d - e. Asking about a vertex and itself is an error.
    pub fn compatible(&self, e: VertexId, d: VertexId) -> Result<bool> {
        self.graph.vertex(e.index())?;
        self.graph.vertex(d.index())?;
        if e == d {
            return Err(Error::domain(format!(
                "compatibility is defined for distinct vertices, got {e} twice"
            )));
        }
        let diff = (d.index() as i64 - e.index() as i64).unsigned_abs() as usize;
        Ok(diff.is_multiple_of(self.n))
    }

    /// Layers p and q are congruous when compatible vertices in them have
    /// identical degree (computed from the graph, not assumed from position).
    pub fn congruous(&self, p: usize, q: usize) -> Result<bool> {
        for layer in [p, q] {
            if layer == 0 || layer > self.k {
                return Err(Error::domain(format!(
                    "layer index {layer} out of range 1..={}",
                    self.k
                )));
            }
        }
        for a in 1..=self.n {
            let vp = self.graph.vertex((p - 1) * self.n + a)?;
            let vq = self.graph.vertex((q - 1) * self.n + a)?;
            if self.graph.degree(vp)? != self.graph.degree(vq)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// (C_n□P_k)□P_m under the explicit labeling: copy r of the cylinder occupies
/// global indices (r-1)·nk + 1 ..= r·nk. Requires m >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismGraph {
    n: usize,
    k: usize,
    m: usize,
    graph: LabeledGraph,
}

impl PrismGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    pub fn into_graph(self) -> LabeledGraph {
        self.graph
    }

    /// Global index of x_t^(r).
    pub fn global_index(&self, t: usize, copy: usize) -> Result<VertexId> {
        let nk = self.n * self.k;
        if t == 0 || t > nk {
            return Err(Error::domain(format!(
                "within-copy index {t} out of range 1..={nk}"
            )));
        }
        if copy == 0 || copy > self.m {
            return Err(Error::domain(format!(
                "copy index {copy} out of range 1..={}",
                self.m
            )));
        }
        self.graph.vertex((copy - 1) * nk + t)
    }

    /// Copy r such that v = x_t^(r).
    pub fn copy_of(&self, v: VertexId) -> Result<usize> {
        self.graph.vertex(v.index())?;
        Ok((v.index() - 1) / (self.n * self.k) + 1)
    }

    /// Cylinder index t such that v = x_t^(r).
    pub fn index_within_copy(&self, v: VertexId) -> Result<usize> {
        self.graph.vertex(v.index())?;
        Ok((v.index() - 1) % (self.n * self.k) + 1)
    }
}

/// Generic cartesian product G□H with the canonical index map
/// (a, b) -> (b-1)·|V(G)| + a. Vertices (a,b), (a',b') are adjacent iff one
/// coordinate is equal and the other is an edge.
pub fn cartesian_product(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for b in 1..=nh {
        let off = (b - 1) * ng;
        for (u, v) in g.edges() {
            edges.push((off + u.index(), off + v.index()));
        }
    }
    for (u, v) in h.edges() {
        for a in 1..=ng {
            edges.push(((u.index() - 1) * ng + a, (v.index() - 1) * ng + a));
        }
    }
    LabeledGraph::from_edges(ng * nh, &edges, FamilyTag::Generic)
}

/// The cylinder from its literal edge description: within each layer V_p,
/// x_i ~ x_j when j-i = 1 or j-i = n-1; between consecutive layers,
/// x_i ~ x_j when j-i = n.
pub fn explicit_cylinder(n: usize, k: usize) -> Result<CylinderGraph> {
    if n < 3 {
        return Err(Error::domain(format!(
            "cylinder cycle length must be at least 3, got {n}"
        )));
    }
    if k < 3 {
        return Err(Error::domain(format!(
            "cylinder path length must be at least 3, got {k}"
        )));
    }
    let nk = n * k;
    let layer = |t: usize| (t - 1) / n + 1;
    let mut edges = Vec::with_capacity(nk + n * (k - 1));
    for i in 1..=nk {
        for j in (i + 1)..=nk {
            let same_layer = layer(i) == layer(j) && (j - i == 1 || j - i == n - 1);
            let next_layer = layer(j) == layer(i) + 1 && j - i == n;
            if same_layer || next_layer {
                edges.push((i, j));
            }
        }
    }
    Ok(CylinderGraph {
        n,
        k,
        graph: LabeledGraph::from_edges(nk, &edges, FamilyTag::Cylinder { n, k })?,
    })
}

/// The prism as m copies of the explicit cylinder plus the rungs
/// x_t^(r) ~ x_t^(r+1).
pub fn explicit_prism(n: usize, k: usize, m: usize) -> Result<PrismGraph> {
    if m < 2 {
        return Err(Error::domain(format!(
            "prism copy count must be at least 2, got {m}"
        )));
    }
    let cylinder = explicit_cylinder(n, k)?;
    let nk = n * k;
    let cylinder_edges = cylinder.graph().edges();
    let mut edges = Vec::with_capacity(m * cylinder_edges.len() + nk * (m - 1));
    for copy in 0..m {
        let off = copy * nk;
        for &(u, v) in &cylinder_edges {
            edges.push((off + u.index(), off + v.index()));
        }
    }
    for copy in 0..m - 1 {
        for t in 1..=nk {
            edges.push((copy * nk + t, (copy + 1) * nk + t));
        }
    }
    Ok(PrismGraph {
        n,
        k,
        m,
        graph: LabeledGraph::from_edges(nk * m, &edges, FamilyTag::Prism { n, k, m })?,
    })
}

/// True iff the identity map x_t -> x_t is an isomorphism, i.e. the two graphs
/// have identical adjacency under their shared labeling. Errors when the
/// vertex counts differ.
pub fn isomorphic_by_canonical_map(a: &LabeledGraph, b: &LabeledGraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: a.vertex_count(),
            right: b.vertex_count(),
        });
    }
    for v in a.vertices() {
        if a.neighbors(v)? != b.neighbors(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
