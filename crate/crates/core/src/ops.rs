//! Vertex splitting and edge subdivision.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// Split `vertex` into `v1` (keeping the id, adjacent to `n1`) and a new
/// vertex `v2` (adjacent to `n2`), joined by a fresh edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub vertex: usize,
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
}

impl SplitSpec {
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let v = self.vertex;
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
        let invalid = |reason: &str| GraphError::InvalidSplit { vertex: v, reason: reason.into() };
        let a: BTreeSet<usize> = self.n1.iter().copied().collect();
        let b: BTreeSet<usize> = self.n2.iter().copied().collect();
        if a.len() != self.n1.len() || b.len() != self.n2.len() {
            return Err(invalid("repeated neighbor"));
        }
        if !a.is_disjoint(&b) {
            return Err(invalid("N1 and N2 intersect"));
        }
        let nbrs: BTreeSet<usize> = g.neighbors(v).iter().map(|&(u, _)| u).collect();
        let union: BTreeSet<usize> = a.union(&b).copied().collect();
        if union != nbrs {
            return Err(invalid("N1 and N2 do not partition the neighborhood"));
        }
        Ok(())
    }
}

/// Provenance of an edge in a graph derived by splitting or subdividing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeOrigin {
    /// Same edge identity as this index in the source graph.
    Inherited(usize),
    /// The new edge `v1 v2` (or `x v` for a subdivision).
    Fresh,
}

/// Result of a split: the graph plus one origin entry per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived {
    pub graph: Graph,
    pub origins: Vec<EdgeOrigin>,
    /// Id of the newly created vertex.
    pub new_vertex: usize,
}

/// Splits a vertex. The result has `n + 1` vertices and `m + 1` edges; edge
/// `i < m` is the image of edge `i` of `g`, and the split edge is last.
pub fn split_vertex(g: &Graph, spec: &SplitSpec) -> Result<Derived, GraphError> {
    spec.validate(g)?;
    let v = spec.vertex;
    let v2 = g.n();
    let moved: BTreeSet<usize> = spec.n2.iter().copied().collect();
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            if a == v && moved.contains(&b) {
                (b, v2)
            } else if b == v && moved.contains(&a) {
                (a, v2)
            } else {
                (a, b)
            }
        })
        .collect();
    edges.push((v, v2));
    let mut origins: Vec<EdgeOrigin> = (0..g.m()).map(EdgeOrigin::Inherited).collect();
    origins.push(EdgeOrigin::Fresh);
    Ok(Derived { graph: Graph::from_normalized(g.n() + 1, edges), origins, new_vertex: v2 })
}

/// Subdivides edge `e = uv` (`u < v`) with a new vertex `x`.
///
/// This is the split of `v` that moves only `u` to the new side: edge `ux`
/// keeps index `e`, and `xv` is appended as the fresh edge.
pub fn subdivide_edge(g: &Graph, e: usize) -> Result<Derived, GraphError> {
    let (u, v) = g.edge(e)?;
    let n1 = g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| w != u).collect();
    split_vertex(g, &SplitSpec { vertex: v, n1, n2: vec![u] })
}
