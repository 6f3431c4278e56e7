//! Cartesian, strong and lexicographic products, and the join.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Row-major coordinate map between `V(G) x V(H)` and product vertex ids:
/// `(i, j) <-> i * n_h + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductVertexMap {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductVertexMap {
    pub fn forward(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n_g && j < self.n_h);
        i * self.n_h + j
    }

    pub fn backward(&self, v: usize) -> (usize, usize) {
        debug_assert!(v < self.len());
        (v / self.n_h, v % self.n_h)
    }

    pub fn len(&self) -> usize {
        self.n_g * self.n_h
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `"(i,j)"` labels for every product vertex.
    pub fn labels(&self) -> Vec<String> {
        (0..self.len())
            .map(|v| {
                let (i, j) = self.backward(v);
                format!("({i},{j})")
            })
            .collect()
    }
}

/// Where a product edge comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum EdgeClass {
    /// Edge of the copy of `G` at `H`-coordinate `h`, mirroring `g_edge`.
    GLayer { h: usize, g_edge: usize },
    /// Edge of the copy of `H` at `G`-coordinate `g`, mirroring `h_edge`.
    HLayer { g: usize, h_edge: usize },
    /// Edge `(g1, h1)(g2, h2)` where `(g1, g2)` is `g_edge` in `G`
    /// (`g1 < g2`). Strong products only produce these with `h1 h2` an
    /// edge of `H`; lexicographic products produce every `(h1, h2)`.
    Cross { g_edge: usize, h1: usize, h2: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Lexicographic,
}

/// A product graph with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub kind: ProductKind,
    pub graph: Graph,
    pub vertices: ProductVertexMap,
    pub edge_classes: Vec<EdgeClass>,
}

fn build(kind: ProductKind, g: &Graph, h: &Graph) -> Product {
    let map = ProductVertexMap { n_g: g.n(), n_h: h.n() };
    let mut edges = Vec::new();
    let mut classes = Vec::new();

    if kind != ProductKind::Lexicographic {
        for j in 0..h.n() {
            for (e, &(g1, g2)) in g.edges().iter().enumerate() {
                edges.push((map.forward(g1, j), map.forward(g2, j)));
                classes.push(EdgeClass::GLayer { h: j, g_edge: e });
            }
        }
    }
    for i in 0..g.n() {
        for (e, &(h1, h2)) in h.edges().iter().enumerate() {
            edges.push((map.forward(i, h1), map.forward(i, h2)));
            classes.push(EdgeClass::HLayer { g: i, h_edge: e });
        }
    }
    match kind {
        ProductKind::Cartesian => {}
        ProductKind::Strong => {
            for (e, &(g1, g2)) in g.edges().iter().enumerate() {
                for &(a, b) in h.edges() {
                    for (h1, h2) in [(a, b), (b, a)] {
                        edges.push((map.forward(g1, h1), map.forward(g2, h2)));
                        classes.push(EdgeClass::Cross { g_edge: e, h1, h2 });
                    }
                }
            }
        }
        ProductKind::Lexicographic => {
            for (e, &(g1, g2)) in g.edges().iter().enumerate() {
                for h1 in 0..h.n() {
                    for h2 in 0..h.n() {
                        edges.push((map.forward(g1, h1), map.forward(g2, h2)));
                        classes.push(EdgeClass::Cross { g_edge: e, h1, h2 });
                    }
                }
            }
        }
    }

    Product { kind, graph: Graph::from_normalized(map.len(), edges), vertices: map, edge_classes: classes }
}

/// `G □ H`: `m_G * n_H + n_G * m_H` edges, `G`-layers first.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Product {
    build(ProductKind::Cartesian, g, h)
}

/// `G ⊠ H`: the Cartesian edges (same indices) followed by both diagonals of
/// every `G`-edge/`H`-edge pair.
pub fn strong_product(g: &Graph, h: &Graph) -> Product {
    build(ProductKind::Strong, g, h)
}

/// `G[H]`: the `H`-copies first, then every `(h1, h2)` pair over each edge of
/// `G` (including `h1 = h2`, which make up the copies of `G`).
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Product {
    build(ProductKind::Lexicographic, g, h)
}

/// `G ∨ H`. Vertices of `G` keep their ids, those of `H` are shifted by
/// `n_G`. Edge order: edges of `G`, edges of `H`, then the join edges
/// `(i, n_G + j)` row-major.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let mut edges = Vec::with_capacity(g.m() + h.m() + g.n() * h.n());
    edges.extend_from_slice(g.edges());
    edges.extend(h.edges().iter().map(|&(a, b)| (a + shift, b + shift)));
    for i in 0..g.n() {
        for j in 0..h.n() {
            edges.push((i, shift + j));
        }
    }
    Graph::from_normalized(g.n() + h.n(), edges)
}
