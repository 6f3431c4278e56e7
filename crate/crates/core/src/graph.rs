//! Simple undirected graphs with stable edge indices.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::coloring::EdgeColoring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge index {0} out of range (graph has {1} edges)")]
    EdgeOutOfRange(usize, usize),
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("invalid split of vertex {vertex}: {reason}")]
    InvalidSplit { vertex: usize, reason: String },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`. The position of an
/// edge in [`Graph::edges`] is its index and never changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an edge list.
    ///
    /// Pairs are normalized to `u < v`; repeated pairs are dropped and the
    /// first occurrence keeps its index.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(GraphError::EndpointOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if seen.insert(e) {
                edges.push(e);
            }
        }
        Ok(Self::from_normalized(n, edges))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// Callers guarantee edges are normalized, in range and unique.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            debug_assert!(u < v && v < n);
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0].0 != w[1].0)));
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize), GraphError> {
        self.edges.get(e).copied().ok_or(GraphError::EdgeOutOfRange(e, self.m()))
    }

    /// `(neighbor, edge index)` pairs sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|pos| list[pos].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True iff the graph has exactly one connected component. The single
    /// vertex graph is connected; the graph with no vertices is not.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(u, _) in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Renders the graph in Graphviz DOT.
    ///
    /// `labels` replaces the vertex labels (product coordinates, typically);
    /// with a coloring each edge carries its color index as label and a
    /// palette-indexed pen color.
    pub fn to_dot(&self, labels: Option<&[String]>, coloring: Option<&EdgeColoring>) -> String {
        const PENS: [&str; 12] = [
            "red",
            "blue",
            "darkgreen",
            "orange",
            "purple",
            "brown",
            "magenta",
            "cyan4",
            "gold3",
            "gray40",
            "deeppink",
            "navy",
        ];
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let label = labels.and_then(|l| l.get(v).cloned()).unwrap_or_else(|| v.to_string());
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match coloring.and_then(|c| c.colors().get(i)) {
                Some(&c) => {
                    let pen = PENS[c as usize % PENS.len()];
                    let _ = writeln!(out, "  {u} -- {v} [label=\"{c}\", color={pen}];");
                }
                None => {
                    let _ = writeln!(out, "  {u} -- {v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphFile { n: self.n, edges: self.edges.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphFile::deserialize(d)?;
        Graph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}
