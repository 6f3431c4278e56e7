//! Hop distances, Steiner distance of vertex triples, and the 3-Steiner
//! diameter.
//!
//! A minimum tree spanning three terminals is either a path through them or
//! a spider with one branch vertex, so its size is
//! `min_v d(v,a) + d(v,b) + d(v,c)`. The three shortest paths from the
//! minimizing center, taken inside one BFS tree rooted there, form the
//! witness.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteinerError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("need 3 distinct vertices in range, got {0:?}")]
    BadTerminals(Vec<usize>),
    #[error("graph has {0} vertices, need at least 3")]
    TooSmall(usize),
}

/// Sentinel for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Symmetric `n x n` hop distance matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance or [`UNREACHABLE`].
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &(u, _) in g.neighbors(v) {
            if dist[u] == UNREACHABLE {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let rows: Vec<Vec<u32>> = (0..g.n()).into_par_iter().map(|s| bfs(g, s)).collect();
    DistanceMatrix { n: g.n(), d: rows.concat() }
}

pub fn diameter(g: &Graph) -> Result<u32, SteinerError> {
    if !g.is_connected() {
        return Err(SteinerError::Disconnected);
    }
    let dm = all_pairs_distances(g);
    Ok(dm.d.iter().copied().max().unwrap_or(0))
}

/// A minimum tree containing three terminals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinerResult {
    /// Size of the tree in edges.
    pub value: u32,
    /// Edge indices of the tree, ascending.
    pub witness: Vec<usize>,
    /// The median vertex the tree hangs from.
    pub center: usize,
}

fn check_triple(g: &Graph, s: &[usize]) -> Result<[usize; 3], SteinerError> {
    let bad = || SteinerError::BadTerminals(s.to_vec());
    let t: [usize; 3] = s.try_into().map_err(|_| bad())?;
    if t.iter().any(|&v| v >= g.n()) || t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
        return Err(bad());
    }
    Ok(t)
}

/// Minimum Steiner tree of three terminals.
///
/// The center is the smallest id minimizing the distance sum; each path
/// follows the smallest-id neighbor one step closer to the center.
pub fn steiner_distance_3(g: &Graph, s: &[usize]) -> Result<SteinerResult, SteinerError> {
    let t = check_triple(g, s)?;
    if !g.is_connected() {
        return Err(SteinerError::Disconnected);
    }
    let dist: Vec<Vec<u32>> = t.iter().map(|&x| bfs(g, x)).collect();
    let center = (0..g.n())
        .min_by_key(|&v| (dist[0][v] + dist[1][v] + dist[2][v], v))
        .expect("graph has at least three vertices");

    let from_center = bfs(g, center);
    let mut in_tree = vec![false; g.m()];
    for &x in &t {
        let mut cur = x;
        while cur != center {
            let (next, e) = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&(w, _)| from_center[w] + 1 == from_center[cur])
                .expect("BFS layers are consistent");
            in_tree[e] = true;
            cur = next;
        }
    }
    let witness: Vec<usize> = (0..g.m()).filter(|&e| in_tree[e]).collect();
    Ok(SteinerResult { value: witness.len() as u32, witness, center })
}

/// Steiner distance of every triple `a < b < c`, in lexicographic order.
pub fn triple_distances(g: &Graph) -> Result<Vec<([usize; 3], u32)>, SteinerError> {
    if g.n() < 3 {
        return Err(SteinerError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(SteinerError::Disconnected);
    }
    let dm = all_pairs_distances(g);
    let n = g.n();
    let per_first: Vec<Vec<([usize; 3], u32)>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut out = Vec::new();
            for b in a + 1..n {
                for c in b + 1..n {
                    out.push(([a, b, c], triple_value(&dm, a, b, c)));
                }
            }
            out
        })
        .collect();
    Ok(per_first.concat())
}

fn triple_value(dm: &DistanceMatrix, a: usize, b: usize, c: usize) -> u32 {
    let (ra, rb, rc) = (dm.row(a), dm.row(b), dm.row(c));
    (0..dm.n).map(|v| ra[v] + rb[v] + rc[v]).min().unwrap_or(0)
}

/// The 3-Steiner diameter: the largest Steiner distance over all triples.
pub fn sdiam3(g: &Graph) -> Result<u32, SteinerError> {
    if g.n() < 3 {
        return Err(SteinerError::TooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(SteinerError::Disconnected);
    }
    let dm = all_pairs_distances(g);
    let n = g.n();
    Ok((0..n)
        .into_par_iter()
        .map(|a| {
            let mut best = 0;
            for b in a + 1..n {
                for c in b + 1..n {
                    best = best.max(triple_value(&dm, a, b, c));
                }
            }
            best
        })
        .max()
        .unwrap_or(0))
}
