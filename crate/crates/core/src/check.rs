//! Rainbow tree existence for vertex pairs and triples.
//!
//! For a fixed source, [`rainbow_reach`] computes for every target the
//! inclusion-minimal color sets of rainbow paths from the source. A triple
//! `{a, b, c}` lies in a rainbow tree iff some center `v` reaches the three
//! terminals with pairwise disjoint color sets: the union of such paths has
//! all-distinct edge colors and is connected, so any spanning tree of it is
//! rainbow. Conversely a minimal tree through three vertices is a path or a
//! spider and splits at its middle terminal or branch vertex into three
//! color-disjoint paths.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::colorset::ColorSet;
use crate::graph::Graph;

pub const DEFAULT_PALETTE_BOUND: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("k must be 2 or 3, got {0}")]
    UnsupportedK(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("palette of {palette} colors exceeds the configured bound {bound}")]
    PaletteTooLarge { palette: u32, bound: u32 },
    #[error("need 3 distinct vertices in range, got {0:?}")]
    BadTerminals(Vec<usize>),
    #[error("source vertex {0} out of range")]
    BadSource(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Largest palette accepted; at most [`ColorSet::CAPACITY`].
    pub palette_bound: u32,
    /// Scan triples on the rayon pool. Verdicts do not depend on this.
    pub parallel: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { palette_bound: DEFAULT_PALETTE_BOUND, parallel: true }
    }
}

impl CheckConfig {
    pub fn widened(palette_bound: u32) -> Self {
        CheckConfig { palette_bound: palette_bound.min(ColorSet::CAPACITY as u32), ..Self::default() }
    }

    fn admit(&self, g: &Graph, c: &EdgeColoring) -> Result<(), CheckError> {
        c.check_len(g.m())?;
        let bound = self.palette_bound.min(ColorSet::CAPACITY as u32);
        if c.palette() > bound {
            return Err(CheckError::PaletteTooLarge { palette: c.palette(), bound });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct ReachEntry {
    colors: ColorSet,
    // (previous vertex, its entry index, edge taken)
    parent: Option<(usize, usize, usize)>,
}

/// Minimal rainbow-path color sets from one source to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachFamily {
    source: usize,
    targets: Vec<Vec<ReachEntry>>,
}

impl ReachFamily {
    pub fn source(&self) -> usize {
        self.source
    }

    /// The antichain for `target`, in nondecreasing cardinality. Empty when
    /// no rainbow path exists; `[{}]` for the source itself.
    pub fn sets(&self, target: usize) -> Vec<ColorSet> {
        self.targets[target].iter().map(|e| e.colors).collect()
    }

    fn len(&self, target: usize) -> usize {
        self.targets[target].len()
    }

    fn set(&self, target: usize, idx: usize) -> ColorSet {
        self.targets[target][idx].colors
    }

    /// Edge indices, source to target, of a rainbow path realizing the
    /// `idx`-th set of [`ReachFamily::sets`].
    pub fn path(&self, target: usize, idx: usize) -> Vec<usize> {
        let mut edges = Vec::new();
        let (mut v, mut i) = (target, idx);
        while let Some((pv, pi, e)) = self.targets[v][i].parent {
            edges.push(e);
            v = pv;
            i = pi;
        }
        edges.reverse();
        edges
    }
}

/// Search over `(vertex, color set)` states in increasing set size, dropping
/// any state whose set contains a set already recorded at that vertex.
///
/// Walks are explored rather than paths: a walk with distinct colors never
/// repeats an edge and contains a path with a subset of its colors, so the
/// minimal sets are the same, and every minimal set is realized by a path.
fn reach(g: &Graph, colors: &[u32], source: usize) -> ReachFamily {
    let mut targets: Vec<Vec<ReachEntry>> = vec![Vec::new(); g.n()];
    targets[source].push(ReachEntry { colors: ColorSet::empty(), parent: None });
    let mut frontier = vec![(source, 0usize)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (v, idx) in frontier {
            let set = targets[v][idx].colors;
            for &(u, e) in g.neighbors(v) {
                let c = colors[e];
                if set.contains(c) {
                    continue;
                }
                let grown = set.with(c);
                if targets[u].iter().any(|x| x.colors.is_subset(grown)) {
                    continue;
                }
                targets[u].push(ReachEntry { colors: grown, parent: Some((v, idx, e)) });
                next.push((u, targets[u].len() - 1));
            }
        }
        frontier = next;
    }
    ReachFamily { source, targets }
}

pub fn rainbow_reach(g: &Graph, c: &EdgeColoring, source: usize) -> Result<ReachFamily, CheckError> {
    CheckConfig::default().admit(g, c)?;
    if source >= g.n() {
        return Err(CheckError::BadSource(source));
    }
    Ok(reach(g, c.colors(), source))
}

/// A rainbow tree: ascending edge indices, plus the vertex the three
/// color-disjoint paths meet at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RainbowTree {
    pub edges: Vec<usize>,
    pub center: usize,
}

/// Reach families from every source over an effective color assignment.
struct ReachTable {
    fams: Vec<ReachFamily>,
}

impl ReachTable {
    fn build(g: &Graph, colors: &[u32], parallel: bool) -> Self {
        let fams = if parallel {
            (0..g.n()).into_par_iter().map(|s| reach(g, colors, s)).collect()
        } else {
            (0..g.n()).map(|s| reach(g, colors, s)).collect()
        };
        ReachTable { fams }
    }

    fn connects(&self, a: usize, b: usize) -> bool {
        self.fams[a].len(b) > 0
    }

    /// First `(center, [entry indices])` with pairwise disjoint sets, scanning
    /// centers ascending and family members in order.
    fn triple(&self, t: [usize; 3]) -> Option<(usize, [usize; 3])> {
        let [a, b, c] = t;
        for (v, fam) in self.fams.iter().enumerate() {
            let (la, lb, lc) = (fam.len(a), fam.len(b), fam.len(c));
            if la == 0 || lb == 0 || lc == 0 {
                continue;
            }
            for i in 0..la {
                let sa = fam.set(a, i);
                for j in 0..lb {
                    let sb = fam.set(b, j);
                    if !sa.is_disjoint(sb) {
                        continue;
                    }
                    let ab = sa.union(sb);
                    if let Some(k) = (0..lc).find(|&k| ab.is_disjoint(fam.set(c, k))) {
                        return Some((v, [i, j, k]));
                    }
                }
            }
        }
        None
    }

    fn witness(&self, g: &Graph, t: [usize; 3], center: usize, idx: [usize; 3]) -> RainbowTree {
        let fam = &self.fams[center];
        let mut in_union = vec![false; g.m()];
        for (&x, &i) in t.iter().zip(&idx) {
            for e in fam.path(x, i) {
                in_union[e] = true;
            }
        }
        // BFS spanning tree of the union, then trim leaves outside the triple
        let mut tree_edges = vec![false; g.m()];
        let mut seen = vec![false; g.n()];
        let mut degree = vec![0usize; g.n()];
        seen[center] = true;
        let mut queue = VecDeque::from([center]);
        while let Some(v) = queue.pop_front() {
            for &(u, e) in g.neighbors(v) {
                if in_union[e] && !seen[u] {
                    seen[u] = true;
                    tree_edges[e] = true;
                    degree[u] += 1;
                    degree[v] += 1;
                    queue.push_back(u);
                }
            }
        }
        loop {
            let leaf = (0..g.m()).find(|&e| {
                let (u, v) = g.edges()[e];
                tree_edges[e] && ((degree[u] == 1 && !t.contains(&u)) || (degree[v] == 1 && !t.contains(&v)))
            });
            let Some(e) = leaf else { break };
            let (u, v) = g.edges()[e];
            tree_edges[e] = false;
            degree[u] -= 1;
            degree[v] -= 1;
        }
        RainbowTree { edges: (0..g.m()).filter(|&e| tree_edges[e]).collect(), center }
    }
}

fn terminals(g: &Graph, s: &[usize]) -> Result<[usize; 3], CheckError> {
    let bad = || CheckError::BadTerminals(s.to_vec());
    let t: [usize; 3] = s.try_into().map_err(|_| bad())?;
    if t.iter().any(|&v| v >= g.n()) || t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
        return Err(bad());
    }
    Ok(t)
}

/// Finds a rainbow tree containing the three vertices of `s`, if one exists.
pub fn has_rainbow_tree(g: &Graph, c: &EdgeColoring, s: &[usize]) -> Result<Option<RainbowTree>, CheckError> {
    CheckConfig::default().admit(g, c)?;
    let t = terminals(g, s)?;
    let table = ReachTable::build(g, c.colors(), false);
    Ok(table.triple(t).map(|(v, idx)| table.witness(g, t, v, idx)))
}

/// Outcome of a k-rainbow check. Serialized as
/// `{"ok": bool, "failing": [..] | null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictFile", from = "VerdictFile")]
pub enum Verdict {
    Ok,
    /// The lexicographically first vertex set without a rainbow tree.
    Failing(Vec<usize>),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }

    pub fn failing(&self) -> Option<&[usize]> {
        match self {
            Verdict::Ok => None,
            Verdict::Failing(s) => Some(s),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VerdictFile {
    ok: bool,
    failing: Option<Vec<usize>>,
}

impl From<Verdict> for VerdictFile {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Ok => VerdictFile { ok: true, failing: None },
            Verdict::Failing(s) => VerdictFile { ok: false, failing: Some(s) },
        }
    }
}

impl From<VerdictFile> for Verdict {
    fn from(f: VerdictFile) -> Self {
        match f.failing {
            Some(s) if !f.ok => Verdict::Failing(s),
            _ => Verdict::Ok,
        }
    }
}

/// Verdict over an effective color array (one color per edge, colors below
/// `ColorSet::CAPACITY`).
///
/// Graphs with fewer than `k` vertices are checked on their whole vertex set.
pub(crate) fn verdict(g: &Graph, colors: &[u32], k: usize, parallel: bool) -> Verdict {
    let k = k.min(g.n());
    if k <= 1 {
        return Verdict::Ok;
    }
    let table = ReachTable::build(g, colors, parallel);
    let n = g.n();
    if k == 2 {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        return pairs
            .into_iter()
            .find(|&(a, b)| !table.connects(a, b))
            .map_or(Verdict::Ok, |(a, b)| Verdict::Failing(vec![a, b]));
    }
    let triples: Vec<[usize; 3]> =
        (0..n).flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))).collect();
    let bad = |t: &&[usize; 3]| table.triple(**t).is_none();
    let first = if parallel { triples.par_iter().find_first(bad) } else { triples.iter().find(bad) };
    first.map_or(Verdict::Ok, |t| Verdict::Failing(t.to_vec()))
}

/// Whether one vertex set of size 2 or 3 has a rainbow tree, building reach
/// families from its own vertices only: a rainbow path from a center to a
/// terminal is one from the terminal to the center.
pub(crate) fn set_ok(g: &Graph, colors: &[u32], s: &[usize]) -> bool {
    match *s {
        [a, b] => reach(g, colors, a).len(b) > 0,
        [a, b, c] => {
            let (fa, fb, fc) = (reach(g, colors, a), reach(g, colors, b), reach(g, colors, c));
            (0..g.n()).any(|v| {
                fa.targets[v].iter().any(|x| {
                    fb.targets[v].iter().any(|y| {
                        x.colors.is_disjoint(y.colors) && {
                            let xy = x.colors.union(y.colors);
                            fc.targets[v].iter().any(|z| xy.is_disjoint(z.colors))
                        }
                    })
                })
            })
        }
        _ => true,
    }
}

/// Checks that every `k`-set (`k` is 2 or 3) lies in a rainbow tree.
pub fn is_k_rainbow(g: &Graph, c: &EdgeColoring, k: usize) -> Result<Verdict, CheckError> {
    is_k_rainbow_with(g, c, k, &CheckConfig::default())
}

pub fn is_k_rainbow_with(g: &Graph, c: &EdgeColoring, k: usize, cfg: &CheckConfig) -> Result<Verdict, CheckError> {
    if !(2..=3).contains(&k) {
        return Err(CheckError::UnsupportedK(k));
    }
    cfg.admit(g, c)?;
    Ok(verdict(g, c.colors(), k, cfg.parallel))
}

/// Optimistic completion of a partial coloring: every uncolored edge gets
/// its own color outside `0..palette`. If this fails, no completion of the
/// partial coloring can succeed.
///
/// Requires `palette + #uncolored <= ColorSet::CAPACITY`.
pub(crate) fn optimistic_colors(partial: &[Option<u32>], palette: u32) -> Vec<u32> {
    let mut fresh = palette;
    let colors: Vec<u32> = partial
        .iter()
        .map(|c| {
            c.unwrap_or_else(|| {
                fresh += 1;
                fresh - 1
            })
        })
        .collect();
    debug_assert!(fresh as usize <= ColorSet::CAPACITY);
    colors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &pairs).unwrap()
    }

    fn coloring(palette: u32, colors: &[u32]) -> EdgeColoring {
        EdgeColoring::new(palette, colors.to_vec()).unwrap()
    }

    fn set(colors: &[u32]) -> ColorSet {
        colors.iter().copied().collect()
    }

    #[test]
    fn reach_on_paths() {
        let p3 = path(3);
        let f = rainbow_reach(&p3, &coloring(2, &[0, 1]), 0).unwrap();
        assert_eq!(f.sets(2), vec![set(&[0, 1])]);
        assert_eq!(f.sets(0), vec![ColorSet::empty()]);
        assert_eq!(f.path(2, 0), vec![0, 1]);
        let f = rainbow_reach(&p3, &coloring(2, &[0, 0]), 0).unwrap();
        assert!(f.sets(2).is_empty());
        assert_eq!(f.sets(1), vec![set(&[0])]);
    }

    #[test]
    fn reach_merges_equal_routes() {
        let f = rainbow_reach(&cycle(4), &coloring(2, &[0, 1, 0, 1]), 0).unwrap();
        assert_eq!(f.sets(2), vec![set(&[0, 1])]);
    }

    #[test]
    fn reach_keeps_incomparable_sets() {
        // C_4 with four colors: both routes to the opposite vertex survive
        let f = rainbow_reach(&cycle(4), &coloring(4, &[0, 1, 2, 3]), 0).unwrap();
        assert_eq!(f.sets(2), vec![set(&[0, 1]), set(&[2, 3])]);
        for (i, s) in f.sets(2).into_iter().enumerate() {
            let p = f.path(2, i);
            assert_eq!(p.iter().map(|&e| [0, 1, 2, 3][e]).collect::<ColorSet>(), s);
        }
    }

    #[test]
    fn reach_rejects_bad_input() {
        let p3 = path(3);
        assert!(matches!(
            rainbow_reach(&p3, &coloring(2, &[0]), 0),
            Err(CheckError::Coloring(ColoringError::LengthMismatch { expected: 2, got: 1 }))
        ));
        assert_eq!(rainbow_reach(&p3, &coloring(2, &[0, 1]), 3), Err(CheckError::BadSource(3)));
    }

    #[test]
    fn star_triples() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let tree = has_rainbow_tree(&star, &coloring(3, &[0, 1, 2]), &[1, 2, 3]).unwrap().unwrap();
        assert_eq!(tree, RainbowTree { edges: vec![0, 1, 2], center: 0 });
        assert_eq!(has_rainbow_tree(&star, &coloring(3, &[0, 1, 1]), &[1, 2, 3]), Ok(None));
    }

    #[test]
    fn path_triple_through_terminal() {
        let tree = has_rainbow_tree(&path(4), &coloring(3, &[0, 1, 2]), &[0, 1, 3]).unwrap().unwrap();
        assert_eq!(tree.edges, vec![0, 1, 2]);
        assert_eq!(tree.center, 1);
        assert!(matches!(
            has_rainbow_tree(&path(4), &coloring(3, &[0, 1, 2]), &[0, 1]),
            Err(CheckError::BadTerminals(_))
        ));
    }

    #[test]
    fn witness_is_trimmed() {
        // K_4 minus nothing: triple {0,1,2} around center 3 or via a path
        let mut pairs = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                pairs.push((a, b));
            }
        }
        let k4 = Graph::new(4, &pairs).unwrap();
        let c = coloring(6, &[0, 1, 2, 3, 4, 5]);
        let tree = has_rainbow_tree(&k4, &c, &[0, 1, 2]).unwrap().unwrap();
        assert_eq!(tree.edges.len(), 2);
    }

    #[test]
    fn k_rainbow_examples() {
        assert_eq!(is_k_rainbow(&cycle(4), &coloring(2, &[0, 1, 0, 1]), 3), Ok(Verdict::Ok));
        let p5 = path(5);
        assert_eq!(is_k_rainbow(&p5, &coloring(4, &[0, 1, 2, 3]), 3), Ok(Verdict::Ok));
        let v = is_k_rainbow(&p5, &coloring(3, &[0, 1, 2, 0]), 3).unwrap();
        assert_eq!(v, Verdict::Failing(vec![0, 1, 4]));
        assert_eq!(is_k_rainbow(&p5, &coloring(4, &[0, 1, 2, 3]), 4), Err(CheckError::UnsupportedK(4)));
    }

    #[test]
    fn pair_check() {
        let p4 = path(4);
        assert_eq!(is_k_rainbow(&p4, &coloring(3, &[0, 1, 2]), 2), Ok(Verdict::Ok));
        assert_eq!(is_k_rainbow(&p4, &coloring(3, &[0, 1, 0]), 2), Ok(Verdict::Failing(vec![0, 3])));
    }

    #[test]
    fn tiny_graphs_check_whole_vertex_set() {
        assert!(is_k_rainbow(&path(2), &coloring(1, &[0]), 3).unwrap().is_ok());
        assert!(is_k_rainbow(&Graph::empty(1), &coloring(0, &[]), 3).unwrap().is_ok());
        assert!(!is_k_rainbow(&Graph::empty(2), &coloring(0, &[]), 3).unwrap().is_ok());
    }

    #[test]
    fn palette_bound() {
        let colors: Vec<u32> = (0..3).collect();
        let c = EdgeColoring::new(40, colors).unwrap();
        assert_eq!(is_k_rainbow(&path(4), &c, 3), Err(CheckError::PaletteTooLarge { palette: 40, bound: 32 }));
        assert!(is_k_rainbow_with(&path(4), &c, 3, &CheckConfig::widened(64)).unwrap().is_ok());
    }

    #[test]
    fn partial_check_is_optimistic() {
        let p5 = path(5);
        let ok = |partial: &[Option<u32>]| verdict(&p5, &optimistic_colors(partial, 1), 3, false).is_ok();
        assert!(ok(&[Some(0), None, None, None]));
        assert!(!ok(&[Some(0), Some(0), None, None]));
    }

    #[test]
    fn verdict_json() {
        let ok = serde_json::to_string(&Verdict::Ok).unwrap();
        assert_eq!(ok, r#"{"ok":true,"failing":null}"#);
        let bad = serde_json::to_string(&Verdict::Failing(vec![0, 1, 4])).unwrap();
        assert_eq!(bad, r#"{"ok":false,"failing":[0,1,4]}"#);
        assert_eq!(serde_json::from_str::<Verdict>(&bad).unwrap(), Verdict::Failing(vec![0, 1, 4]));
    }

    #[test]
    fn single_set_check_matches_table() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)]).unwrap();
        for code in 0..3u32.pow(6) {
            let colors: Vec<u32> = (0..6).map(|i| code / 3u32.pow(i) % 3).collect();
            let table = ReachTable::build(&g, &colors, false);
            for a in 0..5 {
                for b in a + 1..5 {
                    assert_eq!(set_ok(&g, &colors, &[a, b]), table.connects(a, b));
                    for c in b + 1..5 {
                        assert_eq!(set_ok(&g, &colors, &[a, b, c]), table.triple([a, b, c]).is_some());
                    }
                }
            }
        }
    }
}
