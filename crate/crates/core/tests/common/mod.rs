#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rainbow_core::{is_k_rainbow, EdgeColoring, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &pairs).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::new(n, &pairs).unwrap()
}

/// Random spanning tree plus each remaining pair with a probability drawn
/// uniformly below `max_density`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, max_density: f64) -> Graph {
    let p = rng.gen_range(0.0..max_density);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        pairs.push((parent, order[i]));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                pairs.push((a, b));
            }
        }
    }
    Graph::new(n, &pairs).unwrap()
}

pub fn random_coloring<R: Rng>(rng: &mut R, m: usize, palette: u32) -> EdgeColoring {
    EdgeColoring::new(palette, (0..m).map(|_| rng.gen_range(0..palette)).collect()).unwrap()
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let pairs: Vec<_> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    Graph::new(g.n(), &pairs).unwrap()
}

pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

/// Every 3-set covered by some tree of pairwise distinct colors, found by
/// enumerating all edge subsets with distinct colors that form a tree.
pub fn brute_rainbow_triples(g: &Graph, colors: &[u32]) -> BTreeSet<[usize; 3]> {
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }

    fn grow(g: &Graph, colors: &[u32], from: usize, chosen: &mut Vec<usize>, out: &mut BTreeSet<[usize; 3]>) {
        if !chosen.is_empty() {
            // acyclic by construction; a forest is a tree iff |V| = |E| + 1
            let verts: BTreeSet<usize> = chosen.iter().flat_map(|&e| [g.edges()[e].0, g.edges()[e].1]).collect();
            if verts.len() == chosen.len() + 1 {
                let vs: Vec<usize> = verts.into_iter().collect();
                for t in triples(vs.len()) {
                    out.insert([vs[t[0]], vs[t[1]], vs[t[2]]]);
                }
            }
        }
        for e in from..g.m() {
            if chosen.iter().any(|&f| colors[f] == colors[e]) {
                continue;
            }
            let mut parent: Vec<usize> = (0..g.n()).collect();
            for &f in chosen.iter() {
                let (a, b) = g.edges()[f];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
            let (a, b) = g.edges()[e];
            if find(&mut parent, a) == find(&mut parent, b) {
                continue;
            }
            chosen.push(e);
            grow(g, colors, e + 1, chosen, out);
            chosen.pop();
        }
    }

    let mut out = BTreeSet::new();
    grow(g, colors, 0, &mut Vec::new(), &mut out);
    out
}

/// Smallest palette `p <= max_palette` admitting a k-rainbow coloring,
/// trying every one of the `p^m` colorings.
pub fn brute_rx(g: &Graph, k: usize, max_palette: u32) -> Option<u32> {
    let m = g.m();
    for p in 1..=max_palette {
        let mut colors = vec![0u32; m];
        loop {
            let c = EdgeColoring::new(p, colors.clone()).unwrap();
            if is_k_rainbow(g, &c, k).unwrap().is_ok() {
                return Some(p);
            }
            let mut i = 0;
            while i < m && colors[i] == p - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            colors[i] += 1;
        }
    }
    None
}

fn induced_connected(g: &Graph, mask: u32) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            let bit = 1u32 << w;
            if mask & bit != 0 && seen & bit == 0 {
                seen |= bit;
                queue.push_back(w);
            }
        }
    }
    seen == mask
}

/// Steiner distance as one less than the smallest connected vertex set
/// containing `s`.
pub fn brute_steiner(g: &Graph, s: &[usize]) -> Option<u32> {
    let need: u32 = s.iter().map(|&v| 1u32 << v).sum();
    (0u32..1 << g.n())
        .filter(|&mask| mask & need == need && induced_connected(g, mask))
        .map(|mask| mask.count_ones() - 1)
        .min()
}

/// Checks that `edges` form a tree spanning a vertex set that contains
/// every vertex of `s`, with pairwise distinct colors.
pub fn is_rainbow_tree(g: &Graph, colors: &[u32], edges: &[usize], s: &[usize]) -> bool {
    let distinct: BTreeSet<u32> = edges.iter().map(|&e| colors[e]).collect();
    if distinct.len() != edges.len() {
        return false;
    }
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&e| [g.edges()[e].0, g.edges()[e].1]).collect();
    if edges.is_empty() {
        return s.len() <= 1;
    }
    if verts.len() != edges.len() + 1 || !s.iter().all(|v| verts.contains(v)) {
        return false;
    }
    let start = *verts.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &e in edges {
            let (a, b) = g.edges()[e];
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen == verts
}
