//! Exact rainbow connection number (`k = 2`) and 3-rainbow index (`k = 3`).
//!
//! Iterative deepening over the palette size, starting at the Steiner
//! diameter. Each level is a depth-first search over canonical colorings
//! (an edge may use color `t + 1` only once color `t` appears earlier in the
//! edge order), so every color-permutation class is visited once. Partial
//! colorings are pruned with the checker's optimistic mode, which treats
//! every uncolored edge as carrying its own fresh color.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::check::{self, optimistic_colors, Verdict};
use crate::coloring::EdgeColoring;
use crate::colorset::ColorSet;
use crate::graph::Graph;
use crate::steiner::{self, SteinerError};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("k must be 2 or 3, got {0}")]
    UnsupportedK(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, need at least {k}")]
    TooSmall { n: usize, k: usize },
    #[error("{m} edges is beyond the solver's color-set capacity")]
    TooLarge { m: usize },
}

impl From<SteinerError> for SolveError {
    fn from(e: SteinerError) -> Self {
        match e {
            SteinerError::Disconnected => SolveError::Disconnected,
            SteinerError::TooSmall(n) => SolveError::TooSmall { n, k: 3 },
            SteinerError::BadTerminals(_) => unreachable!("sdiam enumerates valid triples"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Search node limit across all palette levels.
    pub budget: u64,
    /// Worker threads; `1` searches sequentially. Values and witnesses do
    /// not depend on this.
    pub jobs: usize,
    /// A known valid coloring, reported as the upper end of the interval when
    /// the budget runs out.
    pub upper_hint: Option<EdgeColoring>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET, jobs: 1, upper_hint: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: u32,
    pub witness: EdgeColoring,
    pub nodes_explored: u64,
    pub lower_bound_used: u32,
}

/// Budget ran out: the index lies in `[lower, upper]`, and `best` is a
/// verified coloring with `upper` colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: u32,
    pub upper: u32,
    pub best: EdgeColoring,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SolveOutcome {
    Exact(SolveResult),
    Unknown(Interval),
}

impl SolveOutcome {
    pub fn exact(&self) -> Option<&SolveResult> {
        match self {
            SolveOutcome::Exact(r) => Some(r),
            SolveOutcome::Unknown(_) => None,
        }
    }

    pub fn value(&self) -> Option<u32> {
        self.exact().map(|r| r.value)
    }

    /// Best verified coloring: the witness, or the interval's upper end.
    pub fn best_coloring(&self) -> &EdgeColoring {
        match self {
            SolveOutcome::Exact(r) => &r.witness,
            SolveOutcome::Unknown(i) => &i.best,
        }
    }
}

/// The Steiner bound: diameter for `k = 2`, 3-Steiner diameter for `k = 3`.
pub fn lower_bound(g: &Graph, k: usize) -> Result<u32, SolveError> {
    if !(2..=3).contains(&k) {
        return Err(SolveError::UnsupportedK(k));
    }
    if g.n() < k {
        return Err(SolveError::TooSmall { n: g.n(), k });
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(match k {
        2 => steiner::diameter(g)?,
        _ => steiner::sdiam3(g)?,
    })
}

/// Edge order for branching: edges discovered by BFS from vertex 0.
pub fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.m());
    let mut listed = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    if g.n() > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(v) = queue.pop_front() {
        for &(u, e) in g.neighbors(v) {
            if !listed[e] {
                listed[e] = true;
                order.push(e);
            }
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    order
}

/// Recently failing vertex sets, tried before a full check. A set that
/// fails is a cheap certificate that the whole coloring fails.
#[derive(Default)]
struct Killers(Vec<Vec<usize>>);

impl Killers {
    const KEEP: usize = 8;

    fn feasible(&mut self, g: &Graph, colors: &[u32], k: usize) -> bool {
        if let Some(i) = self.0.iter().position(|s| !check::set_ok(g, colors, s)) {
            let s = self.0.remove(i);
            self.0.insert(0, s);
            return false;
        }
        match check::verdict(g, colors, k, false) {
            Verdict::Ok => true,
            Verdict::Failing(s) => {
                self.0.insert(0, s);
                self.0.truncate(Self::KEEP);
                false
            }
        }
    }
}

enum Level {
    Found(Vec<u32>),
    Exhausted,
    OutOfBudget,
}

/// Number of prefixes a level is split into, independent of `jobs` so that
/// node counts and budget outcomes do not depend on the thread count.
const TARGET_PREFIXES: usize = 64;

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    palette: u32,
    order: &'a [usize],
    check_every: usize,
}

/// One prefix's subtree: its own node count, cap and killer list.
struct Task<'a> {
    index: usize,
    cap: u64,
    nodes: u64,
    killers: Killers,
    winner: &'a AtomicUsize,
}

impl Search<'_> {
    /// Depth-first search below a prefix. `used` counts colors present.
    fn dfs(&self, partial: &mut [Option<u32>], depth: usize, used: u32, task: &mut Task) -> Level {
        if task.winner.load(Ordering::Relaxed) < task.index {
            return Level::Exhausted;
        }
        if task.nodes >= task.cap {
            return Level::OutOfBudget;
        }
        task.nodes += 1;
        let m = self.order.len();
        if depth == m {
            let colors: Vec<u32> = partial.iter().map(|c| c.expect("complete")).collect();
            return if task.killers.feasible(self.g, &colors, self.k) {
                Level::Found(colors)
            } else {
                Level::Exhausted
            };
        }
        let e = self.order[depth];
        let top = (used + 1).min(self.palette);
        for color in 0..top {
            let now_used = used.max(color + 1);
            // colors below the palette size were ruled out at smaller levels,
            // so every remaining color has to appear
            if ((m - depth - 1) as u32) < self.palette - now_used {
                continue;
            }
            partial[e] = Some(color);
            let placed = depth + 1;
            if placed < m
                && placed.is_multiple_of(self.check_every)
                && !task.killers.feasible(self.g, &optimistic_colors(partial, self.palette), self.k)
            {
                continue;
            }
            match self.dfs(partial, placed, now_used, task) {
                Level::Exhausted => {}
                other => {
                    partial[e] = None;
                    return other;
                }
            }
        }
        partial[e] = None;
        Level::Exhausted
    }

    /// Canonical prefixes of the first `depth` edges in search order.
    fn prefixes(&self, depth: usize) -> Vec<(Vec<u32>, u32)> {
        let mut out = vec![(Vec::new(), 0u32)];
        for _ in 0..depth {
            out = out
                .into_iter()
                .flat_map(|(prefix, used)| {
                    (0..(used + 1).min(self.palette)).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        (p, used.max(c + 1))
                    })
                })
                .collect();
        }
        out
    }

    fn run_prefix(&self, prefix: &[u32], used: u32, task: &mut Task) -> Level {
        let m = self.order.len();
        let depth = prefix.len();
        let mut partial = vec![None; self.g.m()];
        for (d, &c) in prefix.iter().enumerate() {
            partial[self.order[d]] = Some(c);
            if (m - d - 1) as u32 + used < self.palette {
                return Level::Exhausted;
            }
            let placed = d + 1;
            if placed < m
                && placed.is_multiple_of(self.check_every)
                && !task.killers.feasible(self.g, &optimistic_colors(&partial, self.palette), self.k)
            {
                return Level::Exhausted;
            }
        }
        self.dfs(&mut partial, depth, used, task)
    }

    /// Searches one palette level within `cap` nodes. Prefixes are merged in
    /// order, so the result and the node count match the sequential run.
    fn run(&self, jobs: usize, cap: u64) -> (Level, u64) {
        let m = self.order.len();
        let mut depth = 0;
        while m >= 4 && depth < m / 2 && self.prefixes(depth).len() < TARGET_PREFIXES {
            depth += 1;
        }
        let prefixes = self.prefixes(depth);
        let winner = AtomicUsize::new(usize::MAX);
        let task = |index: usize, cap: u64| Task { index, cap, nodes: 0, killers: Killers::default(), winner: &winner };

        let mut spent = 0u64;
        if jobs <= 1 {
            for (i, (prefix, used)) in prefixes.iter().enumerate() {
                let mut t = task(i, cap - spent);
                let level = self.run_prefix(prefix, *used, &mut t);
                spent += t.nodes;
                match level {
                    Level::Exhausted => {}
                    other => return (other, spent),
                }
            }
            return (Level::Exhausted, spent);
        }

        let results: Vec<(Level, u64)> = prefixes
            .par_iter()
            .enumerate()
            .map(|(i, (prefix, used))| {
                let mut t = task(i, cap);
                let level = self.run_prefix(prefix, *used, &mut t);
                if let Level::Found(_) = level {
                    winner.fetch_min(i, Ordering::Relaxed);
                }
                (level, t.nodes)
            })
            .collect();
        // prefixes before the winner ran to completion, so replaying them in
        // order reproduces the sequential budget accounting
        for (level, nodes) in results {
            if spent + nodes > cap || matches!(level, Level::OutOfBudget) {
                return (Level::OutOfBudget, cap);
            }
            spent += nodes;
            if let Level::Found(_) = level {
                return (level, spent);
            }
        }
        (Level::Exhausted, spent)
    }
}

/// Exact `rx_k` by iterative deepening from the Steiner bound.
///
/// Palette `m` always succeeds with the all-distinct coloring, so the search
/// terminates; running out of budget yields [`SolveOutcome::Unknown`] instead
/// of a guess.
pub fn rx_exact(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveOutcome, SolveError> {
    let lb = lower_bound(g, k)?;
    let m = g.m();
    let order = branching_order(g);
    let check_every = m.div_ceil(4).max(1);
    let mut nodes = 0u64;

    let pool = if opts.jobs > 1 { rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build().ok() } else { None };

    // all-distinct, numbered along the branching order so it stays canonical
    let mut distinct = vec![0; m];
    for (i, &e) in order.iter().enumerate() {
        distinct[e] = i as u32;
    }
    let rainbow = EdgeColoring::new(m as u32, distinct).expect("colors below m");

    for palette in lb..=m as u32 {
        if palette == m as u32 {
            return Ok(SolveOutcome::Exact(SolveResult {
                value: palette,
                witness: rainbow,
                nodes_explored: nodes,
                lower_bound_used: lb,
            }));
        }
        if palette as usize + m > ColorSet::CAPACITY {
            return Err(SolveError::TooLarge { m });
        }
        let search = Search { g, k, palette, order: &order, check_every };
        let cap = opts.budget - nodes;
        let (level, spent) = match &pool {
            Some(p) => p.install(|| search.run(opts.jobs, cap)),
            None => search.run(1, cap),
        };
        nodes += spent;
        match level {
            Level::Found(colors) => {
                return Ok(SolveOutcome::Exact(SolveResult {
                    value: palette,
                    witness: EdgeColoring::new(palette, colors).expect("colors below palette"),
                    nodes_explored: nodes,
                    lower_bound_used: lb,
                }));
            }
            Level::Exhausted => {}
            Level::OutOfBudget => {
                let best = opts
                    .upper_hint
                    .as_ref()
                    .filter(|h| {
                        h.check_len(m).is_ok()
                            && h.palette() as usize <= ColorSet::CAPACITY
                            && h.colors_used() < m as u32
                            && check::verdict(g, h.colors(), k, true).is_ok()
                    })
                    .cloned()
                    .unwrap_or(rainbow);
                return Ok(SolveOutcome::Unknown(Interval {
                    lower: palette,
                    upper: best.colors_used(),
                    best,
                    nodes_explored: nodes,
                }));
            }
        }
    }
    unreachable!("palette m always succeeds")
}
