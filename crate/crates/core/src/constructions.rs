//! Colorings of derived graphs built from colorings of their operands.
//!
//! Every construction takes verified operand colorings, emits a coloring of
//! the derived graph, and runs the checker on the result. A failed check is
//! kept in the report with its failing triple.
//!
//! Palettes are laid out as `[G colors][H colors][fresh colors]`.

use serde::Serialize;
use thiserror::Error;

use crate::check::{self, CheckConfig, CheckError, Verdict};
use crate::coloring::EdgeColoring;
use crate::colorset::ColorSet;
use crate::families::{self, FamilySpec, OracleEntry};
use crate::graph::{Graph, GraphError};
use crate::ops::{self, Derived, EdgeOrigin, SplitSpec};
use crate::product::{self, EdgeClass, Product};
use crate::steiner;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{operand} coloring is not {k}-rainbow; first failing set {failing:?}")]
    OperandNotRainbow { operand: &'static str, k: usize, failing: Vec<usize> },
    #[error("missing {0} coloring")]
    MissingColoring(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("both operands complete: the result is {family}, see the families oracle")]
    Routed { family: FamilySpec, oracle: Option<OracleEntry> },
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn routed(n: usize) -> ConstructionError {
    let family = FamilySpec::Complete { n };
    ConstructionError::Routed { family, oracle: families::oracle_rx3(&family).ok() }
}

fn config() -> CheckConfig {
    CheckConfig::widened(ColorSet::CAPACITY as u32)
}

fn require(g: &Graph, c: &EdgeColoring, k: usize, operand: &'static str) -> Result<(), ConstructionError> {
    match check::is_k_rainbow_with(g, c, k, &config())? {
        Verdict::Ok => Ok(()),
        Verdict::Failing(failing) => Err(ConstructionError::OperandNotRainbow { operand, k, failing }),
    }
}

fn require_connected(g: &Graph, operand: &str) -> Result<(), ConstructionError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(ConstructionError::Precondition(format!("{operand} is disconnected")))
    }
}

/// A derived graph, its coloring, and the checker's verdict on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub derived_graph: Graph,
    pub coloring: EdgeColoring,
    pub colors_used: u32,
    /// Palette size the construction promises (sum of operand palettes plus
    /// fresh colors).
    pub claimed_bound: u32,
    pub verdict: Verdict,
    /// Joins only: the known bound for the spanning complete bipartite graph.
    pub spanning_bound: Option<OracleEntry>,
    /// Steiner lower bound, once computed by [`ConstructionReport::certify`].
    pub lower_bound: Option<u32>,
    /// Product coordinates for every vertex, when the graph is a product.
    pub vertex_labels: Option<Vec<String>>,
}

/// The JSON summary `{colors_used, claimed_bound, ok, failing}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportSummary {
    pub colors_used: u32,
    pub claimed_bound: u32,
    pub ok: bool,
    pub failing: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reported_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<u32>,
}

impl ConstructionReport {
    fn finish(derived_graph: Graph, coloring: EdgeColoring, claimed_bound: u32) -> Result<Self, ConstructionError> {
        let verdict = check::is_k_rainbow_with(&derived_graph, &coloring, 3, &config())?;
        Ok(ConstructionReport {
            colors_used: coloring.colors_used(),
            derived_graph,
            coloring,
            claimed_bound,
            verdict,
            spanning_bound: None,
            lower_bound: None,
            vertex_labels: None,
        })
    }

    pub fn is_ok(&self) -> bool {
        self.verdict.is_ok()
    }

    /// `min(claimed_bound, spanning bound's upper end)`.
    pub fn reported_bound(&self) -> u32 {
        self.spanning_bound.map_or(self.claimed_bound, |b| b.upper.min(self.claimed_bound))
    }

    /// Computes the 3-Steiner diameter of the derived graph. When it equals
    /// `colors_used` on a verified coloring, that is the exact index.
    pub fn certify(&mut self) -> Option<u32> {
        let lb = steiner::sdiam3(&self.derived_graph).ok()?;
        self.lower_bound = Some(lb);
        (self.is_ok() && lb == self.colors_used).then_some(lb)
    }

    pub fn summary(&self) -> ReportSummary {
        ReportSummary {
            colors_used: self.colors_used,
            claimed_bound: self.claimed_bound,
            ok: self.is_ok(),
            failing: self.verdict.failing().map(<[usize]>::to_vec),
            reported_bound: self.spanning_bound.map(|_| self.reported_bound()),
            lower_bound: self.lower_bound,
        }
    }
}

fn labels_of(p: &Product, g_labels: Option<&[String]>, h_labels: Option<&[String]>) -> Vec<String> {
    (0..p.vertices.len())
        .map(|v| {
            let (i, j) = p.vertices.backward(v);
            let a = g_labels.map_or_else(|| i.to_string(), |l| l[i].clone());
            let b = h_labels.map_or_else(|| j.to_string(), |l| l[j].clone());
            format!("({a},{b})")
        })
        .collect()
}

/// Layer colors shared by the Cartesian and strong constructions: `G`-layer
/// edges copy `cg`, `H`-layer edges copy `ch` shifted past `cg`'s palette.
fn layer_color(class: &EdgeClass, cg: &EdgeColoring, ch: &EdgeColoring) -> Option<u32> {
    match *class {
        EdgeClass::GLayer { g_edge, .. } => Some(cg.colors()[g_edge]),
        EdgeClass::HLayer { h_edge, .. } => Some(cg.palette() + ch.colors()[h_edge]),
        EdgeClass::Cross { .. } => None,
    }
}

fn check_lengths(g: &Graph, cg: &EdgeColoring, h: &Graph, ch: &EdgeColoring) -> Result<(), ConstructionError> {
    cg.check_len(g.m()).map_err(CheckError::from)?;
    ch.check_len(h.m()).map_err(CheckError::from)?;
    Ok(())
}

/// Coloring of `G □ H` with `palette(cg) + palette(ch)` colors.
pub fn cartesian_coloring(
    g: &Graph,
    cg: &EdgeColoring,
    h: &Graph,
    ch: &EdgeColoring,
) -> Result<ConstructionReport, ConstructionError> {
    cartesian_labeled(g, cg, None, h, ch, None)
}

fn cartesian_labeled(
    g: &Graph,
    cg: &EdgeColoring,
    g_labels: Option<&[String]>,
    h: &Graph,
    ch: &EdgeColoring,
    h_labels: Option<&[String]>,
) -> Result<ConstructionReport, ConstructionError> {
    check_lengths(g, cg, h, ch)?;
    require(g, cg, 3, "G")?;
    require(h, ch, 3, "H")?;
    let p = product::cartesian_product(g, h);
    let palette = cg.palette() + ch.palette();
    let colors = p.edge_classes.iter().map(|c| layer_color(c, cg, ch).expect("no cross edges")).collect();
    let coloring = EdgeColoring::new(palette, colors).expect("colors within palette");
    let labels = labels_of(&p, g_labels, h_labels);
    let mut report = ConstructionReport::finish(p.graph, coloring, palette)?;
    report.vertex_labels = Some(labels);
    Ok(report)
}

/// Iterated Cartesian coloring of `P_{n_1} □ ... □ P_{n_k}` from all-distinct
/// path colorings, with the Steiner bound computed; when verified this uses
/// `Σ n_i - k` colors and the bound matches.
pub fn grid_coloring(dims: &[usize]) -> Result<ConstructionReport, ConstructionError> {
    if dims.is_empty() || dims.iter().any(|&d| d < 2) {
        return Err(ConstructionError::Precondition(format!("grid dimensions must be >= 2, got {dims:?}")));
    }
    let path = |n: usize| families::generate(&FamilySpec::Path { n }).expect("n >= 2");
    let mut graph = path(dims[0]);
    let mut coloring = EdgeColoring::rainbow(graph.m());
    let mut labels: Option<Vec<String>> = None;
    let mut claimed = coloring.palette();
    let mut report = None;
    for &d in &dims[1..] {
        let h = path(d);
        let ch = EdgeColoring::rainbow(h.m());
        let r = cartesian_labeled(&graph, &coloring, labels.as_deref(), &h, &ch, None)?;
        graph = r.derived_graph.clone();
        coloring = r.coloring.clone();
        labels = r.vertex_labels.clone();
        claimed = r.claimed_bound;
        report = Some(r);
    }
    let mut report = match report {
        Some(r) => r,
        None => ConstructionReport::finish(graph, coloring, claimed)?,
    };
    report.certify();
    Ok(report)
}

/// Coloring of `G ⊠ H`: the Cartesian skeleton as in
/// [`cartesian_coloring`], diagonal edges all color 0.
pub fn strong_coloring(
    g: &Graph,
    cg: &EdgeColoring,
    h: &Graph,
    ch: &EdgeColoring,
) -> Result<ConstructionReport, ConstructionError> {
    check_lengths(g, cg, h, ch)?;
    require(g, cg, 3, "G")?;
    require(h, ch, 3, "H")?;
    let p = product::strong_product(g, h);
    let palette = cg.palette() + ch.palette();
    let colors = p.edge_classes.iter().map(|c| layer_color(c, cg, ch).unwrap_or(0)).collect();
    let coloring = EdgeColoring::new(palette, colors).expect("colors within palette");
    let labels = labels_of(&p, None, None);
    let mut report = ConstructionReport::finish(p.graph, coloring, palette)?;
    report.vertex_labels = Some(labels);
    Ok(report)
}

/// Coloring of `G[K_2]` for non-complete `G`: both copies of `G` copy `cg`,
/// every other edge gets one fresh color.
pub fn lex_coloring_h2(g: &Graph, cg: &EdgeColoring) -> Result<ConstructionReport, ConstructionError> {
    cg.check_len(g.m()).map_err(CheckError::from)?;
    if g.n() < 2 {
        return Err(ConstructionError::Precondition("G needs at least 2 vertices".into()));
    }
    require_connected(g, "G")?;
    if g.is_complete() {
        return Err(routed(2 * g.n()));
    }
    require(g, cg, 3, "G")?;
    let k2 = families::generate(&FamilySpec::Path { n: 2 }).expect("valid");
    let p = product::lexicographic_product(g, &k2);
    let fresh = cg.palette();
    let colors = p
        .edge_classes
        .iter()
        .map(|c| match *c {
            EdgeClass::Cross { g_edge, h1, h2 } if h1 == h2 => cg.colors()[g_edge],
            _ => fresh,
        })
        .collect();
    let coloring = EdgeColoring::new(fresh + 1, colors).expect("colors within palette");
    let labels = labels_of(&p, None, None);
    let mut report = ConstructionReport::finish(p.graph, coloring, fresh + 1)?;
    report.vertex_labels = Some(labels);
    Ok(report)
}

/// Coloring of `G[H]` from a 3-rainbow coloring `cg` on colors `0..p` and a
/// rainbow-connected coloring `ch_rc` of `H`:
///
/// * copies of `G` (`h1 = h2`) copy `cg`;
/// * `(g1,h1)(g2,h2)` with `h1 != h2` gets `(cg(g1g2) + 1) mod p`;
/// * copies of `H` copy `ch_rc` shifted to `p..`.
pub fn lex_coloring_general(
    g: &Graph,
    cg: &EdgeColoring,
    h: &Graph,
    ch_rc: &EdgeColoring,
) -> Result<ConstructionReport, ConstructionError> {
    check_lengths(g, cg, h, ch_rc)?;
    if g.n() < 2 || h.n() < 2 {
        return Err(ConstructionError::Precondition("both operands need at least 2 vertices".into()));
    }
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    if g.is_complete() && h.is_complete() {
        return Err(routed(g.n() * h.n()));
    }
    require(g, cg, 3, "G")?;
    require(h, ch_rc, 2, "H")?;
    let p = cg.palette();
    let prod = product::lexicographic_product(g, h);
    let colors = prod
        .edge_classes
        .iter()
        .map(|c| match *c {
            EdgeClass::Cross { g_edge, h1, h2 } if h1 == h2 => cg.colors()[g_edge],
            EdgeClass::Cross { g_edge, .. } => (cg.colors()[g_edge] + 1) % p,
            EdgeClass::HLayer { h_edge, .. } => p + ch_rc.colors()[h_edge],
            EdgeClass::GLayer { .. } => unreachable!("lexicographic products have no G-layer class"),
        })
        .collect();
    let palette = p + ch_rc.palette();
    let coloring = EdgeColoring::new(palette, colors).expect("colors within palette");
    let labels = labels_of(&prod, None, None);
    let mut report = ConstructionReport::finish(prod.graph, coloring, palette)?;
    report.vertex_labels = Some(labels);
    Ok(report)
}

/// Operand colorings for [`join_coloring`]; which ones are needed depends on
/// the order `s` of the smaller side.
#[derive(Debug, Clone, Default)]
pub struct JoinColorings {
    /// 3-rainbow coloring of `G` (`s >= 3`).
    pub g: Option<EdgeColoring>,
    /// 3-rainbow coloring of `H` (`s = 1` or `s >= 3`).
    pub h: Option<EdgeColoring>,
    /// Rainbow-connected coloring of `H` (`s = 2`).
    pub h_rc: Option<EdgeColoring>,
}

/// Coloring of `G ∨ H` with `|V(G)| = s <= t = |V(H)|`:
///
/// * `s = 1`: `H` as its 3-rainbow coloring, all join edges one fresh color;
/// * `s = 2`: `H` rainbow-connected with `r` colors, join edges at the `i`-th
///   vertex of `G` colored `r + i`, the edge of `G` colored `r + 2`;
/// * `s >= 3`: both sides 3-rainbow within `c = max` of their palettes, all
///   join edges colored `c`.
///
/// The report also carries the known bound of the spanning `K_{s,t}`.
pub fn join_coloring(g: &Graph, h: &Graph, colorings: &JoinColorings) -> Result<ConstructionReport, ConstructionError> {
    let (s, t) = (g.n(), h.n());
    if s == 0 || s > t {
        return Err(ConstructionError::Precondition(format!("need 1 <= |V(G)| <= |V(H)|, got {s} and {t}")));
    }
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    if g.is_complete() && h.is_complete() {
        return Err(routed(s + t));
    }
    let joined = product::join(g, h);
    let (mg, mh) = (g.m(), h.m());
    let join_edge = |e: usize| (e - mg - mh) / t;

    let (colors, palette): (Vec<u32>, u32) = match s {
        1 => {
            let ch = colorings.h.as_ref().ok_or(ConstructionError::MissingColoring("H (3-rainbow)"))?;
            ch.check_len(mh).map_err(CheckError::from)?;
            require(h, ch, 3, "H")?;
            let fresh = ch.palette();
            let colors = ch.colors().iter().copied().chain(std::iter::repeat_n(fresh, t)).collect();
            (colors, fresh + 1)
        }
        2 => {
            let rc = colorings.h_rc.as_ref().ok_or(ConstructionError::MissingColoring("H (rainbow-connected)"))?;
            rc.check_len(mh).map_err(CheckError::from)?;
            require(h, rc, 2, "H")?;
            if mg != 1 {
                return Err(ConstructionError::Precondition("two-vertex side must be an edge".into()));
            }
            let r = rc.palette();
            let mut colors = vec![r + 2];
            colors.extend_from_slice(rc.colors());
            colors.extend((mg + mh..joined.m()).map(|e| r + join_edge(e) as u32));
            (colors, r + 3)
        }
        _ => {
            let cg = colorings.g.as_ref().ok_or(ConstructionError::MissingColoring("G (3-rainbow)"))?;
            let ch = colorings.h.as_ref().ok_or(ConstructionError::MissingColoring("H (3-rainbow)"))?;
            check_lengths(g, cg, h, ch)?;
            require(g, cg, 3, "G")?;
            require(h, ch, 3, "H")?;
            let c1 = cg.palette().max(ch.palette());
            let mut colors = cg.colors().to_vec();
            colors.extend_from_slice(ch.colors());
            colors.extend(std::iter::repeat_n(c1, s * t));
            (colors, c1 + 1)
        }
    };
    let coloring = EdgeColoring::new(palette, colors).expect("colors within palette");
    let mut report = ConstructionReport::finish(joined, coloring, palette)?;
    report.spanning_bound = families::oracle_rx3(&FamilySpec::CompleteBipartite { s, t }).ok();
    Ok(report)
}

fn inherit(d: Derived, cg: &EdgeColoring) -> Result<ConstructionReport, ConstructionError> {
    let fresh = cg.palette();
    let colors = d
        .origins
        .iter()
        .map(|o| match *o {
            EdgeOrigin::Inherited(e) => cg.colors()[e],
            EdgeOrigin::Fresh => fresh,
        })
        .collect();
    let coloring = EdgeColoring::new(fresh + 1, colors).expect("colors within palette");
    ConstructionReport::finish(d.graph, coloring, fresh + 1)
}

/// Coloring of the split graph: edges keep their pre-split colors and the
/// new edge `v1 v2` gets one fresh color.
pub fn split_coloring(g: &Graph, cg: &EdgeColoring, spec: &SplitSpec) -> Result<ConstructionReport, ConstructionError> {
    cg.check_len(g.m()).map_err(CheckError::from)?;
    let derived = ops::split_vertex(g, spec)?;
    require(g, cg, 3, "G")?;
    inherit(derived, cg)
}

/// Coloring after subdividing edge `e`: the `u`-side edge keeps `cg(e)`, the
/// fresh edge gets a new color.
pub fn subdivision_coloring(g: &Graph, cg: &EdgeColoring, e: usize) -> Result<ConstructionReport, ConstructionError> {
    cg.check_len(g.m()).map_err(CheckError::from)?;
    let derived = ops::subdivide_edge(g, e)?;
    require(g, cg, 3, "G")?;
    inherit(derived, cg)
}
