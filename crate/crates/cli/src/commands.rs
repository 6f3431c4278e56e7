use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Result};
use rainbow_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::args::{
    ColorArgs, Family, FamilyArgs, GenArgs, Op, ProductArgs, ProductKind as Kind, SdiamArgs, SolveArgs, VerifyArgs,
};
use crate::files::Session;

/// Process exit status of a command that ran to completion.
pub enum Status {
    Ok,
    /// A coloring or construction failed verification.
    NotRainbow,
    /// The solver ran out of budget.
    Unknown,
}

pub struct Ctx {
    pub jobs: usize,
}

impl Ctx {
    fn check_config(&self) -> CheckConfig {
        CheckConfig { parallel: self.jobs > 1, ..CheckConfig::default() }
    }

    fn solve_options(&self, budget: u64, upper_hint: Option<EdgeColoring>) -> SolveOptions {
        SolveOptions { budget, jobs: self.jobs, upper_hint }
    }
}

fn print_json(value: &impl Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn family_spec(family: Family, n: Option<usize>, s: Option<usize>, t: Option<usize>) -> Result<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("--family {family:?} needs --{flag}"));
    Ok(match family {
        Family::Path => FamilySpec::Path { n: need(n, "n")? },
        Family::Cycle => FamilySpec::Cycle { n: need(n, "n")? },
        Family::Complete => FamilySpec::Complete { n: need(n, "n")? },
        Family::Star => FamilySpec::Star { n: need(n, "n")? },
        Family::Empty => FamilySpec::Empty { n: need(n, "n")? },
        Family::CompleteBipartite => FamilySpec::CompleteBipartite { s: need(s, "s")?, t: need(t, "t")? },
    })
}

/// Random spanning tree plus each remaining pair with probability `density`.
fn random_connected(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        bail!("--n must be positive");
    }
    if !(0.0..=1.0).contains(&density) {
        bail!("--density must lie in [0, 1]");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for b in 1..n {
        for a in 0..b {
            if !pairs.contains(&(a, b)) && rng.gen_bool(density) {
                pairs.push((a, b));
            }
        }
    }
    Ok(Graph::new(n, &pairs)?)
}

fn write_dot(
    session: &mut Session,
    path: Option<&Path>,
    g: &Graph,
    labels: Option<&[String]>,
    c: Option<&EdgeColoring>,
) -> Result<()> {
    match path {
        Some(p) => session.write_text(p, &g.to_dot(labels, c)),
        None => Ok(()),
    }
}

pub fn gen(a: &GenArgs, session: &mut Session) -> Result<Status> {
    let g = if a.random {
        let n = a.n.expect("clap requires --n");
        session.param("random", json!({"n": n, "density": a.density, "seed": a.seed}));
        random_connected(n, a.density, a.seed)?
    } else {
        let spec = family_spec(a.family.expect("clap requires --family"), a.n, a.s, a.t)?;
        session.param("family", spec);
        generate(&spec)?
    };
    session.write_json(&a.output, &g)?;
    write_dot(session, a.dot.as_deref(), &g, None, None)?;
    print_json(&json!({"n": g.n(), "m": g.m()}))?;
    Ok(Status::Ok)
}

pub fn oracle(a: &FamilyArgs, session: &mut Session) -> Result<Status> {
    let spec = family_spec(a.family, a.n, a.s, a.t)?;
    session.param("family", spec);
    print_json(&oracle_rx3(&spec)?)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct ProductMap<'a> {
    kind: ProductKind,
    n_g: usize,
    n_h: usize,
    vertices: Vec<(usize, usize)>,
    edge_classes: &'a [EdgeClass],
}

pub fn product(a: &ProductArgs, session: &mut Session) -> Result<Status> {
    session.param("kind", format!("{:?}", a.kind).to_lowercase());
    let g: Graph = session.read(&a.g)?;
    let h: Graph = session.read(&a.h)?;
    let (graph, labels) = if a.kind == Kind::Join {
        let joined = join(&g, &h);
        if let Some(p) = &a.map {
            session.write_json(p, &json!({"kind": "join", "n_g": g.n(), "n_h": h.n()}))?;
        }
        (joined, None)
    } else {
        let p = match a.kind {
            Kind::Cartesian => cartesian_product(&g, &h),
            Kind::Strong => strong_product(&g, &h),
            _ => lexicographic_product(&g, &h),
        };
        if let Some(path) = &a.map {
            let map = ProductMap {
                kind: p.kind,
                n_g: p.vertices.n_g,
                n_h: p.vertices.n_h,
                vertices: (0..p.vertices.len()).map(|v| p.vertices.backward(v)).collect(),
                edge_classes: &p.edge_classes,
            };
            session.write_json(path, &map)?;
        }
        let labels = p.vertices.labels();
        (p.graph, Some(labels))
    };
    session.write_json(&a.output, &graph)?;
    write_dot(session, a.dot.as_deref(), &graph, labels.as_deref(), None)?;
    print_json(&json!({"n": graph.n(), "m": graph.m()}))?;
    Ok(Status::Ok)
}

/// Operand coloring from a file, or an optimal one from the solver.
fn operand_coloring(
    session: &mut Session,
    ctx: &Ctx,
    path: Option<&Path>,
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<EdgeColoring> {
    if let Some(p) = path {
        return session.read(p);
    }
    if g.n() < k {
        // at most one edge once connected: nothing to optimize
        return Ok(EdgeColoring::rainbow(g.m()));
    }
    match rx_exact(g, k, &ctx.solve_options(budget, None))? {
        SolveOutcome::Exact(r) => Ok(r.witness),
        SolveOutcome::Unknown(i) => {
            eprintln!("operand not solved within budget; using a coloring with {} colors", i.upper);
            Ok(i.best)
        }
    }
}

pub fn color(a: &ColorArgs, ctx: &Ctx, session: &mut Session) -> Result<Status> {
    session.param("op", format!("{:?}", a.op).to_lowercase());
    session.param("budget", a.budget);
    let mut report = if a.op == Op::Grid {
        if a.dims.is_empty() {
            bail!("--op grid needs --dims");
        }
        session.param("dims", &a.dims);
        grid_coloring(&a.dims)?
    } else {
        let g_path = a.g.as_deref().ok_or_else(|| anyhow!("--op {:?} needs --g", a.op))?;
        let g: Graph = session.read(g_path)?;
        let load_h = |session: &mut Session| -> Result<Graph> {
            let p = a.h.as_deref().ok_or_else(|| anyhow!("--op {:?} needs --h", a.op))?;
            session.read(p)
        };
        match a.op {
            Op::Cartesian | Op::Strong => {
                let h = load_h(session)?;
                let cg = operand_coloring(session, ctx, a.cg.as_deref(), &g, 3, a.budget)?;
                let ch = operand_coloring(session, ctx, a.ch.as_deref(), &h, 3, a.budget)?;
                if a.op == Op::Cartesian {
                    cartesian_coloring(&g, &cg, &h, &ch)?
                } else {
                    strong_coloring(&g, &cg, &h, &ch)?
                }
            }
            Op::Lex => {
                let h = load_h(session)?;
                let cg = operand_coloring(session, ctx, a.cg.as_deref(), &g, 3, a.budget)?;
                if h.n() == 2 && h.m() == 1 && !g.is_complete() {
                    lex_coloring_h2(&g, &cg)?
                } else {
                    let rc = operand_coloring(session, ctx, a.ch_rc.as_deref(), &h, 2, a.budget)?;
                    lex_coloring_general(&g, &cg, &h, &rc)?
                }
            }
            Op::Join => {
                let h = load_h(session)?;
                let mut cs = JoinColorings::default();
                match g.n() {
                    1 => cs.h = Some(operand_coloring(session, ctx, a.ch.as_deref(), &h, 3, a.budget)?),
                    2 => cs.h_rc = Some(operand_coloring(session, ctx, a.ch_rc.as_deref(), &h, 2, a.budget)?),
                    _ => {
                        cs.g = Some(operand_coloring(session, ctx, a.cg.as_deref(), &g, 3, a.budget)?);
                        cs.h = Some(operand_coloring(session, ctx, a.ch.as_deref(), &h, 3, a.budget)?);
                    }
                }
                join_coloring(&g, &h, &cs)?
            }
            Op::Split => {
                let vertex = a.vertex.ok_or_else(|| anyhow!("--op split needs --vertex"))?;
                let spec = SplitSpec { vertex, n1: a.n1.clone(), n2: a.n2.clone() };
                session.param("split", &spec);
                let cg = operand_coloring(session, ctx, a.cg.as_deref(), &g, 3, a.budget)?;
                split_coloring(&g, &cg, &spec)?
            }
            Op::Subdiv => {
                let e = a.edge.ok_or_else(|| anyhow!("--op subdiv needs --edge"))?;
                session.param("edge", e);
                let cg = operand_coloring(session, ctx, a.cg.as_deref(), &g, 3, a.budget)?;
                subdivision_coloring(&g, &cg, e)?
            }
            Op::Grid => unreachable!(),
        }
    };
    if report.lower_bound.is_none() {
        report.certify();
    }

    session.write_json(&a.output, &report.derived_graph)?;
    session.write_json(&a.coloring, &report.coloring)?;
    let summary = report.summary();
    if let Some(p) = &a.report {
        session.write_json(p, &summary)?;
    }
    let labels = report.vertex_labels.as_deref();
    write_dot(session, a.dot.as_deref(), &report.derived_graph, labels, Some(&report.coloring))?;
    print_json(&summary)?;
    Ok(if report.is_ok() { Status::Ok } else { Status::NotRainbow })
}

pub fn verify(a: &VerifyArgs, ctx: &Ctx, session: &mut Session) -> Result<Status> {
    session.param("k", a.k);
    session.param("palette_bound", a.palette_bound);
    let g: Graph = session.read(&a.graph)?;
    let c: EdgeColoring = session.read(&a.coloring)?;
    let cfg = CheckConfig { palette_bound: a.palette_bound, ..ctx.check_config() };
    let verdict = is_k_rainbow_with(&g, &c, a.k as usize, &cfg)?;
    print_json(&json!({"ok": verdict.is_ok(), "failing": verdict.failing()}))?;
    Ok(if verdict.is_ok() { Status::Ok } else { Status::NotRainbow })
}

pub fn solve(a: &SolveArgs, ctx: &Ctx, session: &mut Session) -> Result<Status> {
    session.param("k", a.k);
    session.param("budget", a.budget);
    let g: Graph = session.read(&a.graph)?;
    let hint = match &a.hint {
        Some(p) => Some(session.read::<EdgeColoring>(p)?),
        None => None,
    };
    let outcome = rx_exact(&g, a.k as usize, &ctx.solve_options(a.budget, hint))?;
    if let Some(p) = &a.emit_witness {
        session.write_json(p, outcome.best_coloring())?;
    }
    print_json(&outcome)?;
    Ok(match outcome {
        SolveOutcome::Exact(_) => Status::Ok,
        SolveOutcome::Unknown(_) => Status::Unknown,
    })
}

pub fn sdiam(a: &SdiamArgs, session: &mut Session) -> Result<Status> {
    let g: Graph = session.read(&a.graph)?;
    let value = sdiam3(&g)?;
    let diam = diameter(&g)?;
    if let Some(p) = &a.triples {
        let mut text = String::new();
        for (t, d) in triple_distances(&g)? {
            writeln!(text, "{}", json!({"triple": t, "d": d}))?;
        }
        session.write_text(p, &text)?;
    }
    print_json(&json!({"sdiam3": value, "diameter": diam}))?;
    Ok(Status::Ok)
}
