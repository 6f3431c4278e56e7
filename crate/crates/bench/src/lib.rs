//! Benchmark fixtures: derived graphs with verified colorings, and small
//! graphs for the exact solver.

use rainbow_core::{cartesian_coloring, generate, lex_coloring_general, EdgeColoring, FamilySpec, Graph, SolveOptions};

pub fn family(spec: FamilySpec) -> Graph {
    generate(&spec).expect("valid family")
}

pub fn optimal(g: &Graph, k: usize) -> EdgeColoring {
    rainbow_core::rx_exact(g, k, &SolveOptions::default())
        .expect("solvable")
        .exact()
        .expect("within budget")
        .witness
        .clone()
}

/// `C_n □ C_n` with the Cartesian construction.
pub fn cycle_square(n: usize) -> (Graph, EdgeColoring) {
    let c = family(FamilySpec::Cycle { n });
    let w = optimal(&c, 3);
    let r = cartesian_coloring(&c, &w, &c, &w).expect("operands verified");
    (r.derived_graph, r.coloring)
}

/// `C_n[P_3]` with the general lexicographic construction.
pub fn cycle_lex_path(n: usize) -> (Graph, EdgeColoring) {
    let c = family(FamilySpec::Cycle { n });
    let p = family(FamilySpec::Path { n: 3 });
    let r = lex_coloring_general(&c, &optimal(&c, 3), &p, &optimal(&p, 2)).expect("operands verified");
    (r.derived_graph, r.coloring)
}

/// Graphs whose `rx_3` the solver settles in well under a second.
pub fn solver_cases() -> Vec<(String, Graph)> {
    [
        FamilySpec::Cycle { n: 7 },
        FamilySpec::Complete { n: 6 },
        FamilySpec::CompleteBipartite { s: 2, t: 5 },
        FamilySpec::CompleteBipartite { s: 3, t: 3 },
    ]
    .into_iter()
    .map(|spec| (spec.to_string(), family(spec)))
    .collect()
}
