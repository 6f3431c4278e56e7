//! Graph operations, Steiner distances, rainbow tree checking and exact
//! 3-rainbow index computation, with constructive colorings for graph
//! products, joins, vertex splits and edge subdivisions.

pub mod check;
pub mod coloring;
pub mod colorset;
pub mod constructions;
pub mod families;
pub mod graph;
pub mod ops;
pub mod product;
pub mod solver;
pub mod steiner;

pub use check::{
    has_rainbow_tree, is_k_rainbow, is_k_rainbow_with, rainbow_reach, CheckConfig, CheckError, RainbowTree,
    ReachFamily, Verdict,
};
pub use coloring::{ColoringError, EdgeColoring};
pub use colorset::ColorSet;
pub use constructions::{
    cartesian_coloring, grid_coloring, join_coloring, lex_coloring_general, lex_coloring_h2, split_coloring,
    strong_coloring, subdivision_coloring, ConstructionError, ConstructionReport, JoinColorings, ReportSummary,
};
pub use families::{generate, oracle_coloring, oracle_rx3, FamilyError, FamilySpec, OracleEntry, Provenance};
pub use graph::{Graph, GraphError};
pub use ops::{split_vertex, subdivide_edge, Derived, EdgeOrigin, SplitSpec};
pub use product::{
    cartesian_product, join, lexicographic_product, strong_product, EdgeClass, Product, ProductKind, ProductVertexMap,
};
pub use solver::{lower_bound, rx_exact, Interval, SolveError, SolveOptions, SolveOutcome, SolveResult};
pub use steiner::{
    all_pairs_distances, diameter, sdiam3, steiner_distance_3, triple_distances, DistanceMatrix, SteinerError,
    SteinerResult,
};
