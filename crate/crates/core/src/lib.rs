//! Geodesic convexity in oriented graphs.
//!
//! The crate computes intervals, convex hulls and extreme vertices of
//! oriented graphs, solves the hull and geodetic numbers exactly on small
//! instances, and provides constructive bounds, graph transformations,
//! set-cover gadgets and a polynomial algorithm for oriented cacti.
//!
//! ```
//! use geodesic_hull::{min_hull_set, OrientedGraph};
//!
//! let c3 = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
//! assert_eq!(min_hull_set(&c3).unwrap().optimum, 2);
//! ```

pub mod blocks;
pub mod bounds;
pub mod cactus;
pub mod convexity;
pub mod distance;
pub mod error;
pub mod graph;
pub mod reductions;
pub mod solver;
pub mod structure;
pub mod transforms;
pub mod vertex_set;

pub use blocks::{block_decomposition, Block, BlockDecomposition};
pub use bounds::{
    c3_closure, c3_interval, greedy_hull_set, split_hull_set, tournament_hull_set,
    two_thirds_bound, BoundCertificate, BoundStep,
};
pub use convexity::{
    extreme_kind, extreme_set, extreme_vertices, hull, interval, is_coconvex, is_convex,
    is_geodetic_set, is_hull_set, simplicial_vertices, undirected_hull, undirected_interval,
    ExtremeKind,
};
pub use distance::{all_pairs_distances, geodesic_vertices, DistanceMatrix, GeodesicIndex};
pub use error::{Error, Result};
pub use graph::{OrientedGraph, UndirectedGraph};
pub use solver::{
    all_minimum_sets, min_geodetic_set, min_geodetic_set_with, min_hull_set, min_hull_set_with,
    solve, undirected_min_hull_set, undirected_min_hull_set_with, Objective, SolveResult,
    SolverConfig,
};
pub use structure::{
    is_bipartite_underlying, is_cactus, is_cobipartite_underlying, is_dag, is_split_underlying,
    is_tournament, strongly_connected_components, structural_flags, topological_order,
    StructuralFlags,
};
pub use vertex_set::VertexSet;
pub use transforms::{
    directed_cycle, doubling_labels, lex_product, orient_c4, tight_example,
    transitive_tournament, verify_isometric_labeling, C4Mapping, C4Role, HypercubeLabeling,
};
pub use reductions::{
    build_gadget, core_gadget, decode_cover, to_bipartite_dag, to_cobipartite, to_split,
    verify_equivalence, Apex, EquivalenceReport, Gadget, GadgetKind, GadgetMapping, GadgetRole,
    SetCoverInstance,
};
pub use cactus::{
    classify_cycles, coconvex_certificate, min_geodetic_set_cactus, min_hull_set_cactus,
    tree_solution, verify_certificates, CactusSolution, Certificate, CertificateKind, CutFlags,
    CycleClass, CycleInfo, CycleWitnesses,
};
