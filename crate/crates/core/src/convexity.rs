//! Interval function, convex hull and extreme-vertex classification.
//!
//! The free functions build a [`GeodesicIndex`] per call. Code that evaluates
//! many sets on the same graph should build the index once and use its
//! methods instead.

use crate::distance::GeodesicIndex;
use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremeKind {
    /// In-degree zero. Isolated vertices land here as well.
    Source,
    /// Out-degree zero, positive in-degree.
    Sink,
    /// Every in-neighbour has an arc to every out-neighbour.
    Transitive,
    NotExtreme,
}

impl ExtremeKind {
    pub fn is_extreme(self) -> bool {
        self != ExtremeKind::NotExtreme
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ExtremeKind::Source => "source",
            ExtremeKind::Sink => "sink",
            ExtremeKind::Transitive => "transitive",
            ExtremeKind::NotExtreme => "not-extreme",
        }
    }
}

pub fn extreme_kind(d: &OrientedGraph, v: usize) -> ExtremeKind {
    if d.in_degree(v) == 0 {
        ExtremeKind::Source
    } else if d.out_degree(v) == 0 {
        ExtremeKind::Sink
    } else if d
        .in_neighbors(v)
        .iter()
        .all(|&a| d.out_neighbors(v).iter().all(|&b| d.has_arc(a, b)))
    {
        ExtremeKind::Transitive
    } else {
        ExtremeKind::NotExtreme
    }
}

/// Classification of every vertex, indexed by vertex.
pub fn extreme_vertices(d: &OrientedGraph) -> Vec<ExtremeKind> {
    (0..d.n()).map(|v| extreme_kind(d, v)).collect()
}

/// `ext(D)` as a set.
pub fn extreme_set(d: &OrientedGraph) -> VertexSet {
    VertexSet::from_vertices(d.n(), (0..d.n()).filter(|&v| extreme_kind(d, v).is_extreme()))
}

pub fn interval(d: &OrientedGraph, s: &VertexSet) -> VertexSet {
    GeodesicIndex::new(d).interval(s)
}

pub fn hull(d: &OrientedGraph, s: &VertexSet) -> VertexSet {
    GeodesicIndex::new(d).hull(s)
}

pub fn is_convex(d: &OrientedGraph, s: &VertexSet) -> bool {
    GeodesicIndex::new(d).is_convex(s)
}

/// The complement of `s` is convex.
pub fn is_coconvex(d: &OrientedGraph, s: &VertexSet) -> bool {
    GeodesicIndex::new(d).is_convex(&s.complement())
}

pub fn is_hull_set(d: &OrientedGraph, s: &VertexSet) -> bool {
    hull(d, s).is_full()
}

pub fn is_geodetic_set(d: &OrientedGraph, s: &VertexSet) -> bool {
    interval(d, s).is_full()
}

pub fn undirected_interval(g: &UndirectedGraph, s: &VertexSet) -> VertexSet {
    GeodesicIndex::undirected(g).interval(s)
}

pub fn undirected_hull(g: &UndirectedGraph, s: &VertexSet) -> VertexSet {
    GeodesicIndex::undirected(g).hull(s)
}

/// Vertices whose neighbourhood is a clique.
pub fn simplicial_vertices(g: &UndirectedGraph) -> VertexSet {
    VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| {
            let nb = g.neighbors(v);
            nb.iter()
                .enumerate()
                .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        }),
    )
}
