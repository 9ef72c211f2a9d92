//! Exact minimum hull and geodetic sets by exhaustive search.
//!
//! Extreme vertices (simplicial vertices in the undirected case) belong to
//! every hull set, so the search only ranges over the remaining "free"
//! vertices. Candidates are tried by increasing number of extra vertices and,
//! within one size, in lexicographic order, so the reported witness is the
//! lexicographically first optimum.

use itertools::Itertools;

use crate::convexity::{extreme_set, simplicial_vertices};
use crate::distance::GeodesicIndex;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    /// `hull(S) = V`.
    Hull,
    /// `interval(S) = V`.
    Geodetic,
}

impl Objective {
    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Hull => "hull",
            Objective::Geodetic => "geodetic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest number of non-forced vertices the search will accept.
    pub max_free: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_free: 24 }
    }
}

impl SolverConfig {
    pub fn unbounded() -> Self {
        SolverConfig {
            max_free: usize::MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: VertexSet,
    /// Candidate sets evaluated before the witness was accepted (inclusive).
    pub nodes_explored: u64,
}

fn satisfies(index: &GeodesicIndex, objective: Objective, s: &VertexSet) -> bool {
    match objective {
        Objective::Hull => index.hull(s).is_full(),
        Objective::Geodetic => index.interval(s).is_full(),
    }
}

fn search(
    index: &GeodesicIndex,
    forced: &VertexSet,
    objective: Objective,
    config: &SolverConfig,
) -> Result<SolveResult> {
    let free: Vec<usize> = forced.complement().to_vec();
    if free.len() > config.max_free {
        return Err(Error::InstanceTooLarge {
            free: free.len(),
            limit: config.max_free,
        });
    }
    let mut explored = 0u64;
    for extra in 0..=free.len() {
        for combo in free.iter().copied().combinations(extra) {
            explored += 1;
            let mut candidate = forced.clone();
            for v in combo {
                candidate.insert(v);
            }
            if satisfies(index, objective, &candidate) {
                return Ok(SolveResult {
                    optimum: candidate.len(),
                    witness: candidate,
                    nodes_explored: explored,
                });
            }
        }
    }
    unreachable!("the full vertex set is always a hull and geodetic set")
}

pub fn min_hull_set(d: &OrientedGraph) -> Result<SolveResult> {
    min_hull_set_with(d, &SolverConfig::default())
}

pub fn min_hull_set_with(d: &OrientedGraph, config: &SolverConfig) -> Result<SolveResult> {
    solve(d, Objective::Hull, config)
}

pub fn min_geodetic_set(d: &OrientedGraph) -> Result<SolveResult> {
    min_geodetic_set_with(d, &SolverConfig::default())
}

pub fn min_geodetic_set_with(d: &OrientedGraph, config: &SolverConfig) -> Result<SolveResult> {
    solve(d, Objective::Geodetic, config)
}

pub fn solve(d: &OrientedGraph, objective: Objective, config: &SolverConfig) -> Result<SolveResult> {
    let index = GeodesicIndex::new(d);
    search(&index, &extreme_set(d), objective, config)
}

/// Every minimum-cardinality solution, in lexicographic order.
pub fn all_minimum_sets(
    d: &OrientedGraph,
    objective: Objective,
    config: &SolverConfig,
) -> Result<Vec<VertexSet>> {
    let index = GeodesicIndex::new(d);
    let forced = extreme_set(d);
    let best = search(&index, &forced, objective, config)?;
    let extra = best.optimum - forced.len();
    let free = forced.complement().to_vec();
    Ok(free
        .into_iter()
        .combinations(extra)
        .map(|combo| {
            let mut s = forced.clone();
            for v in combo {
                s.insert(v);
            }
            s
        })
        .filter(|s| satisfies(&index, objective, s))
        .collect())
}

/// Minimum hull set of a connected undirected graph, with simplicial
/// vertices forced.
pub fn undirected_min_hull_set(g: &UndirectedGraph) -> Result<SolveResult> {
    undirected_min_hull_set_with(g, &SolverConfig::default())
}

pub fn undirected_min_hull_set_with(
    g: &UndirectedGraph,
    config: &SolverConfig,
) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let index = GeodesicIndex::undirected(g);
    search(&index, &simplicial_vertices(g), Objective::Hull, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> OrientedGraph {
        OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn directed_triangle_needs_two() {
        let hull = min_hull_set(&c3()).unwrap();
        assert_eq!(hull.optimum, 2);
        assert_eq!(hull.witness.to_vec(), vec![0, 1]);
        assert_eq!(min_geodetic_set(&c3()).unwrap().optimum, 2);
    }

    #[test]
    fn transitive_tournament_is_all_forced() {
        let k4 =
            OrientedGraph::new(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        let r = min_hull_set(&k4).unwrap();
        assert_eq!(r.optimum, 4);
        assert_eq!(r.nodes_explored, 1);
    }

    #[test]
    fn in_star_leaves() {
        let k = 4;
        let star = OrientedGraph::new(k + 1, (1..=k).map(|leaf| (leaf, 0))).unwrap();
        let r = min_geodetic_set(&star).unwrap();
        // the centre is a sink, hence extreme as well
        assert_eq!(r.optimum, k + 1);
        let out_in = OrientedGraph::new(k + 2, (1..=k).map(|l| (l, 0)).chain([(0, k + 1)])).unwrap();
        let r = min_geodetic_set(&out_in).unwrap();
        assert_eq!(r.optimum, k + 1);
        assert!(!r.witness.contains(0));
    }

    #[test]
    fn undirected_examples() {
        let c3 = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(undirected_min_hull_set(&c3).unwrap().optimum, 3);
        let p3 = UndirectedGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(undirected_min_hull_set(&p3).unwrap().optimum, 2);
        let c4 = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(undirected_min_hull_set(&c4).unwrap().optimum, 2);
        let split = UndirectedGraph::new(3, [(0, 1)]).unwrap();
        assert_eq!(undirected_min_hull_set(&split), Err(Error::Disconnected));
    }

    #[test]
    fn guard_rejects_large_instances() {
        let c = OrientedGraph::new(30, (0..30).map(|i| (i, (i + 1) % 30))).unwrap();
        assert_eq!(
            min_hull_set(&c),
            Err(Error::InstanceTooLarge {
                free: 30,
                limit: 24
            })
        );
        assert_eq!(
            min_hull_set_with(&c, &SolverConfig { max_free: 30 })
                .unwrap()
                .optimum,
            2
        );
    }

    #[test]
    fn all_minimum_sets_of_triangle() {
        let sets = all_minimum_sets(&c3(), Objective::Hull, &SolverConfig::default()).unwrap();
        assert_eq!(sets.len(), 3);
    }
}
