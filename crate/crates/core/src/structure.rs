//! Class membership tests used as preconditions by the constructors and
//! reductions.

use crate::blocks::block_decomposition;
use crate::graph::OrientedGraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralFlags {
    pub is_tournament: bool,
    pub is_dag: bool,
    pub is_bipartite_underlying: bool,
    pub is_cactus: bool,
    pub is_connected: bool,
}

pub fn structural_flags(d: &OrientedGraph) -> StructuralFlags {
    let g = d.underlying();
    StructuralFlags {
        is_tournament: is_tournament(d),
        is_dag: is_dag(d),
        is_bipartite_underlying: g.is_bipartite(),
        is_cactus: is_cactus(d),
        is_connected: g.is_connected(),
    }
}

/// Every pair of distinct vertices is joined by exactly one arc.
pub fn is_tournament(d: &OrientedGraph) -> bool {
    let n = d.n();
    // Oriented graphs have no digons, so counting arcs suffices.
    d.arc_count() == n * n.saturating_sub(1) / 2
}

/// Kahn's algorithm; true when every vertex can be peeled off.
pub fn is_dag(d: &OrientedGraph) -> bool {
    topological_order(d).is_some()
}

pub fn topological_order(d: &OrientedGraph) -> Option<Vec<usize>> {
    let n = d.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = ready.pop() {
        order.push(u);
        for &w in d.out_neighbors(u) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Strongly connected components, each sorted, listed by smallest vertex.
pub fn strongly_connected_components(d: &OrientedGraph) -> Vec<Vec<usize>> {
    let n = d.n();
    // Kosaraju: finishing order on D, then sweeps on the reverse graph.
    let mut seen = vec![false; n];
    let mut finish = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, pos) = *top;
            if let Some(&w) = d.out_neighbors(u).get(pos) {
                top.1 += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish.push(u);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut components = Vec::new();
    for &root in finish.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        let id = components.len();
        comp[root] = id;
        let mut members = vec![root];
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &w in d.in_neighbors(u) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components.sort();
    components
}

pub fn is_bipartite_underlying(d: &OrientedGraph) -> bool {
    d.underlying().is_bipartite()
}

pub fn is_cactus(d: &OrientedGraph) -> bool {
    block_decomposition(&d.underlying()).is_cactus()
}

fn is_partition(n: usize, a: &VertexSet, b: &VertexSet) -> bool {
    a.universe() == n && b.universe() == n && a.is_disjoint(b) && a.union(b).is_full()
}

fn is_clique(d: &OrientedGraph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| d.adjacent(u, v)))
}

fn is_stable(d: &OrientedGraph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members
        .iter()
        .enumerate()
        .all(|(i, &u)| members[i + 1..].iter().all(|&v| !d.adjacent(u, v)))
}

/// The supplied sides partition `V` into a stable set and a clique.
pub fn is_split_underlying(d: &OrientedGraph, stable: &VertexSet, clique: &VertexSet) -> bool {
    is_partition(d.n(), stable, clique) && is_stable(d, stable) && is_clique(d, clique)
}

/// The supplied sides partition `V` into two cliques.
pub fn is_cobipartite_underlying(d: &OrientedGraph, first: &VertexSet, second: &VertexSet) -> bool {
    is_partition(d.n(), first, second) && is_clique(d, first) && is_clique(d, second)
}

pub(crate) fn check_clique(d: &OrientedGraph, s: &VertexSet) -> bool {
    is_clique(d, s)
}

pub(crate) fn check_stable(d: &OrientedGraph, s: &VertexSet) -> bool {
    is_stable(d, s)
}
