//! All-pairs BFS distances and per-pair geodesic vertex sets.

use std::collections::VecDeque;

use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::vertex_set::VertexSet;

/// Directed distances `d(u,v)`; `None` means `v` is unreachable from `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u * self.n + v]
    }

    pub fn is_reachable(&self, u: usize, v: usize) -> bool {
        self.get(u, v).is_some()
    }

    /// Largest finite distance (0 for graphs with fewer than two vertices).
    pub fn max_finite(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of ordered pairs `(u,v)`, `u != v`, with no `u`-`v` path.
    pub fn unreachable_pairs(&self) -> usize {
        self.dist.iter().filter(|d| d.is_none()).count()
    }

    fn from_adjacency(adj: &[Vec<usize>]) -> Self {
        let n = adj.len();
        let mut dist = vec![None; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = Some(0);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u].unwrap();
                for &w in &adj[u] {
                    if row[w].is_none() {
                        row[w] = Some(du + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, dist }
    }
}

pub fn all_pairs_distances(d: &OrientedGraph) -> DistanceMatrix {
    DistanceMatrix::from_adjacency(d.out_lists())
}

pub fn undirected_distances(g: &UndirectedGraph) -> DistanceMatrix {
    DistanceMatrix::from_adjacency(g.adjacency())
}

/// Vertices lying on some `(u,v)`-geodesic, endpoints included; empty when
/// `v` is unreachable from `u`.
pub fn geodesic_vertices(
    d: &OrientedGraph,
    u: usize,
    v: usize,
    dist: &DistanceMatrix,
) -> VertexSet {
    let n = d.n();
    let mut set = VertexSet::empty(n);
    let Some(duv) = dist.get(u, v) else {
        return set;
    };
    for x in 0..n {
        if let (Some(a), Some(b)) = (dist.get(u, x), dist.get(x, v)) {
            if a + b == duv {
                set.insert(x);
            }
        }
    }
    set
}

/// Distances plus the geodesic vertex set of every ordered pair, computed
/// once so that interval evaluations reduce to bitset unions.
#[derive(Clone, Debug)]
pub struct GeodesicIndex {
    n: usize,
    dist: DistanceMatrix,
    geodesics: Vec<VertexSet>,
}

impl GeodesicIndex {
    pub fn new(d: &OrientedGraph) -> Self {
        Self::from_adjacency(d.out_lists())
    }

    /// The same index for an undirected graph, where every edge is usable in
    /// both directions.
    pub fn undirected(g: &UndirectedGraph) -> Self {
        Self::from_adjacency(g.adjacency())
    }

    fn from_adjacency(adj: &[Vec<usize>]) -> Self {
        let n = adj.len();
        let dist = DistanceMatrix::from_adjacency(adj);
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (u, outs) in adj.iter().enumerate() {
            for &w in outs {
                preds[w].push(u);
            }
        }
        let mut geodesics = vec![VertexSet::empty(n); n * n];
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for s in 0..n {
            // Visit reachable vertices by increasing distance from s; the
            // geodesic set of (s,v) is v plus the sets of its predecessors one
            // step closer to s.
            order.clear();
            order.extend((0..n).filter(|&v| dist.get(s, v).is_some()));
            order.sort_by_key(|&v| dist.get(s, v));
            for &v in &order {
                let dv = dist.get(s, v).unwrap();
                let mut set = VertexSet::singleton(n, v);
                if dv > 0 {
                    for &p in &preds[v] {
                        if dist.get(s, p) == Some(dv - 1) {
                            set.union_with(&geodesics[s * n + p]);
                        }
                    }
                }
                geodesics[s * n + v] = set;
            }
        }
        GeodesicIndex { n, dist, geodesics }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn geodesic(&self, u: usize, v: usize) -> &VertexSet {
        &self.geodesics[u * self.n + v]
    }

    /// `S` together with every vertex on a geodesic between two members.
    pub fn interval(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        if s.len() < 2 {
            return out;
        }
        let members = s.to_vec();
        for &u in &members {
            for &v in &members {
                if u != v {
                    out.union_with(self.geodesic(u, v));
                }
            }
        }
        out
    }

    /// Least convex superset of `S`: the interval function iterated to its
    /// fixpoint.
    pub fn hull(&self, s: &VertexSet) -> VertexSet {
        let mut current = s.clone();
        loop {
            let next = self.interval(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        self.interval(s) == *s
    }
}
