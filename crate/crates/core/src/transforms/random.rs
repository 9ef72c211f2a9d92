//! Seeded random instances. Every generator is a pure function of its
//! parameters and the seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};
use crate::vertex_set::VertexSet;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::BadParameter(format!("probability {p} is outside [0, 1]")))
    }
}

fn orient(r: &mut ChaCha8Rng, (u, v): (usize, usize)) -> (usize, usize) {
    if r.gen_bool(0.5) {
        (u, v)
    } else {
        (v, u)
    }
}

/// Each edge of `g` gets an independent uniformly random direction.
pub fn random_orientation(g: &UndirectedGraph, seed: u64) -> OrientedGraph {
    let mut r = rng(seed);
    let arcs: Vec<_> = g.edges().iter().map(|&e| orient(&mut r, e)).collect();
    OrientedGraph::new(g.n(), arcs).expect("one direction per simple edge")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<UndirectedGraph> {
    check_probability(p)?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    UndirectedGraph::new(n, edges)
}

/// A random orientation of `G(n, p)`.
pub fn random_oriented_graph(n: usize, p: f64, seed: u64) -> Result<OrientedGraph> {
    let g = random_graph(n, p, seed)?;
    Ok(random_orientation(&g, seed.wrapping_add(0x9e37_79b9_7f4a_7c15)))
}

pub fn random_tournament(n: usize, seed: u64) -> OrientedGraph {
    let mut r = rng(seed);
    let mut arcs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(orient(&mut r, (u, v)));
        }
    }
    OrientedGraph::new(n, arcs).expect("one arc per pair")
}

/// A connected oriented cactus on `n` vertices.
///
/// Blocks are attached one at a time to a uniformly chosen existing vertex,
/// so every new block shares exactly one vertex with the graph built so far.
/// A block is a cycle of length 3 to 6 (when enough vertices remain) or a
/// single edge. Half of the cycles are oriented cyclically in a random
/// direction; the rest, and all bridges, get independent random directions.
pub fn random_cactus(n: usize, seed: u64) -> Result<OrientedGraph> {
    if n == 0 {
        return Err(Error::BadParameter("a cactus needs at least one vertex".into()));
    }
    let mut r = rng(seed);
    let mut arcs = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = r.gen_range(0..count);
        let remaining = n - count;
        if remaining >= 2 && r.gen_bool(0.6) {
            let len = r.gen_range(3..=(remaining + 1).min(6));
            let mut cycle = vec![anchor];
            cycle.extend(count..count + len - 1);
            count += len - 1;
            let directed = r.gen_bool(0.5);
            let forward = r.gen_bool(0.5);
            for i in 0..len {
                let e = (cycle[i], cycle[(i + 1) % len]);
                arcs.push(match (directed, forward) {
                    (true, true) => e,
                    (true, false) => (e.1, e.0),
                    (false, _) => orient(&mut r, e),
                });
            }
        } else {
            arcs.push(orient(&mut r, (anchor, count)));
            count += 1;
        }
    }
    OrientedGraph::new(n, arcs)
}

/// Random orientation of a random bipartite graph with sides `0..n1` and
/// `n1..n1+n2`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<OrientedGraph> {
    check_probability(p)?;
    let mut r = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if r.gen_bool(p) {
                arcs.push(orient(&mut r, (u, v)));
            }
        }
    }
    OrientedGraph::new(n1 + n2, arcs)
}

/// A random oriented split graph with clique `0..nc` and stable side
/// `nc..nc+ns`, returned as `(graph, stable, clique)`.
///
/// Each stable/clique pair is joined with probability `p`; a clique vertex
/// left without a stable neighbour is then joined to a random stable vertex,
/// which makes the stable side maximal.
pub fn random_split(
    ns: usize,
    nc: usize,
    p: f64,
    seed: u64,
) -> Result<(OrientedGraph, VertexSet, VertexSet)> {
    check_probability(p)?;
    if ns == 0 && nc > 0 {
        return Err(Error::BadParameter(
            "an empty stable side cannot be maximal next to a nonempty clique".into(),
        ));
    }
    let n = ns + nc;
    let mut r = rng(seed);
    let mut arcs = Vec::new();
    for u in 0..nc {
        for v in u + 1..nc {
            arcs.push(orient(&mut r, (u, v)));
        }
    }
    for c in 0..nc {
        let mut neighbours: Vec<usize> = (nc..n).filter(|_| r.gen_bool(p)).collect();
        if neighbours.is_empty() {
            neighbours.push(r.gen_range(nc..n));
        }
        for s in neighbours {
            arcs.push(orient(&mut r, (c, s)));
        }
    }
    let d = OrientedGraph::new(n, arcs)?;
    Ok((d, VertexSet::from_vertices(n, nc..n), VertexSet::from_vertices(n, 0..nc)))
}

/// A uniformly random labelled tree shape (random parent attachment under a
/// random relabelling), randomly oriented.
pub fn random_oriented_tree(n: usize, seed: u64) -> Result<OrientedGraph> {
    if n == 0 {
        return Err(Error::BadParameter("a tree needs at least one vertex".into()));
    }
    let mut r = rng(seed);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut r);
    let mut arcs = Vec::with_capacity(n - 1);
    for v in 1..n {
        let parent = r.gen_range(0..v);
        arcs.push(orient(&mut r, (label[parent], label[v])));
    }
    OrientedGraph::new(n, arcs)
}
