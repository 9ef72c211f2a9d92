//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's distance, interval or solver code.

#![allow(dead_code)]

use itertools::Itertools;

pub const INF: u32 = u32::MAX;

/// Floyd-Warshall over the given arcs; `symmetric` treats them as edges.
pub fn floyd(n: usize, arcs: &[(usize, usize)], symmetric: bool) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in arcs {
        d[u][v] = 1;
        if symmetric {
            d[v][u] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Geodesic vertex sets as bitmasks, `g[u][v]`.
pub fn geodesic_masks(dist: &[Vec<u32>]) -> Vec<Vec<u64>> {
    let n = dist.len();
    let mut g = vec![vec![0u64; n]; n];
    for u in 0..n {
        for v in 0..n {
            if dist[u][v] == INF {
                continue;
            }
            for x in 0..n {
                if dist[u][x] != INF
                    && dist[x][v] != INF
                    && dist[u][x] + dist[x][v] == dist[u][v]
                {
                    g[u][v] |= 1 << x;
                }
            }
        }
    }
    g
}

/// All vertices on a shortest path found by enumerating every simple path
/// from `u` to `v`. Exponential; only for tiny graphs.
pub fn geodesic_by_paths(n: usize, arcs: &[(usize, usize)], u: usize, v: usize) -> u64 {
    fn dfs(
        adj: &[Vec<usize>],
        cur: usize,
        target: usize,
        path: &mut Vec<usize>,
        best: &mut (usize, u64),
    ) {
        if cur == target {
            let len = path.len();
            let mask = path.iter().fold(0u64, |m, &x| m | 1 << x);
            if len < best.0 {
                *best = (len, mask);
            } else if len == best.0 {
                best.1 |= mask;
            }
            return;
        }
        for &w in &adj[cur] {
            if !path.contains(&w) {
                path.push(w);
                dfs(adj, w, target, path, best);
                path.pop();
            }
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in arcs {
        adj[a].push(b);
    }
    let mut best = (usize::MAX, 0u64);
    dfs(&adj, u, v, &mut vec![u], &mut best);
    best.1
}

pub fn interval_mask(g: &[Vec<u64>], s: u64) -> u64 {
    let members: Vec<usize> = (0..g.len()).filter(|&v| s >> v & 1 == 1).collect();
    if members.len() < 2 {
        return s;
    }
    let mut out = s;
    for &u in &members {
        for &v in &members {
            out |= g[u][v];
        }
    }
    out
}

pub fn hull_mask(g: &[Vec<u64>], s: u64) -> u64 {
    let mut cur = s;
    loop {
        let next = interval_mask(g, cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Goal {
    Hull,
    Geodetic,
}

/// Every minimum-size set meeting the goal, by plain enumeration of subsets
/// in increasing size. No vertex is assumed forced.
pub fn brute_minimum(g: &[Vec<u64>], goal: Goal) -> (usize, Vec<u64>) {
    let n = g.len();
    let target = full(n);
    for k in 0..=n {
        let found: Vec<u64> = (0..n)
            .combinations(k)
            .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
            .filter(|&s| {
                let cover = match goal {
                    Goal::Hull => hull_mask(g, s),
                    Goal::Geodetic => interval_mask(g, s),
                };
                cover == target
            })
            .collect();
        if !found.is_empty() {
            return (k, found);
        }
    }
    unreachable!()
}

pub fn brute_directed(n: usize, arcs: &[(usize, usize)], goal: Goal) -> (usize, Vec<u64>) {
    brute_minimum(&geodesic_masks(&floyd(n, arcs, false)), goal)
}

pub fn brute_undirected_hull(n: usize, edges: &[(usize, usize)]) -> usize {
    brute_minimum(&geodesic_masks(&floyd(n, edges, true)), Goal::Hull).0
}

/// Extreme vertices straight from the definition.
pub fn brute_extremes(n: usize, arcs: &[(usize, usize)]) -> u64 {
    let has = |a: usize, b: usize| arcs.contains(&(a, b));
    (0..n)
        .filter(|&v| {
            let ins: Vec<usize> = (0..n).filter(|&a| has(a, v)).collect();
            let outs: Vec<usize> = (0..n).filter(|&b| has(v, b)).collect();
            ins.is_empty()
                || outs.is_empty()
                || ins.iter().all(|&a| outs.iter().all(|&b| has(a, b)))
        })
        .fold(0u64, |m, v| m | 1 << v)
}

/// Minimum number of sets covering `1..=n`, by enumeration.
pub fn brute_cover(n: usize, family: &[Vec<usize>]) -> usize {
    let want: u64 = (1..=n).fold(0, |m, e| m | 1 << e);
    let masks: Vec<u64> = family
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
        .collect();
    (0..=masks.len())
        .find(|&k| {
            (0..masks.len())
                .combinations(k)
                .any(|c| c.iter().fold(0u64, |m, &i| m | masks[i]) == want)
        })
        .unwrap()
}

pub fn mask_of(vertices: impl IntoIterator<Item = usize>) -> u64 {
    vertices.into_iter().fold(0u64, |m, v| m | 1 << v)
}
