//! Oriented and undirected graph types, plus the plain-text edge-list format.
//!
//! The text format is line 1 `n m`, followed by exactly `m` lines `u v` with
//! 0-based vertex indices. Blank lines and anything after the last edge are
//! rejected.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An orientation of a simple graph: no loops, no parallel arcs and never both
/// `(u,v)` and `(v,u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl OrientedGraph {
    /// Validates and builds an oriented graph. Arcs are kept in the given
    /// order; adjacency lists are sorted.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (u, v) in arcs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if seen.contains(&(v, u)) {
                return Err(Error::SymmetricArcPair(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateArc(u, v));
            }
            list.push((u, v));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for adj in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            adj.sort_unstable();
        }
        Ok(OrientedGraph {
            n,
            arcs: list,
            out_adj,
            in_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub(crate) fn out_lists(&self) -> &[Vec<usize>] {
        &self.out_adj
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The underlying simple graph.
    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.arcs.iter().copied())
            .expect("an oriented graph always has a simple underlying graph")
    }

    /// Subgraph induced by `keep`, renumbered in ascending order. Returns the
    /// graph and the original index of every new vertex.
    pub fn induced(&self, keep: &VertexSet) -> (OrientedGraph, Vec<usize>) {
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|&(u, v)| (index[u], index[v]));
        let graph = OrientedGraph::new(order.len(), arcs).expect("induced subgraph stays oriented");
        (graph, order)
    }

    /// Parses the `n m` / `u v` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, pairs) = parse_pairs(text)?;
        OrientedGraph::new(n, pairs)
    }

    pub fn to_text(&self) -> String {
        write_pairs(self.n, &self.arcs)
    }

    /// Graphviz description of the graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.arcs {
            let _ = writeln!(out, "  {u} -> {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    /// Edges are normalized to `(min, max)` and kept in input order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            list.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(UndirectedGraph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Parses the same `n m` / `u v` format as [`OrientedGraph::parse`],
    /// reading each line as an unordered edge.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, pairs) = parse_pairs(text)?;
        UndirectedGraph::new(n, pairs)
    }

    pub fn to_text(&self) -> String {
        write_pairs(self.n, &self.edges)
    }
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: 1,
            message: "header must be \"n m\"".into(),
        });
    }
    let n = parse_usize(fields[0], 1)?;
    let m = parse_usize(fields[1], 1)?;
    let mut pairs = Vec::with_capacity(m);
    for i in 0..m {
        let line_no = i + 2;
        let line = lines.next().ok_or(Error::Parse {
            line: line_no,
            message: format!("expected {m} arcs, found {i}"),
        })?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: "expected \"u v\"".into(),
            });
        }
        pairs.push((parse_usize(fields[0], line_no)?, parse_usize(fields[1], line_no)?));
    }
    // A single trailing newline is allowed; nothing else.
    for (offset, rest) in lines.enumerate() {
        if !rest.is_empty() {
            return Err(Error::Parse {
                line: m + 2 + offset,
                message: "trailing content after the last arc".into(),
            });
        }
        if offset > 0 {
            return Err(Error::Parse {
                line: m + 2 + offset,
                message: "trailing blank lines".into(),
            });
        }
    }
    Ok((n, pairs))
}

fn write_pairs(n: usize, pairs: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", n, pairs.len());
    for &(u, v) in pairs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
