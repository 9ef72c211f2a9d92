use crate::graph::OrientedGraph;

/// Lexicographic product `d1 ∘ d2`. Vertex `(a, b)` gets index `a * n2 + b`.
///
/// `(a1, b1) -> (a2, b2)` is an arc when `a1 -> a2` in `d1`, or when `a1 = a2`
/// and `b1 -> b2` in `d2`.
pub fn lex_product(d1: &OrientedGraph, d2: &OrientedGraph) -> OrientedGraph {
    let n2 = d2.n();
    let mut arcs = Vec::with_capacity(d1.arc_count() * n2 * n2 + d1.n() * d2.arc_count());
    for &(a1, a2) in d1.arcs() {
        for b1 in 0..n2 {
            for b2 in 0..n2 {
                arcs.push((a1 * n2 + b1, a2 * n2 + b2));
            }
        }
    }
    for a in 0..d1.n() {
        for &(b1, b2) in d2.arcs() {
            arcs.push((a * n2 + b1, a * n2 + b2));
        }
    }
    OrientedGraph::new(d1.n() * n2, arcs).expect("the product of oriented graphs is oriented")
}
