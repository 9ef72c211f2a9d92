use super::product::lex_product;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// Arcs `i -> j` for all `i < j`.
pub fn transitive_tournament(k: usize) -> Result<OrientedGraph> {
    if k == 0 {
        return Err(Error::BadParameter("a tournament needs at least one vertex".into()));
    }
    OrientedGraph::new(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
}

/// `0 -> 1 -> ... -> k-1 -> 0`.
pub fn directed_cycle(k: usize) -> Result<OrientedGraph> {
    if k < 3 {
        return Err(Error::BadParameter(format!(
            "a directed cycle needs at least 3 vertices, got {k}"
        )));
    }
    OrientedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// The transitive tournament on `k` vertices composed with a directed
/// triangle: a tournament on `3k` vertices without extreme vertices whose
/// hull number is `2k`.
pub fn tight_example(k: usize) -> Result<OrientedGraph> {
    Ok(lex_product(&transitive_tournament(k)?, &directed_cycle(3)?))
}
