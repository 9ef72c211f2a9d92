use crate::graph::{OrientedGraph, UndirectedGraph};

/// What a vertex of `G_C4` stands for in the original graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum C4Role {
    Base(usize),
    /// `Subdivision(i, j)` is the vertex on the arc path from `i` to `j`.
    Subdivision(usize, usize),
}

/// Index bookkeeping between `G` and `G_C4`.
///
/// Base vertices keep their indices. The `e`-th edge `{i, j}` (with `i < j`,
/// in sorted edge order) contributes `v_{i,j} = n + 2e` and
/// `v_{j,i} = n + 2e + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C4Mapping {
    base_n: usize,
    edges: Vec<(usize, usize)>,
}

impl C4Mapping {
    pub fn base_count(&self) -> usize {
        self.base_n
    }

    pub fn total_count(&self) -> usize {
        self.base_n + 2 * self.edges.len()
    }

    pub fn base_vertex(&self, v: usize) -> usize {
        assert!(v < self.base_n, "vertex {v} is not a base vertex");
        v
    }

    /// Index of `v_{i,j}`, if `{i, j}` is an edge of `G`.
    pub fn subdivision(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        let e = self.edges.binary_search(&key).ok()?;
        Some(self.base_n + 2 * e + usize::from(i > j))
    }

    pub fn role(&self, x: usize) -> C4Role {
        if x < self.base_n {
            return C4Role::Base(x);
        }
        let offset = x - self.base_n;
        let (i, j) = self.edges[offset / 2];
        if offset.is_multiple_of(2) {
            C4Role::Subdivision(i, j)
        } else {
            C4Role::Subdivision(j, i)
        }
    }
}

/// Replace every edge `{i, j}` of `g` by the directed 4-cycle
/// `v_i -> v_{i,j} -> v_j -> v_{j,i} -> v_i`.
pub fn orient_c4(g: &UndirectedGraph) -> (OrientedGraph, C4Mapping) {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let mut arcs = Vec::with_capacity(4 * edges.len());
    for (e, &(i, j)) in edges.iter().enumerate() {
        let vij = g.n() + 2 * e;
        let vji = vij + 1;
        arcs.extend([(i, vij), (vij, j), (j, vji), (vji, i)]);
    }
    let mapping = C4Mapping {
        base_n: g.n(),
        edges,
    };
    let d = OrientedGraph::new(mapping.total_count(), arcs)
        .expect("subdivision vertices are fresh, so the arcs are valid");
    (d, mapping)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_becomes_directed_square() {
        let k2 = UndirectedGraph::new(2, [(0, 1)]).unwrap();
        let (d, m) = orient_c4(&k2);
        assert_eq!(d.n(), 4);
        assert_eq!(d.arcs(), &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(m.subdivision(0, 1), Some(2));
        assert_eq!(m.subdivision(1, 0), Some(3));
        assert_eq!(m.role(3), C4Role::Subdivision(1, 0));
        assert_eq!(m.subdivision(0, 0), None);
    }

    #[test]
    fn triangle_has_nine_vertices() {
        let c3 = UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (d, m) = orient_c4(&c3);
        assert_eq!(d.n(), 9);
        assert_eq!(d.arc_count(), 12);
        // sorted edges: {0,1}, {0,2}, {1,2}
        assert_eq!(m.subdivision(2, 1), Some(8));
        assert_eq!(m.subdivision(0, 2), Some(5));
    }
}
