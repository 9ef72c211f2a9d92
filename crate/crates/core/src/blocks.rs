//! Biconnected components (blocks) and cut vertices of an undirected graph.

use crate::graph::UndirectedGraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    /// Edges of the block as `(min, max)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_edge(&self) -> bool {
        self.vertices.len() == 2 && self.edges.len() == 1
    }

    /// A block on `k >= 3` vertices with exactly `k` edges is a chordless
    /// cycle (biconnected with minimum degree 2 and no spare edge).
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
    /// For every vertex, the indices of the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn is_cactus(&self) -> bool {
        self.blocks.iter().all(|b| b.is_edge() || b.is_cycle())
    }
}

/// Hopcroft-Tarjan lowpoint search with an explicit edge stack. Isolated
/// vertices belong to no block. Blocks are sorted by their vertex lists.
pub fn block_decomposition(g: &UndirectedGraph) -> BlockDecomposition {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();

    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        low[root] = 0;
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (u, parent, pos) = *top;
            let nbrs = g.neighbors(u);
            if pos < nbrs.len() {
                top.2 += 1;
                let w = nbrs[pos];
                if depth[w] == usize::MAX {
                    edge_stack.push((u, w));
                    depth[w] = depth[u] + 1;
                    low[w] = depth[w];
                    stack.push((w, u, 0));
                } else if w != parent && depth[w] < depth[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(depth[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= depth[parent] {
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, u) {
                                break;
                            }
                        }
                        blocks.push(make_block(edges));
                    }
                }
            }
        }
    }

    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            vertex_blocks[v].push(i);
        }
    }
    let cut_vertices =
        VertexSet::from_vertices(n, (0..n).filter(|&v| vertex_blocks[v].len() >= 2));
    BlockDecomposition {
        blocks,
        cut_vertices,
        vertex_blocks,
    }
}

fn make_block(mut edges: Vec<(usize, usize)>) -> Block {
    edges.sort_unstable();
    let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Block { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_pendant() {
        let g = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices.to_vec(), vec![2]);
        assert!(bd.is_cactus());
    }

    #[test]
    fn tree_blocks_are_edges() {
        let g = UndirectedGraph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 4);
        assert!(bd.blocks.iter().all(Block::is_edge));
        assert_eq!(bd.cut_vertices.to_vec(), vec![1, 3]);
    }

    #[test]
    fn single_cycle() {
        let g = UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.blocks[0].is_cycle());
        assert!(bd.cut_vertices.is_empty());
    }

    #[test]
    fn chord_breaks_cactus() {
        let g = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 1);
        assert!(!bd.is_cactus());
    }

    #[test]
    fn bowtie_shares_cut_vertex() {
        let g =
            UndirectedGraph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 2);
        assert_eq!(bd.cut_vertices.to_vec(), vec![2]);
        assert_eq!(bd.vertex_blocks[2], vec![0, 1]);
    }
}
