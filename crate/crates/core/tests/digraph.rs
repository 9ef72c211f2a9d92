use geodesic_hull::transforms::random::{random_cactus, random_graph};
use geodesic_hull::*;
use proptest::prelude::*;

/// Components of `g` with vertex `skip` deleted; `usize::MAX` marks `skip`.
fn components_without(g: &UndirectedGraph, skip: Option<usize>) -> Vec<usize> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if Some(s) == skip || comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(a, b) in g.edges() {
                for (p, q) in [(a, b), (b, a)] {
                    if p == x && Some(q) != skip && comp[q] == usize::MAX {
                        comp[q] = next;
                        stack.push(q);
                    }
                }
            }
        }
        next += 1;
    }
    comp
}

/// Edges `e` and `f` share a block iff no single vertex separates them.
fn same_block(g: &UndirectedGraph, e: (usize, usize), f: (usize, usize)) -> bool {
    (0..g.n()).all(|x| {
        let comp = components_without(g, Some(x));
        let side = |(a, b): (usize, usize)| if a == x { b } else { a };
        comp[side(e)] == comp[side(f)]
    })
}

#[test]
fn construction_errors() {
    assert_eq!(OrientedGraph::new(2, [(0, 1), (1, 0)]), Err(Error::SymmetricArcPair(1, 0)));
    assert_eq!(OrientedGraph::new(2, [(1, 1)]), Err(Error::Loop(1)));
    assert_eq!(OrientedGraph::new(2, [(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1)));
    assert_eq!(
        OrientedGraph::new(2, [(0, 2)]),
        Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
    );
    let c3 = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(c3.underlying(), UndirectedGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
}

#[test]
fn text_format() {
    let d = OrientedGraph::parse("3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(d.arcs(), &[(0, 1), (1, 2)]);
    assert_eq!(OrientedGraph::parse(&d.to_text()).unwrap(), d);
    for (text, line) in [("3\n", 1), ("3 2\n0 1\n", 3), ("3 1\n0 x\n", 2), ("3 1\n0 1\n2 0\n", 3)] {
        match OrientedGraph::parse(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?} gave {other:?}"),
        }
    }
    assert!(d.to_dot().contains("0 -> 1;"));
}

#[test]
fn named_decompositions() {
    let tri_tail = UndirectedGraph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let b = block_decomposition(&tri_tail);
    assert_eq!(b.blocks.len(), 2);
    assert_eq!(b.cut_vertices.to_vec(), vec![2]);
    let path = UndirectedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let b = block_decomposition(&path);
    assert!(b.blocks.iter().all(Block::is_edge));
    assert_eq!(b.cut_vertices.to_vec(), vec![1, 2]);
    let c5 = UndirectedGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    let b = block_decomposition(&c5);
    assert_eq!(b.blocks.len(), 1);
    assert!(b.cut_vertices.is_empty() && b.is_cactus());
    assert!(is_tournament(&tight_example(5).unwrap()));
    assert!(is_cactus(&directed_cycle(4).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blocks_match_separation_oracle(n in 1usize..10, p in 0.1f64..0.7, seed in any::<u64>()) {
        let g = random_graph(n, p, seed).unwrap();
        let dec = block_decomposition(&g);
        let mut owner = std::collections::HashMap::new();
        for (i, b) in dec.blocks.iter().enumerate() {
            for &e in &b.edges {
                prop_assert!(owner.insert(e, i).is_none(), "edge {:?} in two blocks", e);
            }
        }
        prop_assert_eq!(owner.len(), g.edge_count());
        for &e in g.edges() {
            for &f in g.edges() {
                prop_assert_eq!(owner[&e] == owner[&f], same_block(&g, e, f));
            }
        }
        let base = components_without(&g, None);
        let count = |c: &[usize]| c.iter().filter(|&&x| x != usize::MAX).collect::<std::collections::HashSet<_>>().len();
        for v in 0..n {
            let lonely = g.degree(v) == 0;
            let cut = !lonely && count(&components_without(&g, Some(v))) > count(&base);
            prop_assert_eq!(dec.cut_vertices.contains(v), cut);
            prop_assert_eq!(dec.vertex_blocks[v].len() >= 2, cut);
        }
    }

    #[test]
    fn adjacency_mirrors_arcs(n in 1usize..15, p in 0.0f64..1.0, seed in any::<u64>()) {
        let d = transforms::random::random_oriented_graph(n, p, seed).unwrap();
        let outs: usize = (0..n).map(|v| d.out_degree(v)).sum();
        let ins: usize = (0..n).map(|v| d.in_degree(v)).sum();
        prop_assert_eq!(outs, d.arc_count());
        prop_assert_eq!(ins, d.arc_count());
        for &(u, v) in d.arcs() {
            prop_assert!(d.out_neighbors(u).contains(&v) && d.in_neighbors(v).contains(&u));
            prop_assert!(!d.has_arc(v, u));
        }
        prop_assert!(is_dag(&d) == topological_order(&d).is_some());
    }

    #[test]
    fn cactus_blocks_are_cycles_or_edges(n in 1usize..30, seed in any::<u64>()) {
        let d = random_cactus(n, seed).unwrap();
        let dec = block_decomposition(&d.underlying());
        prop_assert!(dec.blocks.iter().all(|b| b.is_edge() || b.is_cycle()));
    }
}
