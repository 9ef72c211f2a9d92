mod common;

use common::{brute_directed, floyd, geodesic_masks, hull_mask, mask_of, full, Goal};
use geodesic_hull::transforms::random::{random_oriented_graph, random_split, random_tournament};
use geodesic_hull::*;
use proptest::prelude::*;

fn oracle_hull_full(d: &OrientedGraph, s: &VertexSet) -> bool {
    let g = geodesic_masks(&floyd(d.n(), d.arcs(), false));
    hull_mask(&g, mask_of(s.iter())) == full(d.n())
}

fn check_ledger(cert: &BoundCertificate) {
    let ext = cert.ext_count;
    for step in &cert.trace {
        assert!(step.closure_after > step.closure_before);
        assert!(3 * (step.set_size - ext) <= 2 * (step.closure_after - ext), "{step:?}");
    }
}

#[test]
fn tight_examples_meet_the_bound() {
    for k in 1..=5 {
        let d = tight_example(k).unwrap();
        let greedy = greedy_hull_set(&d);
        let pairing = tournament_hull_set(&d).unwrap();
        assert_eq!(greedy.hull_set.len(), 2 * k);
        assert_eq!(pairing.hull_set.len(), 2 * k);
        assert_eq!(pairing.bound_value, 2 * k);
    }
}

#[test]
fn triangle_closure_examples() {
    let c3 = directed_cycle(3).unwrap();
    let pair = VertexSet::from_vertices(3, [0, 1]);
    assert!(c3_interval(&c3, &pair).unwrap().is_full());
    assert_eq!(c3_interval(&c3, &VertexSet::singleton(3, 0)).unwrap().len(), 1);
    let d = tight_example(5).unwrap();
    let copy = VertexSet::from_vertices(15, [3, 4]);
    assert_eq!(c3_closure(&d, &copy).unwrap().to_vec(), vec![3, 4, 5]);
    assert_eq!(
        c3_interval(&directed_cycle(4).unwrap(), &pair.clone()),
        Err(Error::NotATournament)
    );
}

#[test]
fn split_examples() {
    // clique 1->0->2->1 with 0->3->1; the sink 4 keeps the stable side maximal
    let d = OrientedGraph::new(5, [(1, 0), (0, 2), (2, 1), (0, 3), (3, 1), (2, 4)]).unwrap();
    let stable = VertexSet::from_vertices(5, [3, 4]);
    let clique = VertexSet::from_vertices(5, [0, 1, 2]);
    let cert = split_hull_set(&d, &stable, &clique).unwrap();
    assert_eq!(cert.hull_set.len(), 3);
    assert!(cert.hull_set.contains(4) && !cert.hull_set.contains(3));
    assert!(oracle_hull_full(&d, &cert.hull_set));

    let trans = OrientedGraph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4)]).unwrap();
    let cert = split_hull_set(
        &trans,
        &VertexSet::from_vertices(5, [3, 4]),
        &VertexSet::from_vertices(5, [0, 1, 2]),
    )
    .unwrap();
    assert_eq!(cert.hull_set.len(), cert.bound_value);
    assert!(cert.trace.is_empty());

    let not_maximal = split_hull_set(
        &trans,
        &VertexSet::singleton(5, 3),
        &VertexSet::from_vertices(5, [0, 1, 2, 4]),
    );
    assert!(matches!(not_maximal, Err(Error::BadPartition(_))));
    assert_eq!(
        split_hull_set(
            &OrientedGraph::new(3, [(0, 1), (1, 2)]).unwrap(),
            &VertexSet::from_vertices(3, [0, 2]),
            &VertexSet::singleton(3, 1),
        ),
        Err(Error::CliqueTooSmall)
    );
}

#[test]
fn tournament_construction_dominates_the_optimum() {
    for seed in 0..60 {
        let n = 3 + seed as usize % 8;
        let d = random_tournament(n, seed);
        let cert = tournament_hull_set(&d).unwrap();
        let (opt, _) = brute_directed(n, d.arcs(), Goal::Hull);
        assert!(opt <= cert.hull_set.len());
        assert!(cert.hull_set.len() <= cert.bound_value);
        assert!(oracle_hull_full(&d, &cert.hull_set));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn greedy_is_a_verified_bounded_hull_set(n in 1usize..30, p in 0.05f64..0.8, seed in any::<u64>()) {
        let d = random_oriented_graph(n, p, seed).unwrap();
        let cert = greedy_hull_set(&d);
        let ext = extreme_set(&d);
        prop_assert!(ext.is_subset(&cert.hull_set));
        prop_assert_eq!(cert.ext_count, ext.len());
        prop_assert!(cert.hull_set.len() <= cert.bound_value);
        prop_assert_eq!(cert.bound_value, ext.len() + 2 * (n - ext.len()) / 3);
        prop_assert!(hull(&d, &cert.hull_set).is_full());
        check_ledger(&cert);
    }

    #[test]
    fn pairing_adds_two_outside_the_closure(n in 1usize..16, seed in any::<u64>()) {
        let d = random_tournament(n, seed);
        let cert = tournament_hull_set(&d).unwrap();
        prop_assert!(cert.hull_set.len() <= cert.bound_value);
        prop_assert!(hull(&d, &cert.hull_set).is_full());
        for step in &cert.trace {
            let gain = step.closure_after - step.closure_before;
            match step.added.len() {
                2 => prop_assert!(gain >= 3),
                1 => prop_assert!(gain >= 2 && step.added[0] == step.target),
                _ => prop_assert!(false, "step adds {:?}", step.added),
            }
        }
        let inner = cert.hull_set.difference(&extreme_set(&d));
        let closure = c3_closure(&d, &inner).unwrap();
        prop_assert!(closure.is_subset(&hull(&d, &inner)));
    }

    #[test]
    fn split_construction_is_bounded(ns in 1usize..6, nc in 2usize..8, p in 0.1f64..0.9, seed in any::<u64>()) {
        let (d, stable, clique) = random_split(ns, nc, p, seed).unwrap();
        let cert = split_hull_set(&d, &stable, &clique).unwrap();
        prop_assert!(cert.hull_set.len() <= cert.bound_value);
        prop_assert!(oracle_hull_full(&d, &cert.hull_set));
        prop_assert!(extreme_set(&d).intersection(&stable).is_subset(&cert.hull_set));
    }
}
