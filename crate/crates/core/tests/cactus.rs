mod common;

use common::{brute_directed, brute_extremes, floyd, geodesic_masks, interval_mask, mask_of, Goal};
use geodesic_hull::transforms::random::{random_cactus, random_oriented_tree};
use geodesic_hull::{
    classify_cycles, extreme_set, is_coconvex, min_geodetic_set_cactus, min_hull_set_cactus,
    tree_solution, verify_certificates, CactusSolution, CertificateKind, CycleClass,
    OrientedGraph, VertexSet,
};
use proptest::prelude::*;

fn mask(s: &VertexSet) -> u64 {
    mask_of(s.iter())
}

/// Structural checks that need no oracle.
fn check_solution(d: &OrientedGraph, sol: &CactusSolution) {
    let ext = extreme_set(d);
    assert!(ext.is_subset(&sol.set));
    assert!(verify_certificates(d, sol));
    assert_eq!(sol.lower_bound(), sol.set.len());
    assert_eq!(sol.chosen.len(), sol.certificates.len());
    for (cert, &v) in sol.certificates.iter().zip(&sol.chosen) {
        assert!(cert.region.contains(v));
        if cert.kind == CertificateKind::CoConvex {
            assert!(is_coconvex(d, &cert.set));
        }
    }
}

#[test]
fn random_cacti_match_brute_force() {
    for seed in 0..200u64 {
        let n = 4 + (seed % 11) as usize;
        let d = random_cactus(n, seed).unwrap();
        let (hull_opt, _) = brute_directed(n, d.arcs(), Goal::Hull);
        let (geo_opt, geo_sets) = brute_directed(n, d.arcs(), Goal::Geodetic);
        let hull = min_hull_set_cactus(&d).unwrap();
        let geo = min_geodetic_set_cactus(&d).unwrap();
        assert_eq!(hull.set.len(), hull_opt, "hull size, seed {seed}");
        assert_eq!(geo.set.len(), geo_opt, "geodetic size, seed {seed}");
        assert!(geo_sets.contains(&mask(&geo.set)), "geodetic witness, seed {seed}");
        check_solution(&d, &hull);
        check_solution(&d, &geo);
        // two rounds of the interval already reach everything
        let g = geodesic_masks(&floyd(n, d.arcs(), false));
        let once = interval_mask(&g, mask(&hull.set));
        assert_eq!(interval_mask(&g, once), common::full(n), "seed {seed}");
    }
}

#[test]
fn unsatisfactory_cycles_each_get_one_vertex() {
    for seed in 0..150u64 {
        let d = random_cactus(4 + (seed % 11) as usize, seed).unwrap();
        let hull = min_hull_set_cactus(&d).unwrap();
        if hull.degenerate {
            continue;
        }
        for (i, c) in hull.cycles.iter().enumerate() {
            let owned = hull.certificates.iter().filter(|cert| cert.cycles == [i]).count();
            assert_eq!(owned, usize::from(c.class.is_unsatisfactory()), "seed {seed} cycle {i}");
        }
    }
}

#[test]
fn closed_cluster_of_cycles_needs_a_vertex() {
    // 0->4->3->2->1->0 and 1->7->6->5->1 share 1; arcs only enter the pair
    let arcs = [
        (1, 0), (2, 1), (3, 2), (4, 3), (0, 4), (5, 1), (6, 5), (7, 6), (1, 7), (8, 5), (9, 8),
        (9, 5), (10, 0),
    ];
    let d = OrientedGraph::new(11, arcs).unwrap();
    let classes: Vec<CycleClass> = classify_cycles(&d).unwrap().iter().map(|c| c.class).collect();
    assert!(classes.iter().all(|c| !c.is_unsatisfactory()));
    let hull = min_hull_set_cactus(&d).unwrap();
    assert_eq!(hull.set.len(), brute_directed(11, &arcs, Goal::Hull).0);
    assert_eq!(hull.set.len(), 4);
    assert_eq!(hull.clusters, vec![vec![0, 1, 2, 3, 4, 5, 6, 7]]);
    assert_eq!(hull.certificates[0].set.to_vec(), (0..8).collect::<Vec<_>>());
    check_solution(&d, &hull);
}

#[test]
fn transmitter_into_a_dead_end_carries_no_geodesic() {
    // 1 -> 4 leads into 1->4->5->6->1, which only returns to 1
    let arcs = [
        (0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 6), (6, 1), (7, 4), (8, 7), (8, 9),
        (9, 4), (10, 2), (10, 11), (2, 11), (12, 7),
    ];
    let d = OrientedGraph::new(13, arcs).unwrap();
    let cycles = classify_cycles(&d).unwrap();
    assert!(cycles.iter().all(|c| c.class == CycleClass::Tsc));
    let geo = min_geodetic_set_cactus(&d).unwrap();
    assert_eq!(geo.set.len(), extreme_set(&d).len() + 1);
    assert_eq!(geo.set.len(), brute_directed(13, &arcs, Goal::Geodetic).0);
    assert_eq!(geo.certificates[0].kind, CertificateKind::Uncovered);
    assert_eq!(geo.certificates[0].set.to_vec(), vec![0, 3]);
    check_solution(&d, &geo);
}

#[test]
fn random_trees_use_their_extremes() {
    for seed in 0..60u64 {
        let n = 2 + (seed % 11) as usize;
        let d = random_oriented_tree(n, seed).unwrap();
        let sol = tree_solution(&d).unwrap();
        assert_eq!(mask(&sol.set), brute_extremes(n, d.arcs()));
        let (opt, sets) = brute_directed(n, d.arcs(), Goal::Hull);
        assert_eq!(opt, sol.set.len());
        assert_eq!(sets, vec![mask(&sol.set)]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solutions_are_certified(seed in any::<u64>(), n in 3usize..22) {
        let d = random_cactus(n, seed).unwrap();
        let hull = min_hull_set_cactus(&d).unwrap();
        let geo = min_geodetic_set_cactus(&d).unwrap();
        check_solution(&d, &hull);
        check_solution(&d, &geo);
        prop_assert!(hull.set.len() <= geo.set.len());
        prop_assert!(hull.degenerate == geo.degenerate);
    }
}
