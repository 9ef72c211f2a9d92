//! Constructive upper bounds on the hull number.
//!
//! * [`greedy_hull_set`] works on any oriented graph and stays within
//!   `|ext| + floor(2(n - |ext|)/3)`.
//! * [`tournament_hull_set`] pairs up vertices through directed triangles and
//!   meets the same bound on tournaments.
//! * [`split_hull_set`] lifts the tournament construction to oriented split
//!   graphs through their clique.
//!
//! Every returned set is re-verified as a hull set before it is handed out.

use crate::convexity::{extreme_set, hull};
use crate::distance::GeodesicIndex;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::structure::{check_clique, check_stable, is_tournament};
use crate::vertex_set::VertexSet;

/// One growth step of a constructor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundStep {
    /// The uncovered vertex that triggered the step.
    pub target: usize,
    pub added: Vec<usize>,
    /// Size of the closure (hull, or triangle closure for tournaments) before
    /// and after the step.
    pub closure_before: usize,
    pub closure_after: usize,
    /// Size of the constructed set after the step.
    pub set_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub hull_set: VertexSet,
    pub ext_count: usize,
    /// The constructor's guaranteed upper bound on `|hull_set|`.
    pub bound_value: usize,
    pub trace: Vec<BoundStep>,
}

/// `|ext| + floor(2(n - |ext|)/3)`.
pub fn two_thirds_bound(n: usize, ext: usize) -> usize {
    ext + 2 * (n - ext) / 3
}

pub fn greedy_hull_set(d: &OrientedGraph) -> BoundCertificate {
    let n = d.n();
    let index = GeodesicIndex::new(d);
    let ext = extreme_set(d);
    let mut set = ext.clone();
    let mut closure = index.hull(&set);
    let mut trace = Vec::new();

    // hull(S) is convex, so no non-extreme v outside it can have both
    // witnesses inside it.
    while let Some(v) = closure.complement().first() {
        let both_outside = witness_pairs(d, v)
            .find(|&(a, b)| !closure.contains(a) && !closure.contains(b));
        let added: Vec<usize> = match both_outside {
            Some((a, b)) => vec![a, b],
            None => {
                let (a, b) = witness_pairs(d, v)
                    .find(|&(a, b)| closure.contains(a) != closure.contains(b))
                    .expect("a vertex outside the hull of ext(D) is non-extreme");
                vec![if closure.contains(a) { b } else { a }]
            }
        };
        for &x in &added {
            set.insert(x);
        }
        let before = closure.len();
        closure = index.hull(&set);
        debug_assert!(closure.contains(v));
        trace.push(BoundStep {
            target: v,
            added,
            closure_before: before,
            closure_after: closure.len(),
            set_size: set.len(),
        });
    }

    BoundCertificate {
        bound_value: two_thirds_bound(n, ext.len()),
        ext_count: ext.len(),
        hull_set: set,
        trace,
    }
}

/// Pairs `(a, b)` with `a -> v -> b` and no arc `a -> b`, lexicographically.
fn witness_pairs(d: &OrientedGraph, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    d.in_neighbors(v).iter().flat_map(move |&a| {
        d.out_neighbors(v)
            .iter()
            .filter(move |&&b| !d.has_arc(a, b))
            .map(move |&b| (a, b))
    })
}

/// True when `{a, b, c}` induces a directed triangle in a tournament.
fn directed_triangle(d: &OrientedGraph, a: usize, b: usize, c: usize) -> bool {
    (d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a))
        || (d.has_arc(a, c) && d.has_arc(c, b) && d.has_arc(b, a))
}

/// `S` plus every vertex forming a directed triangle with two members of `S`.
pub fn c3_interval(d: &OrientedGraph, s: &VertexSet) -> Result<VertexSet> {
    if !is_tournament(d) {
        return Err(Error::NotATournament);
    }
    Ok(c3_interval_unchecked(d, s))
}

fn c3_interval_unchecked(d: &OrientedGraph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    if s.len() < 2 {
        return out;
    }
    for v in s.complement().iter() {
        // v -> w -> u -> v with u, w in S
        let closes = d.out_neighbors(v).iter().any(|&w| {
            s.contains(w)
                && d.in_neighbors(v)
                    .iter()
                    .any(|&u| s.contains(u) && d.has_arc(w, u))
        });
        if closes {
            out.insert(v);
        }
    }
    out
}

/// Fixpoint of [`c3_interval`].
pub fn c3_closure(d: &OrientedGraph, s: &VertexSet) -> Result<VertexSet> {
    if !is_tournament(d) {
        return Err(Error::NotATournament);
    }
    Ok(c3_closure_unchecked(d, s))
}

fn c3_closure_unchecked(d: &OrientedGraph, s: &VertexSet) -> VertexSet {
    let mut current = s.clone();
    loop {
        let next = c3_interval_unchecked(d, &current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Triangle-pairing construction on a tournament: `ext(D)` plus at most
/// `floor(2(n - |ext|)/3)` non-extreme vertices whose triangle closure covers
/// every non-extreme vertex.
///
/// Each step adds the two other corners of a directed triangle through the
/// smallest uncovered vertex `v` when both lie outside the closure. When
/// every such triangle already has one corner inside, `v` is added by itself.
pub fn tournament_hull_set(d: &OrientedGraph) -> Result<BoundCertificate> {
    if !is_tournament(d) {
        return Err(Error::NotATournament);
    }
    let n = d.n();
    let ext = extreme_set(d);
    let inner = ext.complement();
    let mut chosen = VertexSet::empty(n);
    let mut trace = Vec::new();

    if !inner.is_empty() {
        let members = inner.to_vec();
        let seed = members
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| members[i + 1..].iter().map(move |&b| (a, b)))
            .find(|&(a, b)| members.iter().any(|&c| directed_triangle(d, a, b, c)))
            .ok_or_else(|| {
                Error::ConstructionFailed(
                    "non-extreme vertices exist but none lies on a directed triangle".into(),
                )
            })?;
        chosen.insert(seed.0);
        chosen.insert(seed.1);
        let mut closure = c3_closure_unchecked(d, &chosen);
        trace.push(BoundStep {
            target: seed.0,
            added: vec![seed.0, seed.1],
            closure_before: 0,
            closure_after: closure.len(),
            set_size: 2,
        });

        while let Some(v) = inner.difference(&closure).first() {
            // v -> a -> b -> v, ideally with a and b both outside the closure
            let triangles: Vec<(usize, usize)> = d
                .out_neighbors(v)
                .iter()
                .flat_map(|&a| {
                    d.out_neighbors(a)
                        .iter()
                        .filter(move |&&b| d.has_arc(b, v))
                        .map(move |&b| (a, b))
                })
                .collect();
            let added = match triangles
                .iter()
                .find(|&&(a, b)| !closure.contains(a) && !closure.contains(b))
            {
                Some(&(a, b)) => vec![a, b],
                // One corner is already closed, so v alone brings in the
                // third corner as well.
                None if triangles
                    .iter()
                    .any(|&(a, b)| closure.contains(a) != closure.contains(b)) =>
                {
                    vec![v]
                }
                None => {
                    return Err(Error::ConstructionFailed(format!(
                        "vertex {v} lies on no directed triangle leaving the closure"
                    )))
                }
            };
            for &x in &added {
                chosen.insert(x);
            }
            let before = closure.len();
            closure = c3_closure_unchecked(d, &chosen);
            trace.push(BoundStep {
                target: v,
                added,
                closure_before: before,
                closure_after: closure.len(),
                set_size: chosen.len(),
            });
        }
    }

    let hull_set = ext.union(&chosen);
    if !hull(d, &hull_set).is_full() {
        return Err(Error::ConstructionFailed(
            "triangle-pairing set is not a hull set".into(),
        ));
    }
    Ok(BoundCertificate {
        bound_value: two_thirds_bound(n, ext.len()),
        ext_count: ext.len(),
        hull_set,
        trace,
    })
}

/// Split-graph construction: extreme stable vertices, extreme vertices of the
/// clique tournament, and the triangle-pairing set of that tournament.
///
/// `bound_value` is `|ext(D) ∩ stable| + |ext(D[C])| + floor(2/3 |C ∖ ext(D[C])|)`.
pub fn split_hull_set(
    d: &OrientedGraph,
    stable: &VertexSet,
    clique: &VertexSet,
) -> Result<BoundCertificate> {
    let n = d.n();
    if stable.universe() != n || clique.universe() != n {
        return Err(Error::BadPartition("sides sized for another graph".into()));
    }
    if !stable.is_disjoint(clique) || !stable.union(clique).is_full() {
        return Err(Error::BadPartition("sides do not partition V".into()));
    }
    if !check_stable(d, stable) {
        return Err(Error::BadPartition("stable side contains an edge".into()));
    }
    if !check_clique(d, clique) {
        return Err(Error::BadPartition("clique side misses an edge".into()));
    }
    if let Some(c) = clique
        .iter()
        .find(|&c| stable.iter().all(|s| !d.adjacent(s, c)))
    {
        return Err(Error::StableNotMaximal(c));
    }
    if clique.len() < 2 {
        return Err(Error::CliqueTooSmall);
    }

    let ext = extreme_set(d);
    let (tour, back) = d.induced(clique);
    let inner = tournament_hull_set(&tour)?;
    let mut hull_set = ext.intersection(stable);
    for v in inner.hull_set.iter() {
        hull_set.insert(back[v]);
    }
    let trace = inner
        .trace
        .into_iter()
        .map(|step| BoundStep {
            target: back[step.target],
            added: step.added.into_iter().map(|v| back[v]).collect(),
            ..step
        })
        .collect();

    if !hull(d, &hull_set).is_full() {
        return Err(Error::ConstructionFailed(
            "split construction is not a hull set of D".into(),
        ));
    }
    let ext_c = inner.ext_count;
    let bound_value = ext.intersection(stable).len() + ext_c + 2 * (clique.len() - ext_c) / 3;
    Ok(BoundCertificate {
        hull_set,
        ext_count: ext.len(),
        bound_value,
        trace,
    })
}
