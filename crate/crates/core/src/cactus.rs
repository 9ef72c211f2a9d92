//! Minimum hull and geodetic sets of oriented cacti.
//!
//! Every cycle block is classified by how its cut vertices attach to the
//! rest of the graph. A minimum hull set consists of the extreme vertices,
//! one vertex of every unsatisfactory cycle (trap, directed leaf, or a
//! two-extreme cycle whose longer side has no cut vertex), and one vertex of
//! every trap cluster: a strongly connected union of directed cycles that
//! no arc enters or no arc leaves, and that contains no unsatisfactory cycle.
//! A minimum geodetic set adds one vertex for each cycle the interval still
//! misses, falsely satisfactory cycles first.
//!
//! Each forced vertex comes with a certificate: a region that every
//! solution must meet, disjoint from the other regions and from `ext(D)`.
//! The returned sets therefore match the lower bound, and both the sets and
//! the certificates are checked before they are returned. When the
//! preferred vertex of a certificate leaves something uncovered, the other
//! vertices of its region are tried.
//!
//! Terminology used below: a cut vertex of a cycle is a *transmitter* when
//! it has an arc leaving the cycle and a *receiver* when it has an arc
//! entering it; a vertex can be both.

use itertools::Itertools;

use crate::blocks::block_decomposition;
use crate::convexity::{extreme_set, extreme_vertices};
use crate::distance::{undirected_distances, GeodesicIndex};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::solver::{solve, Objective, SolverConfig};
use crate::structure::strongly_connected_components;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleClass {
    /// Directed cycle whose external arcs all point into it.
    TrapReceiver,
    /// Directed cycle whose external arcs all point out of it.
    TrapTransmitter,
    /// Directed leaf cycle that is not a trap.
    Uc2,
    /// Exactly one source and one sink, sides of different lengths, and no
    /// cut vertex inside the longer side.
    Uc3,
    /// Falsely satisfactory, two-extreme shape.
    Fsc1,
    /// Falsely satisfactory, directed shape.
    Fsc2,
    /// Truly satisfactory.
    Tsc,
}

impl CycleClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CycleClass::TrapReceiver => "trap-receiver",
            CycleClass::TrapTransmitter => "trap-transmitter",
            CycleClass::Uc2 => "uc2",
            CycleClass::Uc3 => "uc3",
            CycleClass::Fsc1 => "fsc1",
            CycleClass::Fsc2 => "fsc2",
            CycleClass::Tsc => "tsc",
        }
    }

    pub fn is_unsatisfactory(self) -> bool {
        matches!(
            self,
            CycleClass::TrapReceiver | CycleClass::TrapTransmitter | CycleClass::Uc2 | CycleClass::Uc3
        )
    }

    pub fn is_falsely_satisfactory(self) -> bool {
        matches!(self, CycleClass::Fsc1 | CycleClass::Fsc2)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CutFlags {
    pub is_cut: bool,
    pub transmitter: bool,
    pub receiver: bool,
}

/// Vertices singled out by the classification. Which fields are set depends
/// on the class.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleWitnesses {
    /// The unique source and sink of the cycle viewed on its own.
    pub source: Option<usize>,
    pub sink: Option<usize>,
    /// The longer source-to-sink side, endpoints included.
    pub long_path: Vec<usize>,
    /// Distinguished receiver and transmitter cut vertices.
    pub receiver: Option<usize>,
    pub transmitter: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleInfo {
    /// Index into the block decomposition of the underlying graph.
    pub block: usize,
    /// Cyclic order starting at the smallest vertex. Directed cycles follow
    /// their arcs; other cycles go towards the smaller neighbour first.
    pub vertices: Vec<usize>,
    pub is_directed: bool,
    /// Parallel to `vertices`.
    pub cut: Vec<CutFlags>,
    pub class: CycleClass,
    pub witnesses: CycleWitnesses,
}

impl CycleInfo {
    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn position(&self, v: usize) -> usize {
        self.vertices.iter().position(|&x| x == v).expect("vertex on cycle")
    }

    fn successor(&self, v: usize) -> usize {
        self.vertices[(self.position(v) + 1) % self.len()]
    }

    fn predecessor(&self, v: usize) -> usize {
        self.vertices[(self.position(v) + self.len() - 1) % self.len()]
    }

    fn flags(&self, v: usize) -> CutFlags {
        self.cut[self.position(v)]
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        let mut cuts: Vec<usize> = self
            .vertices
            .iter()
            .zip(&self.cut)
            .filter(|(_, f)| f.is_cut)
            .map(|(&v, _)| v)
            .collect();
        cuts.sort_unstable();
        cuts
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.vertices.iter().copied())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// A co-convex set: every hull set meets it.
    CoConvex,
    /// Vertices that no geodesic between two vertices outside the region
    /// passes through. Every geodetic set therefore meets the region.
    Uncovered,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Indices into the cycle list: one cycle, or every cycle of a trap
    /// cluster.
    pub cycles: Vec<usize>,
    pub kind: CertificateKind,
    pub set: VertexSet,
    /// Vertices one of which every solution must contain on account of this
    /// certificate. Regions of distinct certificates are disjoint and avoid
    /// `ext(D)`.
    pub region: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusSolution {
    pub kind: Objective,
    pub set: VertexSet,
    /// The vertex taken on account of each certificate, in the same order.
    pub chosen: Vec<usize>,
    pub cycles: Vec<CycleInfo>,
    /// Strongly connected clusters of directed cycles that no arc enters or
    /// no arc leaves.
    pub clusters: Vec<Vec<usize>>,
    pub certificates: Vec<Certificate>,
    pub ext_count: usize,
    /// The graph is a single directed cycle. The cycle analysis does not
    /// apply and the set comes from the exact solver.
    pub degenerate: bool,
}

impl CactusSolution {
    /// `|ext(D)|` plus one per certificate, or the exact optimum for
    /// degenerate inputs.
    pub fn lower_bound(&self) -> usize {
        if self.degenerate {
            self.set.len()
        } else {
            self.ext_count + self.certificates.len()
        }
    }
}

fn cycle_order(d: &OrientedGraph, vertices: &[usize], edges: &[(usize, usize)]) -> (Vec<usize>, bool) {
    let neighbours = |v: usize| -> Vec<usize> {
        let mut nb: Vec<usize> = edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        nb.sort_unstable();
        nb
    };
    let start = vertices[0];
    let is_directed = vertices.iter().all(|&v| {
        let nb = neighbours(v);
        nb.iter().filter(|&&w| d.has_arc(v, w)).count() == 1
    });
    let first_step = {
        let nb = neighbours(start);
        if is_directed {
            *nb.iter().find(|&&w| d.has_arc(start, w)).unwrap()
        } else {
            nb[0]
        }
    };
    let mut order = vec![start, first_step];
    while order.len() < vertices.len() {
        let cur = order[order.len() - 1];
        let prev = order[order.len() - 2];
        let next = neighbours(cur).into_iter().find(|&w| w != prev).unwrap();
        order.push(next);
    }
    (order, is_directed)
}

/// Vertices of `order` from `from` to `to`, stepping by `step` (`1` or
/// `len - 1`).
fn walk(order: &[usize], from: usize, to: usize, step: usize) -> Vec<usize> {
    let k = order.len();
    let mut i = order.iter().position(|&x| x == from).unwrap();
    let mut path = vec![from];
    while order[i] != to {
        i = (i + step) % k;
        path.push(order[i]);
    }
    path
}

fn classify(d: &OrientedGraph, block: usize, vertices: &[usize], edges: &[(usize, usize)]) -> CycleInfo {
    let (order, is_directed) = cycle_order(d, vertices, edges);
    let on_cycle = |w: usize| vertices.binary_search(&w).is_ok();
    let cut: Vec<CutFlags> = order
        .iter()
        .map(|&v| {
            let transmitter = d.out_neighbors(v).iter().any(|&w| !on_cycle(w));
            let receiver = d.in_neighbors(v).iter().any(|&w| !on_cycle(w));
            CutFlags {
                is_cut: transmitter || receiver,
                transmitter,
                receiver,
            }
        })
        .collect();
    let mut info = CycleInfo {
        block,
        vertices: order,
        is_directed,
        cut,
        class: CycleClass::Tsc,
        witnesses: CycleWitnesses::default(),
    };
    let cuts = info.cut_vertices();

    if is_directed {
        let all = |pred: fn(&CutFlags) -> bool| cuts.iter().all(|&c| pred(&info.flags(c)));
        if all(|f| f.receiver && !f.transmitter) {
            info.class = CycleClass::TrapReceiver;
            info.witnesses.receiver = cuts.first().copied();
            return info;
        }
        if all(|f| f.transmitter && !f.receiver) {
            info.class = CycleClass::TrapTransmitter;
            info.witnesses.transmitter = cuts.first().copied();
            return info;
        }
        if cuts.len() == 1 {
            info.class = CycleClass::Uc2;
            return info;
        }
        if let Some((r, t)) = fsc2_pair(&info) {
            info.class = CycleClass::Fsc2;
            info.witnesses.receiver = Some(r);
            info.witnesses.transmitter = Some(t);
        }
        return info;
    }

    // The cycle as a standalone orientation, with local indices.
    let local = |v: usize| vertices.binary_search(&v).unwrap();
    let standalone = OrientedGraph::new(
        vertices.len(),
        edges.iter().map(|&(a, b)| {
            if d.has_arc(a, b) {
                (local(a), local(b))
            } else {
                (local(b), local(a))
            }
        }),
    )
    .expect("a cycle block is an oriented graph");
    let kinds = extreme_vertices(&standalone);
    let ext_c: Vec<usize> = (0..vertices.len())
        .filter(|&i| kinds[i].is_extreme())
        .map(|i| vertices[i])
        .collect();
    if ext_c.len() != 2 {
        return info;
    }
    let (u1, u2) = if standalone.in_degree(local(ext_c[0])) == 0 {
        (ext_c[0], ext_c[1])
    } else {
        (ext_c[1], ext_c[0])
    };
    let k = info.len();
    let forward = walk(&info.vertices, u1, u2, 1);
    let backward = walk(&info.vertices, u1, u2, k - 1);
    if forward.len() == backward.len() {
        return info;
    }
    let long = if forward.len() > backward.len() { forward } else { backward };
    info.witnesses.source = Some(u1);
    info.witnesses.sink = Some(u2);
    let interior = &long[1..long.len() - 1];
    if interior.iter().all(|&v| !info.flags(v).is_cut) {
        info.class = CycleClass::Uc3;
        info.witnesses.long_path = long;
        return info;
    }
    let last = long.len() - 1;
    let receivers: Vec<usize> = (1..last).filter(|&i| info.flags(long[i]).receiver).collect();
    let transmitters: Vec<usize> = (1..last).filter(|&i| info.flags(long[i]).transmitter).collect();
    let first_r = receivers.first().copied();
    let last_t = transmitters.last().copied();
    let falsely = match (first_r, last_t) {
        (Some(r), None) => r >= 2,
        (None, Some(t)) => last - t >= 2,
        (Some(r), Some(t)) => r > t && r - t >= 2,
        (None, None) => false,
    };
    if falsely {
        info.class = CycleClass::Fsc1;
        info.witnesses.receiver = first_r.map(|i| long[i]);
        info.witnesses.transmitter = last_t.map(|i| long[i]);
    }
    info.witnesses.long_path = long;
    info
}

/// The receiver/transmitter pair of a directed cycle that bounds its
/// uncovered arc, if the cycle has that shape.
fn fsc2_pair(info: &CycleInfo) -> Option<(usize, usize)> {
    let k = info.len();
    for a in 0..k {
        if !info.cut[a].receiver {
            continue;
        }
        for b in 0..k {
            if b == a || !info.cut[b].transmitter {
                continue;
            }
            // forward distance from b back to a
            if (a + k - b) % k < 2 {
                continue;
            }
            let span = (b + k - a) % k;
            let path: Vec<usize> = (0..=span).map(|s| (a + s) % k).collect();
            let outside_cut = (0..k).any(|i| info.cut[i].is_cut && !path.contains(&i));
            if outside_cut {
                continue;
            }
            let max_receiver = path.iter().rposition(|&i| info.cut[i].receiver).unwrap();
            let min_transmitter = path.iter().position(|&i| info.cut[i].transmitter).unwrap();
            if max_receiver <= min_transmitter {
                return Some((info.vertices[a], info.vertices[b]));
            }
        }
    }
    None
}

struct Analysis {
    cycles: Vec<CycleInfo>,
    ext: VertexSet,
}

fn analyse(d: &OrientedGraph) -> Result<Analysis> {
    let bd = block_decomposition(&d.underlying());
    if !bd.is_cactus() {
        return Err(Error::NotACactus);
    }
    if !d.underlying().is_connected() {
        return Err(Error::Disconnected);
    }
    let cycles = bd
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.is_cycle())
        .map(|(i, b)| classify(d, i, &b.vertices, &b.edges))
        .collect();
    Ok(Analysis {
        cycles,
        ext: extreme_set(d),
    })
}

/// Classifies every cycle block of a connected oriented cactus.
pub fn classify_cycles(d: &OrientedGraph) -> Result<Vec<CycleInfo>> {
    Ok(analyse(d)?.cycles)
}

fn interior(path: &[usize]) -> &[usize] {
    &path[1..path.len() - 1]
}

/// Interior vertices of the directed arc strictly between `from` and `to`.
fn open_arc(c: &CycleInfo, from: usize, to: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut v = c.successor(from);
    while v != to {
        out.push(v);
        v = c.successor(v);
    }
    out
}

/// The certificate set of an unsatisfactory or falsely satisfactory cycle.
pub fn coconvex_certificate(d: &OrientedGraph, c: &CycleInfo) -> Result<VertexSet> {
    let n = d.n();
    let set = |vs: Vec<usize>| VertexSet::from_vertices(n, vs);
    Ok(match c.class {
        CycleClass::TrapReceiver | CycleClass::TrapTransmitter => c.vertex_set(n),
        CycleClass::Uc2 => set(c
            .vertices
            .iter()
            .copied()
            .filter(|&v| !c.flags(v).is_cut)
            .collect()),
        CycleClass::Uc3 => set(interior(&c.witnesses.long_path).to_vec()),
        CycleClass::Fsc1 => {
            let p = &c.witnesses.long_path;
            let pos = |v: usize| p.iter().position(|&x| x == v).unwrap();
            let lo = c.witnesses.transmitter.map_or(0, pos);
            let hi = c.witnesses.receiver.map_or(p.len() - 1, pos);
            set(p[lo + 1..hi].to_vec())
        }
        CycleClass::Fsc2 => set(open_arc(
            c,
            c.witnesses.transmitter.unwrap(),
            c.witnesses.receiver.unwrap(),
        )),
        CycleClass::Tsc => return Err(Error::CycleIsTsc),
    })
}

fn hull_choice(c: &CycleInfo) -> Option<usize> {
    match c.class {
        CycleClass::TrapReceiver => c.witnesses.receiver.map(|r| c.predecessor(r)),
        CycleClass::TrapTransmitter => c.witnesses.transmitter.map(|t| c.successor(t)),
        CycleClass::Uc2 => c
            .vertices
            .iter()
            .copied()
            .filter(|&v| !c.flags(v).is_cut)
            .min(),
        CycleClass::Uc3 => interior(&c.witnesses.long_path).iter().copied().min(),
        _ => None,
    }
}

fn geodetic_choice(c: &CycleInfo) -> Option<usize> {
    match c.class {
        CycleClass::Fsc1 => {
            let p = &c.witnesses.long_path;
            match (c.witnesses.transmitter, c.witnesses.receiver) {
                (None, _) => Some(p[1]),
                (_, None) => Some(p[p.len() - 2]),
                (Some(t), Some(r)) => {
                    let pos = |v: usize| p.iter().position(|&x| x == v).unwrap();
                    p[pos(t) + 1..pos(r)].iter().copied().min()
                }
            }
        }
        CycleClass::Fsc2 => c.witnesses.transmitter.map(|t| c.successor(t)),
        _ => None,
    }
}

fn is_single_directed_cycle(d: &OrientedGraph, cycles: &[CycleInfo]) -> bool {
    cycles.len() == 1 && cycles[0].is_directed && cycles[0].len() == d.n()
}

/// Nontrivial strongly connected components with no arc entering them or no
/// arc leaving them. Each is co-convex and avoids `ext(D)`.
pub fn trap_clusters(d: &OrientedGraph) -> Vec<Vec<usize>> {
    strongly_connected_components(d)
        .into_iter()
        .filter(|k| k.len() >= 2)
        .filter(|k| {
            let inside = |w: usize| k.binary_search(&w).is_ok();
            let closed_in = k.iter().all(|&v| d.in_neighbors(v).iter().all(|&w| inside(w)));
            let closed_out = k.iter().all(|&v| d.out_neighbors(v).iter().all(|&w| inside(w)));
            closed_in || closed_out
        })
        .collect()
}

/// One forced extra vertex: its certificate and the vertices tried for it,
/// preferred first.
#[derive(Clone)]
struct Unit {
    cert: Certificate,
    candidates: Vec<usize>,
    cluster: bool,
}

fn candidates(first: Option<usize>, rest: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut out: Vec<usize> = first.into_iter().collect();
    for v in rest {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn cluster_choice(d: &OrientedGraph, cycles: &[CycleInfo], k: &[usize]) -> Option<usize> {
    let inside = |w: usize| k.binary_search(&w).is_ok();
    let terminal = k.iter().all(|&v| d.out_neighbors(v).iter().all(|&w| inside(w)));
    let port = k.iter().copied().find(|&v| {
        if terminal {
            d.in_neighbors(v).iter().any(|&w| !inside(w))
        } else {
            d.out_neighbors(v).iter().any(|&w| !inside(w))
        }
    })?;
    let c = cycles
        .iter()
        .find(|c| c.is_directed && c.vertices.contains(&port) && inside(c.vertices[0]))?;
    Some(if terminal {
        c.predecessor(port)
    } else {
        c.successor(port)
    })
}

fn hull_units(d: &OrientedGraph, cycles: &[CycleInfo]) -> Result<(Vec<Unit>, Vec<Vec<usize>>)> {
    let n = d.n();
    let mut units = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        if !c.class.is_unsatisfactory() {
            continue;
        }
        let set = coconvex_certificate(d, c)?;
        units.push(Unit {
            cluster: false,
            candidates: candidates(hull_choice(c), set.iter()),
            cert: Certificate {
                cycles: vec![i],
                kind: CertificateKind::CoConvex,
                region: set.clone(),
                set,
            },
        });
    }
    let clusters = trap_clusters(d);
    for k in &clusters {
        let set = VertexSet::from_vertices(n, k.iter().copied());
        if units.iter().any(|u| u.cert.set.is_subset(&set)) {
            continue;
        }
        let members = (0..cycles.len())
            .filter(|&i| set.contains(cycles[i].vertices[0]) && cycles[i].is_directed)
            .filter(|&i| cycles[i].vertices.iter().all(|&v| set.contains(v)))
            .collect();
        units.push(Unit {
            cluster: true,
            candidates: candidates(cluster_choice(d, cycles, k), k.iter().copied()),
            cert: Certificate {
                cycles: members,
                kind: CertificateKind::CoConvex,
                region: set.clone(),
                set,
            },
        });
    }
    Ok((units, clusters))
}

/// Coverage of a candidate set: `(|I^2(S)|, |I(S)|)` for hull sets and
/// `(|I(S)|, 0)` for geodetic sets.
fn coverage(index: &GeodesicIndex, kind: Objective, s: &VertexSet) -> (usize, usize) {
    let once = index.interval(s);
    match kind {
        Objective::Hull => (index.interval(&once).len(), once.len()),
        Objective::Geodetic => (once.len(), 0),
    }
}

/// Largest number of joint choices tried exhaustively once single switches
/// stop helping.
const MAX_ASSIGNMENTS: usize = 200_000;

/// Picks one candidate per unit. The preferred candidates are tried first;
/// while they leave vertices uncovered, single units are switched to
/// whichever candidate covers the most, and if that stalls every joint
/// choice is tried in order. Returns the picks and whether they cover
/// everything.
fn assign(
    index: &GeodesicIndex,
    kind: Objective,
    base: &VertexSet,
    units: &[Unit],
) -> (Vec<usize>, bool) {
    let n = base.universe();
    let build = |picks: &[usize]| {
        let mut s = base.clone();
        for &v in picks {
            s.insert(v);
        }
        s
    };
    let mut picks: Vec<usize> = units.iter().map(|u| u.candidates[0]).collect();
    let mut best = coverage(index, kind, &build(&picks));
    while best.0 < n {
        let mut improved = false;
        for (i, unit) in units.iter().enumerate() {
            for &v in &unit.candidates[1..] {
                let old = picks[i];
                picks[i] = v;
                let score = coverage(index, kind, &build(&picks));
                if score > best {
                    best = score;
                    improved = true;
                } else {
                    picks[i] = old;
                }
            }
        }
        if !improved {
            break;
        }
    }
    if best.0 == n {
        return (picks, true);
    }
    let space = units
        .iter()
        .try_fold(1usize, |acc, u| acc.checked_mul(u.candidates.len()));
    if space.is_some_and(|size| size <= MAX_ASSIGNMENTS) && !units.is_empty() {
        let found = units
            .iter()
            .map(|u| u.candidates.iter().copied())
            .multi_cartesian_product()
            .find(|combo| coverage(index, kind, &build(combo)).0 == n);
        if let Some(combo) = found {
            return (combo, true);
        }
    }
    (picks, false)
}

fn degenerate_solution(
    d: &OrientedGraph,
    kind: Objective,
    cycles: Vec<CycleInfo>,
    ext: &VertexSet,
) -> Result<CactusSolution> {
    let exact = solve(d, kind, &SolverConfig::unbounded())?;
    Ok(CactusSolution {
        kind,
        set: exact.witness,
        chosen: Vec::new(),
        cycles,
        clusters: Vec::new(),
        certificates: Vec::new(),
        ext_count: ext.len(),
        degenerate: true,
    })
}

/// A certificate region under negotiation: the vertices it has to isolate
/// some of, and the vertices it may be built from.
struct Claim {
    core: VertexSet,
    pool: VertexSet,
}

/// Finds pairwise disjoint regions, one per claim, each isolating part of
/// its core: no geodesic between vertices outside the region reaches the
/// isolated vertices. Vertices in several pools go to one claimant or to
/// none. When the plain pools do not work, sound regions are shrunk to a
/// minimal sound core and the others grow by the free vertices nearest to
/// their cores. Returns `(isolated set, region)` per claim.
fn negotiate(
    d: &OrientedGraph,
    index: &GeodesicIndex,
    fixed: &VertexSet,
    claims: &[Claim],
) -> Result<Vec<(VertexSet, VertexSet)>> {
    const MAX_CONTESTED: usize = 10;
    let n = d.n();
    let all = undirected_distances(&d.underlying());
    let dist: Vec<Vec<u32>> = claims
        .iter()
        .map(|c| {
            (0..n)
                .map(|x| c.core.iter().filter_map(|v| all.get(v, x)).min().unwrap_or(u32::MAX))
                .collect()
        })
        .collect();
    // nearest of the given claims, `None` on ties
    let nearest = |among: &[usize], x: usize| -> Option<usize> {
        let m = among.iter().map(|&j| dist[j][x]).min()?;
        let mut at = among.iter().copied().filter(|&j| dist[j][x] == m);
        let first = at.next()?;
        at.next().is_none().then_some(first)
    };
    let owners = |x: usize| -> Vec<usize> {
        (0..claims.len()).filter(|&j| claims[j].pool.contains(x)).collect()
    };
    let contested: Vec<usize> = (0..n)
        .filter(|&x| !fixed.contains(x) && owners(x).len() > 1)
        .collect();
    if contested.len() > MAX_CONTESTED {
        return Err(Error::ConstructionFailed(format!(
            "{} vertices contested between certificate regions",
            contested.len()
        )));
    }
    let isolated = |j: usize, r: &VertexSet| {
        r.intersection(&claims[j].core)
            .difference(&index.interval(&r.complement()))
    };
    let attempt = |choice: &[Option<usize>], adjust: bool| -> Option<Vec<(VertexSet, VertexSet)>> {
        let mut regions: Vec<VertexSet> = claims
            .iter()
            .map(|c| {
                let mut r = c.pool.difference(fixed);
                for &x in &contested {
                    r.remove(x);
                }
                r
            })
            .collect();
        for (&x, owner) in contested.iter().zip(choice) {
            if let Some(j) = *owner {
                regions[j].insert(x);
            }
        }
        if adjust {
            let mut sound = vec![false; regions.len()];
            for (j, region) in regions.iter_mut().enumerate() {
                if isolated(j, region).is_empty() {
                    continue;
                }
                sound[j] = true;
                for x in region.to_vec() {
                    region.remove(x);
                    if isolated(j, region).is_empty() {
                        region.insert(x);
                    }
                }
            }
            let mut taken = fixed.clone();
            for r in &regions {
                taken.union_with(r);
            }
            let failing: Vec<usize> = (0..regions.len()).filter(|&j| !sound[j]).collect();
            for x in 0..n {
                if !taken.contains(x) {
                    if let Some(j) = nearest(&failing, x) {
                        regions[j].insert(x);
                    }
                }
            }
        }
        regions
            .into_iter()
            .enumerate()
            .map(|(j, r)| {
                let set = isolated(j, &r);
                (!set.is_empty()).then_some((set, r))
            })
            .collect()
    };
    let choices: Vec<Vec<Option<usize>>> = if contested.is_empty() {
        vec![Vec::new()]
    } else {
        contested
            .iter()
            .map(|&x| owners(x).into_iter().map(Some).chain([None]).collect::<Vec<_>>())
            .multi_cartesian_product()
            .collect()
    };
    [false, true]
        .into_iter()
        .find_map(|adjust| choices.iter().find_map(|c| attempt(c, adjust)))
        .ok_or_else(|| Error::ConstructionFailed("no disjoint certificate regions".into()))
}

/// Cycles that need a vertex of their own in a geodetic set, with a vertex
/// that helps each. Each round looks at the first cycle the interval still
/// misses, falsely satisfactory cycles first, and adds the vertex that
/// covers part of its gap and the most overall, preferring the prescribed
/// vertex of that cycle on ties.
fn geodetic_gaps(
    index: &GeodesicIndex,
    cycles: &[CycleInfo],
    order: &[usize],
    mut set: VertexSet,
) -> Result<(Vec<(usize, usize)>, usize)> {
    let n = set.universe();
    let mut gaps: Vec<(usize, usize)> = Vec::new();
    let mut rounds = 0;
    loop {
        let missing = index.interval(&set).complement();
        let Some(i) = order
            .iter()
            .copied()
            .find(|&i| !cycles[i].vertex_set(n).is_disjoint(&missing))
        else {
            break;
        };
        let c = &cycles[i];
        let mine = c.vertex_set(n).intersection(&missing);
        let own = c.vertex_set(n).difference(&set);
        let mut best: Option<(usize, (bool, usize))> = None;
        for v in candidates(geodetic_choice(c), own.iter().chain(set.complement().iter())) {
            if set.contains(v) {
                continue;
            }
            let mut s = set.clone();
            s.insert(v);
            let reach = index.interval(&s);
            let score = (!reach.is_disjoint(&mine), reach.len());
            if best.is_none_or(|(_, b)| score > b) {
                best = Some((v, score));
            }
        }
        let (pick, _) = best.expect("a missed vertex is not in the set");
        set.insert(pick);
        rounds += 1;
        if gaps.iter().all(|&(j, _)| j != i) {
            gaps.push((i, pick));
        }
    }
    let left = index.interval(&set).complement();
    if !left.is_empty() {
        return Err(Error::ConstructionFailed(format!(
            "vertices {left} are uncovered and lie on no cycle"
        )));
    }
    Ok((gaps, rounds))
}

/// Largest number of cycle subsets tried as certificate claims per size.
const MAX_CLAIM_SETS: usize = 500;

/// Extends the hull units by the extra geodetic units. The greedy pass fixes
/// a range for their number; for each size in that range, sets of missed
/// cycles (the greedy's own first) are tried as claims for disjoint
/// regions, and a set meeting the bound must then have exactly one vertex
/// per region.
fn geodetic_extras(
    d: &OrientedGraph,
    index: &GeodesicIndex,
    cycles: &[CycleInfo],
    ext: &VertexSet,
    units: Vec<Unit>,
    picks: &[usize],
) -> Result<(Vec<Unit>, Vec<usize>)> {
    let n = d.n();
    let mut s = ext.clone();
    let mut fixed = ext.clone();
    for (u, &v) in units.iter().zip(picks) {
        s.insert(v);
        fixed.union_with(&u.cert.region);
    }
    let missing = index.interval(&s).complement();
    let mut order: Vec<usize> = (0..cycles.len())
        .filter(|&i| cycles[i].class.is_falsely_satisfactory())
        .collect();
    order.extend((0..cycles.len()).filter(|&i| !cycles[i].class.is_falsely_satisfactory()));
    let (gaps, rounds) = geodetic_gaps(index, cycles, &order, s)?;
    let missed: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&i| !cycles[i].vertex_set(n).is_disjoint(&missing))
        .collect();
    let hint = |i: usize| gaps.iter().find(|g| g.0 == i).map(|g| g.1);
    let greedy: Vec<usize> = gaps.iter().map(|g| g.0).collect();
    for size in gaps.len()..=rounds.min(missed.len()) {
        let subsets = std::iter::once(greedy.clone())
            .filter(|g| g.len() == size)
            .chain(missed.iter().copied().combinations(size));
        for claim_cycles in subsets.take(MAX_CLAIM_SETS) {
            let claims: Vec<Claim> = claim_cycles
                .iter()
                .map(|&i| {
                    let core = cycles[i].vertex_set(n);
                    Claim {
                        pool: core.difference(&fixed),
                        core,
                    }
                })
                .collect();
            let Ok(regions) = negotiate(d, index, &fixed, &claims) else {
                continue;
            };
            let mut all: Vec<Unit> = units.iter().map(Unit::clone).collect();
            for (&i, (set, region)) in claim_cycles.iter().zip(regions) {
                let preferred = [hint(i), geodetic_choice(&cycles[i])]
                    .into_iter()
                    .flatten()
                    .find(|&v| region.contains(v));
                all.push(Unit {
                    cluster: false,
                    candidates: candidates(preferred, region.iter()),
                    cert: Certificate {
                        cycles: vec![i],
                        kind: CertificateKind::Uncovered,
                        set,
                        region,
                    },
                });
            }
            let (p, ok) = assign(index, Objective::Geodetic, ext, &all);
            if ok {
                return Ok((all, p));
            }
        }
    }
    Err(Error::ConstructionFailed(
        "no geodetic set meets the certified lower bound".into(),
    ))
}

fn solve_cactus(d: &OrientedGraph, kind: Objective) -> Result<CactusSolution> {
    let Analysis { cycles, ext } = analyse(d)?;
    if is_single_directed_cycle(d, &cycles) {
        return degenerate_solution(d, kind, cycles, &ext);
    }
    let index = GeodesicIndex::new(d);
    let (mut units, clusters) = hull_units(d, &cycles)?;
    if kind == Objective::Geodetic {
        // any extra vertex inside a cluster meets it, so clusters only get
        // a vertex of their own if the interval still misses them
        units.retain(|u| !u.cluster);
    }
    let (mut picks, mut covered) = assign(&index, kind, &ext, &units);

    if kind == Objective::Geodetic && !covered {
        (units, picks) = geodetic_extras(d, &index, &cycles, &ext, units, &picks)?;
        covered = true;
    }

    let mut set = ext.clone();
    for &v in &picks {
        set.insert(v);
    }
    if !covered {
        return Err(Error::ConstructionFailed(format!(
            "{} set {set} does not cover the graph",
            kind.as_str()
        )));
    }
    let certificates = units.into_iter().map(|u| u.cert).collect();
    Ok(CactusSolution {
        kind,
        set,
        chosen: picks,
        cycles,
        clusters,
        certificates,
        ext_count: ext.len(),
        degenerate: false,
    })
}

/// Minimum hull set of a connected oriented cactus.
pub fn min_hull_set_cactus(d: &OrientedGraph) -> Result<CactusSolution> {
    solve_cactus(d, Objective::Hull)
}

/// Minimum geodetic set of a connected oriented cactus.
pub fn min_geodetic_set_cactus(d: &OrientedGraph) -> Result<CactusSolution> {
    solve_cactus(d, Objective::Geodetic)
}

/// On an oriented tree the extreme vertices are the unique minimum hull set
/// and the unique minimum geodetic set.
pub fn tree_solution(d: &OrientedGraph) -> Result<CactusSolution> {
    let g = d.underlying();
    if !g.is_connected() || g.edge_count() + 1 != d.n().max(1) {
        return Err(Error::NotATree);
    }
    let set = extreme_set(d);
    if !GeodesicIndex::new(d).interval(&set).is_full() {
        return Err(Error::ConstructionFailed(
            "extreme vertices of a tree do not form a geodetic set".into(),
        ));
    }
    Ok(CactusSolution {
        kind: Objective::Geodetic,
        ext_count: set.len(),
        set,
        chosen: Vec::new(),
        cycles: Vec::new(),
        clusters: Vec::new(),
        certificates: Vec::new(),
        degenerate: false,
    })
}

/// Checks every certificate of a solution: co-convex ones by convexity of
/// the complement, uncovered ones against the interval of everything outside
/// their region. Regions must be pairwise disjoint and avoid `ext(D)`, and
/// uncovered certificates only bound geodetic sets.
pub fn verify_certificates(d: &OrientedGraph, solution: &CactusSolution) -> bool {
    let index = GeodesicIndex::new(d);
    let ext = extreme_set(d);
    let mut used = VertexSet::empty(d.n());
    for cert in &solution.certificates {
        if cert.set.is_empty() || !cert.set.is_subset(&cert.region) {
            return false;
        }
        if !cert.region.is_disjoint(&ext) || !cert.region.is_disjoint(&used) {
            return false;
        }
        used.union_with(&cert.region);
        let sound = match cert.kind {
            CertificateKind::CoConvex => index.is_convex(&cert.set.complement()),
            // says nothing about hull sets, which may cover it in later rounds
            CertificateKind::Uncovered if solution.kind == Objective::Hull => false,
            CertificateKind::Uncovered => index
                .interval(&cert.region.complement())
                .is_disjoint(&cert.set),
        };
        if !sound {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_of(d: &OrientedGraph) -> CycleClass {
        let cycles = classify_cycles(d).unwrap();
        assert_eq!(cycles.len(), 1);
        cycles[0].class
    }

    #[test]
    fn trap_and_leaf_triangles() {
        let out_pendant = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(class_of(&out_pendant), CycleClass::TrapTransmitter);
        let both = OrientedGraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (4, 0)]).unwrap();
        assert_eq!(class_of(&both), CycleClass::Uc2);
        let c = &classify_cycles(&both).unwrap()[0];
        assert_eq!(coconvex_certificate(&both, c).unwrap().to_vec(), vec![1, 2]);
    }

    #[test]
    fn unbalanced_square() {
        // 0 -> 1 directly, 0 -> 3 -> 2 -> 1 the long way, 1 has a pendant
        let d = OrientedGraph::new(5, [(0, 1), (0, 3), (3, 2), (2, 1), (1, 4)]).unwrap();
        let c = &classify_cycles(&d).unwrap()[0];
        assert_eq!(c.class, CycleClass::Uc3);
        assert_eq!(coconvex_certificate(&d, c).unwrap().to_vec(), vec![2, 3]);
        let hull = min_hull_set_cactus(&d).unwrap();
        assert_eq!(hull.set.to_vec(), vec![0, 2, 4]);
        assert!(verify_certificates(&d, &hull));
    }

    #[test]
    fn pendant_sink_on_triangle() {
        let d = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let s = min_hull_set_cactus(&d).unwrap();
        // transmitter trap: take the successor of the transmitter
        assert_eq!(s.set.to_vec(), vec![1, 3]);
        assert_eq!(s.lower_bound(), 2);
    }

    #[test]
    fn alternating_square_needs_only_extremes() {
        let d = OrientedGraph::new(5, [(0, 1), (2, 1), (2, 3), (0, 3), (4, 0)]).unwrap();
        assert_eq!(class_of(&d), CycleClass::Tsc);
        let s = min_hull_set_cactus(&d).unwrap();
        assert_eq!(s.set, extreme_set(&d));
    }

    #[test]
    fn directed_square_with_gap() {
        // 0 -> 1 -> 2 -> 3 -> 0; 4 -> 0 enters, 1 -> 5 leaves
        let d = OrientedGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (1, 5)]).unwrap();
        let c = &classify_cycles(&d).unwrap()[0];
        assert_eq!(c.class, CycleClass::Fsc2);
        assert_eq!(coconvex_certificate(&d, c).unwrap().to_vec(), vec![2, 3]);
        let hull = min_hull_set_cactus(&d).unwrap();
        let geo = min_geodetic_set_cactus(&d).unwrap();
        assert_eq!(hull.set.to_vec(), vec![4, 5]);
        assert_eq!(geo.set.to_vec(), vec![2, 4, 5]);
        assert!(verify_certificates(&d, &geo));
    }

    #[test]
    fn lone_directed_cycle_falls_back() {
        let d = OrientedGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let s = min_hull_set_cactus(&d).unwrap();
        assert!(s.degenerate);
        assert_eq!(s.set.len(), 2);
    }

    #[test]
    fn trees() {
        let path = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(tree_solution(&path).unwrap().set.to_vec(), vec![0, 3]);
        let alternating = OrientedGraph::new(4, [(0, 1), (2, 1), (2, 3)]).unwrap();
        assert!(tree_solution(&alternating).unwrap().set.is_full());
        let c3 = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tree_solution(&c3).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn rejects_non_cacti() {
        let k4 = OrientedGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(min_hull_set_cactus(&k4).unwrap_err(), Error::NotACactus);
        let two = OrientedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_hull_set_cactus(&two).unwrap_err(), Error::Disconnected);
    }
}
