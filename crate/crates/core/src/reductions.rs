//! Set cover gadgets whose geodetic number is the optimum cover size plus
//! three, for three target classes: bipartite DAGs, split graphs and
//! cobipartite DAGs.
//!
//! Vertex numbering is fixed: set vertices `f_1..f_m` occupy `0..m`, element
//! vertices `u_1..u_n` occupy `m..m+n`, and the apexes follow in the order
//! listed by [`GadgetKind::apexes`].

use std::fmt;

use itertools::Itertools;

use crate::distance::GeodesicIndex;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::solver::{min_geodetic_set_with, SolverConfig};
use crate::vertex_set::VertexSet;

const MAX_FAMILY_FOR_EXHAUSTIVE_COVER: usize = 24;

/// A set cover instance over the universe `{1..universe_size}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    family: Vec<Vec<usize>>,
    budget: usize,
}

impl SetCoverInstance {
    /// Sets are sorted on construction. Elements must lie in `1..=n`, the
    /// family must be nonempty and its union must be the whole universe.
    pub fn new(universe_size: usize, family: Vec<Vec<usize>>, budget: usize) -> Result<Self> {
        if family.is_empty() {
            return Err(Error::InvalidInstance("the family is empty".into()));
        }
        let mut covered = vec![false; universe_size + 1];
        let mut sorted = Vec::with_capacity(family.len());
        for (i, set) in family.into_iter().enumerate() {
            let mut set = set;
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInstance(format!("set {} repeats an element", i + 1)));
            }
            for &e in &set {
                if e == 0 || e > universe_size {
                    return Err(Error::InvalidInstance(format!(
                        "set {} contains {e}, outside 1..={universe_size}",
                        i + 1
                    )));
                }
                covered[e] = true;
            }
            sorted.push(set);
        }
        if let Some(e) = (1..=universe_size).find(|&e| !covered[e]) {
            return Err(Error::InvalidInstance(format!("element {e} is not covered")));
        }
        Ok(SetCoverInstance {
            universe_size,
            family: sorted,
            budget,
        })
    }

    /// Line 1 `n m k`, then `m` lines `s e_1 .. e_s` with 1-based elements.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: usize, message: String| Error::Parse { line, message };
        let numbers = |line: usize, s: &str| -> Result<Vec<usize>> {
            s.split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(line, format!("invalid number {t:?}"))))
                .collect()
        };
        let mut lines = text.lines();
        let header = numbers(1, lines.next().ok_or_else(|| bad(1, "empty input".into()))?)?;
        let [n, m, k] = header[..] else {
            return Err(bad(1, "expected header \"n m k\"".into()));
        };
        let mut family = Vec::with_capacity(m);
        for i in 0..m {
            let line_no = i + 2;
            let line = lines
                .next()
                .ok_or_else(|| bad(line_no, "missing set line".into()))?;
            let row = numbers(line_no, line)?;
            match row.split_first() {
                Some((&s, rest)) if s == rest.len() => family.push(rest.to_vec()),
                _ => return Err(bad(line_no, "set size does not match its elements".into())),
            }
        }
        if lines.next().is_some() {
            return Err(bad(m + 2, "unexpected content after the last set".into()));
        }
        Self::new(n, family, k)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.universe_size, self.family.len(), self.budget);
        for set in &self.family {
            out.push_str(&set.len().to_string());
            for e in set {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn family(&self) -> &[Vec<usize>] {
        &self.family
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// True when the sets with the given 0-based indices cover the universe.
    pub fn is_cover(&self, indices: &[usize]) -> bool {
        let mut covered = vec![false; self.universe_size + 1];
        for &i in indices {
            for &e in &self.family[i] {
                covered[e] = true;
            }
        }
        covered[1..].iter().all(|&c| c)
    }

    /// Lexicographically first minimum cover, by exhaustive search.
    pub fn min_cover(&self) -> Result<Vec<usize>> {
        let m = self.family.len();
        if m > MAX_FAMILY_FOR_EXHAUSTIVE_COVER {
            return Err(Error::InstanceTooLarge {
                free: m,
                limit: MAX_FAMILY_FOR_EXHAUSTIVE_COVER,
            });
        }
        Ok((0..=m)
            .flat_map(|size| (0..m).combinations(size))
            .find(|c| self.is_cover(c))
            .expect("the whole family is a cover"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Apex {
    U,
    V,
    W,
    X,
    Y,
}

impl Apex {
    pub fn as_str(self) -> &'static str {
        match self {
            Apex::U => "u",
            Apex::V => "v",
            Apex::W => "w",
            Apex::X => "x",
            Apex::Y => "y",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetRole {
    /// 0-based index into the family.
    Set(usize),
    /// 1-based universe element.
    Element(usize),
    Apex(Apex),
}

impl fmt::Display for GadgetRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetRole::Set(i) => write!(f, "set:{}", i + 1),
            GadgetRole::Element(j) => write!(f, "element:{j}"),
            GadgetRole::Apex(a) => write!(f, "apex:{}", a.as_str()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    /// Only the set/element membership arcs.
    Core,
    BipartiteDag,
    Split,
    Cobipartite,
}

impl GadgetKind {
    pub fn apexes(self) -> &'static [Apex] {
        match self {
            GadgetKind::Core => &[],
            GadgetKind::BipartiteDag | GadgetKind::Cobipartite => &[Apex::U, Apex::V, Apex::W],
            GadgetKind::Split => &[Apex::U, Apex::W, Apex::X, Apex::Y],
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::Core => "core",
            GadgetKind::BipartiteDag => "bipartite",
            GadgetKind::Split => "split",
            GadgetKind::Cobipartite => "cobipartite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMapping {
    sets: usize,
    elements: usize,
    roles: Vec<GadgetRole>,
}

impl GadgetMapping {
    fn new(sets: usize, elements: usize, kind: GadgetKind) -> Self {
        let roles = (0..sets)
            .map(GadgetRole::Set)
            .chain((1..=elements).map(GadgetRole::Element))
            .chain(kind.apexes().iter().map(|&a| GadgetRole::Apex(a)))
            .collect();
        GadgetMapping {
            sets,
            elements,
            roles,
        }
    }

    pub fn set_vertex(&self, i: usize) -> usize {
        assert!(i < self.sets);
        i
    }

    /// Vertex of the 1-based element `j`.
    pub fn element_vertex(&self, j: usize) -> usize {
        assert!((1..=self.elements).contains(&j));
        self.sets + j - 1
    }

    pub fn apex(&self, a: Apex) -> Option<usize> {
        self.roles.iter().position(|&r| r == GadgetRole::Apex(a))
    }

    pub fn role(&self, v: usize) -> GadgetRole {
        self.roles[v]
    }

    pub fn roles(&self) -> &[GadgetRole] {
        &self.roles
    }

    /// Sidecar text: one `index role` line per vertex.
    pub fn to_text(&self) -> String {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("{v} {r}\n"))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: OrientedGraph,
    pub mapping: GadgetMapping,
    /// `budget + 3`.
    pub threshold: usize,
    /// The two sides certifying the target class: (stable, clique) for the
    /// split gadget, the two cliques for the cobipartite one.
    pub partition: Option<(VertexSet, VertexSet)>,
}

struct Builder<'a> {
    instance: &'a SetCoverInstance,
    mapping: GadgetMapping,
    arcs: Vec<(usize, usize)>,
}

impl<'a> Builder<'a> {
    fn new(instance: &'a SetCoverInstance, kind: GadgetKind) -> Self {
        let mapping = GadgetMapping::new(instance.family.len(), instance.universe_size, kind);
        let mut arcs = Vec::new();
        for (i, set) in instance.family.iter().enumerate() {
            for &j in set {
                arcs.push((mapping.set_vertex(i), mapping.element_vertex(j)));
            }
        }
        Builder {
            instance,
            mapping,
            arcs,
        }
    }

    fn sets(&self) -> std::ops::Range<usize> {
        0..self.mapping.sets
    }

    fn elements(&self) -> std::ops::Range<usize> {
        self.mapping.sets..self.mapping.sets + self.mapping.elements
    }

    fn apex(&self, a: Apex) -> usize {
        self.mapping.apex(a).expect("apex present in this gadget")
    }

    fn transitive(&mut self, vertices: std::ops::Range<usize>) {
        for a in vertices.clone() {
            for b in a + 1..vertices.end {
                self.arcs.push((a, b));
            }
        }
    }

    fn finish(self, kind: GadgetKind, partition: Option<(VertexSet, VertexSet)>) -> Gadget {
        let n = self.mapping.roles.len();
        Gadget {
            kind,
            graph: OrientedGraph::new(n, self.arcs).expect("gadget arcs are distinct"),
            mapping: self.mapping,
            threshold: self.instance.budget + 3,
            partition,
        }
    }
}

/// The membership digraph: `f_i -> u_j` whenever `j` is in `F_i`.
pub fn core_gadget(instance: &SetCoverInstance) -> Gadget {
    Builder::new(instance, GadgetKind::Core).finish(GadgetKind::Core, None)
}

/// Adds a source `u` and sinks `v`, `w` with `u -> f_i -> w`, `u_j -> v`
/// and `u -> v`. The result is a DAG with a bipartite underlying graph.
pub fn to_bipartite_dag(instance: &SetCoverInstance) -> Gadget {
    let kind = GadgetKind::BipartiteDag;
    let mut b = Builder::new(instance, kind);
    let (u, v, w) = (b.apex(Apex::U), b.apex(Apex::V), b.apex(Apex::W));
    for f in b.sets() {
        b.arcs.extend([(u, f), (f, w)]);
    }
    for e in b.elements() {
        b.arcs.push((e, v));
    }
    b.arcs.push((u, v));
    b.finish(kind, None)
}

/// Makes the set vertices a transitive clique and adds `u`, `w`, `x`, `y`
/// with `u -> f_i`, `x -> f_i`, `f_i -> w`, `u_j -> x`, `u -> x` and
/// `x -> y`. The clique is the set vertices plus `u` and `x`.
pub fn to_split(instance: &SetCoverInstance) -> Gadget {
    let kind = GadgetKind::Split;
    let mut b = Builder::new(instance, kind);
    let (u, w, x, y) = (
        b.apex(Apex::U),
        b.apex(Apex::W),
        b.apex(Apex::X),
        b.apex(Apex::Y),
    );
    b.transitive(b.sets());
    for f in b.sets() {
        b.arcs.extend([(u, f), (x, f), (f, w)]);
    }
    for e in b.elements() {
        b.arcs.push((e, x));
    }
    b.arcs.extend([(u, x), (x, y)]);
    let n = b.mapping.roles.len();
    let clique = VertexSet::from_vertices(n, b.sets().chain([u, x]));
    let stable = VertexSet::from_vertices(n, b.elements().chain([w, y]));
    b.finish(kind, Some((stable, clique)))
}

/// Makes both the set vertices and the element vertices transitive cliques
/// and adds `u`, `v`, `w` with `u -> f_i -> w`, `u -> u_j -> v` and
/// `u -> v`. The cliques are the set vertices plus `w`, and the element
/// vertices plus `u` and `v`.
pub fn to_cobipartite(instance: &SetCoverInstance) -> Gadget {
    let kind = GadgetKind::Cobipartite;
    let mut b = Builder::new(instance, kind);
    let (u, v, w) = (b.apex(Apex::U), b.apex(Apex::V), b.apex(Apex::W));
    b.transitive(b.sets());
    b.transitive(b.elements());
    for f in b.sets() {
        b.arcs.extend([(u, f), (f, w)]);
    }
    for e in b.elements() {
        b.arcs.extend([(u, e), (e, v)]);
    }
    b.arcs.push((u, v));
    let n = b.mapping.roles.len();
    let first = VertexSet::from_vertices(n, b.sets().chain([w]));
    let second = VertexSet::from_vertices(n, b.elements().chain([u, v]));
    b.finish(kind, Some((first, second)))
}

pub fn build_gadget(instance: &SetCoverInstance, kind: GadgetKind) -> Gadget {
    match kind {
        GadgetKind::Core => core_gadget(instance),
        GadgetKind::BipartiteDag => to_bipartite_dag(instance),
        GadgetKind::Split => to_split(instance),
        GadgetKind::Cobipartite => to_cobipartite(instance),
    }
}

/// Turns a geodetic set of a gadget into a cover, returned as sorted 0-based
/// family indices. Each element vertex is replaced by the smallest set
/// containing it and apexes are dropped. When that does not cover the
/// universe, the lexicographically first minimum cover is returned instead,
/// which is never larger than `|S| - 3`.
pub fn decode_cover(
    instance: &SetCoverInstance,
    gadget: &Gadget,
    s: &VertexSet,
) -> Result<Vec<usize>> {
    if s.universe() != gadget.graph.n() || !GeodesicIndex::new(&gadget.graph).interval(s).is_full()
    {
        return Err(Error::NotGeodetic);
    }
    let mut chosen: Vec<usize> = s
        .iter()
        .filter_map(|v| match gadget.mapping.role(v) {
            GadgetRole::Set(i) => Some(i),
            GadgetRole::Element(j) => instance.family.iter().position(|f| f.contains(&j)),
            GadgetRole::Apex(_) => None,
        })
        .collect();
    chosen.sort_unstable();
    chosen.dedup();
    if instance.is_cover(&chosen) {
        return Ok(chosen);
    }
    // An element vertex can end a longer geodesic that also reaches other
    // elements, so swapping it for one set may lose coverage.
    let budget = s.len().saturating_sub(3);
    let best = instance.min_cover()?;
    if best.len() > budget {
        return Err(Error::ConstructionFailed(format!(
            "no cover with at most {budget} sets exists for this geodetic set"
        )));
    }
    Ok(best)
}

/// Exact optima for one instance: the minimum cover size and the geodetic
/// number of each gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub optcover: usize,
    pub ogn_bipartite: usize,
    pub ogn_split: usize,
    pub ogn_cobipartite: usize,
}

impl EquivalenceReport {
    /// Every gadget's geodetic number is the cover optimum plus three.
    pub fn holds(&self) -> bool {
        [self.ogn_bipartite, self.ogn_split, self.ogn_cobipartite]
            .iter()
            .all(|&g| g == self.optcover + 3)
    }
}

pub fn verify_equivalence(instance: &SetCoverInstance) -> Result<EquivalenceReport> {
    verify_equivalence_with(instance, &SolverConfig::default())
}

pub fn verify_equivalence_with(
    instance: &SetCoverInstance,
    config: &SolverConfig,
) -> Result<EquivalenceReport> {
    let optcover = instance.min_cover()?.len();
    let ogn = |kind| -> Result<usize> {
        Ok(min_geodetic_set_with(&build_gadget(instance, kind).graph, config)?.optimum)
    };
    Ok(EquivalenceReport {
        optcover,
        ogn_bipartite: ogn(GadgetKind::BipartiteDag)?,
        ogn_split: ogn(GadgetKind::Split)?,
        ogn_cobipartite: ogn(GadgetKind::Cobipartite)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_cobipartite_underlying, is_dag, is_split_underlying};

    fn sample() -> SetCoverInstance {
        SetCoverInstance::new(5, vec![vec![1, 2, 3, 4], vec![1, 4], vec![2, 3, 5]], 2).unwrap()
    }

    #[test]
    fn instance_validation_and_parsing() {
        assert!(matches!(
            SetCoverInstance::new(3, vec![vec![1, 2]], 1),
            Err(Error::InvalidInstance(_))
        ));
        assert!(matches!(
            SetCoverInstance::new(2, vec![vec![1, 3]], 1),
            Err(Error::InvalidInstance(_))
        ));
        let text = "5 3 2\n4 1 2 3 4\n2 1 4\n3 2 3 5\n";
        assert_eq!(SetCoverInstance::parse(text).unwrap(), sample());
        assert_eq!(sample().to_text(), text);
        assert!(matches!(
            SetCoverInstance::parse("2 1 1\n3 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(sample().min_cover().unwrap(), vec![0, 2]);
    }

    #[test]
    fn core_arcs_follow_membership() {
        let g = core_gadget(&sample());
        assert_eq!(g.graph.out_neighbors(0), &[3, 4, 5, 6]);
        let star = core_gadget(&SetCoverInstance::new(3, vec![vec![1, 2, 3]], 1).unwrap());
        assert_eq!(star.graph.out_degree(0), 3);
    }

    #[test]
    fn gadget_shapes() {
        let b = to_bipartite_dag(&sample());
        assert_eq!((b.graph.n(), b.graph.arc_count()), (11, 21));
        assert!(is_dag(&b.graph));
        assert!(b.graph.underlying().is_bipartite());
        assert_eq!(b.threshold, 5);

        let s = to_split(&sample());
        assert_eq!(s.graph.n(), 12);
        let (stable, clique) = s.partition.clone().unwrap();
        assert!(is_split_underlying(&s.graph, &stable, &clique));
        assert!(!is_dag(&s.graph));

        let c = to_cobipartite(&sample());
        assert!(is_dag(&c.graph));
        let (c1, c2) = c.partition.clone().unwrap();
        assert!(is_cobipartite_underlying(&c.graph, &c1, &c2));
    }

    #[test]
    fn decoding_replaces_elements() {
        let inst = sample();
        let g = to_bipartite_dag(&inst);
        let (u, v, w) = (
            g.mapping.apex(Apex::U).unwrap(),
            g.mapping.apex(Apex::V).unwrap(),
            g.mapping.apex(Apex::W).unwrap(),
        );
        let s = VertexSet::from_vertices(11, [u, v, w, 0, 2]);
        assert_eq!(decode_cover(&inst, &g, &s).unwrap(), vec![0, 2]);
        let with_element = VertexSet::from_vertices(11, [u, v, w, 0, g.mapping.element_vertex(5)]);
        assert_eq!(decode_cover(&inst, &g, &with_element).unwrap(), vec![0, 2]);
        let too_small = VertexSet::from_vertices(11, [u, v, w]);
        assert_eq!(decode_cover(&inst, &g, &too_small), Err(Error::NotGeodetic));
    }

    #[test]
    fn equivalence_on_small_instances() {
        let r = verify_equivalence(&sample()).unwrap();
        assert_eq!(
            r,
            EquivalenceReport {
                optcover: 2,
                ogn_bipartite: 5,
                ogn_split: 5,
                ogn_cobipartite: 5
            }
        );
        let whole = SetCoverInstance::new(3, vec![vec![1, 2, 3]], 1).unwrap();
        assert!(verify_equivalence(&whole).unwrap().holds());
        let singletons = SetCoverInstance::new(3, vec![vec![1], vec![2], vec![3]], 3).unwrap();
        let r = verify_equivalence(&singletons).unwrap();
        assert_eq!((r.optcover, r.ogn_split), (3, 6));
    }

    #[test]
    fn role_sidecar() {
        let g = to_split(&sample());
        let text = g.mapping.to_text();
        assert!(text.starts_with("0 set:1\n"));
        assert!(text.contains("3 element:1\n"));
        assert!(text.ends_with("11 apex:y\n"));
    }
}
