use super::c4::{orient_c4, C4Mapping};
use crate::distance::undirected_distances;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};

/// One `dim`-bit label per vertex. Bit `i` is printed as character `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeLabeling {
    dim: usize,
    labels: Vec<Vec<bool>>,
}

impl HypercubeLabeling {
    pub fn new(dim: usize, labels: Vec<Vec<bool>>) -> Result<Self> {
        if let Some(v) = labels.iter().position(|l| l.len() != dim) {
            return Err(Error::BadParameter(format!(
                "label of vertex {v} has {} bits, expected {dim}",
                labels[v].len()
            )));
        }
        Ok(HypercubeLabeling { dim, labels })
    }

    /// Labels given as `0`/`1` strings of equal length.
    pub fn from_strings<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let dim = labels.first().map_or(0, |s| s.as_ref().len());
        let bits = labels
            .iter()
            .map(|s| parse_bits(s.as_ref()))
            .collect::<std::result::Result<Vec<_>, String>>()
            .map_err(Error::BadParameter)?;
        Self::new(dim, bits)
    }

    /// Line 1 `n k`, then `n` lines of `k` characters from `{0,1}`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let bad = |line: usize, message: String| Error::Parse {
            line: line + 1,
            message,
        };
        let (_, header) = lines.next().ok_or_else(|| bad(0, "empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [n, k] = fields[..] else {
            return Err(bad(0, "expected header \"n k\"".into()));
        };
        let n: usize = n.parse().map_err(|_| bad(0, format!("invalid count {n:?}")))?;
        let k: usize = k.parse().map_err(|_| bad(0, format!("invalid dimension {k:?}")))?;
        let mut labels = Vec::with_capacity(n);
        for _ in 0..n {
            let (i, line) = lines
                .next()
                .ok_or_else(|| bad(labels.len() + 1, "missing label line".into()))?;
            let bits = parse_bits(line.trim()).map_err(|m| bad(i, m))?;
            if bits.len() != k {
                return Err(bad(i, format!("expected {k} bits, found {}", bits.len())));
            }
            labels.push(bits);
        }
        if let Some((i, _)) = lines.next() {
            return Err(bad(i, "unexpected content after the last label".into()));
        }
        Self::new(k, labels)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.labels.len(), self.dim);
        for v in 0..self.labels.len() {
            out.push_str(&self.label_string(v));
            out.push('\n');
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &[bool] {
        &self.labels[v]
    }

    pub fn label_string(&self, v: usize) -> String {
        self.labels[v].iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn hamming(&self, u: usize, v: usize) -> usize {
        self.labels[u]
            .iter()
            .zip(&self.labels[v])
            .filter(|(a, b)| a != b)
            .count()
    }
}

fn parse_bits(s: &str) -> std::result::Result<Vec<bool>, String> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(format!("invalid bit {other:?}")),
        })
        .collect()
}

/// Graph distance equals Hamming distance for every pair of vertices.
pub fn verify_isometric_labeling(g: &UndirectedGraph, l: &HypercubeLabeling) -> bool {
    if l.len() != g.n() {
        return false;
    }
    let dist = undirected_distances(g);
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| dist.get(u, v).map(|d| d as usize) == Some(l.hamming(u, v)))
    })
}

/// `G_C4` together with a `2k`-bit labeling built from an isometric `k`-bit
/// labeling of `g`. Every base label has each bit written twice; the two
/// subdivision vertices of an edge differing in coordinate `c` take the
/// second copy of bit `c` from the other endpoint.
pub fn doubling_labels(
    g: &UndirectedGraph,
    l: &HypercubeLabeling,
) -> Result<(OrientedGraph, C4Mapping, HypercubeLabeling)> {
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if !verify_isometric_labeling(g, l) {
        return Err(Error::LabelingNotIsometric);
    }
    let (d, mapping) = orient_c4(g);
    let doubled = |v: usize| -> Vec<bool> { l.label(v).iter().flat_map(|&b| [b, b]).collect() };
    let mut labels: Vec<Vec<bool>> = (0..g.n()).map(doubled).collect();
    for &(i, j) in g.edges() {
        let c = (0..l.dim())
            .find(|&c| l.label(i)[c] != l.label(j)[c])
            .expect("adjacent vertices of an isometric labeling differ in one bit");
        let mut uij = doubled(i);
        uij[2 * c + 1] = l.label(j)[c];
        let mut uji = doubled(j);
        uji[2 * c + 1] = l.label(i)[c];
        labels.push(uij);
        labels.push(uji);
    }
    let out = HypercubeLabeling::new(2 * l.dim(), labels)?;
    if !verify_isometric_labeling(&d.underlying(), &out) {
        return Err(Error::ConstructionFailed(
            "doubled labeling is not isometric".into(),
        ));
    }
    Ok((d, mapping, out))
}
