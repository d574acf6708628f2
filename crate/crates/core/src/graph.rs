//! Finite simple connected graphs with their hop metric.
//!
//! Vertices are the dense indices `0..n`. The all-pairs distance table is
//! computed by breadth-first search when the graph is built, together with
//! the per-vertex ordering by distance that makes every ball `B(v, r)` a
//! prefix of that ordering.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Named graph families with a documented labeling.
///
/// * `Complete(n)`: `K_n`, all pairs adjacent.
/// * `Star(n)`: `S_n`, center at index 0, leaves `1..n`.
/// * `Path(n)`: `P_n`, edges `i - (i+1)`.
/// * `Cycle(n)`: `C_n`, the path plus the edge `(n-1) - 0`.
/// * `Hypercube(d)`: `Q_d` on `2^d` vertices, `u ~ v` iff their binary
///   labels differ in exactly one bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "family", content = "size")]
pub enum Family {
    Complete(usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
    Hypercube(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `family:size`, e.g. `star:5` or `hypercube:3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, size) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected family:size, got {s:?}")))?;
        let size: usize = size
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad size in {s:?}")))?;
        match name.trim() {
            "complete" | "K" => Ok(Family::Complete(size)),
            "star" | "S" => Ok(Family::Star(size)),
            "path" | "P" => Ok(Family::Path(size)),
            "cycle" | "C" => Ok(Family::Cycle(size)),
            "hypercube" | "Q" => Ok(Family::Hypercube(size)),
            other => Err(Error::Parse(format!("unknown graph family {other:?}"))),
        }
    }
}

/// Membership over the vertex range of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { members: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        Self { members: vec![true; n] }
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in indices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.members[v] = true;
        }
        Ok(set)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    /// Size of the ambient vertex range.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

/// Diameter, the set of diameter-realizing vertices and all eccentricities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    pub diameter: usize,
    pub omega: VertexSet,
    pub eccentricities: Vec<usize>,
}

/// A simple connected finite graph with precomputed hop distances.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    dist: Vec<usize>,
    // order[v]: all vertices sorted by (dist from v, index).
    order: Vec<Vec<usize>>,
    // ball_sizes[v][r] = |B(v, r)| for r in 0..=ecc(v).
    ball_sizes: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds one of the named families.
    pub fn build_named(family: Family) -> Result<Self> {
        match family {
            Family::Complete(n) => {
                require_size(n, 2, "complete")?;
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect::<Vec<_>>();
                Self::from_edge_list(n, &edges)
            }
            Family::Star(n) => {
                require_size(n, 2, "star")?;
                let edges = (1..n).map(|v| (0, v)).collect::<Vec<_>>();
                Self::from_edge_list(n, &edges)
            }
            Family::Path(n) => {
                require_size(n, 2, "path")?;
                let edges = (0..n - 1).map(|v| (v, v + 1)).collect::<Vec<_>>();
                Self::from_edge_list(n, &edges)
            }
            Family::Cycle(n) => {
                // C_2 would need a doubled edge.
                require_size(n, 3, "cycle")?;
                let edges = (0..n).map(|v| (v, (v + 1) % n)).collect::<Vec<_>>();
                Self::from_edge_list(n, &edges)
            }
            Family::Hypercube(d) => {
                require_size(d, 1, "hypercube")?;
                if d > 16 {
                    return Err(invalid(format!("hypercube dimension {d} is too large")));
                }
                let n = 1usize << d;
                let edges = (0..n)
                    .flat_map(|u| {
                        (0..d)
                            .map(move |b| (u, u ^ (1 << b)))
                            .filter(|&(u, v)| u < v)
                    })
                    .collect::<Vec<_>>();
                Self::from_edge_list(n, &edges)
            }
        }
    }

    /// Validates an edge list and computes the distance table by BFS.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(invalid("a graph needs at least one vertex"));
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let edges: Vec<_> = seen.into_iter().collect();

        let mut dist = vec![usize::MAX; n * n];
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adjacency[u] {
                    if row[w] == usize::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if let Some(unreached) = row.iter().position(|&d| d == usize::MAX) {
                // Connectivity is decided by the first BFS.
                return Err(Error::Disconnected(unreached));
            }
        }

        let mut order = Vec::with_capacity(n);
        let mut ball_sizes = Vec::with_capacity(n);
        for v in 0..n {
            let row = &dist[v * n..(v + 1) * n];
            let mut ord: Vec<usize> = (0..n).collect();
            ord.sort_by_key(|&u| (row[u], u));
            let ecc = row.iter().copied().max().unwrap_or(0);
            let mut sizes = vec![0usize; ecc + 1];
            for &d in row {
                sizes[d] += 1;
            }
            for r in 1..=ecc {
                sizes[r] += sizes[r - 1];
            }
            order.push(ord);
            ball_sizes.push(sizes);
        }

        Ok(Self {
            n,
            edges,
            adjacency,
            dist,
            order,
            ball_sizes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    pub fn eccentricity(&self, v: usize) -> usize {
        self.ball_sizes[v].len() - 1
    }

    /// Vertices sorted by distance from `v` (ties by index).
    pub fn distance_order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// `|B(v, r)|` for `r = 0..=eccentricity(v)`.
    pub fn ball_sizes(&self, v: usize) -> &[usize] {
        &self.ball_sizes[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `B(v, r)`: vertices at hop distance at most `r` from `v`.
    pub fn ball(&self, v: usize, r: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let sizes = &self.ball_sizes[v];
        let count = sizes[r.min(sizes.len() - 1)];
        VertexSet::from_indices(self.n, self.order[v][..count].iter().copied())
    }

    pub fn geometry(&self) -> Geometry {
        let eccentricities: Vec<usize> = (0..self.n).map(|v| self.eccentricity(v)).collect();
        let diameter = eccentricities.iter().copied().max().unwrap_or(0);
        let mut omega = VertexSet::empty(self.n);
        for (v, &e) in eccentricities.iter().enumerate() {
            if e == diameter {
                omega.members[v] = true;
            }
        }
        Geometry {
            diameter,
            omega,
            eccentricities,
        }
    }

    pub fn diameter(&self) -> usize {
        (0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0)
    }

    /// Minimum-degree vertex of `subset`, smallest index on ties.
    pub fn min_degree_vertex(&self, subset: &VertexSet) -> Result<usize> {
        if subset.universe() != self.n {
            return Err(invalid(format!(
                "vertex set over {} vertices used with a graph on {}",
                subset.universe(),
                self.n
            )));
        }
        subset
            .iter()
            .min_by_key(|&v| (self.degree(v), v))
            .ok_or(Error::EmptySubset)
    }

    /// Parses the text format: a header line `n m`, then `m` lines `u v`.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line \"n m\"".into()))?;
        let [n, m] = parse_pair(header)?;
        let mut pairs = Vec::with_capacity(m);
        for line in lines.by_ref().take(m) {
            let [u, v] = parse_pair(line)?;
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(Error::Parse(format!(
                "header announces {m} edges, found {}",
                pairs.len()
            )));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        Self::from_edge_list(n, &pairs)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn require_size(size: usize, min: usize, what: &str) -> Result<()> {
    if size < min {
        Err(invalid(format!("{what} graph needs size >= {min}, got {size}")))
    } else {
        Ok(())
    }
}

fn parse_pair(line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?} in line {line:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok([a?, b?]),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        let pairs: Vec<_> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edge_list(raw.n, &pairs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize) -> Graph {
        Graph::build_named(Family::Star(n)).unwrap()
    }

    // Distances by repeated boolean squaring of (I + A).
    fn dist_by_squaring(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut reach: Vec<bool> = (0..n * n)
            .map(|i| i / n == i % n || g.has_edge(i / n, i % n))
            .collect();
        let mut dist: Vec<usize> = reach.iter().map(|&b| if b { 1 } else { usize::MAX }).collect();
        for v in 0..n {
            dist[v * n + v] = 0;
        }
        for step in 2..=n {
            let prev = reach.clone();
            for u in 0..n {
                for v in 0..n {
                    if !prev[u * n + v] {
                        let hit = (0..n).any(|w| prev[u * n + w] && (w == v || g.has_edge(w, v)));
                        if hit {
                            reach[u * n + v] = true;
                            dist[u * n + v] = step;
                        }
                    }
                }
            }
        }
        dist
    }

    #[test]
    fn complete_graph_has_all_pairs() {
        let g = Graph::build_named(Family::Complete(4)).unwrap();
        assert_eq!(g.edges().len(), 6);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.dist(u, v), usize::from(u != v));
            }
        }
    }

    #[test]
    fn star_is_centered_at_zero() {
        let g = star(4);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.dist(1, 2), 2);
    }

    #[test]
    fn hypercube_three() {
        let g = Graph::build_named(Family::Hypercube(3)).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.edges().len(), 12);
        assert_eq!(g.diameter(), 3);
    }

    #[test]
    fn builder_rejects_small_sizes() {
        for fam in [
            Family::Complete(1),
            Family::Star(1),
            Family::Path(0),
            Family::Cycle(2),
            Family::Hypercube(0),
        ] {
            assert!(matches!(Graph::build_named(fam), Err(Error::InvalidParameter(_))), "{fam}");
        }
    }

    #[test]
    fn edge_list_validation() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.dist(0, 2), 2);
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1)]).unwrap_err(),
            Error::Disconnected(2)
        );
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.diameter(), 2);
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 1)]).unwrap_err(),
            Error::DuplicateEdge(1, 2)
        );
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn balls_in_star_and_cycle() {
        let g = star(4);
        assert_eq!(g.ball(0, 1).unwrap().to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(g.ball(2, 1).unwrap().to_vec(), vec![0, 2]);
        let c5 = Graph::build_named(Family::Cycle(5)).unwrap();
        for v in 0..5 {
            assert_eq!(c5.ball(v, 2).unwrap().len(), 5);
        }
        assert!(g.ball(7, 0).is_err());
    }

    #[test]
    fn geometry_examples() {
        let k5 = Graph::build_named(Family::Complete(5)).unwrap().geometry();
        assert_eq!(k5.diameter, 1);
        assert_eq!(k5.omega.len(), 5);
        let s6 = star(6).geometry();
        assert_eq!(s6.diameter, 2);
        assert_eq!(s6.omega.to_vec(), vec![1, 2, 3, 4, 5]);
        let p4 = Graph::build_named(Family::Path(4)).unwrap().geometry();
        assert_eq!(p4.diameter, 3);
        assert_eq!(p4.omega.to_vec(), vec![0, 3]);
        assert_eq!(p4.eccentricities, vec![3, 2, 2, 3]);
    }

    #[test]
    fn min_degree_vertex_examples() {
        let s5 = star(5);
        let omega = s5.geometry().omega;
        assert_eq!(s5.min_degree_vertex(&omega).unwrap(), 1);
        let k4 = Graph::build_named(Family::Complete(4)).unwrap();
        assert_eq!(k4.min_degree_vertex(&VertexSet::full(4)).unwrap(), 0);
        let p3 = Graph::build_named(Family::Path(3)).unwrap();
        let v = p3.min_degree_vertex(&VertexSet::full(3)).unwrap();
        assert_eq!((v, p3.degree(v)), (0, 1));
        assert_eq!(
            p3.min_degree_vertex(&VertexSet::empty(3)).unwrap_err(),
            Error::EmptySubset
        );
    }

    #[test]
    fn bfs_matches_repeated_squaring() {
        let graphs = [
            Graph::build_named(Family::Star(6)).unwrap(),
            Graph::build_named(Family::Cycle(7)).unwrap(),
            Graph::build_named(Family::Path(8)).unwrap(),
            Graph::build_named(Family::Hypercube(3)).unwrap(),
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            let oracle = dist_by_squaring(g);
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(g.dist(u, v), oracle[u * g.n() + v]);
                }
            }
        }
    }

    #[test]
    fn ball_chain_and_metric_properties() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (6, 2)]).unwrap();
        let geo = g.geometry();
        for v in 0..g.n() {
            assert_eq!(g.ball(v, 1).unwrap().len(), g.degree(v) + 1);
            let mut prev = g.ball(v, 0).unwrap();
            for r in 1..=geo.eccentricities[v] + 2 {
                let b = g.ball(v, r).unwrap();
                assert!(prev.is_subset(&b));
                if r >= geo.eccentricities[v] {
                    assert_eq!(b.len(), g.n());
                } else {
                    assert!(b.len() < g.n());
                }
                prev = b;
            }
            for u in 0..g.n() {
                assert_eq!(g.dist(u, v), g.dist(v, u));
                assert_eq!(g.dist(u, v) == 0, u == v);
                for w in 0..g.n() {
                    assert!(g.dist(u, w) <= g.dist(u, v) + g.dist(v, w));
                }
            }
        }
        for v in geo.omega.iter() {
            assert_eq!(geo.eccentricities[v], geo.diameter);
        }
    }

    #[test]
    fn text_and_json_formats() {
        let g = Graph::build_named(Family::Cycle(5)).unwrap();
        let text = g.to_edge_list_text();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[0,1]]}"#).is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn family_parsing() {
        assert_eq!("star:5".parse::<Family>().unwrap(), Family::Star(5));
        assert_eq!("hypercube:3".parse::<Family>().unwrap(), Family::Hypercube(3));
        assert!("blob:3".parse::<Family>().is_err());
        assert_eq!(Family::Cycle(6).to_string(), "cycle:6");
    }
}
