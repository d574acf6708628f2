//! Small connected graphs up to isomorphism, the disjoint-path hypothesis
//! behind the `1 - 1/n` variation floor, and scans of `C_{G,p}` over all
//! connected graphs of a given order.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::best_delta_variation_ratio;
use crate::error::{check_p, invalid, Error, Result};
use crate::graph::Graph;
use crate::search::{ascent_variation, grid_oracle_variation, SearchConfig, SearchResult};

/// Largest order accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_ORDER: usize = 7;
/// Largest order accepted by [`scan_variation_constants`].
pub const MAX_SCAN_ORDER: usize = 6;
/// Orders at which the variation scan also runs the grid oracle.
pub const GRID_SCAN_ORDER: usize = 4;

/// Index of the pair `(i, j)`, `i < j`, in column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical form of a graph on at most [`MAX_ENUMERATION_ORDER`] vertices:
/// the lexicographically smallest upper-triangle adjacency bit string over
/// all vertex relabelings, bits in column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    /// Bit string with the first pair in the most significant position.
    bits: u32,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Bit string packed big-endian, padded with zeros to whole bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let len = pair_count(self.n());
        let padded = (self.bits as u64) << (len.div_ceil(8) * 8 - len);
        let bytes = padded.to_be_bytes();
        bytes[8 - len.div_ceil(8)..].to_vec()
    }

    /// Edges of the canonical relabeling.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let len = pair_count(n);
        let mut out = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - pair_index(i, j)) & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = pair_count(self.n());
        write!(f, "{}:", self.n)?;
        for k in (0..len).rev() {
            write!(f, "{}", self.bits >> k & 1)?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for CanonicalCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (n, bits) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("canonical code {s:?} lacks 'n:'")))?;
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad order in {s:?}")))?;
        if n > MAX_ENUMERATION_ORDER || bits.len() != pair_count(n) {
            return Err(Error::Parse(format!("code {s:?} does not fit {n} vertices")));
        }
        let value = if bits.is_empty() {
            0
        } else {
            u32::from_str_radix(bits, 2).map_err(|_| Error::Parse(format!("bad bits in {s:?}")))?
        };
        Ok(Self { n: n as u8, bits: value })
    }
}

/// Adjacency as bit rows, for graphs that need not be connected.
#[derive(Clone, Copy)]
struct Adjacency {
    n: usize,
    rows: [u8; MAX_ENUMERATION_ORDER],
}

impl Adjacency {
    fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut rows = [0u8; MAX_ENUMERATION_ORDER];
        for (u, v) in pairs {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Self { n, rows }
    }

    fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let full = (1u16 << self.n) - 1;
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= self.rows[v] as u16;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Depth-first search over relabelings: position `j` receives a vertex,
    /// which fixes the bits of column `j`. A branch is abandoned as soon as
    /// its prefix exceeds the best complete string.
    fn canonical(&self) -> CanonicalCode {
        let n = self.n;
        let len = pair_count(n);
        let mut best = u32::MAX;
        let mut placed = [0usize; MAX_ENUMERATION_ORDER];
        self.canon_dfs(0, 0, 0, &mut placed, &mut best, len);
        CanonicalCode {
            n: n as u8,
            bits: if len == 0 { 0 } else { best },
        }
    }

    fn canon_dfs(&self, j: usize, used: u8, prefix: u32, placed: &mut [usize], best: &mut u32, len: usize) {
        let n = self.n;
        if j == n {
            *best = (*best).min(prefix);
            return;
        }
        let bits_before = pair_count(j);
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let mut next = prefix;
            for &u in &placed[..j] {
                next = next << 1 | self.has(u, v) as u32;
            }
            // Compare the prefix against the same-length prefix of best.
            let bits_now = bits_before + j;
            if bits_now > 0 && *best != u32::MAX && next > *best >> (len - bits_now) {
                continue;
            }
            placed[j] = v;
            self.canon_dfs(j + 1, used | 1 << v, next, placed, best, len);
        }
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Budget(format!(
            "enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Canonical code of `g`.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    check_order(g.n())?;
    Ok(Adjacency::from_pairs(g.n(), g.edges().iter().copied()).canonical())
}

/// Every connected simple graph on `n` vertices exactly once up to
/// isomorphism, as canonical relabelings sorted by code. Built by adding
/// one edge at a time to canonical representatives.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_codes(n)?
        .into_iter()
        .map(|code| Graph::from_edge_list(n, &code.edges()).expect("connected canonical form"))
        .collect())
}

/// Canonical codes of the connected graphs on `n` vertices, sorted.
pub fn enumerate_codes(n: usize) -> Result<Vec<CanonicalCode>> {
    check_order(n)?;
    if n < 2 {
        return Err(invalid(format!("enumeration needs n >= 2, got {n}")));
    }
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(Adjacency::from_pairs(n, []).canonical());
    let mut connected = Vec::new();
    for _ in 0..pair_count(n) {
        let reps: Vec<Adjacency> = level
            .iter()
            .map(|c| Adjacency::from_pairs(n, c.edges()))
            .collect();
        let next: BTreeSet<CanonicalCode> = reps
            .par_iter()
            .flat_map_iter(|adj| {
                let adj = *adj;
                (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v))).filter_map(move |(u, v)| {
                    if adj.has(u, v) {
                        return None;
                    }
                    let mut grown = adj;
                    grown.rows[u] |= 1 << v;
                    grown.rows[v] |= 1 << u;
                    Some(grown.canonical())
                })
            })
            .collect();
        for code in &next {
            if Adjacency::from_pairs(n, code.edges()).connected() {
                connected.push(*code);
            }
        }
        level = next;
    }
    connected.sort_unstable();
    Ok(connected)
}

/// How "disjoint paths" is read in [`check_prop43_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Disjointness {
    /// No shared vertices apart from the endpoints.
    #[default]
    Vertex,
    /// No shared edges.
    Edge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop43Witness {
    /// Minimum-degree vertex among the diameter-realizing vertices.
    pub a: usize,
    /// A vertex with `a` farthest from it and `k` disjoint paths to `a`.
    pub x: usize,
    pub k: usize,
}

/// `Some(k)` when the smallest-degree diameter vertex `a` (degree `k`) has
/// a vertex `x` from which `a` is farthest and `k` internally
/// vertex-disjoint `a`-`x` paths.
pub fn check_prop43(g: &Graph) -> Option<usize> {
    check_prop43_with(g, Disjointness::Vertex).map(|w| w.k)
}

pub fn check_prop43_with(g: &Graph, mode: Disjointness) -> Option<Prop43Witness> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let omega = g.geometry().omega;
    let a = g.min_degree_vertex(&omega).ok()?;
    let k = g.degree(a);
    (0..n)
        .filter(|&x| x != a && (0..n).all(|y| g.dist(x, a) >= g.dist(x, y)))
        .find(|&x| disjoint_paths(g, a, x, mode, k) >= k)
        .map(|x| Prop43Witness { a, x, k })
}

/// Maximum number of disjoint `s`-`t` paths, stopping once `want` is reached.
pub fn disjoint_paths(g: &Graph, s: usize, t: usize, mode: Disjointness, want: usize) -> usize {
    let n = g.n();
    // Node v splits into v_in = 2v and v_out = 2v + 1.
    let nodes = 2 * n;
    let mut cap = vec![0i32; nodes * nodes];
    let idx = |u: usize, v: usize| u * nodes + v;
    let big = n as i32 + 1;
    for v in 0..n {
        let through = if v == s || v == t || mode == Disjointness::Edge {
            big
        } else {
            1
        };
        cap[idx(2 * v, 2 * v + 1)] = through;
    }
    for &(u, v) in g.edges() {
        cap[idx(2 * u + 1, 2 * v)] = 1;
        cap[idx(2 * v + 1, 2 * u)] = 1;
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < want {
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..nodes {
                if parent[v] == usize::MAX && cap[idx(u, v)] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[idx(u, v)] -= 1;
            cap[idx(v, u)] += 1;
            v = u;
        }
        flow += 1;
    }
    flow
}

/// One graph of the atlas with whatever was computed for it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtlasRecord {
    pub graph: Graph,
    pub canonical_code: CanonicalCode,
    #[serde(default)]
    pub norm_estimate: Option<SearchResult>,
    #[serde(default)]
    pub variation_estimate: Option<SearchResult>,
    /// Largest `Var_p(M delta_v) / Var_p(delta_v)`, a certified lower bound.
    #[serde(default)]
    pub delta_floor: Option<f64>,
    pub prop43_k: Option<usize>,
}

/// Records with the disjoint-path check for every connected graph on `n`
/// vertices.
pub fn catalog(n: usize) -> Result<Vec<AtlasRecord>> {
    let codes = enumerate_codes(n)?;
    Ok(codes
        .into_par_iter()
        .map(|code| {
            let graph = Graph::from_edge_list(n, &code.edges()).expect("connected canonical form");
            let prop43_k = check_prop43(&graph);
            AtlasRecord {
                graph,
                canonical_code: code,
                norm_estimate: None,
                variation_estimate: None,
                delta_floor: None,
                prop43_k,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariationScan {
    pub n: usize,
    pub p: f64,
    /// Smallest estimate of `C_{G,p}` over the graphs.
    pub c_hat: f64,
    pub argmin: CanonicalCode,
    /// Largest estimate of `C_{G,p}` over the graphs.
    pub big_c_hat: f64,
    pub argmax: CanonicalCode,
    /// Whether every estimate includes an exhaustive grid search.
    pub grid_backed: bool,
    pub records: Vec<AtlasRecord>,
}

/// Estimates `C_{G,p}` for every connected graph on `n` vertices by
/// coordinate ascent (and the grid oracle for `n <= 4`), reporting the
/// smallest and largest estimates.
pub fn scan_variation_constants(n: usize, p: f64, cfg: &SearchConfig) -> Result<VariationScan> {
    check_p(p)?;
    cfg.validate()?;
    if n > MAX_SCAN_ORDER {
        return Err(Error::Budget(format!("variation scans are limited to n <= {MAX_SCAN_ORDER}, got {n}")));
    }
    let grid_backed = n <= GRID_SCAN_ORDER;
    let codes = enumerate_codes(n)?;
    let records: Vec<AtlasRecord> = codes
        .into_par_iter()
        .map(|code| -> Result<AtlasRecord> {
            let graph = Graph::from_edge_list(n, &code.edges())?;
            let mut est = ascent_variation(&graph, p, cfg)?;
            if grid_backed {
                let grid = grid_oracle_variation(&graph, p, cfg.grid_step)?;
                let evaluations = est.evaluations + grid.evaluations;
                if grid.best_value > est.best_value {
                    est = grid;
                }
                est.evaluations = evaluations;
            }
            let (floor, _) = best_delta_variation_ratio(&graph, p)?;
            let prop43_k = check_prop43(&graph);
            Ok(AtlasRecord {
                graph,
                canonical_code: code,
                norm_estimate: None,
                variation_estimate: Some(est),
                delta_floor: Some(floor),
                prop43_k,
            })
        })
        .collect::<Result<_>>()?;
    let value = |r: &AtlasRecord| r.variation_estimate.as_ref().map_or(f64::NAN, |e| e.best_value);
    let mut lo = 0;
    let mut hi = 0;
    for (i, r) in records.iter().enumerate() {
        if value(r) < value(&records[lo]) {
            lo = i;
        }
        if value(r) > value(&records[hi]) {
            hi = i;
        }
    }
    Ok(VariationScan {
        n,
        p,
        c_hat: value(&records[lo]),
        argmin: records[lo].canonical_code,
        big_c_hat: value(&records[hi]),
        argmax: records[hi].canonical_code,
        grid_backed,
        records,
    })
}

impl VariationScan {
    pub const CSV_HEADER: &'static str = "n,p,c_hat,C_hat,argmin,argmax";

    pub fn summary_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.p, self.c_hat, self.big_c_hat, self.argmin, self.argmax
        )
    }
}
