//! The centered maximal operator `M_G` on a graph and the `p`-norm and
//! `p`-variation functionals.

use serde::{Deserialize, Serialize};

use crate::error::{check_p, Error, Result};
use crate::graph::Graph;

/// Absolute tolerance used when comparing ball averages.
pub const AVERAGE_TIE_TOL: f64 = 1e-12;

/// Real values on the vertex set of a graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexFunction {
    pub values: Vec<f64>,
}

impl VertexFunction {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|x| !x.is_finite()) {
            return Err(Error::BadValue(i));
        }
        Ok(Self { values })
    }

    pub fn constant(n: usize, c: f64) -> Self {
        Self { values: vec![c; n] }
    }

    /// Dirac delta at `v` on `n` vertices.
    pub fn delta(n: usize, v: usize) -> Self {
        let mut values = vec![0.0; n];
        values[v] = 1.0;
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean_abs(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum::<f64>() / self.values.len() as f64
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    fn check_against(&self, g: &Graph) -> Result<()> {
        if self.values.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                got: self.values.len(),
            });
        }
        if let Some(i) = self.values.iter().position(|x| !x.is_finite()) {
            return Err(Error::BadValue(i));
        }
        Ok(())
    }
}

impl From<Vec<f64>> for VertexFunction {
    fn from(values: Vec<f64>) -> Self {
        Self { values }
    }
}

/// `M_G f` together with the smallest radius attaining it at each vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaximalProfile {
    pub values: Vec<f64>,
    pub best_radius: Vec<usize>,
}

/// Evaluates `M_G f(v) = max_r avg_{B(v,r)} |f|` at every vertex.
pub fn graph_maximal(g: &Graph, f: &VertexFunction) -> Result<MaximalProfile> {
    f.check_against(g)?;
    let n = g.n();
    let mut values = Vec::with_capacity(n);
    let mut best_radius = Vec::with_capacity(n);
    let mut averages = Vec::new();
    for v in 0..n {
        averages.clear();
        let order = g.distance_order(v);
        let mut sum = 0.0;
        let mut taken = 0;
        for &size in g.ball_sizes(v) {
            for &u in &order[taken..size] {
                sum += f.values[u].abs();
            }
            taken = size;
            averages.push(sum / size as f64);
        }
        let best = averages.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let r = averages
            .iter()
            .position(|&a| a >= best - AVERAGE_TIE_TOL)
            .unwrap_or(0);
        values.push(best);
        best_radius.push(r);
    }
    Ok(MaximalProfile { values, best_radius })
}

/// Allocation-free `M_G |f|` for search loops; `f` must have length `n`.
pub(crate) fn maximal_into(g: &Graph, f: &[f64], out: &mut [f64]) {
    for (v, slot) in out.iter_mut().enumerate() {
        let order = g.distance_order(v);
        let mut sum = 0.0;
        let mut taken = 0;
        let mut best = f64::NEG_INFINITY;
        for &size in g.ball_sizes(v) {
            for &u in &order[taken..size] {
                sum += f[u].abs();
            }
            taken = size;
            best = best.max(sum / size as f64);
        }
        *slot = best;
    }
}

/// `(sum |f|^p)^(1/p)`, a quasi-norm for `p < 1`.
pub fn p_norm(f: &VertexFunction, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(power_sum(&f.values, p).powf(1.0 / p))
}

/// `(sum over edges |f(u) - f(v)|^p)^(1/p)`.
pub fn p_variation(g: &Graph, f: &VertexFunction, p: f64) -> Result<f64> {
    check_p(p)?;
    f.check_against(g)?;
    Ok(variation_power_sum(g, &f.values, p).powf(1.0 / p))
}

pub(crate) fn power_sum(values: &[f64], p: f64) -> f64 {
    values.iter().map(|x| pow_abs(*x, p)).sum()
}

pub(crate) fn variation_power_sum(g: &Graph, values: &[f64], p: f64) -> f64 {
    g.edges()
        .iter()
        .map(|&(u, v)| pow_abs(gap(values[u], values[v]), p))
        .sum()
}

#[inline]
/// `|a - b|`, or zero when the difference is within rounding of the
/// operands. Below `p = 1` a spurious gap of one ulp would otherwise
/// contribute `ulp^p`, which is far from negligible.
pub(crate) fn gap(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    if d <= 4.0 * f64::EPSILON * a.abs().max(b.abs()) {
        0.0
    } else {
        d
    }
}

pub(crate) fn pow_abs(x: f64, p: f64) -> f64 {
    let a = x.abs();
    if p == 1.0 {
        a
    } else if p == 2.0 {
        a * a
    } else if a == 0.0 {
        0.0
    } else {
        a.powf(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use proptest::prelude::*;

    fn graph(f: Family) -> Graph {
        Graph::build_named(f).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-12, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn star_example() {
        let s3 = graph(Family::Star(3));
        let prof = graph_maximal(&s3, &vec![1.0, 2.0, 0.5].into()).unwrap();
        close(&prof.values, &[7.0 / 6.0, 2.0, 7.0 / 6.0]);
        assert_eq!(prof.best_radius, vec![1, 0, 2]);
    }

    #[test]
    fn complete_delta() {
        let k4 = graph(Family::Complete(4));
        let prof = graph_maximal(&k4, &VertexFunction::delta(4, 0)).unwrap();
        close(&prof.values, &[1.0, 0.25, 0.25, 0.25]);
        assert_eq!(prof.best_radius, vec![0, 1, 1, 1]);
    }

    #[test]
    fn constants_are_fixed_and_use_radius_zero() {
        for g in [graph(Family::Cycle(6)), graph(Family::Hypercube(3)), graph(Family::Star(5))] {
            let prof = graph_maximal(&g, &VertexFunction::constant(g.n(), 2.5)).unwrap();
            close(&prof.values, &vec![2.5; g.n()]);
            assert!(prof.best_radius.iter().all(|&r| r == 0));
        }
    }

    #[test]
    fn signed_input_uses_absolute_values() {
        let p4 = graph(Family::Path(4));
        let a = graph_maximal(&p4, &vec![-1.0, 2.0, -3.0, 0.5].into()).unwrap();
        let b = graph_maximal(&p4, &vec![1.0, 2.0, 3.0, 0.5].into()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn length_mismatch_is_reported() {
        let k3 = graph(Family::Complete(3));
        assert_eq!(
            graph_maximal(&k3, &vec![1.0, 2.0].into()).unwrap_err(),
            Error::LengthMismatch { expected: 3, got: 2 }
        );
        assert!(VertexFunction::new(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn norm_examples() {
        assert!((p_norm(&vec![3.0, 4.0].into(), 2.0).unwrap() - 5.0).abs() < 1e-15);
        for p in [0.3, 1.0, 2.7] {
            assert!((p_norm(&VertexFunction::delta(5, 2), p).unwrap() - 1.0).abs() < 1e-15);
        }
        assert!((p_norm(&vec![1.0; 4].into(), 0.5).unwrap() - 16.0).abs() < 1e-12);
        assert!(p_norm(&vec![1.0].into(), 0.0).is_err());
        assert!(p_norm(&vec![1.0].into(), -1.0).is_err());
    }

    #[test]
    fn variation_examples() {
        let k4 = graph(Family::Complete(4));
        assert!((p_variation(&k4, &VertexFunction::delta(4, 0), 1.0).unwrap() - 3.0).abs() < 1e-15);
        let s3 = graph(Family::Star(3));
        let v = p_variation(&s3, &vec![1.0, 2.0, 0.5].into(), 2.0).unwrap();
        assert!((v - 1.25f64.sqrt()).abs() < 1e-15);
        assert_eq!(p_variation(&k4, &VertexFunction::constant(4, 3.0), 0.7).unwrap(), 0.0);
        assert!(p_variation(&k4, &VertexFunction::constant(4, 3.0), 0.0).is_err());
    }

    fn structural_complete(f: &[f64]) -> Vec<f64> {
        let mean = f.iter().map(|x| x.abs()).sum::<f64>() / f.len() as f64;
        f.iter().map(|x| x.abs().max(mean)).collect()
    }

    fn structural_star(f: &[f64]) -> Vec<f64> {
        let mean = f.iter().map(|x| x.abs()).sum::<f64>() / f.len() as f64;
        let c = f[0].abs();
        let mut out = vec![c.max(mean)];
        for x in &f[1..] {
            let x = x.abs();
            out.push(x.max((x + c) / 2.0).max(mean));
        }
        out
    }

    fn test_graphs() -> Vec<Graph> {
        vec![
            graph(Family::Complete(5)),
            graph(Family::Star(6)),
            graph(Family::Path(6)),
            graph(Family::Cycle(6)),
            graph(Family::Hypercube(3)),
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ]
    }

    fn values(n: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-10.0f64..10.0, n)
    }

    proptest! {
        #[test]
        fn profile_bounds(gi in 0usize..6, raw in values(8)) {
            let g = &test_graphs()[gi];
            let f = VertexFunction::from(raw[..g.n()].to_vec());
            let prof = graph_maximal(g, &f).unwrap();
            let max_abs = f.values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            let mean = f.mean_abs();
            for v in 0..g.n() {
                prop_assert!(prof.values[v] >= f.values[v].abs() - 1e-12);
                prop_assert!(prof.values[v] <= max_abs + 1e-12);
                prop_assert!(prof.values[v] >= mean - 1e-12);
            }
        }

        #[test]
        fn homogeneity(gi in 0usize..6, raw in values(8), c in -5.0f64..5.0) {
            let g = &test_graphs()[gi];
            let f = VertexFunction::from(raw[..g.n()].to_vec());
            let scaled = VertexFunction::from(f.values.iter().map(|x| c * x).collect::<Vec<_>>());
            let a = graph_maximal(g, &f).unwrap().values;
            let b = graph_maximal(g, &scaled).unwrap().values;
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((c.abs() * x - y).abs() <= 1e-12 * (1.0 + y.abs()));
            }
        }

        #[test]
        fn monotone_and_sublinear(gi in 0usize..6, raw in values(8), bump in prop::collection::vec(0.0f64..3.0, 8)) {
            let g = &test_graphs()[gi];
            let n = g.n();
            let f: Vec<f64> = raw[..n].iter().map(|x| x.abs()).collect();
            let h: Vec<f64> = f.iter().zip(&bump).map(|(x, b)| x + b).collect();
            let mf = graph_maximal(g, &f.clone().into()).unwrap().values;
            let mh = graph_maximal(g, &h.clone().into()).unwrap().values;
            let bumpf: Vec<f64> = bump[..n].to_vec();
            let mb = graph_maximal(g, &bumpf.into()).unwrap().values;
            for v in 0..n {
                prop_assert!(mf[v] <= mh[v] + 1e-12);
                prop_assert!(mh[v] <= mf[v] + mb[v] + 1e-12);
            }
        }

        #[test]
        fn shift_covariance(gi in 0usize..6, raw in prop::collection::vec(0.0f64..10.0, 8), t in 0.0f64..1.0) {
            let g = &test_graphs()[gi];
            let f: Vec<f64> = raw[..g.n()].to_vec();
            let c = t * f.iter().copied().fold(f64::INFINITY, f64::min);
            let shifted: Vec<f64> = f.iter().map(|x| x - c).collect();
            let a = graph_maximal(g, &f.into()).unwrap().values;
            let b = graph_maximal(g, &shifted.into()).unwrap().values;
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - c - y).abs() < 1e-11);
            }
        }

        #[test]
        fn structural_oracles(raw in values(7)) {
            let k = graph(Family::Complete(7));
            let s = graph(Family::Star(7));
            let a = graph_maximal(&k, &raw.clone().into()).unwrap().values;
            let b = graph_maximal(&s, &raw.clone().into()).unwrap().values;
            let ka = structural_complete(&raw);
            let sb = structural_star(&raw);
            for v in 0..7 {
                prop_assert!((a[v] - ka[v]).abs() < 1e-12);
                prop_assert!((b[v] - sb[v]).abs() < 1e-12);
            }
        }

        #[test]
        fn norm_triangle_and_variation_additivity(x in values(6), y in values(6), p in 1.0f64..4.0) {
            let fx = VertexFunction::from(x.clone());
            let fy = VertexFunction::from(y.clone());
            let sum = VertexFunction::from(x.iter().zip(&y).map(|(a, b)| a + b).collect::<Vec<_>>());
            let lhs = p_norm(&sum, p).unwrap();
            prop_assert!(lhs <= p_norm(&fx, p).unwrap() + p_norm(&fy, p).unwrap() + 1e-12);

            let g = graph(Family::Cycle(6));
            let total = p_variation(&g, &fx, p).unwrap().powf(p);
            let (first, second) = g.edges().split_at(3);
            let part = |edges: &[(usize, usize)]| -> f64 {
                edges.iter().map(|&(u, v)| (x[u] - x[v]).abs().powf(p)).sum()
            };
            prop_assert!((total - part(first) - part(second)).abs() < 1e-9 * (1.0 + total));
        }
    }

    #[test]
    fn fast_path_agrees() {
        for g in test_graphs() {
            let f: Vec<f64> = (0..g.n()).map(|i| ((i * 7 + 3) % 5) as f64 - 1.5).collect();
            let mut out = vec![0.0; g.n()];
            maximal_into(&g, &f, &mut out);
            assert_eq!(out, graph_maximal(&g, &f.into()).unwrap().values);
        }
    }
}
