//! Closed-form sharp constants and bounds for stars and complete graphs,
//! and numerical evaluation of the `p -> infinity` limits of
//! `||M_{S_n}||_p^p` and `||M_{K_n}||_p^p`.

use serde::{Deserialize, Serialize};

use crate::error::{check_p, invalid, Result};
use crate::graph::Graph;
use crate::maximal::{graph_maximal, p_variation, VertexFunction};
use crate::optimize::{doubling_bracket, golden_max, scan_then_golden, PRESCAN_POINTS};

/// Exponent above which `C_{K_n,p} = 1 - 1/n` is known: `log 4 / log 6`.
pub fn kn_variation_threshold() -> f64 {
    4f64.ln() / 6f64.ln()
}

/// A reported constant, serialized as one JSON row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantReport {
    pub name: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<f64>,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub attaining_params: Option<serde_json::Value>,
    pub exact: bool,
}

fn require_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(invalid(format!("n must be at least {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn require_p_at_least_one(p: f64) -> Result<()> {
    check_p(p)?;
    if p < 1.0 {
        return Err(invalid(format!("p must be at least 1, got {p}")));
    }
    Ok(())
}

/// The bounds `1 + (n-1)/2^p <= ||M_{S_n}||_p^p <= (n+5)/2`.
pub fn soria_tradacete_star_bounds(n: usize, p: f64) -> Result<(f64, f64)> {
    require_n(n, 2)?;
    require_p_at_least_one(p)?;
    let lower = 1.0 + (n - 1) as f64 * 2f64.powf(-p);
    Ok((lower, (n as f64 + 5.0) / 2.0))
}

/// Finite-`p` lower bound on `||M_{K_n}||_p^p` from the function equal to
/// `(n a^{1/p} - (n-k))/k` on `k` vertices and 1 elsewhere.
pub fn kn_lower_bound(n: usize, p: f64, alpha: f64, k: usize) -> Result<f64> {
    require_n(n, 2)?;
    require_p_at_least_one(p)?;
    if !(alpha.is_finite() && alpha > 1.0) {
        return Err(invalid(format!("alpha must exceed 1, got {alpha}")));
    }
    if k == 0 || k > n {
        return Err(invalid(format!("k must lie in 1..={n}, got {k}")));
    }
    if k == n {
        return Ok(1.0);
    }
    let (kf, rest) = (k as f64, (n - k) as f64);
    let y = (n as f64 * alpha.powf(1.0 / p) - rest) / kf;
    // Divide through by k y^p to stay finite for large p.
    let ln_yp = p * y.ln();
    let a = rest * (alpha.ln() - ln_yp).exp() / kf;
    let b = rest * (-ln_yp).exp() / kf;
    Ok((1.0 + a) / (1.0 + b))
}

/// `(k a^{n/k} + a (n-k)) / (k a^{n/k} + n - k)` evaluated stably.
pub fn kn_limit_objective(n: usize, k: usize, alpha: f64) -> f64 {
    if k >= n {
        return 1.0;
    }
    let (kf, rest) = (k as f64, (n - k) as f64);
    let ln_top = n as f64 / kf * alpha.ln();
    let a = rest * (alpha.ln() - ln_top).exp() / kf;
    let b = rest * (-ln_top).exp() / kf;
    (1.0 + a) / (1.0 + b)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KnLimit {
    pub value: f64,
    pub alpha_star: f64,
    pub k_star: usize,
}

/// `lim_{p -> inf} ||M_{K_n}||_p^p`: the supremum over `alpha > 1` and
/// `k in 1..=n` of [`kn_limit_objective`].
pub fn kn_limit(n: usize) -> Result<KnLimit> {
    require_n(n, 3)?;
    let mut best = KnLimit {
        value: 1.0,
        alpha_star: 1.0,
        k_star: n,
    };
    for k in 1..n {
        // Work in t = ln(alpha) > 0; the objective tends to 1 as t grows.
        let obj = |t: f64| kn_limit_objective(n, k, t.exp());
        let hi = doubling_bracket(obj, 0.25, 5, 700.0);
        // Log-spaced coarse scan in t, then golden-section.
        let lo_t = 1e-9f64;
        let scan = scan_then_golden(|u: f64| obj(u.exp()), lo_t.ln(), hi.ln(), PRESCAN_POINTS, 1e-13);
        let refined = golden_max(obj, (scan.x.exp() * 0.5).max(0.0), (scan.x.exp() * 1.5).min(hi), 1e-13);
        let (t, v) = if refined.value > scan.value {
            (refined.x, refined.value)
        } else {
            (scan.x.exp(), scan.value)
        };
        if v > best.value {
            best = KnLimit {
                value: v,
                alpha_star: t.exp(),
                k_star: k,
            };
        }
    }
    Ok(best)
}

/// Finite-`p` lower bound on `||M_{S_n}||_p^p` from the function with
/// center `2(1+sqrt n)^{1/p} - 1` and leaves 1.
pub fn star_lower_bound(n: usize, p: f64) -> Result<f64> {
    require_n(n, 3)?;
    require_p_at_least_one(p)?;
    let k = 1.0 + (n as f64).sqrt();
    let ln_c = p * (2.0 * k.powf(1.0 / p) - 1.0).ln();
    let rest = (n - 1) as f64;
    // (C + rest*k)/(C + rest) with C = exp(ln_c).
    let a = rest * k * (-ln_c).exp();
    let b = rest * (-ln_c).exp();
    Ok((1.0 + a) / (1.0 + b))
}

/// `p`-th power of the ratio inside the definition of
/// `||M_{S_n}||_p^*`, for `y >= 1`.
pub fn star_star_objective(n: usize, p: f64, y: f64) -> f64 {
    // Divided by y^p: (1 + (n-1)((1+y)/(2y))^p) / (1 + (n-1) y^{-p}).
    let rest = (n - 1) as f64;
    let a = rest * (p * ((1.0 + y) / (2.0 * y)).ln()).exp();
    let b = rest * (-p * y.ln()).exp();
    (1.0 + a) / (1.0 + b)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarStar {
    pub value: f64,
    pub y_star: f64,
}

/// `||M_{S_n}||_p^* = sup_{y >= 1} (star_star_objective)^{1/p}`.
pub fn star_norm_star(n: usize, p: f64) -> Result<StarStar> {
    require_n(n, 3)?;
    require_p_at_least_one(p)?;
    // Parametrize y = exp(u / p): the maximizer has y^p of order n.
    let obj = |u: f64| star_star_objective(n, p, (u / p).exp());
    let hi = doubling_bracket(obj, 1.0, 5, 700.0 * p.max(1.0));
    let m = scan_then_golden(obj, 0.0, hi, PRESCAN_POINTS, 1e-12);
    Ok(StarStar {
        value: m.value.powf(1.0 / p),
        y_star: (m.x / p).exp(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarLimit {
    pub value: f64,
    /// True for `n >= 25`, where the limit is known in closed form.
    pub exact: bool,
    /// Largest value of the constrained supremum found numerically
    /// (`n <= 24` only).
    pub constrained_sup: Option<f64>,
    pub attaining: Option<AsymptoticSearchPoint>,
}

/// A point of the constrained set used for `n <= 24`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticSearchPoint {
    pub s: usize,
    pub alpha2: f64,
    pub alpha4: f64,
}

impl AsymptoticSearchPoint {
    /// `alpha2^{2/n} alpha4^{(n-s-1)/n} > alpha2 sqrt(alpha4)`.
    pub fn feasible(&self, n: usize) -> bool {
        if self.s == 0 || self.s + 2 > n || self.alpha2 < 1.0 || !(0.0..=1.0).contains(&self.alpha4) {
            return false;
        }
        let lhs = self.alpha2.powf(2.0 / n as f64) * self.alpha4.powf((n - self.s - 1) as f64 / n as f64);
        lhs > self.alpha2 * self.alpha4.sqrt()
    }

    /// `alpha3 = alpha1^{1/n} alpha4^{(n-s-1)/n}` with `alpha1 = alpha2^2`.
    pub fn alpha3(&self, n: usize) -> f64 {
        (self.alpha2 * self.alpha2).powf(1.0 / n as f64) * self.alpha4.powf((n - self.s - 1) as f64 / n as f64)
    }

    pub fn objective(&self, n: usize) -> f64 {
        let a2 = self.alpha2;
        let s = self.s as f64;
        let rest = (n - self.s - 1) as f64;
        (a2 * a2 + s * a2 + rest * self.alpha3(n)) / (a2 * a2 + s + rest * self.alpha4)
    }
}

/// `lim_{p -> inf} ||M_{S_n}||_p^p`: `(1 + sqrt n)/2` for `n >= 25`, and for
/// smaller `n` the maximum of that value and a numerical supremum over the
/// constrained set (reported as not exact).
pub fn star_limit(n: usize) -> Result<StarLimit> {
    require_n(n, 3)?;
    let closed = (1.0 + (n as f64).sqrt()) / 2.0;
    if n >= 25 {
        return Ok(StarLimit {
            value: closed,
            exact: true,
            constrained_sup: None,
            attaining: None,
        });
    }
    let (sup, point) = constrained_star_sup(n);
    Ok(StarLimit {
        value: closed.max(sup),
        exact: false,
        constrained_sup: Some(sup),
        attaining: point,
    })
}

fn constrained_star_sup(n: usize) -> (f64, Option<AsymptoticSearchPoint>) {
    const A2_POINTS: usize = 240;
    const A4_POINTS: usize = 240;
    let a2_max = 1.2f64.powi(n as i32);
    let eval = |pt: AsymptoticSearchPoint| {
        if pt.feasible(n) {
            pt.objective(n)
        } else {
            f64::NEG_INFINITY
        }
    };
    let mut best: (f64, Option<AsymptoticSearchPoint>) = (f64::NEG_INFINITY, None);
    for s in 1..=n - 2 {
        let mut local = (f64::NEG_INFINITY, None);
        for i in 0..=A2_POINTS {
            let alpha2 = a2_max.powf(i as f64 / A2_POINTS as f64);
            for j in 0..=A4_POINTS {
                let pt = AsymptoticSearchPoint {
                    s,
                    alpha2,
                    alpha4: j as f64 / A4_POINTS as f64,
                };
                let v = eval(pt);
                if v > local.0 {
                    local = (v, Some(pt));
                }
            }
        }
        // Alternating golden-section refinement inside the box.
        if let (v0, Some(mut pt)) = local {
            let mut v = v0;
            for _ in 0..100 {
                let before = v;
                let ln_a2 = golden_max(
                    |l: f64| eval(AsymptoticSearchPoint { alpha2: l.exp(), ..pt }),
                    0.0,
                    a2_max.ln(),
                    1e-13,
                );
                if ln_a2.value > v {
                    pt.alpha2 = ln_a2.x.exp();
                    v = ln_a2.value;
                }
                let a4 = golden_max(|a: f64| eval(AsymptoticSearchPoint { alpha4: a, ..pt }), 0.0, 1.0, 1e-13);
                if a4.value > v {
                    pt.alpha4 = a4.x;
                    v = a4.value;
                }
                if v - before <= 1e-15 {
                    break;
                }
            }
            if v > best.0 {
                best = (v, Some(pt));
            }
        }
    }
    best
}

/// `C_{S_n,2} = sqrt(n^2 - n - 1) / n`.
pub fn star_var2_constant(n: usize) -> Result<f64> {
    require_n(n, 3)?;
    let n = n as f64;
    Ok((n * n - n - 1.0).sqrt() / n)
}

/// The extremizer of the 2-variation inequality on `S_n` (center first):
/// `f(center) = x`, `f(leaf 1) = x + c(n-1)`, every other leaf `x - c`.
pub fn star_var2_extremizer(n: usize, x: f64, c: f64) -> Result<VertexFunction> {
    require_n(n, 3)?;
    if !(x.is_finite() && x > 0.0) {
        return Err(invalid(format!("x must be positive, got {x}")));
    }
    if !(c > 0.0 && c < x) {
        return Err(invalid(format!("c must lie in (0, x) = (0, {x}), got {c}")));
    }
    let mut values = vec![x - c; n];
    values[0] = x;
    values[1] = x + c * (n - 1) as f64;
    Ok(VertexFunction::from(values))
}

/// `C_{K_n,p} = 1 - 1/n`, valid for `p >= log 4 / log 6`.
pub fn kn_var_constant(n: usize) -> Result<f64> {
    require_n(n, 2)?;
    Ok(1.0 - 1.0 / n as f64)
}

/// `Var_p(M delta_v) / Var_p(delta_v)`.
pub fn delta_variation_ratio(g: &Graph, p: f64, v: usize) -> Result<f64> {
    check_p(p)?;
    if v >= g.n() {
        return Err(crate::Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let delta = VertexFunction::delta(g.n(), v);
    let m = graph_maximal(g, &delta)?;
    let top = p_variation(g, &VertexFunction::from(m.values), p)?;
    Ok(top / p_variation(g, &delta, p)?)
}

/// Largest delta ratio over all vertices, with the smallest attaining vertex.
pub fn best_delta_variation_ratio(g: &Graph, p: f64) -> Result<(f64, usize)> {
    let mut best = (f64::NEG_INFINITY, 0);
    for v in 0..g.n() {
        let r = delta_variation_ratio(g, p, v)?;
        if r > best.0 {
            best = (r, v);
        }
    }
    Ok(best)
}
