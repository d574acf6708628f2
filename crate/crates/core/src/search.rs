//! Estimates of the operator norm `||M_G||_p` and of the variation constant
//! `C_{G,p}`.
//!
//! Three kinds of search live here:
//!
//! * exhaustive grid oracles over the normalized domain (one coordinate
//!   pinned to 1, and for the variation ratio a second one pinned to 0);
//!   the norm oracle uses a monotone branch-and-bound that returns the
//!   exact grid maximum without visiting every grid point,
//! * multi-start cyclic coordinate ascent with golden-section line searches,
//! * low-dimensional searches over the structured extremizer families for
//!   stars and complete graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_p, invalid, Error, Result};
use crate::graph::Graph;
use crate::maximal::{maximal_into, pow_abs, power_sum, variation_power_sum, VertexFunction};
use crate::optimize::{scan_then_golden, PRESCAN_POINTS};

/// Refuse grid searches that would need more objective evaluations than this.
pub const GRID_BUDGET: u64 = 1_000_000_000;

/// Points in the per-coordinate pre-scan of the ascent line searches.
const LINE_SCAN_POINTS: usize = 48;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub grid_step: f64,
    pub restarts: usize,
    pub max_iters: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            grid_step: 0.05,
            restarts: 32,
            max_iters: 500,
            tolerance: 1e-9,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        grid_levels(self.grid_step)?;
        if self.restarts == 0 {
            return Err(invalid("restarts must be positive"));
        }
        if self.max_iters == 0 {
            return Err(invalid("max_iters must be positive"));
        }
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(invalid(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        Ok(())
    }
}

/// Number of grid intervals `1/step`, which must be an integer.
pub fn grid_levels(step: f64) -> Result<usize> {
    if !(step.is_finite() && step > 0.0 && step < 1.0) {
        return Err(invalid(format!("grid step must lie in (0,1), got {step}")));
    }
    let m = (1.0 / step).round();
    if (m * step - 1.0).abs() > 1e-12 {
        return Err(invalid(format!("grid step {step} does not divide 1")));
    }
    if m > u16::MAX as f64 {
        return Err(Error::Budget(format!("grid step {step} is too fine")));
    }
    Ok(m as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    NormRatio,
    VariationRatio,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best_value: f64,
    pub argmax: Vec<f64>,
    pub objective: Objective,
    pub p: f64,
    pub evaluations: u64,
    pub structure_note: String,
}

impl SearchResult {
    pub fn argmax_function(&self) -> VertexFunction {
        VertexFunction::from(self.argmax.clone())
    }
}

/// `||M_G f||_p / ||f||_p`.
pub fn norm_ratio(g: &Graph, f: &VertexFunction, p: f64) -> Result<f64> {
    objective_value(g, f, p, Objective::NormRatio)
}

/// `Var_p(M_G f) / Var_p(f)`.
pub fn variation_ratio(g: &Graph, f: &VertexFunction, p: f64) -> Result<f64> {
    objective_value(g, f, p, Objective::VariationRatio)
}

pub fn objective_value(g: &Graph, f: &VertexFunction, p: f64, objective: Objective) -> Result<f64> {
    check_p(p)?;
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    if let Some(i) = f.values.iter().position(|x| !x.is_finite()) {
        return Err(Error::BadValue(i));
    }
    let mut eval = Evaluator::new(g, p, objective);
    let r = eval.power_ratio(&f.values);
    if r.is_nan() {
        return Err(match objective {
            Objective::NormRatio => Error::ZeroFunction,
            Objective::VariationRatio => Error::ConstantFunction,
        });
    }
    Ok(r.powf(1.0 / p))
}

/// Objective evaluation with reusable scratch space. Works with the `p`-th
/// power of the ratio, which is monotone in the ratio itself.
struct Evaluator<'g> {
    g: &'g Graph,
    p: f64,
    objective: Objective,
    scratch: Vec<f64>,
    evaluations: u64,
}

impl<'g> Evaluator<'g> {
    fn new(g: &'g Graph, p: f64, objective: Objective) -> Self {
        Self {
            g,
            p,
            objective,
            scratch: vec![0.0; g.n()],
            evaluations: 0,
        }
    }

    fn power_ratio(&mut self, f: &[f64]) -> f64 {
        self.evaluations += 1;
        maximal_into(self.g, f, &mut self.scratch);
        let (num, den) = match self.objective {
            Objective::NormRatio => (power_sum(&self.scratch, self.p), power_sum(f, self.p)),
            Objective::VariationRatio => (
                variation_power_sum(self.g, &self.scratch, self.p),
                variation_power_sum(self.g, f, self.p),
            ),
        };
        if den > 0.0 {
            num / den
        } else {
            f64::NAN
        }
    }

    fn normalize(&self, f: &mut [f64]) {
        match self.objective {
            Objective::NormRatio => {
                let max = f.iter().copied().fold(0.0, f64::max);
                if max > 0.0 {
                    f.iter_mut().for_each(|x| *x /= max);
                }
            }
            Objective::VariationRatio => {
                let max = f.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let min = f.iter().copied().fold(f64::INFINITY, f64::min);
                if max > min {
                    f.iter_mut().for_each(|x| *x = (*x - min) / (max - min));
                }
            }
        }
    }
}

fn check_nonnegative(f: &VertexFunction) -> Result<()> {
    match f.values.iter().position(|x| !x.is_finite() || *x < 0.0) {
        Some(i) => Err(Error::BadValue(i)),
        None => Ok(()),
    }
}

/// Rescales a nonnegative function so that its maximum is exactly 1.
pub fn normalize_norm_candidate(f: &VertexFunction) -> Result<VertexFunction> {
    check_nonnegative(f)?;
    let max = f.max();
    if f.is_empty() || max <= 0.0 {
        return Err(Error::ZeroFunction);
    }
    Ok(f.values
        .iter()
        .map(|&x| if x == max { 1.0 } else { x / max })
        .collect::<Vec<_>>()
        .into())
}

/// Maps a nonconstant nonnegative function affinely onto `[0, 1]` with
/// minimum 0 and maximum 1.
pub fn normalize_variation_candidate(f: &VertexFunction) -> Result<VertexFunction> {
    check_nonnegative(f)?;
    let (min, max) = (f.min(), f.max());
    if f.is_empty() || max <= min {
        return Err(Error::ConstantFunction);
    }
    Ok(f.values
        .iter()
        .map(|&x| {
            if x == max {
                1.0
            } else {
                (x - min) / (max - min)
            }
        })
        .collect::<Vec<_>>()
        .into())
}

/// Best value and argmax over all deltas, smallest vertex on ties.
fn best_delta(g: &Graph, p: f64, objective: Objective) -> (f64, Vec<f64>, u64) {
    let mut eval = Evaluator::new(g, p, objective);
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for v in 0..g.n() {
        let d = VertexFunction::delta(g.n(), v).values;
        let r = eval.power_ratio(&d);
        if r > best.0 {
            best = (r, d);
        }
    }
    (best.0, best.1, eval.evaluations)
}

fn lexicographically_less(a: &[f64], b: &[f64]) -> bool {
    a.partial_cmp(b) == Some(std::cmp::Ordering::Less)
}

/// Deterministic max-reduction: larger value wins, then smaller argmax.
fn better(a: &(f64, Vec<f64>), b: &(f64, Vec<f64>)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && lexicographically_less(&a.1, &b.1))
}

/// Exact maximum of the norm ratio over the grid `{0, step, ..., 1}^n`
/// restricted to points with some coordinate equal to 1.
///
/// The ratio is bounded on a box `[lo, hi]` by
/// `sum (M f_hi)^p / sum f_lo^p`, because `M` is monotone for nonnegative
/// inputs; boxes whose bound cannot beat the incumbent are discarded. The
/// budget counts objective and bound evaluations.
pub fn grid_oracle_norm(g: &Graph, p: f64, step: f64) -> Result<SearchResult> {
    check_p(p)?;
    let m = grid_levels(step)?;
    let n = g.n();
    let (delta_value, delta_arg, delta_evals) = best_delta(g, p, Objective::NormRatio);
    let results: Vec<Result<BoxSearch>> = (0..n)
        .into_par_iter()
        .map(|pinned| norm_subgrid(g, p, m, pinned, delta_value))
        .collect();
    let mut best = (delta_value, delta_arg);
    let mut evaluations = delta_evals;
    for r in results {
        let r = r?;
        evaluations += r.evaluations;
        if let Some(arg) = r.argmax {
            let cand = (r.value, arg);
            if better(&cand, &best) {
                best = cand;
            }
        }
    }
    if evaluations > GRID_BUDGET {
        return Err(Error::Budget(format!("{evaluations} evaluations")));
    }
    Ok(SearchResult {
        best_value: best.0.powf(1.0 / p),
        structure_note: describe(&best.1),
        argmax: best.1,
        objective: Objective::NormRatio,
        p,
        evaluations,
    })
}

struct BoxSearch {
    value: f64,
    argmax: Option<Vec<f64>>,
    evaluations: u64,
}

fn norm_subgrid(g: &Graph, p: f64, m: usize, pinned: usize, incumbent: f64) -> Result<BoxSearch> {
    const LEAF_POINTS: u64 = 32;
    let n = g.n();
    let level: Vec<f64> = (0..=m).map(|i| i as f64 / m as f64).collect();
    let level_pow: Vec<f64> = level.iter().map(|&x| pow_abs(x, p)).collect();
    let mut eval = Evaluator::new(g, p, Objective::NormRatio);
    let mut best = BoxSearch {
        value: incumbent,
        argmax: None,
        evaluations: 0,
    };

    // Boxes are stored flat: lo[0..n] then hi[0..n].
    let mut stack: Vec<u16> = Vec::new();
    for v in 0..n {
        stack.push(if v == pinned { m as u16 } else { 0 });
    }
    stack.extend(std::iter::repeat(m as u16).take(n));

    let mut lo = vec![0u16; n];
    let mut hi = vec![0u16; n];
    let mut f = vec![0.0; n];
    while stack.len() >= 2 * n {
        let base = stack.len() - 2 * n;
        lo.copy_from_slice(&stack[base..base + n]);
        hi.copy_from_slice(&stack[base + n..]);
        stack.truncate(base);

        let points: u64 = lo
            .iter()
            .zip(&hi)
            .map(|(&a, &b)| (b - a) as u64 + 1)
            .fold(1u64, u64::saturating_mul);
        if points > 1 {
            for v in 0..n {
                f[v] = level[hi[v] as usize];
            }
            maximal_into(g, &f, &mut eval.scratch);
            eval.evaluations += 1;
            let num = power_sum(&eval.scratch, p);
            let den: f64 = lo.iter().map(|&l| level_pow[l as usize]).sum();
            if num / den <= best.value {
                continue;
            }
        }
        if points <= LEAF_POINTS {
            // Odometer over the box.
            let mut cur = lo.clone();
            loop {
                for v in 0..n {
                    f[v] = level[cur[v] as usize];
                }
                let r = eval.power_ratio(&f);
                if r > best.value {
                    best.value = r;
                    best.argmax = Some(f.clone());
                }
                let mut k = 0;
                while k < n {
                    if cur[k] < hi[k] {
                        cur[k] += 1;
                        break;
                    }
                    cur[k] = lo[k];
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        } else {
            let (axis, _) = lo
                .iter()
                .zip(&hi)
                .enumerate()
                .max_by_key(|(i, (&a, &b))| (b - a, std::cmp::Reverse(*i)))
                .expect("nonempty box");
            let mid = (lo[axis] + hi[axis]) / 2;
            // Upper half pushed first so the lower half is explored first.
            stack.extend_from_slice(&lo);
            let at = stack.len() - n + axis;
            stack[at] = mid + 1;
            stack.extend_from_slice(&hi);
            stack.extend_from_slice(&lo);
            stack.extend_from_slice(&hi);
            let at = stack.len() - n + axis;
            stack[at] = mid;
        }
        if eval.evaluations > GRID_BUDGET {
            return Err(Error::Budget(format!(
                "norm grid search exceeded {GRID_BUDGET} evaluations"
            )));
        }
    }
    best.evaluations = eval.evaluations;
    Ok(best)
}

/// Exact maximum of the variation ratio over grid points with one
/// coordinate pinned to 1 and another pinned to 0.
pub fn grid_oracle_variation(g: &Graph, p: f64, step: f64) -> Result<SearchResult> {
    check_p(p)?;
    let m = grid_levels(step)?;
    let n = g.n();
    if n < 2 {
        return Err(invalid("variation ratio needs at least two vertices"));
    }
    let free = (n - 2) as i32;
    let nominal = (n * (n - 1)) as f64 * ((m + 1) as f64).powi(free);
    if nominal > GRID_BUDGET as f64 {
        return Err(Error::Budget(format!(
            "variation grid needs {nominal:.3e} evaluations (limit {GRID_BUDGET})"
        )));
    }
    let level: Vec<f64> = (0..=m).map(|i| i as f64 / m as f64).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|hi| (0..n).filter(move |&lo| lo != hi).map(move |lo| (hi, lo)))
        .collect();
    let results: Vec<((f64, Vec<f64>), u64)> = pairs
        .par_iter()
        .map(|&(top, bottom)| {
            let mut eval = Evaluator::new(g, p, Objective::VariationRatio);
            let others: Vec<usize> = (0..n).filter(|&v| v != top && v != bottom).collect();
            let mut cur = vec![0usize; others.len()];
            let mut f = vec![0.0; n];
            f[top] = 1.0;
            let mut best = (f64::NEG_INFINITY, Vec::new());
            loop {
                for (k, &v) in others.iter().enumerate() {
                    f[v] = level[cur[k]];
                }
                let r = eval.power_ratio(&f);
                if r > best.0 {
                    best = (r, f.clone());
                }
                let mut k = 0;
                while k < cur.len() {
                    if cur[k] < m {
                        cur[k] += 1;
                        break;
                    }
                    cur[k] = 0;
                    k += 1;
                }
                if k == cur.len() {
                    break;
                }
            }
            (best, eval.evaluations)
        })
        .collect();
    let mut best = (f64::NEG_INFINITY, Vec::new());
    let mut evaluations = 0;
    for (cand, e) in results {
        evaluations += e;
        if better(&cand, &best) {
            best = cand;
        }
    }
    Ok(SearchResult {
        best_value: best.0.powf(1.0 / p),
        structure_note: describe(&best.1),
        argmax: best.1,
        objective: Objective::VariationRatio,
        p,
        evaluations,
    })
}

/// Multi-start cyclic coordinate ascent for the norm ratio.
pub fn ascent_norm(g: &Graph, p: f64, cfg: &SearchConfig) -> Result<SearchResult> {
    ascent(g, p, cfg, Objective::NormRatio)
}

/// Multi-start cyclic coordinate ascent for the variation ratio.
pub fn ascent_variation(g: &Graph, p: f64, cfg: &SearchConfig) -> Result<SearchResult> {
    if g.n() < 2 {
        return Err(invalid("variation ratio needs at least two vertices"));
    }
    ascent(g, p, cfg, Objective::VariationRatio)
}

fn ascent(g: &Graph, p: f64, cfg: &SearchConfig, objective: Objective) -> Result<SearchResult> {
    check_p(p)?;
    cfg.validate()?;
    let n = g.n();
    let (delta_value, delta_arg, delta_evals) = best_delta(g, p, objective);

    // Starting points are drawn up front so the result does not depend on
    // how restarts are scheduled.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let starts: Vec<Vec<f64>> = (0..cfg.restarts)
        .map(|_| (0..n).map(|_| rng.gen::<f64>()).collect())
        .collect();

    let runs: Vec<((f64, Vec<f64>), u64)> = starts
        .into_par_iter()
        .map(|start| climb(g, p, cfg, objective, start))
        .collect();

    let mut best = (delta_value, delta_arg);
    let mut evaluations = delta_evals;
    for (cand, e) in runs {
        evaluations += e;
        if cand.0 > best.0 {
            best = cand;
        }
    }
    Ok(SearchResult {
        best_value: best.0.powf(1.0 / p),
        structure_note: describe(&best.1),
        argmax: best.1,
        objective,
        p,
        evaluations,
    })
}

fn climb(g: &Graph, p: f64, cfg: &SearchConfig, objective: Objective, mut f: Vec<f64>) -> ((f64, Vec<f64>), u64) {
    let n = g.n();
    let mut eval = Evaluator::new(g, p, objective);
    eval.normalize(&mut f);
    let mut current = eval.power_ratio(&f);
    if current.is_nan() {
        current = f64::NEG_INFINITY;
    }
    for _ in 0..cfg.max_iters {
        let before = current;
        for i in 0..n {
            let mut trial = f.clone();
            let line = scan_then_golden(
                |t| {
                    trial[i] = t;
                    eval.power_ratio(&trial)
                },
                0.0,
                1.0,
                LINE_SCAN_POINTS,
                cfg.tolerance,
            );
            if line.value > current {
                f[i] = line.x;
                current = line.value;
            }
        }
        eval.normalize(&mut f);
        let renormalized = eval.power_ratio(&f);
        if renormalized.is_finite() {
            current = renormalized;
        }
        if current - before <= cfg.tolerance * before.abs().max(1.0) {
            break;
        }
    }
    let evals = eval.evaluations;
    ((current, f), evals)
}

/// `(1 + (n-1)((x+1)/2)^p) / (1 + (n-1) x^p)`: the `p`-th power of the norm
/// ratio of the star function with center 1 and every leaf equal to `x`.
pub fn star_profile_ratio(n: usize, p: f64, x: f64) -> f64 {
    let k = (n - 1) as f64;
    (1.0 + k * pow_abs((x + 1.0) / 2.0, p)) / (1.0 + k * pow_abs(x, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarFormula {
    pub value: f64,
    pub x_star: f64,
    /// Set when `p` lies outside `(1, 2]`, where the value is only a
    /// conjectural description of the norm.
    pub heuristic: bool,
}

/// `||M_{S_n}||_p` from the one-parameter family of star functions with
/// constant leaves, maximized over `x in [0, 1)`.
pub fn star_norm_formula(n: usize, p: f64) -> Result<StarFormula> {
    check_p(p)?;
    if n < 3 {
        return Err(invalid(format!("star formula needs n >= 3, got {n}")));
    }
    let best = scan_then_golden(
        |x| star_profile_ratio(n, p, x),
        0.0,
        1.0 - 1e-12,
        PRESCAN_POINTS,
        1e-12,
    );
    Ok(StarFormula {
        value: best.value.powf(1.0 / p),
        x_star: best.x,
        heuristic: !(p > 1.0 && p <= 2.0),
    })
}

/// Norm ratio (to the power `p`) of the star function with center 1,
/// `s` leaves at `x` and `n - 1 - s` leaves at `y`.
fn star_two_level_ratio(n: usize, p: f64, s: usize, x: f64, y: f64) -> f64 {
    let t = (n - 1 - s) as f64;
    let s = s as f64;
    let mean = (1.0 + s * x + t * y) / n as f64;
    let mx = ((1.0 + x) / 2.0).max(mean);
    let my = ((1.0 + y) / 2.0).max(mean);
    (1.0 + s * pow_abs(mx, p) + t * pow_abs(my, p)) / (1.0 + s * pow_abs(x, p) + t * pow_abs(y, p))
}

/// Maximizes the norm ratio on `S_n` over functions with the center at the
/// maximum and at most two leaf values.
pub fn star_norm_structured(n: usize, p: f64) -> Result<SearchResult> {
    check_p(p)?;
    if n < 3 {
        return Err(invalid(format!("star search needs n >= 3, got {n}")));
    }
    if p < 1.0 {
        return Err(invalid(format!("star search needs p >= 1, got {p}")));
    }
    const TOL: f64 = 1e-12;
    let mut evaluations = 0u64;

    // Single leaf value: the diagonal x = y.
    let diag = scan_then_golden(|y| star_two_level_ratio(n, p, 0, y, y), 0.0, 1.0, PRESCAN_POINTS, TOL);
    evaluations += diag.evaluations as u64;
    let mut best = (diag.value, 0usize, diag.x, diag.x);

    const GRID: usize = 100;
    for s in 1..n - 1 {
        let ratio = |x: f64, y: f64| star_two_level_ratio(n, p, s, x, y);
        let (mut bx, mut by, mut bv) = (0.0, 0.0, f64::NEG_INFINITY);
        for j in 0..=GRID {
            let y = j as f64 / GRID as f64;
            for i in 0..=j {
                let x = i as f64 / GRID as f64;
                let v = ratio(x, y);
                evaluations += 1;
                if v > bv {
                    (bx, by, bv) = (x, y, v);
                }
            }
        }
        for _ in 0..200 {
            let before = bv;
            let mx = scan_then_golden(|x| ratio(x, by), 0.0, by, 64, TOL);
            evaluations += mx.evaluations as u64;
            if mx.value > bv {
                (bx, bv) = (mx.x, mx.value);
            }
            let my = scan_then_golden(|y| ratio(bx, y), bx, 1.0, 64, TOL);
            evaluations += my.evaluations as u64;
            if my.value > bv {
                (by, bv) = (my.x, my.value);
            }
            if bv - before <= 1e-15 {
                break;
            }
        }
        // Keep the single-value description unless two values genuinely win.
        if bv > best.0 * (1.0 + 1e-13) {
            best = (bv, s, bx, by);
        }
    }

    let (value, s, x, y) = best;
    let mut argmax = vec![1.0];
    argmax.extend(std::iter::repeat(x).take(s));
    argmax.extend(std::iter::repeat(y).take(n - 1 - s));
    let note = if s == 0 || (x - y).abs() < 1e-6 {
        format!("center=1, single leaf value {y:.9}")
    } else {
        format!("center=1, {s} leaves at {x:.9}, {} leaves at {y:.9}", n - 1 - s)
    };
    Ok(SearchResult {
        best_value: value.powf(1.0 / p),
        argmax,
        objective: Objective::NormRatio,
        p,
        evaluations,
        structure_note: note,
    })
}

/// Maximizes the norm ratio on `K_n` over two-valued functions: 1 on `k`
/// vertices and `x in [0, 1]` on the rest.
pub fn complete_norm_structured(n: usize, p: f64) -> Result<SearchResult> {
    check_p(p)?;
    if n < 2 {
        return Err(invalid(format!("complete search needs n >= 2, got {n}")));
    }
    if p < 1.0 + 1e-9 {
        return Err(invalid(format!("complete search needs p > 1, got {p}")));
    }
    let mut evaluations = 0u64;
    let mut best = (f64::NEG_INFINITY, 1usize, 0.0);
    for k in 1..n {
        let kf = k as f64;
        let rest = (n - k) as f64;
        let ratio = |x: f64| {
            let mean = (kf + rest * x) / n as f64;
            (kf + rest * pow_abs(mean, p)) / (kf + rest * pow_abs(x, p))
        };
        let m = scan_then_golden(ratio, 0.0, 1.0, PRESCAN_POINTS, 1e-12);
        evaluations += m.evaluations as u64;
        if m.value > best.0 {
            best = (m.value, k, m.x);
        }
    }
    let (value, k, x) = best;
    let mut argmax = vec![1.0; k];
    argmax.extend(std::iter::repeat(x).take(n - k));
    Ok(SearchResult {
        best_value: value.powf(1.0 / p),
        argmax,
        objective: Objective::NormRatio,
        p,
        evaluations,
        structure_note: format!("two-valued: 1 on {k} vertices, {x:.9} on {}", n - k),
    })
}

/// Short description of the shape of a candidate.
fn describe(f: &[f64]) -> String {
    let mut distinct: Vec<f64> = Vec::new();
    for &x in f {
        if !distinct.iter().any(|&d| (d - x).abs() < 1e-9) {
            distinct.push(x);
        }
    }
    let nonzero = f.iter().filter(|x| x.abs() > 1e-12).count();
    if nonzero == 1 {
        "delta".to_string()
    } else {
        match distinct.len() {
            1 => "constant".to_string(),
            2 => "two-valued".to_string(),
            3 => "three-valued".to_string(),
            k => format!("{k}-valued"),
        }
    }
}
