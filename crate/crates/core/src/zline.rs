//! Centered and uncentered maximal operators on `Z` for finitely supported
//! functions.
//!
//! Both operators are evaluated exactly: with the support fixed, the mass
//! of a window only changes when an endpoint crosses a support point, so the
//! supremum over radii reduces to a finite maximum. Infinite variation sums
//! of `Mf` are split into a head evaluated pointwise and an analytic tail
//! `||f||_1 / (2 d + 1)` whose series is enclosed by rigorous bounds.

use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_p, invalid, Error, Result};
use crate::maximal::gap;

const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;
/// Longest explicit tail before the series evaluation gives up.
const MAX_TAIL_TERMS: usize = 1 << 28;
/// Longest head evaluated pointwise.
const MAX_HEAD_POINTS: i64 = 50_000_000;

/// A finitely supported function on `Z`: `values[i]` sits at `offset + i`,
/// everything else is zero. Stored trimmed, so the first and last stored
/// values are nonzero; the zero function has no stored values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLattice")]
pub struct LatticeFunction {
    offset: i64,
    values: Vec<f64>,
}

#[derive(Deserialize)]
struct RawLattice {
    offset: i64,
    values: Vec<f64>,
}

impl TryFrom<RawLattice> for LatticeFunction {
    type Error = Error;
    fn try_from(raw: RawLattice) -> Result<Self> {
        LatticeFunction::new(raw.offset, raw.values)
    }
}

impl LatticeFunction {
    pub fn new(offset: i64, values: Vec<f64>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::BadValue(i));
        }
        let Some(first) = values.iter().position(|&v| v != 0.0) else {
            return Ok(Self { offset: 0, values: Vec::new() });
        };
        let last = values.iter().rposition(|&v| v != 0.0).unwrap_or(first);
        Ok(Self {
            offset: offset + first as i64,
            values: values[first..=last].to_vec(),
        })
    }

    pub fn delta(at: i64) -> Self {
        Self { offset: at, values: vec![1.0] }
    }

    /// Indicator of `[a, b]`.
    pub fn indicator(a: i64, b: i64) -> Result<Self> {
        if b < a {
            return Err(invalid(format!("empty interval [{a}, {b}]")));
        }
        Ok(Self {
            offset: a,
            values: vec![1.0; (b - a + 1) as usize],
        })
    }

    /// `n -> max(height - |n|, 0)`.
    pub fn tent(height: u32) -> Result<Self> {
        if height == 0 {
            return Err(invalid("tent height must be positive"));
        }
        let h = height as i64;
        let values = (1 - h..h).map(|n| (h - n.abs()) as f64).collect();
        Ok(Self { offset: 1 - h, values })
    }

    /// `n -> c f(n)`.
    pub fn scaled(&self, c: f64) -> Self {
        Self::new(self.offset, self.values.iter().map(|v| c * v).collect()).expect("finite scale")
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// `(first, last)` support points.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((self.offset, self.offset + self.values.len() as i64 - 1))
        }
    }

    pub fn get(&self, n: i64) -> f64 {
        let i = n - self.offset;
        if i < 0 || i >= self.values.len() as i64 {
            0.0
        } else {
            self.values[i as usize]
        }
    }

    pub fn l1_norm(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn p_norm(&self, p: f64) -> Result<f64> {
        check_p(p)?;
        Ok(self.values.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p))
    }

    /// `(sum_n |f(n+1) - f(n)|^p)^{1/p}`, a finite sum.
    pub fn variation(&self, p: f64) -> Result<f64> {
        check_p(p)?;
        Ok(self.gaps().map(|d| d.powf(p)).sum::<f64>().powf(1.0 / p))
    }

    /// `sup_n |f(n+1) - f(n)|`.
    pub fn max_difference(&self) -> f64 {
        self.differences().fold(0.0, |m, d| m.max(d.abs()))
    }

    fn differences(&self) -> impl Iterator<Item = f64> + '_ {
        self.pairs().map(|(next, prev)| next - prev)
    }

    fn gaps(&self) -> impl Iterator<Item = f64> + '_ {
        self.pairs().map(|(next, prev)| gap(next, prev))
    }

    /// `(f(n+1), f(n))` across the support and one step beyond each end.
    fn pairs(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let n = self.values.len();
        (0..=n).filter(move |_| n > 0).map(move |i| {
            let next = if i < n { self.values[i] } else { 0.0 };
            let prev = if i > 0 { self.values[i - 1] } else { 0.0 };
            (next, prev)
        })
    }

    /// `n -> f(-n)`.
    pub fn reflected(&self) -> Self {
        match self.support() {
            None => self.clone(),
            Some((_, b)) => Self {
                offset: -b,
                values: self.values.iter().rev().copied().collect(),
            },
        }
    }

    fn nonzero(&self) -> Result<Masses> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        Ok(Masses::new(self))
    }
}

/// Prefix sums of `|f|` over the support.
struct Masses {
    a: i64,
    b: i64,
    prefix: Vec<f64>,
}

impl Masses {
    fn new(f: &LatticeFunction) -> Self {
        let mut prefix = Vec::with_capacity(f.values.len() + 1);
        prefix.push(0.0);
        let mut acc = 0.0;
        for v in &f.values {
            acc += v.abs();
            prefix.push(acc);
        }
        let (a, b) = f.support().expect("nonzero");
        Self { a, b, prefix }
    }

    fn total(&self) -> f64 {
        *self.prefix.last().unwrap()
    }

    /// Mass of `|f|` on `[lo, hi]`.
    fn mass(&self, lo: i64, hi: i64) -> f64 {
        let lo = lo.max(self.a);
        let hi = hi.min(self.b);
        if lo > hi {
            return 0.0;
        }
        self.prefix[(hi - self.a + 1) as usize] - self.prefix[(lo - self.a) as usize]
    }

    fn centered(&self, n: i64) -> f64 {
        // Candidate radii: 0 and the distances to each support point.
        let mut best = self.mass(n, n);
        for k in self.a..=self.b {
            let r = (n - k).abs();
            let avg = self.mass(n - r, n + r) / (2 * r + 1) as f64;
            if avg > best {
                best = avg;
            }
        }
        best
    }

    fn uncentered(&self, n: i64) -> f64 {
        let lefts = std::iter::once(n).chain(self.a..=self.b.min(n));
        let mut best = 0.0f64;
        for l in lefts {
            let rights = std::iter::once(n).chain(self.a.max(n)..=self.b);
            for r in rights {
                let avg = self.mass(l, r) / (r - l + 1) as f64;
                if avg > best {
                    best = avg;
                }
            }
        }
        best
    }
}

fn check_window(window: &RangeInclusive<i64>) -> Result<()> {
    if window.is_empty() {
        return Err(invalid(format!("empty window {window:?}")));
    }
    Ok(())
}

/// `Mf(n) = sup_r (2r+1)^{-1} sum_{|k-n| <= r} |f(k)|` for `n` in `window`.
pub fn centered_maximal_z(f: &LatticeFunction, window: RangeInclusive<i64>) -> Result<Vec<f64>> {
    check_window(&window)?;
    let m = f.nonzero()?;
    Ok(window.map(|n| m.centered(n)).collect())
}

/// Uncentered maximal function: supremum of averages of `|f|` over all
/// intervals containing `n`.
pub fn uncentered_maximal_z(f: &LatticeFunction, window: RangeInclusive<i64>) -> Result<Vec<f64>> {
    check_window(&window)?;
    let m = f.nonzero()?;
    Ok(window.map(|n| m.uncentered(n)).collect())
}

/// A value with a rigorous bound on its truncation and rounding error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailBound {
    pub value: f64,
    pub error: f64,
    pub terms_used: usize,
}

/// Compensated (Neumaier) summation of nonnegative terms.
#[derive(Debug, Default, Clone, Copy)]
struct Accumulator {
    sum: f64,
    comp: f64,
    count: usize,
}

impl Accumulator {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.count += 1;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Bound on the rounding error of the compensated sum of nonnegative
    /// terms, padded for the error in each term.
    fn rounding(&self) -> f64 {
        let n = self.count as f64;
        (8.0 * UNIT_ROUNDOFF + 4.0 * n * UNIT_ROUNDOFF * UNIT_ROUNDOFF) * self.value()
    }
}

/// Enclosure of `sum_{m >= k} m^{-s}` for `s > 1`, `k >= 1`, from the
/// trapezoid and midpoint inequalities for a convex decreasing summand.
fn zeta_tail(k: f64, s: f64) -> (f64, f64) {
    let lo = k.powf(1.0 - s) / (s - 1.0) + 0.5 * k.powf(-s);
    let hi = (k - 0.5).powf(1.0 - s) / (s - 1.0);
    (lo, hi)
}

/// Enclosure of `sum_{j >= big_j} ((2j+1)(2j+3))^{-p}` for `p > 1/2`.
fn odd_product_tail(big_j: usize, p: f64) -> (f64, f64) {
    // (2j+1)(2j+3) = 4m^2 (1 - 1/(4m^2)) with m = j + 1.
    let k = (big_j + 1) as f64;
    let (lo, hi) = zeta_tail(k, 2.0 * p);
    let scale = 4f64.powf(-p);
    let factor = (1.0 - 1.0 / (4.0 * k * k)).powf(-p);
    (scale * lo, scale * factor * hi)
}

fn odd_product_term(j: usize, p: f64) -> f64 {
    let j = j as f64;
    ((2.0 * j + 1.0) * (2.0 * j + 3.0)).powf(-p)
}

/// One analytic tail `coef * sum_{j >= start} ((2j+1)(2j+3))^{-p}`.
#[derive(Debug, Clone, Copy)]
struct Tail {
    coef: f64,
    start: usize,
}

fn check_convergent(p: f64) -> Result<()> {
    check_p(p)?;
    if p <= 0.5 {
        return Err(Error::Divergent(format!(
            "the series diverges for p <= 1/2 (got p = {p}): its terms decay like j^(-2p)"
        )));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(invalid(format!("tolerance must be positive, got {tol}")));
    }
    Ok(())
}

/// `(head + sum of tails)^{1/p}` to within `tol`, doubling the explicit part
/// of each tail until the enclosure is tight enough.
fn sum_with_tails(head: Accumulator, tails: &[Tail], p: f64, tol: f64) -> Result<TailBound> {
    let mut explicit = 64usize;
    loop {
        let mut acc = head;
        let mut tail_lo = 0.0;
        let mut tail_hi = 0.0;
        for t in tails {
            for j in t.start..t.start + explicit {
                acc.add(t.coef * odd_product_term(j, p));
            }
            let (lo, hi) = odd_product_tail(t.start + explicit, p);
            tail_lo += t.coef * lo;
            tail_hi += t.coef * hi;
        }
        let round = acc.rounding() + 4.0 * UNIT_ROUNDOFF * (tail_lo + tail_hi);
        let lo = (acc.value() + tail_lo - round).max(0.0).powf(1.0 / p);
        let hi = (acc.value() + tail_hi + round).powf(1.0 / p);
        let value = 0.5 * (lo + hi);
        let error = 0.5 * (hi - lo) + 8.0 * UNIT_ROUNDOFF * value;
        let terms_used = head.count + explicit * tails.len();
        if error <= tol {
            return Ok(TailBound { value, error, terms_used });
        }
        if explicit >= MAX_TAIL_TERMS {
            return Err(Error::Budget(format!(
                "series error {error:e} still above tolerance {tol:e} after {terms_used} terms"
            )));
        }
        explicit *= 2;
    }
}

/// The sharp constant `C_p = (2 sum_{k>=0} 2^p ((2k+1)(2k+3))^{-p})^{1/p}`
/// of `Var_p Mf <= C_p ||f||_p`, for `p` in `(1/2, 1]`.
pub fn cp_constant(p: f64, tol: f64) -> Result<TailBound> {
    check_convergent(p)?;
    check_tol(tol)?;
    if p > 1.0 {
        return Err(invalid(format!(
            "the sharp constant is only established for p in (1/2, 1], got p = {p}"
        )));
    }
    let coef = 2f64.powf(p);
    let tails = [Tail { coef, start: 0 }, Tail { coef, start: 0 }];
    sum_with_tails(Accumulator::default(), &tails, p, tol)
}

/// Smallest `N >= b` such that for every `n >= N` the window reaching back
/// to `a` gives the centered maximum, i.e. `Mf(n) = S / (2(n-a)+1)`.
fn right_switchover(m: &Masses) -> i64 {
    let s = m.total();
    let a = m.a as f64;
    let mut threshold = m.b as f64;
    for ap in m.a + 1..=m.b {
        // Mass on [ap, b] must not beat the full support:
        // S (2(n-ap)+1) >= T (2(n-a)+1).
        let t = m.mass(ap, m.b);
        let gap = s - t;
        if t == 0.0 {
            continue;
        }
        let bound = (t * (1.0 - 2.0 * a) - s * (1.0 - 2.0 * ap as f64)) / (2.0 * gap);
        threshold = threshold.max(bound);
    }
    // Pad against rounding in the crossover arithmetic.
    let padded = threshold + 1e-9 * threshold.abs() + 1.0;
    if padded >= i64::MAX as f64 / 4.0 {
        i64::MAX / 4
    } else {
        padded.ceil() as i64
    }
}

/// The analytic regime on both sides: `(n_left, n_right)` with
/// `Mf(n) = S/(2(b-n)+1)` for `n <= n_left` and `Mf(n) = S/(2(n-a)+1)` for
/// `n >= n_right`.
pub fn analytic_regime(f: &LatticeFunction) -> Result<(i64, i64)> {
    let m = f.nonzero()?;
    let right = right_switchover(&m);
    let left = -right_switchover(&Masses::new(&f.reflected()));
    Ok((left, right))
}

/// `Var_p(Mf)` for the centered maximal function, with error at most `tol`.
pub fn z_variation(f: &LatticeFunction, p: f64, tol: f64) -> Result<TailBound> {
    z_variation_with_head(f, p, tol, 0)
}

/// As [`z_variation`], with the pointwise head extended by `extra` points on
/// each side past the analytic switchover.
pub fn z_variation_with_head(f: &LatticeFunction, p: f64, tol: f64, extra: usize) -> Result<TailBound> {
    check_convergent(p)?;
    check_tol(tol)?;
    let m = f.nonzero()?;
    let (left, right) = analytic_regime(f)?;
    let (left, right) = (left - extra as i64, right + extra as i64);
    if right - left > MAX_HEAD_POINTS {
        return Err(Error::Budget(format!(
            "analytic regime starts {} points out; the head is too long",
            right - left
        )));
    }
    let mut head = Accumulator::default();
    let mut prev = m.centered(left);
    for n in left + 1..=right {
        let cur = m.centered(n);
        head.add(gap(cur, prev).powf(p));
        prev = cur;
    }
    // Differences S (1/(2j+1) - 1/(2j+3)) = 2S / ((2j+1)(2j+3)).
    let coef = (2.0 * m.total()).powf(p);
    let tails = [
        Tail { coef, start: (right - m.a) as usize },
        Tail { coef, start: (m.b - left) as usize },
    ];
    sum_with_tails(head, &tails, p, tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorBounds {
    pub lhs: f64,
    pub rhs: f64,
}

/// `lhs <= rhs` checks, with `ratio = lhs / rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub error_bounds: ErrorBounds,
    /// `lhs <= rhs` up to the combined error.
    pub holds: bool,
}

impl BoundReport {
    fn new(lhs: f64, rhs: f64, error_bounds: ErrorBounds) -> Self {
        let slack = error_bounds.lhs + error_bounds.rhs + 4.0 * f64::EPSILON * rhs.abs();
        Self {
            lhs,
            rhs,
            ratio: lhs / rhs,
            error_bounds,
            holds: lhs <= rhs + slack,
        }
    }
}

/// `Var_p(Mf)` against `C_p ||f||_p`.
pub fn check_var_norm_bound(f: &LatticeFunction, p: f64, tol: f64) -> Result<BoundReport> {
    let lhs = z_variation(f, p, tol)?;
    let cp = cp_constant(p, tol)?;
    let norm = f.p_norm(p)?;
    Ok(BoundReport::new(
        lhs.value,
        cp.value * norm,
        ErrorBounds {
            lhs: lhs.error,
            rhs: cp.error * norm,
        },
    ))
}

/// `sup_n |g(n+1) - g(n)|` for `g` the (un)centered maximal function,
/// extending the window outward until the decay bound beyond the support
/// falls below the largest difference found.
fn maximal_lipschitz(m: &Masses, uncentered: bool) -> f64 {
    let eval = |n: i64| if uncentered { m.uncentered(n) } else { m.centered(n) };
    // Bound on |g(n) - g(n+1)| for n >= b + d (and mirrored on the left).
    let s = m.total();
    let decay = |d: i64| {
        let d = d as f64;
        if uncentered {
            s / ((d + 1.0) * (d + 2.0))
        } else {
            2.0 * s / ((2.0 * d + 1.0) * (2.0 * d + 3.0))
        }
    };
    let mut best = 0.0f64;
    let mut lo = m.a - 1;
    let mut hi = m.b + 1;
    let mut vals: Vec<f64> = (lo..=hi).map(eval).collect();
    for w in vals.windows(2) {
        best = best.max((w[1] - w[0]).abs());
    }
    let mut reach = 1i64;
    while decay(reach) > best {
        let grow = reach.max(1);
        let left: Vec<f64> = (lo - grow..lo).map(eval).collect();
        let right: Vec<f64> = (hi + 1..=hi + grow).map(eval).collect();
        for w in left.windows(2).chain(right.windows(2)) {
            best = best.max((w[1] - w[0]).abs());
        }
        best = best.max((left[left.len() - 1] - vals[0]).abs());
        best = best.max((right[0] - vals[vals.len() - 1]).abs());
        vals = left.into_iter().chain(vals).chain(right).collect();
        lo -= grow;
        hi += grow;
        reach += grow;
    }
    best
}

/// `sup|(M~f)'|` against `1/2 sup|f'|` for the uncentered operator.
pub fn check_lipschitz_half(f: &LatticeFunction) -> Result<BoundReport> {
    let m = f.nonzero()?;
    let lhs = maximal_lipschitz(&m, true);
    let rhs = 0.5 * f.max_difference();
    Ok(BoundReport::new(lhs, rhs, ErrorBounds { lhs: 0.0, rhs: 0.0 }))
}

/// `sup|(Mf)'|` against `sup|f'|` for the centered operator.
pub fn check_lipschitz_centered(f: &LatticeFunction) -> Result<BoundReport> {
    let m = f.nonzero()?;
    let lhs = maximal_lipschitz(&m, false);
    let rhs = f.max_difference();
    Ok(BoundReport::new(lhs, rhs, ErrorBounds { lhs: 0.0, rhs: 0.0 }))
}

/// Random candidates for ratio scans on `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZScanConfig {
    /// Number of random candidates, on top of the structured ones.
    pub samples: usize,
    /// Longest random support.
    pub max_support: usize,
    pub seed: u64,
    /// Error allowed in each variation evaluation.
    pub tolerance: f64,
}

impl Default for ZScanConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            max_support: 12,
            seed: 0,
            tolerance: 1e-11,
        }
    }
}

impl ZScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_support == 0 {
            return Err(invalid("max_support must be positive"));
        }
        check_tol(self.tolerance)
    }
}

/// A random nonnegative function: support length uniform in
/// `1..=max_support`, values uniform in `[0, 1]`, about a quarter of them
/// zeroed.
pub fn sample_lattice_function<R: Rng>(rng: &mut R, max_support: usize) -> LatticeFunction {
    loop {
        let len = rng.gen_range(1..=max_support.max(1));
        let offset = rng.gen_range(-5..=5);
        let values: Vec<f64> = (0..len)
            .map(|_| {
                let v: f64 = rng.gen();
                if rng.gen_bool(0.25) {
                    0.0
                } else {
                    v
                }
            })
            .collect();
        let f = LatticeFunction::new(offset, values).expect("finite values");
        if !f.is_zero() {
            return f;
        }
    }
}

/// Deltas, indicators, tents, then `samples` random functions.
pub fn scan_candidates(cfg: &ZScanConfig) -> Vec<LatticeFunction> {
    let mut out = vec![LatticeFunction::delta(0)];
    for len in 2..=cfg.max_support as i64 {
        out.push(LatticeFunction::indicator(0, len - 1).expect("nonempty"));
    }
    for h in 2..=cfg.max_support.div_ceil(2) as u32 {
        out.push(LatticeFunction::tent(h).expect("positive height"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    out.extend((0..cfg.samples).map(|_| sample_lattice_function(&mut rng, cfg.max_support)));
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub p: f64,
    pub max_ratio: f64,
    pub max_ratio_error: f64,
    pub argmax: LatticeFunction,
    /// `C_p / 2^{1/p}`, the value of the ratio at a delta.
    pub conjectured_constant: f64,
    pub conjectured_error: f64,
    pub candidates: usize,
    /// Candidates whose ratio exceeds the conjectured constant beyond the
    /// combined error.
    pub violations: usize,
    /// Non-delta candidates matching the delta ratio within the combined
    /// error.
    pub delta_matches: usize,
}

/// Empirical maximum of `Var_p(Mf) / Var_p(f)` over [`scan_candidates`],
/// compared with the conjectured sharp constant. Nothing here is a proof.
pub fn conjecture_scan(p: f64, cfg: &ZScanConfig) -> Result<ConjectureReport> {
    check_convergent(p)?;
    cfg.validate()?;
    let cp = cp_constant(p, cfg.tolerance)?;
    let scale = 2f64.powf(1.0 / p);
    let conjectured = cp.value / scale;
    let conjectured_error = cp.error / scale;
    let candidates = scan_candidates(cfg);
    let ratios: Vec<(f64, f64)> = candidates
        .par_iter()
        .map(|f| {
            let top = z_variation(f, p, cfg.tolerance)?;
            let bottom = f.variation(p)?;
            Ok((top.value / bottom, top.error / bottom))
        })
        .collect::<Result<_>>()?;
    let mut best = 0;
    for (i, r) in ratios.iter().enumerate() {
        if r.0 > ratios[best].0 {
            best = i;
        }
    }
    let slack = |err: f64| err + conjectured_error + 1e-12 * conjectured;
    let violations = ratios
        .iter()
        .filter(|(r, e)| *r > conjectured + slack(*e))
        .count();
    let delta_matches = candidates
        .iter()
        .zip(&ratios)
        .filter(|(f, (r, e))| f.values().len() > 1 && (r - conjectured).abs() <= slack(*e))
        .count();
    Ok(ConjectureReport {
        p,
        max_ratio: ratios[best].0,
        max_ratio_error: ratios[best].1,
        argmax: candidates[best].clone(),
        conjectured_constant: conjectured,
        conjectured_error,
        candidates: candidates.len(),
        violations,
        delta_matches,
    })
}
