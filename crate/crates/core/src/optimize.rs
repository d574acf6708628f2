//! One-dimensional maximization: golden-section search preceded by a
//! uniform pre-scan, plus a doubling bracket for half-infinite domains.

/// Points in the uniform pre-scan that precedes each golden-section search.
pub const PRESCAN_POINTS: usize = 1000;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`, stopping once
/// the bracket is narrower than `tol`.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Maximum {
    let mut evaluations = 0;
    let mut eval = |x: f64, f: &mut F| {
        evaluations += 1;
        let v = f(x);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    };
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = eval(c, &mut f);
    let mut fd = eval(d, &mut f);
    for _ in 0..400 {
        if hi - lo <= tol {
            break;
        }
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = eval(c, &mut f);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = eval(d, &mut f);
        }
    }
    let (x, value) = if fc >= fd { (c, fc) } else { (d, fd) };
    Maximum {
        x,
        value,
        evaluations,
    }
}

/// Uniform scan of `points + 1` nodes on `[lo, hi]`, then golden-section in
/// the two cells around the best node. Returns the better of the scan and
/// the refinement, so the result never falls below any scanned node.
pub fn scan_then_golden<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    points: usize,
    tol: f64,
) -> Maximum {
    let points = points.max(2);
    let h = (hi - lo) / points as f64;
    let mut best = Maximum {
        x: lo,
        value: f64::NEG_INFINITY,
        evaluations: 0,
    };
    let mut best_i = 0;
    for i in 0..=points {
        let x = if i == points { hi } else { lo + h * i as f64 };
        let v = f(x);
        best.evaluations += 1;
        if v > best.value {
            best.value = v;
            best.x = x;
            best_i = i;
        }
    }
    let a = if best_i == 0 { lo } else { lo + h * (best_i - 1) as f64 };
    let b = if best_i >= points - 1 { hi } else { lo + h * (best_i + 1) as f64 };
    let refined = golden_max(&mut f, a, b, tol);
    best.evaluations += refined.evaluations;
    if refined.value > best.value {
        best.value = refined.value;
        best.x = refined.x;
    }
    best
}

/// Grows `hi` by doubling from `initial` until the objective at the right
/// end has decreased for `patience` consecutive doublings (or `limit` is
/// reached). Returns the final right end.
pub fn doubling_bracket<F: FnMut(f64) -> f64>(mut f: F, initial: f64, patience: usize, limit: f64) -> f64 {
    let mut hi = initial;
    let mut prev = f(hi);
    let mut decreases = 0;
    while decreases < patience && hi < limit {
        hi *= 2.0;
        let v = f(hi);
        if v < prev {
            decreases += 1;
        } else {
            decreases = 0;
        }
        prev = v;
    }
    hi.min(limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let m = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-12);
        assert!((m.x - 0.3).abs() < 1e-7);
    }

    #[test]
    fn prescan_escapes_local_maximum() {
        // Two bumps; the higher one is narrow and sits near the right end.
        let f = |x: f64| (-(x - 0.2f64).powi(2) * 50.0).exp() + 2.0 * (-(x - 0.93f64).powi(2) * 5000.0).exp();
        let m = scan_then_golden(f, 0.0, 1.0, PRESCAN_POINTS, 1e-12);
        assert!((m.x - 0.93).abs() < 1e-6);
        assert!(m.value > 1.99);
    }

    #[test]
    fn endpoint_maxima_are_kept() {
        let m = scan_then_golden(|x| x, 0.0, 2.0, 10, 1e-12);
        assert_eq!(m.x, 2.0);
        let m = scan_then_golden(|x| -x, 0.0, 2.0, 10, 1e-12);
        assert_eq!(m.x, 0.0);
    }

    #[test]
    fn bracket_stops_after_peak() {
        let hi = doubling_bracket(|x| x * (-x / 10.0).exp(), 1.0, 5, 1e9);
        assert!(hi >= 10.0 && hi <= 1024.0, "{hi}");
    }
}
