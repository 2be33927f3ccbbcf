//! Interior maximum of a unimodal function.

use crate::error::{Error, Result};

use super::diff::derivative;

const SCAN_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub location: f64,
    pub value: f64,
}

/// Locate the interior maximum of `f` on `[lo, hi]`.
///
/// A coarse scan brackets the peak, then the sign change of a fourth-order
/// central-difference derivative is bisected down to the floating-point
/// resolution of the location.
pub fn find_maximum<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Maximum> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::argument(format!("invalid bracket [{lo}, {hi}]")));
    }
    let step = (hi - lo) / (SCAN_POINTS - 1) as f64;
    let grid = |i: usize| if i == SCAN_POINTS - 1 { hi } else { lo + i as f64 * step };
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for i in 0..SCAN_POINTS {
        let v = f(grid(i));
        if v > best_val {
            best_val = v;
            best = i;
        }
    }
    if best == 0 || best == SCAN_POINTS - 1 || !best_val.is_finite() {
        return Err(Error::NoInteriorPeak { lo, hi });
    }

    let h = 1e-3 * step;
    let slope = |x: f64| derivative(&f, x, h);
    let mut a = grid(best - 1);
    let mut b = grid(best + 1);
    // the derivative is positive at `a` and negative at `b` for a unimodal peak
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b || (b - a) <= 1e-15 * m.abs() {
            break;
        }
        if slope(m) > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let location = 0.5 * (a + b);
    Ok(Maximum {
        location,
        value: f(location),
    })
}

/// Bisection root of `f` on a sign-changing bracket.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::argument("bisection bracket does not change sign"));
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
