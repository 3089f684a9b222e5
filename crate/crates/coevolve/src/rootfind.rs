//! Bracketed scalar root finding used by the template solvers.

use crate::error::{Error, Result};

/// Hybrid secant/bisection on a sign-changing bracket `[lo, hi]`.
///
/// The secant candidate is used while it stays inside the bracket and keeps
/// shrinking it; otherwise the step falls back to bisection, so convergence
/// is guaranteed for any continuous residual.
pub fn bracketed_root(
    mut f: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol_x: f64,
    tol_f: f64,
) -> Result<f64> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSolution(format!(
            "no sign change on bracket [{lo}, {hi}]"
        )));
    }
    for _ in 0..200 {
        // Secant through current endpoints, clipped into the bracket.
        let mut mid = if (fhi - flo).abs() > f64::MIN_POSITIVE {
            hi - fhi * (hi - lo) / (fhi - flo)
        } else {
            0.5 * (lo + hi)
        };
        let width = hi - lo;
        if !(mid > lo + 0.01 * width && mid < hi - 0.01 * width) {
            mid = 0.5 * (lo + hi);
        }
        let fmid = f(mid);
        if fmid.abs() <= tol_f {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
        if hi - lo <= tol_x {
            return Ok(0.5 * (lo + hi));
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Grow a bracket geometrically around a positive seed until the residual
/// changes sign, staying within `[seed/limit, seed*limit]`.
pub fn bracket_positive(
    mut f: impl FnMut(f64) -> f64,
    seed: f64,
    limit: f64,
) -> Result<(f64, f64)> {
    debug_assert!(seed > 0.0 && limit > 1.0);
    let f_seed = f(seed);
    if f_seed == 0.0 {
        return Ok((seed, seed));
    }
    let mut lo = seed;
    let mut hi = seed;
    loop {
        let grew_lo = lo > seed / limit;
        let grew_hi = hi < seed * limit;
        if !grew_lo && !grew_hi {
            return Err(Error::NoSolution(format!(
                "no sign change within [{:.3e}, {:.3e}]",
                seed / limit,
                seed * limit
            )));
        }
        if grew_lo {
            lo = (lo / 2.0).max(seed / limit);
            if f(lo).signum() != f_seed.signum() {
                return Ok((lo, lo * 2.0));
            }
        }
        if grew_hi {
            hi = (hi * 2.0).min(seed * limit);
            if f(hi).signum() != f_seed.signum() {
                return Ok((hi / 2.0, hi));
            }
        }
    }
}

/// Grow a symmetric bracket around `center` until the residual changes sign,
/// staying within `center +- max_half_width`.
pub fn bracket_around(
    mut f: impl FnMut(f64) -> f64,
    center: f64,
    step: f64,
    max_half_width: f64,
) -> Result<(f64, f64)> {
    debug_assert!(step > 0.0 && max_half_width > 0.0);
    let f_center = f(center);
    if f_center == 0.0 {
        return Ok((center, center));
    }
    let mut h = step;
    loop {
        if f(center + h).signum() != f_center.signum() {
            return Ok((center, center + h));
        }
        if f(center - h).signum() != f_center.signum() {
            return Ok((center - h, center));
        }
        if h >= max_half_width {
            return Err(Error::NoSolution(format!(
                "no sign change within {max_half_width} of {center}"
            )));
        }
        h = (h * 2.0).min(max_half_width);
    }
}
