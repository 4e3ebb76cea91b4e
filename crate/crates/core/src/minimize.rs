//! One-dimensional convex minimization along lines.
//!
//! Every orthogonality predicate reduces to minimizing a convex function of a
//! single real `λ`, either `‖x + λy‖` or
//! `‖x + λy‖² − ‖x‖² + 2ε‖x‖‖y‖|λ|`. Both exceed their value at `λ = 0`
//! once `|λ|·‖y‖ > 2‖x‖`, so `[−2‖x‖/‖y‖, 2‖x‖/‖y‖]` contains every
//! minimizer and golden-section search on it is certified.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norm::{derivative, eval_comb, Norm, Side};
use crate::vector::{are_collinear, VectorN};

const INV_PHI: f64 = 0.618_033_988_749_894_9;
const MAX_GOLDEN_ITERS: usize = 400;
const RATIO_GRID: usize = 1024;

/// Minimum of a convex line objective and the interval of (near-)minimizers.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MinResult {
    pub value: f64,
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    /// Value tolerance relative to `min(‖x‖, 1)`.
    pub tol: f64,
}

/// Least ε making an approximate relation hold; flagged when `y` is collinear
/// with `x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EpsMin {
    pub value: f64,
    pub degenerate: bool,
}

/// Golden-section search for a unimodal `f` on `[lo, hi]`, stopping once the
/// bracket is narrower than `tol`. Returns the best evaluated `(λ, f(λ))`.
pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    let mut iters = 0;
    while b - a > tol && iters < MAX_GOLDEN_ITERS {
        iters += 1;
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
            if fc < best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
            if fd < best.1 {
                best = (d, fd);
            }
        }
    }
    best
}

/// Relative minimizer tolerance: tighter when the norm is differentiable at `x`.
pub(crate) fn default_tol<N: Norm + ?Sized>(norm: &N, x: &[f64]) -> f64 {
    if norm.gradient(x).is_some() {
        1e-10
    } else {
        1e-9
    }
}

/// Radius of the interval that provably contains every minimizer.
pub(crate) fn bracket_radius<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64]) -> f64 {
    2.0 * norm.eval(x) / norm.eval(y)
}

/// Final λ-bracket width for [`minimize_on_bracket`]. The objective is
/// `‖y‖`-Lipschitz, so the value is within `tol·min(‖x‖, 1)/2` of the infimum
/// even at a kink; the width scales with `y` like the bracket itself.
fn lambda_width(tol: f64, radius: f64, nx: f64) -> f64 {
    tol * radius / (4.0 * nx.max(1.0))
}

fn check_pair<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<()> {
    x.ensure_dim(norm.dim())?;
    y.ensure_dim(norm.dim())?;
    if y.is_zero() {
        return Err(Error::ZeroVector("y"));
    }
    Ok(())
}

/// `inf_λ ‖x + λy‖` together with the interval of minimizers.
pub fn dist_to_line<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<MinResult> {
    check_pair(norm, x, y)?;
    let tol = default_tol(norm, x);
    let radius = bracket_radius(norm, x, y);
    let width = lambda_width(tol, radius, norm.eval(x));
    let f = |l: f64| eval_comb(norm, 1.0, x, l, y);
    let (arg, value) = minimize_on_bracket(&f, radius, width);
    let (lambda_lo, lambda_hi) = flat_interval(&f, arg, value, radius, width);
    Ok(MinResult { value, lambda_lo, lambda_hi, tol })
}

/// Value-only `inf_λ ‖x + λy‖` for internal hot loops; `y ≠ θ` is assumed.
pub(crate) fn line_distance<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64]) -> f64 {
    let radius = bracket_radius(norm, x, y);
    let width = lambda_width(default_tol(norm, x), radius, norm.eval(x));
    minimize_on_bracket(&|l: f64| eval_comb(norm, 1.0, x, l, y), radius, width).1
}

fn minimize_on_bracket<F: Fn(f64) -> f64>(f: &F, radius: f64, width: f64) -> (f64, f64) {
    let at_zero = f(0.0);
    if radius == 0.0 {
        return (0.0, at_zero);
    }
    let (arg, value) = golden_section_min(f, -radius, radius, width);
    if at_zero <= value {
        (0.0, at_zero)
    } else {
        (arg, value)
    }
}

/// Expands outward from the minimizer while the objective stays within a few
/// ulps of the minimum; reports `[lo, hi]`.
fn flat_interval<F: Fn(f64) -> f64>(f: &F, arg: f64, value: f64, radius: f64, width: f64) -> (f64, f64) {
    let level = value + 64.0 * f64::EPSILON * value.abs().max(1.0);
    let edge = |outside: f64| {
        if f(outside) <= level {
            return outside;
        }
        let (mut inside, mut outside) = (arg, outside);
        while (outside - inside).abs() > width {
            let mid = 0.5 * (inside + outside);
            if f(mid) <= level {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        inside
    };
    (edge(-radius), edge(radius))
}

/// `inf_λ ‖x + λy‖² − ‖x‖² + 2ε‖x‖‖y‖|λ|`.
///
/// Always `≤ 0` (the objective vanishes at `λ = 0`); `x ⊥_B^ε y` exactly when
/// it is `0`.
pub fn min_b_functional<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN, eps: f64) -> Result<f64> {
    check_pair(norm, x, y)?;
    check_eps(eps)?;
    Ok(b_functional_min(norm, x, y, eps))
}

pub(crate) fn b_functional_min<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64], eps: f64) -> f64 {
    let nx = norm.eval(x);
    let ny = norm.eval(y);
    let slope = 2.0 * eps * nx * ny;
    let g = |l: f64| {
        let n = eval_comb(norm, 1.0, x, l, y);
        n * n - nx * nx + slope * l.abs()
    };
    // g is 8‖x‖‖y‖-Lipschitz on the bracket; keep its value error below tol.
    let radius = 2.0 * nx / ny;
    let width = lambda_width(default_tol(norm, x), radius, nx) / (4.0 * nx.max(1.0));
    minimize_on_bracket(&g, radius, width).1.min(0.0)
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    Ok(())
}

/// `max(0, sup_{λ≠0} (‖x‖² − ‖x+λy‖²) / (2‖x‖‖y‖|λ|))`, clipped to `[0, 1]`.
///
/// The ratio is not assumed unimodal: it is sampled on 1024 points per sign
/// inside the certified bracket, the three best samples are refined by local
/// golden-section search, and the two `λ → 0` limits
/// `τ₋(x,y)/‖y‖` and `−τ₊(x,y)/‖y‖` are included. Collinear `y` yields 1
/// with the degeneracy flag set.
pub fn sup_b_ratio<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<EpsMin> {
    check_pair(norm, x, y)?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    if are_collinear(x, y) {
        return Ok(EpsMin { value: 1.0, degenerate: true });
    }
    Ok(EpsMin { value: b_ratio_sup(norm, x, y), degenerate: false })
}

pub(crate) fn b_ratio_sup<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64]) -> f64 {
    let nx = norm.eval(x);
    let ny = norm.eval(y);
    let radius = 2.0 * nx / ny;
    let ratio = |l: f64| {
        let n = eval_comb(norm, 1.0, x, l, y);
        (nx * nx - n * n) / (2.0 * nx * ny * l.abs())
    };

    let mut best = (derivative(norm, x, y, Side::Minus) / ny).max(-derivative(norm, x, y, Side::Plus) / ny);

    for sign in [1.0, -1.0] {
        let grid: Vec<(usize, f64)> = (1..=RATIO_GRID)
            .map(|k| (k, ratio(sign * radius * k as f64 / RATIO_GRID as f64)))
            .collect();
        let mut order: Vec<usize> = (0..grid.len()).collect();
        order.sort_by(|&a, &b| grid[b].1.total_cmp(&grid[a].1));
        for &i in order.iter().take(3) {
            let (k, v) = grid[i];
            best = best.max(v);
            let step = radius / RATIO_GRID as f64;
            let lo = if k == 1 { 1e-3 * step } else { (k - 1) as f64 * step };
            let hi = ((k + 1) as f64 * step).min(radius);
            let (_, neg) = golden_section_min(|t| -ratio(sign * t), lo, hi, 1e-12 * radius);
            best = best.max(-neg);
        }
    }
    best.clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_3, SQRT_2};

    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::norm::NormSpec;

    fn l(p: f64) -> NormSpec {
        NormSpec::lp(p, 2).unwrap()
    }

    /// Dense uniform grid over the certified bracket, then a second grid of
    /// the same size around the best sample.
    fn grid_min(f: impl Fn(f64) -> f64, radius: f64, n: usize) -> f64 {
        let h = 2.0 * radius / n as f64;
        let mut best = (0.0, f(0.0));
        for i in 0..=n {
            let t = -radius + h * i as f64;
            let v = f(t);
            if v < best.1 {
                best = (t, v);
            }
        }
        let c = best.0;
        for i in 0..=n {
            let t = c - h + 2.0 * h * i as f64 / n as f64;
            best.1 = best.1.min(f(t));
        }
        best.1
    }

    #[test]
    fn golden_section_on_a_parabola() {
        let (arg, val) = golden_section_min(|t| (t - 0.2).powi(2) + 1.0, -1.0, 1.0, 1e-9);
        assert_abs_diff_eq!(arg, 0.2, epsilon = 1e-8);
        assert_abs_diff_eq!(val, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn perpendicular_line_distance() {
        let r = dist_to_line(&l(2.0), &VectorN::xy(1.0, 0.0), &VectorN::xy(0.0, 1.0)).unwrap();
        assert_eq!(r.value, 1.0);
        assert_abs_diff_eq!(r.lambda_lo, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(r.lambda_hi, 0.0, epsilon = 1e-6);
        assert_eq!(r.tol, 1e-10);
    }

    #[test]
    fn sixty_degree_line() {
        let x = VectorN::xy(1.0, 0.0);
        let y = VectorN::xy(FRAC_PI_3.cos(), FRAC_PI_3.sin());
        let r = dist_to_line(&l(2.0), &x, &y).unwrap();
        let oracle = grid_min(|t| l(2.0).eval(&VectorN::lincomb(1.0, &x, t, &y)), 2.0, 100_000);
        assert_abs_diff_eq!(oracle, FRAC_PI_3.sin(), epsilon = 1e-9);
        assert_abs_diff_eq!(r.value, FRAC_PI_3.sin(), epsilon = 1e-12);
        // minimizer λ = −cos 60° = −0.5
        assert!(r.lambda_lo <= -0.5 + 1e-6 && r.lambda_hi >= -0.5 - 1e-6);
    }

    #[test]
    fn flat_minimum_in_sup_norm() {
        // f(λ) = max(|1 − λ|, 1) is flat on [0, 2]
        let r = dist_to_line(&NormSpec::linf(2), &VectorN::xy(1.0, 1.0), &VectorN::xy(-1.0, 0.0)).unwrap();
        assert_eq!(r.value, 1.0);
        assert_abs_diff_eq!(r.lambda_lo, 0.0, epsilon = 1e-8);
        assert_abs_diff_eq!(r.lambda_hi, 2.0, epsilon = 1e-8);
        assert_eq!(r.tol, 1e-9);
    }

    #[test]
    fn zero_direction_rejected() {
        let e = dist_to_line(&l(2.0), &VectorN::xy(1.0, 0.0), &VectorN::zeros(2)).unwrap_err();
        assert_eq!(e, Error::ZeroVector("y"));
        assert!(min_b_functional(&l(2.0), &VectorN::xy(1.0, 0.0), &VectorN::zeros(2), 0.1).is_err());
    }

    #[test]
    fn b_functional() {
        let x = VectorN::xy(1.0, 0.0);
        let e2 = VectorN::xy(0.0, 1.0);
        assert_eq!(min_b_functional(&l(2.0), &x, &e2, 0.0).unwrap(), 0.0);

        // Hilbert criterion: x ⊥_B^ε y ⇔ |⟨x,y⟩| ≤ ε‖x‖‖y‖; here ⟨x,y⟩ = √2/2.
        let y = VectorN::xy(SQRT_2 / 2.0, SQRT_2 / 2.0);
        let (xr, yr) = (&x, &y);
        let g = |eps: f64| {
            let nx = 1.0;
            move |t: f64| {
                let n = l(2.0).eval(&VectorN::lincomb(1.0, xr, t, yr));
                n * n - nx + 2.0 * eps * t.abs()
            }
        };
        assert!(grid_min(g(0.8), 2.0, 100_000) >= -1e-12);
        assert!(grid_min(g(0.5), 2.0, 100_000) < -1e-3);
        assert!(min_b_functional(&l(2.0), &x, &y, 0.8).unwrap() >= -1e-9);
        assert!(min_b_functional(&l(2.0), &x, &y, 0.5).unwrap() < -1e-3);

        assert_eq!(min_b_functional(&l(2.0), &x, &y, 1.0), Err(Error::InvalidEpsilon(1.0)));
    }

    #[test]
    fn sup_ratio_euclidean() {
        let x = VectorN::xy(1.0, 0.0);
        let y = VectorN::xy(FRAC_PI_3.cos(), FRAC_PI_3.sin());
        let r = sup_b_ratio(&l(2.0), &x, &y).unwrap();
        assert!(!r.degenerate);
        assert_abs_diff_eq!(r.value, 0.5, epsilon = 1e-12);

        let r = sup_b_ratio(&l(2.0), &x, &VectorN::xy(0.0, 2.0)).unwrap();
        assert_abs_diff_eq!(r.value, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn sup_ratio_collinear() {
        let x = VectorN::xy(0.3, -0.7);
        let r = sup_b_ratio(&l(3.0), &x, &x).unwrap();
        assert_eq!(r, EpsMin { value: 1.0, degenerate: true });
        // the analytic limit 1 − s/2 as s = −λ → 0⁺ is approached by the raw ratio
        let raw = b_ratio_sup(&l(3.0), &x, &x.scaled(-2.0));
        assert_abs_diff_eq!(raw, 1.0, epsilon = 1e-9);
    }
}
