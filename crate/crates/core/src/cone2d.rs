//! Normal cones in the plane and the cone decompositions of the
//! approximate-orthogonality sets
//!
//! * `F(x, ε) = {y : x ⊥_D^ε y}` and `G(x, ε) = {y : x ⊥_B^ε y}`,
//!
//! each of which is `K ∪ (−K)` for a normal cone `K` spanned by two unit
//! vectors.
//!
//! The `F` cone is built from a Birkhoff-James direction `y` of `x`: along the
//! segments `(1−t)x + ty` and `−(1−t)x + ty` the `⊥_D^ε` predicate holds
//! exactly on `[t₁, 1]` and `[t₂, 1]`, and the normalized segment points at
//! `t₁`, `t₂` are the cone boundary. The `G` cone (at smooth `x`) is the arc
//! of unit vectors within distance ε of the line through the unique
//! Birkhoff-James direction `z`, located by angular bisection.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minimize::{check_eps, line_distance};
use crate::norm::{derivative, ensure_planar, smoothness_gap, unit_at, Norm, Side, DEFAULT_SMOOTHNESS_TOL};
use crate::ortho::PREDICATE_TOL;
use crate::vector::VectorN;

pub const T_TOL: f64 = 1e-9;
pub const ANGLE_TOL: f64 = 1e-9;
/// Angular tolerance for accepting a converse solution by round trip.
pub const ROUND_TRIP_TOL: f64 = 1e-5;
/// Tolerance certifying members of `S(x, ε)`.
pub const S_SET_TOL: f64 = 1e-6;

const CONVERSE_SCAN: usize = 2048;
const SMOOTHNESS_SAMPLES: usize = 512;
const UNIT_TOL: f64 = 1e-9;

/// The normal cone `{α·v1 + β·v2 : α, β ≥ 0}` in the plane.
///
/// `v1 = v2` is a half-line; `v1 = −v2` is rejected since the cone would
/// contain a line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalCone2D {
    v1: VectorN,
    v2: VectorN,
}

impl NormalCone2D {
    pub fn new(v1: VectorN, v2: VectorN) -> Result<Self> {
        v1.ensure_dim(2)?;
        v2.ensure_dim(2)?;
        if v1.is_zero() || v2.is_zero() {
            return Err(Error::InvalidCone("boundary vectors must be non-zero".into()));
        }
        if angular_distance(&v1, &(-&v2)) < 1e-12 {
            return Err(Error::InvalidCone("boundary vectors are opposite; K ∩ (−K) ≠ {θ}".into()));
        }
        Ok(Self { v1, v2 })
    }

    /// Builds the cone from arbitrary non-zero directions, normalizing them in
    /// the given norm.
    pub fn from_directions<N: Norm + ?Sized>(norm: &N, a: &VectorN, b: &VectorN) -> Result<Self> {
        ensure_planar(norm)?;
        a.ensure_dim(2)?;
        b.ensure_dim(2)?;
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidCone("boundary vectors must be non-zero".into()));
        }
        Self::new(a.scaled(1.0 / norm.eval(a)), b.scaled(1.0 / norm.eval(b)))
    }

    pub fn v1(&self) -> &VectorN {
        &self.v1
    }

    pub fn v2(&self) -> &VectorN {
        &self.v2
    }

    pub fn is_half_line(&self) -> bool {
        angular_distance(&self.v1, &self.v2) < 1e-12
    }

    /// Whether `v = α·v1 + β·v2` with `α, β ≥ −1e-9`.
    pub fn contains(&self, v: &[f64]) -> bool {
        let (a, b) = (&self.v1, &self.v2);
        let det = cross(a, b);
        if det.abs() <= 1e-12 * a.euclidean_norm() * b.euclidean_norm() {
            let na = a.euclidean_norm();
            let nv = (v[0] * v[0] + v[1] * v[1]).sqrt();
            return cross(a, v).abs() <= 1e-9 * na * nv && a[0] * v[0] + a[1] * v[1] >= -1e-9 * na * nv;
        }
        let alpha = cross(v, b) / det;
        let beta = cross(a, v) / det;
        alpha >= -1e-9 && beta >= -1e-9
    }
}

/// A cone together with its reflection: `K ∪ (−K)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConePair {
    pub cone: NormalCone2D,
}

impl ConePair {
    pub fn new(cone: NormalCone2D) -> Self {
        Self { cone }
    }

    pub fn contains(&self, v: &[f64]) -> bool {
        self.cone.contains(v) || self.cone.contains(&[-v[0], -v[1]])
    }

    pub fn reflected(&self) -> Self {
        Self { cone: NormalCone2D { v1: -&self.cone.v1, v2: -&self.cone.v2 } }
    }

    /// Smallest angle between `v` and any of `±v1`, `±v2`.
    pub fn boundary_distance(&self, v: &[f64]) -> f64 {
        let v = VectorN::from_slice(v);
        [&self.cone.v1, &self.cone.v2]
            .into_iter()
            .flat_map(|b| [angular_distance(b, &v), angular_distance(&-b, &v)])
            .fold(f64::INFINITY, f64::min)
    }
}

/// The `F(x, ε)` cone with the construction data that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FConeResult {
    pub pair: ConePair,
    pub t1: f64,
    pub t2: f64,
    pub witness_y: VectorN,
}

/// Result of solving for `(x, ε)` with `F(x, ε) = K ∪ (−K)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ConverseOutcome {
    Found { x: VectorN, eps: f64 },
    NoSolution { reason: String },
}

fn cross(a: &[f64], b: &[f64]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn wrap_angle(a: f64) -> f64 {
    let r = a.rem_euclid(TAU);
    if r > PI {
        r - TAU
    } else {
        r
    }
}

/// Angle in `[0, π]` between the directions of two planar vectors.
pub fn angular_distance(u: &[f64], v: &[f64]) -> f64 {
    cross(u, v).atan2(u[0] * v[0] + u[1] * v[1]).abs()
}

fn check_unit<N: Norm + ?Sized>(norm: &N, x: &VectorN) -> Result<()> {
    ensure_planar(norm)?;
    x.ensure_dim(2)?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    let n = norm.eval(x);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnit(n));
    }
    Ok(())
}

/// A unit `y` with `x ⊥_B y`.
///
/// Along the half-turn from `x` to `−x`, `τ₊(x, ·)` is non-negative on an
/// initial arc and negative after it; the end of that arc is Birkhoff-James
/// orthogonal to `x` and is located by bisection.
pub fn find_bj_direction<N: Norm + ?Sized>(norm: &N, x: &VectorN) -> Result<VectorN> {
    ensure_planar(norm)?;
    x.ensure_dim(2)?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    let start = x.angle();
    let plus = |a: f64| derivative(norm, x, &[a.cos(), a.sin()], Side::Plus) >= 0.0;
    let (mut lo, mut hi) = (start, start + PI);
    // Resolved to rounding: the line distance drops by about the angle error
    // times the minimizing |λ|, which must stay below the predicate slack.
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if plus(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (y_lo, y_hi) = (unit_at(norm, lo), unit_at(norm, hi));
    let (d_lo, d_hi) = (line_distance(norm, x, &y_lo), line_distance(norm, x, &y_hi));
    let (y, d) = if d_lo >= d_hi { (y_lo, d_lo) } else { (y_hi, d_hi) };
    if d < norm.eval(x) - PREDICATE_TOL {
        return Err(Error::NotConverged(format!(
            "no Birkhoff-James direction certified in angle bracket [{lo}, {hi}]"
        )));
    }
    Ok(y)
}

/// Infimum of `{t ∈ [0, 1] : pred(t)}` for a predicate false at 0, true at 1
/// and monotone in between.
fn threshold(pred: impl Fn(f64) -> bool) -> f64 {
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > T_TOL {
        let mid = 0.5 * (lo + hi);
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `F(x, ε)` as a cone pair, for unit `x` in a planar norm.
pub fn f_cone<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64) -> Result<FConeResult> {
    check_unit(norm, x)?;
    check_eps(eps)?;
    let y = find_bj_direction(norm, x)?;
    let level = (1.0 - eps * eps).sqrt();
    let yr = &y;

    // No slack here: at ε = 0 a band would widen the thin cone by √tol.
    let along = |sign: f64| {
        move |t: f64| {
            let u = VectorN::lincomb(sign * (1.0 - t), x, t, yr);
            line_distance(norm, x, &u) >= level
        }
    };
    let t1 = threshold(along(1.0));
    let t2 = threshold(along(-1.0));

    let u1 = VectorN::lincomb(1.0 - t1, x, t1, &y);
    let u2 = VectorN::lincomb(-(1.0 - t2), x, t2, &y);
    let v1 = u1.scaled(1.0 / norm.eval(&u1));
    let v2 = u2.scaled(1.0 / norm.eval(&u2));
    Ok(FConeResult { pair: ConePair::new(NormalCone2D::new(v1, v2)?), t1, t2, witness_y: y })
}

/// `S(x, ε)`: unit `z` with `inf_λ ‖x + λz‖ = √(1−ε²)`.
///
/// For ε > 0 these are `±v1, ±v2` of the `F` cone. For ε = 0 it is the set of
/// Birkhoff-James directions of `x`, reported by the endpoints of its two
/// arcs (two points when the arcs are single directions).
pub fn s_set<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64) -> Result<Vec<VectorN>> {
    let f = f_cone(norm, x, eps)?;
    let (v1, v2) = (f.pair.cone.v1.clone(), f.pair.cone.v2.clone());
    let points = if eps == 0.0 && angular_distance(&v1, &v2) <= S_SET_TOL {
        vec![f.witness_y.clone(), -&f.witness_y]
    } else {
        vec![-&v1, v1.clone(), -&v2, v2.clone()]
    };
    let level = (1.0 - eps * eps).sqrt();
    for p in &points {
        let d = line_distance(norm, x, p);
        if (d - level).abs() > S_SET_TOL {
            return Err(Error::NotConverged(format!(
                "exceptional vector {p} has line distance {d}, expected {level}"
            )));
        }
    }
    Ok(points)
}

/// `G(x, ε)` as a cone pair, for a unit smooth point `x` of a planar norm.
///
/// A unit `y` belongs to `G(x, ε)` exactly when `min_α ‖α·z − y‖ ≤ ε` for the
/// Birkhoff-James direction `z` of `x`. The member arc around `z` ends before
/// reaching `±x`, so each endpoint is found by bisecting from `z` toward the
/// nearer of `±x` on either side.
pub fn g_cone<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64) -> Result<ConePair> {
    check_unit(norm, x)?;
    check_eps(eps)?;
    let gap = smoothness_gap(norm, x);
    if gap > DEFAULT_SMOOTHNESS_TOL {
        return Err(Error::NonSmooth { gap, tol: DEFAULT_SMOOTHNESS_TOL });
    }
    let z = find_bj_direction(norm, x)?;
    let member = |a: f64| line_distance(norm, &unit_at(norm, a), &z) <= eps + PREDICATE_TOL;

    let zeta = z.angle();
    let to_x = (x.angle() - zeta).rem_euclid(TAU);
    let ccw_reach = if to_x < PI { to_x } else { to_x - PI };
    let edge = |inside: f64, outside: f64| {
        let (mut inside, mut outside) = (inside, outside);
        while (outside - inside).abs() > ANGLE_TOL {
            let mid = 0.5 * (inside + outside);
            if member(mid) {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        inside
    };
    let ccw = edge(zeta, zeta + ccw_reach);
    let cw = edge(zeta, zeta - (PI - ccw_reach));
    Ok(ConePair::new(NormalCone2D::new(unit_at(norm, cw), unit_at(norm, ccw))?))
}

/// Whether `v` lies in the cone.
pub fn cone_membership(cone: &NormalCone2D, v: &VectorN) -> Result<bool> {
    v.ensure_dim(2)?;
    Ok(cone.contains(v))
}

/// Whether two cone pairs have the same boundary directions, as unordered
/// sets and up to a global sign, each within angle `tol`.
pub fn cones_equal(a: &ConePair, b: &ConePair, tol: f64) -> bool {
    let (a1, a2) = (&a.cone.v1, &a.cone.v2);
    [b.clone(), b.reflected()].iter().any(|b| {
        let (b1, b2) = (&b.cone.v1, &b.cone.v2);
        (angular_distance(a1, b1) <= tol && angular_distance(a2, b2) <= tol)
            || (angular_distance(a1, b2) <= tol && angular_distance(a2, b1) <= tol)
    })
}

/// Whether every one of `samples` equally spaced unit vectors is a smooth point.
pub fn is_smooth_space<N: Norm + ?Sized>(norm: &N, samples: usize) -> Result<bool> {
    ensure_planar(norm)?;
    Ok((0..samples).into_par_iter().all(|i| {
        let u = unit_at(norm, TAU * i as f64 / samples as f64);
        smoothness_gap(norm, &u) <= DEFAULT_SMOOTHNESS_TOL
    }))
}

/// Sign-change brackets of `h` over `n` equally spaced angles on the circle.
fn sign_changes(h: &[f64]) -> Vec<usize> {
    let n = h.len();
    (0..n)
        .filter(|&i| {
            let (a, b) = (h[i], h[(i + 1) % n]);
            a == 0.0 || (a < 0.0) != (b < 0.0)
        })
        .collect()
}

fn bisect_root(h: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let neg_lo = h(lo) < 0.0;
    for _ in 0..64 {
        if hi - lo <= 1e-13 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if (h(mid) < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Finds unit `x` and `ε ∈ [0, 1)` with `F(x, ε) = K ∪ (−K)`.
///
/// For `v1 ≠ v2`, candidates are the points where
/// `h(x) = inf_λ ‖x + λv1‖ − inf_λ ‖x + λv2‖` changes sign on a 2048-angle
/// scan of the unit sphere, refined by bisection, with `ε = √(1 − d²)` for the
/// common distance `d`. For a half-line, candidates are the `x` with
/// `x ⊥_B v1` and `ε = 0`. A candidate is accepted only if rebuilding
/// `F(x, ε)` reproduces the cone within [`ROUND_TRIP_TOL`]; in a non-smooth
/// space a solution need not exist, and the failure is reported as
/// [`ConverseOutcome::NoSolution`].
pub fn find_x_for_cone<N: Norm + ?Sized>(norm: &N, cone: &NormalCone2D) -> Result<ConverseOutcome> {
    ensure_planar(norm)?;
    let target = ConePair::new(NormalCone2D::from_directions(norm, &cone.v1, &cone.v2)?);
    let (v1, v2) = (&target.cone.v1, &target.cone.v2);
    let smooth = is_smooth_space(norm, SMOOTHNESS_SAMPLES)?;
    let angles: Vec<f64> = (0..CONVERSE_SCAN).map(|i| TAU * i as f64 / CONVERSE_SCAN as f64).collect();
    let step = TAU / CONVERSE_SCAN as f64;

    let half_line = target.cone.is_half_line();
    let h = |a: f64| {
        let x = unit_at(norm, a);
        if half_line {
            derivative(norm, &x, v1, Side::Plus)
        } else {
            line_distance(norm, &x, v1) - line_distance(norm, &x, v2)
        }
    };
    let values: Vec<f64> = angles.par_iter().map(|&a| h(a)).collect();
    let roots = sign_changes(&values);

    let mut tried = 0;
    for &i in &roots {
        let a = if values[i] == 0.0 { angles[i] } else { bisect_root(h, angles[i], angles[i] + step) };
        let x = unit_at(norm, wrap_angle(a));
        let eps = if half_line {
            0.0
        } else {
            let d = 0.5 * (line_distance(norm, &x, v1) + line_distance(norm, &x, v2));
            (1.0 - d * d).max(0.0).sqrt()
        };
        if !(0.0..1.0).contains(&eps) {
            continue;
        }
        tried += 1;
        let rebuilt = f_cone(norm, &x, eps)?;
        if cones_equal(&rebuilt.pair, &target, ROUND_TRIP_TOL) {
            return Ok(ConverseOutcome::Found { x, eps });
        }
    }
    let mut reason = format!(
        "no x on the unit sphere reproduces the cone ({} sign changes scanned, {} candidates rebuilt)",
        roots.len(),
        tried
    );
    if !smooth {
        reason.push_str("; the norm is not smooth, so a solution need not exist");
    }
    Ok(ConverseOutcome::NoSolution { reason })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_4;

    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::norm::NormSpec;
    use crate::ortho::is_bj_orthogonal;

    fn l(p: f64) -> NormSpec {
        NormSpec::lp(p, 2).unwrap()
    }

    fn v(a: f64, b: f64) -> VectorN {
        VectorN::xy(a, b)
    }

    fn pair(a: VectorN, b: VectorN) -> ConePair {
        ConePair::new(NormalCone2D::new(a, b).unwrap())
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        (a[0] - b[0]).abs() <= tol && (a[1] - b[1]).abs() <= tol
    }

    #[test]
    fn membership_by_linear_system() {
        let c = NormalCone2D::new(v(1.0, 0.0), v(0.0, 1.0)).unwrap();
        assert!(cone_membership(&c, &v(2.0, 3.0)).unwrap());
        assert!(!cone_membership(&c, &v(-1.0, 1.0)).unwrap());
        let c = NormalCone2D::new(v(0.6, 0.8), v(-0.6, 0.8)).unwrap();
        // α = β = 0.625
        assert!(cone_membership(&c, &v(0.0, 1.0)).unwrap());
        assert!(cone_membership(&c, &VectorN::zeros(2)).unwrap());
        assert!(cone_membership(&c, &VectorN::from_slice(&[1.0, 2.0, 3.0])).is_err());
    }

    #[test]
    fn half_line_membership() {
        let c = NormalCone2D::new(v(0.0, 1.0), v(0.0, 1.0)).unwrap();
        assert!(c.is_half_line());
        assert!(c.contains(&[0.0, 5.0]));
        assert!(!c.contains(&[0.0, -5.0]));
        assert!(!c.contains(&[0.1, 5.0]));
        assert!(ConePair::new(c).contains(&[0.0, -5.0]));
    }

    #[test]
    fn opposite_boundaries_rejected() {
        assert!(matches!(NormalCone2D::new(v(1.0, 0.0), v(-2.0, 0.0)), Err(Error::InvalidCone(_))));
        assert!(NormalCone2D::new(v(0.0, 0.0), v(1.0, 0.0)).is_err());
    }

    #[test]
    fn cone_equality() {
        let a = pair(v(0.6, 0.8), v(-0.6, 0.8));
        assert!(cones_equal(&a, &a, 1e-12));
        assert!(cones_equal(&a, &a.reflected(), 1e-12));
        assert!(cones_equal(&a, &pair(v(-0.6, 0.8), v(0.6, 0.8)), 1e-12));
        let b = pair(v(0.6, 0.8), v(-0.7, 0.714_142_842_854_285));
        // second boundary is ~0.068 rad away
        assert!(angular_distance(&[-0.6, 0.8], &[-0.7, 0.714_142_842_854_285]) > 1e-2);
        assert!(!cones_equal(&a, &b, 1e-6));
    }

    #[test]
    fn bj_direction_examples() {
        let a = 40f64.to_radians();
        let y = find_bj_direction(&l(2.0), &v(a.cos(), a.sin())).unwrap();
        let expected = [-a.sin(), a.cos()];
        assert!(close(&y, &expected, 1e-8) || close(&y, &[-expected[0], -expected[1]], 1e-8), "{y}");

        let y = find_bj_direction(&NormSpec::linf(2), &v(1.0, 0.0)).unwrap();
        assert!(close(&y, &[0.0, 1.0], 1e-8) || close(&y, &[0.0, -1.0], 1e-8), "{y}");

        let y = find_bj_direction(&NormSpec::linf(2), &v(1.0, 1.0)).unwrap();
        assert!(is_bj_orthogonal(&NormSpec::linf(2), &v(1.0, 1.0), &y).unwrap());
        assert!(close(&y, &[-1.0, 0.0], 1e-8), "{y}");
    }

    #[test]
    fn euclidean_f_cone() {
        let f = f_cone(&l(2.0), &v(1.0, 0.0), 0.6).unwrap();
        let expected = pair(v(0.6, 0.8), v(-0.6, 0.8));
        assert!(cones_equal(&f.pair, &expected, 1e-7), "{:?}", f.pair);
        assert!(f.t1 > 0.0 && f.t1 < 1.0 && f.t2 > 0.0 && f.t2 < 1.0);
        assert!(is_bj_orthogonal(&l(2.0), &v(1.0, 0.0), &f.witness_y).unwrap());
    }

    #[test]
    fn smooth_f_cone_at_zero_is_a_half_line() {
        let x = unit_at(&l(3.0), 0.7);
        let f = f_cone(&l(3.0), &x, 0.0).unwrap();
        assert!(angular_distance(&f.pair.cone.v1, &f.witness_y) < 1e-6);
        assert!(angular_distance(&f.pair.cone.v2, &f.witness_y) < 1e-6);
    }

    #[test]
    fn taxicab_f_cone_at_zero() {
        // F((1,0), 0) = {y : |y₁| ≤ |y₂|} in ℓ1
        let f = f_cone(&l(1.0), &v(1.0, 0.0), 0.0).unwrap();
        let expected = pair(v(0.5, 0.5), v(-0.5, 0.5));
        assert!(cones_equal(&f.pair, &expected, 1e-7), "{:?}", f.pair);
    }

    #[test]
    fn f_cone_input_errors() {
        assert_eq!(f_cone(&l(2.0), &v(2.0, 0.0), 0.5).unwrap_err(), Error::NonUnit(2.0));
        assert_eq!(f_cone(&l(2.0), &v(1.0, 0.0), 1.5).unwrap_err(), Error::InvalidEpsilon(1.5));
        assert_eq!(
            f_cone(&NormSpec::linf(3), &VectorN::from_slice(&[1.0, 0.0, 0.0]), 0.5).unwrap_err(),
            Error::NotPlanar(3)
        );
    }

    #[test]
    fn exceptional_sets() {
        let s = s_set(&l(2.0), &v(1.0, 0.0), 0.6).unwrap();
        assert_eq!(s.len(), 4);
        for e in [[0.6, 0.8], [-0.6, 0.8], [0.6, -0.8], [-0.6, -0.8]] {
            assert!(s.iter().any(|p| close(p, &e, 1e-8)), "{e:?} missing from {s:?}");
        }

        let s = s_set(&l(2.0), &v(1.0, 0.0), 0.0).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().any(|p| close(p, &[0.0, 1.0], 1e-8)));
        assert!(s.iter().any(|p| close(p, &[0.0, -1.0], 1e-8)));

        // Birkhoff-James directions of the corner (1,1) fill the closed
        // second and fourth quadrants of the square; the arc ends are ±e₁, ±e₂.
        let s = s_set(&NormSpec::linf(2), &v(1.0, 1.0), 0.0).unwrap();
        assert_eq!(s.len(), 4);
        for e in [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]] {
            assert!(s.iter().any(|p| close(p, &e, 1e-8)), "{e:?} missing from {s:?}");
        }
    }

    #[test]
    fn euclidean_g_cone_matches_f_cone() {
        let g = g_cone(&l(2.0), &v(1.0, 0.0), 0.6).unwrap();
        let f = f_cone(&l(2.0), &v(1.0, 0.0), 0.6).unwrap();
        assert!(cones_equal(&g, &f.pair, 1e-7));
        assert!(cones_equal(&g, &pair(v(0.6, 0.8), v(-0.6, 0.8)), 1e-7));
    }

    #[test]
    fn g_cone_at_zero_is_the_bj_line() {
        let x = unit_at(&l(3.0), 1.1);
        let g = g_cone(&l(3.0), &x, 0.0).unwrap();
        let z = find_bj_direction(&l(3.0), &x).unwrap();
        assert!(angular_distance(&g.cone.v1, &z) < 1e-6);
        assert!(angular_distance(&g.cone.v2, &z) < 1e-6);

        let g = g_cone(&l(3.0), &v(1.0, 0.0), 0.3).unwrap();
        let z = find_bj_direction(&l(3.0), &v(1.0, 0.0)).unwrap();
        assert!(g.contains(&z));
    }

    #[test]
    fn g_cone_refuses_corners() {
        assert!(matches!(
            g_cone(&NormSpec::linf(2), &v(1.0, 1.0), 0.3),
            Err(Error::NonSmooth { .. })
        ));
    }

    #[test]
    fn converse_euclidean() {
        let cone = NormalCone2D::new(v(0.6, 0.8), v(-0.6, 0.8)).unwrap();
        match find_x_for_cone(&l(2.0), &cone).unwrap() {
            ConverseOutcome::Found { x, eps } => {
                assert!(close(&x, &[1.0, 0.0], 1e-7) || close(&x, &[-1.0, 0.0], 1e-7), "{x}");
                assert_abs_diff_eq!(eps, 0.6, epsilon = 1e-7);
            }
            other => panic!("{other:?}"),
        }

        let half = NormalCone2D::new(v(0.0, 1.0), v(0.0, 1.0)).unwrap();
        match find_x_for_cone(&l(2.0), &half).unwrap() {
            ConverseOutcome::Found { x, eps } => {
                assert!(close(&x, &[1.0, 0.0], 1e-7) || close(&x, &[-1.0, 0.0], 1e-7), "{x}");
                assert_eq!(eps, 0.0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn converse_fails_in_the_square() {
        let linf = NormSpec::linf(2);
        let cone = NormalCone2D::from_directions(&linf, &v(-0.5, 1.0), &v(-1.0, 1.0)).unwrap();
        match find_x_for_cone(&linf, &cone).unwrap() {
            ConverseOutcome::NoSolution { reason } => assert!(reason.contains("not smooth"), "{reason}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrap_and_angles() {
        assert_abs_diff_eq!(wrap_angle(3.0 * PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(wrap_angle(-FRAC_PI_4), -FRAC_PI_4, epsilon = 1e-15);
        assert_abs_diff_eq!(angular_distance(&[1.0, 0.0], &[-1.0, 0.0]), PI, epsilon = 1e-15);
    }
}
