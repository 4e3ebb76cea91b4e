//! Norms on ℝⁿ: ℓp norms, planar polygonal gauges, and the local calculus
//! (one-sided directional derivatives, smoothness) built on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::VectorN;

/// Default gap allowed between the one-sided derivatives at a smooth point.
pub const DEFAULT_SMOOTHNESS_TOL: f64 = 1e-7;

const DERIV_T_START: f64 = 1e-2;
const DERIV_T_STOP: f64 = 1e-10;
const DERIV_STABLE: f64 = 1e-9;

/// Anything that evaluates a norm on ℝⁿ.
///
/// `gradient` returns the derivative of the norm at `x` when it is known in
/// closed form; the local calculus falls back to difference quotients
/// otherwise.
pub trait Norm: Sync {
    fn dim(&self) -> usize;

    fn eval(&self, v: &[f64]) -> f64;

    fn gradient(&self, _x: &[f64]) -> Option<Vec<f64>> {
        None
    }
}

impl<N: Norm + ?Sized> Norm for &N {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn eval(&self, v: &[f64]) -> f64 {
        (**self).eval(v)
    }

    fn gradient(&self, x: &[f64]) -> Option<Vec<f64>> {
        (**self).gradient(x)
    }
}

/// Evaluates `‖a·x + b·y‖` without allocating for small dimensions.
pub(crate) fn eval_comb<N: Norm + ?Sized>(norm: &N, a: f64, x: &[f64], b: f64, y: &[f64]) -> f64 {
    let n = x.len();
    if n <= 8 {
        let mut buf = [0.0f64; 8];
        for i in 0..n {
            buf[i] = a * x[i] + b * y[i];
        }
        norm.eval(&buf[..n])
    } else {
        let v: Vec<f64> = x.iter().zip(y).map(|(p, q)| a * p + b * q).collect();
        norm.eval(&v)
    }
}

/// The ℓp norm on ℝⁿ, `p ∈ [1, ∞]`; `p = ∞` is stored as `f64::INFINITY`.
#[derive(Clone, Debug, PartialEq)]
pub struct LpNorm {
    p: f64,
    dim: usize,
}

impl LpNorm {
    pub fn new(p: f64, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidNorm("dimension must be positive".into()));
        }
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidNorm(format!("p must be >= 1 or infinite, got {p}")));
        }
        Ok(Self { p, dim })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    fn is_smooth_family(&self) -> bool {
        self.p > 1.0 && self.p.is_finite()
    }
}

impl Norm for LpNorm {
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, v: &[f64]) -> f64 {
        if self.p == 1.0 {
            return v.iter().map(|c| c.abs()).sum();
        }
        let m = v.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if self.p.is_infinite() || m == 0.0 {
            return m;
        }
        if self.p == 2.0 {
            return m * v.iter().map(|c| (c / m) * (c / m)).sum::<f64>().sqrt();
        }
        m * v.iter().map(|c| (c.abs() / m).powf(self.p)).sum::<f64>().powf(1.0 / self.p)
    }

    fn gradient(&self, x: &[f64]) -> Option<Vec<f64>> {
        if !self.is_smooth_family() {
            return None;
        }
        let n = self.eval(x);
        if n == 0.0 {
            return None;
        }
        let q = self.p - 1.0;
        Some(x.iter().map(|c| c.signum() * (c.abs() / n).powf(q)).collect())
    }
}

/// A planar norm whose unit ball is a centrally symmetric convex polygon.
///
/// Evaluation is the Minkowski functional of the polygon: with every edge
/// written as `{w : ⟨a_e, w⟩ = 1}`, the gauge is `max_e ⟨a_e, v⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonNorm {
    vertices: Vec<[f64; 2]>,
    facets: Vec<[f64; 2]>,
}

impl PolygonNorm {
    pub fn new(vertices: Vec<[f64; 2]>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::InvalidNorm(format!(
                "a symmetric polygon needs at least 4 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::InvalidNorm("vertex coordinates must be finite".into()));
        }
        let scale = vertices.iter().flatten().fold(0.0f64, |m, c| m.max(c.abs()));
        let sym_tol = 1e-9 * scale.max(1.0);
        for v in &vertices {
            let mirrored = vertices
                .iter()
                .any(|w| (w[0] + v[0]).abs() <= sym_tol && (w[1] + v[1]).abs() <= sym_tol);
            if !mirrored {
                return Err(Error::InvalidNorm(format!(
                    "vertex list is not symmetric about the origin: ({}, {}) has no mirror ({}, {})",
                    v[0], v[1], -v[0], -v[1]
                )));
            }
        }

        let mut sorted = vertices;
        sorted.sort_by(|a, b| a[1].atan2(a[0]).total_cmp(&b[1].atan2(b[0])));

        let n = sorted.len();
        let mut facets = Vec::with_capacity(n);
        for i in 0..n {
            let p = sorted[i];
            let q = sorted[(i + 1) % n];
            let cross = p[0] * q[1] - p[1] * q[0];
            if cross <= 1e-12 * scale * scale {
                return Err(Error::InvalidNorm(
                    "origin is not strictly inside the polygon (or vertices repeat)".into(),
                ));
            }
            facets.push([(q[1] - p[1]) / cross, (p[0] - q[0]) / cross]);
        }
        for a in &facets {
            for v in &sorted {
                if a[0] * v[0] + a[1] * v[1] > 1.0 + 1e-9 {
                    return Err(Error::InvalidNorm("vertices do not form a convex polygon".into()));
                }
            }
        }
        Ok(Self { vertices: sorted, facets })
    }

    /// Vertices in counter-clockwise order.
    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }
}

impl Norm for PolygonNorm {
    fn dim(&self) -> usize {
        2
    }

    fn eval(&self, v: &[f64]) -> f64 {
        self.facets
            .iter()
            .map(|a| a[0] * v[0] + a[1] * v[1])
            .fold(0.0f64, f64::max)
    }
}

/// A concrete norm description: an ℓp norm on ℝⁿ or a planar polygonal norm.
#[derive(Clone, Debug, PartialEq)]
pub enum NormSpec {
    Lp(LpNorm),
    Polyhedral(PolygonNorm),
}

impl NormSpec {
    pub fn lp(p: f64, dim: usize) -> Result<Self> {
        LpNorm::new(p, dim).map(NormSpec::Lp)
    }

    pub fn linf(dim: usize) -> Self {
        NormSpec::Lp(LpNorm { p: f64::INFINITY, dim })
    }

    pub fn polyhedral(vertices: Vec<[f64; 2]>) -> Result<Self> {
        PolygonNorm::new(vertices).map(NormSpec::Polyhedral)
    }

    /// Parses the JSON norm file format:
    /// `{"type":"lp","p":<number|"inf">,"dim":n}` or
    /// `{"type":"polyhedral","vertices":[[x,y],...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: NormFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&NormFile::from(self)).expect("norm file serializes")
    }
}

impl Norm for NormSpec {
    fn dim(&self) -> usize {
        match self {
            NormSpec::Lp(n) => n.dim(),
            NormSpec::Polyhedral(n) => n.dim(),
        }
    }

    fn eval(&self, v: &[f64]) -> f64 {
        match self {
            NormSpec::Lp(n) => n.eval(v),
            NormSpec::Polyhedral(n) => n.eval(v),
        }
    }

    fn gradient(&self, x: &[f64]) -> Option<Vec<f64>> {
        match self {
            NormSpec::Lp(n) => n.gradient(x),
            NormSpec::Polyhedral(n) => n.gradient(x),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum NormFile {
    Lp { p: Exponent, dim: usize },
    Polyhedral { vertices: Vec<[f64; 2]> },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Exponent {
    Finite(f64),
    Named(String),
}

impl TryFrom<NormFile> for NormSpec {
    type Error = Error;

    fn try_from(file: NormFile) -> Result<Self> {
        match file {
            NormFile::Lp { p, dim } => {
                let p = match p {
                    Exponent::Finite(p) => p,
                    Exponent::Named(s) if matches!(s.as_str(), "inf" | "Inf" | "infinity") => {
                        f64::INFINITY
                    }
                    Exponent::Named(s) => {
                        return Err(Error::Parse(format!("p must be a number or \"inf\", got {s:?}")))
                    }
                };
                NormSpec::lp(p, dim)
            }
            NormFile::Polyhedral { vertices } => NormSpec::polyhedral(vertices),
        }
    }
}

impl From<&NormSpec> for NormFile {
    fn from(spec: &NormSpec) -> Self {
        match spec {
            NormSpec::Lp(n) if n.p.is_infinite() => {
                NormFile::Lp { p: Exponent::Named("inf".into()), dim: n.dim }
            }
            NormSpec::Lp(n) => NormFile::Lp { p: Exponent::Finite(n.p), dim: n.dim },
            NormSpec::Polyhedral(n) => NormFile::Polyhedral { vertices: n.vertices.clone() },
        }
    }
}

/// Which one-sided limit of the difference quotient to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

/// `‖v‖`, with the dimension checked.
pub fn norm_value<N: Norm + ?Sized>(norm: &N, v: &VectorN) -> Result<f64> {
    v.ensure_dim(norm.dim())?;
    Ok(norm.eval(v))
}

pub(crate) fn ensure_planar<N: Norm + ?Sized>(norm: &N) -> Result<()> {
    if norm.dim() != 2 {
        return Err(Error::NotPlanar(norm.dim()));
    }
    Ok(())
}

/// The unit vector of the planar norm pointing at polar angle `angle`.
pub fn sphere_point<N: Norm + ?Sized>(norm: &N, angle: f64) -> Result<VectorN> {
    ensure_planar(norm)?;
    Ok(unit_at(norm, angle))
}

pub(crate) fn unit_at<N: Norm + ?Sized>(norm: &N, angle: f64) -> VectorN {
    let (s, c) = angle.sin_cos();
    let r = norm.eval(&[c, s]);
    VectorN::xy(c / r, s / r)
}

/// `v / ‖v‖`.
pub fn normalize<N: Norm + ?Sized>(norm: &N, v: &VectorN) -> Result<VectorN> {
    let r = norm_value(norm, v)?;
    if r == 0.0 {
        return Err(Error::ZeroVector("v"));
    }
    Ok(v.scaled(1.0 / r))
}

/// One-sided derivative `τ±(x, y) = lim_{t→0±} (‖x + t·y‖ − ‖x‖)/t`.
///
/// Uses the closed-form gradient when the norm has one. Otherwise the
/// difference quotient, which is monotone in `t` by convexity, is halved from
/// `t = 1e-2` until two successive values agree to `1e-9` (or `t < 1e-10`).
pub fn one_sided_derivative<N: Norm + ?Sized>(
    norm: &N,
    x: &VectorN,
    y: &VectorN,
    side: Side,
) -> Result<f64> {
    x.ensure_dim(norm.dim())?;
    y.ensure_dim(norm.dim())?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    Ok(derivative(norm, x, y, side))
}

pub(crate) fn derivative<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64], side: Side) -> f64 {
    if y.iter().all(|&c| c == 0.0) {
        return 0.0;
    }
    if let Some(g) = norm.gradient(x) {
        return g.iter().zip(y).map(|(a, b)| a * b).sum();
    }
    let sign = match side {
        Side::Plus => 1.0,
        Side::Minus => -1.0,
    };
    let base = norm.eval(x);
    let quotient = |t: f64| (eval_comb(norm, 1.0, x, sign * t, y) - base) / (sign * t);
    let mut t = DERIV_T_START;
    let mut prev = quotient(t);
    while t > DERIV_T_STOP {
        t *= 0.5;
        let q = quotient(t);
        if (q - prev).abs() < DERIV_STABLE {
            return q;
        }
        prev = q;
    }
    prev
}

/// Whether the planar norm is differentiable at `x`: the one-sided
/// derivatives in a direction independent of `x` differ by at most `tol`.
pub fn is_smooth_point<N: Norm + ?Sized>(norm: &N, x: &VectorN, tol: f64) -> Result<bool> {
    ensure_planar(norm)?;
    x.ensure_dim(2)?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    Ok(smoothness_gap(norm, x) <= tol)
}

/// `τ₊(x, x⊥) − τ₋(x, x⊥)` for the Euclidean perpendicular `x⊥`.
pub(crate) fn smoothness_gap<N: Norm + ?Sized>(norm: &N, x: &[f64]) -> f64 {
    let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
    let perp = [-x[1] / r, x[0] / r];
    derivative(norm, x, &perp, Side::Plus) - derivative(norm, x, &perp, Side::Minus)
}
