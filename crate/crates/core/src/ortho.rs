//! Birkhoff-James orthogonality, the one-sided relations `x⁺`/`x⁻`, and the
//! two approximate relations `⊥_D^ε` and `⊥_B^ε`.
//!
//! Every predicate accepts the boundary: comparisons carry a one-sided slack
//! of [`PREDICATE_TOL`] in favour of "orthogonal". The zero vector `y = θ` is
//! orthogonal to everything under every relation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minimize::{b_functional_min, b_ratio_sup, check_eps, line_distance, EpsMin};
use crate::norm::{derivative, Norm, Side};
use crate::vector::{are_collinear, VectorN};

pub const PREDICATE_TOL: f64 = 1e-9;

/// Orthogonality profile of a pair `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OrthReport {
    pub bj: bool,
    pub in_plus: bool,
    pub in_minus: bool,
    #[serde(rename = "eps_D_min")]
    pub eps_d_min: f64,
    #[serde(rename = "eps_B_min")]
    pub eps_b_min: f64,
    pub degenerate: bool,
}

fn check_x<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<()> {
    x.ensure_dim(norm.dim())?;
    y.ensure_dim(norm.dim())?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    Ok(())
}

fn check_both<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<()> {
    check_x(norm, x, y)?;
    if y.is_zero() {
        return Err(Error::ZeroVector("y"));
    }
    Ok(())
}

/// `‖x + λy‖ ≥ ‖x‖` for all real λ.
pub fn is_bj_orthogonal<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<bool> {
    check_both(norm, x, y)?;
    Ok(line_distance(norm, x, y) >= norm.eval(x) - PREDICATE_TOL)
}

/// `y ∈ x⁺`: `‖x + λy‖ ≥ ‖x‖` for all `λ ≥ 0`, i.e. `τ₊(x, y) ≥ 0`.
pub fn in_x_plus<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<bool> {
    check_x(norm, x, y)?;
    Ok(derivative(norm, x, y, Side::Plus) >= -PREDICATE_TOL)
}

/// `y ∈ x⁻`: `‖x + λy‖ ≥ ‖x‖` for all `λ ≤ 0`, i.e. `τ₋(x, y) ≤ 0`.
pub fn in_x_minus<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<bool> {
    check_x(norm, x, y)?;
    Ok(derivative(norm, x, y, Side::Minus) <= PREDICATE_TOL)
}

/// `x ⊥_D^ε y`: `inf_λ ‖x + λy‖ ≥ √(1−ε²)·‖x‖`.
pub fn is_approx_orth_d<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN, eps: f64) -> Result<bool> {
    check_eps(eps)?;
    check_x(norm, x, y)?;
    Ok(approx_d(norm, x, y, eps, PREDICATE_TOL))
}

pub(crate) fn approx_d<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64], eps: f64, tol: f64) -> bool {
    if y.iter().all(|&c| c == 0.0) {
        return true;
    }
    line_distance(norm, x, y) >= (1.0 - eps * eps).sqrt() * norm.eval(x) - tol
}

/// `x ⊥_B^ε y`: `‖x + λy‖² ≥ ‖x‖² − 2ε‖x‖‖λy‖` for all real λ.
pub fn is_approx_orth_b<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN, eps: f64) -> Result<bool> {
    check_eps(eps)?;
    check_x(norm, x, y)?;
    Ok(approx_b(norm, x, y, eps))
}

pub(crate) fn approx_b<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64], eps: f64) -> bool {
    if y.iter().all(|&c| c == 0.0) {
        return true;
    }
    b_functional_min(norm, x, y, eps) >= -PREDICATE_TOL
}

/// Least ε with `x ⊥_D^ε y`: `√(1 − (d/‖x‖)²)` where `d = inf_λ ‖x + λy‖`.
pub fn eps_d_min<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<EpsMin> {
    check_both(norm, x, y)?;
    if are_collinear(x, y) {
        return Ok(EpsMin { value: 1.0, degenerate: true });
    }
    Ok(EpsMin { value: d_eps(norm, x, y), degenerate: false })
}

pub(crate) fn d_eps<N: Norm + ?Sized>(norm: &N, x: &[f64], y: &[f64]) -> f64 {
    let r = line_distance(norm, x, y) / norm.eval(x);
    (1.0 - r * r).max(0.0).sqrt()
}

/// Least ε with `x ⊥_B^ε y`; see [`crate::minimize::sup_b_ratio`].
pub fn eps_b_min<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<EpsMin> {
    check_both(norm, x, y)?;
    if are_collinear(x, y) {
        return Ok(EpsMin { value: 1.0, degenerate: true });
    }
    Ok(EpsMin { value: b_ratio_sup(norm, x, y), degenerate: false })
}

/// Full orthogonality profile of a pair of non-zero vectors.
pub fn orth_report<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN) -> Result<OrthReport> {
    let d = eps_d_min(norm, x, y)?;
    let b = eps_b_min(norm, x, y)?;
    Ok(OrthReport {
        bj: is_bj_orthogonal(norm, x, y)?,
        in_plus: in_x_plus(norm, x, y)?,
        in_minus: in_x_minus(norm, x, y)?,
        eps_d_min: d.value,
        eps_b_min: b.value,
        degenerate: d.degenerate,
    })
}
