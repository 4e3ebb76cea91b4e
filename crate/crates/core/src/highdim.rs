//! Two-dimensional sections of a norm on ℝⁿ.
//!
//! `F(x, ε)` and `G(x, ε)` in any dimension are unions of their restrictions
//! to the planes `span{x, y}`; a [`PlaneSection`] presents such a plane as a
//! planar norm on coefficient coordinates, so every 2-D construction applies.

use crate::error::{Error, Result};
use crate::norm::{eval_comb, Norm, NormSpec};
use crate::ortho::{is_approx_orth_b, is_approx_orth_d};
use crate::vector::{are_collinear, VectorN};

/// The norm induced on `span{basis_x, basis_y}`, in coefficient coordinates:
/// `N(a, b) = ‖a·basis_x + b·basis_y‖`.
#[derive(Clone, Debug)]
pub struct PlaneSection<'a, N: Norm + ?Sized = NormSpec> {
    basis_x: VectorN,
    basis_y: VectorN,
    ambient: &'a N,
}

impl<'a, N: Norm + ?Sized> PlaneSection<'a, N> {
    pub fn basis_x(&self) -> &VectorN {
        &self.basis_x
    }

    pub fn basis_y(&self) -> &VectorN {
        &self.basis_y
    }

    pub fn ambient(&self) -> &N {
        self.ambient
    }

    /// The ambient vector `c₀·basis_x + c₁·basis_y`.
    pub fn embed(&self, c: &[f64]) -> VectorN {
        VectorN::lincomb(c[0], &self.basis_x, c[1], &self.basis_y)
    }

    /// Coefficients of an ambient vector lying in the plane.
    pub fn coefficients(&self, v: &VectorN) -> Result<VectorN> {
        v.ensure_dim(self.basis_x.dim())?;
        let (bx, by) = (&self.basis_x, &self.basis_y);
        let (xx, xy, yy) = (bx.dot(bx), bx.dot(by), by.dot(by));
        let (vx, vy) = (bx.dot(v), by.dot(v));
        let det = xx * yy - xy * xy;
        let c = VectorN::xy((vx * yy - vy * xy) / det, (vy * xx - vx * xy) / det);
        let residual = (v - &self.embed(&c)).euclidean_norm();
        if residual > 1e-9 * v.euclidean_norm().max(1.0) {
            return Err(Error::InvalidArgument(format!(
                "vector is not in the section plane (residual {residual:e})"
            )));
        }
        Ok(c)
    }
}

impl<N: Norm + ?Sized> Norm for PlaneSection<'_, N> {
    fn dim(&self) -> usize {
        2
    }

    fn eval(&self, c: &[f64]) -> f64 {
        eval_comb(self.ambient, c[0], &self.basis_x, c[1], &self.basis_y)
    }

    fn gradient(&self, c: &[f64]) -> Option<Vec<f64>> {
        let g = self.ambient.gradient(&self.embed(c))?;
        let dot = |b: &VectorN| g.iter().zip(b.iter()).map(|(p, q)| p * q).sum();
        Some(vec![dot(&self.basis_x), dot(&self.basis_y)])
    }
}

/// The section of `norm` on `span{x, y}` with basis `(x, y)`.
pub fn restrict_norm<'a, N: Norm + ?Sized>(norm: &'a N, x: &VectorN, y: &VectorN) -> Result<PlaneSection<'a, N>> {
    x.ensure_dim(norm.dim())?;
    y.ensure_dim(norm.dim())?;
    if are_collinear(x, y) {
        return Err(Error::LinearlyDependent);
    }
    Ok(PlaneSection { basis_x: x.clone(), basis_y: y.clone(), ambient: norm })
}

/// `y ∈ F(x, ε)`, evaluated directly in the ambient space.
pub fn f_membership<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64, y: &VectorN) -> Result<bool> {
    is_approx_orth_d(norm, x, y, eps)
}

/// `y ∈ G(x, ε)`, evaluated directly in the ambient space.
pub fn g_membership<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64, y: &VectorN) -> Result<bool> {
    is_approx_orth_b(norm, x, y, eps)
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;

    fn v3(a: f64, b: f64, c: f64) -> VectorN {
        VectorN::from_slice(&[a, b, c])
    }

    #[test]
    fn sup_norm_section() {
        let linf = NormSpec::linf(3);
        let s = restrict_norm(&linf, &v3(1.0, 1.0, 0.0), &v3(0.0, 0.0, 1.0)).unwrap();
        for (a, b) in [(0.3, -0.9), (-2.0, 1.5), (0.0, 0.0), (1.0, 1.0)] {
            assert_eq!(s.eval(&[a, b]), f64::max(f64::abs(a), f64::abs(b)));
        }
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn euclidean_and_taxicab_sections() {
        let l2 = NormSpec::lp(2.0, 3).unwrap();
        let s = restrict_norm(&l2, &v3(1.0, 0.0, 0.0), &v3(0.0, 0.6, 0.8)).unwrap();
        assert_abs_diff_eq!(s.eval(&[3.0, 4.0]), 5.0, epsilon = 1e-14);

        let l1 = NormSpec::lp(1.0, 3).unwrap();
        let s = restrict_norm(&l1, &v3(1.0, 0.0, 0.0), &v3(0.0, 1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(s.eval(&[3.0, -4.0]), 7.0, epsilon = 1e-14);
    }

    #[test]
    fn dependent_basis_rejected() {
        let l2 = NormSpec::lp(2.0, 3).unwrap();
        let e = restrict_norm(&l2, &v3(1.0, 2.0, 3.0), &v3(-2.0, -4.0, -6.0)).unwrap_err();
        assert_eq!(e, Error::LinearlyDependent);
    }

    #[test]
    fn coefficients_round_trip() {
        let l3 = NormSpec::lp(3.0, 3).unwrap();
        let s = restrict_norm(&l3, &v3(1.0, 2.0, 0.5), &v3(-0.3, 0.1, 2.0)).unwrap();
        let c = s.coefficients(&s.embed(&[0.7, -1.2])).unwrap();
        assert_abs_diff_eq!(c[0], 0.7, epsilon = 1e-12);
        assert_abs_diff_eq!(c[1], -1.2, epsilon = 1e-12);
        assert!(s.coefficients(&v3(0.0, 0.0, 0.0)).is_ok());
        assert!(s.coefficients(&v3(1.0, -1.0, 7.0)).is_err());
    }

    #[test]
    fn section_gradient_is_the_chain_rule() {
        let l3 = NormSpec::lp(3.0, 3).unwrap();
        let s = restrict_norm(&l3, &v3(1.0, 2.0, 0.5), &v3(-0.3, 0.1, 2.0)).unwrap();
        let g = s.gradient(&[0.4, 0.9]).unwrap();
        let h = 1e-6;
        let fd0 = (s.eval(&[0.4 + h, 0.9]) - s.eval(&[0.4 - h, 0.9])) / (2.0 * h);
        let fd1 = (s.eval(&[0.4, 0.9 + h]) - s.eval(&[0.4, 0.9 - h])) / (2.0 * h);
        assert_abs_diff_eq!(g[0], fd0, epsilon = 1e-8);
        assert_abs_diff_eq!(g[1], fd1, epsilon = 1e-8);
        assert!(restrict_norm(&NormSpec::linf(3), &v3(1.0, 0.0, 0.0), &v3(0.0, 1.0, 0.0))
            .unwrap()
            .gradient(&[1.0, 0.0])
            .is_none());
    }

    #[test]
    fn direct_membership() {
        let l2 = NormSpec::lp(2.0, 3).unwrap();
        let x = v3(1.0, 0.0, 0.0);
        for eps in [0.0, 0.5, 0.9] {
            assert!(f_membership(&l2, &x, eps, &v3(0.0, 1.0, 0.0)).unwrap());
            assert!(g_membership(&l2, &x, eps, &v3(0.0, 1.0, 0.0)).unwrap());
        }
        assert!(!f_membership(&l2, &x, 0.9, &x).unwrap());
        assert!(f_membership(&l2, &x, 0.9, &VectorN::zeros(3)).unwrap());
    }
}
