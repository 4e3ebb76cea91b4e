//! Coordinate vectors in ℝⁿ.

use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite, non-empty coordinate vector.
///
/// The zero vector is representable; [`VectorN::is_zero`] tells it apart.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct VectorN {
    coords: Vec<f64>,
}

impl VectorN {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyVector);
        }
        if let Some(i) = coords.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { coords })
    }

    /// Builds a vector from trusted coordinates.
    ///
    /// Panics on empty or non-finite input; meant for literals and internal
    /// arithmetic whose finiteness is already known.
    pub fn from_slice(coords: &[f64]) -> Self {
        Self::new(coords.to_vec()).expect("finite non-empty coordinates")
    }

    pub fn xy(x: f64, y: f64) -> Self {
        Self::from_slice(&[x, y])
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self { coords: vec![0.0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self { coords: self.coords.iter().map(|v| c * v).collect() }
    }

    /// `a·self + b·other`.
    pub fn lincomb(a: f64, x: &VectorN, b: f64, y: &VectorN) -> Self {
        debug_assert_eq!(x.dim(), y.dim());
        Self { coords: x.iter().zip(y.iter()).map(|(p, q)| a * p + b * q).collect() }
    }

    pub fn dot(&self, other: &VectorN) -> f64 {
        self.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn euclidean_norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Polar angle in radians; only meaningful for planar vectors.
    pub fn angle(&self) -> f64 {
        self.coords[1].atan2(self.coords[0])
    }

    pub(crate) fn ensure_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch { expected, found: self.dim() });
        }
        Ok(())
    }
}

impl Deref for VectorN {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.coords
    }
}

impl fmt::Display for VectorN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match f.precision() {
                Some(p) => write!(f, "{c:.p$}")?,
                None => write!(f, "{c}")?,
            }
        }
        write!(f, ")")
    }
}

impl Add for &VectorN {
    type Output = VectorN;

    fn add(self, rhs: &VectorN) -> VectorN {
        VectorN::lincomb(1.0, self, 1.0, rhs)
    }
}

impl Sub for &VectorN {
    type Output = VectorN;

    fn sub(self, rhs: &VectorN) -> VectorN {
        VectorN::lincomb(1.0, self, -1.0, rhs)
    }
}

impl Mul<&VectorN> for f64 {
    type Output = VectorN;

    fn mul(self, rhs: &VectorN) -> VectorN {
        rhs.scaled(self)
    }
}

impl Neg for &VectorN {
    type Output = VectorN;

    fn neg(self) -> VectorN {
        self.scaled(-1.0)
    }
}

/// Gram-determinant test for linear dependence, scale-free.
pub(crate) fn are_collinear(x: &[f64], y: &[f64]) -> bool {
    let xx: f64 = x.iter().map(|a| a * a).sum();
    let yy: f64 = y.iter().map(|a| a * a).sum();
    let xy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    if xx == 0.0 || yy == 0.0 {
        return true;
    }
    let gram = (xx * yy - xy * xy).max(0.0);
    gram <= 1e-24 * xx * yy
}
