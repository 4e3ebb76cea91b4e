//! Brute-force reference computations: grid minimization and dense scans of
//! the unit sphere. These are deliberately independent of the search-based
//! routines so the two can be checked against each other.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minimize::{b_functional_min, bracket_radius, check_eps, line_distance};
use crate::norm::{ensure_planar, eval_comb, unit_at, Norm};
use crate::ortho::{approx_b, approx_d};
use crate::vector::VectorN;

pub const MIN_GRID: usize = 1000;

/// Equally spaced sample of the unit sphere with a membership flag and the
/// value that decided it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereScan {
    pub n: usize,
    pub angles: Vec<f64>,
    pub members: Vec<bool>,
    pub values: Vec<f64>,
}

impl SphereScan {
    pub fn unit_vectors<N: Norm + ?Sized>(&self, norm: &N) -> Vec<VectorN> {
        self.angles.iter().map(|&a| unit_at(norm, a)).collect()
    }
}

/// A maximal run of `true` samples: indices `start, start+1, …` (mod n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub start: usize,
    pub len: usize,
}

impl Arc {
    pub fn end(&self, n: usize) -> usize {
        (self.start + self.len - 1) % n
    }

    pub fn middle(&self, n: usize) -> usize {
        (self.start + self.len / 2) % n
    }
}

/// Connected components of a circular membership mask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub count: usize,
    pub arcs: Vec<Arc>,
}

impl Components {
    /// Whether there are exactly two arcs and each maps onto the other under
    /// `v ↦ −v`, within `slack` samples at each end.
    pub fn is_antipodal_pair(&self, n: usize, slack: usize) -> bool {
        if self.count != 2 || !n.is_multiple_of(2) {
            return false;
        }
        let half = n / 2;
        let circ = |a: usize, b: usize| {
            let d = (a + n - b) % n;
            d.min(n - d)
        };
        let (a, b) = (self.arcs[0], self.arcs[1]);
        circ((a.start + half) % n, b.start) <= slack && circ((a.end(n) + half) % n, b.end(n)) <= slack
    }
}

/// Minimizes `λ ↦ ‖x + λy‖` by exhaustive grids: `grid_n` intervals over the
/// certified bracket, `grid_n` more around the best node, then a parabola
/// through the best three nodes (kept only if it evaluates lower).
///
/// Refinement is nested: the result at `grid_n` also takes the minimum of the
/// result at `grid_n / 10`, so it never increases when the grid is refined
/// tenfold.
pub fn brute_force_min<N: Norm + ?Sized>(norm: &N, x: &VectorN, y: &VectorN, grid_n: usize) -> Result<f64> {
    x.ensure_dim(norm.dim())?;
    y.ensure_dim(norm.dim())?;
    if grid_n < MIN_GRID {
        return Err(Error::InvalidArgument(format!("grid_n must be at least {MIN_GRID}, got {grid_n}")));
    }
    if y.is_zero() {
        return Ok(norm.eval(x));
    }
    let f = |l: f64| eval_comb(norm, 1.0, x, l, y);
    let r = bracket_radius(norm, x, y);
    let grid = |lo: f64, hi: f64| -> (f64, f64, f64) {
        let h = (hi - lo) / grid_n as f64;
        let (i, v) = (0..=grid_n)
            .into_par_iter()
            .map(|i| (i, f(lo + i as f64 * h)))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("grid is non-empty");
        (lo + i as f64 * h, v, h)
    };
    let (l0, _, h0) = grid(-r, r);
    let (l1, v1, h1) = grid(l0 - h0, l0 + h0);

    let (fm, fp) = (f(l1 - h1), f(l1 + h1));
    let curv = fm - 2.0 * v1 + fp;
    let mut best = v1.min(f(0.0));
    if curv > 0.0 {
        let l = l1 + 0.5 * h1 * (fm - fp) / curv;
        best = best.min(f(l));
    }
    if grid_n / 10 >= MIN_GRID {
        best = best.min(brute_force_min(norm, x, y, grid_n / 10)?);
    }
    Ok(best)
}

fn check_scan<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64, n: usize) -> Result<()> {
    ensure_planar(norm)?;
    x.ensure_dim(2)?;
    check_eps(eps)?;
    if x.is_zero() {
        return Err(Error::ZeroVector("x"));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("scan needs at least one sample".into()));
    }
    Ok(())
}

fn scan<F: Fn(&VectorN) -> (bool, f64) + Sync, N: Norm + ?Sized>(norm: &N, n: usize, f: F) -> SphereScan {
    let angles: Vec<f64> = (0..n).map(|i| TAU * i as f64 / n as f64).collect();
    let (members, values) = angles.par_iter().map(|&a| f(&unit_at(norm, a))).unzip();
    SphereScan { n, angles, members, values }
}

/// Samples `F(x, ε)`; the value is `inf_λ ‖x + λu‖`.
pub fn scan_f<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64, n: usize) -> Result<SphereScan> {
    check_scan(norm, x, eps, n)?;
    Ok(scan(norm, n, |u| (approx_d(norm, x, u, eps, crate::ortho::PREDICATE_TOL), line_distance(norm, x, u))))
}

/// Samples `G(x, ε)` from the defining inequality; the value is
/// `min_λ ‖x + λu‖² − ‖x‖² + 2ε‖x‖‖λu‖`.
pub fn scan_g<N: Norm + ?Sized>(norm: &N, x: &VectorN, eps: f64, n: usize) -> Result<SphereScan> {
    check_scan(norm, x, eps, n)?;
    Ok(scan(norm, n, |u| (approx_b(norm, x, u, eps), b_functional_min(norm, x, u, eps))))
}

/// Samples the sphere against the closed ball `‖z − w‖ ≤ ε`.
pub fn scan_ball<N: Norm + ?Sized>(norm: &N, z: &VectorN, eps: f64, n: usize) -> Result<SphereScan> {
    check_scan(norm, z, eps, n)?;
    Ok(scan(norm, n, |w| {
        let d = eval_comb(norm, 1.0, z, -1.0, w);
        (d <= eps, d)
    }))
}

/// Components of a circular mask; runs touching across index 0 are merged.
pub fn circular_components(mask: &[bool]) -> Components {
    let n = mask.len();
    if n == 0 || mask.iter().all(|&m| !m) {
        return Components { count: 0, arcs: Vec::new() };
    }
    if mask.iter().all(|&m| m) {
        return Components { count: 1, arcs: vec![Arc { start: 0, len: n }] };
    }
    // Start just after a non-member so no run wraps.
    let offset = (0..n).find(|&i| !mask[i]).expect("mask has a non-member") + 1;
    let mut arcs = Vec::new();
    let mut run: Option<Arc> = None;
    for k in 0..n {
        let i = (offset + k) % n;
        match (mask[i], run.as_mut()) {
            (true, Some(a)) => a.len += 1,
            (true, None) => run = Some(Arc { start: i, len: 1 }),
            (false, Some(_)) => arcs.push(run.take().expect("run is open")),
            (false, None) => {}
        }
    }
    arcs.extend(run);
    arcs.sort_by_key(|a| a.start);
    Components { count: arcs.len(), arcs }
}

/// CSV of a paired `F`/`G` scan: one row per sampled angle.
pub fn scan_csv<N: Norm + ?Sized>(norm: &N, f: &SphereScan, g: &SphereScan) -> Result<String> {
    if f.n != g.n {
        return Err(Error::InvalidArgument(format!("scan sizes differ: {} and {}", f.n, g.n)));
    }
    let mut out = String::from("angle_radians,unit_x,unit_y,inf_value,member_F,member_G\n");
    for i in 0..f.n {
        let u = unit_at(norm, f.angles[i]);
        writeln!(
            out,
            "{:.12},{:.12},{:.12},{:.12},{},{}",
            f.angles[i],
            u[0],
            u[1],
            f.values[i],
            u8::from(f.members[i]),
            u8::from(g.members[i])
        )
        .expect("writing to a String cannot fail");
    }
    Ok(out)
}
