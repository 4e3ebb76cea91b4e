#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use bjortho::{sphere_point, NormSpec, VectorN};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lp(p: f64, dim: usize) -> NormSpec {
    NormSpec::lp(p, dim).unwrap()
}

/// A random symmetric hexagon with vertices at radii in [0.7, 1.3].
pub fn random_hexagon(rng: &mut impl Rng) -> NormSpec {
    loop {
        let a0 = rng.gen_range(0.0..PI / 3.0);
        let a1 = a0 + rng.gen_range(PI / 4.0..5.0 * PI / 12.0);
        let a2 = a1 + rng.gen_range(PI / 4.0..5.0 * PI / 12.0);
        let half: Vec<[f64; 2]> = [a0, a1, a2]
            .iter()
            .map(|&a| {
                let r = rng.gen_range(0.7..1.3);
                [r * a.cos(), r * a.sin()]
            })
            .collect();
        let vertices = half.iter().copied().chain(half.iter().map(|v| [-v[0], -v[1]])).collect();
        if let Ok(n) = NormSpec::polyhedral(vertices) {
            return n;
        }
    }
}

/// The planar norms used by the structural checks, with display names.
pub fn planar_norms(rng: &mut impl Rng) -> Vec<(&'static str, NormSpec)> {
    vec![
        ("l1.5", lp(1.5, 2)),
        ("l2", lp(2.0, 2)),
        ("l3", lp(3.0, 2)),
        ("linf", NormSpec::linf(2)),
        ("hexagon", random_hexagon(rng)),
    ]
}

pub fn random_angle(rng: &mut impl Rng) -> f64 {
    rng.gen_range(0.0..TAU)
}

pub fn random_unit(norm: &NormSpec, rng: &mut impl Rng) -> VectorN {
    sphere_point(norm, random_angle(rng)).unwrap()
}

pub fn random_vector(dim: usize, rng: &mut impl Rng) -> VectorN {
    VectorN::new((0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap()
}
