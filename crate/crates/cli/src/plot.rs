//! Figure data for cone commands: an SVG drawing and a sampled CSV.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use bjortho::{sphere_point, ConePair, NormSpec, VectorN};

const SPHERE_SAMPLES: usize = 720;
const ARC_SAMPLES: usize = 180;
const CANVAS: f64 = 480.0;
const MARGIN: f64 = 24.0;
const SPHERE_STROKE: &str = "#555555";
const SPHERE_WIDTH: f64 = 1.5;
const ARC_STROKE: &str = "#d62728";
const ARC_WIDTH: f64 = 5.0;
const X_STROKE: &str = "#1f77b4";
const X_WIDTH: f64 = 2.0;

fn unit(norm: &NormSpec, angle: f64) -> VectorN {
    sphere_point(norm, angle).expect("plots are only drawn for planar norms")
}

/// Maps plane coordinates to the canvas, y pointing up.
struct Frame {
    scale: f64,
}

impl Frame {
    fn new(norm: &NormSpec) -> Self {
        let extent = (0..SPHERE_SAMPLES)
            .map(|i| unit(norm, TAU * i as f64 / SPHERE_SAMPLES as f64))
            .map(|u| u[0].abs().max(u[1].abs()))
            .fold(0.0, f64::max);
        Self { scale: (CANVAS / 2.0 - MARGIN) / extent }
    }

    fn point(&self, v: &[f64]) -> String {
        format!("{:.2},{:.2}", CANVAS / 2.0 + self.scale * v[0], CANVAS / 2.0 - self.scale * v[1])
    }

    fn polyline(&self, points: &[VectorN], closed: bool, stroke: &str, width: f64) -> String {
        let coords: Vec<String> = points.iter().map(|p| self.point(p)).collect();
        let tag = if closed { "polygon" } else { "polyline" };
        format!(
            "  <{tag} points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width}\" stroke-linejoin=\"round\"/>\n",
            coords.join(" ")
        )
    }
}

/// Sphere points along the shorter arc from `a` to `b` (the cone arc).
fn arc(norm: &NormSpec, a: &VectorN, b: &VectorN) -> Vec<VectorN> {
    let start = a.angle();
    let mut sweep = (b.angle() - start).rem_euclid(TAU);
    if sweep > TAU / 2.0 {
        sweep -= TAU;
    }
    (0..=ARC_SAMPLES).map(|k| unit(norm, start + sweep * k as f64 / ARC_SAMPLES as f64)).collect()
}

pub fn svg(norm: &NormSpec, x: &VectorN, pair: &ConePair) -> String {
    let frame = Frame::new(norm);
    let sphere: Vec<VectorN> =
        (0..SPHERE_SAMPLES).map(|i| unit(norm, TAU * i as f64 / SPHERE_SAMPLES as f64)).collect();
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"0 0 {CANVAS} {CANVAS}\">"
    )
    .unwrap();
    out.push_str(&frame.polyline(&sphere, true, SPHERE_STROKE, SPHERE_WIDTH));
    let (v1, v2) = (pair.cone.v1(), pair.cone.v2());
    out.push_str(&frame.polyline(&arc(norm, v1, v2), false, ARC_STROKE, ARC_WIDTH));
    out.push_str(&frame.polyline(&arc(norm, &-v1, &-v2), false, ARC_STROKE, ARC_WIDTH));
    writeln!(
        out,
        "  <line x1=\"{c}\" y1=\"{c}\" x2=\"{}\" y2=\"{}\" stroke=\"{X_STROKE}\" stroke-width=\"{X_WIDTH}\"/>",
        CANVAS / 2.0 + frame.scale * x[0],
        CANVAS / 2.0 - frame.scale * x[1],
        c = CANVAS / 2.0
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}

pub fn cone_csv(norm: &NormSpec, pair: &ConePair) -> String {
    let mut out = String::from("angle_radians,unit_x,unit_y,in_cone\n");
    for i in 0..SPHERE_SAMPLES {
        let a = TAU * i as f64 / SPHERE_SAMPLES as f64;
        let u = unit(norm, a);
        writeln!(out, "{a:.12},{:.12},{:.12},{}", u[0], u[1], u8::from(pair.contains(&u))).unwrap();
    }
    out
}
