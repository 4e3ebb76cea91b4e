//! Birkhoff-James orthogonality and its approximate variants in
//! finite-dimensional normed spaces.
//!
//! A norm is anything implementing [`Norm`]; [`NormSpec`] covers the ℓp family
//! and symmetric polygon norms in the plane. The [`cone2d`] module builds the
//! cone decompositions of the approximate-orthogonality sets in the plane,
//! [`highdim`] reduces higher dimensions to planar sections, and [`oracle`]
//! holds brute-force reference computations.

pub mod cone2d;
pub mod error;
pub mod highdim;
pub mod minimize;
pub mod norm;
pub mod oracle;
pub mod ortho;
pub mod vector;

pub use cone2d::{
    angular_distance, cone_membership, cones_equal, f_cone, find_bj_direction, find_x_for_cone, g_cone,
    is_smooth_space, s_set, ConePair, ConverseOutcome, FConeResult, NormalCone2D,
};
pub use error::{Error, Result};
pub use highdim::{f_membership, g_membership, restrict_norm, PlaneSection};
pub use minimize::{dist_to_line, golden_section_min, min_b_functional, sup_b_ratio, EpsMin, MinResult};
pub use norm::{
    is_smooth_point, norm_value, normalize, one_sided_derivative, sphere_point, LpNorm, Norm, NormSpec,
    PolygonNorm, Side,
};
pub use oracle::{brute_force_min, circular_components, scan_ball, scan_csv, scan_f, scan_g, Components, SphereScan};
pub use ortho::{
    eps_b_min, eps_d_min, in_x_minus, in_x_plus, is_approx_orth_b, is_approx_orth_d, is_bj_orthogonal, orth_report,
    OrthReport,
};
pub use vector::VectorN;
