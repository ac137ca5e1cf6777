//! Representations of hyperelliptic groups in the Poincaré disc.
//!
//! A representation is a signed relation `R^{q_n} ... R^{q_1} = ±1` between
//! lifts of point reflections. The crate measures its area, deforms it by
//! bendings, tests discreteness through i-cycles, and reduces non-basic
//! relations to cancellations plus a maximal core.

pub mod area;
pub mod bending;
pub mod cli;
pub mod config;
pub mod disc;
pub mod error;
pub mod format;
pub mod isometry;
pub mod reduction;
pub mod render;
pub mod representation;
pub mod sample;
pub mod teichmuller;

pub use area::{polygon_area, triangle_area};
pub use bending::{apply_bending, bend_to_target, bending_group, BendingMove, Which};
pub use config::{tolerances, Tolerances};
pub use disc::{
    classify_point, distance, geodesic_through, intersect_geodesics, is_positive_cycle,
    on_geodesic, pairing, side_of, tance, CycleOrientation, Geodesic, PointKind, ProjPoint, Side,
};
pub use error::{Error, Result};
pub use isometry::{
    classify_isometry, elliptic, extract_reflection_center, hyperbolic_fixed_points, reflection,
    IsometryKind, Sign, SpecialUnitary,
};
pub use reduction::{decompose, reduce_once, Decomposition, ReductionCertificate};
pub use representation::{concatenate, ICycle, Representation};
pub use teichmuller::{from_boundary, regular_polygon, to_boundary, BoundaryCoordinates};

pub use num_complex::Complex64;
