use thiserror::Error;

use crate::bending::BendingMove;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Replayable state attached to a failed reduction.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionFailure {
    pub reason: String,
    /// Chart coordinates of the centers when the reducer gave up.
    pub centers: Vec<num_complex::Complex64>,
    pub epsilon: i8,
    /// Moves applied to the input before giving up.
    pub moves: Vec<BendingMove>,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero vector does not represent a projective point")]
    ZeroVector,
    #[error("non-finite coordinates")]
    NonFinite,
    #[error("argument is isotropic (on the absolute)")]
    IsotropicArgument,
    #[error("point is not in the disc")]
    NotInDisc,
    #[error("point is not isotropic")]
    NotIsotropic,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("geodesics coincide")]
    SameGeodesic,
    #[error("cycle has coincident points")]
    DegenerateCycle,
    #[error("bad elliptic parameter: {0}")]
    BadParameter(String),
    #[error("matrix is not in SU(1,1): |a|^2 - |b|^2 = {0}")]
    NotSpecialUnitary(f64),
    #[error("isometry is not hyperbolic")]
    NotHyperbolic,
    #[error("matrix is not ± a reflection")]
    NotAReflection,
    #[error("relation violated: residual {residual:.3e}")]
    RelationViolated { residual: f64 },
    #[error("relation length {0} is not 2 or at least 5")]
    BadLength(usize),
    #[error("a cancellation must have sign -1")]
    SignMismatch,
    #[error("index {index} out of range for length {len}")]
    BadIndex { index: usize, len: usize },
    #[error("consecutive centers {0} and {0}+1 coincide")]
    ConsecutiveCoincidence(usize),
    #[error("target point is not on the bending geodesic")]
    TargetOffGeodesic,
    #[error("representation is maximal, hence basic; nothing to reduce")]
    AlreadyMaximal,
    #[error("reduction failed: {}", .0.reason)]
    ReductionFailed(Box<ReductionFailure>),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("boundary points do not form a positive cycle")]
    NotPositiveCycle,
    #[error("geodesics for center {0} do not intersect")]
    IntersectionMissing(usize),
    #[error("closing center is off the axis or on the wrong side of the base center")]
    ClosingCenterOffAxis,
    #[error("representation is not maximal")]
    NotMaximal,
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
