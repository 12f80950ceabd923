use thiserror::Error;

/// Errors raised by the library. Rejections that are part of a normal
/// verification outcome (a polygon that is not affinely regular, critical
/// points that do not fit the Chebyshev form) are not errors; they are
/// reported inside the corresponding check structs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no roots of a nonzero constant")]
    NoRootsOfConstant,
    #[error("identically zero")]
    IdenticallyZero,
    #[error("no critical points (degree {degree} < 2)")]
    NoCriticalPoints { degree: usize },
    #[error("non-finite value in {what}")]
    NonFinite { what: &'static str },
    #[error("empty root set (n = {n} < 2)")]
    EmptyRootSet { n: usize },
    #[error("not on normalized confocal ellipse")]
    NotOnConfocalEllipse,
    #[error("degenerate (rank-1) affine map, not decomposable")]
    RankDeficient,
    #[error("not an affine map: requires alpha != 0 and beta != 0")]
    NotAffine,
    #[error("not invertible (|alpha| = |beta|)")]
    NotInvertible,
    #[error("image is a segment, not an ellipse")]
    SegmentImage,
    #[error("need a polygon (n = {n} < 3)")]
    NeedPolygon { n: usize },
    #[error("degenerate segment [-1,1] (s = {s} <= 0)")]
    DegenerateSegment { s: f64 },
    #[error("degenerate confocal coordinate: point lies on [-1,1]")]
    DegenerateConfocal,
    #[error("invalid ellipse: {0}")]
    InvalidEllipse(&'static str),
    #[error("degenerate ellipse (zero minor axis)")]
    DegenerateEllipse,
    #[error("segment endpoints coincide")]
    CoincidentEndpoints,
    #[error("polygon vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("convex polygon required")]
    NotConvex,
    #[error("expected {expected} points, found {found}")]
    Cardinality { expected: usize, found: usize },
    #[error("degenerate level set (roots collinear or collapsing): level {level}")]
    DegenerateLevelSet { level: num_complex::Complex64 },
    #[error("similarity multiplier must be nonzero")]
    ZeroMultiplier,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
