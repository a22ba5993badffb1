use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::fan::ConeRef;
use crate::linalg::RatVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero vector has no primitive generator")]
    ZeroVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("constraint {index} has {found} coefficients, system has {expected} variables")]
    Width {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("certificate has {found} {kind} multipliers, system has {expected}")]
    CertificateShape {
        kind: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("variable index {index} out of range for {vars} variables")]
    VariableIndex { index: usize, vars: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("fan rank must be positive")]
    ZeroRank,
    #[error("ray {index} has length {found}, rank is {rank}")]
    RayLength { index: usize, rank: usize, found: usize },
    #[error("ray {0} is the zero vector")]
    ZeroRay(usize),
    #[error("ray {0} is not primitive")]
    NotPrimitive(usize),
    #[error("rays {0} and {1} coincide")]
    DuplicateRay(usize, usize),
    #[error("cone {cone} references ray {ray}, fan has {count} rays")]
    RayIndex { cone: usize, ray: usize, count: usize },
    #[error("cone {0} repeats a ray index")]
    RepeatedIndex(usize),
    #[error("cone {0} has linearly dependent generators (not simplicial)")]
    NotSimplicial(usize),
    #[error("maximal cones {0} and {1} coincide")]
    DuplicateCone(usize, usize),
    #[error("maximal cone {0} is a face of maximal cone {1}")]
    NestedCone(usize, usize),
    #[error("cone {0:?} is not a cone of the fan")]
    UnknownCone(ConeRef),
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("fan has no full-dimensional maximal cone")]
    NoFullCone,
    #[error("maximal cones {first} and {second} do not meet in a common face")]
    Overlap {
        first: usize,
        second: usize,
        witness: Option<RatVec>,
    },
    #[error("map does not send the fan into the target fan")]
    Incompatible,
    #[error("map has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MapShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("invalid projection: {0}")]
    Projection(String),
    #[error("polytope: {0}")]
    Polytope(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectivityError {
    #[error("projectivity is only decided for complete fans")]
    NotComplete,
    #[error("solver evidence failed re-verification: {0}")]
    Unverified(&'static str),
    #[error("cyclic certificate check failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Fan(#[from] FanError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxError {
    #[error("rays do not span the ambient space")]
    RaysDoNotSpan,
    #[error("point has {found} coordinates, fan has {expected} rays")]
    PointLength { expected: usize, found: usize },
    #[error("group element has {found} parameters, expected {expected}")]
    ParamCount { expected: usize, found: usize },
    #[error("group parameter {0} is zero")]
    ZeroParameter(usize),
    #[error("point lies in the irrelevant locus (zero set {0:?})")]
    InIrrelevantLocus(Vec<usize>),
    #[error("cone {0:?} is not a smooth maximal cone of the fan")]
    BadChart(ConeRef),
    #[error("point is not in the chart of cone {0:?}")]
    NotInChart(ConeRef),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the fan family needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("the orbit report is only defined for n = 3, got {0}")]
    OnlyRankThree(usize),
    #[error("parameter vector has length {found}, expected {expected}")]
    ParamLength { expected: usize, found: usize },
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Cox(#[from] CoxError),
    #[error(transparent)]
    Fan(#[from] FanError),
}
