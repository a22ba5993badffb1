//! Exact-arithmetic toolkit for simplicial toric fans.
//!
//! The crate builds the smooth complete non-projective fans `Σₙ` together
//! with their additive group action, and decides smoothness, completeness and
//! projectivity of simplicial fans with certificates that can be re-checked
//! independently. All arithmetic is over arbitrary-precision integers and
//! rationals; there is no floating point anywhere.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line front end live in the `fancert` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod additive;
pub mod cox;
pub mod fan;
pub mod linalg;
pub mod lp;
pub mod projectivity;

mod error;

pub use error::{CoxError, FamilyError, FanError, LinalgError, LpError, ProjectivityError};
pub use fan::{ConeRef, Fan, Polytope};
pub use linalg::{Int, IntMat, IntVec, Rat, RatVec};
pub use lp::{FarkasCertificate, Feasibility, LinearSystem};
