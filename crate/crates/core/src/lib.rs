//! Exact geometric algebra over Cl(p,q) with inner-automorphic Z2-gradings,
//! spacetime splitting of products, metric, Hodge duality and the exterior
//! calculus, plus the real Dirac-Hestenes sector of Cl(1,3).

pub mod algebra;
pub mod calculus;
pub mod dirac;
pub mod error;
pub mod grading;
pub mod hodge;
pub mod identity;
pub mod scalars;
pub mod verify;

pub use error::{Error, Result};
