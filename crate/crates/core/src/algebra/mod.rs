//! The Clifford algebra Cl(p,q) with a diagonal metric, generic over the
//! coefficient ring.

mod blade;
mod linalg;
mod multivector;
mod parse;
mod signature;

pub use blade::{blade_norm, blade_product, reorder_sign, Blade};
pub use linalg::solve;
pub use multivector::{Multivector, Mv};
pub use parse::{parse_multivector, parse_scalar};
pub use signature::{Signature, MAX_DIM};
