//! Exact arithmetic in cyclotomic fields and linear algebra over them.
//!
//! Every value carries its order `n`; arithmetic between different orders is
//! an error rather than an implicit embedding.

mod field;
mod matrix;
mod poly;

pub use field::{zeta_pow, CycNum};
pub use matrix::CycMatrix;
pub use poly::{cyclotomic_poly, totient, IntPoly};
