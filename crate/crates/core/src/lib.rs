//! Exact Ext-dimension tables for the constituents of the principal series
//! `Ps(1, ω, …, ω^{n-1})` of `SL_n`.
//!
//! The dimension of `Ext^r(π_a, π_b)` is the multiplicity of the character
//! `b·a^{-1}` of `Z/n` in `Λ^r` of the augmentation representation. This crate
//! computes that table three independent ways:
//!
//! * subset-sum enumeration ([`exterior::subset_sum_mult`]),
//! * character orthogonality on `det(I + t·g^k)` ([`exterior::isotypic_mult`]),
//! * ranks of isotypic projectors on the cohomology of the lattice `A`
//!   ([`koszul::semidirect_cohomology_dim`]),
//!
//! and cross-checks the result against the Clifford-theoretic transfer to
//! `A ⋊ S_n`, a Koszul-complex computation of `H^*(A, χ)`, and Ramanujan sums.
//!
//! All arithmetic is exact: rationals are arbitrary precision and roots of
//! unity live in [`cyclotomic::CycNum`].

pub mod clifford;
pub mod cyclotomic;
pub mod error;
pub mod exterior;
pub mod intmat;
pub mod koszul;
pub mod lattice;
pub mod tables;

pub use cyclotomic::{cyclotomic_poly, zeta_pow, CycMatrix, CycNum, IntPoly};
pub use error::{Error, Result};
pub use intmat::IntMatrix;
pub use lattice::{LatticeRep, LatticeSpec};
