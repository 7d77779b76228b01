//! Exact curvature analysis of nilmanifolds and solvmanifolds attached to
//! gradations of real semisimple Lie algebras.
//!
//! A gradation is given by restricted root data (a root system with
//! multiplicities) and a characteristic element `Z = Σ c_i H^i`. From these
//! the crate computes the mean curvature vectors `Z_k` and `H₀`, the Ricci
//! eigenvalues of the nilradical `n = Σ_{k>0} g_k` and of its natural
//! one-dimensional solvable extension `R·H₀ + n`, and decides the Einstein
//! condition. Everything is exact rational arithmetic.
//!
//! Modules, bottom-up:
//! - [`rootsys`]: root systems, multiplicities, Killing-normalized Gram matrix.
//! - [`gradation`]: characteristic elements, layers, kinds, enumeration.
//! - [`curvature`]: mean curvature vectors, Ricci scalars, Einstein verdicts.
//! - [`oracle`]: brute-force `sl_n` structure constants for cross-checks.
//! - [`catalog`]: named real forms and a loader for user catalogs.
//! - [`report`], [`table`]: output documents and the reference table.

pub mod catalog;
pub mod curvature;
pub mod error;
pub mod gradation;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod rootsys;
pub mod table;

pub use error::{Error, Result};
pub use rational::Q;
