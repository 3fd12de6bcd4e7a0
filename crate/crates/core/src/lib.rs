//! Exact stability-condition machinery for coherent systems on integral
//! curves.
//!
//! A coherent system is tracked numerically by its class `(n, d, k)`: rank,
//! degree and the dimension of its space of sections. The modules build on
//! each other bottom-up:
//!
//! * [`rational`] and [`class`]: exact arithmetic, classes, extended slopes.
//! * [`charges`]: the standard, shifted, tilted and dagger central charges.
//! * [`regions`]: parameter regions, the Bogomolov-Gieseker coefficient
//!   solver, discreteness and orbit comparison.
//! * [`quadratic`]: support-property quadratic forms and certificates.
//! * [`bounds`]: section-count and Clifford bounds, admissibility filters.
//! * [`formal`]: finite fixture categories with HN filtrations and tilting.
//! * [`walls`]: walls and chambers in the gamma direction.
//! * [`lattice`]: box enumeration under linear constraints, shared by the
//!   certificate and wall scans.

pub mod bounds;
pub mod charges;
pub mod class;
pub mod error;
pub mod formal;
pub mod lattice;
pub mod quadratic;
pub mod rational;
pub mod regions;
pub mod walls;

pub use class::{compare_slopes, is_parallel, ClassVector, Genus, SlopeValue};
pub use error::{Error, Result};
pub use rational::Rational;
