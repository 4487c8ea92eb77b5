//! Exact and numeric kernels for lattice 2-gauge theory.
//!
//! The crate is organized around two regimes that never mix inside a single
//! computation:
//!
//! * an **exact regime** over finite crossed modules (Cayley tables, counting
//!   measure, rational arithmetic) in which every algebraic identity is
//!   checked as an equality, and
//! * a **numeric regime** over matrix Lie 2-algebras and represented
//!   R-matrices in which identities are checked as residual norms against
//!   fixed tolerances.
//!
//! Modules mirror the subsystems: finite group / matrix kernels
//! ([`algebra`]), crossed modules and Lie 2-algebras ([`crossed`]),
//! combinatorial 2-complexes ([`complex`]), holonomy configurations and gauge
//! orbits ([`holonomy`]), graph-state Hopf structure ([`statehopf`]), the
//! gauge-transformation Hopf structure ([`gaugehopf`]), classical/quantum
//! 2-R-matrices ([`rmatrix`]) and the lattice 2-algebra ([`lattice2`]).

pub mod algebra;
pub mod complex;
pub mod crossed;
pub mod error;
pub mod gaugehopf;
pub mod holonomy;
pub mod io;
pub mod lattice2;
pub mod library;
pub mod report;
pub mod rmatrix;
pub mod statehopf;

pub use error::CoreError;

/// Residual tolerance for exactly-constructed numeric data (basis
/// commutators, structure constants, direct Kronecker identities).
pub const TOL_CONSTRUCT: f64 = 1e-12;
/// Residual tolerance for composite represented identities (Yang-Baxter,
/// quasitriangularity, equivariance, braid relations).
pub const TOL_COMPOSITE: f64 = 1e-10;
/// Residual tolerance for Jacobi-type checks, where three nested products
/// amplify round-off.
pub const TOL_JACOBI: f64 = 1e-9;
