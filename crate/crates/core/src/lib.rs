//! Exact computations for monomial bound quiver algebras `kQ/I`: path
//! arithmetic, relation-cycle structure and potentials, gentle invariants,
//! a representation engine with syzygies, AR translates and Ext, and the
//! bound quivers of (m+2)-angulations of marked surfaces.
//!
//! Paths compose left to right: `alpha.beta` means `alpha` first.

pub mod analysis;
pub mod angulation;
pub mod fixtures;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod suites;

pub use quiver::{BoundQuiver, Path, Quiver, QuiverError};
