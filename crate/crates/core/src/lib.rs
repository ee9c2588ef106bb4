//! Exact computations with directed quiver algebras: the type A higher Auslander algebras and
//! their relatives, modules and resolutions, complexes of projectives, and a combinatorial arc
//! model for symmetric products of a disk with stops.

pub mod algebra;
pub mod arc;
pub mod auslander;
pub mod complex;
pub mod derived;
pub mod error;
pub mod field;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod morsify;
pub mod quiver;
pub mod rep;
pub mod suites;
pub mod zoo;

pub use algebra::{Algebra, BasisElem, Sparse};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
