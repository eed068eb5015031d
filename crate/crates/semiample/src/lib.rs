//! Exact-arithmetic toolkit for deciding when every nef divisor on a
//! blow-up of the plane at distinct points of a smooth cubic is semiample.
//!
//! The decision runs through the restriction homomorphism to the Picard
//! group of the anticanonical cubic: the surface has nef = semiample
//! exactly when the restrictions of the nef classes orthogonal to the
//! canonical class generate a finite (equivalently, torsion) subgroup.
//! Supporting modules provide the Picard-lattice arithmetic, elliptic-curve
//! group law and torsion tests, block construction on negative-definite
//! curve configurations, and resultant-based singularity analysis for
//! pencils of plane curves.  Everything is exact: big rationals and big
//! integers throughout, no floating point.

pub mod error;
pub mod fields;
pub mod poly;
pub(crate) mod modroots;
pub mod ellcurve;
pub mod piclattice;
pub mod restriction;
pub mod decision;
pub mod pencil;

pub use error::{Error, Result};
