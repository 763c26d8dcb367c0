//! Exact-arithmetic generic Hecke algebras for split reductive root data.
//!
//! The crate builds, over the coefficient ring `Z[q^{±1}]` of integer
//! Laurent polynomials, the generic Iwahori–Hecke algebra of the extended
//! affine Weyl group of a based root datum, its parahoric compressions, the
//! commutative subalgebra of Bernstein elements, the center basis, and the
//! central classes coming from dual-group weight multiplicities, together
//! with a desk-scale verification that the spherical algebra maps
//! isomorphically onto the center of the Iwahori algebra.
//!
//! All arithmetic is exact; all enumerations are deterministic.

pub mod affine;
pub mod error;
pub mod hecke;
pub mod poly;
pub mod rootdata;

pub use affine::{AffineWeyl, DoubleCoset, ExtAffineElement, Facet, OmegaListing};
pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use poly::{GroupRingElement, LaurentPoly};
pub use rootdata::{Cocharacter, FiniteWeylElement, Matrix, RootDatum, RootDatumSpec};
