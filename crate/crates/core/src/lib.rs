//! Exact computations with solvable Lie algebras: generator products
//! (central extensions adjoining one central element per pair of minimal
//! generators), counts of coadjoint invariants by symbolic rank and by
//! wedge powers of Maurer-Cartan forms, and product structures.
//!
//! All arithmetic is over the rationals with arbitrary-precision integers.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod coadjoint;
pub mod exterior;
pub mod fingerprint;
pub mod genproduct;
pub mod io;
pub mod lcg;
pub mod linalg;
pub mod poly;
pub mod prodstruct;
pub mod random;

pub use algebra::{AlgebraError, LieAlgebra, SeriesReport};
pub use coadjoint::{invariant_report, InvariantReport};
pub use exterior::{Form, FormStyle};
pub use fingerprint::{fingerprint, Fingerprint};
pub use genproduct::{generator_product, GeneratorProduct};
pub use linalg::{QMatrix, Rational, Subspace};
pub use poly::{PolyMatrix, Polynomial, Vars};
