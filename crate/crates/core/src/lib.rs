//! Exact computations around the equitable basis of sl2.
//!
//! * [`equitable`]: coordinates, brackets and the trace form on sl2.
//! * [`psl2`]: the automorphism group `G ≅ PSL₂(ℤ)` as matrices and words.
//! * [`lattice`]: the root lattice `L`, real roots and their descent.
//! * [`isometry`]: isometries of `L`, Weyl reflections and `W⁺`.
//! * [`isotropic`]: isotropic roots and the Pythagorean correspondence.
//! * [`rep`]: the irreducible modules `V(d)`.
//! * [`disk`]: the Poincaré-disk tessellation and its SVG rendering.

pub mod disk;
pub mod equitable;
pub mod error;
pub mod isometry;
pub mod isotropic;
pub mod lattice;
pub mod linalg;
pub mod psl2;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod verify;


pub use equitable::{EquiVec, Mat2};
pub use error::{Error, Result};
pub use isometry::{Iso3, IsoDecomp, Perm3};
pub use isotropic::{IsotropicDecomp, PythTriple, TripleABC};
pub use lattice::{LatticeVec, RootClass, RootInfo};
pub use linalg::{IntMatrix, Matrix, RatMatrix};
pub use psl2::{GenToken, GroupWord, NormalWord, ProjMat};
pub use rep::{DistElem, RepMatrix};
pub use report::{CheckRecord, Report, Status};
pub use scalar::Scalar;
