//! Generic bound quiver algebras kQ/I and their finite-dimensional modules.
//!
//! Modules are right modules; paths compose left to right, so the relation
//! `ab = 0` on `1 -a-> 2 -b-> 3` kills "a then b". The arrow map of `a` goes
//! from the fiber at its source to the fiber at its target.

mod algebra;
mod homological;
mod quiver;
mod representation;

pub use algebra::{BoundQuiverAlgebra, Coords};
pub use homological::{
    ext_dim, hom, hom_dim, is_indecomposable, kernel, proj_cover, stable_hom_dim, syzygy,
    ProjectiveCover, Resolution,
};
pub use quiver::{Arrow, Path, Quiver, Relation, RelationTerm};
pub use representation::{Morphism, Representation, RepresentationJson};
