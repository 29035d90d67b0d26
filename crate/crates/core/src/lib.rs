//! Deciding d-representation-finiteness of self-injective Nakayama algebras
//! by three independent routes, plus the arithmetic of related constructions.
//!
//! * [`cluster`] searches mod Λ(n, ℓ) directly for d-cluster-tilting modules,
//!   with Ext computed by the generic engine in [`bqa`].
//! * [`polygon`] looks for rotation-invariant (d+1)-angulations of the
//!   ((d-1)ℓ+2)-gon.
//! * [`classifier`] evaluates the closed divisibility criterion.
//!
//! [`verify`] cross-checks the three routes against each other.

pub mod bqa;
pub mod classifier;
pub mod cluster;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod io;
pub mod nakayama;
pub mod polygon;
pub mod verify;

pub use classifier::{is_drf_formula, ClassRecord, Via};
pub use cluster::{is_drf_bruteforce, BruteForceResult};
pub use error::{Error, Result};
pub use exactlin::{Mat, Rat};
pub use nakayama::{NakAlgebra, NakEngine, NakModule};
pub use polygon::{Angulation, Diagonal, PolygonCtx};
