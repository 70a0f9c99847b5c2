//! Exact-arithmetic homological algebra over N-periodic chain complexes.
//!
//! The crate computes with finitely generated free abelian groups throughout:
//! Smith normal forms, periodic complexes and their homology, finite posets
//! and their slice categories, homotopy colimits via normalized bar
//! totalization, pointwise homotopy left Kan extensions, and the
//! crowned-diagram reconstruction machinery built on top of them, together
//! with seeded verification campaigns for the structural identities the
//! machinery is supposed to satisfy.
//!
//! Start with the `examples/` directory for runnable tours of each layer, or
//! run `cargo run --bin verify -- fixture moore3` for the end-to-end fixture.

pub mod diagramkit;
pub mod exactlin;
pub mod franke;
pub mod percomplex;
pub mod posetkit;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("image columns are not contained in the kernel lattice")]
    ImageNotContained,
    #[error("matrix does not define a map of presented groups")]
    NotPresentationCompatible,
    #[error("period must be at least 2, got {0}")]
    InvalidPeriod(usize),
    #[error("operands have different periods: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("element {0} does not belong to the poset")]
    UnknownElement(String),
    #[error("no conical contractibility certificate exists")]
    NotFound,
    #[error("diagram shapes are not compatible: {0}")]
    ShapeMismatch(String),
    #[error("complex has torsion where a free group is required: {0}")]
    NotFree(String),
    #[error("crowned diagram is not in the admissible subcategory: {0}")]
    NotInL(String),
    #[error("cone long exact sequence did not degenerate: {0}")]
    DegenerationFailure(String),
    #[error("hypotheses not satisfied: {0}")]
    HypothesisFailure(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("colimit of free complexes has torsion at slot {0}")]
    TorsionInColimit(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
