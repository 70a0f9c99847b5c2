//! Exact integer linear algebra: Smith normal form, kernels, images,
//! cokernel presentations, and presentation-level maps of finitely
//! generated abelian groups.
//!
//! Everything here is deterministic and exact; homology and colimit
//! computations in the rest of the crate reduce to these routines.

mod group;
mod int;
mod int_serde;
mod matrix;
mod presentation;
mod reduce;

pub use group::FgAbelianGroup;
pub use int::Int;
pub use matrix::IntMatrix;
pub use presentation::{homology_between, FreeCoordinates, Presentation, PresentedMap};
pub use reduce::{
    cokernel_data, column_echelon, image_basis, invert_unimodular, kernel_basis, rank,
    saturation_and_projection, snf, solve, subquotient, SnfDecomposition,
};

use crate::Error;

/// Isomorphism type of `coker(a)`.
pub fn cokernel(a: &IntMatrix) -> FgAbelianGroup {
    FgAbelianGroup::from_cokernel(a)
}

/// Isomorphism type of `(span kernel) / (span image)`; fails when the image
/// columns do not lie in the kernel lattice, which signals a broken `d o d = 0`
/// upstream.
pub fn subquotient_group(kernel: &IntMatrix, image: &IntMatrix) -> Result<FgAbelianGroup, Error> {
    let (torsion, free_rank) = subquotient(kernel, image)?;
    Ok(FgAbelianGroup { free_rank, torsion })
}
