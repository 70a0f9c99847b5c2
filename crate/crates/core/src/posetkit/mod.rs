//! Finite posets and monotone maps: the interval, corner, square, crown and
//! double-crown index categories, products, slice categories, nondegenerate
//! chains, and contractibility certificates.

mod catalogue;
mod chains;
mod contract;
pub(crate) mod poset;

pub use catalogue::{
    corner, crown, double_crown, inclusion_i, interval, projection_pr, slice_over, slice_under,
    square, square_projection, subposet_j, ComparisonSubposet,
};
pub use chains::{all_chains, nondegenerate_chains};
pub use contract::{
    is_conically_contractible, is_homotopy_final, nerve_is_acyclic, order_complex_boundaries,
    ConicalCertificate, CosliceEvidence, FinalityReport,
};
pub use poset::{FinitePoset, Label, MonotoneMap};
