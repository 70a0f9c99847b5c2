//! The reconstruction machinery over crowned diagrams: the admissible
//! subcategory, the twisted-complex functor and its split section, the
//! realization functor, and verifiers for the structural theorems.

mod crowned;
mod pipeline;
mod q;
mod realize;
mod verify_ops;

pub use crowned::CrownedDiagram;
pub use pipeline::TensorKanPipeline;
pub use q::{check_l, concentration_witness, q, q_concentrated, ranks_module, twisted_iso_exists, LMembership, QOutput};
pub use realize::{calibration_shift, q_inverse, realize_r};
pub use verify_ops::{
    cones_verify, lambda_tor_obstruction, disk_complex, disk_crown, disks_differential_verify,
    equal_up_to_signed_permutation, finality_transfer_holds, h0_is_colimit, main_theorem_verify,
    prop_a_verify, theorem_a_verify, theorem_b_verify, ConesReport, DiskReport, MainTheoremReport,
    SpectralReport, TheoremAReport, TheoremBReport,
};
