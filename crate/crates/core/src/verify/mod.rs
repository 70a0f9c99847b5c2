//! Batch verification: deterministic instance generation, campaign
//! execution, failure artifacts with shrinking, and wire formats.

mod campaign;
mod checks;
mod generate;
mod io;
mod rng;

pub use campaign::{
    replay_instances, run, CampaignConfig, CheckReport, FailureArtifact, Report, FORMAT_VERSION,
};
pub use checks::{run_trial, CheckKind, TrialConfig, TrialFailure, TrialOutcome};
pub use generate::{
    generate_chain_map, generate_crown, generate_injective_matrix, generate_twisted,
    shrink_twisted,
};
pub use io::{
    check_version, complex_from_wire, complex_to_wire, crown_from_wire, crown_to_wire,
    module_from_wire, module_to_wire, WireComplex, WireCrown, WireModule,
};
pub use rng::SplitMix64;
