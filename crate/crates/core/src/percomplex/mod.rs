//! Periodic chain complexes, graded modules, cones, tensors, homology.

mod complex;
mod graded;
mod tensor;

pub use complex::{cone, ChainMap, Cone, PeriodicComplex};
pub use graded::{GradedMap, GradedModule, HomologyData, SlotHomology};
pub use tensor::{kunneth_expected, kunneth_map, tensor, tensor_map, tensor_period};

