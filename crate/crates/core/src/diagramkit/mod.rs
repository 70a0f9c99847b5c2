//! Diagrams of periodic complexes over finite posets: strict colimits,
//! simplicial replacement and its totalization, category homology, homotopy
//! colimits, pointwise left Kan extensions, external products, and
//! pushout-products.

mod bar;
mod colimit;
mod diagram;
mod homology_cat;
mod kan;
mod ops;

pub use bar::{
    augmentation, hocolim, hocolim_map, hocolim_map_along_inclusion, simplicial_replacement,
    BarComplex,
};
pub use colimit::{colimit_complexes, colimit_modules};
pub use diagram::{chain_maps_equal, homology_diagram, ComplexDiagram, ModuleDiagram};
pub use homology_cat::category_homology;
pub use kan::{left_kan, KanExtension};
pub use ops::{cone_diagram, counit_cone, external_tensor, hocofib, pushout_product, PushoutProduct};
