//! Periodic chain complexes: homology, shifts, mapping cones and the long
//! exact sequence.
//!
//! Run with `cargo run --example homology_and_cones`.

use percrown::exactlin::IntMatrix;
use percrown::percomplex::{cone, ChainMap, PeriodicComplex};

fn main() {
    // the mod-3 pattern: Z --3--> Z across two slots
    let moore = PeriodicComplex::moore(2, 3);
    println!("homology of the mod-3 complex: {:?}", moore.homology().slots);
    println!(
        "after shifting one slot: {:?}",
        moore.shift(1).homology().slots
    );

    // the cone on multiplication by 3 rebuilds it
    let z = PeriodicComplex::concentrated_free(2, 0, 1);
    let times3 = ChainMap::new(
        z.clone(),
        z.clone(),
        vec![IntMatrix::from_rows_i64(&[&[3]]), IntMatrix::zero(0, 0)],
    )
    .unwrap();
    let c = cone(&times3);
    println!("homology of cone(x3): {:?}", c.complex.homology().slots);

    // cone of the identity is acyclic
    let acyclic = cone(&ChainMap::identity(&moore));
    println!(
        "cone of the identity acyclic: {}",
        acyclic.complex.is_acyclic()
    );

    // the long exact sequence, checked on induced maps
    let hx = z.homology_data();
    let hy = z.homology_data();
    let hc = c.complex.homology_data();
    let f_star = times3.induced(&hx, &hy);
    let incl_star = c.incl.induced(&hy, &hc);
    println!(
        "H(x3) then H(incl) exact at the middle: {}",
        f_star.exact_with(&incl_star)
    );
}
