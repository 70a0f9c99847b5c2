//! The index posets: crowns, double crowns, the projection and inclusion
//! functors, their slices, and contractibility certificates.
//!
//! Run with `cargo run --example poset_catalogue`.

use percrown::posetkit::{
    crown, double_crown, inclusion_i, is_conically_contractible, is_homotopy_final,
    nerve_is_acyclic, projection_pr, slice_over, slice_under, subposet_j, Label,
};

fn main() {
    let c3 = crown(3).unwrap();
    println!("crown C_3: {} elements, {} covers", c3.len(), c3.covers().len());
    let d3 = double_crown(3).unwrap();
    println!("double crown D_3: {} elements", d3.len());

    let pr = projection_pr(3).unwrap();
    let l = Label::pair(Label::Zeta(2), Label::Beta(2));
    println!("pr(z2, b2) = {}", pr.apply_label(&l).unwrap());

    for (name, label) in [
        ("pr/b0", Label::Beta(0)),
        ("pr/g0", Label::Gamma(0)),
        ("pr/z0", Label::Zeta(0)),
    ] {
        let (slice, _) = slice_over(&pr, &label).unwrap();
        println!("{name}: {} elements, height {}", slice.len(), slice.height());
    }

    let j = subposet_j(3, 0).unwrap();
    println!(
        "comparison subposet J_0 of pr/z0: {} elements, monotone retraction: {}",
        j.subposet.len(),
        j.retraction.is_some()
    );

    let i = inclusion_i(3).unwrap();
    println!("crown inclusion homotopy final: {}", is_homotopy_final(&i).is_ok());
    for label in [Label::Zeta(0), Label::Gamma(0), Label::Beta(0)] {
        let (coslice, _) = slice_under(&i, &label).unwrap();
        let kind = if is_conically_contractible(&coslice).is_ok() {
            "conical certificate"
        } else if nerve_is_acyclic(&coslice) {
            "acyclic nerve"
        } else {
            "not contractible"
        };
        println!("  coslice {label}/i: {} elements, {kind}", coslice.len());
    }

    // the period-2 wrap: the bottom coslice becomes the whole crown (a circle)
    let i2 = inclusion_i(2).unwrap();
    let (b, _) = slice_under(&i2, &Label::Beta(0)).unwrap();
    println!(
        "period 2: coslice b0/i has {} elements, contractible: {}",
        b.len(),
        nerve_is_acyclic(&b)
    );
}
