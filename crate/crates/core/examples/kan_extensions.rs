//! Pointwise homotopy left Kan extensions, and the pushout-product as the
//! Kan extension along the square projection.
//!
//! Run with `cargo run --example kan_extensions`.

use std::collections::HashMap;

use percrown::diagramkit::{hocofib, hocolim, left_kan, pushout_product, ComplexDiagram};
use percrown::exactlin::IntMatrix;
use percrown::percomplex::{cone, tensor, ChainMap, PeriodicComplex};
use percrown::posetkit::{square, square_projection, Label};

fn main() {
    let z = PeriodicComplex::concentrated_free(2, 0, 1);
    let times = |m: i64| {
        ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[m]]), IntMatrix::zero(0, 0)],
        )
        .unwrap()
    };

    // f (x) g as a square diagram, Kan-extended along the projection onto the
    // interval: the value at 0 is the pushout-product corner.
    let sq = square();
    let mut edges = HashMap::new();
    for (a, b) in sq.covers() {
        edges.insert((a, b), times(3));
    }
    let d = ComplexDiagram::new(sq, vec![z.clone(); 4], edges).unwrap();
    let kan = left_kan(&square_projection(), &d).unwrap();
    let corner = kan.diagram.vertex_by_label(&Label::Atom(0)).unwrap();
    println!(
        "Kan value at 0 (the corner): ranks {:?}, homology {:?}",
        corner.ranks(),
        corner.homology().slots
    );
    println!(
        "hocolim preserved by the extension: {}",
        hocolim(&kan.diagram)
            .unwrap()
            .total
            .homology()
            .is_isomorphic(&hocolim(&d).unwrap().total.homology())
    );

    // cofiber monoidality: hocofib(f box g) against cone(f) (x) cone(g)
    let f = times(3);
    let g = times(3);
    let pp = pushout_product(&f, &g).unwrap();
    let lhs = tensor(&cone(&f).complex, &cone(&g).complex)
        .unwrap()
        .homology();
    let rhs = hocofib(&pp.map).unwrap().total.homology();
    println!(
        "cone(f) (x) cone(g) ~ hocofib(f box g): {} ({:?})",
        lhs.isomorphic_after_fold(&rhs),
        lhs.slots
    );
}
