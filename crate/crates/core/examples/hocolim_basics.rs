//! Homotopy colimits as normalized bar totalizations: suspensions, homotopy
//! cofibers, and the comparison with strict colimits.
//!
//! Run with `cargo run --example hocolim_basics`.

use std::collections::HashMap;

use percrown::diagramkit::{colimit_complexes, hocofib, hocolim, ComplexDiagram};
use percrown::exactlin::IntMatrix;
use percrown::percomplex::{ChainMap, PeriodicComplex};
use percrown::posetkit::corner;

fn main() {
    let x = PeriodicComplex::moore(2, 3);
    let zero = PeriodicComplex::zero(2);

    // suspension: hocolim( * <- X -> * )
    let mut edges = HashMap::new();
    edges.insert((0, 1), ChainMap::zero(&x, &zero).unwrap());
    edges.insert((0, 2), ChainMap::zero(&x, &zero).unwrap());
    let susp = ComplexDiagram::new(corner(), vec![x.clone(), zero.clone(), zero.clone()], edges)
        .unwrap();
    println!(
        "suspension homology {:?} (input shifted: {:?})",
        hocolim(&susp).unwrap().total.homology().slots,
        x.shift(1).homology().slots
    );

    // homotopy cofiber of multiplication by 3
    let z = PeriodicComplex::concentrated_free(2, 0, 1);
    let times3 = ChainMap::new(
        z.clone(),
        z.clone(),
        vec![IntMatrix::from_rows_i64(&[&[3]]), IntMatrix::zero(0, 0)],
    )
    .unwrap();
    let cofiber = hocofib(&times3).unwrap();
    println!("hocofib(x3) homology: {:?}", cofiber.total.homology().slots);

    // strict pushout of Z <-2- Z -3-> Z against the homotopy version
    let times = |m: i64| {
        ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[m]]), IntMatrix::zero(0, 0)],
        )
        .unwrap()
    };
    let mut edges = HashMap::new();
    edges.insert((0, 1), times(2));
    edges.insert((0, 2), times(3));
    let d = ComplexDiagram::new(corner(), vec![z.clone(), z.clone(), z.clone()], edges).unwrap();
    let strict = colimit_complexes(&d).unwrap();
    let derived = hocolim(&d).unwrap();
    println!(
        "pushout of (2, 3): strict homology {:?}, derived homology {:?}",
        strict.homology().slots,
        derived.total.homology().slots
    );
}
