//! Exact integer linear algebra: Smith normal form, kernels, images,
//! cokernels, and subquotients.
//!
//! Run with `cargo run --example snf_and_lattices`.

use percrown::exactlin::{
    cokernel, image_basis, kernel_basis, snf, subquotient_group, IntMatrix,
};

fn main() {
    let a = IntMatrix::from_rows_i64(&[&[2, 0], &[0, 3]]);
    let s = snf(&a);
    println!("snf(diag(2,3)) invariant factors: {:?}", s.d);
    println!("u * a * v reproduces the diagonal: {:?}", s.u.mul(&a).mul(&s.v));

    let b = IntMatrix::from_rows_i64(&[&[2, -3]]);
    let k = kernel_basis(&b);
    println!("kernel of (2 -3): spanned by ({}, {})", k[(0, 0)], k[(1, 0)]);

    let c = IntMatrix::from_rows_i64(&[&[2], &[-3]]);
    println!("cokernel of (2, -3)^T as a map Z -> Z^2: {}", cokernel(&c));

    let m = IntMatrix::from_rows_i64(&[&[6, 4], &[0, 2]]);
    println!("image lattice of [[6,4],[0,2]]: {:?}", image_basis(&m));
    println!("cokernel: {}", cokernel(&m));

    // homology in miniature: Z^2 >= ker >= im
    let kernel = IntMatrix::identity(1);
    let image = IntMatrix::from_rows_i64(&[&[3]]);
    println!(
        "subquotient Z / 3Z = {}",
        subquotient_group(&kernel, &image).unwrap()
    );
}
