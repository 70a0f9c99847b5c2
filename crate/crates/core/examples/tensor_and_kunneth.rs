//! Tensor products of periodic complexes and the Kunneth comparison.
//!
//! Products of odd-period complexes live at the doubled period, where the
//! total-slot Koszul sign is consistent; slots fold back in pairs.
//!
//! Run with `cargo run --example tensor_and_kunneth`.

use percrown::percomplex::{kunneth_expected, kunneth_map, tensor, PeriodicComplex};

fn main() {
    let m2 = PeriodicComplex::moore(2, 3);
    let t2 = tensor(&m2, &m2).unwrap();
    println!(
        "period 2: homology of the tensor square: {:?}",
        t2.homology().slots
    );

    let m3 = PeriodicComplex::moore(3, 3);
    let t3 = tensor(&m3, &m3).unwrap();
    println!(
        "period 3 doubles to period {}: homology {:?}",
        t3.period(),
        t3.homology().slots
    );
    println!(
        "folded back to period 3: {:?}",
        t3.homology().try_fold(3).unwrap().slots
    );

    let expected = kunneth_expected(&m3.homology(), &m3.homology(), t3.period());
    println!(
        "Kunneth prediction matches: {}",
        t3.homology().is_isomorphic(&expected)
    );

    let k = kunneth_map(&m2, &m2).unwrap();
    println!(
        "comparison map injective: {}, cokernel (the Tor term): {:?}",
        k.is_injective(),
        k.cokernel().slots
    );
}
