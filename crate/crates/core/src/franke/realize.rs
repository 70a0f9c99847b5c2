//! The split section of Q and the realization functor built from it.

use crate::diagramkit::hocolim;
use crate::exactlin::{image_basis, kernel_basis, solve, IntMatrix};
use crate::percomplex::{ChainMap, PeriodicComplex};
use crate::Result;

use super::crowned::CrownedDiagram;

/// The split crowned diagram of a twisted complex: `X_{z_i} = ker d` and
/// `X_{b_i} = im d` in slot i, `l_i` the inclusion of the image in the
/// kernel on chosen bases, `k_i = 0` (forced, since consecutive one-slot
/// vertices live in different slots). Any section of Q gives isomorphic
/// results; this one makes the round trip exactly checkable.
pub fn q_inverse(m: &PeriodicComplex) -> Result<CrownedDiagram> {
    let n = m.period();
    let mut betas = Vec::with_capacity(n);
    let mut zetas = Vec::with_capacity(n);
    let mut kernels = Vec::with_capacity(n);
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let k = kernel_basis(m.differential(i));
        let im = image_basis(m.differential((i + 1) % n));
        zetas.push(PeriodicComplex::concentrated_free(n, i, k.cols()));
        betas.push(PeriodicComplex::concentrated_free(n, i, im.cols()));
        kernels.push(k);
        images.push(im);
    }
    let mut ls = Vec::with_capacity(n);
    let mut ks = Vec::with_capacity(n);
    for i in 0..n {
        // image expressed in kernel coordinates
        let t = solve(&kernels[i], &images[i]).expect("boundaries are cycles");
        let blocks: Vec<IntMatrix> = (0..n)
            .map(|s| {
                if s == i {
                    t.clone()
                } else {
                    IntMatrix::zero(0, 0)
                }
            })
            .collect();
        ls.push(ChainMap::new(betas[i].clone(), zetas[i].clone(), blocks)?);
        ks.push(ChainMap::zero(&betas[(i + n - 1) % n], &zetas[i])?);
    }
    CrownedDiagram::new(n, betas, zetas, ls, ks)
}

/// Slot of the homology of the realized unit: the global shift calibration.
/// With the bar conventions used here it is zero for every period, which the
/// calibration suite asserts rather than assumes.
pub fn calibration_shift(period: usize) -> Result<i64> {
    let unit = PeriodicComplex::unit(period);
    let x = q_inverse(&unit)?;
    let h = hocolim(&x.diagram)?.total.homology();
    let mut found = None;
    for (m, s) in h.slots.iter().enumerate() {
        if !s.is_trivial() {
            if found.is_some() || *s != crate::exactlin::FgAbelianGroup::free(1) {
                return Err(crate::Error::VerificationFailure(format!(
                    "realized unit has unexpected homology {s} in slot {m}"
                )));
            }
            found = Some(m as i64);
        }
    }
    found.ok_or_else(|| {
        crate::Error::VerificationFailure("realized unit is acyclic".into())
    })
}

/// `hocolim o q_inverse`, normalized by the per-period calibration shift so
/// that homology of the realization reproduces twisted-complex homology on
/// the nose.
pub fn realize_r(m: &PeriodicComplex) -> Result<PeriodicComplex> {
    let x = q_inverse(m)?;
    let bar = hocolim(&x.diagram)?;
    let s0 = calibration_shift(m.period())?;
    Ok(bar.total.shift(-s0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FgAbelianGroup;
    use crate::franke::q::{q, twisted_iso_exists};

    #[test]
    fn moore_fixture_round_trip() {
        let m = PeriodicComplex::moore(2, 3);
        let x = q_inverse(&m).unwrap();
        let qx = q(&x).unwrap();
        let back = qx.free_complex().unwrap();
        assert!(twisted_iso_exists(&m, &back));
    }

    #[test]
    fn zero_differential_round_trip() {
        let m = PeriodicComplex::concentrated_free(3, 1, 2);
        let x = q_inverse(&m).unwrap();
        // all betas vanish
        for i in 0..3 {
            assert!(x.beta(i).is_zero_object());
        }
        let qx = q(&x).unwrap();
        let back = qx.free_complex().unwrap();
        assert!(twisted_iso_exists(&m, &back));
    }

    #[test]
    fn calibration_is_zero_shift() {
        for n in 2..=5 {
            assert_eq!(calibration_shift(n).unwrap(), 0, "period {n}");
        }
    }

    #[test]
    fn realization_recovers_homology() {
        let m = PeriodicComplex::moore(2, 3);
        let r = realize_r(&m).unwrap();
        let h = r.homology();
        assert_eq!(h.slots[0], FgAbelianGroup::cyclic(3));
        assert!(h.slots[1].is_trivial());

        let u = PeriodicComplex::unit(3);
        let h = realize_r(&u).unwrap().homology();
        assert_eq!(h.slots[0], FgAbelianGroup::free(1));
    }

    #[test]
    fn realization_commutes_with_shift() {
        let m = PeriodicComplex::moore(3, 4);
        let lhs = realize_r(&m.shift(1)).unwrap().homology();
        let rhs = realize_r(&m).unwrap().homology().shift(1);
        assert_eq!(lhs, rhs);
    }
}
