//! Contractibility certificates and homotopy finality.
//!
//! A poset is conically contractible when some `c0` and monotone self-map `f`
//! satisfy `c <= f(c) >= c0` for every `c`; its nerve is then contractible.
//! The certificate search is exhaustive over `c0` and backtracking over `f`,
//! so a failure report is sound. Conical contractibility is only a
//! sufficient criterion, so the nerve check below serves as the fallback
//! recognizer for posets (such as the wrapped coslices of the crown
//! inclusion) that are contractible without admitting a cone.

use super::chains::nondegenerate_chains;
use super::poset::{FinitePoset, MonotoneMap};
use crate::exactlin::{subquotient_group, image_basis, kernel_basis, IntMatrix};
use crate::{Error, Result};

/// A witness `(c0, f)` with `c <= f(c) >= c0` for all `c`.
#[derive(Clone, Debug)]
pub struct ConicalCertificate {
    pub apex: usize,
    pub map: MonotoneMap,
}

pub fn is_conically_contractible(p: &FinitePoset) -> Result<ConicalCertificate> {
    if p.is_empty() {
        return Err(Error::NotFound);
    }
    let n = p.len();
    let order = p.linear_extension();
    for apex in 0..n {
        // candidates per element: x with c <= x and apex <= x
        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|c| {
                (0..n)
                    .filter(|&x| p.leq(c, x) && p.leq(apex, x))
                    .collect()
            })
            .collect();
        if candidates.iter().any(Vec::is_empty) {
            continue;
        }
        let mut assignment = vec![usize::MAX; n];
        if assign(p, &order, &candidates, &mut assignment, 0) {
            let map = MonotoneMap::new(p.clone(), p.clone(), assignment)
                .expect("backtracking only produces monotone assignments");
            return Ok(ConicalCertificate { apex, map });
        }
    }
    Err(Error::NotFound)
}

fn assign(
    p: &FinitePoset,
    order: &[usize],
    candidates: &[Vec<usize>],
    assignment: &mut [usize],
    k: usize,
) -> bool {
    if k == order.len() {
        return true;
    }
    let c = order[k];
    'next: for &x in &candidates[c] {
        for &c2 in &order[..k] {
            let x2 = assignment[c2];
            if p.leq(c2, c) && !p.leq(x2, x) {
                continue 'next;
            }
            if p.leq(c, c2) && !p.leq(x, x2) {
                continue 'next;
            }
        }
        assignment[c] = x;
        if assign(p, order, candidates, assignment, k + 1) {
            return true;
        }
        assignment[c] = usize::MAX;
    }
    false
}

/// Simplicial chain complex of the order complex (nerve): boundary matrices
/// `d_p: C_p -> C_{p-1}` over the nondegenerate chains.
pub fn order_complex_boundaries(p: &FinitePoset) -> Vec<IntMatrix> {
    let height = p.height();
    let chains: Vec<Vec<Vec<usize>>> = (0..=height).map(|q| nondegenerate_chains(p, q)).collect();
    let mut boundaries = Vec::new();
    for q in 1..=height {
        let prev: std::collections::HashMap<&[usize], usize> = chains[q - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect();
        let mut d = IntMatrix::zero(chains[q - 1].len(), chains[q].len());
        for (col, chain) in chains[q].iter().enumerate() {
            for k in 0..=q {
                let mut face: Vec<usize> = chain.clone();
                face.remove(k);
                let row = prev[face.as_slice()];
                let sign = if k % 2 == 0 { 1 } else { -1 };
                d[(row, col)] = d[(row, col)].add(&crate::exactlin::Int::from(sign as i64));
            }
        }
        boundaries.push(d);
    }
    boundaries
}

/// Reduced homology of the order complex vanishes in every degree. For the
/// height <= 1 posets appearing as coslices this is a complete test of
/// contractibility; it also doubles as the cross-check that certified
/// conical cones really have contractible nerves.
pub fn nerve_is_acyclic(p: &FinitePoset) -> bool {
    if p.is_empty() {
        return false;
    }
    let chains0 = p.len();
    let boundaries = order_complex_boundaries(p);
    // Euler characteristic must be 1.
    let mut chi: i64 = chains0 as i64;
    let mut sign = -1i64;
    for d in &boundaries {
        chi += sign * d.cols() as i64;
        sign = -sign;
    }
    if chi != 1 {
        return false;
    }
    // Reduced H_0: the cokernel of d_1 must be a single Z (connectedness).
    let h0 = if let Some(d1) = boundaries.first() {
        crate::exactlin::cokernel(d1)
    } else {
        crate::exactlin::FgAbelianGroup::free(chains0)
    };
    if h0 != crate::exactlin::FgAbelianGroup::free(1) {
        return false;
    }
    // H_q for q >= 1.
    for q in 1..=boundaries.len() {
        let ker = kernel_basis(&boundaries[q - 1]);
        let im = if q < boundaries.len() {
            image_basis(&boundaries[q])
        } else {
            IntMatrix::zero(boundaries[q - 1].cols(), 0)
        };
        match subquotient_group(&ker, &im) {
            Ok(g) => {
                if !g.is_trivial() {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

/// Per-coslice evidence that restriction along `f` preserves homotopy
/// colimits.
#[derive(Debug)]
pub enum CosliceEvidence {
    Conical(ConicalCertificate),
    /// No cone exists (exhaustively checked) but the nerve is exactly
    /// contractible; recorded separately because the crown inclusion's
    /// bottom coslices land here for N >= 3.
    AcyclicNerve,
}

#[derive(Debug)]
pub struct FinalityReport {
    pub per_element: Vec<(super::poset::Label, CosliceEvidence)>,
}

/// Homotopy finality of `f`: every coslice `d/f` must be contractible,
/// certified conically where possible and by exact nerve homology otherwise.
/// The failing element is reported when the answer is no.
pub fn is_homotopy_final(f: &MonotoneMap) -> std::result::Result<FinalityReport, super::poset::Label> {
    let mut per_element = Vec::new();
    for d in f.target.elements() {
        let (coslice, _) = super::catalogue::slice_under(f, d).expect("element is in the target");
        match is_conically_contractible(&coslice) {
            Ok(cert) => per_element.push((d.clone(), CosliceEvidence::Conical(cert))),
            Err(_) => {
                if nerve_is_acyclic(&coslice) {
                    per_element.push((d.clone(), CosliceEvidence::AcyclicNerve));
                } else {
                    return Err(d.clone());
                }
            }
        }
    }
    Ok(FinalityReport { per_element })
}

#[cfg(test)]
mod tests {
    use super::super::catalogue::{crown, inclusion_i, slice_under, subposet_j};
    use super::super::poset::{FinitePoset, Label};
    use super::*;

    fn point() -> FinitePoset {
        FinitePoset::from_relations(vec![Label::Atom(0)], &[]).unwrap()
    }

    fn two_points() -> FinitePoset {
        FinitePoset::from_relations(vec![Label::Atom(0), Label::Atom(1)], &[]).unwrap()
    }

    #[test]
    fn point_is_conical() {
        let c = is_conically_contractible(&point()).unwrap();
        assert_eq!(c.apex, 0);
    }

    #[test]
    fn discrete_pair_is_not_contractible() {
        assert!(is_conically_contractible(&two_points()).is_err());
        assert!(!nerve_is_acyclic(&two_points()));
    }

    #[test]
    fn gamma_coslice_certificate() {
        let i = inclusion_i(3).unwrap();
        let (g, _) = slice_under(&i, &Label::Gamma(0)).unwrap();
        let cert = is_conically_contractible(&g).unwrap();
        assert_eq!(g.label(cert.apex), &Label::Beta(0));
        assert!(nerve_is_acyclic(&g));
    }

    #[test]
    fn beta_coslice_n2_is_the_whole_crown() {
        // For N = 2 the coslice b_0/i wraps around: it is all of C_2, whose
        // nerve is a circle. No certificate can exist and the nerve is not
        // acyclic, so the crown inclusion fails to be homotopy final at N = 2.
        let i = inclusion_i(2).unwrap();
        let (b, _) = slice_under(&i, &Label::Beta(0)).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.covers().len(), 4);
        assert!(is_conically_contractible(&b).is_err());
        assert!(!nerve_is_acyclic(&b));
    }

    #[test]
    fn beta_coslice_n3_needs_nerve_fallback() {
        // The five-element zig-zag path: contractible nerve, no cone.
        let i = inclusion_i(3).unwrap();
        let (b, _) = slice_under(&i, &Label::Beta(0)).unwrap();
        assert_eq!(b.len(), 5);
        assert!(is_conically_contractible(&b).is_err());
        assert!(nerve_is_acyclic(&b));
    }

    #[test]
    fn inclusion_finality_by_period() {
        // Final for N >= 3; the N = 2 beta-coslices are circles.
        for n in 3..=6 {
            let i = inclusion_i(n).unwrap();
            assert!(is_homotopy_final(&i).is_ok(), "N = {n}");
        }
        let i2 = inclusion_i(2).unwrap();
        assert_eq!(is_homotopy_final(&i2).err(), Some(Label::Beta(0)));
    }

    #[test]
    fn theta_finality_depends_on_period() {
        // theta: J_n -> pr/z_n is homotopy final for N >= 3 (it is then a
        // right adjoint) but not for N = 2, where a bottom of the slice sits
        // under two incomparable tops of J_n.
        let j3 = subposet_j(3, 0).unwrap();
        assert!(is_homotopy_final(&j3.theta).is_ok());
        let j2 = subposet_j(2, 0).unwrap();
        assert!(is_homotopy_final(&j2.theta).is_err());
    }

    #[test]
    fn finality_of_maps_to_and_from_points() {
        // A map onto a point is final only when the source nerve is
        // contractible: the coslice over the point is the whole source.
        let disc = crate::posetkit::poset::MonotoneMap::new(two_points(), point(), vec![0, 0]).unwrap();
        assert!(is_homotopy_final(&disc).is_err());
        let iv = crate::posetkit::poset::MonotoneMap::new(
            crate::posetkit::interval(),
            point(),
            vec![0, 0],
        )
        .unwrap();
        assert!(is_homotopy_final(&iv).is_ok());
        // reverse inclusion of a point into a discrete pair is not final
        let g = crate::posetkit::poset::MonotoneMap::new(point(), two_points(), vec![0]).unwrap();
        assert!(is_homotopy_final(&g).is_err());
    }

    #[test]
    fn crown_itself_is_not_contractible() {
        // the crown's nerve is a circle
        let c = crown(3).unwrap();
        assert!(is_conically_contractible(&c).is_err());
        assert!(!nerve_is_acyclic(&c));
    }

    #[test]
    fn certified_posets_have_acyclic_nerves() {
        // cross-check: every conical certificate implies exact contractibility
        let i3 = inclusion_i(3).unwrap();
        let i4 = inclusion_i(4).unwrap();
        let mut certified = Vec::new();
        for (f, n) in [(&i3, 3usize), (&i4, 4)] {
            for class in 0..n {
                for label in [Label::Zeta(class), Label::Gamma(class)] {
                    let (coslice, _) = slice_under(f, &label).unwrap();
                    is_conically_contractible(&coslice).unwrap();
                    certified.push(coslice);
                }
            }
        }
        for p in &certified {
            assert!(nerve_is_acyclic(p));
        }
    }
}
