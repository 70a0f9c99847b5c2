//! Membership in the admissible subcategory and the functor from crowned
//! diagrams to twisted complexes.
//!
//! The twisted complex attached to a crowned diagram X has slot pieces
//! `C^(i) = H(cone(k_i))`, spliced by `d = iota[1] lambda[1] rho` out of the
//! short exact sequences `0 -> Z^(i) -> C^(i) -> B^(i-1)[1] -> 0` that the
//! cone triangles degenerate into.

use crate::exactlin::{solve, FgAbelianGroup, IntMatrix, PresentedMap};
use crate::percomplex::{cone, Cone, GradedMap, GradedModule, HomologyData, PeriodicComplex};
use crate::{Error, Result};

use super::crowned::CrownedDiagram;

/// Concentration and monomorphy witnesses for membership.
pub struct LMembership {
    pub n: usize,
    pub period: usize,
    pub beta_homology: Vec<HomologyData>,
    pub zeta_homology: Vec<HomologyData>,
    pub lambda: Vec<GradedMap>,
}

/// Is the homology concentrated in the residue class `class` mod `n`?
fn concentrated_in_class(h: &HomologyData, n: usize, class: usize) -> Option<usize> {
    for (m, s) in h.slots.iter().enumerate() {
        if m % n != class % n && !s.group.is_trivial() {
            return Some(m);
        }
    }
    None
}

pub fn check_l(x: &CrownedDiagram) -> Result<LMembership> {
    let m = concentration_witness(x)?;
    for (i, g) in m.lambda.iter().enumerate() {
        if !g.is_injective() {
            return Err(Error::NotInL(format!(
                "the map induced by l_{i} on homology is not a monomorphism"
            )));
        }
    }
    Ok(m)
}

/// Conditions (i) and (ii) of membership only: degreewise-free vertices with
/// homology concentrated in the right residue classes. This is all the
/// twisted-complex construction needs; the monomorphy of the lambda maps is
/// a separate claim with its own exact obstruction (the Tor of the lambda
/// cokernels), checked by the verifiers.
pub fn concentration_witness(x: &CrownedDiagram) -> Result<LMembership> {
    let n = x.n;
    let period = x.vertex_period();
    if period % n != 0 {
        return Err(Error::NotInL(format!(
            "vertex period {period} is not a multiple of the crown size {n}"
        )));
    }
    let mut beta_homology = Vec::with_capacity(n);
    let mut zeta_homology = Vec::with_capacity(n);
    for i in 0..n {
        let hb = x.beta(i).homology_data();
        if let Some(m) = concentrated_in_class(&hb, n, i) {
            return Err(Error::NotInL(format!(
                "homology of the beta vertex {i} is nonzero in slot {m}"
            )));
        }
        let hz = x.zeta(i).homology_data();
        if let Some(m) = concentrated_in_class(&hz, n, i) {
            return Err(Error::NotInL(format!(
                "homology of the zeta vertex {i} is nonzero in slot {m}"
            )));
        }
        beta_homology.push(hb);
        zeta_homology.push(hz);
    }
    let mut lambda = Vec::with_capacity(n);
    for i in 0..n {
        lambda.push(x.l(i).induced(&beta_homology[i], &zeta_homology[i]));
    }
    Ok(LMembership {
        n,
        period,
        beta_homology,
        zeta_homology,
        lambda,
    })
}

/// The twisted complex `(C_*(X), d)` at the presentation level.
pub struct QOutput {
    pub n: usize,
    pub period: usize,
    pub membership: LMembership,
    pub cones: Vec<Cone>,
    pub cone_homology: Vec<HomologyData>,
    pub iota: Vec<GradedMap>,
    /// `rho[i][m]: H_m(cone k_i) -> H_{m-1}(X_{b_{i-1}})`
    pub rho: Vec<Vec<PresentedMap>>,
    /// `d[m]: C_m -> C_{m-1}` where `C_m = H_m(cone k_{m mod n})`
    pub d: Vec<PresentedMap>,
}

impl QOutput {
    /// Underlying graded module of the twisted complex.
    pub fn pieces(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: (0..self.period)
                .map(|m| self.cone_homology[m % self.n].slots[m].group.clone())
                .collect(),
        }
    }

    pub fn z_pieces(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: (0..self.period)
                .map(|m| self.membership.zeta_homology[m % self.n].slots[m].group.clone())
                .collect(),
        }
    }

    pub fn b_pieces(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: (0..self.period)
                .map(|m| self.membership.beta_homology[m % self.n].slots[m].group.clone())
                .collect(),
        }
    }

    /// Extract the twisted complex on free slots.
    pub fn free_complex(&self) -> Result<PeriodicComplex> {
        let mut coords = Vec::with_capacity(self.period);
        for m in 0..self.period {
            let pres = self.cone_homology[m % self.n].slots[m].presentation();
            let fc = pres.free_coordinates().ok_or_else(|| {
                Error::NotFree(format!("C piece at slot {m} has torsion"))
            })?;
            coords.push(fc);
        }
        let ranks: Vec<usize> = coords.iter().map(|c| c.rank).collect();
        let prev = |m: usize| (m + self.period - 1) % self.period;
        let diff: Vec<IntMatrix> = (0..self.period)
            .map(|m| {
                coords[prev(m)]
                    .proj
                    .mul(&self.d[m].mat)
                    .mul(&coords[m].sect)
            })
            .collect();
        PeriodicComplex::new(self.period, ranks, diff)
    }

    /// Homology of the twisted complex (computable also with torsion pieces).
    pub fn twisted_homology(&self) -> GradedModule {
        let slots = (0..self.period)
            .map(|m| {
                let next = (m + 1) % self.period;
                crate::exactlin::homology_between(&self.d[next], &self.d[m])
            })
            .collect();
        GradedModule {
            period: self.period,
            slots,
        }
    }
}

pub fn q(x: &CrownedDiagram) -> Result<QOutput> {
    check_l(x)?;
    q_concentrated(x)
}

/// The twisted complex of a crowned diagram whose vertex homologies are
/// concentrated; does not require the lambda maps to be monomorphisms (the
/// short exact sequences and d[1] o d = 0 only use concentration).
pub fn q_concentrated(x: &CrownedDiagram) -> Result<QOutput> {
    let membership = concentration_witness(x)?;
    let n = x.n;
    let period = membership.period;

    let cones: Vec<Cone> = (0..n).map(|i| cone(&x.k(i))).collect();
    let cone_homology: Vec<HomologyData> =
        cones.iter().map(|c| c.complex.homology_data()).collect();

    // Concentration of the C pieces and degeneration of the cone long exact
    // sequence into slotwise short exact sequences.
    for i in 0..n {
        if let Some(m) = concentrated_in_class(&cone_homology[i], n, i) {
            return Err(Error::DegenerationFailure(format!(
                "H(cone k_{i}) is nonzero in slot {m}"
            )));
        }
    }

    let iota: Vec<GradedMap> = (0..n)
        .map(|i| {
            cones[i]
                .incl
                .induced(&membership.zeta_homology[i], &cone_homology[i])
        })
        .collect();

    // rho at the cycle level: the cone boundary projects cone cycles onto
    // cycles of the shifted source.
    let mut rho: Vec<Vec<PresentedMap>> = Vec::with_capacity(n);
    for i in 0..n {
        let iprev = (i + n - 1) % n;
        let hb = &membership.beta_homology[iprev];
        let hc = &cone_homology[i];
        let mut comps = Vec::with_capacity(period);
        for m in 0..period {
            let mprev = (m + period - 1) % period;
            let proj = cones[i].bdry.block(m);
            let cycles = proj.mul(&hc.slots[m].kernel);
            let mat = solve(&hb.slots[mprev].kernel, &cycles)
                .expect("cone boundary carries cycles to cycles");
            comps.push(
                PresentedMap::new(
                    hc.slots[m].presentation(),
                    hb.slots[mprev].presentation(),
                    mat,
                )
                .expect("cone boundary respects boundaries"),
            );
        }
        rho.push(comps);
    }

    // Exactness 0 -> Z^(i) -> C^(i) -> B^(i-1)[1] -> 0 in the concentrated
    // slots; this is the degeneration statement made checkable.
    for i in 0..n {
        for m in (0..period).filter(|m| m % n == i % n) {
            let mprev = (m + period - 1) % period;
            let inc = &iota[i].comps[m];
            let pro = &rho[i][m];
            if !inc.is_injective() {
                return Err(Error::DegenerationFailure(format!(
                    "iota_{i} is not injective at slot {m}"
                )));
            }
            if !pro.is_surjective() {
                return Err(Error::DegenerationFailure(format!(
                    "rho_{i} is not surjective at slot {m}"
                )));
            }
            if !inc.exact_at_middle(pro) {
                return Err(Error::DegenerationFailure(format!(
                    "sequence Z -> C -> B[1] is not exact at slot {m} (piece {i})"
                )));
            }
            let _ = mprev;
        }
    }

    // d = iota[1] lambda[1] rho, slot by slot.
    let mut d = Vec::with_capacity(period);
    for m in 0..period {
        let i = m % n;
        let iprev = (i + n - 1) % n;
        let mprev = (m + period - 1) % period;
        let step_rho = &rho[i][m];
        let step_lambda = &membership.lambda[iprev].comps[mprev];
        let step_iota = &iota[iprev].comps[mprev];
        d.push(step_rho.compose(step_lambda).compose(step_iota));
    }
    // d[1] o d = 0
    for m in 0..period {
        let mprev = (m + period - 1) % period;
        if !d[m].compose(&d[mprev]).is_zero_map() {
            return Err(Error::DegenerationFailure(format!(
                "twisted differential does not square to zero at slot {m}"
            )));
        }
    }

    Ok(QOutput {
        n,
        period,
        membership,
        cones,
        cone_homology,
        iota,
        rho,
        d,
    })
}

/// Iso types of abelian groups per slot of a free twisted complex; for free
/// periodic complexes over the integers, equal slot ranks plus isomorphic
/// homology characterize the complex up to an isomorphism commuting with the
/// differentials (free complexes split into elementary disks and spheres).
pub fn twisted_iso_exists(a: &PeriodicComplex, b: &PeriodicComplex) -> bool {
    a.period() == b.period() && a.ranks() == b.ranks() && a.homology() == b.homology()
}

/// Free rank per slot as a graded module.
pub fn ranks_module(x: &PeriodicComplex) -> GradedModule {
    GradedModule {
        period: x.period(),
        slots: x
            .ranks()
            .iter()
            .map(|&r| FgAbelianGroup::free(r))
            .collect(),
    }
}
