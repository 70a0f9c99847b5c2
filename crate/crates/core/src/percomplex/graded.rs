//! Graded modules (N-periodic graded f.g. abelian groups), homology carriers,
//! and maps between them at the presentation level.

use serde::{Deserialize, Serialize};

use crate::exactlin::{solve, FgAbelianGroup, IntMatrix, Presentation, PresentedMap};
use crate::percomplex::complex::ChainMap;
use crate::{Error, Result};

/// Isomorphism types per residue class mod N.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GradedModule {
    pub period: usize,
    pub slots: Vec<FgAbelianGroup>,
}

impl GradedModule {
    pub fn zero(period: usize) -> Self {
        GradedModule {
            period,
            slots: vec![FgAbelianGroup::trivial(); period],
        }
    }

    pub fn concentrated(period: usize, slot: usize, g: FgAbelianGroup) -> Self {
        let mut m = GradedModule::zero(period);
        m.slots[slot % period] = g;
        m
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(FgAbelianGroup::is_trivial)
    }

    pub fn is_free(&self) -> bool {
        self.slots.iter().all(FgAbelianGroup::is_free)
    }

    /// Complete isomorphism test: invariant factors slot by slot.
    pub fn is_isomorphic(&self, other: &GradedModule) -> bool {
        self == other
    }

    pub fn direct_sum(&self, other: &GradedModule) -> Result<GradedModule> {
        if self.period != other.period {
            return Err(Error::PeriodMismatch(self.period, other.period));
        }
        Ok(GradedModule {
            period: self.period,
            slots: (0..self.period)
                .map(|n| self.slots[n].direct_sum(&other.slots[n]))
                .collect(),
        })
    }

    /// Slotwise-folded tensor product on isomorphism types.
    pub fn graded_tensor(&self, other: &GradedModule) -> Result<GradedModule> {
        if self.period != other.period {
            return Err(Error::PeriodMismatch(self.period, other.period));
        }
        let p = self.period;
        let mut slots = vec![FgAbelianGroup::trivial(); p];
        for i in 0..p {
            for j in 0..p {
                let t = self.slots[i].tensor(&other.slots[j]);
                slots[(i + j) % p] = slots[(i + j) % p].direct_sum(&t);
            }
        }
        Ok(GradedModule { period: p, slots })
    }

    /// Slot `n` of the result is slot `n - k` of the input.
    pub fn shift(&self, k: i64) -> GradedModule {
        let p = self.period as i64;
        GradedModule {
            period: self.period,
            slots: (0..self.period)
                .map(|t| self.slots[(t as i64 - k).rem_euclid(p) as usize].clone())
                .collect(),
        }
    }

    /// Same data viewed with period `factor * period`.
    pub fn widen(&self, factor: usize) -> GradedModule {
        let p = self.period * factor;
        GradedModule {
            period: p,
            slots: (0..p).map(|t| self.slots[t % self.period].clone()).collect(),
        }
    }

    /// Fold a module of period `k * target` down to `target`, requiring the
    /// folded slots to agree (this is how period-doubled tensor homology is
    /// compared against period-N data).
    pub fn try_fold(&self, target: usize) -> Result<GradedModule> {
        if self.period == target {
            return Ok(self.clone());
        }
        if target == 0 || self.period % target != 0 {
            return Err(Error::PeriodMismatch(self.period, target));
        }
        let mut slots = Vec::with_capacity(target);
        for n in 0..target {
            let first = &self.slots[n];
            for rep in 1..(self.period / target) {
                let other = &self.slots[n + rep * target];
                if other != first {
                    return Err(Error::VerificationFailure(format!(
                        "folded slots {n} and {} disagree: {first} vs {other}",
                        n + rep * target
                    )));
                }
            }
            slots.push(first.clone());
        }
        Ok(GradedModule {
            period: target,
            slots,
        })
    }

    /// Compare with another module that may live at a multiple of this period.
    pub fn isomorphic_after_fold(&self, other: &GradedModule) -> bool {
        if self.period == other.period {
            return self.is_isomorphic(other);
        }
        let (small, big) = if self.period < other.period {
            (self, other)
        } else {
            (other, self)
        };
        match big.try_fold(small.period) {
            Ok(folded) => folded.is_isomorphic(small),
            Err(_) => false,
        }
    }
}

/// Homology of one slot with its chosen bases: cycle basis columns in the
/// ambient free group, and boundary relations expressed in cycle coordinates.
#[derive(Clone, Debug)]
pub struct SlotHomology {
    pub ambient_rank: usize,
    pub kernel: IntMatrix,
    pub rels: IntMatrix,
    pub group: FgAbelianGroup,
}

impl SlotHomology {
    pub fn presentation(&self) -> Presentation {
        Presentation::new(self.kernel.cols(), self.rels.clone())
    }

    /// Express an ambient cycle vector in the homology presentation.
    pub fn class_of(&self, cycle: &IntMatrix) -> Option<IntMatrix> {
        solve(&self.kernel, cycle)
    }
}

#[derive(Clone, Debug)]
pub struct HomologyData {
    pub period: usize,
    pub slots: Vec<SlotHomology>,
}

impl HomologyData {
    pub fn module(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: self.slots.iter().map(|s| s.group.clone()).collect(),
        }
    }

    pub fn slot(&self, n: usize) -> &SlotHomology {
        &self.slots[n % self.period]
    }
}

/// A degree-`shift` map of graded modules given on presentations: the
/// component at slot `n` lands in slot `n + shift` (mod N).
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub period: usize,
    pub shift: i64,
    pub comps: Vec<PresentedMap>,
}

impl GradedMap {
    pub fn target_slot(&self, n: usize) -> usize {
        (n as i64 + self.shift).rem_euclid(self.period as i64) as usize
    }

    pub fn induced_by_chain_map(f: &ChainMap, hx: &HomologyData, hy: &HomologyData) -> GradedMap {
        assert_eq!(hx.period, hy.period);
        let comps = (0..hx.period)
            .map(|n| {
                let fx = f.block(n).mul(&hx.slots[n].kernel);
                let mat = solve(&hy.slots[n].kernel, &fx)
                    .expect("chain maps carry cycles to cycles");
                PresentedMap::new(hx.slots[n].presentation(), hy.slots[n].presentation(), mat)
                    .expect("chain maps carry boundaries to boundaries")
            })
            .collect();
        GradedMap {
            period: hx.period,
            shift: 0,
            comps,
        }
    }

    pub fn compose(&self, then: &GradedMap) -> GradedMap {
        assert_eq!(self.period, then.period);
        let comps = (0..self.period)
            .map(|n| {
                let mid = self.target_slot(n);
                self.comps[n].compose(&then.comps[mid])
            })
            .collect();
        GradedMap {
            period: self.period,
            shift: self.shift + then.shift,
            comps,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(PresentedMap::is_injective)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.comps.iter().all(PresentedMap::is_isomorphism)
    }

    pub fn is_zero_map(&self) -> bool {
        self.comps.iter().all(PresentedMap::is_zero_map)
    }

    pub fn source_module(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: self.comps.iter().map(|c| c.src.group()).collect(),
        }
    }

    pub fn target_module(&self) -> GradedModule {
        let mut slots = vec![FgAbelianGroup::trivial(); self.period];
        for n in 0..self.period {
            slots[self.target_slot(n)] = self.comps[n].dst.group();
        }
        GradedModule {
            period: self.period,
            slots,
        }
    }

    pub fn cokernel(&self) -> GradedModule {
        let mut slots = vec![FgAbelianGroup::trivial(); self.period];
        for n in 0..self.period {
            slots[self.target_slot(n)] = self.comps[n].cokernel_group();
        }
        GradedModule {
            period: self.period,
            slots,
        }
    }

    pub fn kernel(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: self.comps.iter().map(|c| c.kernel_group()).collect(),
        }
    }

    /// Exactness of `self` then `next` at each middle slot.
    pub fn exact_with(&self, next: &GradedMap) -> bool {
        (0..self.period).all(|n| {
            let mid = self.target_slot(n);
            self.comps[n].exact_at_middle(&next.comps[mid])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_tensor_folds_slots() {
        let mut a = GradedModule::zero(2);
        a.slots[0] = FgAbelianGroup::cyclic(6);
        let mut b = GradedModule::zero(2);
        b.slots[1] = FgAbelianGroup::cyclic(4);
        let t = a.graded_tensor(&b).unwrap();
        assert!(t.slots[0].is_trivial());
        assert_eq!(t.slots[1], FgAbelianGroup::cyclic(2));
    }

    #[test]
    fn unit_law() {
        let m = GradedModule::concentrated(3, 2, FgAbelianGroup::free(2));
        let unit = GradedModule::concentrated(3, 0, FgAbelianGroup::free(1));
        assert_eq!(m.graded_tensor(&unit).unwrap(), m);
    }

    #[test]
    fn fold_checks_agreement() {
        let mut m = GradedModule::zero(4);
        m.slots[0] = FgAbelianGroup::cyclic(3);
        m.slots[2] = FgAbelianGroup::cyclic(3);
        let folded = m.try_fold(2).unwrap();
        assert_eq!(folded.slots[0], FgAbelianGroup::cyclic(3));
        let mut bad = m.clone();
        bad.slots[2] = FgAbelianGroup::cyclic(5);
        assert!(bad.try_fold(2).is_err());
    }
}
