//! N-periodic chain complexes of finitely generated free abelian groups.
//!
//! The differential lowers the slot index by one (indices mod N), matching a
//! twisted differential `d: M -> M[1]` where `[1]` shifts degree down.

use crate::exactlin::{kernel_basis, solve, FgAbelianGroup, IntMatrix};
use crate::percomplex::graded::{GradedModule, HomologyData, SlotHomology};
use crate::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct PeriodicComplex {
    period: usize,
    ranks: Vec<usize>,
    /// `diff[n]` maps slot `n` to slot `(n + period - 1) % period`.
    diff: Vec<IntMatrix>,
}

impl PeriodicComplex {
    pub fn new(period: usize, ranks: Vec<usize>, diff: Vec<IntMatrix>) -> Result<Self> {
        if period < 2 {
            return Err(Error::InvalidPeriod(period));
        }
        assert_eq!(ranks.len(), period);
        assert_eq!(diff.len(), period);
        for n in 0..period {
            let prev = (n + period - 1) % period;
            if diff[n].cols() != ranks[n] || diff[n].rows() != ranks[prev] {
                return Err(Error::ShapeMismatch(format!(
                    "differential at slot {n} is {}x{}, expected {}x{}",
                    diff[n].rows(),
                    diff[n].cols(),
                    ranks[prev],
                    ranks[n]
                )));
            }
        }
        let c = PeriodicComplex {
            period,
            ranks,
            diff,
        };
        for n in 0..period {
            let prev = (n + period - 1) % period;
            if !c.diff[prev].mul(&c.diff[n]).is_zero() {
                return Err(Error::ShapeMismatch(format!(
                    "d o d != 0 at slot {n}"
                )));
            }
        }
        Ok(c)
    }

    pub fn zero(period: usize) -> Self {
        PeriodicComplex::new(
            period,
            vec![0; period],
            (0..period).map(|_| IntMatrix::zero(0, 0)).collect(),
        )
        .expect("zero complex is valid")
    }

    /// The monoidal unit: Z in slot 0, zero differential.
    pub fn unit(period: usize) -> Self {
        PeriodicComplex::concentrated_free(period, 0, 1)
    }

    /// Free group of the given rank in one slot, zero differential.
    pub fn concentrated_free(period: usize, slot: usize, rank: usize) -> Self {
        let mut ranks = vec![0; period];
        ranks[slot % period] = rank;
        let diff = (0..period)
            .map(|n| {
                let prev = (n + period - 1) % period;
                IntMatrix::zero(ranks[prev], ranks[n])
            })
            .collect();
        PeriodicComplex::new(period, ranks, diff).expect("concentrated complex is valid")
    }

    /// Two-slot complex for the mod-m Moore pattern: Z in slots 0 and 1 with
    /// `d_1 = (m)`.
    pub fn moore(period: usize, m: i64) -> Self {
        let mut ranks = vec![0; period];
        ranks[0] = 1;
        ranks[1 % period] = 1;
        let mut diff: Vec<IntMatrix> = (0..period)
            .map(|n| {
                let prev = (n + period - 1) % period;
                IntMatrix::zero(ranks[prev], ranks[n])
            })
            .collect();
        diff[1] = IntMatrix::from_rows_i64(&[&[m]]);
        PeriodicComplex::new(period, ranks, diff).expect("moore complex is valid")
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn rank(&self, slot: usize) -> usize {
        self.ranks[slot % self.period]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn differential(&self, slot: usize) -> &IntMatrix {
        &self.diff[slot % self.period]
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn is_zero_object(&self) -> bool {
        self.total_rank() == 0
    }

    /// Slot `n` of the result is slot `n - k` of the input; differentials pick
    /// up the sign `(-1)^k`. Shifting by the period negates differentials when
    /// the period is odd; homology is unaffected.
    pub fn shift(&self, k: i64) -> PeriodicComplex {
        let n = self.period as i64;
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        let ranks: Vec<usize> = (0..self.period)
            .map(|t| self.ranks[(t as i64 - k).rem_euclid(n) as usize])
            .collect();
        let diff: Vec<IntMatrix> = (0..self.period)
            .map(|t| {
                let src = (t as i64 - k).rem_euclid(n) as usize;
                if sign == 1 {
                    self.diff[src].clone()
                } else {
                    self.diff[src].neg()
                }
            })
            .collect();
        PeriodicComplex {
            period: self.period,
            ranks,
            diff,
        }
    }

    /// The same complex viewed with period `factor * period` (slots repeat).
    pub fn widen(&self, factor: usize) -> PeriodicComplex {
        assert!(factor >= 1);
        let p = self.period * factor;
        let ranks: Vec<usize> = (0..p).map(|t| self.ranks[t % self.period]).collect();
        let diff: Vec<IntMatrix> = (0..p).map(|t| self.diff[t % self.period].clone()).collect();
        PeriodicComplex {
            period: p,
            ranks,
            diff,
        }
    }

    pub fn direct_sum(&self, other: &PeriodicComplex) -> Result<PeriodicComplex> {
        if self.period != other.period {
            return Err(Error::PeriodMismatch(self.period, other.period));
        }
        let ranks: Vec<usize> = (0..self.period)
            .map(|n| self.ranks[n] + other.ranks[n])
            .collect();
        let diff: Vec<IntMatrix> = (0..self.period)
            .map(|n| self.diff[n].direct_sum(&other.diff[n]))
            .collect();
        Ok(PeriodicComplex {
            period: self.period,
            ranks,
            diff,
        })
    }

    pub fn homology_data(&self) -> HomologyData {
        let mut slots = Vec::with_capacity(self.period);
        for n in 0..self.period {
            let next = (n + 1) % self.period;
            let kernel = kernel_basis(&self.diff[n]);
            let image = crate::exactlin::image_basis(&self.diff[next]);
            let rels = solve(&kernel, &image)
                .expect("boundaries are cycles because d o d = 0");
            let group = FgAbelianGroup::from_cokernel(&rels);
            slots.push(SlotHomology {
                ambient_rank: self.ranks[n],
                kernel,
                rels,
                group,
            });
        }
        HomologyData {
            period: self.period,
            slots,
        }
    }

    pub fn homology(&self) -> GradedModule {
        GradedModule {
            period: self.period,
            slots: self
                .homology_data()
                .slots
                .into_iter()
                .map(|s| s.group)
                .collect(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology().is_zero()
    }
}

impl std::fmt::Debug for PeriodicComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PeriodicComplex(period={}, ranks={:?})", self.period, self.ranks)
    }
}

/// A degreewise map of periodic complexes commuting with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: PeriodicComplex,
    pub target: PeriodicComplex,
    blocks: Vec<IntMatrix>,
}

impl ChainMap {
    pub fn new(
        source: PeriodicComplex,
        target: PeriodicComplex,
        blocks: Vec<IntMatrix>,
    ) -> Result<Self> {
        if source.period != target.period {
            return Err(Error::PeriodMismatch(source.period, target.period));
        }
        let p = source.period;
        assert_eq!(blocks.len(), p);
        for n in 0..p {
            if blocks[n].rows() != target.ranks[n] || blocks[n].cols() != source.ranks[n] {
                return Err(Error::ShapeMismatch(format!(
                    "chain map block at slot {n} has wrong shape"
                )));
            }
        }
        for n in 0..p {
            let prev = (n + p - 1) % p;
            let lhs = blocks[prev].mul(source.differential(n));
            let rhs = target.differential(n).mul(&blocks[n]);
            if lhs != rhs {
                return Err(Error::ShapeMismatch(format!(
                    "chain map square does not commute at slot {n}"
                )));
            }
        }
        Ok(ChainMap {
            source,
            target,
            blocks,
        })
    }

    pub fn identity(x: &PeriodicComplex) -> Self {
        ChainMap {
            source: x.clone(),
            target: x.clone(),
            blocks: x.ranks.iter().map(|&r| IntMatrix::identity(r)).collect(),
        }
    }

    pub fn zero(source: &PeriodicComplex, target: &PeriodicComplex) -> Result<Self> {
        if source.period != target.period {
            return Err(Error::PeriodMismatch(source.period, target.period));
        }
        Ok(ChainMap {
            source: source.clone(),
            target: target.clone(),
            blocks: (0..source.period)
                .map(|n| IntMatrix::zero(target.ranks[n], source.ranks[n]))
                .collect(),
        })
    }

    pub fn block(&self, slot: usize) -> &IntMatrix {
        &self.blocks[slot % self.source.period]
    }

    pub fn is_zero_map(&self) -> bool {
        self.blocks.iter().all(IntMatrix::is_zero)
    }

    pub fn compose(&self, then: &ChainMap) -> Result<ChainMap> {
        if self.target != then.source {
            return Err(Error::ShapeMismatch(
                "composition endpoints do not match".into(),
            ));
        }
        Ok(ChainMap {
            source: self.source.clone(),
            target: then.target.clone(),
            blocks: (0..self.source.period)
                .map(|n| then.blocks[n].mul(&self.blocks[n]))
                .collect(),
        })
    }

    pub fn direct_sum(&self, other: &ChainMap) -> Result<ChainMap> {
        let source = self.source.direct_sum(&other.source)?;
        let target = self.target.direct_sum(&other.target)?;
        Ok(ChainMap {
            source,
            target,
            blocks: (0..self.blocks.len())
                .map(|n| self.blocks[n].direct_sum(&other.blocks[n]))
                .collect(),
        })
    }

    /// Shift a chain map: blocks are reindexed, no signs (signs on the
    /// differentials of source and target cancel).
    pub fn shift(&self, k: i64) -> ChainMap {
        let p = self.source.period as i64;
        ChainMap {
            source: self.source.shift(k),
            target: self.target.shift(k),
            blocks: (0..self.source.period)
                .map(|t| self.blocks[(t as i64 - k).rem_euclid(p) as usize].clone())
                .collect(),
        }
    }

    /// Induced map on homology.
    pub fn induced(
        &self,
        hx: &HomologyData,
        hy: &HomologyData,
    ) -> crate::percomplex::graded::GradedMap {
        crate::percomplex::graded::GradedMap::induced_by_chain_map(self, hx, hy)
    }
}

/// Mapping cone data: the cone complex with its two canonical maps and the
/// null-homotopy of `incl o f`.
pub struct Cone {
    pub complex: PeriodicComplex,
    pub incl: ChainMap,
    pub bdry: ChainMap,
    /// `h[n]: X_n -> cone_{n+1}` with `d h + h d = incl o f`.
    pub homotopy: Vec<IntMatrix>,
}

/// Cone of a chain map with differential `[[d_Y, f], [0, -d_X]]` on
/// `Y_n + X_{n-1}`.
pub fn cone(f: &ChainMap) -> Cone {
    let p = f.source.period;
    let x = &f.source;
    let y = &f.target;
    let prev = |n: usize| (n + p - 1) % p;

    let ranks: Vec<usize> = (0..p).map(|n| y.ranks[n] + x.ranks[prev(n)]).collect();
    let mut diff = Vec::with_capacity(p);
    for n in 0..p {
        let m = prev(n);
        let mut d = IntMatrix::zero(ranks[m], ranks[n]);
        d.write_block(0, 0, y.differential(n));
        d.write_block(0, y.ranks[n], f.block(m));
        d.write_block(y.ranks[m], y.ranks[n], &x.differential(m).neg());
        diff.push(d);
    }
    let complex = PeriodicComplex::new(p, ranks.clone(), diff).expect("cone satisfies d o d = 0");

    let incl_blocks: Vec<IntMatrix> = (0..p)
        .map(|n| {
            let mut b = IntMatrix::zero(ranks[n], y.ranks[n]);
            b.write_block(0, 0, &IntMatrix::identity(y.ranks[n]));
            b
        })
        .collect();
    let incl = ChainMap::new(y.clone(), complex.clone(), incl_blocks)
        .expect("cone inclusion is a chain map");

    let shifted = x.shift(1);
    let bdry_blocks: Vec<IntMatrix> = (0..p)
        .map(|n| {
            let mut b = IntMatrix::zero(x.ranks[prev(n)], ranks[n]);
            b.write_block(0, y.ranks[n], &IntMatrix::identity(x.ranks[prev(n)]));
            b
        })
        .collect();
    let bdry = ChainMap::new(complex.clone(), shifted, bdry_blocks)
        .expect("cone boundary is a chain map");

    let homotopy: Vec<IntMatrix> = (0..p)
        .map(|n| {
            let next = (n + 1) % p;
            let mut h = IntMatrix::zero(ranks[next], x.ranks[n]);
            h.write_block(y.ranks[next], 0, &IntMatrix::identity(x.ranks[n]));
            h
        })
        .collect();
    // d h + h d = incl o f, checked here once and for all.
    for n in 0..p {
        let lhs = complex
            .differential((n + 1) % p)
            .mul(&homotopy[n])
            .add(&homotopy[prev(n)].mul(x.differential(n)));
        let rhs = incl.block(n).mul(f.block(n));
        debug_assert_eq!(lhs, rhs, "cone homotopy identity at slot {n}");
        let _ = lhs;
        let _ = rhs;
    }

    Cone {
        complex,
        incl,
        bdry,
        homotopy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_homology() {
        let m = PeriodicComplex::moore(2, 3);
        let h = m.homology();
        assert_eq!(h.slots[0], FgAbelianGroup::cyclic(3));
        assert!(h.slots[1].is_trivial());
    }

    #[test]
    fn zero_differential_gives_free_homology() {
        let x = PeriodicComplex::concentrated_free(3, 1, 2);
        let h = x.homology();
        assert!(h.slots[0].is_trivial());
        assert_eq!(h.slots[1], FgAbelianGroup::free(2));
        assert!(h.slots[2].is_trivial());
    }

    #[test]
    fn shift_round_trip() {
        let m = PeriodicComplex::moore(2, 3);
        assert_eq!(m.shift(1).shift(-1), m);
        assert_eq!(m.shift(0), m);
        let h = m.shift(1).homology();
        assert_eq!(h.slots[1], FgAbelianGroup::cyclic(3));
        assert!(h.slots[0].is_trivial());
    }

    #[test]
    fn cone_of_multiplication_is_moore() {
        // x3 : Z -> Z concentrated in slot 0, period 2
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let f = ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[3]]), IntMatrix::zero(0, 0)],
        )
        .unwrap();
        let c = cone(&f);
        let h = c.complex.homology();
        assert_eq!(h.slots[0], FgAbelianGroup::cyclic(3));
        assert!(h.slots[1].is_trivial());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let m = PeriodicComplex::moore(2, 3);
        let c = cone(&ChainMap::identity(&m));
        assert!(c.complex.is_acyclic());
    }

    #[test]
    fn cone_of_map_to_zero_is_suspension() {
        let m = PeriodicComplex::moore(3, 5);
        let z = PeriodicComplex::zero(3);
        let f = ChainMap::zero(&m, &z).unwrap();
        let c = cone(&f);
        assert_eq!(c.complex.homology(), m.shift(1).homology());
    }
}
