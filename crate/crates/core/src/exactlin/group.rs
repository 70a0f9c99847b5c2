//! Finitely generated abelian groups up to isomorphism.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::int::Int;
use super::matrix::IntMatrix;
use super::reduce;

/// Isomorphism type: free rank plus invariant factors `d_1 | d_2 | ... | d_k`,
/// each at least 2. This is a complete invariant, so equality of the canonical
/// form decides isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(d: i64) -> Self {
        assert!(d >= 0);
        match d {
            0 => FgAbelianGroup::free(1),
            1 => FgAbelianGroup::trivial(),
            _ => FgAbelianGroup {
                free_rank: 0,
                torsion: vec![Int::from(d)],
            },
        }
    }

    /// Build from an arbitrary list of cyclic orders (0 meaning Z), renormalizing
    /// to the invariant-factor chain.
    pub fn from_cyclic_orders(orders: &[Int]) -> Self {
        let free = orders.iter().filter(|d| d.is_zero()).count();
        let tors: Vec<&Int> = orders.iter().filter(|d| !d.is_zero()).collect();
        let mut m = IntMatrix::zero(tors.len(), tors.len());
        for (i, d) in tors.iter().enumerate() {
            m[(i, i)] = (*d).clone();
        }
        let (mut torsion, extra_free) = reduce::cokernel_data(&m);
        debug_assert_eq!(extra_free, 0);
        torsion.sort();
        FgAbelianGroup {
            free_rank: free,
            torsion,
        }
    }

    pub fn from_cokernel(a: &IntMatrix) -> Self {
        let (torsion, free_rank) = reduce::cokernel_data(a);
        FgAbelianGroup { free_rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders: Vec<Int> = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        let mut g = FgAbelianGroup::from_cyclic_orders(&orders);
        g.free_rank += self.free_rank + other.free_rank;
        g
    }

    /// Tensor product over Z.
    pub fn tensor(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders: Vec<Int> = Vec::new();
        // free (x) free
        let free = self.free_rank * other.free_rank;
        // free (x) torsion and torsion (x) free
        for d in &other.torsion {
            for _ in 0..self.free_rank {
                orders.push(d.clone());
            }
        }
        for d in &self.torsion {
            for _ in 0..other.free_rank {
                orders.push(d.clone());
            }
        }
        // torsion (x) torsion: Z/a (x) Z/b = Z/gcd(a,b)
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        let mut g = FgAbelianGroup::from_cyclic_orders(&orders);
        g.free_rank += free;
        g
    }

    /// `Tor_1^Z(self, other)`: only torsion contributes, pairwise by gcd.
    pub fn tor(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders: Vec<Int> = Vec::new();
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        FgAbelianGroup::from_cyclic_orders(&orders)
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_merges_coprime() {
        // Z/2 + Z/3 = Z/6
        let g = FgAbelianGroup::from_cyclic_orders(&[Int::from(2), Int::from(3)]);
        assert_eq!(g, FgAbelianGroup::cyclic(6));
    }

    #[test]
    fn z4_is_not_z2_z2() {
        let a = FgAbelianGroup::cyclic(4);
        let b = FgAbelianGroup::from_cyclic_orders(&[Int::from(2), Int::from(2)]);
        assert_ne!(a, b);
    }

    #[test]
    fn tensor_gcd() {
        let a = FgAbelianGroup::cyclic(6);
        let b = FgAbelianGroup::cyclic(4);
        assert_eq!(a.tensor(&b), FgAbelianGroup::cyclic(2));
        let c = FgAbelianGroup::cyclic(2);
        let d = FgAbelianGroup::cyclic(3);
        assert!(c.tensor(&d).is_trivial());
    }

    #[test]
    fn tor_of_moore_pieces() {
        let z3 = FgAbelianGroup::cyclic(3);
        assert_eq!(z3.tor(&z3), z3);
        let z = FgAbelianGroup::free(1);
        assert!(z.tor(&z3).is_trivial());
    }

    #[test]
    fn sum_reorders() {
        let a = FgAbelianGroup::free(1).direct_sum(&FgAbelianGroup::cyclic(2));
        let b = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::free(1));
        assert_eq!(a, b);
    }
}
