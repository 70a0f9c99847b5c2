//! Finitely presented abelian groups and maps between them.
//!
//! A `Presentation` is `Z^gens / col-span(rels)`. Maps are integer matrices on
//! generators that carry the relation lattice of the source into that of the
//! target. Kernels, images, exactness and injectivity are all decided exactly
//! at this level; isomorphism types are read off through Smith reduction.

use super::group::FgAbelianGroup;
use super::matrix::IntMatrix;
use super::reduce;
use crate::Error;

#[derive(Clone, Debug)]
pub struct Presentation {
    pub gens: usize,
    pub rels: IntMatrix,
}

impl Presentation {
    pub fn new(gens: usize, rels: IntMatrix) -> Self {
        assert_eq!(rels.rows(), gens);
        Presentation { gens, rels }
    }

    pub fn free(gens: usize) -> Self {
        Presentation {
            gens,
            rels: IntMatrix::zero(gens, 0),
        }
    }

    pub fn trivial() -> Self {
        Presentation::free(0)
    }

    /// Canonical presentation of an isomorphism type: free generators followed
    /// by one generator per invariant factor.
    pub fn from_group(g: &FgAbelianGroup) -> Self {
        let gens = g.free_rank + g.torsion.len();
        let mut rels = IntMatrix::zero(gens, g.torsion.len());
        for (k, d) in g.torsion.iter().enumerate() {
            rels[(g.free_rank + k, k)] = d.clone();
        }
        Presentation { gens, rels }
    }

    pub fn group(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_cokernel(&self.rels)
    }

    pub fn direct_sum(&self, other: &Presentation) -> Presentation {
        Presentation {
            gens: self.gens + other.gens,
            rels: self.rels.direct_sum(&other.rels),
        }
    }

    /// Tensor product presentation: generators are pairs, relations are
    /// `rels (x) id` and `id (x) rels`.
    pub fn tensor(&self, other: &Presentation) -> Presentation {
        let a = self.rels.kronecker(&IntMatrix::identity(other.gens));
        let b = IntMatrix::identity(self.gens).kronecker(&other.rels);
        Presentation {
            gens: self.gens * other.gens,
            rels: a.hcat(&b),
        }
    }

    /// Does the column vector `v` lie in the relation lattice?
    pub fn vanishes(&self, v: &IntMatrix) -> bool {
        reduce::solve(&self.rels, v).is_some()
    }
}

#[derive(Clone, Debug)]
pub struct PresentedMap {
    pub src: Presentation,
    pub dst: Presentation,
    pub mat: IntMatrix,
}

impl PresentedMap {
    /// Checks well-definedness: the matrix must send source relations into the
    /// target relation lattice.
    pub fn new(src: Presentation, dst: Presentation, mat: IntMatrix) -> Result<Self, Error> {
        assert_eq!(mat.rows(), dst.gens);
        assert_eq!(mat.cols(), src.gens);
        let moved = mat.mul(&src.rels);
        if reduce::solve(&dst.rels, &moved).is_none() {
            return Err(Error::NotPresentationCompatible);
        }
        Ok(PresentedMap { src, dst, mat })
    }

    pub fn identity(p: &Presentation) -> Self {
        PresentedMap {
            src: p.clone(),
            dst: p.clone(),
            mat: IntMatrix::identity(p.gens),
        }
    }

    pub fn zero(src: &Presentation, dst: &Presentation) -> Self {
        PresentedMap {
            src: src.clone(),
            dst: dst.clone(),
            mat: IntMatrix::zero(dst.gens, src.gens),
        }
    }

    pub fn compose(&self, then: &PresentedMap) -> PresentedMap {
        assert_eq!(self.dst.gens, then.src.gens);
        PresentedMap {
            src: self.src.clone(),
            dst: then.dst.clone(),
            mat: then.mat.mul(&self.mat),
        }
    }

    pub fn equals(&self, other: &PresentedMap) -> bool {
        if self.src.gens != other.src.gens || self.dst.gens != other.dst.gens {
            return false;
        }
        let diff = self.mat.sub(&other.mat);
        self.dst.vanishes(&diff)
    }

    pub fn is_zero_map(&self) -> bool {
        self.dst.vanishes(&self.mat)
    }

    /// Lattice `L` in `Z^{src.gens}` whose image under the matrix lands in the
    /// target relations; the kernel of the map is `L / src.rels`.
    pub(crate) fn kernel_lattice(&self) -> IntMatrix {
        // x in L  iff  exists y with mat*x = dst.rels*y
        let stacked = self.mat.hcat(&self.dst.rels.neg());
        let k = reduce::kernel_basis(&stacked);
        let x_part = IntMatrix::from_fn(self.src.gens, k.cols(), |i, j| k[(i, j)].clone());
        // L always contains src.rels; include them so the basis spans the full lattice.
        reduce::image_basis(&x_part.hcat(&self.src.rels))
    }

    pub fn kernel_group(&self) -> FgAbelianGroup {
        let l = self.kernel_lattice();
        let (tors, free) =
            reduce::subquotient(&l, &self.src.rels).expect("relations lie in the kernel lattice");
        FgAbelianGroup {
            free_rank: free,
            torsion: tors,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_group().is_trivial()
    }

    pub fn cokernel_group(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_cokernel(&self.mat.hcat(&self.dst.rels))
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel_group().is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn image_group(&self) -> FgAbelianGroup {
        let span = reduce::image_basis(&self.mat.hcat(&self.dst.rels));
        let (tors, free) = reduce::subquotient(&span, &self.dst.rels)
            .expect("target relations lie in the image span");
        FgAbelianGroup {
            free_rank: free,
            torsion: tors,
        }
    }

    /// Exactness of `self` then `next` at the middle group: the composite must
    /// vanish and the kernel of `next` must equal the image of `self`.
    pub fn exact_at_middle(&self, next: &PresentedMap) -> bool {
        assert_eq!(self.dst.gens, next.src.gens);
        if !self.compose(next).is_zero_map() {
            return false;
        }
        let ker = next.kernel_lattice();
        // image lattice of self inside the middle group's generators
        let im = reduce::image_basis(&self.mat.hcat(&self.dst.rels));
        match reduce::subquotient(&ker, &im) {
            Ok((tors, free)) => tors.is_empty() && free == 0,
            Err(_) => false,
        }
    }
}

/// Coordinates on the free quotient of a presentation whose group has no
/// torsion: `proj` maps generator coordinates onto a chosen basis of the
/// quotient and `sect` is a section of it.
pub struct FreeCoordinates {
    pub rank: usize,
    pub proj: IntMatrix,
    pub sect: IntMatrix,
}

impl Presentation {
    /// `None` when the presented group has torsion.
    pub fn free_coordinates(&self) -> Option<FreeCoordinates> {
        let s = reduce::snf(&self.rels);
        if s.d[..s.rank].iter().any(|x| !x.is_one()) {
            return None;
        }
        let uinv = reduce::invert_unimodular(&s.u);
        let rank = self.gens - s.rank;
        let proj = IntMatrix::from_fn(rank, self.gens, |i, j| s.u[(s.rank + i, j)].clone());
        let sect = IntMatrix::from_fn(self.gens, rank, |i, j| uinv[(i, s.rank + j)].clone());
        Some(FreeCoordinates { rank, proj, sect })
    }
}

/// Homology `ker(outgoing) / im(incoming)` at the shared middle group; the
/// composite must vanish.
pub fn homology_between(incoming: &PresentedMap, outgoing: &PresentedMap) -> FgAbelianGroup {
    assert_eq!(incoming.dst.gens, outgoing.src.gens);
    debug_assert!(incoming.compose(outgoing).is_zero_map());
    let ker = outgoing.kernel_lattice();
    let im = reduce::image_basis(&incoming.mat.hcat(&incoming.dst.rels));
    let (tors, free) =
        reduce::subquotient(&ker, &im).expect("boundaries are cycles in the middle group");
    FgAbelianGroup {
        free_rank: free,
        torsion: tors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: i64) -> Presentation {
        Presentation::from_group(&FgAbelianGroup::cyclic(n))
    }

    #[test]
    fn mod_reduction_map() {
        // Z --3--> Z is injective with cokernel Z/3
        let f = PresentedMap::new(
            Presentation::free(1),
            Presentation::free(1),
            IntMatrix::from_rows_i64(&[&[3]]),
        )
        .unwrap();
        assert!(f.is_injective());
        assert_eq!(f.cokernel_group(), FgAbelianGroup::cyclic(3));

        // Z -> Z/3 quotient is surjective with kernel Z (free)
        let q = PresentedMap::new(Presentation::free(1), zn(3), IntMatrix::identity(1)).unwrap();
        assert!(q.is_surjective());
        assert_eq!(q.kernel_group(), FgAbelianGroup::free(1));
    }

    #[test]
    fn torsion_kernel() {
        // Z/6 --2--> Z/6 has kernel Z/3... careful: multiplication by 2 on Z/6
        // kills the subgroup {0, 3}, which is Z/2? No: ker = {x : 2x = 0 mod 6}
        // = {0, 3} = Z/2.
        let f = PresentedMap::new(zn(6), zn(6), IntMatrix::from_rows_i64(&[&[2]])).unwrap();
        assert_eq!(f.kernel_group(), FgAbelianGroup::cyclic(2));
        assert_eq!(f.cokernel_group(), FgAbelianGroup::cyclic(2));
        assert_eq!(f.image_group(), FgAbelianGroup::cyclic(3));
    }

    #[test]
    fn well_definedness_is_checked() {
        // Z/2 -> Z/3 via 1 is not a homomorphism of presented groups
        assert!(PresentedMap::new(zn(2), zn(3), IntMatrix::identity(1)).is_err());
        // but 0 is fine
        assert!(PresentedMap::new(zn(2), zn(3), IntMatrix::zero(1, 1)).is_ok());
    }

    #[test]
    fn short_exact_sequence() {
        // 0 -> Z --3--> Z -> Z/3 -> 0
        let i = PresentedMap::new(
            Presentation::free(1),
            Presentation::free(1),
            IntMatrix::from_rows_i64(&[&[3]]),
        )
        .unwrap();
        let p = PresentedMap::new(Presentation::free(1), zn(3), IntMatrix::identity(1)).unwrap();
        assert!(i.exact_at_middle(&p));

        let not_exact =
            PresentedMap::new(Presentation::free(1), zn(6), IntMatrix::identity(1)).unwrap();
        assert!(!i.exact_at_middle(&not_exact));
    }
}
