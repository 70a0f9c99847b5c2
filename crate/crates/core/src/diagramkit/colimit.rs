//! Strict colimits of diagrams, as coequalizers over covering edges.

use crate::exactlin::{
    cokernel_data, snf, FgAbelianGroup, IntMatrix, PresentedMap,
};
use crate::percomplex::{GradedModule, PeriodicComplex};
use crate::{Error, Result};

use super::diagram::{ComplexDiagram, ModuleDiagram};

/// Per-slot relation matrix of the coequalizer `coker( (+)_{u -> v} D(u) ->
/// (+)_w D(w) )`, columns `x |-> x@u - e(x)@v`.
fn coeq_relations(
    shape_covers: &[(usize, usize)],
    slot_rank: impl Fn(usize) -> usize,
    total: usize,
    offsets: &[usize],
    edge_block: impl Fn(usize, usize) -> IntMatrix,
) -> IntMatrix {
    let mut cols = Vec::new();
    for &(u, v) in shape_covers {
        let r = slot_rank(u);
        let e = edge_block(u, v);
        for x in 0..r {
            let mut col = IntMatrix::zero(total, 1);
            col[(offsets[u] + x, 0)] = crate::exactlin::Int::ONE;
            for y in 0..e.rows() {
                if !e[(y, x)].is_zero() {
                    col[(offsets[v] + y, 0)] = e[(y, x)].neg();
                }
            }
            cols.push(col);
        }
    }
    let mut rels = IntMatrix::zero(total, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for i in 0..total {
            if !c[(i, 0)].is_zero() {
                rels[(i, j)] = c[(i, 0)].clone();
            }
        }
    }
    rels
}

/// Isomorphism types of the slotwise colimit of a module diagram.
pub fn colimit_modules(d: &ModuleDiagram) -> Result<GradedModule> {
    let covers = d.shape.covers();
    let mut slots = Vec::with_capacity(d.period);
    for n in 0..d.period {
        let mut offsets = vec![0usize; d.shape.len()];
        let mut total = 0;
        for v in 0..d.shape.len() {
            offsets[v] = total;
            total += d.vertices[v][n].gens;
        }
        // vertex relations plus coequalizer relations
        let mut rels = IntMatrix::zero(total, 0);
        for v in 0..d.shape.len() {
            let vr = &d.vertices[v][n].rels;
            let mut lifted = IntMatrix::zero(total, vr.cols());
            lifted.write_block(offsets[v], 0, vr);
            rels = rels.hcat(&lifted);
        }
        let edge_maps: std::collections::HashMap<(usize, usize), PresentedMap> = covers
            .iter()
            .map(|&(u, v)| ((u, v), d.edge(u, v).unwrap()[n].clone()))
            .collect();
        let coeq = coeq_relations(
            &covers,
            |u| d.vertices[u][n].gens,
            total,
            &offsets,
            |u, v| edge_maps[&(u, v)].mat.clone(),
        );
        rels = rels.hcat(&coeq);
        let (torsion, free_rank) = cokernel_data(&rels);
        slots.push(FgAbelianGroup { free_rank, torsion });
    }
    Ok(GradedModule {
        period: d.period,
        slots,
    })
}

/// Strict colimit of a diagram of free complexes. The result must again be
/// degreewise free (true for the pushouts along levelwise split injections
/// used in this crate); torsion is reported as an error.
pub fn colimit_complexes(d: &ComplexDiagram) -> Result<PeriodicComplex> {
    let p = d.period();
    let covers = d.shape.covers();
    let mut offsets = vec![vec![0usize; d.shape.len()]; p];
    let mut totals = vec![0usize; p];
    for n in 0..p {
        for v in 0..d.shape.len() {
            offsets[n][v] = totals[n];
            totals[n] += d.vertex(v).rank(n);
        }
    }

    // Smith data of the relation lattice per slot.
    let mut proj = Vec::with_capacity(p); // coordinates in the free quotient
    let mut sect = Vec::with_capacity(p); // a section of proj
    let mut franks = Vec::with_capacity(p);
    for n in 0..p {
        let edge_blocks: std::collections::HashMap<(usize, usize), IntMatrix> = covers
            .iter()
            .map(|&(u, v)| ((u, v), d.map(u, v).unwrap().block(n).clone()))
            .collect();
        let rels = coeq_relations(
            &covers,
            |u| d.vertex(u).rank(n),
            totals[n],
            &offsets[n],
            |u, v| edge_blocks[&(u, v)].clone(),
        );
        let s = snf(&rels);
        if s.d[..s.rank].iter().any(|x| !x.is_one()) {
            return Err(Error::TorsionInColimit(n));
        }
        let uinv = crate::exactlin::invert_unimodular(&s.u);
        let frank = totals[n] - s.rank;
        let pr = IntMatrix::from_fn(frank, totals[n], |i, j| s.u[(s.rank + i, j)].clone());
        let se = IntMatrix::from_fn(totals[n], frank, |i, j| uinv[(i, s.rank + j)].clone());
        proj.push(pr);
        sect.push(se);
        franks.push(frank);
    }

    // Induced differential on the quotient.
    let mut diff = Vec::with_capacity(p);
    for n in 0..p {
        let prev = (n + p - 1) % p;
        // block-diagonal differential of the disjoint union
        let mut big = IntMatrix::zero(totals[prev], totals[n]);
        for v in 0..d.shape.len() {
            big.write_block(offsets[prev][v], offsets[n][v], d.vertex(v).differential(n));
        }
        diff.push(proj[prev].mul(&big).mul(&sect[n]));
    }
    PeriodicComplex::new(p, franks, diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::percomplex::ChainMap;
    use crate::posetkit::{corner, FinitePoset, Label};
    use std::collections::HashMap as Map;

    #[test]
    fn pushout_of_coprime_multiplications() {
        // Z <-2- Z -3-> Z over the corner: coker((2,-3)^T) = Z
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let shape = corner();
        let m2 = ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[2]]), IntMatrix::zero(0, 0)],
        )
        .unwrap();
        let m3 = ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[3]]), IntMatrix::zero(0, 0)],
        )
        .unwrap();
        let mut edges = Map::new();
        edges.insert((0, 1), m2);
        edges.insert((0, 2), m3);
        let d = ComplexDiagram::new(shape, vec![z.clone(), z.clone(), z.clone()], edges).unwrap();
        let c = colimit_complexes(&d).unwrap();
        assert_eq!(c.rank(0), 1);
        assert_eq!(c.rank(1), 0);
    }

    #[test]
    fn discrete_colimit_is_direct_sum() {
        let shape = FinitePoset::from_relations(vec![Label::Atom(0), Label::Atom(1)], &[]).unwrap();
        let x = PeriodicComplex::moore(2, 3);
        let d = ComplexDiagram::new(shape, vec![x.clone(), x.clone()], Map::new()).unwrap();
        let c = colimit_complexes(&d).unwrap();
        assert_eq!(c.rank(0), 2);
        assert_eq!(c.rank(1), 2);
        let h = c.homology();
        assert_eq!(
            h.slots[0],
            FgAbelianGroup::cyclic(3).direct_sum(&FgAbelianGroup::cyclic(3))
        );
    }

    #[test]
    fn constant_colimit_over_connected_shape() {
        let x = PeriodicComplex::moore(2, 5);
        let d = ComplexDiagram::constant(crate::posetkit::interval(), x.clone()).unwrap();
        let c = colimit_complexes(&d).unwrap();
        assert_eq!(c.homology(), x.homology());
        assert_eq!(c.ranks(), x.ranks());
    }
}
