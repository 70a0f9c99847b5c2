//! Normalized bar construction and its totalization.
//!
//! The simplicial replacement of a diagram stores, in bar degree p, one copy
//! of the carrier `D(v_0)` for every nondegenerate chain `v_0 < ... < v_p` of
//! the shape. Faces drop a vertex; dropping the head applies the structure
//! map. Totalizing folds bar degree into the periodic grading: a generator of
//! carrier slot n in bar degree p lands in total slot n + p, and the total
//! differential is the face alternation plus `(-1)^p` times the internal
//! differential. Degreewise-free carriers make this an exact model of the
//! homotopy colimit.

use std::collections::HashMap;

use crate::exactlin::IntMatrix;
use crate::percomplex::{ChainMap, PeriodicComplex};
use crate::posetkit::{all_chains, MonotoneMap};
use crate::Result;

use super::diagram::ComplexDiagram;

#[derive(Clone, Copy, Debug)]
pub struct Block {
    pub total_slot: usize,
    pub offset: usize,
    pub rank: usize,
}

/// Totalized simplicial replacement, with enough bookkeeping to build maps
/// between totalizations.
pub struct BarComplex {
    pub total: PeriodicComplex,
    /// chains[p] lists the bar-degree-p chains (vertex index tuples) that
    /// carry a nonzero complex.
    pub chains: Vec<Vec<Vec<usize>>>,
    chain_index: Vec<HashMap<Vec<usize>, usize>>,
    /// block of (bar degree, chain index, carrier slot)
    blocks: HashMap<(usize, usize, usize), Block>,
}

impl BarComplex {
    pub fn block(&self, p: usize, chain: usize, slot: usize) -> Option<&Block> {
        self.blocks.get(&(p, chain, slot))
    }

    pub fn chain_position(&self, p: usize, chain: &[usize]) -> Option<usize> {
        self.chain_index.get(p).and_then(|m| m.get(chain)).copied()
    }
}

/// The totalized simplicial replacement of a diagram; the same data as its
/// homotopy colimit.
pub fn simplicial_replacement(d: &ComplexDiagram) -> Result<BarComplex> {
    hocolim(d)
}

/// Homotopy colimit of a diagram of degreewise-free complexes.
pub fn hocolim(d: &ComplexDiagram) -> Result<BarComplex> {
    let period = d.period();
    let raw_chains = all_chains(&d.shape);

    // Keep only chains whose carrier is nonzero.
    let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut chain_index: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    for level in &raw_chains {
        let kept: Vec<Vec<usize>> = level
            .iter()
            .filter(|c| !d.vertex(c[0]).is_zero_object())
            .cloned()
            .collect();
        let index = kept
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        chains.push(kept);
        chain_index.push(index);
    }

    // Lay out blocks.
    let mut ranks = vec![0usize; period];
    let mut blocks: HashMap<(usize, usize, usize), Block> = HashMap::new();
    for (p, level) in chains.iter().enumerate() {
        for (c, chain) in level.iter().enumerate() {
            let carrier = d.vertex(chain[0]);
            for n in 0..period {
                let r = carrier.rank(n);
                if r == 0 {
                    continue;
                }
                let t = (n + p) % period;
                blocks.insert(
                    (p, c, n),
                    Block {
                        total_slot: t,
                        offset: ranks[t],
                        rank: r,
                    },
                );
                ranks[t] += r;
            }
        }
    }

    // Assemble the total differential.
    let mut diff: Vec<IntMatrix> = (0..period)
        .map(|t| IntMatrix::zero(ranks[(t + period - 1) % period], ranks[t]))
        .collect();

    for (p, level) in chains.iter().enumerate() {
        for (c, chain) in level.iter().enumerate() {
            let carrier = d.vertex(chain[0]);
            for n in 0..period {
                let Some(src) = blocks.get(&(p, c, n)).copied() else {
                    continue;
                };
                let t = src.total_slot;
                let dmat = &mut diff[t];

                // internal differential, sign (-1)^p
                let n1 = (n + period - 1) % period;
                if let Some(dst) = blocks.get(&(p, c, n1)) {
                    let b = carrier.differential(n);
                    let b = if p % 2 == 0 { b.clone() } else { b.neg() };
                    dmat.add_block(dst.offset, src.offset, &b);
                }

                // bar faces
                for k in 0..=p {
                    if p == 0 {
                        break;
                    }
                    let mut face = chain.clone();
                    face.remove(k);
                    let Some(&fc) = chain_index[p - 1].get(&face) else {
                        continue; // face carrier is a zero complex
                    };
                    if k == 0 {
                        // head face: transport along the structure map
                        let e = d.map(chain[0], chain[1])?;
                        if let Some(dst) = blocks.get(&(p - 1, fc, n)) {
                            dmat.add_block(dst.offset, src.offset, e.block(n));
                        }
                    } else if let Some(dst) = blocks.get(&(p - 1, fc, n)) {
                        let id = IntMatrix::identity(src.rank);
                        let b = if k % 2 == 0 { id } else { id.neg() };
                        dmat.add_block(dst.offset, src.offset, &b);
                    }
                }
            }
        }
    }

    let total = PeriodicComplex::new(period, ranks, diff)?;
    Ok(BarComplex {
        total,
        chains,
        chain_index,
        blocks,
    })
}

/// The map of totalizations induced by a map of posets `f` together with
/// vertexwise chain maps `alpha[v]: D_I(v) -> D_J(f v)` commuting with the
/// structure maps. Chains with degenerate image die in the normalized bar.
pub fn hocolim_map(
    src: &ComplexDiagram,
    dst: &ComplexDiagram,
    f: &MonotoneMap,
    alpha: &[ChainMap],
    bar_src: &BarComplex,
    bar_dst: &BarComplex,
) -> Result<ChainMap> {
    let period = src.period();
    // naturality of alpha on covers
    for (a, b) in f.source.covers() {
        let lhs = src.map(a, b)?.compose(&alpha[b])?;
        let rhs = alpha[a].compose(&dst.map(f.apply(a), f.apply(b))?)?;
        if !super::diagram::chain_maps_equal(&lhs, &rhs) {
            return Err(crate::Error::ShapeMismatch(format!(
                "vertex maps are not natural on the cover {} -> {}",
                f.source.label(a),
                f.source.label(b)
            )));
        }
    }

    let mut blocks_out: Vec<IntMatrix> = (0..period)
        .map(|t| IntMatrix::zero(bar_dst.total.rank(t), bar_src.total.rank(t)))
        .collect();

    for (p, level) in bar_src.chains.iter().enumerate() {
        for (c, chain) in level.iter().enumerate() {
            // image chain, dropped if degenerate
            let image: Vec<usize> = chain.iter().map(|&v| f.apply(v)).collect();
            let degenerate = image.windows(2).any(|w| w[0] == w[1]);
            if degenerate {
                continue;
            }
            let Some(tc) = bar_dst.chain_position(p, &image) else {
                continue;
            };
            let a = &alpha[chain[0]];
            for n in 0..period {
                let Some(sb) = bar_src.block(p, c, n) else {
                    continue;
                };
                if let Some(db) = bar_dst.block(p, tc, n) {
                    blocks_out[sb.total_slot].write_block(db.offset, sb.offset, a.block(n));
                }
            }
        }
    }

    ChainMap::new(bar_src.total.clone(), bar_dst.total.clone(), blocks_out)
}

/// Identity-on-vertices comparison along a shape inclusion, the workhorse for
/// Kan extension edges.
pub fn hocolim_map_along_inclusion(
    src: &ComplexDiagram,
    dst: &ComplexDiagram,
    f: &MonotoneMap,
    bar_src: &BarComplex,
    bar_dst: &BarComplex,
) -> Result<ChainMap> {
    let alpha: Vec<ChainMap> = (0..f.source.len())
        .map(|v| {
            debug_assert_eq!(src.vertex(v), dst.vertex(f.apply(v)));
            ChainMap::identity(src.vertex(v))
        })
        .collect();
    hocolim_map(src, dst, f, &alpha, bar_src, bar_dst)
}

/// The augmentation `hocolim(D) -> C` of a cocone: chain maps `legs[v]:
/// D(v) -> C` commuting with the structure maps; bar degree zero maps by the
/// legs and higher bar degrees die.
pub fn augmentation(
    d: &ComplexDiagram,
    bar: &BarComplex,
    apex: &PeriodicComplex,
    legs: &[ChainMap],
) -> Result<ChainMap> {
    let period = d.period();
    for (a, b) in d.shape.covers() {
        let through = d.map(a, b)?.compose(&legs[b])?;
        if !super::diagram::chain_maps_equal(&through, &legs[a]) {
            return Err(crate::Error::ShapeMismatch(format!(
                "cocone legs do not commute over {} -> {}",
                d.shape.label(a),
                d.shape.label(b)
            )));
        }
    }
    let mut blocks: Vec<IntMatrix> = (0..period)
        .map(|t| IntMatrix::zero(apex.rank(t), bar.total.rank(t)))
        .collect();
    for (c, chain) in bar.chains[0].iter().enumerate() {
        let v = chain[0];
        for n in 0..period {
            if let Some(sb) = bar.block(0, c, n) {
                blocks[n].write_block(0, sb.offset, legs[v].block(n));
            }
        }
    }
    ChainMap::new(bar.total.clone(), apex.clone(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FgAbelianGroup;
    use crate::posetkit::{corner, interval, FinitePoset, Label};
    use std::collections::HashMap as Map;

    fn one_point() -> FinitePoset {
        FinitePoset::from_relations(vec![Label::Atom(0)], &[]).unwrap()
    }

    #[test]
    fn point_hocolim_is_the_vertex() {
        let m = PeriodicComplex::moore(2, 3);
        let d = ComplexDiagram::new(one_point(), vec![m.clone()], Map::new()).unwrap();
        let h = hocolim(&d).unwrap();
        assert_eq!(h.total, m);
    }

    #[test]
    fn cylinder_has_target_homology() {
        // interval with x3 : Z -> Z in slot 0
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let f = ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[3]]), IntMatrix::zero(0, 0)],
        )
        .unwrap();
        let mut edges = Map::new();
        edges.insert((0, 1), f);
        let d = ComplexDiagram::new(interval(), vec![z.clone(), z.clone()], edges).unwrap();
        let h = hocolim(&d).unwrap();
        assert_eq!(h.total.homology(), z.homology());
    }

    #[test]
    fn suspension_via_corner() {
        // hocolim( * <- X -> * ) has the homology of X shifted by one
        let x = PeriodicComplex::moore(2, 3);
        let zero = PeriodicComplex::zero(2);
        let shape = corner();
        let mut edges = Map::new();
        edges.insert((0, 1), ChainMap::zero(&x, &zero).unwrap());
        edges.insert((0, 2), ChainMap::zero(&x, &zero).unwrap());
        let d = ComplexDiagram::new(shape, vec![x.clone(), zero.clone(), zero], edges).unwrap();
        let h = hocolim(&d).unwrap();
        assert_eq!(h.total.homology(), x.shift(1).homology());
    }

    #[test]
    fn homotopy_cofiber_of_multiplication() {
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let zero = PeriodicComplex::zero(2);
        let f = ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[3]]), IntMatrix::zero(0, 0)],
        )
        .unwrap();
        let shape = corner();
        let mut edges = Map::new();
        edges.insert((0, 1), f);
        edges.insert((0, 2), ChainMap::zero(&z, &zero).unwrap());
        let d = ComplexDiagram::new(shape, vec![z.clone(), z.clone(), zero], edges).unwrap();
        let h = hocolim(&d).unwrap().total.homology();
        assert_eq!(h.slots[0], FgAbelianGroup::cyclic(3));
        assert!(h.slots[1].is_trivial());
    }

    #[test]
    fn constant_diagram_over_contractible_shape() {
        let x = PeriodicComplex::moore(3, 4);
        let d = ComplexDiagram::constant(interval(), x.clone()).unwrap();
        let h = hocolim(&d).unwrap();
        assert_eq!(h.total.homology(), x.homology());
    }
}
