//! Homology of a finite poset with coefficients in a functor: the associated
//! complex of the normalized simplicial replacement, computed slotwise at the
//! presentation level.

use crate::exactlin::{homology_between, IntMatrix, Presentation, PresentedMap};
use crate::percomplex::GradedModule;
use crate::posetkit::all_chains;
use crate::Result;

use super::diagram::ModuleDiagram;

/// `H_p(I; D)` for `p = 0 ..= height(I)`, each a graded module. Higher `p`
/// vanish because the normalized replacement has no longer chains.
pub fn category_homology(d: &ModuleDiagram) -> Result<Vec<GradedModule>> {
    let chains = all_chains(&d.shape);
    let height = chains.len() - 1;
    let mut result = Vec::with_capacity(height + 1);

    // Per slot, build the associated complex C_p = (+)_{chains} D(v_0) and
    // take homology between consecutive boundaries.
    let mut per_slot_homology: Vec<Vec<crate::exactlin::FgAbelianGroup>> = Vec::new();
    for n in 0..d.period {
        // presentations of C_p
        let mut cs: Vec<Presentation> = Vec::with_capacity(height + 1);
        let mut offsets: Vec<Vec<usize>> = Vec::with_capacity(height + 1);
        for level in &chains {
            let mut pres = Presentation::trivial();
            let mut offs = Vec::with_capacity(level.len());
            for chain in level {
                offs.push(pres.gens);
                pres = pres.direct_sum(&d.vertices[chain[0]][n]);
            }
            cs.push(pres);
            offsets.push(offs);
        }
        // boundaries d_p : C_p -> C_{p-1}, p >= 1
        let mut boundaries: Vec<PresentedMap> = Vec::new();
        for p in 1..=height {
            let index: std::collections::HashMap<&[usize], usize> = chains[p - 1]
                .iter()
                .enumerate()
                .map(|(i, c)| (c.as_slice(), i))
                .collect();
            let mut mat = IntMatrix::zero(cs[p - 1].gens, cs[p].gens);
            for (ci, chain) in chains[p].iter().enumerate() {
                let src_off = offsets[p][ci];
                let src_gens = d.vertices[chain[0]][n].gens;
                for k in 0..=p {
                    let mut face = chain.clone();
                    face.remove(k);
                    let fi = index[face.as_slice()];
                    let dst_off = offsets[p - 1][fi];
                    let sign_pos = k % 2 == 0;
                    if k == 0 {
                        let e = &d.edge(chain[0], chain[1])?[n];
                        let b = if sign_pos { e.mat.clone() } else { e.mat.neg() };
                        mat.add_block(dst_off, src_off, &b);
                    } else {
                        let id = IntMatrix::identity(src_gens);
                        let b = if sign_pos { id } else { id.neg() };
                        mat.add_block(dst_off, src_off, &b);
                    }
                }
            }
            boundaries.push(
                PresentedMap::new(cs[p].clone(), cs[p - 1].clone(), mat)
                    .expect("face maps respect relations"),
            );
        }
        // homology per p
        let mut hs = Vec::with_capacity(height + 1);
        for p in 0..=height {
            let incoming = if p + 1 <= height {
                boundaries[p].clone()
            } else {
                PresentedMap::zero(&Presentation::trivial(), &cs[p])
            };
            let outgoing = if p >= 1 {
                boundaries[p - 1].clone()
            } else {
                PresentedMap::zero(&cs[0], &Presentation::trivial())
            };
            hs.push(homology_between(&incoming, &outgoing));
        }
        per_slot_homology.push(hs);
    }

    for p in 0..=height {
        result.push(GradedModule {
            period: d.period,
            slots: (0..d.period)
                .map(|n| per_slot_homology[n][p].clone())
                .collect(),
        });
    }
    Ok(result)
}
