//! External tensor products of diagrams, derived pushout-products, and
//! objectwise cones over counit comparisons.

use std::collections::HashMap;

use crate::percomplex::{cone, tensor, tensor_map, ChainMap, PeriodicComplex};
use crate::posetkit::{slice_over, MonotoneMap};
use crate::{Error, Result};

use super::bar::{augmentation, hocolim, hocolim_map_along_inclusion, BarComplex};
use super::diagram::{chain_maps_equal, ComplexDiagram};

/// `(i, j) |-> X_i (x) Y_j` on the product shape, with edgewise `f (x) 1` and
/// `1 (x) g`.
pub fn external_tensor(x: &ComplexDiagram, y: &ComplexDiagram) -> Result<ComplexDiagram> {
    if x.period() != y.period() {
        return Err(Error::PeriodMismatch(x.period(), y.period()));
    }
    let shape = x.shape.product(&y.shape);
    let ny = y.shape.len();
    let mut vertices = Vec::with_capacity(shape.len());
    for i in 0..x.shape.len() {
        for j in 0..ny {
            vertices.push(tensor(x.vertex(i), y.vertex(j))?);
        }
    }
    let mut edges = HashMap::new();
    for (a, b) in shape.covers() {
        let (ia, ja) = (a / ny, a % ny);
        let (ib, jb) = (b / ny, b % ny);
        let e = tensor_map(&x.map(ia, ib)?, &y.map(ja, jb)?)?;
        edges.insert((a, b), e);
    }
    ComplexDiagram::new(shape, vertices, edges)
}

/// The corner diagram of a pushout-product together with its comparison into
/// the terminal tensor: the map `hocolim(X0 (x) Y1 <- X0 (x) Y0 -> X1 (x) Y0)
/// -> X1 (x) Y1`. Computing the corner as a homotopy colimit keeps the
/// construction derived for arbitrary chain maps, not only levelwise split
/// ones.
pub struct PushoutProduct {
    pub corner: BarComplex,
    pub map: ChainMap,
}

pub fn pushout_product(f: &ChainMap, g: &ChainMap) -> Result<PushoutProduct> {
    let x0y0 = tensor(&f.source, &g.source)?;
    let x1y0 = tensor(&f.target, &g.source)?;
    let x0y1 = tensor(&f.source, &g.target)?;
    let x1y1 = tensor(&f.target, &g.target)?;

    let idx0 = ChainMap::identity(&f.source);
    let idx1 = ChainMap::identity(&f.target);
    let idy0 = ChainMap::identity(&g.source);
    let idy1 = ChainMap::identity(&g.target);

    let shape = crate::posetkit::corner();
    // corner order: (0,0), (1,0), (0,1)
    let mut edges = HashMap::new();
    edges.insert((0, 1), tensor_map(f, &idy0)?);
    edges.insert((0, 2), tensor_map(&idx0, g)?);
    let d = ComplexDiagram::new(shape, vec![x0y0, x1y0, x0y1.clone()], edges)?;
    let corner = hocolim(&d)?;

    let legs = vec![
        tensor_map(f, g)?,
        tensor_map(&idx1, g)?,
        tensor_map(f, &idy1)?,
    ];
    let map = augmentation(&d, &corner, &x1y1, &legs)?;
    Ok(PushoutProduct { corner, map })
}

/// Homotopy cofiber as the totalization over the corner `* <- X -> Y`.
pub fn hocofib(f: &ChainMap) -> Result<BarComplex> {
    let zero = PeriodicComplex::zero(f.source.period());
    let shape = crate::posetkit::corner();
    let mut edges = HashMap::new();
    edges.insert((0, 1), f.clone());
    edges.insert((0, 2), ChainMap::zero(&f.source, &zero)?);
    let d = ComplexDiagram::new(shape, vec![f.source.clone(), f.target.clone(), zero], edges)?;
    hocolim(&d)
}

/// Vertexwise cones over a strictly commuting transformation `eta: A -> B`
/// of diagrams on the same shape, with the functorial edges.
pub fn cone_diagram(
    a: &ComplexDiagram,
    b: &ComplexDiagram,
    eta: &[ChainMap],
) -> Result<ComplexDiagram> {
    let shape = a.shape.clone();
    assert_eq!(eta.len(), shape.len());
    for (u, v) in shape.covers() {
        let lhs = a.map(u, v)?.compose(&eta[v])?;
        let rhs = eta[u].compose(&b.map(u, v)?)?;
        if !chain_maps_equal(&lhs, &rhs) {
            return Err(Error::ShapeMismatch(format!(
                "transformation is not natural over {} -> {}",
                shape.label(u),
                shape.label(v)
            )));
        }
    }
    let cones: Vec<_> = (0..shape.len()).map(|v| cone(&eta[v])).collect();
    let vertices: Vec<PeriodicComplex> = cones.iter().map(|c| c.complex.clone()).collect();
    let p = a.period();
    let prev = |n: usize| (n + p - 1) % p;
    let mut edges = HashMap::new();
    for (u, v) in shape.covers() {
        let bu = b.map(u, v)?;
        let au = a.map(u, v)?;
        let blocks: Vec<_> = (0..p)
            .map(|n| {
                let mut m = crate::exactlin::IntMatrix::zero(
                    vertices[v].rank(n),
                    vertices[u].rank(n),
                );
                m.write_block(0, 0, bu.block(n));
                m.write_block(
                    b.vertex(v).rank(n),
                    b.vertex(u).rank(n),
                    au.block(prev(n)),
                );
                m
            })
            .collect();
        edges.insert(
            (u, v),
            ChainMap::new(vertices[u].clone(), vertices[v].clone(), blocks)?,
        );
    }
    ComplexDiagram::new(shape, vertices, edges)
}

/// Objectwise cone over the counit of the Kan adjunction along `f`: at each
/// target vertex `j`, the cone of `hocolim_{f/j}(f^* D) -> D_j`.
pub fn counit_cone(f: &MonotoneMap, d: &ComplexDiagram) -> Result<ComplexDiagram> {
    let target = &f.target;
    // Kan vertices with their bar data
    let mut kan_vertices = Vec::with_capacity(target.len());
    for j in 0..target.len() {
        let (slice, embed) = slice_over(f, target.label(j))?;
        let pulled = embed.compose(f);
        let restricted = d.pullback(&pulled)?;
        let bar = hocolim(&restricted)?;
        kan_vertices.push((slice, restricted, bar));
    }
    // Kan diagram on the target
    let mut kan_edges = HashMap::new();
    for (a, b) in target.covers() {
        let (sa, ra, ba) = &kan_vertices[a];
        let (sb, rb, bb) = &kan_vertices[b];
        let incl = MonotoneMap::inclusion(sa, sb)?;
        kan_edges.insert((a, b), hocolim_map_along_inclusion(ra, rb, &incl, ba, bb)?);
    }
    let kan = ComplexDiagram::new(
        target.clone(),
        kan_vertices.iter().map(|(_, _, b)| b.total.clone()).collect(),
        kan_edges,
    )?;

    // Counit legs: the augmentation by the structure maps D(f c) -> D_j.
    let mut counit = Vec::with_capacity(target.len());
    for j in 0..target.len() {
        let (slice, restricted, bar) = &kan_vertices[j];
        let legs: Vec<ChainMap> = (0..slice.len())
            .map(|c| {
                let in_source = f.source.position(slice.label(c)).expect("slice embeds");
                d.map(f.apply(in_source), j)
            })
            .collect::<Result<_>>()?;
        counit.push(augmentation(restricted, bar, d.vertex(j), &legs)?);
    }
    cone_diagram(&kan, d, &counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{FgAbelianGroup, IntMatrix};
    use crate::percomplex::tensor_period;

    fn times(z: &PeriodicComplex, m: i64) -> ChainMap {
        ChainMap::new(
            z.clone(),
            z.clone(),
            vec![IntMatrix::from_rows_i64(&[&[m]]), IntMatrix::zero(0, 0)],
        )
        .unwrap()
    }

    #[test]
    fn hocofib_matches_cone() {
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let f = times(&z, 3);
        let hc = hocofib(&f).unwrap();
        let c = cone(&f);
        assert_eq!(hc.total.homology(), c.complex.homology());
    }

    #[test]
    fn cone_monoidality_for_multiplications() {
        // hocofib(f) (x) hocofib(g) has the homology of hocofib(f box g)
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let f = times(&z, 3);
        let g = times(&z, 3);
        let pp = pushout_product(&f, &g).unwrap();
        let lhs = tensor(&cone(&f).complex, &cone(&g).complex)
            .unwrap()
            .homology();
        let rhs = hocofib(&pp.map).unwrap().total.homology();
        assert!(lhs.isomorphic_after_fold(&rhs));
        // H(cone f (x) cone g) = Z/3 in both slots for the Moore pattern
        assert_eq!(lhs.slots[0], FgAbelianGroup::cyclic(3));
        assert_eq!(lhs.slots[1], FgAbelianGroup::cyclic(3));
    }

    #[test]
    fn pushout_product_with_identity_leg() {
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let f = times(&z, 5);
        let g = ChainMap::identity(&z);
        let pp = pushout_product(&f, &g).unwrap();
        // f box id is an equivalence: its cofiber is acyclic
        assert!(hocofib(&pp.map).unwrap().total.is_acyclic());
    }

    #[test]
    fn pushout_product_from_zero_source() {
        // f: 0 -> X gives f box g = X (x) g up to the bar thickening
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let zero = PeriodicComplex::zero(2);
        let f = ChainMap::zero(&zero, &z).unwrap();
        let g = times(&z, 7);
        let pp = pushout_product(&f, &g).unwrap();
        let direct = tensor_map(&ChainMap::identity(&z), &g).unwrap();
        assert_eq!(
            hocofib(&pp.map).unwrap().total.homology(),
            hocofib(&direct).unwrap().total.homology()
        );
        assert_eq!(pp.corner.total.period(), tensor_period(2));
    }

    #[test]
    fn counit_cone_along_identity_is_acyclic() {
        let z = PeriodicComplex::concentrated_free(2, 0, 1);
        let mut edges = HashMap::new();
        edges.insert((0, 1), times(&z, 3));
        let d = ComplexDiagram::new(crate::posetkit::interval(), vec![z.clone(), z.clone()], edges)
            .unwrap();
        let id = MonotoneMap::identity(&crate::posetkit::interval());
        let cc = counit_cone(&id, &d).unwrap();
        for v in 0..2 {
            assert!(cc.vertex(v).is_acyclic());
        }
    }
}
