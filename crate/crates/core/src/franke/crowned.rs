//! Crowned diagrams: functors from the crown poset into periodic complexes,
//! with the named structure maps `l_i: X_{b_i} -> X_{z_i}` and
//! `k_i: X_{b_{i-1}} -> X_{z_i}`.

use std::collections::HashMap;

use crate::diagramkit::ComplexDiagram;
use crate::percomplex::{ChainMap, PeriodicComplex};
use crate::posetkit::{crown, Label};
use crate::{Error, Result};

#[derive(Clone)]
pub struct CrownedDiagram {
    /// Number of crown points; vertex complexes may live at this period or a
    /// multiple of it (external products double odd periods).
    pub n: usize,
    pub diagram: ComplexDiagram,
}

impl CrownedDiagram {
    pub fn new(
        n: usize,
        betas: Vec<PeriodicComplex>,
        zetas: Vec<PeriodicComplex>,
        ls: Vec<ChainMap>,
        ks: Vec<ChainMap>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPeriod(n));
        }
        assert_eq!(betas.len(), n);
        assert_eq!(zetas.len(), n);
        let shape = crown(n)?;
        let mut vertices = Vec::with_capacity(2 * n);
        for b in &betas {
            vertices.push(b.clone());
        }
        for z in &zetas {
            vertices.push(z.clone());
        }
        let mut edges = HashMap::new();
        for i in 0..n {
            let b_i = shape.position(&Label::Beta(i))?;
            let z_i = shape.position(&Label::Zeta(i))?;
            let b_prev = shape.position(&Label::Beta((i + n - 1) % n))?;
            edges.insert((b_i, z_i), ls[i].clone());
            edges.insert((b_prev, z_i), ks[i].clone());
        }
        let diagram = ComplexDiagram::new(shape, vertices, edges)?;
        Ok(CrownedDiagram { n, diagram })
    }

    /// Wrap an existing diagram whose shape is a crown (for pullbacks of Kan
    /// extensions along the crown inclusion).
    pub fn from_diagram(n: usize, diagram: ComplexDiagram) -> Result<Self> {
        let expect = crown(n)?;
        for l in expect.elements() {
            diagram.shape.position(l)?;
        }
        if diagram.shape.len() != expect.len() {
            return Err(Error::ShapeMismatch(
                "shape is not the crown poset".into(),
            ));
        }
        Ok(CrownedDiagram { n, diagram })
    }

    pub fn vertex_period(&self) -> usize {
        self.diagram.period()
    }

    pub fn beta(&self, i: usize) -> &PeriodicComplex {
        self.diagram
            .vertex_by_label(&Label::Beta(i % self.n))
            .expect("crown has all beta vertices")
    }

    pub fn zeta(&self, i: usize) -> &PeriodicComplex {
        self.diagram
            .vertex_by_label(&Label::Zeta(i % self.n))
            .expect("crown has all zeta vertices")
    }

    pub fn l(&self, i: usize) -> ChainMap {
        self.diagram
            .map_by_labels(&Label::Beta(i % self.n), &Label::Zeta(i % self.n))
            .expect("crown edge l_i exists")
    }

    pub fn k(&self, i: usize) -> ChainMap {
        let i = i % self.n;
        self.diagram
            .map_by_labels(&Label::Beta((i + self.n - 1) % self.n), &Label::Zeta(i))
            .expect("crown edge k_i exists")
    }
}
