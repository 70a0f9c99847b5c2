//! Diagrams of periodic complexes (and of presented graded modules) over
//! finite posets. Edges are stored on covering pairs; arbitrary structure
//! maps are composed on demand and all composites are validated to agree.

use std::collections::HashMap;

use crate::exactlin::{Presentation, PresentedMap};
use crate::percomplex::{ChainMap, PeriodicComplex};
use crate::posetkit::{FinitePoset, Label, MonotoneMap};
use crate::{Error, Result};

#[derive(Clone)]
pub struct ComplexDiagram {
    pub shape: FinitePoset,
    period: usize,
    vertices: Vec<PeriodicComplex>,
    edges: HashMap<(usize, usize), ChainMap>,
}

impl ComplexDiagram {
    pub fn new(
        shape: FinitePoset,
        vertices: Vec<PeriodicComplex>,
        cover_edges: HashMap<(usize, usize), ChainMap>,
    ) -> Result<Self> {
        let period = vertices.first().map(PeriodicComplex::period).unwrap_or(2);
        Self::with_period(shape, vertices, cover_edges, period)
    }

    /// As `new`, with the period fixed explicitly so that empty diagrams
    /// (restrictions to empty slices) keep the ambient period.
    pub fn with_period(
        shape: FinitePoset,
        vertices: Vec<PeriodicComplex>,
        cover_edges: HashMap<(usize, usize), ChainMap>,
        period: usize,
    ) -> Result<Self> {
        assert_eq!(vertices.len(), shape.len());
        for v in &vertices {
            if v.period() != period {
                return Err(Error::PeriodMismatch(period, v.period()));
            }
        }
        let covers = shape.covers();
        for &(a, b) in &covers {
            let e = cover_edges.get(&(a, b)).ok_or_else(|| {
                Error::ShapeMismatch(format!(
                    "missing edge {} -> {}",
                    shape.label(a),
                    shape.label(b)
                ))
            })?;
            if e.source != vertices[a] || e.target != vertices[b] {
                return Err(Error::ShapeMismatch(format!(
                    "edge endpoints disagree with vertices at {} -> {}",
                    shape.label(a),
                    shape.label(b)
                )));
            }
        }
        let d = ComplexDiagram {
            shape,
            period,
            vertices,
            edges: cover_edges,
        };
        d.validate_commutativity()?;
        Ok(d)
    }

    /// Composite structure maps agree along every pair of cover paths: for
    /// each x < z, the composites through every lower cover of z coincide.
    fn validate_commutativity(&self) -> Result<()> {
        let mut memo: HashMap<(usize, usize), ChainMap> = HashMap::new();
        for &(x, z) in &self.shape.strict_pairs() {
            let canonical = self.map_memo(x, z, &mut memo)?;
            for y in 0..self.shape.len() {
                if self.shape.lt(x, y) && self.shape.lt(y, z) {
                    if let Some(e) = self.edges.get(&(y, z)) {
                        let via = self.map_memo(x, y, &mut memo)?.compose(e)?;
                        if !chain_maps_equal(&via, &canonical) {
                            return Err(Error::ShapeMismatch(format!(
                                "square at {} <= {} <= {} does not commute",
                                self.shape.label(x),
                                self.shape.label(y),
                                self.shape.label(z)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn map_memo(
        &self,
        a: usize,
        b: usize,
        memo: &mut HashMap<(usize, usize), ChainMap>,
    ) -> Result<ChainMap> {
        if a == b {
            return Ok(ChainMap::identity(&self.vertices[a]));
        }
        if let Some(m) = memo.get(&(a, b)) {
            return Ok(m.clone());
        }
        if let Some(e) = self.edges.get(&(a, b)) {
            memo.insert((a, b), e.clone());
            return Ok(e.clone());
        }
        // first cover step out of a staying below b
        for c in 0..self.shape.len() {
            if self.edges.contains_key(&(a, c)) && self.shape.leq(c, b) {
                let first = self.edges[&(a, c)].clone();
                let rest = self.map_memo(c, b, memo)?;
                let m = first.compose(&rest)?;
                memo.insert((a, b), m.clone());
                return Ok(m);
            }
        }
        Err(Error::ShapeMismatch(format!(
            "no path from {} to {}",
            self.shape.label(a),
            self.shape.label(b)
        )))
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn vertex(&self, i: usize) -> &PeriodicComplex {
        &self.vertices[i]
    }

    pub fn vertex_by_label(&self, l: &Label) -> Result<&PeriodicComplex> {
        Ok(&self.vertices[self.shape.position(l)?])
    }

    /// Structure map for any x <= y.
    pub fn map(&self, a: usize, b: usize) -> Result<ChainMap> {
        let mut memo = HashMap::new();
        self.map_memo(a, b, &mut memo)
    }

    pub fn map_by_labels(&self, a: &Label, b: &Label) -> Result<ChainMap> {
        self.map(self.shape.position(a)?, self.shape.position(b)?)
    }

    /// Pullback along a monotone map into this diagram's shape.
    pub fn pullback(&self, f: &MonotoneMap) -> Result<ComplexDiagram> {
        let vertices: Vec<PeriodicComplex> = (0..f.source.len())
            .map(|i| self.vertices[f.apply(i)].clone())
            .collect();
        let mut edges = HashMap::new();
        for (a, b) in f.source.covers() {
            edges.insert((a, b), self.map(f.apply(a), f.apply(b))?);
        }
        ComplexDiagram::with_period(f.source.clone(), vertices, edges, self.period)
    }

    /// Restriction to a full subposet (by shared labels).
    pub fn restrict(&self, sub: &FinitePoset) -> Result<ComplexDiagram> {
        let embed = MonotoneMap::inclusion(sub, &self.shape)?;
        self.pullback(&embed)
    }

    /// Constant diagram.
    pub fn constant(shape: FinitePoset, value: PeriodicComplex) -> Result<ComplexDiagram> {
        let vertices = vec![value.clone(); shape.len()];
        let mut edges = HashMap::new();
        for (a, b) in shape.covers() {
            edges.insert((a, b), ChainMap::identity(&value));
        }
        ComplexDiagram::new(shape, vertices, edges)
    }
}

pub fn chain_maps_equal(a: &ChainMap, b: &ChainMap) -> bool {
    (0..a.source.period()).all(|n| a.block(n) == b.block(n))
}

/// A diagram of presented graded modules with degree-zero presented maps on
/// covers; the coefficient systems of category homology.
#[derive(Clone)]
pub struct ModuleDiagram {
    pub shape: FinitePoset,
    pub period: usize,
    /// per vertex, one presentation per slot
    pub vertices: Vec<Vec<Presentation>>,
    edges: HashMap<(usize, usize), Vec<PresentedMap>>,
}

impl ModuleDiagram {
    pub fn new(
        shape: FinitePoset,
        period: usize,
        vertices: Vec<Vec<Presentation>>,
        cover_edges: HashMap<(usize, usize), Vec<PresentedMap>>,
    ) -> Result<Self> {
        assert_eq!(vertices.len(), shape.len());
        for v in &vertices {
            assert_eq!(v.len(), period);
        }
        for (a, b) in shape.covers() {
            if !cover_edges.contains_key(&(a, b)) {
                return Err(Error::ShapeMismatch(format!(
                    "missing module edge {} -> {}",
                    shape.label(a),
                    shape.label(b)
                )));
            }
        }
        let d = ModuleDiagram {
            shape,
            period,
            vertices,
            edges: cover_edges,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let mut memo: HashMap<(usize, usize), Vec<PresentedMap>> = HashMap::new();
        for &(x, z) in &self.shape.strict_pairs() {
            let canonical = self.map_memo(x, z, &mut memo)?;
            for y in 0..self.shape.len() {
                if self.shape.lt(x, y) && self.shape.lt(y, z) {
                    if let Some(e) = self.edges.get(&(y, z)) {
                        let first = self.map_memo(x, y, &mut memo)?;
                        for n in 0..self.period {
                            let via = first[n].compose(&e[n]);
                            if !via.equals(&canonical[n]) {
                                return Err(Error::ShapeMismatch(format!(
                                    "module square at {} <= {} <= {} does not commute",
                                    self.shape.label(x),
                                    self.shape.label(y),
                                    self.shape.label(z)
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn map_memo(
        &self,
        a: usize,
        b: usize,
        memo: &mut HashMap<(usize, usize), Vec<PresentedMap>>,
    ) -> Result<Vec<PresentedMap>> {
        if a == b {
            return Ok(self.vertices[a].iter().map(PresentedMap::identity).collect());
        }
        if let Some(m) = memo.get(&(a, b)) {
            return Ok(m.clone());
        }
        if let Some(e) = self.edges.get(&(a, b)) {
            return Ok(e.clone());
        }
        for c in 0..self.shape.len() {
            if self.edges.contains_key(&(a, c)) && self.shape.leq(c, b) {
                let first = self.edges[&(a, c)].clone();
                let rest = self.map_memo(c, b, memo)?;
                let m: Vec<PresentedMap> = (0..self.period)
                    .map(|n| first[n].compose(&rest[n]))
                    .collect();
                memo.insert((a, b), m.clone());
                return Ok(m);
            }
        }
        Err(Error::ShapeMismatch(format!(
            "no module path from {} to {}",
            self.shape.label(a),
            self.shape.label(b)
        )))
    }

    pub fn edge(&self, a: usize, b: usize) -> Result<Vec<PresentedMap>> {
        let mut memo = HashMap::new();
        self.map_memo(a, b, &mut memo)
    }

    pub fn pullback(&self, f: &MonotoneMap) -> Result<ModuleDiagram> {
        let vertices: Vec<Vec<Presentation>> = (0..f.source.len())
            .map(|i| self.vertices[f.apply(i)].clone())
            .collect();
        let mut edges = HashMap::new();
        for (a, b) in f.source.covers() {
            edges.insert((a, b), self.edge(f.apply(a), f.apply(b))?);
        }
        ModuleDiagram::new(f.source.clone(), self.period, vertices, edges)
    }

    pub fn restrict(&self, sub: &FinitePoset) -> Result<ModuleDiagram> {
        let embed = MonotoneMap::inclusion(sub, &self.shape)?;
        self.pullback(&embed)
    }
}

/// Slotwise homology of every vertex, with the induced maps on covers.
pub fn homology_diagram(d: &ComplexDiagram) -> Result<ModuleDiagram> {
    let data: Vec<_> = (0..d.shape.len())
        .map(|i| d.vertex(i).homology_data())
        .collect();
    let vertices: Vec<Vec<Presentation>> = data
        .iter()
        .map(|h| h.slots.iter().map(|s| s.presentation()).collect())
        .collect();
    let mut edges = HashMap::new();
    for (a, b) in d.shape.covers() {
        let g = d.map(a, b)?.induced(&data[a], &data[b]);
        edges.insert((a, b), g.comps);
    }
    ModuleDiagram::new(d.shape.clone(), d.period(), vertices, edges)
}
