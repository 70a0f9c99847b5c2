//! The shared tensor-Kan pipeline: external product of two crowned diagrams,
//! its left Kan extension along the projection onto the double crown, and the
//! pullback along the crown inclusion.

use crate::diagramkit::{external_tensor, left_kan, ComplexDiagram, KanExtension};
use crate::posetkit::{inclusion_i, projection_pr, slice_over, FinitePoset, Label, MonotoneMap};
use crate::Result;

use super::crowned::CrownedDiagram;

pub struct TensorKanPipeline {
    pub n: usize,
    pub w: ComplexDiagram,
    pub pr: MonotoneMap,
    pub kan: KanExtension,
    pub ie: CrownedDiagram,
}

impl TensorKanPipeline {
    pub fn build(x: &CrownedDiagram, y: &CrownedDiagram) -> Result<TensorKanPipeline> {
        assert_eq!(x.n, y.n);
        let n = x.n;
        let w = external_tensor(&x.diagram, &y.diagram)?;
        let pr = projection_pr(n)?;
        let kan = left_kan(&pr, &w)?;
        let i = inclusion_i(n)?;
        let ie_diagram = kan.diagram.pullback(&i)?;
        let ie = CrownedDiagram::from_diagram(n, ie_diagram)?;
        Ok(TensorKanPipeline { n, w, pr, kan, ie })
    }

    /// Index of a double-crown element in the Kan target shape.
    pub fn dn_position(&self, l: &Label) -> usize {
        self.kan
            .diagram
            .shape
            .position(l)
            .expect("double crown labels")
    }

    /// The slice `pr/d` with the restricted diagram and its totalization.
    pub fn slice(&self, l: &Label) -> &(FinitePoset, ComplexDiagram, crate::diagramkit::BarComplex) {
        &self.kan.slices[self.dn_position(l)]
    }

    /// Fresh slice data for a double-crown element (poset and restriction
    /// only), for callers that need to re-derive it.
    pub fn slice_poset(&self, l: &Label) -> Result<FinitePoset> {
        Ok(slice_over(&self.pr, l)?.0)
    }
}
