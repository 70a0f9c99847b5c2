//! Finite posets with structured element labels, and monotone maps.

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Element labels carry their provenance: crown-style tags with an index mod
/// N, plain numbered atoms, and pairs for product posets. Slices of products
/// keep the pair structure, which is what lets diagram restrictions find
/// their vertices again.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Beta(usize),
    Gamma(usize),
    Zeta(usize),
    Atom(usize),
    Pair(Box<Label>, Box<Label>),
}

impl Label {
    pub fn pair(a: Label, b: Label) -> Label {
        Label::Pair(Box::new(a), Box::new(b))
    }

    pub fn unpair(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Beta(i) => write!(f, "b{i}"),
            Label::Gamma(i) => write!(f, "g{i}"),
            Label::Zeta(i) => write!(f, "z{i}"),
            Label::Atom(i) => write!(f, "{i}"),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone)]
pub struct FinitePoset {
    elements: Vec<Label>,
    index: HashMap<Label, usize>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Build from elements and a generating relation; the reflexive-transitive
    /// closure is taken, and antisymmetry checked.
    pub fn from_relations(elements: Vec<Label>, relations: &[(Label, Label)]) -> Result<Self> {
        let n = elements.len();
        let mut index = HashMap::new();
        for (k, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), k).is_some() {
                return Err(Error::ShapeMismatch(format!("duplicate element {e}")));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (k, row) in leq.iter_mut().enumerate() {
            row[k] = true;
        }
        for (a, b) in relations {
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownElement(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownElement(b.to_string()))?;
            leq[ia][ib] = true;
        }
        // Floyd-Warshall style transitive closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::ShapeMismatch(format!(
                        "antisymmetry fails between {} and {}",
                        elements[i], elements[j]
                    )));
                }
            }
        }
        Ok(FinitePoset {
            elements,
            index,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Label] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.elements[i]
    }

    pub fn position(&self, l: &Label) -> Result<usize> {
        self.index
            .get(l)
            .copied()
            .ok_or_else(|| Error::UnknownElement(l.to_string()))
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.index.contains_key(l)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn leq_labels(&self, a: &Label, b: &Label) -> Result<bool> {
        Ok(self.leq(self.position(a)?, self.position(b)?))
    }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                let has_mid = (0..n).any(|c| self.lt(a, c) && self.lt(c, b));
                if !has_mid {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// All pairs a < b.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.lt(a, b)).collect()
    }

    /// Full subposet on the listed elements, in the given order.
    pub fn full_subposet(&self, members: &[usize]) -> FinitePoset {
        let elements: Vec<Label> = members.iter().map(|&i| self.elements[i].clone()).collect();
        let mut index = HashMap::new();
        for (k, e) in elements.iter().enumerate() {
            index.insert(e.clone(), k);
        }
        let leq = members
            .iter()
            .map(|&i| members.iter().map(|&j| self.leq[i][j]).collect())
            .collect();
        FinitePoset {
            elements,
            index,
            leq,
        }
    }

    /// Product poset with pair labels and componentwise order.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let mut elements = Vec::with_capacity(self.len() * other.len());
        for a in &self.elements {
            for b in &other.elements {
                elements.push(Label::pair(a.clone(), b.clone()));
            }
        }
        let mut index = HashMap::new();
        for (k, e) in elements.iter().enumerate() {
            index.insert(e.clone(), k);
        }
        let n = self.len();
        let m = other.len();
        let mut leq = vec![vec![false; n * m]; n * m];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        leq[a1 * m + b1][a2 * m + b2] = self.leq(a1, a2) && other.leq(b1, b2);
                    }
                }
            }
        }
        FinitePoset {
            elements,
            index,
            leq,
        }
    }

    /// Length of the longest chain (number of strict steps).
    pub fn height(&self) -> usize {
        let order = self.linear_extension();
        let mut h = vec![0usize; self.len()];
        let mut best = 0;
        for &v in &order {
            for &u in &order {
                if self.lt(u, v) {
                    h[v] = h[v].max(h[u] + 1);
                }
            }
            best = best.max(h[v]);
        }
        best
    }

    /// A linear extension: element indices sorted so smaller elements come
    /// first. Stable and deterministic.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| self.lt(j, i)).count());
        // The count of strict predecessors is monotone along <, so this sort
        // produces a valid linear extension.
        order
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "FinitePoset[{}]", labels.join(", "))
    }
}

#[derive(Clone)]
pub struct MonotoneMap {
    pub source: FinitePoset,
    pub target: FinitePoset,
    assignment: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: FinitePoset, target: FinitePoset, assignment: Vec<usize>) -> Result<Self> {
        assert_eq!(assignment.len(), source.len());
        for a in 0..source.len() {
            for b in 0..source.len() {
                if source.leq(a, b) && !target.leq(assignment[a], assignment[b]) {
                    return Err(Error::ShapeMismatch(format!(
                        "map is not monotone: {} <= {} but images are incomparable",
                        source.label(a),
                        source.label(b)
                    )));
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            assignment,
        })
    }

    pub fn from_labels(
        source: FinitePoset,
        target: FinitePoset,
        f: impl Fn(&Label) -> Label,
    ) -> Result<Self> {
        let assignment = source
            .elements()
            .iter()
            .map(|l| target.position(&f(l)))
            .collect::<Result<Vec<_>>>()?;
        MonotoneMap::new(source, target, assignment)
    }

    pub fn identity(p: &FinitePoset) -> Self {
        MonotoneMap {
            source: p.clone(),
            target: p.clone(),
            assignment: (0..p.len()).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    pub fn apply_label(&self, l: &Label) -> Result<&Label> {
        Ok(self.target.label(self.assignment[self.source.position(l)?]))
    }

    pub fn compose(&self, then: &MonotoneMap) -> MonotoneMap {
        MonotoneMap {
            source: self.source.clone(),
            target: then.target.clone(),
            assignment: self.assignment.iter().map(|&i| then.assignment[i]).collect(),
        }
    }

    /// Inclusion of a subposet whose labels all appear in the target.
    pub fn inclusion(sub: &FinitePoset, ambient: &FinitePoset) -> Result<Self> {
        let assignment = sub
            .elements()
            .iter()
            .map(|l| ambient.position(l))
            .collect::<Result<Vec<_>>>()?;
        MonotoneMap::new(sub.clone(), ambient.clone(), assignment)
    }
}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonotoneMap(")?;
        for (i, l) in self.source.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}->{}", self.target.label(self.assignment[i]))?;
        }
        write!(f, ")")
    }
}
