//! The index posets of the reconstruction machinery: the interval, the
//! pushout corner, the square, the crown C_N, the double crown D_N, the
//! projection and inclusion functors between them, their slice categories,
//! and the comparison subposet J_n with its retraction.

use super::poset::{FinitePoset, Label, MonotoneMap};
use crate::{Error, Result};

/// The poset `0 <= 1`.
pub fn interval() -> FinitePoset {
    FinitePoset::from_relations(
        vec![Label::Atom(0), Label::Atom(1)],
        &[(Label::Atom(0), Label::Atom(1))],
    )
    .expect("interval is a poset")
}

/// The pushout corner: `(0,1) <- (0,0) -> (1,0)`.
pub fn corner() -> FinitePoset {
    let oo = Label::pair(Label::Atom(0), Label::Atom(0));
    let io = Label::pair(Label::Atom(1), Label::Atom(0));
    let oi = Label::pair(Label::Atom(0), Label::Atom(1));
    FinitePoset::from_relations(
        vec![oo.clone(), io.clone(), oi.clone()],
        &[(oo.clone(), io), (oo, oi)],
    )
    .expect("corner is a poset")
}

/// The square `[1] x [1]`.
pub fn square() -> FinitePoset {
    interval().product(&interval())
}

fn check_period(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidPeriod(n));
    }
    Ok(())
}

/// The crown C_N: bottoms `b_i` under tops `z_i` and `z_{i+1}`, cyclically.
pub fn crown(n: usize) -> Result<FinitePoset> {
    check_period(n)?;
    let mut elements = Vec::new();
    for i in 0..n {
        elements.push(Label::Beta(i));
    }
    for i in 0..n {
        elements.push(Label::Zeta(i));
    }
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push((Label::Beta(i), Label::Zeta(i)));
        rels.push((Label::Beta(i), Label::Zeta((i + 1) % n)));
    }
    FinitePoset::from_relations(elements, &rels)
}

/// The double crown D_N: `b_i <= g_i <= z_i` with the cyclic knight moves
/// `b_i <= g_{i+1}` and `g_i <= z_{i+1}`.
pub fn double_crown(n: usize) -> Result<FinitePoset> {
    check_period(n)?;
    let mut elements = Vec::new();
    for i in 0..n {
        elements.push(Label::Beta(i));
    }
    for i in 0..n {
        elements.push(Label::Gamma(i));
    }
    for i in 0..n {
        elements.push(Label::Zeta(i));
    }
    let mut rels = Vec::new();
    for i in 0..n {
        rels.push((Label::Beta(i), Label::Gamma(i)));
        rels.push((Label::Beta(i), Label::Gamma((i + 1) % n)));
        rels.push((Label::Gamma(i), Label::Zeta(i)));
        rels.push((Label::Gamma(i), Label::Zeta((i + 1) % n)));
    }
    FinitePoset::from_relations(elements, &rels)
}

/// The projection `pr: C_N x C_N -> D_N` collapsing by index sum:
/// `(b_i, b_j) -> b_{i+j}`, `(z_i, z_j) -> z_{i+j}`, mixed pairs to
/// `g_{i+j}`, indices mod N.
pub fn projection_pr(n: usize) -> Result<MonotoneMap> {
    let c = crown(n)?;
    let source = c.product(&c);
    let target = double_crown(n)?;
    MonotoneMap::from_labels(source, target, |l| {
        let (a, b) = l.unpair().expect("product labels are pairs");
        match (a, b) {
            (Label::Beta(i), Label::Beta(j)) => Label::Beta((i + j) % n),
            (Label::Zeta(i), Label::Zeta(j)) => Label::Zeta((i + j) % n),
            (Label::Zeta(i), Label::Beta(j)) | (Label::Beta(i), Label::Zeta(j)) => {
                Label::Gamma((i + j) % n)
            }
            _ => unreachable!("crown labels are beta or zeta"),
        }
    })
}

/// The inclusion `i: C_N -> D_N` with `z_n -> z_n`, `b_n -> g_n`.
pub fn inclusion_i(n: usize) -> Result<MonotoneMap> {
    let source = crown(n)?;
    let target = double_crown(n)?;
    MonotoneMap::from_labels(source, target, |l| match l {
        Label::Beta(i) => Label::Gamma(*i),
        Label::Zeta(i) => Label::Zeta(*i),
        _ => unreachable!("crown labels are beta or zeta"),
    })
}

/// The projection of the square onto the interval sending everything except
/// the terminal corner to 0.
pub fn square_projection() -> MonotoneMap {
    MonotoneMap::from_labels(square(), interval(), |l| {
        let (a, b) = l.unpair().expect("square labels are pairs");
        if *a == Label::Atom(1) && *b == Label::Atom(1) {
            Label::Atom(1)
        } else {
            Label::Atom(0)
        }
    })
    .expect("square projection is monotone")
}

/// Slice `f/d`: the full subposet of the source on `{c : f(c) <= d}`, plus its
/// embedding.
pub fn slice_over(f: &MonotoneMap, d: &Label) -> Result<(FinitePoset, MonotoneMap)> {
    let di = f.target.position(d)?;
    let members: Vec<usize> = (0..f.source.len())
        .filter(|&c| f.target.leq(f.apply(c), di))
        .collect();
    let sub = f.source.full_subposet(&members);
    let embed = MonotoneMap::inclusion(&sub, &f.source)?;
    Ok((sub, embed))
}

/// Coslice `d/f`: the full subposet of the source on `{c : d <= f(c)}`.
pub fn slice_under(f: &MonotoneMap, d: &Label) -> Result<(FinitePoset, MonotoneMap)> {
    let di = f.target.position(d)?;
    let members: Vec<usize> = (0..f.source.len())
        .filter(|&c| f.target.leq(di, f.apply(c)))
        .collect();
    let sub = f.source.full_subposet(&members);
    let embed = MonotoneMap::inclusion(&sub, &f.source)?;
    Ok((sub, embed))
}

/// The comparison subposet `J_n` of `pr/z_n`: tops `(z_i, z_j)` with
/// `i + j = n` and bottoms `(b_a, b_b)` with `a + b = n - 1`, each bottom
/// under the two tops `(z_a, z_{b+1})` and `(z_{a+1}, z_b)`. Returns
/// `(J_n, theta, L)` where `theta` is the inclusion into the slice and `L`
/// the retraction with `L o theta = id` and `c <= theta(L(c))` pointwise.
///
/// For `N >= 3` the retraction is monotone (`theta` is then a right adjoint);
/// for `N = 2` the wrapped slice admits no monotone retraction, so `L` is
/// reported as `None` there.
pub struct ComparisonSubposet {
    pub subposet: FinitePoset,
    pub theta: MonotoneMap,
    pub retraction: Option<MonotoneMap>,
    /// The label-level retraction assignment, defined for every N; satisfies
    /// the pointwise inequalities even when it fails to be monotone.
    pub retraction_assignment: Vec<(Label, Label)>,
}

pub fn subposet_j(n: usize, class: usize) -> Result<ComparisonSubposet> {
    check_period(n)?;
    let pr = projection_pr(n)?;
    let (slice, _embed) = slice_over(&pr, &Label::Zeta(class % n))?;

    let mut elements = Vec::new();
    let mut rels = Vec::new();
    for i in 0..n {
        let j = (class + n - i % n) % n;
        elements.push(Label::pair(Label::Zeta(i), Label::Zeta(j)));
    }
    for a in 0..n {
        let b = (class + n - 1 - a % n) % n;
        let bot = Label::pair(Label::Beta(a), Label::Beta(b));
        rels.push((
            bot.clone(),
            Label::pair(Label::Zeta(a), Label::Zeta((b + 1) % n)),
        ));
        rels.push((
            bot.clone(),
            Label::pair(Label::Zeta((a + 1) % n), Label::Zeta(b)),
        ));
        elements.push(bot);
    }
    let sub = FinitePoset::from_relations(elements, &rels)?;
    let theta = MonotoneMap::inclusion(&sub, &slice)?;

    // Label-level retraction: bottoms of J_n are fixed; everything else goes
    // to the least top above it when one exists, with the slice's own
    // bottom-sum-n elements sent to their "(z_i, z_j)" top.
    let retract_label = |l: &Label| -> Label {
        if sub.contains(l) {
            return l.clone();
        }
        let (a, b) = l.unpair().expect("slice elements are pairs");
        match (a, b) {
            (Label::Zeta(i), Label::Beta(_)) => {
                // least top (z_i, z_d) with i + d = class
                let d = (class + n - i % n) % n;
                Label::pair(Label::Zeta(*i), Label::Zeta(d))
            }
            (Label::Beta(_), Label::Zeta(j)) => {
                let c = (class + n - j % n) % n;
                Label::pair(Label::Zeta(c), Label::Zeta(*j))
            }
            (Label::Beta(i), Label::Beta(j)) => {
                // sums n-1 stay in J_n (handled above); sum = class picks
                // (z_i, z_j); sum = class - 2 picks (z_{i+1}, z_{j+1}).
                if (i + j) % n == class % n {
                    Label::pair(Label::Zeta(*i), Label::Zeta(*j))
                } else {
                    Label::pair(Label::Zeta((i + 1) % n), Label::Zeta((j + 1) % n))
                }
            }
            (Label::Zeta(i), Label::Zeta(j)) => Label::pair(Label::Zeta(*i), Label::Zeta(*j)),
            _ => unreachable!("slice elements pair crown labels"),
        }
    };

    let retraction_assignment: Vec<(Label, Label)> = slice
        .elements()
        .iter()
        .map(|l| (l.clone(), retract_label(l)))
        .collect();

    // Pointwise inequalities c <= theta(L(c)) hold for every N by
    // construction; verify them here.
    for (c, lc) in &retraction_assignment {
        if !slice.leq_labels(c, lc)? {
            return Err(Error::ShapeMismatch(format!(
                "retraction violates c <= theta(L(c)) at {c}"
            )));
        }
        if !sub.contains(lc) {
            return Err(Error::ShapeMismatch(format!(
                "retraction leaves the subposet at {c}"
            )));
        }
    }

    let assignment: Vec<usize> = retraction_assignment
        .iter()
        .map(|(_, lc)| sub.position(lc))
        .collect::<Result<Vec<_>>>()?;
    let retraction = MonotoneMap::new(slice.clone(), sub.clone(), assignment).ok();

    Ok(ComparisonSubposet {
        subposet: sub,
        theta,
        retraction,
        retraction_assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crown_shape() {
        let c = crown(2).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.covers().len(), 4);
        assert!(c.leq_labels(&Label::Beta(0), &Label::Zeta(0)).unwrap());
        assert!(c.leq_labels(&Label::Beta(0), &Label::Zeta(1)).unwrap());
        assert!(c.leq_labels(&Label::Beta(1), &Label::Zeta(1)).unwrap());
        assert!(c.leq_labels(&Label::Beta(1), &Label::Zeta(0)).unwrap());
        assert!(!c.leq_labels(&Label::Beta(0), &Label::Beta(1)).unwrap());

        let c3 = crown(3).unwrap();
        assert_eq!(c3.len(), 6);
        assert_eq!(c3.covers().len(), 6);
        assert!(crown(1).is_err());
    }

    #[test]
    fn double_crown_shape() {
        let d = double_crown(2).unwrap();
        assert_eq!(d.len(), 6);
        assert!(d.leq_labels(&Label::Beta(0), &Label::Gamma(0)).unwrap());
        assert!(d.leq_labels(&Label::Gamma(0), &Label::Zeta(1)).unwrap());
        assert!(d.leq_labels(&Label::Beta(0), &Label::Zeta(0)).unwrap());
    }

    #[test]
    fn projection_clauses() {
        let pr = projection_pr(3).unwrap();
        let l = Label::pair(Label::Beta(1), Label::Beta(1));
        assert_eq!(pr.apply_label(&l).unwrap(), &Label::Beta(2));
        let l = Label::pair(Label::Zeta(2), Label::Beta(2));
        assert_eq!(pr.apply_label(&l).unwrap(), &Label::Gamma(1));
        let pr2 = projection_pr(2).unwrap();
        let l = Label::pair(Label::Zeta(0), Label::Zeta(0));
        assert_eq!(pr2.apply_label(&l).unwrap(), &Label::Zeta(0));
    }

    #[test]
    fn inclusion_clauses() {
        let i = inclusion_i(3).unwrap();
        assert_eq!(i.apply_label(&Label::Beta(0)).unwrap(), &Label::Gamma(0));
        assert_eq!(i.apply_label(&Label::Zeta(1)).unwrap(), &Label::Zeta(1));
    }

    #[test]
    fn beta_slices_are_discrete() {
        for n in 2..=6 {
            let pr = projection_pr(n).unwrap();
            for k in 0..n {
                let (s, _) = slice_over(&pr, &Label::Beta(k)).unwrap();
                assert_eq!(s.len(), n);
                assert!(s.covers().is_empty());
            }
        }
    }

    #[test]
    fn projection_and_inclusion_monotone_all_small_periods() {
        // constructors validate monotonicity; exercise the whole range
        for n in 2..=6 {
            projection_pr(n).unwrap();
            inclusion_i(n).unwrap();
        }
    }

    #[test]
    fn subposet_j_is_the_theta_image_inside_the_slice() {
        for n in 2..=4 {
            let pr = projection_pr(n).unwrap();
            for class in 0..n {
                let j = subposet_j(n, class).unwrap();
                let (slice, _) = slice_over(&pr, &Label::Zeta(class)).unwrap();
                for l in j.subposet.elements() {
                    assert!(slice.contains(l), "{l} missing from the slice");
                }
                // the retraction assignment covers the whole slice and fixes
                // the subposet pointwise
                assert_eq!(j.retraction_assignment.len(), slice.len());
                for (c, lc) in &j.retraction_assignment {
                    if j.subposet.contains(c) {
                        assert_eq!(c, lc);
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_slice_size() {
        for n in [3usize, 4] {
            let pr = projection_pr(n).unwrap();
            let (s, _) = slice_over(&pr, &Label::Gamma(0)).unwrap();
            assert_eq!(s.len(), 4 * n);
            assert_eq!(s.height(), 1);
        }
    }

    #[test]
    fn square_projection_slices() {
        let pr = square_projection();
        let (s0, _) = slice_over(&pr, &Label::Atom(0)).unwrap();
        assert_eq!(s0.len(), 3); // the corner
        assert_eq!(s0.covers().len(), 2);
        let (s1, _) = slice_over(&pr, &Label::Atom(1)).unwrap();
        assert_eq!(s1.len(), 4); // the whole square
    }

    #[test]
    fn coslices_of_inclusion() {
        let i = inclusion_i(3).unwrap();
        let (z, _) = slice_under(&i, &Label::Zeta(0)).unwrap();
        assert_eq!(z.len(), 1);
        let (g, _) = slice_under(&i, &Label::Gamma(0)).unwrap();
        assert_eq!(g.len(), 3); // b_n, z_n, z_{n+1}
        let (b, _) = slice_under(&i, &Label::Beta(0)).unwrap();
        // b_0 <= g_0, g_1 and through them z_0, z_1, z_2 for N >= 3
        assert_eq!(b.len(), 5);
        let i2 = inclusion_i(2).unwrap();
        let (b2, _) = slice_under(&i2, &Label::Beta(0)).unwrap();
        assert_eq!(b2.len(), 4);
    }

    #[test]
    fn comparison_subposet_j() {
        let j = subposet_j(2, 0).unwrap();
        assert_eq!(j.subposet.len(), 4);
        let labels: Vec<String> = j
            .subposet
            .elements()
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert!(labels.contains(&"(z0,z0)".to_string()));
        assert!(labels.contains(&"(z1,z1)".to_string()));
        assert!(labels.contains(&"(b0,b1)".to_string()));
        assert!(labels.contains(&"(b1,b0)".to_string()));
        // N = 2: no monotone retraction exists
        assert!(j.retraction.is_none());

        for n in 3..=5 {
            for k in 0..n {
                let j = subposet_j(n, k).unwrap();
                assert_eq!(j.subposet.len(), 2 * n);
                let l = j.retraction.as_ref().expect("monotone retraction for N >= 3");
                // L o theta = id
                for (idx, lab) in j.subposet.elements().iter().enumerate() {
                    let through = l.apply(j.theta.apply(idx));
                    assert_eq!(j.subposet.label(through), lab);
                }
            }
        }
    }
}
