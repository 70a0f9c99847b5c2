//! Nondegenerate chains of a finite poset, in deterministic order.

use super::poset::FinitePoset;

/// All strictly increasing `(p+1)`-tuples, lexicographically ordered by
/// element index.
pub fn nondegenerate_chains(poset: &FinitePoset, p: usize) -> Vec<Vec<usize>> {
    let n = poset.len();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(p + 1);
    fn extend(
        poset: &FinitePoset,
        n: usize,
        p: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == p + 1 {
            out.push(stack.clone());
            return;
        }
        for next in 0..n {
            if let Some(&last) = stack.last() {
                if !poset.lt(last, next) {
                    continue;
                }
            }
            stack.push(next);
            extend(poset, n, p, stack, out);
            stack.pop();
        }
    }
    extend(poset, n, p, &mut stack, &mut out);
    out
}

/// All nondegenerate chains of every length, grouped by length.
pub fn all_chains(poset: &FinitePoset) -> Vec<Vec<Vec<usize>>> {
    (0..=poset.height())
        .map(|p| nondegenerate_chains(poset, p))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::catalogue::{crown, double_crown, interval};
    use super::*;

    #[test]
    fn interval_chains() {
        let i = interval();
        assert_eq!(nondegenerate_chains(&i, 0).len(), 2);
        assert_eq!(nondegenerate_chains(&i, 1), vec![vec![0, 1]]);
        assert!(nondegenerate_chains(&i, 2).is_empty());
    }

    #[test]
    fn crown_chains() {
        let c = crown(2).unwrap();
        assert_eq!(nondegenerate_chains(&c, 1).len(), 4);
        assert!(nondegenerate_chains(&c, 2).is_empty());
    }

    #[test]
    fn double_crown_two_chains() {
        let d = double_crown(2).unwrap();
        // chains b <= g <= z: each of the 2 bottoms reaches 2 gammas, each
        // gamma reaches 2 zetas
        assert_eq!(nondegenerate_chains(&d, 2).len(), 8);
    }
}
