//! Property tests for the exact linear algebra and the complex operations.

use proptest::prelude::*;

use percrown::exactlin::{
    cokernel, image_basis, kernel_basis, snf, subquotient_group, FgAbelianGroup, Int, IntMatrix,
};
use percrown::percomplex::{cone, tensor, ChainMap, PeriodicComplex};
use percrown::verify::{generate_chain_map, generate_twisted, SplitMix64};

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |entries| {
            IntMatrix::from_fn(r, c, |i, j| Int::from(entries[i * c + j]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn snf_reproduces_diagonal(a in small_matrix()) {
        let s = snf(&a);
        let prod = s.u.mul(&a).mul(&s.v);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let expect = if i == j { s.d[i].clone() } else { Int::ZERO };
                prop_assert_eq!(&prod[(i, j)], &expect);
            }
        }
        for i in 0..s.rank.saturating_sub(1) {
            prop_assert!(s.d[i].divides(&s.d[i + 1]));
        }
        // transforms are unimodular
        percrown::exactlin::invert_unimodular(&s.u);
        percrown::exactlin::invert_unimodular(&s.v);
    }

    #[test]
    fn kernel_and_image_ranks_add_up(a in small_matrix()) {
        let k = kernel_basis(&a);
        let im = image_basis(&a);
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.cols() + im.cols(), a.cols());
    }

    #[test]
    fn cokernel_invariant_under_unimodular_ops(a in small_matrix(), r1 in 0usize..6, r2 in 0usize..6, q in -3i64..=3) {
        let mut b = a.clone();
        let (r1, r2) = (r1 % a.rows(), r2 % a.rows());
        if r1 != r2 {
            b.row_sub_mul(r1, r2, &Int::from(q));
        }
        let mut c = a.clone();
        let (c1, c2) = (r1 % a.cols(), r2 % a.cols());
        if c1 != c2 {
            c.col_sub_mul(c1, c2, &Int::from(q));
        }
        prop_assert_eq!(cokernel(&b), cokernel(&a));
        prop_assert_eq!(cokernel(&c), cokernel(&a));
    }

    #[test]
    fn subquotient_of_scaled_kernel(rank in 1usize..4, d in 2i64..7, seed in 0u64..500) {
        // any basis K and scalar d: (span K)/(span dK) = (Z/d)^rank
        let mut rng = SplitMix64::new(seed);
        let ambient = rank + rng.below(3);
        let k = percrown::verify::generate_injective_matrix(&mut rng, ambient, rank, 5);
        let dk = k.scale(&Int::from(d));
        let g = subquotient_group(&k, &dk).unwrap();
        let expect = (0..rank).fold(FgAbelianGroup::trivial(), |acc, _| {
            acc.direct_sum(&FgAbelianGroup::cyclic(d))
        });
        prop_assert_eq!(g, expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tensor_unital_and_associative_on_homology(seed in 0u64..10_000, period in 2usize..=4) {
        let mut rng = SplitMix64::new(seed);
        let x = generate_twisted(&mut rng, period, 2, 4);
        let y = generate_twisted(&mut rng, period, 2, 4);
        let z = generate_twisted(&mut rng, period, 2, 4);

        // unit law: on the nose for even periods, the doubled copy for odd
        let u = PeriodicComplex::unit(period);
        let xu = tensor(&x, &u).unwrap();
        if period % 2 == 0 {
            prop_assert_eq!(xu, x.clone());
        } else {
            prop_assert_eq!(xu, x.widen(2));
        }

        // associativity up to isomorphism of homology; odd periods double, so
        // widen the third factor to the tensor period first
        let xy = tensor(&x, &y).unwrap();
        let yz = tensor(&y, &z).unwrap();
        let factor = xy.period() / period;
        let lhs = tensor(&xy, &z.widen(factor)).unwrap().homology();
        let rhs = tensor(&x.widen(factor), &yz).unwrap().homology();
        prop_assert!(lhs.is_isomorphic(&rhs));

        // commutativity on homology
        let yx = tensor(&y, &x).unwrap();
        prop_assert!(xy.homology().is_isomorphic(&yx.homology()));
    }

    #[test]
    fn shift_conventions(seed in 0u64..10_000, period in 2usize..=5, k in -3i64..=3) {
        let mut rng = SplitMix64::new(seed);
        let x = generate_twisted(&mut rng, period, 3, 5);
        prop_assert_eq!(x.shift(k).shift(-k), x.clone());
        // shifting by the period fixes slots and flips the differential sign
        // for odd periods; homology is invariant either way
        let full = x.shift(period as i64);
        prop_assert_eq!(full.ranks(), x.ranks());
        prop_assert_eq!(full.homology(), x.homology());
        if period % 2 == 0 {
            prop_assert_eq!(full, x.clone());
        }
        prop_assert_eq!(x.shift(k).homology(), x.homology().shift(k));
    }

    #[test]
    fn cone_long_exact_sequence(seed in 0u64..10_000, period in 2usize..=4) {
        let mut rng = SplitMix64::new(seed);
        let x = generate_twisted(&mut rng, period, 2, 4);
        let y = generate_twisted(&mut rng, period, 2, 4);
        let f = generate_chain_map(&mut rng, &x, &y, 3).unwrap();
        let c = cone(&f);

        let hx = x.homology_data();
        let hy = y.homology_data();
        let hc = c.complex.homology_data();
        let sx = x.shift(1);
        let hsx = sx.homology_data();
        let sy = y.shift(1);
        let hsy = sy.homology_data();

        let f_star = f.induced(&hx, &hy);
        let incl_star = c.incl.induced(&hy, &hc);
        let bdry_star = c.bdry.induced(&hc, &hsx);
        let sf_star = f.shift(1).induced(&hsx, &hsy);

        prop_assert!(f_star.exact_with(&incl_star), "exactness at H(Y)");
        prop_assert!(incl_star.exact_with(&bdry_star), "exactness at H(cone)");
        prop_assert!(bdry_star.exact_with(&sf_star), "exactness at H(X)[1]");
    }

    #[test]
    fn hocolim_h0_is_strict_colimit(seed in 0u64..10_000, period in 2usize..=4) {
        let mut rng = SplitMix64::new(seed);
        let m = generate_twisted(&mut rng, period, 2, 4);
        let x = percrown::franke::q_inverse(&m).unwrap();
        let hd = percrown::diagramkit::homology_diagram(&x.diagram).unwrap();
        let h = percrown::diagramkit::category_homology(&hd).unwrap();
        let colim = percrown::diagramkit::colimit_modules(&hd).unwrap();
        prop_assert!(h[0].is_isomorphic(&colim));
    }
}

/// Moore complexes tensor as the intro example predicts, for every period.
#[test]
fn moore_tensor_pattern() {
    for period in 2..=5usize {
        let m = PeriodicComplex::moore(period, 3);
        let t = tensor(&m, &m).unwrap();
        let h = t.homology().try_fold(period).unwrap();
        assert_eq!(h.slots[0], FgAbelianGroup::cyclic(3), "period {period}");
        assert_eq!(h.slots[1], FgAbelianGroup::cyclic(3), "period {period}");
        for s in 2..period {
            assert!(h.slots[s].is_trivial(), "period {period} slot {s}");
        }
    }
}

/// The null homotopy returned by the cone construction satisfies
/// dh + hd = incl o f for random maps.
#[test]
fn cone_homotopy_identity() {
    let mut rng = SplitMix64::new(4242);
    for _ in 0..20 {
        let x = generate_twisted(&mut rng, 3, 2, 4);
        let y = generate_twisted(&mut rng, 3, 2, 4);
        let f = generate_chain_map(&mut rng, &x, &y, 3).unwrap();
        let c = cone(&f);
        let p = x.period();
        for n in 0..p {
            let lhs = c
                .complex
                .differential((n + 1) % p)
                .mul(&c.homotopy[n])
                .add(&c.homotopy[(n + p - 1) % p].mul(x.differential(n)));
            let rhs = c.incl.block(n).mul(f.block(n));
            assert_eq!(lhs, rhs);
        }
    }
}

/// Composite maps of a crown square commute exactly, and a broken square is
/// rejected at construction.
#[test]
fn diagram_validation_rejects_broken_squares() {
    use std::collections::HashMap;
    let z = PeriodicComplex::concentrated_free(2, 0, 1);
    let sq = percrown::posetkit::square();
    let times = |m: i64| {
        ChainMap::new(
            z.clone(),
            z.clone(),
            vec![
                IntMatrix::from_rows_i64(&[&[m]]),
                IntMatrix::zero(0, 0),
            ],
        )
        .unwrap()
    };
    let mut edges = HashMap::new();
    let covers = sq.covers();
    // product order: (0,0) -> (0,1) -> (1,1) and (0,0) -> (1,0) -> (1,1)
    for &(a, b) in &covers {
        edges.insert((a, b), times(2));
    }
    assert!(percrown::diagramkit::ComplexDiagram::new(
        sq.clone(),
        vec![z.clone(); 4],
        edges.clone()
    )
    .is_ok());
    // break one leg: 2 * 2 != 2 * 3
    let (a, b) = covers[0];
    edges.insert((a, b), times(3));
    assert!(percrown::diagramkit::ComplexDiagram::new(sq, vec![z.clone(); 4], edges).is_err());
}
