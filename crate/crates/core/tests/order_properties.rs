//! Structural invariants of graduated orders over random standard forms.

use gradord_core::order::sample::{
    random_composition, random_dvr_order, random_dvr_order_on, random_monomial_matrix, random_monomial_order,
    random_monomial_order_on, DvrParams,
};
use gradord_core::order::{intersect_orders, is_extremal, radically_covers, trace_dual_oracle};
use gradord_core::{Backend, BlockSizes, FracIdeal, GraduatedOrder, IdealMatrix, Monomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn any_order(seed: u64) -> GraduatedOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed % 2 == 0 {
        random_dvr_order(&mut rng, DvrParams { conjugate: seed % 4 == 0, ..Default::default() })
    } else {
        random_monomial_order(&mut rng, 4, 3, seed % 3 == 0)
    }
}

fn dual(d: &FracIdeal, m: &IdealMatrix) -> IdealMatrix {
    IdealMatrix::from_fn(m.size(), |i, j| d.product(&m.get(j, i).inverse().unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn radical_is_a_proper_two_sided_ideal(seed in any::<u64>()) {
        let o = any_order(seed);
        let jac = o.jacobson_radical();
        prop_assert!(o.is_fractional_ideal_matrix(&jac).unwrap());
        prop_assert!(o.ideals().contains(&jac).unwrap());
        prop_assert_ne!(&jac, o.ideals());
        prop_assert!(jac.contains(&jac.product(&jac).unwrap()).unwrap());
        prop_assert_eq!(o.radical_quotient().len(), o.block_count());
    }

    #[test]
    fn trace_test_matches_the_formula(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let o = random_dvr_order(&mut rng, DvrParams::default());
        prop_assert_eq!(trace_dual_oracle(&o, 12).unwrap(), o.inverse_different().unwrap());
    }

    #[test]
    fn duality_is_an_involution(seed in any::<u64>()) {
        let o = any_order(seed);
        if let Ok(d) = o.inverse_different() {
            prop_assert_eq!(&dual(o.d_omega(), &d), o.ideals());
        }
    }

    #[test]
    fn intersection_is_membership_conjunction(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let backend = if seed % 2 == 0 { Backend::Dvr } else { Backend::Monomial2D };
        let n = 1 + (seed % 4) as usize;
        let (ba, bb) = (random_composition(&mut rng, n), random_composition(&mut rng, n));
        let (a, b) = match backend {
            Backend::Dvr => (
                random_dvr_order_on(&mut rng, ba, 3, 0),
                random_dvr_order_on(&mut rng, bb, 3, 0),
            ),
            Backend::Monomial2D => (
                random_monomial_order_on(&mut rng, ba, 2, true),
                random_monomial_order_on(&mut rng, bb, 2, false),
            ),
        };
        let meet = intersect_orders(&a, &b).unwrap();
        for _ in 0..40 {
            let x = random_monomial_matrix(&mut rng, n, backend, 3);
            let both = a.contains_matrix(&x).unwrap() && b.contains_matrix(&x).unwrap();
            prop_assert_eq!(meet.contains_matrix(&x).unwrap(), both);
        }
    }

    #[test]
    fn principalization_is_a_contained_standard_form(seed in any::<u64>()) {
        let o = any_order(seed);
        let p = o.principalize().unwrap();
        prop_assert_eq!(p.blocks(), o.blocks());
        prop_assert!(o.ideals().contains(p.ideals()).unwrap());
        for i in 0..p.block_count() {
            for j in 0..p.block_count() {
                prop_assert!(p.entry(i, j).is_invertible());
            }
        }
    }

    #[test]
    fn conjugate_intersection_identity(a in 0i64..4, b in 0i64..4) {
        prop_assume!(a + b > 0);
        let d = FracIdeal::principal(Backend::Monomial2D, Monomial::new(a, b));
        let omega = FracIdeal::unit(Backend::Monomial2D);
        let conj = IdealMatrix::new(vec![
            vec![omega.clone(), d.clone()],
            vec![d.inverse().unwrap(), omega.clone()],
        ]).unwrap();
        let full = IdealMatrix::from_fn(2, |_, _| omega.clone());
        let meet = conj.intersect(&full).unwrap();
        let expected = IdealMatrix::new(vec![vec![omega.clone(), d], vec![omega.clone(), omega.clone()]]).unwrap();
        prop_assert_eq!(&meet, &expected);
        prop_assert!(GraduatedOrder::new(BlockSizes::ones(2), meet, omega).is_ok());
    }
}

fn permutations(t: usize) -> Vec<Vec<usize>> {
    if t == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(t - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, t - 1);
            out.push(p);
        }
    }
    out
}

#[test]
fn permuted_staircases_are_extremal_and_self_covering() {
    for t in 1..=4 {
        for perm in permutations(t) {
            for backend in [Backend::Dvr, Backend::Monomial2D] {
                let o = GraduatedOrder::permuted_staircase(&perm, backend, FracIdeal::unit(backend)).unwrap();
                assert!(is_extremal(&o), "{perm:?}");
                assert!(radically_covers(&o, &o).unwrap());
                assert_eq!(o.hereditary_obstruction(), backend == Backend::Monomial2D);
            }
        }
    }
}

/// Hull by direct enumeration on singleton blocks: every rank assignment
/// gives an extremal overorder (unit where `rank[i] >= rank[j]`); keep those
/// radically covering the input and intersect their exponent matrices.
fn hull_exponents(e: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let t = e.len();
    let mut hull: Option<Vec<Vec<i64>>> = None;
    let mut rank = vec![0usize; t];
    loop {
        let cover: Vec<Vec<i64>> = (0..t).map(|i| (0..t).map(|j| (rank[i] < rank[j]) as i64).collect()).collect();
        let covers = (0..t).all(|i| {
            (0..t).all(|j| {
                let jac_cover = if rank[i] == rank[j] { 1 } else { cover[i][j] };
                let jac_input = if i == j { 1 } else { e[i][j] };
                cover[i][j] <= e[i][j] && jac_cover <= jac_input
            })
        });
        if covers {
            hull = Some(match hull {
                None => cover,
                Some(h) => (0..t).map(|i| (0..t).map(|j| h[i][j].max(cover[i][j])).collect()).collect(),
            });
        }
        let Some(k) = (0..t).find(|&k| rank[k] + 1 < t) else { break };
        rank[k] += 1;
        for r in &mut rank[..k] {
            *r = 0;
        }
    }
    hull.expect("the maximal order covers everything")
}

#[test]
fn hull_matches_direct_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 0..600 {
        let t = 2 + n % 3;
        let e = gradord_core::order::sample::random_dvr_exponents(&mut rng, t, 3);
        let o = GraduatedOrder::new(
            BlockSizes::ones(t),
            IdealMatrix::from_fn(t, |i, j| FracIdeal::dvr(e[i][j])),
            FracIdeal::dvr(0),
        )
        .unwrap();
        let hull = gradord_core::order::graduated_hull(&o).unwrap();
        let h = hull_exponents(&e);
        let expected = IdealMatrix::from_fn(t, |i, j| FracIdeal::dvr(h[i][j]));
        assert_eq!(hull.refined_ideals(&BlockSizes::ones(t)), expected, "{e:?}");
        assert!(radically_covers(&hull, &o).unwrap());
    }
}
