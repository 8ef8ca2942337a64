use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tps_core::classify::{
    classify, closed_monotone_pairs, is_closed_preorder, is_closed_preorder_via_product, level_sets_feasible,
    ClassifyOptions,
};
use tps_core::function::{alpha, is_continuous, is_continuous_by_components, is_isotone, rational};
use tps_core::generate::{random_closed_space, random_space};
use tps_core::separation::{separate, separate_brute_force, separate_via_regularity};
use tps_core::{diagnose, Direction, PointSet, PreorderedSpace, Rational};
use tps_oracles as oracle;

fn space(seed: u64, n: usize, closed: bool) -> PreorderedSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if closed {
        random_closed_space(&mut rng, n)
    } else {
        random_space(&mut rng, n)
    }
}

fn spaces() -> impl Strategy<Value = PreorderedSpace> {
    (any::<u64>(), 1usize..=5, any::<bool>()).prop_map(|(seed, n, closed)| space(seed, n, closed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn continuity_deciders_agree(seed in any::<u64>(), n in 1usize..=6, closed in any::<bool>()) {
        let ps = space(seed, n, closed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let f = if rng.gen_bool(0.5) {
            oracle::random_continuous_isotone(&mut rng, &ps, 4)
        } else {
            oracle::random_grid_function(&mut rng, n, 4)
        };
        let by_rays = is_continuous(&ps, &f);
        prop_assert_eq!(by_rays, is_continuous_by_components(&ps, &f));
        prop_assert_eq!(by_rays, oracle::continuous(&ps, &f));
        prop_assert_eq!(is_isotone(&ps, &f), oracle::isotone(&ps, &f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn flags_match_brute_force(ps in spaces()) {
        let c = classify(&ps);
        prop_assert!(c.implication_chain_holds());
        prop_assert_eq!(c.semiclosed, oracle::semiclosed(&ps));
        prop_assert_eq!(c.closed, oracle::closed_graph(&ps));
        prop_assert_eq!(c.convex, oracle::convex(&ps));
        prop_assert_eq!(c.regular, oracle::regular(&ps));
        prop_assert_eq!(c.normal, oracle::normal(&ps));
        prop_assert_eq!(c.perfectly_normal, oracle::perfectly_normal(&ps));
        let fast = diagnose(&ps, ClassifyOptions { maximal_pairs: true }).classification();
        prop_assert_eq!(fast, c);
    }

    // The product of a discrete 5-point space already has 2^25 opens.
    #[test]
    fn closed_deciders_agree(seed in any::<u64>(), n in 1usize..=4, closed in any::<bool>()) {
        let ps = space(seed, n, closed);
        prop_assert_eq!(is_closed_preorder(&ps), is_closed_preorder_via_product(&ps).unwrap());
    }

    #[test]
    fn closed_hulls_match_enumeration(ps in spaces(), bits in any::<u64>()) {
        let s = PointSet::from_bits(bits).intersection(&ps.full());
        prop_assert_eq!(ps.closed_inc_hull(s), oracle::closed_increasing_hull(&ps, s));
        prop_assert_eq!(ps.closed_dec_hull(s), oracle::closed_decreasing_hull(&ps, s));
    }

    #[test]
    fn monotone_families_match_enumeration(ps in spaces()) {
        prop_assert_eq!(ps.monotone_closeds(Direction::Decreasing), oracle::closed_decs(&ps));
        prop_assert_eq!(ps.monotone_closeds(Direction::Increasing), oracle::closed_incs(&ps));
        prop_assert_eq!(closed_monotone_pairs(&ps), oracle::closed_monotone_pairs(&ps));
    }

    #[test]
    fn level_set_feasibility_matches_grid(ps in spaces()) {
        for (a, b) in oracle::closed_monotone_pairs(&ps) {
            prop_assert_eq!(level_sets_feasible(&ps, a, b), oracle::perfect_separation_exists(&ps, a, b));
        }
    }

    #[test]
    fn hull_identity_on_closed_spaces(seed in any::<u64>(), n in 1usize..=6) {
        let ps = space(seed, n, true);
        let o = ps.order();
        for bits in 0u64..1 << n {
            let s = PointSet::from_bits(bits);
            prop_assert_eq!(o.down_hull(s), ps.closed_dec_hull(s));
            prop_assert_eq!(o.up_hull(s), ps.closed_inc_hull(s));
        }
    }

    #[test]
    fn closed_spaces_are_normal(seed in any::<u64>(), n in 1usize..=6) {
        let ps = space(seed, n, true);
        prop_assert!(is_closed_preorder(&ps));
        prop_assert!(classify(&ps).normal);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn separators_agree(ps in spaces(), pick in any::<prop::sample::Index>()) {
        let pairs = closed_monotone_pairs(&ps);
        let (a, b) = pairs[pick.index(pairs.len())];
        let separable = oracle::separable(&ps, a, b);
        match separate(&ps, a, b) {
            Ok(pair) => {
                prop_assert!(separable);
                prop_assert!(pair.separates(&ps, a, b));
                prop_assert_eq!(pair, separate_brute_force(&ps, a, b).unwrap());
                prop_assert_eq!(pair.u, ps.open_hull(a, Direction::Decreasing));
                prop_assert_eq!(pair.v, ps.open_hull(b, Direction::Increasing));
            }
            Err(_) => prop_assert!(!separable),
        }
        if classify(&ps).regular {
            prop_assert!(separate_via_regularity(&ps, a, b).unwrap().separates(&ps, a, b));
        }
    }
}

#[test]
fn alpha_is_isotone_on_the_eighth_grid() {
    let grid: Vec<Rational> = (0..=8).map(|k| rational(k, 8)).collect();
    let zero = rational(0, 1);
    let one = rational(1, 1);
    for x in &grid {
        for y in &grid {
            let Ok(v) = alpha(x, y) else {
                assert!(*x == zero && *y == one);
                continue;
            };
            assert!(v >= zero && v <= one);
            assert_eq!(v == zero, *x == zero);
            assert_eq!(v == one, *y == one);
            for x2 in grid.iter().filter(|x2| *x2 >= x) {
                for y2 in grid.iter().filter(|y2| *y2 >= y) {
                    if let Ok(w) = alpha(x2, y2) {
                        assert!(v <= w, "α({x},{y}) = {v} > α({x2},{y2}) = {w}");
                    }
                }
            }
        }
    }
}
