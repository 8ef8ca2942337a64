use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_traits::{One, Zero};
use tps_core::classify::{classify, closed_monotone_pairs, is_closed_preorder};
use tps_core::function::{combine_alpha, is_continuous, is_isotone, is_utility, MonotoneFn};
use tps_core::generate::{random_closed_space, random_coherent_sets, random_exhaustion, random_space, random_subset};
use tps_core::quotient::{check_flag_equivalences, check_quotient_closed, quotient_space};
use tps_core::separation::{
    check_extension_condition, extend_isotone, extend_with_pinning, from_subspace, perfectly_separate, separate,
    threshold_separator, to_subspace, urysohn,
};
use tps_core::stream::{
    limit_family, limit_open_check, stream_extend, stream_separate, validate_exhaustion, Exhaustion,
};
use tps_core::utility::{utility_representation, verify_representation, Mode};
use tps_core::{Direction, Error, PointSet, PreorderedSpace, Rational};
use tps_oracles as oracle;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn space(seed: u64, n: usize, closed: bool) -> PreorderedSpace {
    let mut r = rng(seed);
    if closed {
        random_closed_space(&mut r, n)
    } else {
        random_space(&mut r, n)
    }
}

fn pick_pair(ps: &PreorderedSpace, k: usize) -> (PointSet, PointSet) {
    let pairs = closed_monotone_pairs(ps);
    pairs[k % pairs.len()]
}

/// A continuous isotone function on the subspace `s`, in subspace indexing.
fn function_on(r: &mut ChaCha8Rng, ps: &PreorderedSpace, s: PointSet) -> MonotoneFn {
    if s.is_empty() {
        return MonotoneFn::new(vec![]).unwrap();
    }
    let sub = ps.subspace(s).unwrap();
    oracle::random_continuous_isotone(r, &sub, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn urysohn_pins_and_is_continuous_isotone(seed in any::<u64>(), n in 1usize..=6, k in any::<usize>()) {
        let ps = space(seed, n, seed % 3 != 0);
        let (a, b) = pick_pair(&ps, k);
        match urysohn(&ps, a, b, None) {
            Ok(f) => {
                prop_assert!(is_continuous(&ps, &f) && is_isotone(&ps, &f));
                prop_assert!(a.is_subset(&f.zero_set()));
                prop_assert!(b.is_subset(&f.one_set()));
                prop_assert!(threshold_separator(&f).separates(&ps, a, b));
            }
            Err(Error::NotSeparable(_)) => prop_assert!(!oracle::separable(&ps, a, b)),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn extension_condition_matches_oracle(seed in any::<u64>(), n in 1usize..=5) {
        let ps = space(seed, n, seed % 2 == 0);
        let mut r = rng(seed ^ 0xe7);
        let s = random_subset(&mut r, n, 0.5);
        prop_assume!(!s.is_empty());
        let f = function_on(&mut r, &ps, s);
        let exists = oracle::extension_exists(&ps, s, &f);
        let condition = check_extension_condition(&ps, s, &f).unwrap();
        prop_assert!(condition || !exists);
        if classify(&ps).normal {
            prop_assert!(condition == exists);
        }
        match extend_isotone(&ps, s, &f) {
            Ok(big) => {
                prop_assert!(exists);
                prop_assert!(is_continuous(&ps, &big) && is_isotone(&ps, &big));
                prop_assert_eq!(big.restrict(s), f);
            }
            Err(Error::ConditionViolated { .. }) => prop_assert!(!exists),
            Err(Error::NotSeparable(_)) => prop_assert!(!classify(&ps).normal),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn pinned_extension_matches_oracle(seed in any::<u64>(), n in 1usize..=5, k in any::<usize>()) {
        let ps = space(seed, n, true);
        let (a, b) = pick_pair(&ps, k);
        let mut r = rng(seed ^ 0x9e);
        let dom = random_subset(&mut r, n, 0.5);
        // Half the time restrict a genuine pinned function, so success is common.
        let f = if r.gen_bool(0.5) {
            urysohn(&ps, a, b, None).unwrap().restrict(dom)
        } else {
            function_on(&mut r, &ps, dom)
        };
        let members: Vec<usize> = dom.iter().collect();
        let pins_ok = members.iter().enumerate().all(|(i, &x)| {
            (!a.contains(x) || f.value(i).is_zero()) && (!b.contains(x) || f.value(i).is_one())
        });
        let result = extend_with_pinning(&ps, dom, &f, a, b);
        if !pins_ok {
            prop_assert!(matches!(result, Err(Error::InvalidInput(_))));
            return Ok(());
        }
        let k_prime = a.union(&dom).union(&b);
        let f_prime = MonotoneFn::new(
            k_prime
                .iter()
                .map(|x| match members.iter().position(|&y| y == x) {
                    Some(i) => f.value(i).clone(),
                    None if a.contains(x) => Rational::zero(),
                    None => Rational::one(),
                })
                .collect(),
        )
        .unwrap();
        let exists = k_prime.is_empty() || oracle::extension_exists(&ps, k_prime, &f_prime);
        match result {
            Ok(big) => {
                prop_assert!(exists);
                prop_assert!(is_continuous(&ps, &big) && is_isotone(&ps, &big));
                prop_assert_eq!(big.restrict(dom), f);
                prop_assert!(a.is_subset(&big.zero_set()) && b.is_subset(&big.one_set()));
            }
            Err(Error::InvalidInput(_)) | Err(Error::ConditionViolated { .. }) => prop_assert!(!exists),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn perfect_separation_matches_oracle(seed in any::<u64>(), n in 1usize..=5, k in any::<usize>()) {
        let ps = space(seed, n, seed % 3 != 0);
        let (a, b) = pick_pair(&ps, k);
        match perfectly_separate(&ps, a, b) {
            Ok(f) => {
                prop_assert!(is_continuous(&ps, &f) && is_isotone(&ps, &f));
                prop_assert_eq!(f.zero_set(), a);
                prop_assert_eq!(f.one_set(), b);
            }
            Err(Error::NotSeparable(_)) => prop_assert!(!oracle::perfect_separation_exists(&ps, a, b)),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn combine_alpha_level_sets(seed in any::<u64>(), n in 1usize..=6, k in any::<usize>(), j in any::<usize>()) {
        let ps = space(seed, n, true);
        let (a, b) = pick_pair(&ps, k);
        let (c, d) = pick_pair(&ps, j);
        let g = urysohn(&ps, a, b, None).unwrap();
        let h = urysohn(&ps, c, d, None).unwrap();
        match combine_alpha(&ps, &g, &h) {
            Ok(f) => {
                prop_assert_eq!(f.zero_set(), g.zero_set());
                prop_assert_eq!(f.one_set(), h.one_set());
                prop_assert!(is_continuous(&ps, &f) && is_isotone(&ps, &f));
            }
            Err(_) => prop_assert!(g.zero_set().intersects(&h.one_set())),
        }
    }

    #[test]
    fn utility_pipeline_on_closed_spaces(seed in any::<u64>(), n in 1usize..=6) {
        let ps = space(seed, n, true);
        let family = utility_representation(&ps).unwrap();
        prop_assert!(verify_representation(&ps, &family, Mode::Represent));
        for f in &family {
            prop_assert!(is_utility(&ps, f));
        }
    }

    #[test]
    fn utilities_need_regularity(seed in any::<u64>(), n in 1usize..=6) {
        let ps = space(seed, n, false);
        let regular = classify(&ps).regular;
        match utility_representation(&ps) {
            Ok(family) => {
                prop_assert!(regular);
                prop_assert!(verify_representation(&ps, &family, Mode::Utility));
            }
            Err(Error::NotApplicable(_)) => prop_assert!(!regular),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn quotient_flags_match_oracle(seed in any::<u64>(), n in 1usize..=6) {
        let ps = space(seed, n, seed % 2 == 0);
        let report = check_flag_equivalences(&ps).unwrap();
        prop_assert!(report.holds());
        let q = quotient_space(&ps).unwrap().space;
        prop_assert!(q.order().is_antisymmetric());
        prop_assert_eq!(oracle::semiclosed(&q), oracle::semiclosed(&ps));
        prop_assert_eq!(oracle::regular(&q), oracle::regular(&ps));
        prop_assert_eq!(oracle::normal(&q), oracle::normal(&ps));
        if is_closed_preorder(&ps) {
            prop_assert!(check_quotient_closed(&ps).unwrap().closed_ordered());
        }
    }
}

fn exhaustion(seed: u64) -> Exhaustion {
    random_exhaustion(&mut rng(seed), 10, 8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn stream_traces_hold_their_invariants(seed in any::<u64>()) {
        let exh = exhaustion(seed);
        prop_assert_eq!(validate_exhaustion(&exh), None);
        let mut r = rng(seed ^ 0x57);
        let a = random_coherent_sets(&mut r, &exh, Direction::Decreasing, PointSet::EMPTY);
        let b = random_coherent_sets(&mut r, &exh, Direction::Increasing, *a.last().unwrap());
        let trace = stream_separate(&exh, &a, &b).unwrap();
        prop_assert_eq!(trace.steps.len(), exh.len());
        prop_assert_eq!(trace.first_violation(&exh), None);
        let last = trace.steps.last().unwrap();
        prop_assert!(a.last().unwrap().is_subset(&last.u) && b.last().unwrap().is_subset(&last.v));
        prop_assert!(last.u.is_disjoint(&last.v));
        let lu = limit_family(&exh, &trace.us());
        let lv = limit_family(&exh, &trace.vs());
        prop_assert!(limit_open_check(&exh, &lu).unwrap());
        prop_assert!(limit_open_check(&exh, &lv).unwrap());
        for (j, k) in exh.pieces.iter().enumerate() {
            prop_assert!(k.is_monotone(lu[j], Direction::Decreasing) && k.is_monotone(lv[j], Direction::Increasing));
            prop_assert!(lu[j].is_disjoint(&lv[j]));
        }
    }

    #[test]
    fn stream_extension_thresholds_to_a_separator(seed in any::<u64>()) {
        let exh = exhaustion(seed);
        let mut r = rng(seed ^ 0x3d);
        let d = random_coherent_sets(&mut r, &exh, Direction::Decreasing, PointSet::EMPTY);
        let i = random_coherent_sets(&mut r, &exh, Direction::Increasing, *d.last().unwrap());
        let k0 = &exh.pieces[0];
        let f = urysohn(k0, d[0], i[0], None).unwrap();
        let levels = stream_extend(&exh, &f, &d, &i).unwrap();
        prop_assert_eq!(&levels[0], &f);
        for (j, (level, k)) in levels.iter().zip(&exh.pieces).enumerate() {
            prop_assert!(is_continuous(k, level) && is_isotone(k, level));
            prop_assert!(d[j].is_subset(&level.zero_set()) && i[j].is_subset(&level.one_set()));
            if j + 1 < levels.len() {
                let inc = &exh.inclusions[j];
                prop_assert!((0..k.len()).all(|x| level.value(x) == levels[j + 1].value(inc[x])));
            }
        }
        let last = exh.len() - 1;
        prop_assert!(threshold_separator(&levels[last]).separates(&exh.pieces[last], d[last], i[last]));
    }

    #[test]
    fn one_piece_stream_agrees_with_separate(seed in any::<u64>(), n in 1usize..=6, k in any::<usize>()) {
        let ps = space(seed, n, true);
        let (a, b) = pick_pair(&ps, k);
        let exh = Exhaustion::new(vec![ps.clone()], vec![]);
        let trace = stream_separate(&exh, &[a], &[b]);
        prop_assert_eq!(trace.is_ok(), separate(&ps, a, b).is_ok());
    }

    #[test]
    fn subspace_reindexing_round_trips(bits in any::<u64>(), s_bits in any::<u64>()) {
        let s = PointSet::from_bits(s_bits & 0xffff);
        let set = PointSet::from_bits(bits).intersection(&s);
        prop_assert_eq!(from_subspace(to_subspace(set, s), s), set);
    }
}
