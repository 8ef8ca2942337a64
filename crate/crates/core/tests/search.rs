use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tps_core::classify::{classify, is_closed_preorder, semiclosed_witness, Flag};
use tps_core::enumerate::{all_preorders, canonical_topologies, find_exhaustive, find_random, FlagFilter};
use tps_core::PreorderedSpace;

fn filter(require: &[Flag], forbid: &[Flag]) -> FlagFilter {
    FlagFilter { require: require.to_vec(), forbid: forbid.to_vec() }
}

#[test]
fn closed_but_not_normal_does_not_exist_up_to_five_points() {
    assert_eq!(find_exhaustive(5, &filter(&[Flag::Closed], &[Flag::Normal])).unwrap(), None);
}

// On a finite space a ∈ U_x puts x in cl{a}, so closed hulls d(b) ∋ a and
// i(x) ∋ b absorb x and y: semiclosedness already forces the graph closed.
#[test]
fn semiclosed_but_not_closed_does_not_exist_up_to_six_points() {
    assert_eq!(find_exhaustive(6, &filter(&[Flag::Semiclosed], &[Flag::Closed])).unwrap(), None);
    assert_eq!(find_exhaustive(6, &filter(&[Flag::Semiclosed, Flag::Convex], &[Flag::Closed])).unwrap(), None);
}

#[test]
fn semiclosed_and_closed_agree_on_all_small_spaces() {
    for n in 1..=4 {
        let orders = all_preorders(n);
        for t in canonical_topologies(n) {
            for o in &orders {
                let ps = PreorderedSpace::new(t.clone(), o.clone()).unwrap();
                assert_eq!(semiclosed_witness(&ps).is_none(), is_closed_preorder(&ps));
            }
        }
    }
}

#[test]
fn exhaustive_finds_are_minimal_and_correct() {
    let cases: [(&[Flag], &[Flag]); 4] = [
        (&[], &[Flag::Semiclosed]),
        (&[Flag::Normal], &[Flag::PerfectlyNormal]),
        (&[Flag::Convex], &[Flag::Normal]),
        (&[Flag::Closed], &[Flag::Convex]),
    ];
    for (require, forbid) in cases {
        let f = filter(require, forbid);
        if let Some(ps) = find_exhaustive(4, &f).unwrap() {
            let c = classify(&ps);
            assert!(require.iter().all(|&g| c.get(g)));
            assert!(forbid.iter().all(|&g| !c.get(g)));
            if ps.len() > 1 {
                assert_eq!(find_exhaustive(ps.len() - 1, &f).unwrap(), None);
            }
        }
    }
}

#[test]
fn randomized_search_is_reproducible() {
    let f = filter(&[Flag::Closed], &[Flag::Convex]);
    let a = find_random(&mut ChaCha8Rng::seed_from_u64(7), 8, &f, 2000).unwrap();
    let b = find_random(&mut ChaCha8Rng::seed_from_u64(7), 8, &f, 2000).unwrap();
    assert_eq!(a, b);
    if let Some(ps) = a {
        let c = classify(&ps);
        assert!(c.closed && !c.convex);
    }
    assert_eq!(
        find_random(&mut ChaCha8Rng::seed_from_u64(7), 8, &filter(&[Flag::Closed], &[Flag::Normal]), 500).unwrap(),
        None
    );
}
