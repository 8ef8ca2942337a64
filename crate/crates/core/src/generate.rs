//! Random spaces and exhaustions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::classify::{closed_witness, Witness};
use crate::pointset::PointSet;
use crate::preorder::{Direction, Preorder, PreorderedSpace};
use crate::stream::Exhaustion;
use crate::topology::{FiniteTopology, MAX_POINTS};

/// `a`, `b`, `c`, …
pub fn default_names(n: usize) -> Vec<String> {
    assert!(n <= MAX_POINTS);
    (0..n).map(|i| char::from(b'a' + i as u8).to_string()).collect()
}

pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> PointSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Topology generated by `count` random subsets, each point drawn with
/// probability `p`.
pub fn random_topology<R: Rng + ?Sized>(rng: &mut R, n: usize, count: usize, p: f64) -> FiniteTopology {
    let gens: Vec<PointSet> = (0..count).map(|_| random_subset(rng, n, p)).collect();
    FiniteTopology::generate(default_names(n), &gens).expect("within point limit")
}

/// Transitive closure of random edges, each present with probability `p`.
pub fn random_preorder<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Preorder {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y).filter(|_| rng.gen_bool(p)).collect();
    Preorder::from_edges(n, &edges).expect("edges in range")
}

/// An unconstrained random space with a mix of sparse and dense choices.
pub fn random_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PreorderedSpace {
    let count = rng.gen_range(0..=2 * n);
    let density = rng.gen_range(0.2..0.7);
    let topology = random_topology(rng, n, count, density);
    let edge_p = rng.gen_range(0.0..0.4);
    let order = random_preorder(rng, n, edge_p);
    PreorderedSpace::new(topology, order).expect("sizes agree")
}

/// Refines the topology of `ps` by singleton generators at graph-closedness
/// witnesses until the preorder is closed. Terminates at the latest at the
/// discrete topology, for which every preorder is closed.
pub fn close_up<R: Rng + ?Sized>(rng: &mut R, ps: PreorderedSpace) -> PreorderedSpace {
    let mut ps = ps;
    while let Some(Witness::GraphNotClosed { x, y }) = closed_witness(&ps) {
        let t = ps.topology();
        let candidates: Vec<usize> = [x, y].into_iter().filter(|&p| t.minimal_neighborhood(p).len() > 1).collect();
        let pick = *candidates.choose(rng).expect("a singleton pair is always a rectangle witness");
        let mut gens: Vec<PointSet> = t.minimal_neighborhoods().to_vec();
        gens.push(PointSet::singleton(pick));
        let topology = FiniteTopology::generate(t.points().to_vec(), &gens).expect("same points");
        ps = PreorderedSpace::new(topology, ps.order().clone()).expect("sizes agree");
    }
    ps
}

/// A random closed preordered space.
pub fn random_closed_space<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PreorderedSpace {
    let ps = random_space(rng, n);
    close_up(rng, ps)
}

/// A random closed preordered space on at most `max_size` points, cut into
/// at most `max_pieces` nested subspaces ending with the whole space.
pub fn random_exhaustion<R: Rng + ?Sized>(rng: &mut R, max_pieces: usize, max_size: usize) -> Exhaustion {
    let n = rng.gen_range(1..=max_size);
    let ps = random_closed_space(rng, n);
    let pieces = rng.gen_range(1..=max_pieces.min(n));
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut sizes: Vec<usize> = cuts[..pieces - 1].to_vec();
    sizes.push(n);
    sizes.sort_unstable();
    let sets: Vec<PointSet> = sizes.iter().map(|&k| perm[..k].iter().copied().collect()).collect();
    Exhaustion::from_nested_subsets(&ps, &sets).expect("nested subsets")
}

/// A random closed monotone set of the last piece and its traces on every
/// piece.
pub fn random_coherent_sets<R: Rng + ?Sized>(
    rng: &mut R,
    exh: &Exhaustion,
    dir: Direction,
    avoid: PointSet,
) -> Vec<PointSet> {
    let last = exh.last();
    let closeds: Vec<PointSet> = last.monotone_closeds(dir).into_iter().filter(|s| s.is_disjoint(&avoid)).collect();
    let top = *closeds.choose(rng).expect("the empty set qualifies");
    let j_last = exh.len() - 1;
    (0..exh.len()).map(|s| exh.pull_to(s, j_last, top)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_closed_preorder;
    use crate::stream::validate_exhaustion;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn closed_generation_is_closed() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=6 {
            for _ in 0..30 {
                assert!(is_closed_preorder(&random_closed_space(&mut rng, n)));
            }
        }
    }

    #[test]
    fn exhaustions_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let exh = random_exhaustion(&mut rng, 10, 8);
            assert_eq!(validate_exhaustion(&exh), None);
            let a = random_coherent_sets(&mut rng, &exh, Direction::Decreasing, PointSet::EMPTY);
            for (j, &s) in a.iter().enumerate() {
                assert!(exh.pieces[j].is_closed_monotone(s, Direction::Decreasing));
            }
        }
    }
}
