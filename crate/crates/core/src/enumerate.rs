//! Exhaustive and randomized search for small spaces with prescribed
//! separation flags.
//!
//! A finite topology is determined by its minimal neighborhoods, which form
//! the up-sets of a preorder (its specialization preorder). Topologies are
//! therefore enumerated as preorders, one representative per isomorphism
//! class, and each is paired with every preorder up to the automorphisms of
//! the topology.

use alloc::vec::Vec;

use rand::Rng;

use crate::classify::{flag_holds, Flag};
use crate::error::{Error, Result};
use crate::generate::{close_up, default_names, random_space};
use crate::pointset::PointSet;
use crate::preorder::{Preorder, PreorderedSpace};
use crate::topology::FiniteTopology;

/// Largest point count for exhaustive enumeration.
pub const MAX_EXHAUSTIVE_POINTS: usize = 6;
/// Largest point count for randomized search.
pub const MAX_RANDOM_POINTS: usize = 8;

/// `rows[x]` is the bit mask of points above `x`.
type Rows = Vec<u8>;

fn bit(x: usize) -> u8 {
    1 << x
}

/// Every preorder on `n ≤ 6` points, as up-set rows.
///
/// Built one point at a time: the new point `k` is placed above a
/// down-closed `L` and below an up-closed `G` with every member of `L`
/// below every member of `G`.
fn preorder_rows(n: usize) -> Vec<Rows> {
    assert!(n <= MAX_EXHAUSTIVE_POINTS);
    let mut all: Vec<Rows> = alloc::vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for rows in &all {
            let masks = 0u16..(1 << k);
            let up_closed: Vec<u8> = masks
                .clone()
                .map(|m| m as u8)
                .filter(|&g| (0..k).all(|x| g & bit(x) == 0 || rows[x] & !g == 0))
                .collect();
            let down_closed: Vec<u8> = masks
                .map(|m| m as u8)
                .filter(|&l| {
                    (0..k).all(|y| l & bit(y) == 0 || (0..k).all(|x| rows[x] & bit(y) == 0 || l & bit(x) != 0))
                })
                .collect();
            for &l in &down_closed {
                for &g in &up_closed {
                    if (0..k).all(|x| l & bit(x) == 0 || rows[x] & g == g) {
                        let mut r = rows.clone();
                        for (x, row) in r.iter_mut().enumerate() {
                            if l & bit(x) != 0 {
                                *row |= bit(k);
                            }
                        }
                        r.push(g | bit(k));
                        next.push(r);
                    }
                }
            }
        }
        all = next;
    }
    all
}

fn to_preorder(rows: &[u8]) -> Preorder {
    Preorder::from_relation(rows.iter().map(|&r| PointSet::from_bits(r as u64)).collect())
        .expect("enumerated rows are preorders")
}

pub fn all_preorders(n: usize) -> Vec<Preorder> {
    preorder_rows(n).iter().map(|r| to_preorder(r)).collect()
}

fn encode(rows: &[u8]) -> u64 {
    let n = rows.len();
    rows.iter().enumerate().fold(0, |acc, (x, &r)| acc | (r as u64) << (x * n))
}

fn permute(rows: &[u8], perm: &[usize]) -> Rows {
    let mut out = alloc::vec![0u8; rows.len()];
    for (x, &r) in rows.iter().enumerate() {
        out[perm[x]] = (0..rows.len()).filter(|&y| r & bit(y) != 0).fold(0, |acc, y| acc | bit(perm[y]));
    }
    out
}

/// All permutations of `0..n`, in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Per point: (size of up-set, size of down-set). Isomorphisms preserve it.
fn signature(rows: &[u8]) -> Vec<(u32, u32)> {
    let n = rows.len();
    (0..n)
        .map(|x| {
            let down = rows.iter().filter(|&&r| r & bit(x) != 0).count() as u32;
            (rows[x].count_ones(), down)
        })
        .collect()
}

/// Representatives of every preorder (equivalently every topology) on `n`
/// points up to isomorphism: those with sorted signature whose encoding is
/// minimal among the relabelings keeping the signature sorted.
fn canonical_rows(n: usize) -> Vec<Rows> {
    let perms = permutations(n);
    preorder_rows(n)
        .into_iter()
        .filter(|rows| {
            let sig = signature(rows);
            if sig.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            let code = encode(rows);
            perms.iter().filter(|p| (0..n).all(|x| sig[p[x]] == sig[x])).all(|p| encode(&permute(rows, p)) >= code)
        })
        .collect()
}

/// One topology per homeomorphism class on `n ≤ 6` points.
pub fn canonical_topologies(n: usize) -> Vec<FiniteTopology> {
    canonical_rows(n)
        .iter()
        .map(|rows| {
            let gens: Vec<PointSet> = rows.iter().map(|&r| PointSet::from_bits(r as u64)).collect();
            FiniteTopology::generate(default_names(n), &gens).expect("within point limit")
        })
        .collect()
}

/// Flags that must hold and flags that must fail.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FlagFilter {
    pub require: Vec<Flag>,
    pub forbid: Vec<Flag>,
}

impl FlagFilter {
    /// A flag both required and forbidden makes the filter unsatisfiable.
    pub fn is_contradictory(&self) -> bool {
        self.require.iter().any(|f| self.forbid.contains(f))
    }

    /// Whether acceptance needs every `i(x)`, `d(x)` closed: each flag
    /// except convexity implies semiclosedness.
    fn needs_semiclosed(&self) -> bool {
        self.require.iter().any(|&f| f != Flag::Convex)
    }

    pub fn accepts(&self, ps: &PreorderedSpace) -> bool {
        // Cheapest flags first; Flag::ALL is in that order.
        Flag::ALL.iter().all(|&f| {
            let wanted = self.require.contains(&f);
            let unwanted = self.forbid.contains(&f);
            if !wanted && !unwanted {
                return true;
            }
            flag_holds(ps, f) == wanted
        })
    }
}

/// Searches every space with `1..=max_n` points (up to isomorphism of the
/// pair) in a fixed order and returns the first accepted one.
pub fn find_exhaustive(max_n: usize, filter: &FlagFilter) -> Result<Option<PreorderedSpace>> {
    if max_n > MAX_EXHAUSTIVE_POINTS {
        return Err(Error::TooLarge { what: "exhaustive search points".into(), limit: MAX_EXHAUSTIVE_POINTS });
    }
    if filter.is_contradictory() {
        return Ok(None);
    }
    for n in 1..=max_n {
        let perms = permutations(n);
        let orders = preorder_rows(n);
        for topo_rows in canonical_rows(n) {
            // closed[s] for every subset s; opens are the up-sets of the rows.
            let closed: Vec<bool> = (0u16..1 << n)
                .map(|s| {
                    let open = !(s as u8) & ((1u16 << n) - 1) as u8;
                    (0..n).all(|x| open & bit(x) == 0 || topo_rows[x] & !open == 0)
                })
                .collect();
            let automorphisms: Vec<&Vec<usize>> =
                perms.iter().filter(|p| permute(&topo_rows, p) == topo_rows).collect();
            let gens: Vec<PointSet> = topo_rows.iter().map(|&r| PointSet::from_bits(r as u64)).collect();
            let topology = FiniteTopology::generate(default_names(n), &gens).expect("within point limit");
            for order_rows in &orders {
                let needs = filter.needs_semiclosed();
                let forbids = filter.forbid.contains(&Flag::Semiclosed);
                if needs || forbids {
                    let semiclosed = (0..n).all(|x| {
                        let down = (0..n).filter(|&y| order_rows[y] & bit(x) != 0).fold(0u8, |a, y| a | bit(y));
                        closed[order_rows[x] as usize] && closed[down as usize]
                    });
                    if (needs && !semiclosed) || (forbids && semiclosed) {
                        continue;
                    }
                }
                let code = encode(order_rows);
                if automorphisms.iter().any(|p| encode(&permute(order_rows, p)) < code) {
                    continue;
                }
                let ps = PreorderedSpace::new(topology.clone(), to_preorder(order_rows)).expect("sizes agree");
                if filter.accepts(&ps) {
                    return Ok(Some(ps));
                }
            }
        }
    }
    Ok(None)
}

/// Samples up to `attempts` random spaces with `1..=max_n` points, half of
/// them refined to closed preorders, and returns the first accepted one.
pub fn find_random<R: Rng + ?Sized>(
    rng: &mut R,
    max_n: usize,
    filter: &FlagFilter,
    attempts: usize,
) -> Result<Option<PreorderedSpace>> {
    if max_n > MAX_RANDOM_POINTS {
        return Err(Error::TooLarge { what: "randomized search points".into(), limit: MAX_RANDOM_POINTS });
    }
    if filter.is_contradictory() || max_n == 0 {
        return Ok(None);
    }
    for _ in 0..attempts {
        let n = rng.gen_range(1..=max_n);
        let mut ps = random_space(rng, n);
        if rng.gen_bool(0.5) {
            ps = close_up(rng, ps);
        }
        if filter.accepts(&ps) {
            return Ok(Some(ps));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preorder_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| preorder_rows(n).len()).collect();
        assert_eq!(counts, [1, 1, 4, 29, 355, 6942]);
    }

    #[test]
    fn topology_counts_up_to_homeomorphism() {
        let counts: Vec<usize> = (1..=5).map(|n| canonical_rows(n).len()).collect();
        assert_eq!(counts, [1, 3, 9, 33, 139]);
    }

    #[test]
    fn contradictory_filter_finds_nothing() {
        let f = FlagFilter { require: alloc::vec![Flag::Semiclosed], forbid: alloc::vec![Flag::Semiclosed] };
        assert_eq!(find_exhaustive(3, &f).unwrap(), None);
    }

    #[test]
    fn finds_small_non_semiclosed_space() {
        let f = FlagFilter { require: alloc::vec![], forbid: alloc::vec![Flag::Semiclosed] };
        let ps = find_exhaustive(3, &f).unwrap().unwrap();
        assert_eq!(ps.len(), 2);
        assert!(!flag_holds(&ps, Flag::Semiclosed));
    }
}
