//! Deciding where a finite preordered space sits in the separation
//! hierarchy.
//!
//! Each property has a `*_witness` function returning `None` when the
//! property holds and a counterexample otherwise; [`classify`] folds them
//! into a [`Classification`].
//!
//! Separation questions reduce to minimal hulls: every open decreasing set
//! containing `A` contains `open_hull(A, Decreasing)`, and dually, so a
//! separating pair exists iff the two minimal open monotone hulls are
//! disjoint.

use alloc::vec::Vec;

use crate::error::Result;
use crate::pointset::PointSet;
use crate::preorder::{Direction, PreorderedSpace};
use crate::topology::FiniteTopology;

/// The six separation flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Classification {
    pub semiclosed: bool,
    pub closed: bool,
    pub convex: bool,
    pub regular: bool,
    pub normal: bool,
    pub perfectly_normal: bool,
}

impl Classification {
    /// perfectly normal ⇒ normal ⇒ regular ⇒ closed ⇒ semiclosed.
    pub fn implication_chain_holds(&self) -> bool {
        (!self.perfectly_normal || self.normal)
            && (!self.normal || self.regular)
            && (!self.regular || self.closed)
            && (!self.closed || self.semiclosed)
    }

    pub fn get(&self, flag: Flag) -> bool {
        match flag {
            Flag::Semiclosed => self.semiclosed,
            Flag::Closed => self.closed,
            Flag::Convex => self.convex,
            Flag::Regular => self.regular,
            Flag::Normal => self.normal,
            Flag::PerfectlyNormal => self.perfectly_normal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flag {
    Semiclosed,
    Closed,
    Convex,
    Regular,
    Normal,
    PerfectlyNormal,
}

impl Flag {
    pub const ALL: [Flag; 6] =
        [Flag::Semiclosed, Flag::Closed, Flag::Convex, Flag::Regular, Flag::Normal, Flag::PerfectlyNormal];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Semiclosed => "semiclosed",
            Flag::Closed => "closed",
            Flag::Convex => "convex",
            Flag::Regular => "regular",
            Flag::Normal => "normal",
            Flag::PerfectlyNormal => "perfectly_normal",
        }
    }

    pub fn from_name(s: &str) -> Option<Flag> {
        Flag::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// Why a flag is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// `i(point)` (or `d(point)`) is not closed.
    HullNotClosed { point: usize, dir: Direction },
    /// `x ≰ y`, yet every neighborhood pair of `(x, y)` meets the graph.
    GraphNotClosed { x: usize, y: usize },
    /// No `U ∩ V` with `U` open decreasing, `V` open increasing fits
    /// between `point` and `open`.
    NotConvexAt { point: usize, open: PointSet },
    /// `point ∉ set`, `set` closed monotone in `set_dir`, and no disjoint
    /// open monotone neighborhoods exist.
    PointNotSeparated { point: usize, set: PointSet, set_dir: Direction },
    /// Disjoint closed decreasing `a` and closed increasing `b` without an
    /// open monotone separator.
    PairNotSeparated { a: PointSet, b: PointSet },
    /// Disjoint closed monotone pair with no continuous isotone function
    /// having exactly `a` as zero set and `b` as one set.
    PairNotPerfect { a: PointSet, b: PointSet },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    /// Check normality only against the largest closed increasing set
    /// disjoint from each closed decreasing set.
    pub maximal_pairs: bool,
}

pub fn semiclosed_witness(ps: &PreorderedSpace) -> Option<Witness> {
    let t = ps.topology();
    let o = ps.order();
    (0..ps.len()).find_map(|x| {
        if !t.is_closed(o.up_of(x)) {
            Some(Witness::HullNotClosed { point: x, dir: Direction::Increasing })
        } else if !t.is_closed(o.down_of(x)) {
            Some(Witness::HullNotClosed { point: x, dir: Direction::Decreasing })
        } else {
            None
        }
    })
}

/// `G(≤)` is closed iff every `x ≰ y` has a neighborhood rectangle avoiding
/// the graph; with minimal neighborhoods that is `i(U_x) ∩ U_y = ∅`.
pub fn closed_witness(ps: &PreorderedSpace) -> Option<Witness> {
    let t = ps.topology();
    let o = ps.order();
    let n = ps.len();
    for x in 0..n {
        let reach = o.up_hull(t.minimal_neighborhood(x));
        for y in 0..n {
            if !o.le(x, y) && reach.intersects(&t.minimal_neighborhood(y)) {
                return Some(Witness::GraphNotClosed { x, y });
            }
        }
    }
    None
}

pub fn is_closed_preorder(ps: &PreorderedSpace) -> bool {
    closed_witness(ps).is_none()
}

/// Decides closedness of the graph by materializing the product topology
/// and testing whether the complement of `G(≤)` is one of its opens.
pub fn is_closed_preorder_via_product(ps: &PreorderedSpace) -> Result<bool> {
    let t = ps.topology();
    let n = ps.len();
    let square: FiniteTopology = t.product(t)?;
    let mut graph_complement = PointSet::EMPTY;
    for x in 0..n {
        for y in 0..n {
            if !ps.order().le(x, y) {
                graph_complement.insert(x * n + y);
            }
        }
    }
    Ok(square.is_open(graph_complement))
}

pub fn convex_witness(ps: &PreorderedSpace) -> Option<Witness> {
    let t = ps.topology();
    for x in 0..ps.len() {
        let core = ps
            .open_hull(PointSet::singleton(x), Direction::Decreasing)
            .intersection(&ps.open_hull(PointSet::singleton(x), Direction::Increasing));
        for &open in t.opens().iter().filter(|o| o.contains(x)) {
            if !core.is_subset(&open) {
                return Some(Witness::NotConvexAt { point: x, open });
            }
        }
    }
    None
}

/// Whether disjoint open monotone neighborhoods of `a` (side `a_dir`) and
/// `b` (opposite side) exist.
pub(crate) fn separable(ps: &PreorderedSpace, a: PointSet, a_dir: Direction, b: PointSet) -> bool {
    ps.open_hull(a, a_dir).is_disjoint(&ps.open_hull(b, a_dir.flip()))
}

pub fn regular_witness(ps: &PreorderedSpace) -> Option<Witness> {
    if let Some(w) = semiclosed_witness(ps) {
        return Some(w);
    }
    for set_dir in [Direction::Increasing, Direction::Decreasing] {
        for set in ps.monotone_closeds(set_dir) {
            for point in set.complement(ps.len()).iter() {
                if !separable(ps, PointSet::singleton(point), set_dir.flip(), set) {
                    return Some(Witness::PointNotSeparated { point, set, set_dir });
                }
            }
        }
    }
    None
}

/// All disjoint pairs `(A, B)`, `A` closed decreasing, `B` closed
/// increasing, in bit-encoding order.
pub fn closed_monotone_pairs(ps: &PreorderedSpace) -> Vec<(PointSet, PointSet)> {
    let decs = ps.monotone_closeds(Direction::Decreasing);
    let incs = ps.monotone_closeds(Direction::Increasing);
    let mut out = Vec::new();
    for &a in &decs {
        for &b in &incs {
            if a.is_disjoint(&b) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn normal_witness(ps: &PreorderedSpace, opts: ClassifyOptions) -> Option<Witness> {
    if let Some(w) = semiclosed_witness(ps) {
        return Some(w);
    }
    if opts.maximal_pairs {
        let n = ps.len();
        for a in ps.monotone_closeds(Direction::Decreasing) {
            let b = ps.open_hull(a, Direction::Decreasing).complement(n);
            if !separable(ps, a, Direction::Decreasing, b) {
                return Some(Witness::PairNotSeparated { a, b });
            }
        }
        return None;
    }
    closed_monotone_pairs(ps)
        .into_iter()
        .find(|&(a, b)| !separable(ps, a, Direction::Decreasing, b))
        .map(|(a, b)| Witness::PairNotSeparated { a, b })
}

/// Whether some continuous isotone `f` has `f⁻¹(0) = a` and `f⁻¹(1) = b`.
///
/// Continuous real functions on a finite space are exactly the functions
/// constant on quasi-components, so `a` and `b` must be unions of
/// components. In the digraph of components (`C → C'` when some point of
/// `C` is below some point of `C'`) everything reaching `a` must lie in
/// `a` and everything reachable from `b` in `b`; the remaining components
/// can then all take the value ½.
pub fn level_sets_feasible(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> bool {
    if a.intersects(&b) {
        return false;
    }
    let comps = ps.topology().quasi_components();
    let is_union = |s: PointSet| comps.iter().all(|c| c.is_subset(&s) || c.is_disjoint(&s));
    if !is_union(a) || !is_union(b) {
        return false;
    }
    let k = comps.len();
    let o = ps.order();
    // reach[i]: components reachable from component i.
    let mut reach: Vec<PointSet> = (0..k)
        .map(|i| {
            let above = o.up_hull(comps[i]);
            (0..k).filter(|&j| comps[j].intersects(&above)).collect()
        })
        .collect();
    for m in 0..k {
        let row_m = reach[m];
        for row in reach.iter_mut() {
            if row.contains(m) {
                *row = row.union(&row_m);
            }
        }
    }
    let in_a: PointSet = (0..k).filter(|&i| comps[i].is_subset(&a)).collect();
    let in_b: PointSet = (0..k).filter(|&i| comps[i].is_subset(&b)).collect();
    (0..k).all(|i| {
        let r = reach[i];
        (!r.intersects(&in_a) || in_a.contains(i)) && (!in_b.contains(i) || r.is_subset(&in_b))
    })
}

pub fn perfectly_normal_witness(ps: &PreorderedSpace) -> Option<Witness> {
    if let Some(w) = semiclosed_witness(ps) {
        return Some(w);
    }
    closed_monotone_pairs(ps)
        .into_iter()
        .find(|&(a, b)| !level_sets_feasible(ps, a, b))
        .map(|(a, b)| Witness::PairNotPerfect { a, b })
}

/// Per-flag witnesses; `None` means the flag holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diagnosis {
    pub semiclosed: Option<Witness>,
    pub closed: Option<Witness>,
    pub convex: Option<Witness>,
    pub regular: Option<Witness>,
    pub normal: Option<Witness>,
    pub perfectly_normal: Option<Witness>,
}

impl Diagnosis {
    pub fn classification(&self) -> Classification {
        Classification {
            semiclosed: self.semiclosed.is_none(),
            closed: self.closed.is_none(),
            convex: self.convex.is_none(),
            regular: self.regular.is_none(),
            normal: self.normal.is_none(),
            perfectly_normal: self.perfectly_normal.is_none(),
        }
    }

    pub fn witness(&self, flag: Flag) -> Option<Witness> {
        match flag {
            Flag::Semiclosed => self.semiclosed,
            Flag::Closed => self.closed,
            Flag::Convex => self.convex,
            Flag::Regular => self.regular,
            Flag::Normal => self.normal,
            Flag::PerfectlyNormal => self.perfectly_normal,
        }
    }
}

pub fn diagnose(ps: &PreorderedSpace, opts: ClassifyOptions) -> Diagnosis {
    let d = Diagnosis {
        semiclosed: semiclosed_witness(ps),
        closed: closed_witness(ps),
        convex: convex_witness(ps),
        regular: regular_witness(ps),
        normal: normal_witness(ps, opts),
        perfectly_normal: perfectly_normal_witness(ps),
    };
    assert!(
        d.classification().implication_chain_holds(),
        "separation implication chain violated: {:?}",
        d.classification()
    );
    d
}

pub fn classify(ps: &PreorderedSpace) -> Classification {
    diagnose(ps, ClassifyOptions::default()).classification()
}

/// Evaluates a single flag without computing the others.
pub fn flag_holds(ps: &PreorderedSpace, flag: Flag) -> bool {
    match flag {
        Flag::Semiclosed => semiclosed_witness(ps).is_none(),
        Flag::Closed => closed_witness(ps).is_none(),
        Flag::Convex => convex_witness(ps).is_none(),
        Flag::Regular => regular_witness(ps).is_none(),
        Flag::Normal => normal_witness(ps, ClassifyOptions { maximal_pairs: true }).is_none(),
        Flag::PerfectlyNormal => perfectly_normal_witness(ps).is_none(),
    }
}

/// Outcome of restricting a space to a subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InheritanceReport {
    pub subspace: PreorderedSpace,
    /// ambient semiclosed ⇒ subspace semiclosed.
    pub semiclosed_inherited: bool,
    /// ambient closed ⇒ subspace closed.
    pub closed_inherited: bool,
    /// Every closed decreasing `A` of the subspace has `A = d(A) ∩ S` with
    /// `d(A)` closed in the ambient space, and dually.
    pub hull_identity: bool,
    /// Every open monotone set of the subspace is the trace of an open
    /// monotone set of the ambient space.
    pub preordered_subspace: bool,
}

pub fn check_subspace_inheritance(ps: &PreorderedSpace, s: PointSet) -> Result<InheritanceReport> {
    let sub = ps.subspace(s)?;
    let members: Vec<usize> = s.iter().collect();
    let embed = |w: PointSet| crate::topology::embed(w, &members);

    let semiclosed_inherited = semiclosed_witness(ps).is_some() || semiclosed_witness(&sub).is_none();
    let closed_inherited = closed_witness(ps).is_some() || closed_witness(&sub).is_none();

    let hull_identity = [Direction::Decreasing, Direction::Increasing].into_iter().all(|dir| {
        sub.monotone_closeds(dir).into_iter().all(|a| {
            let a = embed(a);
            let h = ps.hull(a, dir);
            h.intersection(&s) == a && ps.topology().is_closed(h)
        })
    });

    let preordered_subspace = [Direction::Decreasing, Direction::Increasing].into_iter().all(|dir| {
        let ambient = ps.monotone_opens(dir);
        sub.monotone_opens(dir).into_iter().all(|w| ambient.iter().any(|o| o.intersection(&s) == embed(w)))
    });

    Ok(InheritanceReport { subspace: sub, semiclosed_inherited, closed_inherited, hull_identity, preordered_subspace })
}
