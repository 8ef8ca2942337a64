//! Preorders and topological preordered spaces.

use alloc::format;
use alloc::vec::Vec;

use crate::classify::Classification;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::topology::{restrict, FiniteTopology};

/// A reflexive, transitive relation on `0..n`, stored as the increasing hull
/// `i(x)` and decreasing hull `d(x)` of every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl Preorder {
    /// Smallest preorder on `n` points containing every `(x, y)` edge
    /// (`x ≤ y`).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for &(x, y) in edges {
            if x >= n || y >= n {
                return Err(Error::InvalidSpace(format!("edge ({x},{y}) out of range")));
            }
            up[x].insert(y);
        }
        // Warshall over the bit rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(&row_k);
                }
            }
        }
        Ok(Self::from_up_sets(up))
    }

    /// Accepts `up[x] = i(x)` verbatim; fails unless the relation is a
    /// preorder.
    pub fn from_relation(up: Vec<PointSet>) -> Result<Self> {
        let n = up.len();
        for (x, row) in up.iter().enumerate() {
            if !row.contains(x) {
                return Err(Error::InvalidSpace(format!("relation not reflexive at {x}")));
            }
            if !row.is_subset(&PointSet::full(n)) {
                return Err(Error::InvalidSpace(format!("relation row {x} out of range")));
            }
            for y in row.iter() {
                if !up[y].is_subset(row) {
                    return Err(Error::InvalidSpace(format!("relation not transitive through {x} ≤ {y}")));
                }
            }
        }
        Ok(Self::from_up_sets(up))
    }

    fn from_up_sets(up: Vec<PointSet>) -> Self {
        let n = up.len();
        let down = (0..n).map(|y| (0..n).filter(|&x| up[x].contains(y)).collect()).collect();
        Preorder { up, down }
    }

    /// Equality relation.
    pub fn discrete(n: usize) -> Self {
        Self::from_up_sets((0..n).map(PointSet::singleton).collect())
    }

    /// Every pair related.
    pub fn total_indifference(n: usize) -> Self {
        Self::from_up_sets(alloc::vec![PointSet::full(n); n])
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x ≤ y` and `y ≰ x`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.le(x, y) && !self.le(y, x)
    }

    /// `x ≤ y` and `y ≤ x`.
    pub fn indifferent(&self, x: usize, y: usize) -> bool {
        self.le(x, y) && self.le(y, x)
    }

    /// `i(x)`.
    pub fn up_of(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// `d(x)`.
    pub fn down_of(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// `i(S) = ⋃ i(x)`.
    pub fn up_hull(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(&self.up[x]))
    }

    /// `d(S) = ⋃ d(x)`.
    pub fn down_hull(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(&self.down[x]))
    }

    pub fn is_increasing(&self, s: PointSet) -> bool {
        self.up_hull(s) == s
    }

    pub fn is_decreasing(&self, s: PointSet) -> bool {
        self.down_hull(s) == s
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|x| self.up[x].intersection(&self.down[x]) == PointSet::singleton(x))
    }

    /// All pairs `(x, y)` with `x ≤ y` and `x ≠ y`, row-major.
    pub fn nontrivial_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.up[x].iter().filter(move |&y| y != x).map(move |y| (x, y))).collect()
    }

    /// The induced preorder on `members` (re-indexed in order).
    pub fn restrict(&self, members: &[usize]) -> Self {
        Self::from_up_sets(members.iter().map(|&x| restrict(self.up[x], members)).collect())
    }
}

/// Monotonicity direction for hulls and monotone open families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        }
    }
}

/// A finite topology together with a preorder on the same points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreorderedSpace {
    topology: FiniteTopology,
    order: Preorder,
    flags: Option<Classification>,
}

impl PreorderedSpace {
    pub fn new(topology: FiniteTopology, order: Preorder) -> Result<Self> {
        if topology.len() != order.len() {
            return Err(Error::InvalidSpace(format!(
                "topology has {} points, preorder {}",
                topology.len(),
                order.len()
            )));
        }
        Ok(PreorderedSpace { topology, order, flags: None })
    }

    /// Named-point convenience constructor: generators of the topology and
    /// generator edges `(x, y)` meaning `x ≤ y`.
    pub fn from_names(points: &[&str], generators: &[&[&str]], edges: &[(&str, &str)]) -> Result<Self> {
        let topology = FiniteTopology::from_names(points, generators)?;
        let edges = edges
            .iter()
            .map(|(x, y)| {
                let ix = topology.index_of(x);
                let iy = topology.index_of(y);
                match (ix, iy) {
                    (Some(a), Some(b)) => Ok((a, b)),
                    _ => Err(Error::InvalidSpace(format!("unknown point in edge ({x},{y})"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let order = Preorder::from_edges(topology.len(), &edges)?;
        Self::new(topology, order)
    }

    /// Caches a fresh classification.
    pub fn classified(mut self) -> Self {
        self.flags = None;
        self.flags = Some(crate::classify::classify(&self));
        self
    }

    /// The cached classification, if [`PreorderedSpace::classified`] ran.
    pub fn flags(&self) -> Option<&Classification> {
        self.flags.as_ref()
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.topology.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topology.is_empty()
    }

    pub fn full(&self) -> PointSet {
        self.topology.full()
    }

    pub fn set_of(&self, names: &[&str]) -> Result<PointSet> {
        self.topology.set_of(names)
    }

    pub fn hull(&self, s: PointSet, dir: Direction) -> PointSet {
        match dir {
            Direction::Increasing => self.order.up_hull(s),
            Direction::Decreasing => self.order.down_hull(s),
        }
    }

    pub fn is_monotone(&self, s: PointSet, dir: Direction) -> bool {
        self.hull(s, dir) == s
    }

    /// `I(S)` or `D(S)`: the smallest closed monotone superset, reached by
    /// alternating topological closure and the order hull until nothing
    /// changes.
    pub fn closed_hull(&self, s: PointSet, dir: Direction) -> PointSet {
        let mut cur = s;
        loop {
            let next = self.topology.closure(self.hull(cur, dir));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `I(S)`.
    pub fn closed_inc_hull(&self, s: PointSet) -> PointSet {
        self.closed_hull(s, Direction::Increasing)
    }

    /// `D(S)`.
    pub fn closed_dec_hull(&self, s: PointSet) -> PointSet {
        self.closed_hull(s, Direction::Decreasing)
    }

    /// Smallest open monotone superset; open monotone sets are closed under
    /// intersection, so it exists.
    pub fn open_hull(&self, s: PointSet, dir: Direction) -> PointSet {
        let mut cur = s;
        loop {
            let next = self.topology.open_hull(self.hull(cur, dir));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_closed_monotone(&self, s: PointSet, dir: Direction) -> bool {
        self.is_monotone(s, dir) && self.topology.is_closed(s)
    }

    pub fn is_open_monotone(&self, s: PointSet, dir: Direction) -> bool {
        self.is_monotone(s, dir) && self.topology.is_open(s)
    }

    /// Every open set that is monotone in `dir`, in bit-encoding order.
    pub fn monotone_opens(&self, dir: Direction) -> Vec<PointSet> {
        self.topology.opens().iter().copied().filter(|&o| self.is_monotone(o, dir)).collect()
    }

    /// Every closed set that is monotone in `dir`, in bit-encoding order.
    pub fn monotone_closeds(&self, dir: Direction) -> Vec<PointSet> {
        let mut out: Vec<PointSet> = self.topology.closed_sets().filter(|&c| self.is_monotone(c, dir)).collect();
        out.sort_unstable();
        out
    }

    /// The subspace on `s` with induced topology and preorder; point `k` of
    /// the result is the `k`-th smallest member of `s`.
    pub fn subspace(&self, s: PointSet) -> Result<Self> {
        let members: Vec<usize> = s.iter().collect();
        let topology = self.topology.subspace(s)?;
        let order = self.order.restrict(&members);
        Self::new(topology, order)
    }
}
