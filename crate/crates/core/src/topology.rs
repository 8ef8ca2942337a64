//! Finite topologies stored as their full family of open sets.
//!
//! Alongside the open family every topology keeps the minimal neighborhood
//! `U_x` of each point (the intersection of all opens containing `x`). On a
//! finite space `U_x` is open, the opens are exactly the unions of minimal
//! neighborhoods, and `x ∈ cl(S)` iff `U_x` meets `S`; most operations below
//! go through these identities.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, CAPACITY};

/// Hard limit on the number of points of an ambient (user supplied) space.
pub const MAX_POINTS: usize = 16;

/// Hard limit on the number of points of a constructed product.
pub const MAX_PRODUCT_POINTS: usize = CAPACITY;

/// Hard limit on the size of any materialized open family.
pub const MAX_OPEN_FAMILY: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    points: Vec<String>,
    /// Sorted by [`PointSet`]'s order, no duplicates.
    opens: Vec<PointSet>,
    min_nbhd: Vec<PointSet>,
}

fn check_points(points: &[String], limit: usize) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidSpace("empty point set".into()));
    }
    if points.len() > limit {
        return Err(Error::TooLarge { what: format!("{} points", points.len()), limit });
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::InvalidSpace(format!("duplicate point '{p}'")));
        }
    }
    Ok(())
}

/// All unions of the given minimal neighborhoods, sorted and deduplicated.
fn unions_of(min_nbhd: &[PointSet]) -> Result<Vec<PointSet>> {
    let mut family = alloc::vec![PointSet::EMPTY];
    for m in min_nbhd {
        let grown: Vec<PointSet> = family.iter().filter(|o| !m.is_subset(o)).map(|o| o.union(m)).collect();
        family.extend(grown);
        family.sort_unstable();
        family.dedup();
        if family.len() > MAX_OPEN_FAMILY {
            return Err(Error::TooLarge { what: "open family".into(), limit: MAX_OPEN_FAMILY });
        }
    }
    Ok(family)
}

impl FiniteTopology {
    /// The coarsest topology on `points` containing every generator
    /// (indices into `points`).
    pub fn generate(points: Vec<String>, generators: &[PointSet]) -> Result<Self> {
        Self::generate_with_limit(points, generators, MAX_POINTS)
    }

    pub(crate) fn generate_with_limit(points: Vec<String>, generators: &[PointSet], limit: usize) -> Result<Self> {
        check_points(&points, limit)?;
        let n = points.len();
        let full = PointSet::full(n);
        if let Some(g) = generators.iter().find(|g| !g.is_subset(&full)) {
            return Err(Error::InvalidSpace(format!("generator {g:?} references an unknown point")));
        }
        let min_nbhd = (0..n)
            .map(|x| generators.iter().filter(|g| g.contains(x)).fold(full, |acc, g| acc.intersection(g)))
            .collect();
        Self::from_min_nbhds(points, min_nbhd)
    }

    /// Named-point form of [`FiniteTopology::generate`].
    pub fn from_names(points: &[&str], generators: &[&[&str]]) -> Result<Self> {
        let points: Vec<String> = points.iter().map(|p| p.to_string()).collect();
        let gens = generators.iter().map(|g| names_to_set(&points, g)).collect::<Result<Vec<_>>>()?;
        Self::generate(points, &gens)
    }

    /// Accepts an explicit open family, validating every topology axiom.
    pub fn from_opens(points: Vec<String>, opens: Vec<PointSet>) -> Result<Self> {
        check_points(&points, MAX_POINTS)?;
        let n = points.len();
        let full = PointSet::full(n);
        let mut sorted = opens.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != opens.len() {
            return Err(Error::InvalidSpace("duplicate open set".into()));
        }
        if let Some(o) = sorted.iter().find(|o| !o.is_subset(&full)) {
            return Err(Error::InvalidSpace(format!("open {o:?} references an unknown point")));
        }
        if sorted.binary_search(&PointSet::EMPTY).is_err() {
            return Err(Error::InvalidSpace("empty set is not open".into()));
        }
        if sorted.binary_search(&full).is_err() {
            return Err(Error::InvalidSpace("whole space is not open".into()));
        }
        for (i, a) in sorted.iter().enumerate() {
            for b in &sorted[i + 1..] {
                for c in [a.union(b), a.intersection(b)] {
                    if sorted.binary_search(&c).is_err() {
                        return Err(Error::InvalidSpace(format!(
                            "open family not closed under union/intersection: {a:?}, {b:?}"
                        )));
                    }
                }
            }
        }
        let min_nbhd =
            (0..n).map(|x| sorted.iter().filter(|o| o.contains(x)).fold(full, |acc, o| acc.intersection(o))).collect();
        Ok(FiniteTopology { points, opens: sorted, min_nbhd })
    }

    fn from_min_nbhds(points: Vec<String>, min_nbhd: Vec<PointSet>) -> Result<Self> {
        let opens = unions_of(&min_nbhd)?;
        Ok(FiniteTopology { points, opens, min_nbhd })
    }

    pub fn discrete(points: &[&str]) -> Result<Self> {
        let gens: Vec<PointSet> = (0..points.len()).map(PointSet::singleton).collect();
        Self::generate(points.iter().map(|p| p.to_string()).collect(), &gens)
    }

    pub fn indiscrete(points: &[&str]) -> Result<Self> {
        Self::generate(points.iter().map(|p| p.to_string()).collect(), &[])
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, x: usize) -> &str {
        &self.points[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    /// Resolves point names to a set of indices.
    pub fn set_of(&self, names: &[&str]) -> Result<PointSet> {
        names_to_set(&self.points, names)
    }

    pub fn names_of(&self, s: PointSet) -> Vec<&str> {
        s.iter().map(|x| self.point(x)).collect()
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// Every open set, in increasing bit-encoding order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Complements of the opens, in no particular order.
    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        let n = self.len();
        self.opens.iter().map(move |o| o.complement(n))
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.len()))
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    /// Intersection of all opens containing `x`.
    pub fn minimal_neighborhood(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    pub fn minimal_neighborhoods(&self) -> &[PointSet] {
        &self.min_nbhd
    }

    /// Largest open subset of `s`.
    pub fn interior(&self, s: PointSet) -> PointSet {
        s.iter().filter(|&x| self.min_nbhd[x].is_subset(&s)).collect()
    }

    /// Smallest closed superset of `s`.
    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.len()).filter(|&x| self.min_nbhd[x].intersects(&s)).collect()
    }

    /// Smallest open superset of `s`.
    pub fn open_hull(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, x| acc.union(&self.min_nbhd[x]))
    }

    /// Specialization: `x ∈ cl({y})`.
    pub fn specializes(&self, x: usize, y: usize) -> bool {
        self.min_nbhd[x].contains(y)
    }

    /// Classes of the symmetric-transitive closure of specialization, each
    /// listed once, ordered by smallest member.
    ///
    /// A function to the reals is continuous iff it is constant on each of
    /// these classes; they are also the minimal nonempty clopen sets.
    pub fn quasi_components(&self) -> Vec<PointSet> {
        let n = self.len();
        let mut seen = PointSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(start);
            loop {
                let mut next = comp;
                for x in comp.iter() {
                    next = next.union(&self.min_nbhd[x]);
                }
                for y in 0..n {
                    if self.min_nbhd[y].intersects(&comp) {
                        next.insert(y);
                    }
                }
                if next == comp {
                    break;
                }
                comp = next;
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// The induced topology on `s`; point `k` of the result is the `k`-th
    /// smallest member of `s`.
    pub fn subspace(&self, s: PointSet) -> Result<Self> {
        if !s.is_subset(&self.full()) {
            return Err(Error::InvalidInput(format!("{s:?} is not a subset of the space")));
        }
        if s.is_empty() {
            return Err(Error::InvalidSpace("empty subspace".into()));
        }
        let members: Vec<usize> = s.iter().collect();
        let points = members.iter().map(|&x| self.points[x].clone()).collect();
        let min_nbhd = members.iter().map(|&x| restrict(self.min_nbhd[x], &members)).collect();
        Self::from_min_nbhds(points, min_nbhd)
    }

    /// Product topology, generated by the open rectangles. Point `(i, j)` has
    /// index `i * other.len() + j` and name `"(p_i,q_j)"`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let (n1, n2) = (self.len(), other.len());
        if n1 * n2 > MAX_PRODUCT_POINTS {
            return Err(Error::TooLarge { what: format!("product of {n1}×{n2} points"), limit: MAX_PRODUCT_POINTS });
        }
        let mut points = Vec::with_capacity(n1 * n2);
        let mut min_nbhd = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                points.push(format!("({},{})", self.points[i], other.points[j]));
                let mut rect = PointSet::EMPTY;
                for a in self.min_nbhd[i].iter() {
                    for b in other.min_nbhd[j].iter() {
                        rect.insert(a * n2 + b);
                    }
                }
                min_nbhd.push(rect);
            }
        }
        Self::from_min_nbhds(points, min_nbhd)
    }

    /// Disjoint union; point `p` of component `k` is named `"(p,k)"` and the
    /// components are laid out consecutively.
    pub fn disjoint_union(parts: &[Self]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("disjoint union of no spaces".into()));
        }
        let total: usize = parts.iter().map(Self::len).sum();
        if total > CAPACITY {
            return Err(Error::TooLarge { what: format!("disjoint union of {total} points"), limit: CAPACITY });
        }
        let mut points = Vec::with_capacity(total);
        let mut min_nbhd = Vec::with_capacity(total);
        let mut offset = 0;
        for (k, part) in parts.iter().enumerate() {
            for (x, name) in part.points.iter().enumerate() {
                points.push(format!("({name},{k})"));
                min_nbhd.push(part.min_nbhd[x].iter().map(|y| y + offset).collect());
            }
            offset += part.len();
        }
        Self::from_min_nbhds(points, min_nbhd)
    }

    /// Quotient topology for the surjection `class_map: point → 0..classes`;
    /// class `c` is named `class_names[c]`. A class-set is open iff its
    /// preimage is open.
    pub fn quotient(&self, class_map: &[usize], class_names: Vec<String>) -> Result<Self> {
        let k = class_names.len();
        if class_map.len() != self.len() {
            return Err(Error::InvalidSpace(format!("class map covers {} of {} points", class_map.len(), self.len())));
        }
        if let Some(&c) = class_map.iter().find(|&&c| c >= k) {
            return Err(Error::InvalidSpace(format!("class id {c} out of range")));
        }
        let image: PointSet = class_map.iter().copied().collect();
        if image != PointSet::full(k) {
            return Err(Error::InvalidSpace("class map is not onto".into()));
        }
        let classes: Vec<PointSet> = (0..k).map(|c| (0..self.len()).filter(|&x| class_map[x] == c).collect()).collect();
        // Minimal open class-set around class c: image of the smallest
        // saturated open containing the class.
        let min_nbhd = classes
            .iter()
            .map(|cls| {
                let mut sat = *cls;
                loop {
                    let hull = self.open_hull(sat);
                    let resat = hull.iter().fold(PointSet::EMPTY, |acc, x| acc.union(&classes[class_map[x]]));
                    if resat == sat {
                        break;
                    }
                    sat = resat;
                }
                sat.iter().map(|x| class_map[x]).collect()
            })
            .collect();
        check_points(&class_names, CAPACITY)?;
        Self::from_min_nbhds(class_names, min_nbhd)
    }

    /// Whether `other` has the same opens as `self` once point `x` of `self`
    /// is identified with point `map[x]` of `other`.
    pub fn is_homeomorphic_via(&self, other: &Self, map: &[usize]) -> bool {
        if self.len() != other.len() || map.len() != self.len() {
            return false;
        }
        let image: PointSet = map.iter().copied().collect();
        if image != other.full() || self.opens.len() != other.opens.len() {
            return false;
        }
        self.opens.iter().all(|o| other.is_open(o.iter().map(|x| map[x]).collect()))
    }
}

/// Re-indexes `s ∩ members` so that `members[k]` becomes `k`.
pub(crate) fn restrict(s: PointSet, members: &[usize]) -> PointSet {
    members.iter().enumerate().filter(|(_, &x)| s.contains(x)).map(|(k, _)| k).collect()
}

/// Inverse of [`restrict`]: maps subspace indices back to ambient ones.
pub(crate) fn embed(s: PointSet, members: &[usize]) -> PointSet {
    s.iter().map(|k| members[k]).collect()
}

pub(crate) fn names_to_set(points: &[String], names: &[&str]) -> Result<PointSet> {
    names
        .iter()
        .map(|name| {
            points.iter().position(|p| p == name).ok_or_else(|| Error::InvalidSpace(format!("unknown point '{name}'")))
        })
        .collect()
}
