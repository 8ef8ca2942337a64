//! Quotient by indifference: `x ∼ y` iff `x ≤ y` and `y ≤ x`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::{classify, is_closed_preorder, Classification};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::preorder::{Direction, Preorder, PreorderedSpace};
use crate::topology::FiniteTopology;

/// Joins member names into a class name.
pub const CLASS_SEPARATOR: &str = "~";

/// The partition into indifference classes, the projection, and the
/// quotient space with the quotient topology and the induced order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    /// Classes ordered by their smallest member.
    pub classes: Vec<PointSet>,
    /// `projection[x]` is the class index of `x`.
    pub projection: Vec<usize>,
    pub space: PreorderedSpace,
}

impl QuotientPresentation {
    /// `π⁻¹(s)` for a set of classes.
    pub fn preimage(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, c| acc.union(&self.classes[c]))
    }

    /// `π(s)`.
    pub fn image(&self, s: PointSet) -> PointSet {
        s.iter().map(|x| self.projection[x]).collect()
    }
}

pub fn indifference_classes(ps: &PreorderedSpace) -> Vec<PointSet> {
    let o = ps.order();
    let mut seen = PointSet::EMPTY;
    let mut classes = Vec::new();
    for x in 0..ps.len() {
        if !seen.contains(x) {
            let class = o.up_of(x).intersection(&o.down_of(x));
            seen = seen.union(&class);
            classes.push(class);
        }
    }
    classes
}

/// Class name: member names in point order, joined by [`CLASS_SEPARATOR`].
pub fn class_name(ps: &PreorderedSpace, class: PointSet) -> String {
    let t = ps.topology();
    let names: Vec<&str> = class.iter().map(|x| t.point(x)).collect();
    names.join(CLASS_SEPARATOR)
}

pub fn quotient_space(ps: &PreorderedSpace) -> Result<QuotientPresentation> {
    let classes = indifference_classes(ps);
    let mut projection = alloc::vec![0; ps.len()];
    for (c, class) in classes.iter().enumerate() {
        for x in class.iter() {
            projection[x] = c;
        }
    }
    let names = classes.iter().map(|&c| class_name(ps, c)).collect();
    let topology = ps.topology().quotient(&projection, names)?;
    let o = ps.order();
    let up = classes
        .iter()
        .map(|class| {
            let rep = class.first().expect("classes are nonempty");
            o.up_of(rep).iter().map(|y| projection[y]).collect()
        })
        .collect();
    let order = Preorder::from_relation(up)?;
    let space = PreorderedSpace::new(topology, order)?;
    let pres = QuotientPresentation { classes, projection, space };

    if !pres.space.order().is_antisymmetric() {
        return Err(Error::Internal("quotient order is not antisymmetric".into()));
    }
    if let Some((x, y)) = order_mismatch(ps, &pres) {
        return Err(Error::Internal(format!("x ≤ y and [x] ≲ [y] disagree at ({x}, {y})")));
    }
    if !projection_continuous(ps, &pres) {
        return Err(Error::Internal("projection is not continuous".into()));
    }
    Ok(pres)
}

/// First pair where `x ≤ y ⇔ [x] ≲ [y]` fails.
pub fn order_mismatch(ps: &PreorderedSpace, pres: &QuotientPresentation) -> Option<(usize, usize)> {
    let n = ps.len();
    let o = ps.order();
    let q = pres.space.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| o.le(x, y) != q.le(pres.projection[x], pres.projection[y]))
}

pub fn projection_continuous(ps: &PreorderedSpace, pres: &QuotientPresentation) -> bool {
    pres.space.topology().opens().iter().all(|&o| ps.topology().is_open(pres.preimage(o)))
}

/// Each separation property computed on `E` and on `E/∼`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlagAgreement {
    pub space: Classification,
    pub quotient: Classification,
    /// Monotone opens and monotone closeds of `E` are exactly the preimages
    /// of those of `E/∼`, in both directions.
    pub monotone_sets_correspond: bool,
}

impl FlagAgreement {
    pub fn semiclosed_agrees(&self) -> bool {
        self.space.semiclosed == self.quotient.semiclosed
    }

    pub fn regular_agrees(&self) -> bool {
        self.space.regular == self.quotient.regular
    }

    pub fn normal_agrees(&self) -> bool {
        self.space.normal == self.quotient.normal
    }

    pub fn holds(&self) -> bool {
        self.semiclosed_agrees() && self.regular_agrees() && self.normal_agrees() && self.monotone_sets_correspond
    }
}

pub fn check_flag_equivalences(ps: &PreorderedSpace) -> Result<FlagAgreement> {
    let pres = quotient_space(ps)?;
    let q = &pres.space;
    let mut correspond = true;
    for dir in [Direction::Increasing, Direction::Decreasing] {
        let pulled = |family: Vec<PointSet>| {
            let mut sets: Vec<PointSet> = family.into_iter().map(|s| pres.preimage(s)).collect();
            sets.sort();
            sets
        };
        correspond &= pulled(q.monotone_opens(dir)) == ps.monotone_opens(dir);
        correspond &= pulled(q.monotone_closeds(dir)) == ps.monotone_closeds(dir);
    }
    Ok(FlagAgreement { space: classify(ps), quotient: classify(q), monotone_sets_correspond: correspond })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientClosedReport {
    pub closed_preorder: bool,
    pub antisymmetric: bool,
}

impl QuotientClosedReport {
    pub fn closed_ordered(&self) -> bool {
        self.closed_preorder && self.antisymmetric
    }
}

pub fn check_quotient_closed(ps: &PreorderedSpace) -> Result<QuotientClosedReport> {
    let q = quotient_space(ps)?.space;
    Ok(QuotientClosedReport { closed_preorder: is_closed_preorder(&q), antisymmetric: q.order().is_antisymmetric() })
}

/// Quotient topology on `target_points` for the surjection `map`, and
/// whether it equals `candidate` when one is given.
pub fn quotient_by_map(
    source: &FiniteTopology,
    target_points: Vec<String>,
    map: &[usize],
    candidate: Option<&FiniteTopology>,
) -> Result<(FiniteTopology, Option<bool>)> {
    let t = source.quotient(map, target_points)?;
    let matches = candidate.map(|c| c.points() == t.points() && c.opens() == t.opens());
    Ok((t, matches))
}
