//! Separation and extension along an increasing chain of finite pieces
//! `K₁ ⊂ K₂ ⊂ … ⊂ K_J`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::is_closed_preorder;
use crate::error::{Error, Result};
use crate::function::{is_continuous, is_isotone, MonotoneFn};
use crate::pointset::PointSet;
use crate::preorder::{Direction, PreorderedSpace};
use crate::separation::{check_closed_monotone_pair, extend_with_pinning, separate};

/// Pieces and, for each consecutive pair, the injection of `K_j`'s points
/// into `K_{j+1}` (`inclusions[j][x]` is the image of point `x` of piece
/// `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhaustion {
    pub pieces: Vec<PreorderedSpace>,
    pub inclusions: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    BadInclusion,
    TopologyMismatch,
    OrderMismatch,
    NotClosed,
}

/// First problem found; `step` is the 0-based piece index (for the
/// coherence checks, the smaller of the two pieces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustionViolation {
    pub step: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for ExhaustionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Empty => "exhaustion has no pieces",
            ViolationKind::BadInclusion => "inclusion is not an injection into the next piece",
            ViolationKind::TopologyMismatch => "topology differs from the one induced by the next piece",
            ViolationKind::OrderMismatch => "order differs from the one induced by the next piece",
            ViolationKind::NotClosed => "piece is not closed preordered",
        };
        write!(f, "step {}: {what}", self.step)
    }
}

impl Exhaustion {
    pub fn new(pieces: Vec<PreorderedSpace>, inclusions: Vec<Vec<usize>>) -> Self {
        Exhaustion { pieces, inclusions }
    }

    /// Pieces `ps.subspace(sets[j])` of one space, for increasing `sets`.
    pub fn from_nested_subsets(ps: &PreorderedSpace, sets: &[PointSet]) -> Result<Self> {
        let mut pieces = Vec::new();
        let mut inclusions = Vec::new();
        for (j, &s) in sets.iter().enumerate() {
            pieces.push(ps.subspace(s)?);
            if let Some(&next) = sets.get(j + 1) {
                if !s.is_subset(&next) {
                    return Err(Error::InvalidInput(format!("subset {j} is not contained in subset {}", j + 1)));
                }
                let next_members: Vec<usize> = next.iter().collect();
                inclusions.push(s.iter().map(|x| next_members.binary_search(&x).unwrap()).collect());
            }
        }
        Ok(Exhaustion { pieces, inclusions })
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn last(&self) -> &PreorderedSpace {
        self.pieces.last().expect("exhaustion has pieces")
    }

    /// Image in `K_{j+1}` of a set of `K_j`.
    pub fn push(&self, j: usize, s: PointSet) -> PointSet {
        s.iter().map(|x| self.inclusions[j][x]).collect()
    }

    /// Trace on `K_j` of a set of `K_{j+1}`.
    pub fn pull(&self, j: usize, s: PointSet) -> PointSet {
        (0..self.inclusions[j].len()).filter(|&x| s.contains(self.inclusions[j][x])).collect()
    }

    /// Trace on `K_s` of a set of `K_j`, `s ≤ j`.
    pub fn pull_to(&self, s: usize, j: usize, set: PointSet) -> PointSet {
        (s..j).rev().fold(set, |acc, k| self.pull(k, acc))
    }

    /// First step where `sets[j] = sets[j+1] ∩ K_j` fails.
    pub fn first_incoherent_step(&self, sets: &[PointSet]) -> Option<usize> {
        (0..self.inclusions.len()).find(|&j| sets[j] != self.pull(j, sets[j + 1]))
    }
}

pub fn validate_exhaustion(exh: &Exhaustion) -> Option<ExhaustionViolation> {
    let fail = |step, kind| Some(ExhaustionViolation { step, kind });
    if exh.pieces.is_empty() {
        return fail(0, ViolationKind::Empty);
    }
    if exh.inclusions.len() + 1 != exh.pieces.len() {
        return fail(exh.inclusions.len().min(exh.pieces.len() - 1), ViolationKind::BadInclusion);
    }
    for (j, piece) in exh.pieces.iter().enumerate() {
        if !is_closed_preorder(piece) {
            return fail(j, ViolationKind::NotClosed);
        }
        let Some(inc) = exh.inclusions.get(j) else { continue };
        let next = &exh.pieces[j + 1];
        let image: PointSet = inc.iter().copied().collect();
        if inc.len() != piece.len() || image.len() != inc.len() || !image.is_subset(&next.full()) {
            return fail(j, ViolationKind::BadInclusion);
        }
        let mut traces: Vec<PointSet> = next.topology().opens().iter().map(|&o| exh.pull(j, o)).collect();
        traces.sort();
        traces.dedup();
        if traces != piece.topology().opens() {
            return fail(j, ViolationKind::TopologyMismatch);
        }
        let (o, on) = (piece.order(), next.order());
        if (0..piece.len()).any(|x| (0..piece.len()).any(|y| o.le(x, y) != on.le(inc[x], inc[y]))) {
            return fail(j, ViolationKind::OrderMismatch);
        }
    }
    None
}

fn require_valid(exh: &Exhaustion) -> Result<()> {
    match validate_exhaustion(exh) {
        Some(v) => Err(Error::InvalidInput(format!("{v}"))),
        None => Ok(()),
    }
}

/// One step of the separation: targets and separators, as sets of `K_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationStep {
    pub tilde_a: PointSet,
    pub tilde_b: PointSet,
    pub u: PointSet,
    pub v: PointSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationTrace {
    pub steps: Vec<SeparationStep>,
}

impl SeparationTrace {
    /// Per step: `U_j`, `V_j` open monotone with `D(U_j) ∩ I(V_j) = ∅` and
    /// `Ã_j ⊆ U_j`, `B̃_j ⊆ V_j`; across steps `U_j ⊆ U_{j+1}` and
    /// `V_j ⊆ V_{j+1}` under inclusion. Returns the first failing step.
    pub fn first_violation(&self, exh: &Exhaustion) -> Option<usize> {
        self.steps.iter().enumerate().position(|(j, s)| {
            let k = &exh.pieces[j];
            let local = k.is_open_monotone(s.u, Direction::Decreasing)
                && k.is_open_monotone(s.v, Direction::Increasing)
                && s.tilde_a.is_subset(&s.u)
                && s.tilde_b.is_subset(&s.v)
                && k.closed_dec_hull(s.u).is_disjoint(&k.closed_inc_hull(s.v));
            let nested = self
                .steps
                .get(j + 1)
                .map_or(true, |t| exh.push(j, s.u).is_subset(&t.u) && exh.push(j, s.v).is_subset(&t.v));
            !(local && nested)
        })
    }

    pub fn us(&self) -> Vec<PointSet> {
        self.steps.iter().map(|s| s.u).collect()
    }

    pub fn vs(&self) -> Vec<PointSet> {
        self.steps.iter().map(|s| s.v).collect()
    }
}

fn check_per_piece(exh: &Exhaustion, sets: &[PointSet], dir: Direction, what: &str) -> Result<()> {
    if sets.len() != exh.len() {
        return Err(Error::InvalidInput(format!("{what}: {} sets for {} pieces", sets.len(), exh.len())));
    }
    for (j, (&s, k)) in sets.iter().zip(&exh.pieces).enumerate() {
        if !s.is_subset(&k.full()) || !k.is_closed_monotone(s, dir) {
            return Err(Error::InvalidInput(format!("step {j}: {what} is not closed monotone")));
        }
    }
    if let Some(j) = exh.first_incoherent_step(sets) {
        return Err(Error::InvalidInput(format!("step {j}: {what} is not coherent with the next piece")));
    }
    Ok(())
}

/// Separates `A = ⋃ A_j` from `B = ⋃ B_j` piece by piece.
///
/// With `Ã₁ = A₁`, `B̃₁ = B₁`, step `j` finds open monotone `U_j ⊇ Ã_j`,
/// `V_j ⊇ B̃_j` whose closed hulls are disjoint, using three separations in
/// `K_j`:
///
/// 1. `(U', V') = separate(Ã_j, B̃_j)`;
/// 2. `U_j` from `separate(Ã_j, K_j ∖ U')`, so `D(U_j) ⊆ U'`;
/// 3. `V_j` from `separate(K_j ∖ V', B̃_j)`, so `I(V_j) ⊆ V'`.
///
/// The next targets are `Ã_{j+1} = d(D(U_j)) ∪ A_{j+1}` and
/// `B̃_{j+1} = i(I(V_j)) ∪ B_{j+1}`, hulls taken in `K_{j+1}`.
pub fn stream_separate(exh: &Exhaustion, a: &[PointSet], b: &[PointSet]) -> Result<SeparationTrace> {
    require_valid(exh)?;
    check_per_piece(exh, a, Direction::Decreasing, "A")?;
    check_per_piece(exh, b, Direction::Increasing, "B")?;

    let mut steps = Vec::with_capacity(exh.len());
    let (mut ta, mut tb) = (a[0], b[0]);
    for (j, k) in exh.pieces.iter().enumerate() {
        check_closed_monotone_pair(k, ta, tb).map_err(|e| Error::InvalidInput(format!("step {j}: {e}")))?;
        let step_err = |e: Error| match e {
            Error::NotSeparable(m) => Error::InvalidInput(format!("step {j}: {m}")),
            other => other,
        };
        let n = k.len();
        let first = separate(k, ta, tb).map_err(step_err)?;
        let u = separate(k, ta, first.u.complement(n)).map_err(step_err)?.u;
        let v = separate(k, first.v.complement(n), tb).map_err(step_err)?.v;
        let du = k.closed_dec_hull(u);
        let iv = k.closed_inc_hull(v);
        if du.intersects(&iv) {
            return Err(Error::Internal(format!("step {j}: closed hulls of the separators meet")));
        }
        steps.push(SeparationStep { tilde_a: ta, tilde_b: tb, u, v });
        if j + 1 < exh.len() {
            let next = &exh.pieces[j + 1];
            let o = next.order();
            ta = o.down_hull(exh.push(j, du)).union(&a[j + 1]);
            tb = o.up_hull(exh.push(j, iv)).union(&b[j + 1]);
        }
    }
    let trace = SeparationTrace { steps };
    if let Some(j) = trace.first_violation(exh) {
        return Err(Error::Internal(format!("step {j}: trace invariant fails")));
    }
    Ok(trace)
}

/// `L_s = ⋃_{j ≥ s} (U_j ∩ K_s)`: the traces on each piece of the union of
/// a nested family. The result is coherent.
pub fn limit_family(exh: &Exhaustion, sets: &[PointSet]) -> Vec<PointSet> {
    (0..sets.len())
        .map(|s| (s..sets.len()).fold(PointSet::EMPTY, |acc, j| acc.union(&exh.pull_to(s, j, sets[j]))))
        .collect()
}

/// For a coherent family (`U_j = U_{j+1} ∩ K_j`), whether each member is
/// open in its piece.
pub fn limit_open_check(exh: &Exhaustion, sets: &[PointSet]) -> Result<bool> {
    if sets.len() != exh.len() {
        return Err(Error::InvalidInput(format!("{} sets for {} pieces", sets.len(), exh.len())));
    }
    if let Some(j) = exh.first_incoherent_step(sets) {
        return Err(Error::InvalidInput(format!("step {j}: family is not coherent")));
    }
    Ok(sets.iter().zip(&exh.pieces).all(|(&s, k)| k.topology().is_open(s)))
}

/// Extends `f` from `K₁` to every piece, 0 on `D_j` and 1 on `I_j`. Entry
/// `j` of the result is the extension on `K_j`; each is the restriction of
/// the next.
pub fn stream_extend(exh: &Exhaustion, f: &MonotoneFn, d: &[PointSet], i: &[PointSet]) -> Result<Vec<MonotoneFn>> {
    require_valid(exh)?;
    check_per_piece(exh, d, Direction::Decreasing, "D")?;
    check_per_piece(exh, i, Direction::Increasing, "I")?;
    if f.len() != exh.pieces[0].len() {
        return Err(Error::InvalidInput("function does not match the first piece".into()));
    }
    let step_err = |j: usize| {
        move |e: Error| match e {
            Error::Internal(m) => Error::Internal(format!("step {j}: {m}")),
            other => Error::InvalidInput(format!("step {j}: {other}")),
        }
    };

    let k0 = &exh.pieces[0];
    let mut levels = alloc::vec![extend_with_pinning(k0, k0.full(), f, d[0], i[0]).map_err(step_err(0))?];
    if levels[0] != *f {
        return Err(Error::InvalidInput("step 0: f is not 0 on D and 1 on I".into()));
    }
    for j in 1..exh.len() {
        let prev = &levels[j - 1];
        let inc = &exh.inclusions[j - 1];
        let image: PointSet = inc.iter().copied().collect();
        let mut on_image: Vec<(usize, _)> = inc.iter().enumerate().map(|(x, &y)| (y, prev.value(x).clone())).collect();
        on_image.sort_by_key(|(y, _)| *y);
        let g = MonotoneFn::new(on_image.into_iter().map(|(_, v)| v).collect())?;
        let next = extend_with_pinning(&exh.pieces[j], image, &g, d[j], i[j]).map_err(step_err(j))?;
        levels.push(next);
    }

    for (j, (level, k)) in levels.iter().zip(&exh.pieces).enumerate() {
        let ok = is_continuous(k, level)
            && is_isotone(k, level)
            && d[j].is_subset(&level.zero_set())
            && i[j].is_subset(&level.one_set());
        if !ok {
            return Err(Error::Internal(format!("step {j}: extension fails its postconditions")));
        }
    }
    Ok(levels)
}
