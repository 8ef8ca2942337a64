//! Monotone separators, Urysohn-type isotone functions, isotone extension
//! and exact level-set separation.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::function::{self, is_continuous, is_isotone, rational, MonotoneFn};
use crate::pointset::PointSet;
use crate::preorder::{Direction, PreorderedSpace};
use crate::topology::{embed, restrict};
use crate::Rational;

/// `U` open decreasing, `V` open increasing, disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeparatorPair {
    pub u: PointSet,
    pub v: PointSet,
}

impl SeparatorPair {
    /// Checks the pair invariants and that it separates `a` from `b`.
    pub fn separates(&self, ps: &PreorderedSpace, a: PointSet, b: PointSet) -> bool {
        ps.is_open_monotone(self.u, Direction::Decreasing)
            && ps.is_open_monotone(self.v, Direction::Increasing)
            && self.u.is_disjoint(&self.v)
            && a.is_subset(&self.u)
            && b.is_subset(&self.v)
    }

    fn key(&self) -> (usize, PointSet, PointSet) {
        (self.u.len() + self.v.len(), self.u, self.v)
    }
}

/// `a` closed decreasing, `b` closed increasing, disjoint.
pub fn check_closed_monotone_pair(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> Result<()> {
    let full = ps.full();
    if !a.is_subset(&full) || !b.is_subset(&full) {
        return Err(Error::InvalidInput("set references unknown points".into()));
    }
    if !ps.is_closed_monotone(a, Direction::Decreasing) {
        return Err(Error::InvalidInput(format!("{a:?} is not closed decreasing")));
    }
    if !ps.is_closed_monotone(b, Direction::Increasing) {
        return Err(Error::InvalidInput(format!("{b:?} is not closed increasing")));
    }
    if a.intersects(&b) {
        return Err(Error::InvalidInput(format!("{a:?} and {b:?} intersect")));
    }
    Ok(())
}

/// Open monotone separator of a closed decreasing `a` and a closed
/// increasing `b`.
///
/// Follows the compactness argument for closed preorders: each `x ∈ a`,
/// `y ∈ b` has disjoint monotone neighborhoods `d(U_x)` and `i(U_y)`; finite
/// unions and intersections of these give neighborhoods `U' ⊇ a`,
/// `V' ⊇ b` with `U' ∩ V' = ∅`, and an open monotone set is interpolated
/// between each side and the interior of its neighborhood. When some pair
/// has no rectangle witness (the preorder is not closed there) the
/// exhaustive search takes over.
///
/// Among all separators the one minimizing `|U| + |V|`, then the bit
/// encodings of `U` and `V`, is returned.
pub fn separate(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> Result<SeparatorPair> {
    check_closed_monotone_pair(ps, a, b)?;
    match separate_by_compactness(ps, a, b) {
        Some(pair) => Ok(pair),
        None => separate_brute_force(ps, a, b),
    }
}

fn separate_by_compactness(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> Option<SeparatorPair> {
    let t = ps.topology();
    let o = ps.order();
    let full = ps.full();
    let mut u_prime = PointSet::EMPTY;
    let mut v_prime = full;
    for x in a.iter() {
        let mut u_x = full;
        let mut v_x = PointSet::EMPTY;
        for y in b.iter() {
            let u_xy = o.down_hull(t.minimal_neighborhood(x));
            let v_yx = o.up_hull(t.minimal_neighborhood(y));
            if u_xy.intersects(&v_yx) {
                return None;
            }
            u_x = u_x.intersection(&u_xy);
            v_x = v_x.union(&v_yx);
        }
        u_prime = u_prime.union(&u_x);
        v_prime = v_prime.intersection(&v_x);
    }
    if u_prime.intersects(&v_prime) {
        return None;
    }
    let u = interpolate(ps, a, t.interior(u_prime), Direction::Decreasing)?;
    let v = interpolate(ps, b, t.interior(v_prime), Direction::Increasing)?;
    Some(SeparatorPair { u, v })
}

/// Smallest open monotone `W` with `inner ⊆ W ⊆ outer`, if any.
fn interpolate(ps: &PreorderedSpace, inner: PointSet, outer: PointSet, dir: Direction) -> Option<PointSet> {
    ps.monotone_opens(dir)
        .into_iter()
        .filter(|w| inner.is_subset(w) && w.is_subset(&outer))
        .min_by_key(|w| (w.len(), *w))
}

/// Exhaustive search over all open decreasing × open increasing pairs.
pub fn separate_brute_force(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> Result<SeparatorPair> {
    check_closed_monotone_pair(ps, a, b)?;
    let decs: Vec<PointSet> = ps.monotone_opens(Direction::Decreasing).into_iter().filter(|u| a.is_subset(u)).collect();
    let incs: Vec<PointSet> = ps.monotone_opens(Direction::Increasing).into_iter().filter(|v| b.is_subset(v)).collect();
    decs.iter()
        .flat_map(|&u| incs.iter().map(move |&v| SeparatorPair { u, v }))
        .filter(|p| p.u.is_disjoint(&p.v))
        .min_by_key(SeparatorPair::key)
        .ok_or_else(|| Error::NotSeparable(format!("no open monotone separator for {a:?}, {b:?}")))
}

/// Separator built from point-wise regularity: every `x ∈ a` gets an open
/// decreasing `U_x ∋ x` with `D(U_x) ∩ b = ∅`, every `y ∈ b` an open
/// increasing `V_y ∋ y` with `I(V_y) ∩ a = ∅`; then
/// `W₁ = U₁`, `Wₙ₊₁ = Uₙ₊₁ ∖ ⋃_{i≤n} I(V_i)`,
/// `Eₙ = Vₙ ∖ ⋃_{i≤n} D(U_i)`, and the result is `(⋃ Wₙ, ⋃ Eₙ)`.
pub fn separate_via_regularity(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> Result<SeparatorPair> {
    check_closed_monotone_pair(ps, a, b)?;
    let cover = |side: PointSet, dir: Direction, avoid: PointSet| -> Result<Vec<PointSet>> {
        let mut sets: Vec<PointSet> = Vec::new();
        for x in side.iter() {
            // The smallest open monotone neighborhood has the smallest
            // closed hull, so it is the only candidate worth trying.
            let nb = ps.open_hull(PointSet::singleton(x), dir);
            if ps.closed_hull(nb, dir).intersects(&avoid) {
                return Err(Error::NotSeparable(format!(
                    "point {x} has no open monotone neighborhood whose closed hull avoids {avoid:?}"
                )));
            }
            if !sets.contains(&nb) {
                sets.push(nb);
            }
        }
        Ok(sets)
    };
    let us = cover(a, Direction::Decreasing, b)?;
    let vs = cover(b, Direction::Increasing, a)?;
    let rounds = us.len().max(vs.len());
    let get = |family: &[PointSet], i: usize| family.get(i).copied().unwrap_or(PointSet::EMPTY);

    let mut u = PointSet::EMPTY;
    let mut v = PointSet::EMPTY;
    let mut inc_hulls = PointSet::EMPTY;
    let mut dec_hulls = PointSet::EMPTY;
    for n in 0..rounds {
        let w_n = get(&us, n).difference(&inc_hulls);
        dec_hulls = dec_hulls.union(&ps.closed_dec_hull(get(&us, n)));
        let e_n = get(&vs, n).difference(&dec_hulls);
        inc_hulls = inc_hulls.union(&ps.closed_inc_hull(get(&vs, n)));
        u = u.union(&w_n);
        v = v.union(&e_n);
    }
    let pair = SeparatorPair { u, v };
    if !pair.separates(ps, a, b) {
        return Err(Error::Internal(format!("regularity construction produced {pair:?}")));
    }
    Ok(pair)
}

/// Memoizes the decreasing half of [`separate`] within one construction.
pub(crate) struct SeparatorCache<'a> {
    ps: &'a PreorderedSpace,
    memo: BTreeMap<(PointSet, PointSet), PointSet>,
}

impl<'a> SeparatorCache<'a> {
    pub(crate) fn new(ps: &'a PreorderedSpace) -> Self {
        SeparatorCache { ps, memo: BTreeMap::new() }
    }

    fn lower(&mut self, a: PointSet, b: PointSet) -> Result<PointSet> {
        if let Some(u) = self.memo.get(&(a, b)) {
            return Ok(*u);
        }
        let u = separate(self.ps, a, b)?.u;
        self.memo.insert((a, b), u);
        Ok(u)
    }

    /// Open decreasing `W ⊇ D(lo)` with `D(W) ⊆ hi`, for `D(lo) ⊆ hi`.
    fn insert_between(&mut self, lo: PointSet, hi: PointSet) -> Result<PointSet> {
        let n = self.ps.len();
        self.lower(self.ps.closed_dec_hull(lo), hi.complement(n))
    }
}

/// Continuous isotone `f` with `f = 0` on `a` and `f = 1` on `b`.
///
/// Builds open decreasing sets `U_r` for dyadic `r = k/2^depth`, with
/// `a ⊆ U_0`, `U_1 = E ∖ b` and `D(U_r) ⊆ U_{r'}` for `r < r'`, each new
/// level inserted by separating `D(U_r)` from `E ∖ U_{r'}`. The value at
/// `x` is the infimum of the levels containing `x`; on a finite space that
/// infimum is already attained by the set inserted directly above a level,
/// so `f(x) = min{ r : x ∈ U_{r + 2^-(depth+1)} }`, and 1 when no such
/// level exists.
///
/// With `a` and `b` both empty the constant ½ is returned.
pub fn urysohn(ps: &PreorderedSpace, a: PointSet, b: PointSet, depth: Option<u32>) -> Result<MonotoneFn> {
    check_closed_monotone_pair(ps, a, b)?;
    let mut cache = SeparatorCache::new(ps);
    urysohn_cached(ps, &mut cache, a, b, depth)
}

pub(crate) fn urysohn_cached(
    ps: &PreorderedSpace,
    cache: &mut SeparatorCache<'_>,
    a: PointSet,
    b: PointSet,
    depth: Option<u32>,
) -> Result<MonotoneFn> {
    let n = ps.len();
    if a.is_empty() && b.is_empty() {
        return MonotoneFn::constant(n, rational(1, 2));
    }
    let depth = depth.unwrap_or(n as u32).clamp(1, 20);
    let top = 1usize << depth;

    let mut levels = alloc::vec![PointSet::EMPTY; top + 1];
    levels[0] = cache.lower(a, b)?;
    levels[top] = b.complement(n);
    let mut step = top / 2;
    while step >= 1 {
        for i in (step..top).step_by(2 * step) {
            levels[i] = cache.insert_between(levels[i - step], levels[i + step])?;
        }
        step /= 2;
    }

    let mut values = alloc::vec![Rational::one(); n];
    let mut assigned = PointSet::EMPTY;
    for i in 0..top {
        let just_above = cache.insert_between(levels[i], levels[i + 1])?;
        let fresh = just_above.difference(&assigned);
        let r = Rational::new(BigInt::from(i), BigInt::from(top));
        for x in fresh.iter() {
            values[x] = r.clone();
        }
        assigned = assigned.union(&fresh);
    }
    let f = MonotoneFn::new(values)?;

    if !is_continuous(ps, &f) || !is_isotone(ps, &f) {
        return Err(Error::Internal(format!(
            "dyadic chain of depth {depth} did not yield a continuous isotone function"
        )));
    }
    if !a.is_subset(&f.zero_set()) || !b.is_subset(&f.one_set()) {
        return Err(Error::Internal("urysohn function misses its pins".into()));
    }
    Ok(f)
}

/// A violated instance of the extension condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionWitness {
    pub lower: Rational,
    pub upper: Rational,
    pub point: usize,
}

impl From<ConditionWitness> for Error {
    fn from(w: ConditionWitness) -> Self {
        Error::ConditionViolated { lower: Box::new(w.lower), upper: Box::new(w.upper), point: w.point }
    }
}

fn subspace_fn_checks(ps: &PreorderedSpace, s: PointSet, f: &MonotoneFn) -> Result<PreorderedSpace> {
    if !s.is_subset(&ps.full()) {
        return Err(Error::InvalidInput(format!("{s:?} is not a subset of the space")));
    }
    if f.len() != s.len() {
        return Err(Error::InvalidInput(format!("function has {} values for {} subspace points", f.len(), s.len())));
    }
    if s.is_empty() {
        return Err(Error::InvalidInput("empty subspace".into()));
    }
    let sub = ps.subspace(s)?;
    if !is_continuous(&sub, f) {
        return Err(Error::InvalidInput("function is not continuous on the subspace".into()));
    }
    if !is_isotone(&sub, f) {
        return Err(Error::InvalidInput("function is not isotone on the subspace".into()));
    }
    Ok(sub)
}

/// For consecutive values `ξ < ξ'` of `f` (a function on the subspace `s`,
/// in subspace indexing), the first point of
/// `D(f⁻¹[0,ξ]) ∩ I(f⁻¹[ξ',1])`, hulls taken in the ambient space. Any
/// other threshold pair yields subsets of one of these.
pub fn extension_condition_witness(
    ps: &PreorderedSpace,
    s: PointSet,
    f: &MonotoneFn,
) -> Result<Option<ConditionWitness>> {
    if s.is_empty() && f.is_empty() {
        return Ok(None);
    }
    subspace_fn_checks(ps, s, f)?;
    let members: Vec<usize> = s.iter().collect();
    let vals = f.distinct_values();
    for w in vals.windows(2) {
        let lower = ps.closed_dec_hull(embed(f.at_most(&w[0]), &members));
        let upper = ps.closed_inc_hull(embed(f.at_least(&w[1]), &members));
        if let Some(point) = lower.intersection(&upper).first() {
            return Ok(Some(ConditionWitness { lower: w[0].clone(), upper: w[1].clone(), point }));
        }
    }
    Ok(None)
}

pub fn check_extension_condition(ps: &PreorderedSpace, s: PointSet, f: &MonotoneFn) -> Result<bool> {
    Ok(extension_condition_witness(ps, s, f)?.is_none())
}

/// Continuous isotone `F` on the whole space with `F|s = f` (`f` in
/// subspace indexing).
///
/// `f` is first carried to `cl(s)` (each new point takes the common value
/// of `f` on its minimal neighborhood). Then, for consecutive values
/// `v_i < v_{i+1}`, a Urysohn function `g_i` separates
/// `D(f⁻¹[0,v_i])` from `I(f⁻¹[v_{i+1},1])` and
/// `F = v_1 + Σ (v_{i+1} − v_i)·g_i`.
pub fn extend_isotone(ps: &PreorderedSpace, s: PointSet, f: &MonotoneFn) -> Result<MonotoneFn> {
    let n = ps.len();
    if s.is_empty() {
        if !f.is_empty() {
            return Err(Error::InvalidInput("values given for an empty subspace".into()));
        }
        return MonotoneFn::constant(n, rational(1, 2));
    }
    if let Some(w) = extension_condition_witness(ps, s, f)? {
        return Err(w.into());
    }
    let members: Vec<usize> = s.iter().collect();
    let t = ps.topology();

    let closure = t.closure(s);
    let mut on_closure: Vec<Option<Rational>> = alloc::vec![None; n];
    for (k, &x) in members.iter().enumerate() {
        on_closure[x] = Some(f.value(k).clone());
    }
    for x in closure.difference(&s).iter() {
        let near = t.minimal_neighborhood(x).intersection(&s);
        let mut vals = near.iter().map(|y| f.value(members.binary_search(&y).unwrap()));
        let first = vals.next().expect("closure point has a neighbor in s").clone();
        if let Some(other) = vals.find(|v| **v != first) {
            // Such an x lies in both closures, which the condition forbids.
            let (lo, hi) = if *other < first { (other.clone(), first) } else { (first, other.clone()) };
            return Err(Error::ConditionViolated { lower: Box::new(lo), upper: Box::new(hi), point: x });
        }
        on_closure[x] = Some(first);
    }
    let cl_members: Vec<usize> = closure.iter().collect();
    let f_bar = MonotoneFn::new(cl_members.iter().map(|&x| on_closure[x].clone().unwrap()).collect())?;

    let vals = f_bar.distinct_values();
    let mut total = alloc::vec![vals[0].clone(); n];
    let mut cache = SeparatorCache::new(ps);
    for w in vals.windows(2) {
        let lower = ps.closed_dec_hull(embed(f_bar.at_most(&w[0]), &cl_members));
        let upper = ps.closed_inc_hull(embed(f_bar.at_least(&w[1]), &cl_members));
        let g = urysohn_cached(ps, &mut cache, lower, upper, None)?;
        let gap = &w[1] - &w[0];
        for (acc, v) in total.iter_mut().zip(g.values()) {
            *acc += &gap * v;
        }
    }
    let big_f = MonotoneFn::new(total)?;
    if !is_continuous(ps, &big_f) || !is_isotone(ps, &big_f) || big_f.restrict(s) != *f {
        return Err(Error::Internal("extension fails its postconditions".into()));
    }
    Ok(big_f)
}

/// Continuous isotone extension of `f` (on `k`, subspace indexing) that is
/// 0 on the closed decreasing `a` and 1 on the closed increasing `b`.
///
/// Defines `f'` on `K' = a ∪ k ∪ b` (0 on `a`, `f` on `k`, 1 on `b`),
/// checks that it is isotone and that each `f'⁻¹[α,1]` is
/// `(b ∪ C') ∩ K'` for the closed set
/// `C' = cl(f⁻¹[α,1]) ∩ I(f⁻¹[α,1])` (dually for `f'⁻¹[0,β]`), then
/// extends `f'`.
pub fn extend_with_pinning(
    ps: &PreorderedSpace,
    k: PointSet,
    f: &MonotoneFn,
    a: PointSet,
    b: PointSet,
) -> Result<MonotoneFn> {
    check_closed_monotone_pair(ps, a, b)?;
    if !k.is_subset(&ps.full()) || f.len() != k.len() {
        return Err(Error::InvalidInput("function does not match its domain".into()));
    }
    let k_members: Vec<usize> = k.iter().collect();
    if !k.is_empty() {
        subspace_fn_checks(ps, k, f)?;
    }
    let ambient_zero = embed(f.zero_set(), &k_members);
    let ambient_one = embed(f.one_set(), &k_members);
    if !a.intersection(&k).is_subset(&ambient_zero) || !b.intersection(&k).is_subset(&ambient_one) {
        return Err(Error::InvalidInput("f is not 0 on a∩K and 1 on b∩K".into()));
    }

    let k_prime = a.union(&k).union(&b);
    if k_prime.is_empty() {
        return MonotoneFn::constant(ps.len(), rational(1, 2));
    }
    let kp_members: Vec<usize> = k_prime.iter().collect();
    let f_prime = MonotoneFn::new(
        kp_members
            .iter()
            .map(|&x| {
                if a.contains(x) {
                    Rational::zero()
                } else if b.contains(x) {
                    Rational::one()
                } else {
                    f.value(k_members.binary_search(&x).unwrap()).clone()
                }
            })
            .collect(),
    )?;
    let sub = ps.subspace(k_prime)?;
    if !is_isotone(&sub, &f_prime) {
        return Err(Error::InvalidInput("pinned function is not isotone on a ∪ K ∪ b".into()));
    }
    if !pinned_levels_closed(ps, k, f, a, b, k_prime, &f_prime) {
        return Err(Error::InvalidInput("pinned function is not continuous on a ∪ K ∪ b".into()));
    }
    if !is_continuous(&sub, &f_prime) {
        return Err(Error::Internal("closed-set argument and continuity disagree".into()));
    }

    let big_f = extend_isotone(ps, k_prime, &f_prime)?;
    if !a.is_subset(&big_f.zero_set()) || !b.is_subset(&big_f.one_set()) {
        return Err(Error::Internal("pinned extension misses its pins".into()));
    }
    Ok(big_f)
}

fn pinned_levels_closed(
    ps: &PreorderedSpace,
    k: PointSet,
    f: &MonotoneFn,
    a: PointSet,
    b: PointSet,
    k_prime: PointSet,
    f_prime: &MonotoneFn,
) -> bool {
    let t = ps.topology();
    let k_members: Vec<usize> = k.iter().collect();
    let kp_members: Vec<usize> = k_prime.iter().collect();
    f_prime.distinct_values().iter().all(|level| {
        let upper_ok = level.is_zero() || {
            let upper_k = embed(f.at_least(level), &k_members);
            let c = t.closure(upper_k).intersection(&ps.closed_inc_hull(upper_k));
            embed(f_prime.at_least(level), &kp_members) == b.union(&c).intersection(&k_prime)
        };
        let lower_ok = level.is_one() || {
            let lower_k = embed(f.at_most(level), &k_members);
            let c = t.closure(lower_k).intersection(&ps.closed_dec_hull(lower_k));
            embed(f_prime.at_most(level), &kp_members) == a.union(&c).intersection(&k_prime)
        };
        upper_ok && lower_ok
    })
}

/// Continuous isotone `f` with `f⁻¹(0) = a` and `f⁻¹(1) = b` exactly.
///
/// The zero side: unless `a` is open (then 0 on `a`, 1 elsewhere will do),
/// take every open `O` with `a ∩ I(O) = ∅`, separate `a` from `I(O)` with a
/// Urysohn function and combine them with [`function::weighted_sum`]; the
/// result vanishes exactly on `a`. The one side is dual. The two are merged
/// with [`function::combine_alpha`].
pub fn perfectly_separate(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> Result<MonotoneFn> {
    check_closed_monotone_pair(ps, a, b)?;
    let n = ps.len();
    let t = ps.topology();
    let mut cache = SeparatorCache::new(ps);
    let mut memo: BTreeMap<(PointSet, PointSet), MonotoneFn> = BTreeMap::new();
    let mut urysohn_memo = |lo: PointSet, hi: PointSet| -> Result<MonotoneFn> {
        if let Some(f) = memo.get(&(lo, hi)) {
            return Ok(f.clone());
        }
        let f = urysohn_cached(ps, &mut cache, lo, hi, None)?;
        memo.insert((lo, hi), f.clone());
        Ok(f)
    };

    let g = if t.is_open(a) {
        MonotoneFn::indicator_outside(n, a)
    } else {
        let mut parts = Vec::new();
        for &o in t.opens() {
            let hull = ps.closed_inc_hull(o);
            if !hull.intersects(&a) && !hull.is_empty() {
                parts.push(urysohn_memo(a, hull)?);
            }
        }
        if parts.is_empty() {
            return Err(Error::NotSeparable(format!("{a:?} is not a zero set")));
        }
        function::weighted_sum(&parts)?
    };

    let h = if t.is_open(b) {
        MonotoneFn::indicator_outside(n, b.complement(n))
    } else {
        let mut parts = Vec::new();
        for &o in t.opens() {
            let hull = ps.closed_dec_hull(o);
            if !hull.intersects(&b) && !hull.is_empty() {
                parts.push(urysohn_memo(hull, b)?);
            }
        }
        if parts.is_empty() {
            return Err(Error::NotSeparable(format!("{b:?} is not a one set")));
        }
        function::weighted_sum(&parts)?
    };

    if g.zero_set() != a || h.one_set() != b {
        return Err(Error::NotSeparable(format!(
            "no continuous isotone function has zero set {a:?} and one set {b:?}"
        )));
    }
    let f = function::combine_alpha(ps, &g, &h)?;
    if f.zero_set() != a || f.one_set() != b || !is_continuous(ps, &f) || !is_isotone(ps, &f) {
        return Err(Error::Internal("combined function misses its level sets".into()));
    }
    Ok(f)
}

/// `({F < ½}, {F > ½})`.
pub fn threshold_separator(f: &MonotoneFn) -> SeparatorPair {
    let half = rational(1, 2);
    SeparatorPair { u: f.where_(|v| *v < half), v: f.where_(|v| *v > half) }
}

/// Re-indexes an ambient set into the subspace on `s`.
pub fn to_subspace(set: PointSet, s: PointSet) -> PointSet {
    let members: Vec<usize> = s.iter().collect();
    restrict(set, &members)
}

/// Maps a subspace set back into the ambient space.
pub fn from_subspace(set: PointSet, s: PointSet) -> PointSet {
    let members: Vec<usize> = s.iter().collect();
    embed(set, &members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn chain(n: usize) -> PreorderedSpace {
        let names = ["a", "b", "c", "d"];
        let gens: Vec<&[&str]> = names[..n].iter().map(core::slice::from_ref).collect();
        let edges: Vec<(&str, &str)> = (1..n).map(|i| (names[i - 1], names[i])).collect();
        PreorderedSpace::from_names(&names[..n], &gens, &edges).unwrap()
    }

    fn p(ps: &PreorderedSpace, names: &[&str]) -> PointSet {
        ps.set_of(names).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    #[test]
    fn separate_examples() {
        let c = chain(2);
        let pair = separate(&c, p(&c, &["a"]), p(&c, &["b"])).unwrap();
        assert_eq!(pair, SeparatorPair { u: p(&c, &["a"]), v: p(&c, &["b"]) });

        let pair = separate(&c, PointSet::EMPTY, c.full()).unwrap();
        assert_eq!(pair, SeparatorPair { u: PointSet::EMPTY, v: c.full() });

        let ind = PreorderedSpace::from_names(&["a", "b"], &[], &[("a", "b"), ("b", "a")]).unwrap();
        let pair = separate(&ind, PointSet::EMPTY, ind.full()).unwrap();
        assert_eq!(pair, SeparatorPair { u: PointSet::EMPTY, v: ind.full() });
    }

    #[test]
    fn separate_rejects_bad_pairs() {
        let c = chain(2);
        // {b} is not decreasing.
        assert!(matches!(separate(&c, p(&c, &["b"]), PointSet::EMPTY), Err(Error::InvalidInput(_))));
        assert!(matches!(separate(&c, c.full(), c.full()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn separate_reports_non_separable_pairs() {
        // Closed decreasing {a} and closed increasing {c} glued through b,
        // whose only neighborhood is the whole space.
        let ps = PreorderedSpace::from_names(&["a", "b", "c"], &[&["a"], &["c"]], &[]).unwrap();
        let a = p(&ps, &["a", "b"]);
        let c = p(&ps, &["c"]);
        assert!(ps.is_closed_monotone(a, Direction::Decreasing));
        // {c} is open; its complement {a,b} closed. Is {c} closed?
        if ps.is_closed_monotone(c, Direction::Increasing) {
            assert!(separate(&ps, a, c).is_ok());
        }
        // Sierpiński with discrete order: ∅ vs {b}? {b} closed increasing,
        // {a} not closed. Only pair with both nonempty needs a closed {a}.
        let s = PreorderedSpace::from_names(&["a", "b"], &[&["a"]], &[]).unwrap();
        let b = p(&s, &["b"]);
        let pair = separate(&s, b, PointSet::EMPTY).unwrap();
        assert!(pair.separates(&s, b, PointSet::EMPTY));
    }

    #[test]
    fn regularity_route_examples() {
        let c = chain(2);
        let pair = separate_via_regularity(&c, p(&c, &["a"]), p(&c, &["b"])).unwrap();
        assert!(pair.separates(&c, p(&c, &["a"]), p(&c, &["b"])));
        let pair = separate_via_regularity(&c, PointSet::EMPTY, p(&c, &["b"])).unwrap();
        assert_eq!(pair.u, PointSet::EMPTY);
    }

    #[test]
    fn urysohn_examples() {
        let c = chain(2);
        let f = urysohn(&c, p(&c, &["a"]), p(&c, &["b"]), None).unwrap();
        assert_eq!(f.values(), [q(0, 1), q(1, 1)]);

        let f = urysohn(&c, PointSet::EMPTY, PointSet::EMPTY, None).unwrap();
        assert_eq!(f.values(), [q(1, 2), q(1, 2)]);

        let c3 = chain(3);
        let f = urysohn(&c3, p(&c3, &["a"]), p(&c3, &["c"]), None).unwrap();
        assert_eq!(f.value(0), &q(0, 1));
        assert_eq!(f.value(2), &q(1, 1));
        assert!(f.value(0) <= f.value(1) && f.value(1) <= f.value(2));
    }

    #[test]
    fn urysohn_on_a_non_discrete_closed_space() {
        // a ≤ b ≤ c with opens generated by {a}, {a,b}: not all hulls are
        // closed, so the chain has to absorb non-closed levels.
        let ps = PreorderedSpace::from_names(
            &["a", "b", "c", "d"],
            &[&["a"], &["a", "b"], &["c"], &["c", "d"]],
            &[("a", "c"), ("b", "d")],
        )
        .unwrap();
        for (a, b) in crate::classify::closed_monotone_pairs(&ps) {
            match urysohn(&ps, a, b, None) {
                Ok(f) => {
                    assert!(is_continuous(&ps, &f) && is_isotone(&ps, &f));
                    assert!(a.is_subset(&f.zero_set()) && b.is_subset(&f.one_set()));
                }
                Err(Error::NotSeparable(_)) => assert!(!crate::classify::classify(&ps).normal),
                Err(e) => panic!("unexpected {e}"),
            }
        }
    }

    #[test]
    fn extension_condition_examples() {
        let c = chain(2);
        let f = MonotoneFn::new(vec![q(0, 1), q(1, 1)]).unwrap();
        assert!(check_extension_condition(&c, c.full(), &f).unwrap());

        // b lies in the closure of both a and c.
        let ps = PreorderedSpace::from_names(&["a", "b", "c"], &[&["a"], &["c"]], &[]).unwrap();
        let s = p(&ps, &["a", "c"]);
        let f = MonotoneFn::new(vec![q(0, 1), q(1, 1)]).unwrap();
        let w = extension_condition_witness(&ps, s, &f).unwrap().unwrap();
        assert_eq!(w, ConditionWitness { lower: q(0, 1), upper: q(1, 1), point: 1 });
        assert!(matches!(extend_isotone(&ps, s, &f), Err(Error::ConditionViolated { point: 1, .. })));

        // Not isotone on S.
        let bad = MonotoneFn::new(vec![q(1, 1), q(0, 1)]).unwrap();
        assert!(matches!(check_extension_condition(&c, c.full(), &bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn extend_isotone_examples() {
        let c = chain(2);
        let f = MonotoneFn::new(vec![q(1, 4), q(3, 4)]).unwrap();
        assert_eq!(extend_isotone(&c, c.full(), &f).unwrap(), f);

        let f = MonotoneFn::new(vec![q(0, 1)]).unwrap();
        let big = extend_isotone(&c, p(&c, &["a"]), &f).unwrap();
        assert_eq!(big.value(0), &q(0, 1));
        assert!(is_isotone(&c, &big) && is_continuous(&c, &big));
    }

    #[test]
    fn extension_through_a_closure_point() {
        // b is in the closure of a only; S = {a, c}.
        let ps = PreorderedSpace::from_names(&["a", "b", "c"], &[&["a"], &["a", "b"], &["c"]], &[("a", "c")]).unwrap();
        let s = p(&ps, &["a", "c"]);
        let f = MonotoneFn::new(vec![q(1, 3), q(2, 3)]).unwrap();
        if crate::classify::classify(&ps).normal {
            let big = extend_isotone(&ps, s, &f).unwrap();
            assert_eq!(big.value(1), &q(1, 3));
            assert_eq!(big.restrict(s), f);
        }
    }

    #[test]
    fn pinning_examples() {
        let c = chain(2);
        let empty = MonotoneFn::new(vec![]).unwrap();
        let big = extend_with_pinning(&c, PointSet::EMPTY, &empty, p(&c, &["a"]), p(&c, &["b"])).unwrap();
        assert_eq!(big.values(), [q(0, 1), q(1, 1)]);

        let f = MonotoneFn::new(vec![q(0, 1), q(1, 1)]).unwrap();
        let big = extend_with_pinning(&c, c.full(), &f, p(&c, &["a"]), p(&c, &["b"])).unwrap();
        assert_eq!(big, f);

        let f = MonotoneFn::new(vec![q(2, 5)]).unwrap();
        let big = extend_with_pinning(&c, p(&c, &["a"]), &f, PointSet::EMPTY, PointSet::EMPTY).unwrap();
        assert_eq!(big.value(0), &q(2, 5));

        // f(a) = 1 contradicts a ∈ A.
        let f = MonotoneFn::new(vec![q(1, 1)]).unwrap();
        assert!(matches!(
            extend_with_pinning(&c, p(&c, &["a"]), &f, p(&c, &["a"]), PointSet::EMPTY),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn perfect_separation_examples() {
        let c = chain(2);
        let f = perfectly_separate(&c, p(&c, &["a"]), p(&c, &["b"])).unwrap();
        assert_eq!(f.zero_set(), p(&c, &["a"]));
        assert_eq!(f.one_set(), p(&c, &["b"]));

        let f = perfectly_separate(&c, PointSet::EMPTY, PointSet::EMPTY).unwrap();
        assert_eq!(f.values(), [q(1, 2), q(1, 2)]);

        let c3 = chain(3);
        let f = perfectly_separate(&c3, p(&c3, &["a"]), p(&c3, &["c"])).unwrap();
        assert_eq!(f.zero_set(), p(&c3, &["a"]));
        assert_eq!(f.one_set(), p(&c3, &["c"]));
        assert!(*f.value(1) > Rational::zero() && *f.value(1) < Rational::one());
    }

    #[test]
    fn threshold_of_pinned_extension_separates() {
        let c3 = chain(3);
        let a = p(&c3, &["a"]);
        let b = p(&c3, &["c"]);
        let empty = MonotoneFn::new(vec![]).unwrap();
        let f = extend_with_pinning(&c3, PointSet::EMPTY, &empty, a, b).unwrap();
        assert!(threshold_separator(&f).separates(&c3, a, b));
    }
}
