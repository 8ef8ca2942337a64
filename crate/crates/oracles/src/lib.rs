//! Brute-force reference deciders.
//!
//! Everything here works from the raw open family and the raw relation by
//! enumerating subsets, and shares no algorithm with `tps-core`. Only use
//! on small spaces.

use num_traits::{One, Zero};
use tps_core::function::rational;
use tps_core::{MonotoneFn, PointSet, PreorderedSpace, Rational};

pub fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    assert!(n <= 20, "brute force over 2^{n} subsets");
    (0u64..1 << n).map(PointSet::from_bits)
}

pub fn is_open(ps: &PreorderedSpace, s: PointSet) -> bool {
    ps.topology().opens().contains(&s)
}

pub fn is_closed(ps: &PreorderedSpace, s: PointSet) -> bool {
    is_open(ps, s.complement(ps.len()))
}

pub fn is_increasing(ps: &PreorderedSpace, s: PointSet) -> bool {
    let n = ps.len();
    s.iter().all(|x| (0..n).all(|y| !ps.order().le(x, y) || s.contains(y)))
}

pub fn is_decreasing(ps: &PreorderedSpace, s: PointSet) -> bool {
    let n = ps.len();
    s.iter().all(|y| (0..n).all(|x| !ps.order().le(x, y) || s.contains(x)))
}

fn up(ps: &PreorderedSpace, x: usize) -> PointSet {
    (0..ps.len()).filter(|&y| ps.order().le(x, y)).collect()
}

fn down(ps: &PreorderedSpace, y: usize) -> PointSet {
    (0..ps.len()).filter(|&x| ps.order().le(x, y)).collect()
}

/// Smallest closed increasing superset, as the intersection of all of them.
pub fn closed_increasing_hull(ps: &PreorderedSpace, s: PointSet) -> PointSet {
    subsets(ps.len())
        .filter(|c| s.is_subset(c) && is_closed(ps, *c) && is_increasing(ps, *c))
        .fold(ps.full(), |acc, c| acc.intersection(&c))
}

pub fn closed_decreasing_hull(ps: &PreorderedSpace, s: PointSet) -> PointSet {
    subsets(ps.len())
        .filter(|c| s.is_subset(c) && is_closed(ps, *c) && is_decreasing(ps, *c))
        .fold(ps.full(), |acc, c| acc.intersection(&c))
}

pub fn semiclosed(ps: &PreorderedSpace) -> bool {
    (0..ps.len()).all(|x| is_closed(ps, up(ps, x)) && is_closed(ps, down(ps, x)))
}

/// Graph of `≤` closed in `E × E`: every `x ≰ y` has open neighborhoods
/// `O ∋ x`, `P ∋ y` with no `a ∈ O`, `b ∈ P`, `a ≤ b`.
pub fn closed_graph(ps: &PreorderedSpace) -> bool {
    let n = ps.len();
    let opens = ps.topology().opens();
    (0..n).all(|x| {
        (0..n).all(|y| {
            ps.order().le(x, y)
                || opens.iter().filter(|o| o.contains(x)).any(|o| {
                    opens
                        .iter()
                        .filter(|p| p.contains(y))
                        .any(|p| o.iter().all(|a| p.iter().all(|b| !ps.order().le(a, b))))
                })
        })
    })
}

pub fn convex(ps: &PreorderedSpace) -> bool {
    let opens = ps.topology().opens();
    let decs: Vec<PointSet> = opens.iter().copied().filter(|&u| is_decreasing(ps, u)).collect();
    let incs: Vec<PointSet> = opens.iter().copied().filter(|&v| is_increasing(ps, v)).collect();
    (0..ps.len()).all(|x| {
        opens.iter().filter(|o| o.contains(x)).all(|o| {
            decs.iter()
                .filter(|u| u.contains(x))
                .any(|u| incs.iter().any(|v| v.contains(x) && u.intersection(v).is_subset(o)))
        })
    })
}

fn open_decs(ps: &PreorderedSpace) -> Vec<PointSet> {
    subsets(ps.len()).filter(|&u| is_open(ps, u) && is_decreasing(ps, u)).collect()
}

fn open_incs(ps: &PreorderedSpace) -> Vec<PointSet> {
    subsets(ps.len()).filter(|&v| is_open(ps, v) && is_increasing(ps, v)).collect()
}

pub fn closed_decs(ps: &PreorderedSpace) -> Vec<PointSet> {
    subsets(ps.len()).filter(|&a| is_closed(ps, a) && is_decreasing(ps, a)).collect()
}

pub fn closed_incs(ps: &PreorderedSpace) -> Vec<PointSet> {
    subsets(ps.len()).filter(|&b| is_closed(ps, b) && is_increasing(ps, b)).collect()
}

/// Disjoint (closed decreasing, closed increasing) pairs.
pub fn closed_monotone_pairs(ps: &PreorderedSpace) -> Vec<(PointSet, PointSet)> {
    let incs = closed_incs(ps);
    closed_decs(ps)
        .into_iter()
        .flat_map(|a| incs.iter().filter(move |b| a.is_disjoint(b)).map(move |&b| (a, b)))
        .collect()
}

/// Some open decreasing `U ⊇ a` and open increasing `V ⊇ b` are disjoint.
pub fn separable(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> bool {
    let incs = open_incs(ps);
    open_decs(ps).iter().filter(|u| a.is_subset(u)).any(|u| incs.iter().any(|v| b.is_subset(v) && u.is_disjoint(v)))
}

pub fn normal(ps: &PreorderedSpace) -> bool {
    semiclosed(ps) && closed_monotone_pairs(ps).into_iter().all(|(a, b)| separable(ps, a, b))
}

pub fn regular(ps: &PreorderedSpace) -> bool {
    let n = ps.len();
    semiclosed(ps)
        && (0..n).all(|x| {
            let single = PointSet::singleton(x);
            closed_incs(ps).into_iter().filter(|b| !b.contains(x)).all(|b| separable(ps, single, b))
                && closed_decs(ps).into_iter().filter(|a| !a.contains(x)).all(|a| separable(ps, a, single))
        })
}

/// Minimal nonempty clopen sets.
pub fn components(ps: &PreorderedSpace) -> Vec<PointSet> {
    let clopens: Vec<PointSet> =
        ps.topology().opens().iter().copied().filter(|&o| !o.is_empty() && is_closed(ps, o)).collect();
    let mut out: Vec<PointSet> =
        clopens.iter().copied().filter(|c| !clopens.iter().any(|d| d != c && d.is_subset(c))).collect();
    out.sort_by_key(|c| c.first());
    out
}

/// A real function is continuous iff it is constant on every minimal
/// neighborhood (the intersection of the opens around a point).
pub fn continuous(ps: &PreorderedSpace, f: &MonotoneFn) -> bool {
    let opens = ps.topology().opens();
    (0..ps.len()).all(|x| {
        let nb = opens.iter().filter(|o| o.contains(x)).fold(ps.full(), |acc, o| acc.intersection(o));
        nb.iter().all(|y| f.value(y) == f.value(x))
    })
}

pub fn isotone(ps: &PreorderedSpace, f: &MonotoneFn) -> bool {
    let n = ps.len();
    (0..n).all(|x| (0..n).all(|y| !ps.order().le(x, y) || f.value(x) <= f.value(y)))
}

/// Every assignment of one value per component, `fixed` components forced.
fn component_assignments(
    comps: &[PointSet],
    fixed: &[Option<Rational>],
    values: &[Rational],
    n: usize,
    mut visit: impl FnMut(&MonotoneFn) -> bool,
) -> bool {
    let free: Vec<usize> = (0..comps.len()).filter(|&c| fixed[c].is_none()).collect();
    let total = values.len().pow(free.len() as u32);
    let mut current: Vec<Rational> = vec![Rational::zero(); n];
    for c in 0..comps.len() {
        if let Some(v) = &fixed[c] {
            for x in comps[c].iter() {
                current[x] = v.clone();
            }
        }
    }
    for mut code in 0..total {
        for &c in &free {
            let v = &values[code % values.len()];
            code /= values.len();
            for x in comps[c].iter() {
                current[x] = v.clone();
            }
        }
        let f = MonotoneFn::new(current.clone()).expect("values in [0,1]");
        if visit(&f) {
            return true;
        }
    }
    false
}

/// Whether `f` (on the subspace `s`, subspace indexing) has a continuous
/// isotone extension. Continuous functions are constant on components, and
/// a feasible assignment can always be lowered to values of `f` or 0.
pub fn extension_exists(ps: &PreorderedSpace, s: PointSet, f: &MonotoneFn) -> bool {
    let n = ps.len();
    let members: Vec<usize> = s.iter().collect();
    let comps = components(ps);
    let mut fixed: Vec<Option<Rational>> = vec![None; comps.len()];
    for (k, &x) in members.iter().enumerate() {
        let c = comps.iter().position(|c| c.contains(x)).expect("components cover");
        match &fixed[c] {
            Some(v) if v != f.value(k) => return false,
            _ => fixed[c] = Some(f.value(k).clone()),
        }
    }
    let mut values: Vec<Rational> = f.values().to_vec();
    values.push(Rational::zero());
    values.sort();
    values.dedup();
    component_assignments(&comps, &fixed, &values, n, |g| isotone(ps, g))
}

/// Whether some continuous isotone `f` has `f⁻¹(0) = a` and `f⁻¹(1) = b`,
/// over the grid `{0, ½, 1}` on components (sufficient: all middle
/// components can share one value).
pub fn perfect_separation_exists(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> bool {
    let n = ps.len();
    let comps = components(ps);
    let fixed = vec![None; comps.len()];
    let values = [Rational::zero(), rational(1, 2), Rational::one()];
    component_assignments(&comps, &fixed, &values, n, |g| g.zero_set() == a && g.one_set() == b && isotone(ps, g))
}

pub fn perfectly_normal(ps: &PreorderedSpace) -> bool {
    normal(ps) && closed_monotone_pairs(ps).into_iter().all(|(a, b)| perfect_separation_exists(ps, a, b))
}

/// A random continuous isotone function with values in `{0, 1/den, …, 1}`:
/// random values per component, then each component raised to the largest
/// value found below it.
pub fn random_continuous_isotone<R: rand::Rng + ?Sized>(rng: &mut R, ps: &PreorderedSpace, den: i64) -> MonotoneFn {
    let n = ps.len();
    let comps = components(ps);
    let comp_of: Vec<usize> = (0..n).map(|x| comps.iter().position(|c| c.contains(x)).unwrap()).collect();
    let mut vals: Vec<i64> = (0..comps.len()).map(|_| rng.gen_range(0..=den)).collect();
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if ps.order().le(x, y) && vals[comp_of[x]] > vals[comp_of[y]] {
                    vals[comp_of[y]] = vals[comp_of[x]];
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    MonotoneFn::new((0..n).map(|x| rational(vals[comp_of[x]], den)).collect()).unwrap()
}

/// A random function with values in `{0, 1/den, …, 1}`, no constraints.
pub fn random_grid_function<R: rand::Rng + ?Sized>(rng: &mut R, n: usize, den: i64) -> MonotoneFn {
    MonotoneFn::new((0..n).map(|_| rational(rng.gen_range(0..=den), den)).collect()).unwrap()
}
