//! Isotone and utility representations of the preorder.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::classify::{regular_witness, semiclosed_witness};
use crate::error::{Error, Result};
use crate::function::{self, blend, is_continuous, is_isotone, is_utility, rational, MonotoneFn};
use crate::preorder::PreorderedSpace;
use crate::separation::{urysohn_cached, SeparatorCache};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// `x ≤ y ⇔ ∀f, f(x) ≤ f(y)`.
    Represent,
    /// Represents, and every member is continuous isotone.
    Isotone,
    /// Represents, and every member is a continuous utility.
    Utility,
}

/// Ordered pairs `(x, y)` with `x ≰ y`, lexicographically.
pub fn violating_pairs(ps: &PreorderedSpace) -> Vec<(usize, usize)> {
    let o = ps.order();
    let n = ps.len();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| !o.le(x, y)).collect()
}

fn push_unique(family: &mut Vec<MonotoneFn>, f: MonotoneFn) {
    if !family.contains(&f) {
        family.push(f);
    }
}

/// A finite family `G` of continuous isotone functions with
/// `x ≤ y ⇔ ∀g ∈ G, g(x) ≤ g(y)`: for each `x ≰ y` a Urysohn function
/// vanishing on `d(y)` and equal to 1 on `i(x)`.
pub fn isotone_representation(ps: &PreorderedSpace) -> Result<Vec<MonotoneFn>> {
    if let Some(w) = semiclosed_witness(ps) {
        return Err(Error::InvalidInput(format!("space is not semiclosed: {w:?}")));
    }
    let o = ps.order();
    let mut cache = SeparatorCache::new(ps);
    let mut family = Vec::new();
    for (x, y) in violating_pairs(ps) {
        let g = urysohn_cached(ps, &mut cache, o.down_of(y), o.up_of(x), None)?;
        push_unique(&mut family, g);
    }
    Ok(family)
}

/// Smallest `n ≥ 1` with `(n − 1)·Δ > t`, for `Δ > 0`.
fn smallest_n(t: &Rational, delta: &Rational) -> u64 {
    let ratio = t / delta;
    if ratio < Rational::zero() {
        return 1;
    }
    (ratio.floor().to_integer() + 2u32).to_u64().expect("schedule index fits in u64")
}

/// Upgrades an isotone representation to a family of continuous utilities
/// that still represents the preorder.
///
/// `g = Σ 2⁻ᵏ gₖ` (normalized) is a utility. For each `gₖ` and each pair
/// `x ≰ y` it witnesses (`gₖ(x) > gₖ(y)`), the blend
/// `(1 − 1/n)·gₖ + g/n` keeps `x` above `y` once
/// `(n − 1)·(gₖ(x) − gₖ(y)) > g(y) − g(x)`; the smallest `n` serving all
/// of `gₖ`'s pairs is emitted.
pub fn utilities_from_isotones(ps: &PreorderedSpace, isotones: &[MonotoneFn]) -> Result<Vec<MonotoneFn>> {
    let n = ps.len();
    if isotones.iter().any(|g| g.len() != n) {
        return Err(Error::InvalidInput("function and space sizes differ".into()));
    }
    if !verify_representation(ps, isotones, Mode::Isotone) {
        return Err(Error::InvalidInput("family does not represent the preorder".into()));
    }
    if isotones.is_empty() {
        return Ok(alloc::vec![MonotoneFn::constant(n, rational(1, 2))?]);
    }
    let g = function::weighted_sum(isotones)?;
    let pairs = violating_pairs(ps);
    let mut family = alloc::vec![g.clone()];
    for gk in isotones {
        let mut needed = 1u64;
        for &(x, y) in &pairs {
            let delta = gk.value(x) - gk.value(y);
            if delta > Rational::zero() {
                needed = needed.max(smallest_n(&(g.value(y) - g.value(x)), &delta));
            }
        }
        push_unique(&mut family, blend(gk, &g, needed));
    }
    if !verify_representation(ps, &family, Mode::Utility) {
        return Err(Error::Internal("blended family is not a utility representation".into()));
    }
    Ok(family)
}

/// Continuous utilities `f₁, …, f_m` with `x ≤ y ⇔ ∀k, fₖ(x) ≤ fₖ(y)`.
pub fn utility_representation(ps: &PreorderedSpace) -> Result<Vec<MonotoneFn>> {
    if let Some(w) = regular_witness(ps) {
        return Err(Error::NotApplicable(format!("space is not regular: {w:?}")));
    }
    let isotones = isotone_representation(ps)?;
    utilities_from_isotones(ps, &isotones)
}

/// Exhaustive check over all ordered pairs.
pub fn verify_representation(ps: &PreorderedSpace, family: &[MonotoneFn], mode: Mode) -> bool {
    let n = ps.len();
    if family.iter().any(|f| f.len() != n) {
        return false;
    }
    let o = ps.order();
    let represents = (0..n).all(|x| (0..n).all(|y| o.le(x, y) == family.iter().all(|f| f.value(x) <= f.value(y))));
    represents
        && match mode {
            Mode::Represent => true,
            Mode::Isotone => family.iter().all(|f| is_continuous(ps, f) && is_isotone(ps, f)),
            Mode::Utility => family.iter().all(|f| is_continuous(ps, f) && is_utility(ps, f)),
        }
}

/// First ordered pair on which the family and the preorder disagree.
pub fn first_unrepresented_pair(ps: &PreorderedSpace, family: &[MonotoneFn]) -> Option<(usize, usize)> {
    let n = ps.len();
    let o = ps.order();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| o.le(x, y) != family.iter().all(|f| f.value(x) <= f.value(y)))
}

/// Some member puts `x` strictly above `y`.
pub fn separated_by(family: &[MonotoneFn], x: usize, y: usize) -> bool {
    family.iter().any(|f| f.value(x) > f.value(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> PreorderedSpace {
        PreorderedSpace::from_names(&["a", "b"], &[&["a"], &["b"]], &[("a", "b")]).unwrap()
    }

    fn antichain2() -> PreorderedSpace {
        PreorderedSpace::from_names(&["a", "b"], &[&["a"], &["b"]], &[]).unwrap()
    }

    fn crown() -> PreorderedSpace {
        PreorderedSpace::from_names(
            &["a", "b", "c", "d"],
            &[&["a"], &["b"], &["c"], &["d"]],
            &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap()
    }

    fn indifference() -> PreorderedSpace {
        PreorderedSpace::from_names(&["a", "b"], &[], &[("a", "b"), ("b", "a")]).unwrap()
    }

    #[test]
    fn isotone_representation_examples() {
        assert!(isotone_representation(&indifference()).unwrap().is_empty());

        let c = chain2();
        let g = isotone_representation(&c).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].values(), [rational(0, 1), rational(1, 1)]);
        assert!(verify_representation(&c, &g, Mode::Isotone));

        let a = antichain2();
        let g = isotone_representation(&a).unwrap();
        assert_eq!(g.len(), 2);
        assert!(verify_representation(&a, &g, Mode::Represent));
    }

    #[test]
    fn isotone_representation_needs_semiclosed() {
        let s = PreorderedSpace::from_names(&["a", "b"], &[&["a"]], &[]).unwrap();
        assert!(matches!(isotone_representation(&s), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn schedule_index() {
        let one = rational(1, 1);
        assert_eq!(smallest_n(&rational(-1, 2), &one), 1);
        assert_eq!(smallest_n(&rational(0, 1), &one), 2);
        assert_eq!(smallest_n(&rational(1, 2), &one), 2);
        assert_eq!(smallest_n(&rational(1, 1), &one), 3);
        assert_eq!(smallest_n(&rational(1, 1), &rational(1, 3)), 5);
    }

    #[test]
    fn utilities_examples() {
        let ind = indifference();
        let fam = utilities_from_isotones(&ind, &[]).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(verify_representation(&ind, &fam, Mode::Utility));

        let a = antichain2();
        let g = isotone_representation(&a).unwrap();
        let fam = utilities_from_isotones(&a, &g).unwrap();
        assert!(verify_representation(&a, &fam, Mode::Utility));
        assert!(separated_by(&fam, 0, 1) && separated_by(&fam, 1, 0));

        // Not a representation of the antichain.
        assert!(matches!(utilities_from_isotones(&a, &g[..1]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn utility_representation_examples() {
        let c = chain2();
        let fam = utility_representation(&c).unwrap();
        assert!(fam.iter().all(|f| f.value(0) < f.value(1)));

        let cr = crown();
        let fam = utility_representation(&cr).unwrap();
        assert!(verify_representation(&cr, &fam, Mode::Utility));
        assert!(fam.len() >= 2);

        let ind = indifference();
        let fam = utility_representation(&ind).unwrap();
        assert!(fam.iter().all(|f| f.value(0) == f.value(1)));
    }

    #[test]
    fn verify_representation_examples() {
        let c = chain2();
        let zero = MonotoneFn::constant(2, rational(0, 1)).unwrap();
        assert!(!verify_representation(&c, core::slice::from_ref(&zero), Mode::Represent));
        assert_eq!(first_unrepresented_pair(&c, &[zero]), Some((1, 0)));
        assert!(verify_representation(&indifference(), &[], Mode::Represent));
    }
}
