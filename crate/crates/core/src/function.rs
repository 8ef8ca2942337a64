//! Exact `[0,1]`-valued functions on finite preordered spaces.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::preorder::PreorderedSpace;
use crate::Rational;

/// A total map from point indices to exact rationals in `[0,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneFn {
    values: Vec<Rational>,
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl MonotoneFn {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| **v < Rational::zero() || **v > Rational::one()) {
            return Err(Error::InvalidInput(format!("value {v} outside [0,1]")));
        }
        Ok(MonotoneFn { values })
    }

    pub fn constant(n: usize, value: Rational) -> Result<Self> {
        Self::new(alloc::vec![value; n])
    }

    /// 0 on `zero`, 1 elsewhere.
    pub fn indicator_outside(n: usize, zero: PointSet) -> Self {
        MonotoneFn {
            values: (0..n).map(|x| if zero.contains(x) { Rational::zero() } else { Rational::one() }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, x: usize) -> &Rational {
        &self.values[x]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Points where the value satisfies `pred`.
    pub fn where_(&self, pred: impl Fn(&Rational) -> bool) -> PointSet {
        (0..self.len()).filter(|&x| pred(&self.values[x])).collect()
    }

    pub fn zero_set(&self) -> PointSet {
        self.where_(|v| v.is_zero())
    }

    pub fn one_set(&self) -> PointSet {
        self.where_(|v| v.is_one())
    }

    /// `f⁻¹([0, t])`.
    pub fn at_most(&self, t: &Rational) -> PointSet {
        self.where_(|v| v <= t)
    }

    /// `f⁻¹([t, 1])`.
    pub fn at_least(&self, t: &Rational) -> PointSet {
        self.where_(|v| v >= t)
    }

    /// Distinct values in increasing order.
    pub fn distinct_values(&self) -> Vec<Rational> {
        let mut vs = self.values.clone();
        vs.sort();
        vs.dedup();
        vs
    }

    /// The function on the members of `s` (subspace indexing).
    pub fn restrict(&self, s: PointSet) -> Self {
        MonotoneFn { values: s.iter().map(|x| self.values[x].clone()).collect() }
    }

    fn check_len(&self, ps: &PreorderedSpace) -> Result<()> {
        if self.len() != ps.len() {
            return Err(Error::InvalidInput(format!(
                "function has {} values, space has {} points",
                self.len(),
                ps.len()
            )));
        }
        Ok(())
    }
}

/// Continuity by open rays: for the midpoint `m` between each pair of
/// consecutive values, `f⁻¹([0,m))` and `f⁻¹((m,1])` must be open. Every
/// open subset of the (finite) range is a union of such rays and their
/// intersections.
pub fn is_continuous(ps: &PreorderedSpace, f: &MonotoneFn) -> bool {
    assert_eq!(f.len(), ps.len(), "function and space sizes differ");
    let t = ps.topology();
    let vals = f.distinct_values();
    vals.windows(2).all(|w| {
        let mid = (&w[0] + &w[1]) / Rational::from_integer(BigInt::from(2));
        t.is_open(f.where_(|v| *v < mid)) && t.is_open(f.where_(|v| *v > mid))
    })
}

/// Continuity by quasi-components: `f` is constant on each of them.
pub fn is_continuous_by_components(ps: &PreorderedSpace, f: &MonotoneFn) -> bool {
    assert_eq!(f.len(), ps.len(), "function and space sizes differ");
    ps.topology().quasi_components().iter().all(|c| {
        let mut it = c.iter();
        let first = it.next().map(|x| f.value(x));
        it.all(|x| Some(f.value(x)) == first)
    })
}

/// `x ≤ y ⇒ f(x) ≤ f(y)`.
pub fn is_isotone(ps: &PreorderedSpace, f: &MonotoneFn) -> bool {
    assert_eq!(f.len(), ps.len(), "function and space sizes differ");
    let o = ps.order();
    (0..ps.len()).all(|x| o.up_of(x).iter().all(|y| f.value(x) <= f.value(y)))
}

/// `x ∼ y ⇒ f(x) = f(y)` and `x < y ⇒ f(x) < f(y)`.
pub fn is_utility(ps: &PreorderedSpace, f: &MonotoneFn) -> bool {
    assert_eq!(f.len(), ps.len(), "function and space sizes differ");
    let o = ps.order();
    (0..ps.len())
        .all(|x| o.up_of(x).iter().all(|y| if o.le(y, x) { f.value(x) == f.value(y) } else { f.value(x) < f.value(y) }))
}

/// `α(x, y) = 1 / (1 + (1 − y)/x)`, i.e. `x / (x + 1 − y)`, extended by
/// `α(0, y) = 0` for `y < 1` and `α(x, 1) = 1` for `x > 0`. Undefined at the
/// corner `(0, 1)`.
pub fn alpha(x: &Rational, y: &Rational) -> Result<Rational> {
    if x.is_zero() && y.is_one() {
        return Err(Error::InvalidInput("α is undefined at the corner (0,1)".into()));
    }
    Ok(x / (x + Rational::one() - y))
}

/// `f = α(g, h)`: a continuous isotone function with `f⁻¹(0) = g⁻¹(0)` and
/// `f⁻¹(1) = h⁻¹(1)`.
pub fn combine_alpha(ps: &PreorderedSpace, g: &MonotoneFn, h: &MonotoneFn) -> Result<MonotoneFn> {
    g.check_len(ps)?;
    h.check_len(ps)?;
    for (name, f) in [("g", g), ("h", h)] {
        if !is_continuous(ps, f) || !is_isotone(ps, f) {
            return Err(Error::InvalidInput(format!("{name} is not continuous isotone")));
        }
    }
    let values = (0..ps.len())
        .map(|x| {
            alpha(g.value(x), h.value(x)).map_err(|_| Error::InvalidInput(format!("g = 0 and h = 1 at point {x}")))
        })
        .collect::<Result<Vec<_>>>()?;
    MonotoneFn::new(values)
}

/// `(Σ 2⁻ᵏ fₖ) / (Σ 2⁻ᵏ)` for `k = 1..m`.
///
/// The normalization keeps the range `[0,1]` at finite `m`, and makes the
/// result 0 exactly where every `fₖ` is 0 and 1 exactly where every `fₖ`
/// is 1.
pub fn weighted_sum(fs: &[MonotoneFn]) -> Result<MonotoneFn> {
    let first = fs.first().ok_or_else(|| Error::InvalidInput("weighted sum of no functions".into()))?;
    let n = first.len();
    if fs.iter().any(|f| f.len() != n) {
        return Err(Error::InvalidInput("functions over different point counts".into()));
    }
    let mut weight = Rational::one();
    let half = rational(1, 2);
    let mut total_weight = Rational::zero();
    let mut acc = alloc::vec![Rational::zero(); n];
    for f in fs {
        weight = &weight * &half;
        total_weight += &weight;
        for (a, v) in acc.iter_mut().zip(f.values()) {
            *a += &weight * v;
        }
    }
    MonotoneFn::new(acc.into_iter().map(|a| a / &total_weight).collect())
}

/// `(1 − 1/n)·gₖ + g/n`.
pub fn blend(gk: &MonotoneFn, g: &MonotoneFn, n: u64) -> MonotoneFn {
    let inv = Rational::new(BigInt::one(), BigInt::from(n));
    let keep = Rational::one() - &inv;
    MonotoneFn { values: gk.values().iter().zip(g.values()).map(|(a, b)| &keep * a + &inv * b).collect() }
}
