//! Threshold regions as finite unions of boxes.
//!
//! A box constrains the lower and upper endpoint of a threshold `t`
//! separately, each to a span with open or closed ends, together with the
//! standing requirement `t⁻ <= t⁺`. Hypothesis regions `{ t : F(x; t) α A }`
//! and the quantification domain are all of this shape, so asking whether an
//! aggregate `rmin`/`rmax` of independently chosen thresholds can land on a
//! given `r` reduces to a handful of box queries.

use crate::interval::{IntervalValue, QuasiConvention};
use crate::ivfuzzy::PointRelation;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Bound {
    value: Rational,
    closed: bool,
}

/// A possibly empty subinterval of the reals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Span {
    lo: Bound,
    hi: Bound,
}

impl Span {
    pub(crate) fn new(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Self {
        Span { lo: Bound { value: lo, closed: lo_closed }, hi: Bound { value: hi, closed: hi_closed } }
    }

    pub(crate) fn closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, true, hi, true)
    }

    /// `(lo, hi]`.
    pub(crate) fn open_closed(lo: Rational, hi: Rational) -> Self {
        Self::new(lo, false, hi, true)
    }

    pub(crate) fn unit() -> Self {
        Self::closed(Rational::ZERO, Rational::ONE)
    }

    pub(crate) fn point(x: Rational) -> Self {
        Self::closed(x, x)
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.lo.value > self.hi.value || (self.lo.value == self.hi.value && !(self.lo.closed && self.hi.closed))
    }

    pub(crate) fn contains(&self, x: Rational) -> bool {
        let above = x > self.lo.value || (x == self.lo.value && self.lo.closed);
        let below = x < self.hi.value || (x == self.hi.value && self.hi.closed);
        above && below
    }

    pub(crate) fn intersect(&self, other: &Span) -> Span {
        let lo = match self.lo.value.cmp(&other.lo.value) {
            std::cmp::Ordering::Greater => self.lo,
            std::cmp::Ordering::Less => other.lo,
            std::cmp::Ordering::Equal => Bound { value: self.lo.value, closed: self.lo.closed && other.lo.closed },
        };
        let hi = match self.hi.value.cmp(&other.hi.value) {
            std::cmp::Ordering::Less => self.hi,
            std::cmp::Ordering::Greater => other.hi,
            std::cmp::Ordering::Equal => Bound { value: self.hi.value, closed: self.hi.closed && other.hi.closed },
        };
        Span { lo, hi }
    }
}

/// `{ t : t⁻ ∈ lower, t⁺ ∈ upper, t⁻ <= t⁺ }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct BoxRegion {
    lower: Span,
    upper: Span,
}

impl BoxRegion {
    pub(crate) fn new(lower: Span, upper: Span) -> Self {
        BoxRegion { lower, upper }
    }

    fn intersect(&self, other: &BoxRegion) -> BoxRegion {
        BoxRegion { lower: self.lower.intersect(&other.lower), upper: self.upper.intersect(&other.upper) }
    }

    /// Whether some `t` in the box has `t⁻ ∈ lc` and `t⁺ ∈ uc`.
    fn meets(&self, lc: &Span, uc: &Span) -> bool {
        let l = self.lower.intersect(lc);
        let u = self.upper.intersect(uc);
        if l.is_empty() || u.is_empty() {
            return false;
        }
        l.lo.value < u.hi.value || (l.lo.value == u.hi.value && l.lo.closed && u.hi.closed)
    }

    fn contains(&self, t: &IntervalValue) -> bool {
        self.lower.contains(t.lo()) && self.upper.contains(t.hi())
    }
}

/// A finite union of boxes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Region(Vec<BoxRegion>);

impl Region {
    pub(crate) fn from_boxes(boxes: Vec<BoxRegion>) -> Self {
        Region(boxes.into_iter().filter(|b| !b.lower.is_empty() && !b.upper.is_empty()).collect())
    }

    /// All thresholds other than `[0,0]`.
    pub(crate) fn nonzero() -> Self {
        Region::from_boxes(vec![BoxRegion::new(Span::unit(), Span::open_closed(Rational::ZERO, Rational::ONE))])
    }

    pub(crate) fn union(mut self, other: Region) -> Self {
        self.0.extend(other.0);
        self
    }

    pub(crate) fn intersect(&self, other: &Region) -> Region {
        let mut out = Vec::new();
        for a in &self.0 {
            for b in &other.0 {
                out.push(a.intersect(b));
            }
        }
        Region::from_boxes(out)
    }

    pub(crate) fn meets(&self, lc: &Span, uc: &Span) -> bool {
        self.0.iter().any(|b| b.meets(lc, uc))
    }

    pub(crate) fn contains(&self, t: &IntervalValue) -> bool {
        self.0.iter().any(|b| b.contains(t))
    }

    /// `{ t : F(x; t) rel A }` for a membership value `mu`.
    pub(crate) fn of_relation(rel: PointRelation, mu: &IntervalValue, conv: QuasiConvention) -> Region {
        let belongs = || Region::from_boxes(vec![BoxRegion::new(Span::closed(Rational::ZERO, mu.lo()), Span::closed(Rational::ZERO, mu.hi()))]);
        // Paper: t⁻ >= 1 - μ⁻ and t⁺ > 1 - μ⁺, which for well-formed intervals
        // is the same as both sums at least one and not both exactly one.
        let quasi = || {
            let lower = match conv {
                QuasiConvention::Paper => Span::closed(mu.lo().one_minus(), Rational::ONE),
                QuasiConvention::BothStrict => Span::open_closed(mu.lo().one_minus(), Rational::ONE),
            };
            Region::from_boxes(vec![BoxRegion::new(lower, Span::open_closed(mu.hi().one_minus(), Rational::ONE))])
        };
        match rel {
            PointRelation::In => belongs(),
            PointRelation::Q => quasi(),
            PointRelation::InOrQ => belongs().union(quasi()),
            PointRelation::InAndQ => belongs().intersect(&quasi()),
        }
    }
}

/// How the per-variable thresholds combine into the conclusion threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Aggregate {
    Min,
    Max,
}

/// Whether thresholds `t_k ∈ regions[k]` exist whose aggregate is exactly `r`.
///
/// For `Min`: every `t_k >= r`, some `t_i` attains `r⁻` and some `t_j`
/// attains `r⁺` (possibly the same one). `Max` is the mirror image.
pub(crate) fn achievable(regions: &[&Region], r: &IntervalValue, agg: Aggregate) -> bool {
    let (lo, hi) = (r.lo(), r.hi());
    let (bound_lo, bound_hi) = match agg {
        Aggregate::Min => (Span::closed(lo, Rational::ONE), Span::closed(hi, Rational::ONE)),
        Aggregate::Max => (Span::closed(Rational::ZERO, lo), Span::closed(Rational::ZERO, hi)),
    };
    let (at_lo, at_hi) = (Span::point(lo), Span::point(hi));

    if !regions.iter().all(|h| h.meets(&bound_lo, &bound_hi)) {
        return false;
    }
    if regions.iter().any(|h| h.meets(&at_lo, &at_hi)) {
        return true;
    }
    let lo_hits: Vec<bool> = regions.iter().map(|h| h.meets(&at_lo, &bound_hi)).collect();
    let hi_hits: Vec<bool> = regions.iter().map(|h| h.meets(&bound_lo, &at_hi)).collect();
    (0..regions.len()).any(|i| lo_hits[i] && (0..regions.len()).any(|j| j != i && hi_hits[j]))
}
