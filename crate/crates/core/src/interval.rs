//! Interval numbers in D[0,1] and their lattice operations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A closed subinterval `[lo, hi]` of `[0, 1]` with exact endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalValue {
    lo: Rational,
    hi: Rational,
}

/// Result of comparing two interval values under the componentwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IvOrdering {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// How `x + y > [1,1]` is read.
///
/// `Paper` uses the strict order "`<=` and `!=`": both sums at least one and
/// not both equal to one. `BothStrict` needs each component sum above one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuasiConvention {
    #[default]
    Paper,
    BothStrict,
}

impl IntervalValue {
    pub const BOTTOM: IntervalValue = IntervalValue { lo: Rational::ZERO, hi: Rational::ZERO };
    pub const HALF: IntervalValue = IntervalValue { lo: Rational::HALF, hi: Rational::HALF };
    pub const TOP: IntervalValue = IntervalValue { lo: Rational::ONE, hi: Rational::ONE };

    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo.in_unit() && hi.in_unit() && lo <= hi {
            Ok(IntervalValue { lo, hi })
        } else {
            Err(Error::MalformedInterval { lo: lo.to_string(), hi: hi.to_string() })
        }
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: Rational) -> Result<Self> {
        Self::new(x, x)
    }

    pub fn lo(&self) -> Rational {
        self.lo
    }

    pub fn hi(&self) -> Rational {
        self.hi
    }

    pub fn is_bottom(&self) -> bool {
        *self == Self::BOTTOM
    }

    /// Componentwise `<=`.
    pub fn le(&self, other: &Self) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    /// Strict order: `<=` and `!=`.
    pub fn lt(&self, other: &Self) -> bool {
        self.le(other) && self != other
    }

    pub fn compare(&self, other: &Self) -> IvOrdering {
        match (self.le(other), other.le(self)) {
            (true, true) => IvOrdering::Equal,
            (true, false) => IvOrdering::Less,
            (false, true) => IvOrdering::Greater,
            (false, false) => IvOrdering::Incomparable,
        }
    }

    pub fn comparable(&self, other: &Self) -> bool {
        self.compare(other) != IvOrdering::Incomparable
    }

    pub fn meet(&self, other: &Self) -> Self {
        IntervalValue { lo: self.lo.min(other.lo), hi: self.hi.min(other.hi) }
    }

    pub fn join(&self, other: &Self) -> Self {
        IntervalValue { lo: self.lo.max(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn scale(&self, k: Rational) -> Result<Self> {
        if !k.in_unit() {
            return Err(Error::ScalarOutOfRange(k.to_string()));
        }
        Ok(IntervalValue { lo: k * self.lo, hi: k * self.hi })
    }
}

pub fn iv_cmp(x: &IntervalValue, y: &IntervalValue) -> IvOrdering {
    x.compare(y)
}

/// Componentwise minimum of a nonempty list.
pub fn rmin(xs: &[IntervalValue]) -> Result<IntervalValue> {
    let (first, rest) = xs.split_first().ok_or(Error::EmptyCollection)?;
    Ok(rest.iter().fold(*first, |acc, x| acc.meet(x)))
}

/// Componentwise maximum of a nonempty list.
pub fn rmax(xs: &[IntervalValue]) -> Result<IntervalValue> {
    let (first, rest) = xs.split_first().ok_or(Error::EmptyCollection)?;
    Ok(rest.iter().fold(*first, |acc, x| acc.join(x)))
}

/// Infimum taken endpoint by endpoint over any finite collection.
pub fn rinf<I: IntoIterator<Item = IntervalValue>>(xs: I) -> Result<IntervalValue> {
    let mut it = xs.into_iter();
    let first = it.next().ok_or(Error::EmptyCollection)?;
    let (lo, hi) = it.fold((first.lo, first.hi), |(lo, hi), x| (lo.min(x.lo), hi.min(x.hi)));
    Ok(IntervalValue { lo, hi })
}

pub fn rsup<I: IntoIterator<Item = IntervalValue>>(xs: I) -> Result<IntervalValue> {
    let mut it = xs.into_iter();
    let first = it.next().ok_or(Error::EmptyCollection)?;
    let (lo, hi) = it.fold((first.lo, first.hi), |(lo, hi), x| (lo.max(x.lo), hi.max(x.hi)));
    Ok(IntervalValue { lo, hi })
}

pub fn iv_scale(k: Rational, x: &IntervalValue) -> Result<IntervalValue> {
    x.scale(k)
}

/// `x + y > [1,1]` with the sums kept unclamped.
pub fn iv_sum_exceeds_one(x: &IntervalValue, y: &IntervalValue) -> bool {
    sum_exceeds_one_with(x, y, QuasiConvention::Paper)
}

pub fn sum_exceeds_one_with(x: &IntervalValue, y: &IntervalValue, conv: QuasiConvention) -> bool {
    let lo = x.lo + y.lo;
    let hi = x.hi + y.hi;
    let one = Rational::ONE;
    match conv {
        QuasiConvention::Paper => lo >= one && hi >= one && !(lo == one && hi == one),
        QuasiConvention::BothStrict => lo > one && hi > one,
    }
}

impl fmt::Display for IntervalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for IntervalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"p/q,r/s"`; a single rational `"p/q"` gives the point interval.
impl FromStr for IntervalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        match s.split_once(',') {
            Some((a, b)) => IntervalValue::new(a.parse()?, b.parse()?),
            None => IntervalValue::point(s.parse()?),
        }
    }
}

impl Serialize for IntervalValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntervalValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [lo, hi] = <[Rational; 2]>::deserialize(deserializer)?;
        IntervalValue::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// Test and catalog helper; panics on malformed input.
pub fn iv(lo: (i64, i64), hi: (i64, i64)) -> IntervalValue {
    IntervalValue::new(Rational::new(lo.0, lo.1), Rational::new(hi.0, hi.1)).expect("well-formed interval")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn tenths(a: i64, b: i64) -> IntervalValue {
        iv((a, 10), (b, 10))
    }

    #[test]
    fn construction() {
        assert_eq!(IntervalValue::new(rat(0, 1), rat(0, 1)).unwrap(), IntervalValue::BOTTOM);
        let x = IntervalValue::new(rat(4, 5), rat(9, 10)).unwrap();
        assert_eq!(x, tenths(8, 9));
        assert!(matches!(
            IntervalValue::new(rat(1, 2), rat(1, 3)),
            Err(Error::MalformedInterval { .. })
        ));
        assert!(IntervalValue::new(rat(-1, 2), rat(1, 3)).is_err());
        assert!(IntervalValue::new(rat(1, 2), rat(3, 2)).is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(iv_cmp(&tenths(3, 4), &tenths(3, 4)), IvOrdering::Equal);
        assert_eq!(iv_cmp(&tenths(6, 7), &tenths(7, 8)), IvOrdering::Less);
        assert_eq!(iv_cmp(&tenths(7, 8), &tenths(6, 7)), IvOrdering::Greater);
        assert_eq!(iv_cmp(&tenths(2, 9), &tenths(3, 8)), IvOrdering::Incomparable);
    }

    #[test]
    fn meets_and_joins() {
        assert_eq!(rmin(&[tenths(8, 9), tenths(7, 8)]).unwrap(), tenths(7, 8));
        assert_eq!(rmin(&[tenths(2, 9), tenths(3, 8)]).unwrap(), tenths(2, 8));
        let x = tenths(3, 6);
        assert_eq!(rmax(&[x, IntervalValue::BOTTOM]).unwrap(), x);
        assert_eq!(rmin(&[]), Err(Error::EmptyCollection));
        assert_eq!(rinf([tenths(8, 9), tenths(6, 7), tenths(7, 8)]).unwrap(), tenths(6, 7));
        assert_eq!(rsup([x]).unwrap(), x);
        assert_eq!(rinf(Vec::new()), Err(Error::EmptyCollection));
    }

    #[test]
    fn scaling() {
        let x = tenths(3, 7);
        assert_eq!(iv_scale(Rational::ONE, &x).unwrap(), x);
        assert_eq!(iv_scale(Rational::ZERO, &x).unwrap(), IntervalValue::BOTTOM);
        assert_eq!(iv_scale(rat(1, 2), &tenths(4, 8)).unwrap(), tenths(2, 4));
        assert!(matches!(iv_scale(rat(3, 2), &x), Err(Error::ScalarOutOfRange(_))));
    }

    // Brute check of x > [1,1] straight from the order definitions.
    fn strictly_above_one(lo: Rational, hi: Rational) -> bool {
        let le = Rational::ONE <= lo && Rational::ONE <= hi;
        let eq = lo == Rational::ONE && hi == Rational::ONE;
        le && !eq
    }

    #[test]
    fn quasi_coincidence_sum() {
        assert!(iv_sum_exceeds_one(&tenths(8, 9), &tenths(3, 3)));
        assert!(!iv_sum_exceeds_one(&IntervalValue::HALF, &IntervalValue::HALF));
        let (x, y) = (tenths(7, 7), tenths(3, 4));
        assert!(strictly_above_one(x.lo() + y.lo(), x.hi() + y.hi()));
        assert!(iv_sum_exceeds_one(&x, &y));
        assert!(!sum_exceeds_one_with(&x, &y, QuasiConvention::BothStrict));
    }

    #[test]
    fn parse_and_serde() {
        let x: IntervalValue = "4/5,9/10".parse().unwrap();
        assert_eq!(x, tenths(8, 9));
        assert_eq!("1/2".parse::<IntervalValue>().unwrap(), IntervalValue::HALF);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"["4/5","9/10"]"#);
        let back: IntervalValue = serde_json::from_str(r#"["8/10","9/10"]"#).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<IntervalValue>(r#"["1/2","1/3"]"#).is_err());
    }

    pub(crate) fn arb_interval() -> impl Strategy<Value = IntervalValue> {
        (1i64..=60).prop_flat_map(|den| (0..=den, 0..=den, Just(den))).prop_map(|(a, b, den)| {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            IntervalValue::new(rat(lo, den), rat(hi, den)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn lattice_laws(x in arb_interval(), y in arb_interval(), z in arb_interval()) {
            prop_assert_eq!(x.meet(&x), x);
            prop_assert_eq!(x.join(&x), x);
            prop_assert_eq!(x.meet(&y), y.meet(&x));
            prop_assert_eq!(x.join(&y), y.join(&x));
            prop_assert_eq!(x.meet(&y).meet(&z), x.meet(&y.meet(&z)));
            prop_assert_eq!(x.join(&y).join(&z), x.join(&y.join(&z)));
            prop_assert_eq!(x.meet(&x.join(&y)), x);
            prop_assert_eq!(x.join(&x.meet(&y)), x);
        }

        #[test]
        fn partial_order_with_meet_and_join(x in arb_interval(), y in arb_interval(), z in arb_interval()) {
            prop_assert!(x.le(&x));
            if x.le(&y) && y.le(&x) { prop_assert_eq!(x, y); }
            if x.le(&y) && y.le(&z) { prop_assert!(x.le(&z)); }
            let m = rmin(&[x, y]).unwrap();
            prop_assert!(m.le(&x) && m.le(&y));
            if z.le(&x) && z.le(&y) { prop_assert!(z.le(&m)); }
            let j = rmax(&[x, y]).unwrap();
            prop_assert!(x.le(&j) && y.le(&j));
            if x.le(&z) && y.le(&z) { prop_assert!(j.le(&z)); }
            prop_assert!(IntervalValue::BOTTOM.le(&x) && x.le(&IntervalValue::TOP));
        }

        #[test]
        fn fold_agrees_with_inf(xs in proptest::collection::vec(arb_interval(), 1..8)) {
            prop_assert_eq!(rmin(&xs).unwrap(), rinf(xs.iter().copied()).unwrap());
            prop_assert_eq!(rmax(&xs).unwrap(), rsup(xs.iter().copied()).unwrap());
        }

        #[test]
        fn unreduced_inputs_give_identical_results(a in 0i64..=10, b in 0i64..=10, k in 1i64..=7) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let reduced = IntervalValue::new(rat(lo, 10), rat(hi, 10)).unwrap();
            let scaled = IntervalValue::new(rat(lo * k, 10 * k), rat(hi * k, 10 * k)).unwrap();
            prop_assert_eq!(reduced, scaled);
            prop_assert_eq!(
                iv_sum_exceeds_one(&reduced, &IntervalValue::HALF),
                iv_sum_exceeds_one(&scaled, &IntervalValue::HALF)
            );
            prop_assert_eq!(serde_json::to_string(&reduced).unwrap(), serde_json::to_string(&scaled).unwrap());
        }

        #[test]
        fn sum_predicate_matches_order_definition(x in arb_interval(), y in arb_interval()) {
            prop_assert_eq!(
                iv_sum_exceeds_one(&x, &y),
                strictly_above_one(x.lo() + y.lo(), x.hi() + y.hi())
            );
        }
    }
}
