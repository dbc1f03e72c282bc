//! Deciders for the fuzzy hyperideal notions.
//!
//! Each returns a [`ClassReport`]; on failure it carries the lexicographically
//! least violating tuple, checked condition by condition in order.
//!
//! The quantified `(α, β)` conditions range over thresholds in a
//! [`ThresholdDomain`]. For every tuple the hypothesis region of each variable
//! is a union of boxes, and the conclusion only sees the aggregate threshold
//! (`rmin` for sums, `rmax` for products). So it is enough to enumerate the
//! representative grid of the fuzzy set, keep the points that are
//! achievable as such an aggregate, and test the conclusion there.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperstructure::{is_hyperideal, tuples, Element, KrasnerHyperring};
use crate::interval::{IntervalValue, QuasiConvention};
use crate::ivfuzzy::{IVFuzzySet, PointRelation};
use crate::rational::Rational;
use crate::region::{achievable, Aggregate, BoxRegion, Region, Span};

/// Which thresholds the quantified definitions range over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdDomain {
    /// Nonzero intervals comparable with `[0.5, 0.5]`: either `t <= [0.5,0.5]`
    /// or `t > [0.5,0.5]`.
    #[default]
    HalfComparable,
    /// Every interval other than `[0,0]`.
    Interval,
}

impl ThresholdDomain {
    pub(crate) fn region(self) -> Region {
        let half = Rational::HALF;
        match self {
            ThresholdDomain::Interval => Region::nonzero(),
            ThresholdDomain::HalfComparable => Region::from_boxes(vec![
                BoxRegion::new(Span::closed(Rational::ZERO, half), Span::open_closed(Rational::ZERO, half)),
                BoxRegion::new(Span::closed(half, Rational::ONE), Span::open_closed(half, Rational::ONE)),
            ]),
        }
    }

    pub fn contains(self, t: &IntervalValue) -> bool {
        !t.is_bottom()
            && match self {
                ThresholdDomain::Interval => true,
                ThresholdDomain::HalfComparable => t.comparable(&IntervalValue::HALF),
            }
    }
}

/// Reading of the quantified definitions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Semantics {
    pub domain: ThresholdDomain,
    pub convention: QuasiConvention,
}

/// A hypothesis/conclusion pair; `α = ∈∧q` is rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaBeta {
    alpha: PointRelation,
    beta: PointRelation,
}

impl AlphaBeta {
    pub fn new(alpha: PointRelation, beta: PointRelation) -> Result<Self> {
        if alpha == PointRelation::InAndQ {
            return Err(Error::UnsupportedAlpha);
        }
        Ok(AlphaBeta { alpha, beta })
    }

    pub fn alpha(&self) -> PointRelation {
        self.alpha
    }

    pub fn beta(&self) -> PointRelation {
        self.beta
    }
}

impl fmt::Display for AlphaBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// Thresholds `s1 < s2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdPair {
    s1: IntervalValue,
    s2: IntervalValue,
}

impl ThresholdPair {
    pub fn new(s1: IntervalValue, s2: IntervalValue) -> Result<Self> {
        if !s1.lt(&s2) {
            return Err(Error::MalformedThresholds(format!("need {s1} < {s2}")));
        }
        Ok(ThresholdPair { s1, s2 })
    }

    pub fn s1(&self) -> IntervalValue {
        self.s1
    }

    pub fn s2(&self) -> IntervalValue {
        self.s2
    }

    /// `s1 < s <= s2`.
    pub fn contains(&self, s: &IntervalValue) -> bool {
        self.s1.lt(s) && s.le(&self.s2)
    }
}

/// Whether conditions are checked as printed or in their corrected form,
/// which clips the product side with `rmin` instead of folding the upper
/// threshold into the `rmax`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    PaperLiteral,
    #[default]
    Corrected,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::PaperLiteral => "paper-literal",
            Variant::Corrected => "corrected",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "paper-literal" | "paperliteral" | "literal" => Ok(Variant::PaperLiteral),
            "corrected" => Ok(Variant::Corrected),
            _ => Err(Error::Parse(format!("unknown variant {s:?}; expected paper-literal or corrected"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Sum,
    Negation,
    Product,
    Level,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    /// Label of the violated condition, e.g. `"condition (iii2)"`.
    pub anchor: String,
    /// The offending argument tuple, or the offending level set.
    pub elements: Vec<Element>,
    /// Element the conclusion fails at, when there is one.
    pub target: Option<Element>,
    /// Compared sides, or the threshold the conclusion fails for.
    pub values: Vec<IntervalValue>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{} fails at ({})", self.anchor, elems.join(", "))?;
        if let Some(t) = self.target {
            write!(f, " -> {t}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub verdict: bool,
    pub violation: Option<Violation>,
}

impl ClassReport {
    pub fn pass() -> Self {
        ClassReport { verdict: true, violation: None }
    }

    pub fn fail(v: Violation) -> Self {
        ClassReport { verdict: false, violation: Some(v) }
    }

    fn from_violation(v: Option<Violation>) -> Self {
        match v {
            Some(v) => Self::fail(v),
            None => Self::pass(),
        }
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => f.write_str("holds"),
            Some(v) => write!(f, "fails: {v}"),
        }
    }
}

fn prepare(r: &KrasnerHyperring, a: &IVFuzzySet) -> Result<()> {
    r.require_validated()?;
    a.require_size(r.size())
}

fn rmin_of(a: &IVFuzzySet, xs: &[Element]) -> IntervalValue {
    xs.iter().map(|&x| a.mu(x)).reduce(|p, q| p.meet(&q)).expect("nonempty tuple")
}

fn rmax_of(a: &IVFuzzySet, xs: &[Element]) -> IntervalValue {
    xs.iter().map(|&x| a.mu(x)).reduce(|p, q| p.join(&q)).expect("nonempty tuple")
}

/// Three pointwise inequalities in the shape shared by most notions:
/// a sum condition on `(rmin μ(a_i), rinf μ(f(a)))`, a negation condition
/// on `(μ(b), μ(-b))` and a product condition on `(rmax μ(b_i), μ(g(b)))`.
pub(crate) struct LatticeConditions<S, N, P> {
    pub sum: S,
    pub neg: N,
    pub prod: P,
    pub anchors: [&'static str; 3],
}

impl<S, N, P> LatticeConditions<S, N, P>
where
    S: Fn(&IntervalValue, &IntervalValue) -> bool,
    N: Fn(&IntervalValue, &IntervalValue) -> bool,
    P: Fn(&IntervalValue, &IntervalValue) -> bool,
{
    pub(crate) fn check(&self, r: &KrasnerHyperring, a: &IVFuzzySet) -> Result<ClassReport> {
        prepare(r, a)?;
        let detail = |x: &IntervalValue, y: &IntervalValue| format!("left side {x}, right side {y}");
        for t in tuples(r.size(), r.m()) {
            let out = r.f(&t);
            let x = rmin_of(a, &t);
            let y = out.iter().map(|e| a.mu(e)).reduce(|p, q| p.meet(&q)).expect("nonempty hyperoperation");
            if !(self.sum)(&x, &y) {
                let target = out.iter().find(|&e| !(self.sum)(&x, &a.mu(e)));
                return Ok(ClassReport::fail(Violation {
                    condition: Condition::Sum,
                    anchor: self.anchors[0].into(),
                    elements: t,
                    target,
                    values: vec![x, y],
                    detail: detail(&x, &y),
                }));
            }
        }
        for b in 0..r.size() {
            let (x, y) = (a.mu(b), a.mu(r.neg(b)));
            if !(self.neg)(&x, &y) {
                return Ok(ClassReport::fail(Violation {
                    condition: Condition::Negation,
                    anchor: self.anchors[1].into(),
                    elements: vec![b],
                    target: Some(r.neg(b)),
                    values: vec![x, y],
                    detail: detail(&x, &y),
                }));
            }
        }
        for t in tuples(r.size(), r.n()) {
            let g = r.g(&t);
            let (x, y) = (rmax_of(a, &t), a.mu(g));
            if !(self.prod)(&x, &y) {
                return Ok(ClassReport::fail(Violation {
                    condition: Condition::Product,
                    anchor: self.anchors[2].into(),
                    elements: t,
                    target: Some(g),
                    values: vec![x, y],
                    detail: detail(&x, &y),
                }));
            }
        }
        Ok(ClassReport::pass())
    }
}

/// Ordinary interval-valued fuzzy hyperideal.
pub fn is_ordinary(r: &KrasnerHyperring, a: &IVFuzzySet) -> Result<ClassReport> {
    LatticeConditions {
        sum: |x: &IntervalValue, y: &IntervalValue| x.le(y),
        neg: |x: &IntervalValue, y: &IntervalValue| x.le(y),
        prod: |x: &IntervalValue, y: &IntervalValue| x.le(y),
        anchors: ["condition (i)", "condition (ii)", "condition (iii)"],
    }
    .check(r, a)
}

/// Closed-form test for `(∈, ∈∨q)`.
pub fn is_in_invq_closed(r: &KrasnerHyperring, a: &IVFuzzySet, variant: Variant) -> Result<ClassReport> {
    let half = IntervalValue::HALF;
    LatticeConditions {
        sum: |x: &IntervalValue, y: &IntervalValue| x.meet(&half).le(y),
        neg: |x: &IntervalValue, y: &IntervalValue| x.meet(&half).le(y),
        prod: |x: &IntervalValue, y: &IntervalValue| match variant {
            Variant::PaperLiteral => x.join(&half).le(y),
            Variant::Corrected => x.meet(&half).le(y),
        },
        anchors: ["condition (i2)", "condition (ii2)", "condition (iii2)"],
    }
    .check(r, a)
}

/// Fuzzy hyperideal with thresholds `(s1, s2)`.
pub fn is_threshold(r: &KrasnerHyperring, a: &IVFuzzySet, th: &ThresholdPair, variant: Variant) -> Result<ClassReport> {
    let (s1, s2) = (th.s1, th.s2);
    LatticeConditions {
        sum: |x: &IntervalValue, y: &IntervalValue| x.meet(&s2).le(&y.join(&s1)),
        neg: |x: &IntervalValue, y: &IntervalValue| x.meet(&s2).le(&y.join(&s1)),
        prod: |x: &IntervalValue, y: &IntervalValue| match variant {
            Variant::PaperLiteral => x.join(&s2).le(&y.join(&s1)),
            Variant::Corrected => x.meet(&s2).le(&y.join(&s1)),
        },
        anchors: ["threshold condition (1)", "threshold condition (2)", "threshold condition (3)"],
    }
    .check(r, a)
}

/// The three `rmax` conditions equivalent to all level sets above
/// `[0.5, 0.5]` being hyperideals.
pub fn is_upper_half(r: &KrasnerHyperring, a: &IVFuzzySet) -> Result<ClassReport> {
    let half = IntervalValue::HALF;
    LatticeConditions {
        sum: |x: &IntervalValue, y: &IntervalValue| x.le(&y.join(&half)),
        neg: |x: &IntervalValue, y: &IntervalValue| x.le(&y.join(&half)),
        prod: |x: &IntervalValue, y: &IntervalValue| x.le(&y.join(&half)),
        anchors: ["upper condition (1)", "upper condition (2)", "upper condition (3)"],
    }
    .check(r, a)
}

/// Quantified `(α, β)` test with the default semantics.
pub fn is_alpha_beta(r: &KrasnerHyperring, a: &IVFuzzySet, ab: AlphaBeta) -> Result<ClassReport> {
    is_alpha_beta_with(r, a, ab, &Semantics::default())
}

pub fn is_alpha_beta_with(r: &KrasnerHyperring, a: &IVFuzzySet, ab: AlphaBeta, sem: &Semantics) -> Result<ClassReport> {
    prepare(r, a)?;
    let conv = sem.convention;
    let domain = sem.domain.region();
    let hyps: Vec<Region> =
        (0..r.size()).map(|x| Region::of_relation(ab.alpha, &a.mu(x), conv).intersect(&domain)).collect();
    let grid = a.representative_grid();
    let fails: Vec<Vec<bool>> =
        (0..r.size()).map(|x| grid.iter().map(|s| !ab.beta.holds(&a.mu(x), s, conv)).collect()).collect();
    let first_failure = |reach: &[bool], target: Element| (0..grid.len()).find(|&k| reach[k] && fails[target][k]);
    let detail = |s: &IntervalValue, target: Element| {
        format!("threshold {s} is reachable but F({target}; {s}) {} A fails (μ({target}) = {})", ab.beta, a.mu(target))
    };

    let conditions = [
        (Condition::Sum, "condition (1)", r.m(), Aggregate::Min),
        (Condition::Product, "condition (3)", r.n(), Aggregate::Max),
    ];
    for (idx, (condition, anchor, arity, agg)) in conditions.into_iter().enumerate() {
        if idx == 1 {
            for b in 0..r.size() {
                let target = r.neg(b);
                let reach: Vec<bool> = grid.iter().map(|s| hyps[b].contains(s)).collect();
                if let Some(k) = first_failure(&reach, target) {
                    return Ok(ClassReport::fail(Violation {
                        condition: Condition::Negation,
                        anchor: "condition (2)".into(),
                        elements: vec![b],
                        target: Some(target),
                        values: vec![grid[k]],
                        detail: detail(&grid[k], target),
                    }));
                }
            }
        }
        let mut cache: HashMap<Vec<Element>, Vec<bool>> = HashMap::new();
        for t in tuples(r.size(), arity) {
            let mut key = t.clone();
            key.sort_unstable();
            let reach = cache.entry(key).or_insert_with_key(|key| {
                let regions: Vec<&Region> = key.iter().map(|&x| &hyps[x]).collect();
                grid.iter().map(|s| achievable(&regions, s, agg)).collect()
            });
            let targets: Vec<Element> = match condition {
                Condition::Sum => r.f(&t).to_vec(),
                _ => vec![r.g(&t)],
            };
            for target in targets {
                if let Some(k) = first_failure(reach, target) {
                    return Ok(ClassReport::fail(Violation {
                        condition,
                        anchor: anchor.into(),
                        elements: t,
                        target: Some(target),
                        values: vec![grid[k]],
                        detail: detail(&grid[k], target),
                    }));
                }
            }
        }
    }
    Ok(ClassReport::pass())
}

/// Range of thresholds for [`level_criterion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelRange {
    /// `[0,0] < s <= [0.5,0.5]`.
    Lower,
    /// `[0.5,0.5] < s <= [1,1]`.
    Upper,
    /// `[0,0] < s <= [1,1]`.
    Full,
    /// `s1 < s <= s2`.
    Custom(ThresholdPair),
}

impl LevelRange {
    pub fn pair(&self) -> ThresholdPair {
        let (s1, s2) = match self {
            LevelRange::Lower => (IntervalValue::BOTTOM, IntervalValue::HALF),
            LevelRange::Upper => (IntervalValue::HALF, IntervalValue::TOP),
            LevelRange::Full => (IntervalValue::BOTTOM, IntervalValue::TOP),
            LevelRange::Custom(th) => return *th,
        };
        ThresholdPair { s1, s2 }
    }
}

/// Thresholds of the representative grid that fall in `range`, refined by
/// the range endpoints so every cell of the range is represented.
pub fn level_thresholds(a: &IVFuzzySet, range: &LevelRange) -> Vec<IntervalValue> {
    let th = range.pair();
    let extra = [th.s1.lo(), th.s1.hi(), th.s2.lo(), th.s2.hi()];
    crate::ivfuzzy::grid(&a.critical_thresholds_with(&extra)).into_iter().filter(|s| th.contains(s)).collect()
}

/// Whether every nonempty level set for thresholds in `range` is a hyperideal.
pub fn level_criterion(r: &KrasnerHyperring, a: &IVFuzzySet, range: &LevelRange) -> Result<ClassReport> {
    prepare(r, a)?;
    let mut seen: HashMap<u64, bool> = HashMap::new();
    for s in level_thresholds(a, range) {
        let level = a.level_set(&s);
        if level.is_empty() || seen.get(&level.bits()) == Some(&true) {
            continue;
        }
        match is_hyperideal(r, level)? {
            None => {
                seen.insert(level.bits(), true);
            }
            Some(why) => {
                return Ok(ClassReport::from_violation(Some(Violation {
                    condition: Condition::Level,
                    anchor: "level subset".into(),
                    elements: level.to_vec(),
                    target: None,
                    values: vec![s],
                    detail: format!("level set {level} at {s} is not a hyperideal: {why}"),
                })));
            }
        }
    }
    Ok(ClassReport::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperstructure::ElementSet;
    use crate::interval::iv;
    use crate::ivfuzzy::characteristic;
    use crate::oracle::catalog::{paper_24, zmod};
    use PointRelation::*;

    fn tenths(lo: i64, hi: i64) -> IntervalValue {
        iv((lo, 10), (hi, 10))
    }

    fn example() -> IVFuzzySet {
        IVFuzzySet::new(vec![tenths(8, 9), tenths(8, 9), tenths(7, 8), tenths(6, 7)]).unwrap()
    }

    fn ab(a: PointRelation, b: PointRelation) -> AlphaBeta {
        AlphaBeta::new(a, b).unwrap()
    }

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn example_is_in_invq_but_not_ordinary() {
        let r = paper_24();
        let a = example();
        assert!(is_alpha_beta(&r, &a, ab(In, InOrQ)).unwrap().verdict);
        assert!(is_in_invq_closed(&r, &a, Variant::PaperLiteral).unwrap().verdict);
        assert!(is_in_invq_closed(&r, &a, Variant::Corrected).unwrap().verdict);
        let ord = is_ordinary(&r, &a).unwrap();
        let v = ord.violation.unwrap();
        assert_eq!(v.condition, Condition::Sum);
        assert_eq!(v.elements, vec![1, 2]);
        assert_eq!(v.target, Some(3));
        assert_eq!(v.values, vec![tenths(7, 8), tenths(6, 7)]);
        assert_eq!(v.anchor, "condition (i)");
    }

    #[test]
    fn full_interval_domain_rejects_the_example() {
        let sem = Semantics { domain: ThresholdDomain::Interval, ..Semantics::default() };
        let report = is_alpha_beta_with(&paper_24(), &example(), ab(In, InOrQ), &sem).unwrap();
        assert!(!report.verdict);
        let v = report.violation.unwrap();
        assert_eq!(v.elements, vec![1, 2]);
        assert!(!ThresholdDomain::HalfComparable.contains(&v.values[0]));
    }

    #[test]
    fn characteristic_functions_of_ideals() {
        let r = paper_24();
        for bits in 1u64..16 {
            let s = ElementSet::from_bits(bits);
            let chi = characteristic(s, 4).unwrap();
            let ideal = is_hyperideal(&r, s).unwrap().is_none();
            assert_eq!(is_alpha_beta(&r, &chi, ab(In, In)).unwrap().verdict, ideal, "{s}");
            assert_eq!(is_alpha_beta(&r, &chi, ab(In, InOrQ)).unwrap().verdict, ideal, "{s}");
            assert_eq!(is_ordinary(&r, &chi).unwrap().verdict, ideal, "{s}");
            assert_eq!(is_in_invq_closed(&r, &chi, Variant::Corrected).unwrap().verdict, ideal, "{s}");
            // The literal product clause demands μ(g) >= [0.5,0.5] everywhere g lands.
            let literal = is_in_invq_closed(&r, &chi, Variant::PaperLiteral).unwrap();
            let g_inside = tuples(4, 4).all(|t| s.contains(r.g(&t)));
            assert_eq!(literal.verdict, ideal && g_inside, "{s}");
        }
    }

    #[test]
    fn constants_separate_variants() {
        let r = paper_24();
        let c = IVFuzzySet::constant(4, tenths(2, 2)).unwrap();
        assert!(is_ordinary(&r, &c).unwrap().verdict);
        let lit = is_in_invq_closed(&r, &c, Variant::PaperLiteral).unwrap();
        assert_eq!(lit.violation.unwrap().anchor, "condition (iii2)");
        assert!(is_in_invq_closed(&r, &c, Variant::Corrected).unwrap().verdict);
    }

    #[test]
    fn threshold_specializations() {
        let r = paper_24();
        let a = example();
        let full = ThresholdPair::new(IntervalValue::BOTTOM, IntervalValue::TOP).unwrap();
        let lower = ThresholdPair::new(IntervalValue::BOTTOM, IntervalValue::HALF).unwrap();
        assert!(!is_threshold(&r, &a, &full, Variant::PaperLiteral).unwrap().verdict);
        assert_eq!(
            is_threshold(&r, &a, &full, Variant::Corrected).unwrap().verdict,
            is_ordinary(&r, &a).unwrap().verdict
        );
        assert!(is_threshold(&r, &a, &lower, Variant::Corrected).unwrap().verdict);
        assert!(matches!(
            ThresholdPair::new(IntervalValue::HALF, IntervalValue::HALF),
            Err(Error::MalformedThresholds(_))
        ));
        assert!(ThresholdPair::new(tenths(2, 9), tenths(3, 8)).is_err());
    }

    #[test]
    fn level_criteria() {
        let r = paper_24();
        assert!(level_criterion(&r, &example(), &LevelRange::Lower).unwrap().verdict);
        let chi = characteristic(set(&[0, 3]), 4).unwrap();
        let report = level_criterion(&r, &chi, &LevelRange::Lower).unwrap();
        assert_eq!(report.violation.unwrap().elements, vec![0, 3]);
        assert_eq!(
            level_criterion(&r, &example(), &LevelRange::Full).unwrap().verdict,
            is_ordinary(&r, &example()).unwrap().verdict
        );
    }

    #[test]
    fn alpha_must_not_be_conjunction() {
        assert_eq!(AlphaBeta::new(InAndQ, In), Err(Error::UnsupportedAlpha));
        assert!(AlphaBeta::new(Q, InAndQ).is_ok());
    }

    #[test]
    fn unvalidated_or_mismatched_inputs() {
        let raw = crate::oracle::catalog::paper_24_unvalidated();
        assert_eq!(is_ordinary(&raw, &example()), Err(Error::NotValidated));
        let z = zmod(5, 2, 2).unwrap();
        assert_eq!(is_ordinary(&z, &example()), Err(Error::CarrierMismatch { expected: 5, got: 4 }));
    }

    #[test]
    fn lowering_a_sum_value_flips_the_verdict() {
        let r = paper_24();
        let mut a = example();
        // f(1, 2) = {3}; push μ(3) below rmin{μ(1), μ(2), [0.5,0.5]}.
        a.set(3, tenths(4, 4));
        let report = is_alpha_beta(&r, &a, ab(In, InOrQ)).unwrap();
        assert!(!report.verdict);
        assert_eq!(report.violation.unwrap().condition, Condition::Sum);
    }

    #[test]
    fn reports_are_deterministic() {
        let r = zmod(4, 2, 4).unwrap();
        let a = IVFuzzySet::new(vec![tenths(9, 9), tenths(1, 6), tenths(4, 7), tenths(2, 3)]).unwrap();
        let once = is_alpha_beta(&r, &a, ab(Q, InOrQ)).unwrap();
        let twice = is_alpha_beta(&r, &a, ab(Q, InOrQ)).unwrap();
        assert_eq!(once, twice);
        assert_eq!(serde_json::to_string(&once).unwrap(), serde_json::to_string(&twice).unwrap());
    }
}
