//! Interval-valued fuzzy sets, fuzzy points and level sets.
//!
//! Every predicate here compares a threshold `s` against a finite set of
//! constants: the endpoints of the membership values, their complements,
//! and `0`, `1/2`, `1`. Quantifying `s` over all of `D[0,1]` therefore
//! reduces to trying one representative per cell of the induced partition,
//! which is what [`IVFuzzySet::representative_grid`] provides.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperstructure::{Element, ElementSet, MAX_CARRIER};
use crate::interval::{sum_exceeds_one_with, IntervalValue, QuasiConvention};
use crate::rational::Rational;

/// Relation between a fuzzy point `F(x; s)` and a fuzzy set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PointRelation {
    #[serde(rename = "in")]
    In,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "invq")]
    InOrQ,
    #[serde(rename = "inandq")]
    InAndQ,
}

impl PointRelation {
    pub const ALL: [PointRelation; 4] = [PointRelation::In, PointRelation::Q, PointRelation::InOrQ, PointRelation::InAndQ];

    /// Whether a point of value `s` stands in this relation to a membership `mu`.
    pub fn holds(self, mu: &IntervalValue, s: &IntervalValue, conv: QuasiConvention) -> bool {
        let belongs = || s.le(mu);
        let quasi = || sum_exceeds_one_with(mu, s, conv);
        match self {
            PointRelation::In => belongs(),
            PointRelation::Q => quasi(),
            PointRelation::InOrQ => belongs() || quasi(),
            PointRelation::InAndQ => belongs() && quasi(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PointRelation::In => "in",
            PointRelation::Q => "q",
            PointRelation::InOrQ => "invq",
            PointRelation::InAndQ => "inandq",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PointRelation::In => "∈",
            PointRelation::Q => "q",
            PointRelation::InOrQ => "∈∨q",
            PointRelation::InAndQ => "∈∧q",
        }
    }
}

impl fmt::Display for PointRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for PointRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "in" | "∈" => Ok(PointRelation::In),
            "q" => Ok(PointRelation::Q),
            "invq" | "inorq" | "∈∨q" => Ok(PointRelation::InOrQ),
            "inandq" | "∈∧q" => Ok(PointRelation::InAndQ),
            _ => Err(Error::Parse(format!("unknown relation {s:?}; expected in, q, invq or inandq"))),
        }
    }
}

/// The fuzzy point `F(x; s)` with `s != [0,0]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IVFuzzyPoint {
    support: Element,
    value: IntervalValue,
}

impl IVFuzzyPoint {
    pub fn new(support: Element, value: IntervalValue) -> Result<Self> {
        if value.is_bottom() {
            return Err(Error::ZeroPointValue);
        }
        Ok(IVFuzzyPoint { support, value })
    }

    pub fn support(&self) -> Element {
        self.support
    }

    pub fn value(&self) -> IntervalValue {
        self.value
    }
}

/// A total map from a finite carrier to `D[0,1]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IVFuzzySet {
    mu: Vec<IntervalValue>,
}

impl IVFuzzySet {
    pub fn new(mu: Vec<IntervalValue>) -> Result<Self> {
        if mu.is_empty() || mu.len() > MAX_CARRIER {
            return Err(Error::InvalidStructure(format!("carrier size {} outside 1..={MAX_CARRIER}", mu.len())));
        }
        Ok(IVFuzzySet { mu })
    }

    pub fn constant(size: usize, value: IntervalValue) -> Result<Self> {
        Self::new(vec![value; size])
    }

    pub fn size(&self) -> usize {
        self.mu.len()
    }

    /// `μ(x)`. Panics when `x` is outside the carrier.
    pub fn mu(&self, x: Element) -> IntervalValue {
        self.mu[x]
    }

    pub fn values(&self) -> &[IntervalValue] {
        &self.mu
    }

    pub fn set(&mut self, x: Element, value: IntervalValue) {
        self.mu[x] = value;
    }

    pub fn require_size(&self, size: usize) -> Result<()> {
        if self.size() == size {
            Ok(())
        } else {
            Err(Error::CarrierMismatch { expected: size, got: self.size() })
        }
    }

    pub fn satisfies(&self, p: &IVFuzzyPoint, rel: PointRelation) -> Result<bool> {
        self.satisfies_with(p, rel, QuasiConvention::Paper)
    }

    pub fn satisfies_with(&self, p: &IVFuzzyPoint, rel: PointRelation, conv: QuasiConvention) -> Result<bool> {
        let mu = self
            .mu
            .get(p.support)
            .ok_or(Error::ElementOutOfRange { elem: p.support, size: self.size() })?;
        Ok(rel.holds(mu, &p.value, conv))
    }

    /// `{ a : μ(a) >= s }`.
    pub fn level_set(&self, s: &IntervalValue) -> ElementSet {
        (0..self.size()).filter(|&a| s.le(&self.mu[a])).collect()
    }

    /// Elements with membership other than `[0,0]`.
    pub fn support(&self) -> ElementSet {
        (0..self.size()).filter(|&a| !self.mu[a].is_bottom()).collect()
    }

    /// Distinct membership values, sorted.
    pub fn image(&self) -> Vec<IntervalValue> {
        let set: BTreeSet<IntervalValue> = self.mu.iter().copied().collect();
        set.into_iter().collect()
    }

    /// True when every two membership values are comparable.
    pub fn is_chain(&self) -> bool {
        let img = self.image();
        img.iter().enumerate().all(|(i, x)| img[i + 1..].iter().all(|y| x.comparable(y)))
    }

    /// The sorted cut points with one midpoint inserted in every gap.
    pub fn critical_thresholds(&self) -> Vec<Rational> {
        self.critical_thresholds_with(&[])
    }

    /// As [`Self::critical_thresholds`], with extra constants such as
    /// threshold endpoints added before midpoints are inserted.
    pub fn critical_thresholds_with(&self, extra: &[Rational]) -> Vec<Rational> {
        let mut cuts: BTreeSet<Rational> = [Rational::ZERO, Rational::HALF, Rational::ONE].into_iter().collect();
        for v in &self.mu {
            for e in [v.lo(), v.hi()] {
                cuts.insert(e);
                cuts.insert(e.one_minus());
            }
        }
        cuts.extend(extra.iter().copied().filter(|r| r.in_unit()));
        with_midpoints(cuts)
    }

    /// All `[a, b]` with `a <= b` drawn from the critical thresholds, except `[0,0]`.
    pub fn representative_grid(&self) -> Vec<IntervalValue> {
        grid(&self.critical_thresholds())
    }

    /// Same family of nonempty level sets.
    pub fn equivalent(&self, other: &IVFuzzySet) -> Result<bool> {
        other.require_size(self.size())?;
        let mut points = self.critical_thresholds();
        points.extend(other.critical_thresholds());
        let points = with_midpoints(points.into_iter().collect());
        let g = grid(&points);
        let family = |a: &IVFuzzySet| -> BTreeSet<u64> {
            g.iter().map(|s| a.level_set(s)).filter(|l| !l.is_empty()).map(|l| l.bits()).collect()
        };
        Ok(family(self) == family(other))
    }

    pub fn to_file(&self) -> FuzzyFile {
        FuzzyFile {
            size: self.size(),
            mu: self.mu.iter().enumerate().map(|(elem, &value)| Membership { elem, value }).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<FuzzyFile>(text)?.build()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("fuzzy set serializes")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

impl fmt::Debug for IVFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.mu.iter().enumerate()).finish()
    }
}

impl fmt::Display for IVFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mu.iter().enumerate().map(|(x, v)| format!("{x}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The characteristic function: `[1,1]` on `s`, `[0,0]` elsewhere.
pub fn characteristic(s: ElementSet, size: usize) -> Result<IVFuzzySet> {
    if let Some(elem) = s.iter().find(|&a| a >= size) {
        return Err(Error::ElementOutOfRange { elem, size });
    }
    IVFuzzySet::new((0..size).map(|a| if s.contains(a) { IntervalValue::TOP } else { IntervalValue::BOTTOM }).collect())
}

/// On-disk form: `{"size": 4, "mu": [{"elem": 0, "value": ["4/5", "9/10"]}, ...]}`.
/// Unlisted elements get `[0,0]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzyFile {
    pub size: usize,
    #[serde(default)]
    pub mu: Vec<Membership>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Membership {
    pub elem: Element,
    pub value: IntervalValue,
}

impl FuzzyFile {
    pub fn build(&self) -> Result<IVFuzzySet> {
        let mut mu = vec![IntervalValue::BOTTOM; self.size];
        let mut seen = ElementSet::EMPTY;
        for m in &self.mu {
            if m.elem >= self.size {
                return Err(Error::ElementOutOfRange { elem: m.elem, size: self.size });
            }
            if seen.contains(m.elem) {
                return Err(Error::Parse(format!("element {} listed twice", m.elem)));
            }
            seen.insert(m.elem);
            mu[m.elem] = m.value;
        }
        IVFuzzySet::new(mu)
    }
}

/// Sorted distinct cut points with the midpoint of every consecutive pair added.
pub(crate) fn with_midpoints(cuts: BTreeSet<Rational>) -> Vec<Rational> {
    let sorted: Vec<Rational> = cuts.into_iter().collect();
    let mut out = Vec::with_capacity(sorted.len() * 2);
    for w in sorted.windows(2) {
        out.push(w[0]);
        out.push(w[0].midpoint(w[1]));
    }
    out.extend(sorted.last().copied());
    out
}

/// Pairs `[a, b]`, `a <= b`, from `points`, skipping `[0,0]`.
pub fn grid(points: &[Rational]) -> Vec<IntervalValue> {
    let mut out = Vec::new();
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i..] {
            if let Ok(v) = IntervalValue::new(a, b) {
                if !v.is_bottom() {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// The grid point standing for `x`: `x` itself when it is a cut point,
/// otherwise the midpoint of the gap containing it. `points` must come from
/// [`with_midpoints`] and cover `[0, 1]`.
pub fn cell_representative(points: &[Rational], x: Rational) -> Rational {
    match points.binary_search(&x) {
        Ok(_) => x,
        Err(i) => {
            // Cut points sit at even positions, midpoints at odd ones.
            if i % 2 == 1 {
                points[i]
            } else {
                points[i - 1]
            }
        }
    }
}
