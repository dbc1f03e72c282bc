//! Multi-valued implication operators and implication-based hyperideals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classifiers::{ClassReport, LatticeConditions};
use crate::error::{Error, Result};
use crate::hyperstructure::KrasnerHyperring;
use crate::interval::IntervalValue;
use crate::ivfuzzy::IVFuzzySet;
use crate::rational::Rational;

/// Truth degree of a fuzzy proposition.
pub type TruthValue = IntervalValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ImplicationOperator {
    #[serde(rename = "Im")]
    EarlyZadeh,
    #[serde(rename = "Ia")]
    Lukasiewicz,
    #[serde(rename = "Ig")]
    Godel,
    #[serde(rename = "Icg")]
    ContrapositionGodel,
    #[serde(rename = "Igr")]
    GainesRescher,
    #[serde(rename = "Ib")]
    KleeneDienes,
    #[serde(rename = "Igg")]
    Goguen,
}

impl ImplicationOperator {
    pub const ALL: [ImplicationOperator; 7] = [
        ImplicationOperator::EarlyZadeh,
        ImplicationOperator::Lukasiewicz,
        ImplicationOperator::Godel,
        ImplicationOperator::ContrapositionGodel,
        ImplicationOperator::GainesRescher,
        ImplicationOperator::KleeneDienes,
        ImplicationOperator::Goguen,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            ImplicationOperator::EarlyZadeh => "Im",
            ImplicationOperator::Lukasiewicz => "Ia",
            ImplicationOperator::Godel => "Ig",
            ImplicationOperator::ContrapositionGodel => "Icg",
            ImplicationOperator::GainesRescher => "Igr",
            ImplicationOperator::KleeneDienes => "Ib",
            ImplicationOperator::Goguen => "Igg",
        }
    }
}

impl fmt::Display for ImplicationOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for ImplicationOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        ImplicationOperator::ALL
            .into_iter()
            .find(|op| op.short_name().to_ascii_lowercase() == key || format!("{op:?}").to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Parse(format!("unknown implication operator {s:?}")))
    }
}

/// Scalar implication `I(a, b)`.
pub fn imp_scalar(op: ImplicationOperator, a: Rational, b: Rational) -> Rational {
    use ImplicationOperator::*;
    let one = Rational::ONE;
    match op {
        EarlyZadeh => a.one_minus().max(a.min(b)),
        Lukasiewicz => one.min(a.one_minus() + b),
        KleeneDienes => a.one_minus().max(b),
        _ if a <= b => one,
        Godel => b,
        ContrapositionGodel => a.one_minus(),
        GainesRescher => Rational::ZERO,
        Goguen => b / a,
    }
}

/// Interval extension: the operator applied to lower and to upper endpoints,
/// sorted. Reduces to the scalar operator on degenerate intervals and keeps
/// `I(x, x)` at `[1,1]` for operators that are reflexive.
pub fn imp_interval(op: ImplicationOperator, x: &IntervalValue, y: &IntervalValue) -> IntervalValue {
    let lo = imp_scalar(op, x.lo(), y.lo());
    let hi = imp_scalar(op, x.hi(), y.hi());
    IntervalValue::new(lo.min(hi), lo.max(hi)).expect("implication stays in [0, 1]")
}

/// `[P] >= t`: lower end at least `t⁻` and upper end at least `t⁺`.
fn entails(p: &TruthValue, t: &TruthValue) -> bool {
    t.le(p)
}

/// Fuzzifying hyperideal: all three implications are Lukasiewicz tautologies.
pub fn is_fuzzifying(r: &KrasnerHyperring, a: &IVFuzzySet) -> Result<ClassReport> {
    check(r, a, ImplicationOperator::Lukasiewicz, IntervalValue::TOP)
}

/// `t`-implication-based hyperideal for the operator `op`.
pub fn is_t_implication_based(
    r: &KrasnerHyperring,
    a: &IVFuzzySet,
    op: ImplicationOperator,
    t: &TruthValue,
) -> Result<ClassReport> {
    if t.is_bottom() {
        return Err(Error::MalformedThresholds("truth threshold must not be [0, 0]".into()));
    }
    check(r, a, op, *t)
}

fn check(r: &KrasnerHyperring, a: &IVFuzzySet, op: ImplicationOperator, t: TruthValue) -> Result<ClassReport> {
    let holds = |x: &IntervalValue, y: &IntervalValue| entails(&imp_interval(op, x, y), &t);
    LatticeConditions {
        sum: holds,
        neg: holds,
        prod: holds,
        anchors: ["implication condition (1)", "implication condition (2)", "implication condition (3)"],
    }
    .check(r, a)
}
