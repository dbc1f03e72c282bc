//! Exact verification of interval-valued fuzzy hyperideals in finite
//! Krasner (m,n)-hyperrings.

pub mod classifiers;
pub mod error;
pub mod hyperstructure;
pub mod implication;
pub mod interval;
pub mod ivfuzzy;
pub mod oracle;
pub mod rational;
mod region;

pub use error::{Error, Result};
pub use interval::{IntervalValue, IvOrdering, QuasiConvention};
pub use rational::{rat, Rational};
pub use ivfuzzy::{characteristic, IVFuzzyPoint, IVFuzzySet, PointRelation};
pub use classifiers::{AlphaBeta, ClassReport, Semantics, ThresholdDomain, ThresholdPair, Variant};
pub use implication::{ImplicationOperator, TruthValue};
