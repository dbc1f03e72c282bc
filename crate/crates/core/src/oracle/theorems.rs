//! Replays the structural theorems over the catalog and a fuzzy-set corpus.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::Entry;
use super::corpus::{gen_fuzzy, Corpus};
use super::slow::slow_alpha_beta;
use crate::classifiers::{
    is_alpha_beta, is_in_invq_closed, is_ordinary, is_threshold, is_upper_half, level_criterion, AlphaBeta,
    ClassReport, LevelRange, ThresholdPair, Variant,
};
use crate::error::{Error, Result};
use crate::hyperstructure::{is_hyperideal, ElementSet, KrasnerHyperring, DEFAULT_SUBSET_CAP};
use crate::implication::{is_t_implication_based, ImplicationOperator};
use crate::interval::IntervalValue;
use crate::ivfuzzy::{characteristic, IVFuzzySet, PointRelation};

/// Failures kept per result; the total is always reported.
pub const FAILURE_CAP: usize = 10;

/// Theorem ids in run order.
pub const THEOREMS: [&str; 11] = ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "CF", "QE"];

pub fn statement(id: &str) -> Result<&'static str> {
    Ok(match id {
        "T1" => "every (∈,∈) fuzzy hyperideal is (∈,∈∨q)",
        "T2" => "every (∈∨q,∈∨q) fuzzy hyperideal is (∈,∈∨q)",
        "T3" => "the characteristic function of a hyperideal is (∈,∈)",
        "T4" => "a subset is empty or a hyperideal iff its characteristic function is (∈,∈∨q)",
        "T5" => "all nonempty level sets for [0,0] < s <= [1,1] are hyperideals iff A is ordinary",
        "T6" => "(∈,∈∨q) implies all nonempty level sets for [0,0] < s <= [0.5,0.5] are hyperideals",
        "T7" => "all nonempty level sets for [0.5,0.5] < s <= [1,1] are hyperideals iff the three rmax conditions hold",
        "T8" => "thresholds (s1, s2) hold iff all nonempty level sets for s1 < s <= s2 are hyperideals",
        "T9" => "[0.5,0.5]-implication-based for Igr, Ig, Icg iff thresholds ([0,0],[1,1]), ([0,0],[0.5,0.5]), ([0.5,0.5],[1,1])",
        "CF" => "(∈,∈∨q) iff the closed-form conditions hold",
        "QE" => "the quantifier-eliminated (α,β) test agrees with brute force on the grid",
        _ => return Err(Error::UnknownTheorem(id.to_string())),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub structure: String,
    /// Corpus index, or the subset bitmask for subset theorems.
    pub index: usize,
    pub fuzzy: Vec<IntervalValue>,
    pub witness: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.fuzzy.iter().map(|v| v.to_string()).collect();
        write!(f, "{} #{} [{}]: {}", self.structure, self.index, values.join(" "), self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub theorem: String,
    pub statement: String,
    pub trials: usize,
    pub total_failures: usize,
    pub failures: Vec<Failure>,
    /// Theorems that need chain-valued sets are also run on the general
    /// corpus; mismatches there are logged here and do not fail the run.
    pub off_chain_trials: usize,
    pub off_chain_mismatches: usize,
    pub off_chain_examples: Vec<Failure>,
    pub seed: u64,
    pub q: i64,
    pub count: usize,
    pub chain_only: bool,
    pub variant: Variant,
}

impl TheoremResult {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }
}

impl fmt::Display for TheoremResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} trials, {} failures): {}", self.theorem, self.trials, self.total_failures, self.statement)?;
        if self.off_chain_trials > 0 {
            write!(f, "\n  off-chain: {} mismatches in {} trials", self.off_chain_mismatches, self.off_chain_trials)?;
        }
        for fail in &self.failures {
            write!(f, "\n  {fail}")?;
        }
        for fail in &self.off_chain_examples {
            write!(f, "\n  off-chain {fail}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    /// Exhaustive over subsets of the carrier.
    Subsets,
    /// General and chain corpora.
    Both,
    /// Chain corpus; the general corpus is logged only.
    Chains,
}

fn scope(id: &str) -> Scope {
    match id {
        "T3" | "T4" => Scope::Subsets,
        "T7" | "T8" | "T9" | "CF" => Scope::Chains,
        _ => Scope::Both,
    }
}

type Check = fn(&KrasnerHyperring, &IVFuzzySet, Variant, i64) -> Result<Option<String>>;

fn check_fn(id: &str) -> Result<Check> {
    Ok(match id {
        "T1" => t1,
        "T2" => t2,
        "T5" => t5,
        "T6" => t6,
        "T7" => t7,
        "T8" => t8,
        "T9" => t9,
        "CF" => closed_form,
        "QE" => quantifier_elimination,
        _ => return Err(Error::UnknownTheorem(id.to_string())),
    })
}

fn ab(alpha: PointRelation, beta: PointRelation) -> AlphaBeta {
    AlphaBeta::new(alpha, beta).expect("alpha is not in-and-q")
}

fn describe(report: &ClassReport) -> String {
    report.to_string()
}

/// `lhs => rhs`; the witness explains the first violated direction.
fn implies(lhs: (&str, ClassReport), rhs: (&str, ClassReport)) -> Option<String> {
    (lhs.1.verdict && !rhs.1.verdict).then(|| format!("{} holds but {} {}", lhs.0, rhs.0, describe(&rhs.1)))
}

fn iff(lhs: (&str, ClassReport), rhs: (&str, ClassReport)) -> Option<String> {
    match (lhs.1.verdict, rhs.1.verdict) {
        (true, false) => Some(format!("{} holds but {} {}", lhs.0, rhs.0, describe(&rhs.1))),
        (false, true) => Some(format!("{} holds but {} {}", rhs.0, lhs.0, describe(&lhs.1))),
        _ => None,
    }
}

fn t1(r: &KrasnerHyperring, a: &IVFuzzySet, _: Variant, _: i64) -> Result<Option<String>> {
    use PointRelation::*;
    Ok(implies(("(∈,∈)", is_alpha_beta(r, a, ab(In, In))?), ("(∈,∈∨q)", is_alpha_beta(r, a, ab(In, InOrQ))?)))
}

fn t2(r: &KrasnerHyperring, a: &IVFuzzySet, _: Variant, _: i64) -> Result<Option<String>> {
    use PointRelation::*;
    Ok(implies(
        ("(∈∨q,∈∨q)", is_alpha_beta(r, a, ab(InOrQ, InOrQ))?),
        ("(∈,∈∨q)", is_alpha_beta(r, a, ab(In, InOrQ))?),
    ))
}

fn t5(r: &KrasnerHyperring, a: &IVFuzzySet, _: Variant, _: i64) -> Result<Option<String>> {
    let full = LevelRange::Custom(ThresholdPair::new(IntervalValue::BOTTOM, IntervalValue::TOP)?);
    Ok(iff(("level sets in ([0,0],[1,1]]", level_criterion(r, a, &full)?), ("ordinary", is_ordinary(r, a)?)))
}

fn t6(r: &KrasnerHyperring, a: &IVFuzzySet, _: Variant, _: i64) -> Result<Option<String>> {
    use PointRelation::*;
    Ok(implies(
        ("(∈,∈∨q)", is_alpha_beta(r, a, ab(In, InOrQ))?),
        ("level sets in ([0,0],[0.5,0.5]]", level_criterion(r, a, &LevelRange::Lower)?),
    ))
}

fn t7(r: &KrasnerHyperring, a: &IVFuzzySet, _: Variant, _: i64) -> Result<Option<String>> {
    Ok(iff(
        ("level sets in ([0.5,0.5],[1,1]]", level_criterion(r, a, &LevelRange::Upper)?),
        ("rmax conditions", is_upper_half(r, a)?),
    ))
}

/// Threshold pairs drawn from the image of `a` and the lattice bounds.
pub fn threshold_pairs(a: &IVFuzzySet) -> Vec<ThresholdPair> {
    let mut values = a.image();
    values.extend([IntervalValue::BOTTOM, IntervalValue::TOP]);
    values.sort();
    values.dedup();
    let mut pairs = Vec::new();
    for s1 in &values {
        for s2 in &values {
            if let Ok(th) = ThresholdPair::new(*s1, *s2) {
                pairs.push(th);
            }
        }
    }
    pairs
}

fn t8(r: &KrasnerHyperring, a: &IVFuzzySet, variant: Variant, _: i64) -> Result<Option<String>> {
    for th in threshold_pairs(a) {
        let label = format!("thresholds ({}, {})", th.s1(), th.s2());
        let levels = format!("level sets in ({}, {}]", th.s1(), th.s2());
        if let Some(w) = iff(
            (&label, is_threshold(r, a, &th, variant)?),
            (&levels, level_criterion(r, a, &LevelRange::Custom(th))?),
        ) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn t9(r: &KrasnerHyperring, a: &IVFuzzySet, variant: Variant, _: i64) -> Result<Option<String>> {
    use ImplicationOperator::*;
    let (zero, half, one) = (IntervalValue::BOTTOM, IntervalValue::HALF, IntervalValue::TOP);
    for (op, s1, s2) in [(GainesRescher, zero, one), (Godel, zero, half), (ContrapositionGodel, half, one)] {
        let th = ThresholdPair::new(s1, s2)?;
        let imp = format!("[0.5,0.5]-implication-based for {op}");
        let thr = format!("thresholds ({s1}, {s2})");
        if let Some(w) = iff((&imp, is_t_implication_based(r, a, op, &half)?), (&thr, is_threshold(r, a, &th, variant)?)) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn closed_form(r: &KrasnerHyperring, a: &IVFuzzySet, variant: Variant, _: i64) -> Result<Option<String>> {
    use PointRelation::*;
    Ok(iff(
        ("(∈,∈∨q)", is_alpha_beta(r, a, ab(In, InOrQ))?),
        ("the closed form", is_in_invq_closed(r, a, variant)?),
    ))
}

/// Relation pairs cross-checked against brute force.
pub const QE_PAIRS: [(PointRelation, PointRelation); 3] = [
    (PointRelation::In, PointRelation::In),
    (PointRelation::In, PointRelation::InOrQ),
    (PointRelation::Q, PointRelation::InOrQ),
];

fn quantifier_elimination(r: &KrasnerHyperring, a: &IVFuzzySet, _: Variant, q: i64) -> Result<Option<String>> {
    for (alpha, beta) in QE_PAIRS {
        let pair = ab(alpha, beta);
        let fast = is_alpha_beta(r, a, pair)?;
        // Midpoints of the 1/q grid are all the representative grid needs.
        let slow = slow_alpha_beta(r, a, pair, 2 * q)?;
        if fast.verdict != slow {
            return Ok(Some(format!("{pair}: quantifier elimination says {}, brute force says {slow}", fast.verdict)));
        }
    }
    Ok(None)
}

#[derive(Default)]
struct Tally {
    trials: usize,
    total: usize,
    kept: Vec<Failure>,
}

impl Tally {
    fn record(&mut self, outcomes: Vec<(usize, Vec<IntervalValue>, Option<String>)>, structure: &str) {
        self.trials += outcomes.len();
        for (index, fuzzy, witness) in outcomes {
            if let Some(witness) = witness {
                self.total += 1;
                if self.kept.len() < FAILURE_CAP {
                    self.kept.push(Failure { structure: structure.to_string(), index, fuzzy, witness });
                }
            }
        }
    }
}

fn run_corpus(
    check: Check,
    entry: &Entry,
    corpus: &Corpus,
    variant: Variant,
    tally: &mut Tally,
) -> Result<()> {
    let sets = gen_fuzzy(&entry.structure, corpus)?;
    let outcomes: Vec<(usize, Vec<IntervalValue>, Option<String>)> = sets
        .par_iter()
        .enumerate()
        .map(|(i, a)| Ok((i, a.values().to_vec(), check(&entry.structure, a, variant, corpus.q)?)))
        .collect::<Result<_>>()?;
    tally.record(outcomes, &entry.name);
    Ok(())
}

fn run_subsets(id: &str, entry: &Entry, tally: &mut Tally) -> Result<()> {
    use PointRelation::*;
    let r = &entry.structure;
    if r.size() > DEFAULT_SUBSET_CAP {
        return Err(Error::CarrierTooLarge { size: r.size(), cap: DEFAULT_SUBSET_CAP });
    }
    let outcomes = (0u64..1 << r.size())
        .into_par_iter()
        .map(|bits| {
            let s = ElementSet::from_bits(bits);
            let ideal = !s.is_empty() && is_hyperideal(r, s)?.is_none();
            let chi = characteristic(s, r.size())?;
            let witness = if id == "T3" {
                let label = format!("hyperideal {s}");
                implies((&label, ClassReport { verdict: ideal, violation: None }), ("χ (∈,∈)", is_alpha_beta(r, &chi, ab(In, In))?))
            } else {
                let label = format!("empty or hyperideal {s}");
                iff(
                    (&label, ClassReport { verdict: ideal || s.is_empty(), violation: None }),
                    ("χ (∈,∈∨q)", is_alpha_beta(r, &chi, ab(In, InOrQ))?),
                )
            };
            Ok((bits as usize, chi.values().to_vec(), witness))
        })
        .collect::<Result<Vec<_>>>()?;
    tally.record(outcomes, &entry.name);
    Ok(())
}

/// Replays theorem `id` over every catalog entry.
pub fn run_theorem(id: &str, entries: &[Entry], corpus: &Corpus, variant: Variant) -> Result<TheoremResult> {
    let statement = statement(id)?;
    let mut main = Tally::default();
    let mut logged = Tally::default();
    for entry in entries {
        match scope(id) {
            Scope::Subsets => run_subsets(id, entry, &mut main)?,
            Scope::Both => {
                let check = check_fn(id)?;
                run_corpus(check, entry, &corpus.with_chain_only(true), variant, &mut main)?;
                if !corpus.chain_only {
                    run_corpus(check, entry, corpus, variant, &mut main)?;
                }
            }
            Scope::Chains => {
                let check = check_fn(id)?;
                run_corpus(check, entry, &corpus.with_chain_only(true), variant, &mut main)?;
                if !corpus.chain_only {
                    run_corpus(check, entry, corpus, variant, &mut logged)?;
                }
            }
        }
    }
    Ok(TheoremResult {
        theorem: id.to_string(),
        statement: statement.to_string(),
        trials: main.trials,
        total_failures: main.total,
        failures: main.kept,
        off_chain_trials: logged.trials,
        off_chain_mismatches: logged.total,
        off_chain_examples: logged.kept,
        seed: corpus.seed,
        q: corpus.q,
        count: corpus.count,
        chain_only: corpus.chain_only,
        variant,
    })
}

/// Expands `"all"` and validates ids; accepts lower case.
pub fn parse_selection(list: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(THEOREMS.iter().map(|s| s.to_string()));
            continue;
        }
        let id = part.to_ascii_uppercase();
        statement(&id)?;
        out.push(id);
    }
    if out.is_empty() {
        return Err(Error::UnknownTheorem(list.to_string()));
    }
    out.dedup();
    Ok(out)
}
