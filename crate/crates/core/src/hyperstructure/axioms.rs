use serde::{Deserialize, Serialize};

use super::{max_atomic, tuples, Element, ElementSet, KrasnerHyperring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationOptions {
    /// Check that `f` is invariant under argument permutations.
    pub require_commutative: bool,
    /// Lookup budget; `None` reads `HYPERLAB_MAX_ATOMIC` or the default.
    pub max_atomic: Option<u128>,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions { require_commutative: true, max_atomic: None }
    }
}

/// Outcome of one axiom. `counterexample` is set exactly when `holds` is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub holds: bool,
    pub counterexample: Option<Vec<Element>>,
    pub detail: Option<String>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck { holds: true, counterexample: None, detail: None }
    }

    fn fail(tuple: Vec<Element>, detail: String) -> Self {
        AxiomCheck { holds: false, counterexample: Some(tuple), detail: Some(detail) }
    }

    fn skipped() -> Self {
        AxiomCheck { holds: true, counterexample: None, detail: Some("not required".into()) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub commutativity: AxiomCheck,
    pub associativity_f: AxiomCheck,
    pub scalar_neutral: AxiomCheck,
    pub unique_inverses: AxiomCheck,
    pub reversibility: AxiomCheck,
    pub associativity_g: AxiomCheck,
    pub distributivity: AxiomCheck,
    pub absorbing_zero: AxiomCheck,
    pub neutral: Option<Element>,
    pub inverses: Option<Vec<Element>>,
}

impl AxiomReport {
    pub fn checks(&self) -> [(&'static str, &AxiomCheck); 8] {
        [
            ("commutativity of f", &self.commutativity),
            ("associativity of f", &self.associativity_f),
            ("scalar neutral", &self.scalar_neutral),
            ("unique inverses", &self.unique_inverses),
            ("reversibility", &self.reversibility),
            ("associativity of g", &self.associativity_g),
            ("distributivity", &self.distributivity),
            ("absorbing zero", &self.absorbing_zero),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|(_, c)| c.holds)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .checks()
            .iter()
            .filter(|(_, c)| !c.holds)
            .map(|(name, c)| format!("{name}: {}", c.detail.as_deref().unwrap_or("fails")))
            .collect();
        if failed.is_empty() {
            "all axioms hold".into()
        } else {
            failed.join("; ")
        }
    }
}

fn estimated_cost(r: &KrasnerHyperring) -> u128 {
    let (s, m, n) = (r.size() as u128, r.m() as u32, r.n() as u32);
    let assoc_f = s.pow(2 * m - 1) * (m as u128).pow(2) * s;
    let assoc_g = s.pow(2 * n - 1) * n as u128;
    let distrib = s.pow(n - 1 + m) * (n as u128) * (m as u128 + s);
    let revers = s.pow(m) * s * (m as u128).pow(2);
    assoc_f + assoc_g + distrib + revers
}

pub(super) fn validate(r: &KrasnerHyperring, opts: &ValidationOptions) -> Result<AxiomReport> {
    let cap = opts.max_atomic.unwrap_or_else(max_atomic);
    let needed = estimated_cost(r);
    if needed > cap {
        return Err(Error::TooExpensive { needed, cap });
    }

    let commutativity = if opts.require_commutative { check_commutative(r) } else { AxiomCheck::skipped() };
    let associativity_f = check_f_assoc(r);
    let (scalar_neutral, neutral) = check_neutral(r);
    let e = neutral.unwrap_or(r.zero());
    let (unique_inverses, inverses) = check_inverses(r, e);
    let reversibility = match &inverses {
        Ok(inv) => check_reversibility(r, inv),
        Err(a) => AxiomCheck::fail(vec![*a], format!("no usable inverse for {a}")),
    };
    let inverses = inverses.ok().filter(|_| unique_inverses.holds && scalar_neutral.holds);

    Ok(AxiomReport {
        commutativity,
        associativity_f,
        scalar_neutral,
        unique_inverses,
        reversibility,
        associativity_g: check_g_assoc(r),
        distributivity: check_distributive(r),
        absorbing_zero: check_absorbing(r),
        neutral,
        inverses,
    })
}

fn check_commutative(r: &KrasnerHyperring) -> AxiomCheck {
    for t in tuples(r.size(), r.m()) {
        let mut sorted = t.clone();
        sorted.sort_unstable();
        if r.f(&t) != r.f(&sorted) {
            let detail = format!("f{t:?} = {} but f{sorted:?} = {}", r.f(&t), r.f(&sorted));
            return AxiomCheck::fail(t, detail);
        }
    }
    AxiomCheck::pass()
}

fn check_f_assoc(r: &KrasnerHyperring) -> AxiomCheck {
    let m = r.m();
    for t in tuples(r.size(), 2 * m - 1) {
        let nested = |i: usize| {
            let mut sets: Vec<ElementSet> = t[..i].iter().map(|&a| ElementSet::singleton(a)).collect();
            sets.push(r.f(&t[i..i + m]));
            sets.extend(t[i + m..].iter().map(|&a| ElementSet::singleton(a)));
            r.f_ext_unchecked(&sets)
        };
        let first = nested(0);
        for i in 1..m {
            let other = nested(i);
            if other != first {
                let detail = format!("bracket at 1 gives {first}, bracket at {} gives {other} for {t:?}", i + 1);
                return AxiomCheck::fail(t, detail);
            }
        }
    }
    AxiomCheck::pass()
}

/// Scalar neutral: `f(a, e, ..., e) = {a}` for every `a`, unique, and equal
/// to the designated zero.
fn check_neutral(r: &KrasnerHyperring) -> (AxiomCheck, Option<Element>) {
    let m = r.m();
    let fixes_all = |e: Element| {
        (0..r.size()).find(|&a| {
            let mut args = vec![e; m];
            args[0] = a;
            r.f(&args) != ElementSet::singleton(a)
        })
    };
    let candidates: Vec<Element> = (0..r.size()).filter(|&e| fixes_all(e).is_none()).collect();
    match candidates.as_slice() {
        [] => {
            let a = fixes_all(r.zero()).unwrap_or(0);
            (AxiomCheck::fail(vec![r.zero(), a], format!("no scalar neutral; zero fails at {a}")), None)
        }
        [e] if *e == r.zero() => (AxiomCheck::pass(), Some(*e)),
        [e] => (
            AxiomCheck::fail(vec![*e, r.zero()], format!("scalar neutral {e} differs from zero {}", r.zero())),
            Some(*e),
        ),
        many => (AxiomCheck::fail(many.to_vec(), format!("several scalar neutrals {many:?}")), Some(many[0])),
    }
}

/// For every `a` a unique `b` with `e ∈ f(a, b, e, ..., e)`. On failure the
/// offending element is returned in place of the inverse map.
fn check_inverses(r: &KrasnerHyperring, e: Element) -> (AxiomCheck, std::result::Result<Vec<Element>, Element>) {
    let m = r.m();
    let mut inv = Vec::with_capacity(r.size());
    let mut verdict = AxiomCheck::pass();
    for a in 0..r.size() {
        let cands: Vec<Element> = (0..r.size())
            .filter(|&b| {
                let mut args = vec![e; m];
                args[0] = a;
                args[1] = b;
                r.f(&args).contains(e)
            })
            .collect();
        match cands.as_slice() {
            [] => return (AxiomCheck::fail(vec![a], format!("{a} has no inverse")), Err(a)),
            [b] => inv.push(*b),
            many => {
                if verdict.holds {
                    verdict = AxiomCheck::fail(vec![a], format!("{a} has several inverses {many:?}"));
                }
                inv.push(many[0]);
            }
        }
    }
    (verdict, Ok(inv))
}

/// Reversibility, read as: `x ∈ f(a_1..a_m)` implies
/// `a_i ∈ f(x, a_1⁻¹, .., a_{i-1}⁻¹, a_{i+1}⁻¹, .., a_m⁻¹)` for every slot `i`.
fn check_reversibility(r: &KrasnerHyperring, inv: &[Element]) -> AxiomCheck {
    let m = r.m();
    for t in tuples(r.size(), m) {
        for x in r.f(&t).iter() {
            for i in 0..m {
                let mut args = Vec::with_capacity(m);
                args.push(x);
                args.extend(t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &a)| inv[a]));
                if !r.f(&args).contains(t[i]) {
                    let detail = format!("{x} ∈ f{t:?} but {} ∉ f{args:?}", t[i]);
                    return AxiomCheck::fail(t, detail);
                }
            }
        }
    }
    AxiomCheck::pass()
}

fn check_g_assoc(r: &KrasnerHyperring) -> AxiomCheck {
    let n = r.n();
    for t in tuples(r.size(), 2 * n - 1) {
        let nested = |i: usize| {
            let mut args = t[..i].to_vec();
            args.push(r.g(&t[i..i + n]));
            args.extend_from_slice(&t[i + n..]);
            r.g(&args)
        };
        let first = nested(0);
        if let Some(i) = (1..n).find(|&i| nested(i) != first) {
            let detail = format!("bracket at 1 gives {first}, bracket at {} gives {} for {t:?}", i + 1, nested(i));
            return AxiomCheck::fail(t, detail);
        }
    }
    AxiomCheck::pass()
}

/// `g(x.., f(a_1^m), ..x) = f(g(x.., a_1, ..x), ..., g(x.., a_m, ..x))` in
/// every slot. Counterexample layout: the other `n-1` arguments, then
/// `a_1..a_m`, then the slot.
fn check_distributive(r: &KrasnerHyperring) -> AxiomCheck {
    let (n, m) = (r.n(), r.m());
    for slot in 0..n {
        for others in tuples(r.size(), n - 1) {
            let with = |c: Element| {
                let mut args = others.clone();
                args.insert(slot, c);
                r.g(&args)
            };
            for a in tuples(r.size(), m) {
                let lhs: ElementSet = r.f(&a).iter().map(with).collect();
                let images: Vec<Element> = a.iter().map(|&c| with(c)).collect();
                let rhs = r.f(&images);
                if lhs != rhs {
                    let mut ce = others.clone();
                    ce.extend_from_slice(&a);
                    ce.push(slot + 1);
                    let detail = format!("slot {}: g over f{a:?} gives {lhs}, f of images gives {rhs}", slot + 1);
                    return AxiomCheck::fail(ce, detail);
                }
            }
        }
    }
    AxiomCheck::pass()
}

fn check_absorbing(r: &KrasnerHyperring) -> AxiomCheck {
    let (n, zero) = (r.n(), r.zero());
    for slot in 0..n {
        for others in tuples(r.size(), n - 1) {
            let mut args = others;
            args.insert(slot, zero);
            let out = r.g(&args);
            if out != zero {
                let detail = format!("g{args:?} = {out}, expected {zero}");
                return AxiomCheck::fail(args, detail);
            }
        }
    }
    AxiomCheck::pass()
}
