use std::fmt;

use serde::{Deserialize, Serialize};

use super::{product_each, tuples, Element, ElementSet, KrasnerHyperring};
use crate::error::{Error, Result};

/// Largest carrier for which every subset is tried.
pub const DEFAULT_SUBSET_CAP: usize = 16;

/// Why a subset is not a hyperideal. Tuples are the lexicographically
/// least offending ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealViolation {
    MissingZero { zero: Element },
    NotClosed { args: Vec<Element>, out: ElementSet },
    MissingInverse { elem: Element, inverse: Element },
    /// No `x` in the subset with `target ∈ f(.., x, ..)`, `x` at `slot`.
    NotSolvable { slot: usize, args: Vec<Element>, target: Element },
    NotAbsorbing { args: Vec<Element>, out: Element },
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealViolation::MissingZero { zero } => write!(f, "zero {zero} is missing"),
            IdealViolation::NotClosed { args, out } => write!(f, "f{args:?} = {out} leaves the subset"),
            IdealViolation::MissingInverse { elem, inverse } => {
                write!(f, "inverse {inverse} of {elem} is missing")
            }
            IdealViolation::NotSolvable { slot, args, target } => {
                write!(f, "{target} ∈ f{args:?} has no solution in slot {slot}")
            }
            IdealViolation::NotAbsorbing { args, out } => write!(f, "g{args:?} = {out} leaves the subset"),
        }
    }
}

/// Checks whether `s` is a hyperideal: an m-ary subhypergroup of `(R, f)`
/// that absorbs `g` in every slot. Returns `None` for a hyperideal.
pub fn is_hyperideal(r: &KrasnerHyperring, s: ElementSet) -> Result<Option<IdealViolation>> {
    r.require_validated()?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(elem) = s.iter().find(|&a| a >= r.size()) {
        return Err(Error::ElementOutOfRange { elem, size: r.size() });
    }
    let members = s.to_vec();
    let (m, n) = (r.m(), r.n());

    if !s.contains(r.zero()) {
        return Ok(Some(IdealViolation::MissingZero { zero: r.zero() }));
    }

    let rows = vec![members.clone(); m];
    let mut args = vec![0; m];
    let mut found = None;
    product_each(&rows, 0, &mut args, &mut |t| {
        if found.is_none() {
            let out = r.f(t);
            if !out.is_subset(&s) {
                found = Some(IdealViolation::NotClosed { args: t.to_vec(), out });
            }
        }
    });
    if found.is_some() {
        return Ok(found);
    }

    for &a in &members {
        let inverse = r.neg(a);
        if !s.contains(inverse) {
            return Ok(Some(IdealViolation::MissingInverse { elem: a, inverse }));
        }
    }

    for slot in 0..m {
        let rows = vec![members.clone(); m - 1];
        let mut others = vec![0; m - 1];
        product_each(&rows, 0, &mut others, &mut |o| {
            if found.is_some() {
                return;
            }
            let mut reach = ElementSet::EMPTY;
            for &x in &members {
                let mut full = o.to_vec();
                full.insert(slot, x);
                reach = reach.union(&r.f(&full));
            }
            if let Some(target) = members.iter().copied().find(|&b| !reach.contains(b)) {
                found = Some(IdealViolation::NotSolvable { slot: slot + 1, args: o.to_vec(), target });
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }

    for t in tuples(r.size(), n) {
        if t.iter().any(|&a| s.contains(a)) {
            let out = r.g(&t);
            if !s.contains(out) {
                return Ok(Some(IdealViolation::NotAbsorbing { args: t, out }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEnumeration {
    /// Hyperideals ordered by size, then lexicographically.
    pub ideals: Vec<ElementSet>,
    /// False when found by closure generation instead of trying every subset.
    pub exhaustive: bool,
}

/// All hyperideals of `r`. Carriers above `cap` are handled by joining the
/// principal hyperideals when `allow_closure` is set, and rejected otherwise.
pub fn enumerate_hyperideals(r: &KrasnerHyperring, cap: usize, allow_closure: bool) -> Result<IdealEnumeration> {
    r.require_validated()?;
    let size = r.size();
    let mut ideals = if size <= cap {
        let mut found = Vec::new();
        for bits in 1u64..(1u64 << size) {
            let s = ElementSet::from_bits(bits);
            if is_hyperideal(r, s)?.is_none() {
                found.push(s);
            }
        }
        found
    } else if allow_closure {
        by_closure(r)?
    } else {
        return Err(Error::CarrierTooLarge { size, cap });
    };
    ideals.sort_by_key(|s| s.canonical_key());
    Ok(IdealEnumeration { ideals, exhaustive: size <= cap })
}

fn by_closure(r: &KrasnerHyperring) -> Result<Vec<ElementSet>> {
    let mut found: Vec<ElementSet> = Vec::new();
    let mut frontier: Vec<ElementSet> = (0..r.size()).map(|a| generate(r, ElementSet::singleton(a))).collect();
    while let Some(s) = frontier.pop() {
        if found.contains(&s) {
            continue;
        }
        let joins: Vec<ElementSet> = found.iter().map(|t| generate(r, s.union(t))).collect();
        found.push(s);
        frontier.extend(joins.into_iter().filter(|j| !found.contains(j)));
    }
    let mut ideals = Vec::new();
    for s in found {
        if is_hyperideal(r, s)?.is_none() {
            ideals.push(s);
        }
    }
    Ok(ideals)
}

/// Smallest superset of `seed` closed under `f`, inverses and `g`-absorption.
fn generate(r: &KrasnerHyperring, seed: ElementSet) -> ElementSet {
    let mut cur = seed;
    cur.insert(r.zero());
    loop {
        let mut next = cur;
        let members = cur.to_vec();
        for &a in &members {
            next.insert(r.neg(a));
        }
        let rows = vec![members.clone(); r.m()];
        let mut args = vec![0; r.m()];
        product_each(&rows, 0, &mut args, &mut |t| next = next.union(&r.f(t)));
        for t in tuples(r.size(), r.n()) {
            if t.iter().any(|&a| cur.contains(a)) {
                next.insert(r.g(&t));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::catalog::{paper_24, zmod};

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn paper_example_ideals() {
        let r = paper_24();
        assert_eq!(is_hyperideal(&r, set(&[0])).unwrap(), None);
        assert_eq!(is_hyperideal(&r, set(&[0, 1])).unwrap(), None);
        assert_eq!(
            is_hyperideal(&r, set(&[0, 3])).unwrap(),
            Some(IdealViolation::NotClosed { args: vec![3, 3], out: set(&[0, 1]) })
        );
        assert_eq!(is_hyperideal(&r, set(&[1])).unwrap(), Some(IdealViolation::MissingZero { zero: 0 }));
        assert_eq!(is_hyperideal(&r, ElementSet::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let found = enumerate_hyperideals(&paper_24(), DEFAULT_SUBSET_CAP, false).unwrap();
        assert!(found.exhaustive);
        assert_eq!(found.ideals, vec![set(&[0]), set(&[0, 1]), set(&[0, 2]), set(&[0, 1, 2, 3])]);

        let z4 = zmod(4, 2, 4).unwrap();
        let found = enumerate_hyperideals(&z4, DEFAULT_SUBSET_CAP, false).unwrap();
        assert_eq!(found.ideals, vec![set(&[0]), set(&[0, 2]), set(&[0, 1, 2, 3])]);
    }

    #[test]
    fn closure_mode_agrees_with_exhaustive() {
        for r in [paper_24(), zmod(6, 2, 2).unwrap(), zmod(4, 2, 4).unwrap(), zmod(5, 3, 2).unwrap()] {
            let exhaustive = enumerate_hyperideals(&r, DEFAULT_SUBSET_CAP, false).unwrap();
            let closure = enumerate_hyperideals(&r, 1, true).unwrap();
            assert!(!closure.exhaustive);
            assert_eq!(closure.ideals, exhaustive.ideals);
        }
        assert_eq!(
            enumerate_hyperideals(&paper_24(), 2, false),
            Err(Error::CarrierTooLarge { size: 4, cap: 2 })
        );
    }

    #[test]
    fn trivial_ideals_always_present() {
        for r in [paper_24(), zmod(5, 2, 4).unwrap(), zmod(3, 3, 3).unwrap()] {
            let ideals = enumerate_hyperideals(&r, DEFAULT_SUBSET_CAP, false).unwrap().ideals;
            assert!(ideals.contains(&ElementSet::singleton(r.zero())));
            assert!(ideals.contains(&r.carrier()));
        }
    }
}
