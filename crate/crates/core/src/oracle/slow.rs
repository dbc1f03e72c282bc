//! Brute-force re-evaluation of the `(α, β)` definition.
//!
//! Every variable ranges over all thresholds `[i/d, j/d]` that satisfy the
//! hypothesis and lie in the quantification domain. The set of aggregates
//! (`rmin` or `rmax`) reachable by a tuple is built by folding variable by
//! variable, and the conclusion is checked at each of them.

use std::collections::HashMap;

use crate::classifiers::{AlphaBeta, Semantics};
use crate::error::{Error, Result};
use crate::hyperstructure::{tuples, Element, KrasnerHyperring};
use crate::interval::IntervalValue;
use crate::ivfuzzy::IVFuzzySet;
use crate::rational::Rational;

/// Largest number of fold steps the oracle agrees to perform.
pub const SLOW_CAP: u128 = 100_000_000;

#[derive(Clone, Copy)]
enum Fold {
    Min,
    Max,
}

/// Grid thresholds as a bitset indexed by `i * (d + 1) + j`.
#[derive(Clone, PartialEq, Eq)]
struct GridSet(Vec<u64>);

impl GridSet {
    fn empty(cells: usize) -> Self {
        GridSet(vec![0; cells.div_ceil(64)])
    }

    fn insert(&mut self, k: usize) {
        self.0[k / 64] |= 1 << (k % 64);
    }

    fn intersects(&self, other: &GridSet) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

struct Grid {
    side: usize,
    points: Vec<(usize, usize, IntervalValue)>,
}

impl Grid {
    fn new(d: i64) -> Self {
        let side = d as usize + 1;
        let mut points = Vec::new();
        for i in 0..=d {
            for j in i..=d {
                if j > 0 {
                    let t = IntervalValue::new(Rational::new(i, d), Rational::new(j, d)).expect("grid point");
                    points.push((i as usize, j as usize, t));
                }
            }
        }
        Grid { side, points }
    }

    fn select(&self, keep: impl Fn(&IntervalValue) -> bool) -> GridSet {
        let mut s = GridSet::empty(self.side * self.side);
        for (i, j, t) in &self.points {
            if keep(t) {
                s.insert(i * self.side + j);
            }
        }
        s
    }

    fn combine(&self, acc: &GridSet, next: &GridSet, fold: Fold) -> GridSet {
        let pick = |a: usize, b: usize| match fold {
            Fold::Min => a.min(b),
            Fold::Max => a.max(b),
        };
        let split = |k: usize| (k / self.side, k % self.side);
        let right: Vec<(usize, usize)> = next.iter().map(split).collect();
        let mut out = GridSet::empty(self.side * self.side);
        for (i, j) in acc.iter().map(split) {
            for &(k, l) in &right {
                out.insert(pick(i, k) * self.side + pick(j, l));
            }
        }
        out
    }
}

fn multiset_count(size: usize, len: usize) -> u128 {
    // C(size + len - 1, len)
    (0..len as u128).fold(1u128, |acc, k| acc * (size as u128 + k) / (k + 1))
}

/// Evaluates the definition on the `1/grid_d` grid with the default semantics.
pub fn slow_alpha_beta(r: &KrasnerHyperring, a: &IVFuzzySet, ab: AlphaBeta, grid_d: i64) -> Result<bool> {
    slow_alpha_beta_with(r, a, ab, &Semantics::default(), grid_d)
}

pub fn slow_alpha_beta_with(
    r: &KrasnerHyperring,
    a: &IVFuzzySet,
    ab: AlphaBeta,
    sem: &Semantics,
    grid_d: i64,
) -> Result<bool> {
    r.require_validated()?;
    a.require_size(r.size())?;
    if !(1..=1000).contains(&grid_d) {
        return Err(Error::MalformedCorpusSpec(format!("grid denominator {grid_d} outside 1..=1000")));
    }
    let grid = Grid::new(grid_d);
    let np = grid.points.len() as u128;
    let steps: u128 = [r.m(), r.n()]
        .into_iter()
        .map(|len| (1..=len).map(|k| multiset_count(r.size(), k)).sum::<u128>())
        .sum::<u128>()
        * np
        * np;
    if steps > SLOW_CAP {
        return Err(Error::InstanceTooLarge(steps));
    }

    let conv = sem.convention;
    let hyp: Vec<GridSet> = (0..r.size())
        .map(|x| grid.select(|t| sem.domain.contains(t) && ab.alpha().holds(&a.mu(x), t, conv)))
        .collect();
    let fails: Vec<GridSet> =
        (0..r.size()).map(|x| grid.select(|t| !ab.beta().holds(&a.mu(x), t, conv))).collect();

    for b in 0..r.size() {
        if hyp[b].intersects(&fails[r.neg(b)]) {
            return Ok(false);
        }
    }
    for (len, fold) in [(r.m(), Fold::Min), (r.n(), Fold::Max)] {
        let mut memo: HashMap<Vec<Element>, GridSet> = HashMap::new();
        for t in tuples(r.size(), len) {
            let mut key = t.clone();
            key.sort_unstable();
            let reached = reach(&grid, &hyp, &mut memo, &key, fold).clone();
            let targets: Vec<Element> = match fold {
                Fold::Min => r.f(&t).to_vec(),
                Fold::Max => vec![r.g(&t)],
            };
            if targets.iter().any(|&x| reached.intersects(&fails[x])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn reach<'a>(
    grid: &Grid,
    hyp: &[GridSet],
    memo: &'a mut HashMap<Vec<Element>, GridSet>,
    key: &[Element],
    fold: Fold,
) -> &'a GridSet {
    if !memo.contains_key(key) {
        let value = if key.len() == 1 {
            hyp[key[0]].clone()
        } else {
            let prefix = reach(grid, hyp, memo, &key[..key.len() - 1], fold).clone();
            grid.combine(&prefix, &hyp[key[key.len() - 1]], fold)
        };
        memo.insert(key.to_vec(), value);
    }
    &memo[key]
}
