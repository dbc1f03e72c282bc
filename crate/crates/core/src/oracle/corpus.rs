//! Seeded random fuzzy sets over a catalog structure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperstructure::{enumerate_hyperideals, ElementSet, KrasnerHyperring, DEFAULT_SUBSET_CAP};
use crate::interval::IntervalValue;
use crate::ivfuzzy::IVFuzzySet;
use crate::rational::Rational;

pub const DEFAULT_Q: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub seed: u64,
    /// Grid denominator: every endpoint is `i/q`.
    pub q: i64,
    pub count: usize,
    /// Draw all values of a set from one chain of `D[0,1]`.
    pub chain_only: bool,
}

impl Corpus {
    pub fn new(seed: u64, q: i64, count: usize, chain_only: bool) -> Result<Self> {
        let c = Corpus { seed, q, count, chain_only };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        if self.q < 2 {
            return Err(Error::MalformedCorpusSpec(format!("grid denominator {} is below 2", self.q)));
        }
        if self.q > 1_000_000 {
            return Err(Error::MalformedCorpusSpec(format!("grid denominator {} is too large", self.q)));
        }
        Ok(())
    }

    pub fn with_chain_only(self, chain_only: bool) -> Self {
        Corpus { chain_only, ..self }
    }

    fn rng_for(&self, r: &KrasnerHyperring) -> ChaCha8Rng {
        let shape = (r.size() as u64) | (r.m() as u64) << 16 | (r.n() as u64) << 32 | (self.chain_only as u64) << 48;
        ChaCha8Rng::seed_from_u64(self.seed ^ shape.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

impl Default for Corpus {
    fn default() -> Self {
        Corpus { seed: 42, q: DEFAULT_Q, count: 500, chain_only: false }
    }
}

/// `corpus.count` fuzzy sets over `r`, a pure function of the corpus and
/// the shape of `r`.
///
/// Besides uniformly random values the mix contains sets layered along a
/// chain of hyperideals (so the positive side of each notion is exercised),
/// few-valued sets and constants.
pub fn gen_fuzzy(r: &KrasnerHyperring, corpus: &Corpus) -> Result<Vec<IVFuzzySet>> {
    corpus.check()?;
    let ideals = enumerate_hyperideals(r, DEFAULT_SUBSET_CAP, true)?.ideals;
    let mut rng = corpus.rng_for(r);
    let size = r.size();
    let mut out = Vec::with_capacity(corpus.count);
    for _ in 0..corpus.count {
        let pool = if corpus.chain_only { random_chain(&mut rng, corpus.q) } else { Vec::new() };
        let pick = |rng: &mut ChaCha8Rng| -> IntervalValue {
            if corpus.chain_only {
                *pool.choose(rng).expect("chain is nonempty")
            } else {
                random_interval(rng, corpus.q)
            }
        };
        let roll = rng.gen_range(0..100);
        let mu: Vec<IntervalValue> = if roll < 35 {
            (0..size).map(|_| pick(&mut rng)).collect()
        } else if roll < 75 {
            let chain = ideal_chain(&mut rng, &ideals);
            // Layer values must be comparable, so they always come from a chain.
            let path = if corpus.chain_only { pool.clone() } else { random_chain(&mut rng, corpus.q) };
            let mut values: Vec<IntervalValue> =
                (0..chain.len()).map(|_| *path.choose(&mut rng).expect("chain is nonempty")).collect();
            values.sort();
            values.reverse();
            let mut mu: Vec<IntervalValue> = (0..size)
                .map(|x| values[chain.iter().position(|layer| layer.contains(x)).expect("last layer is the carrier")])
                .collect();
            if rng.gen_bool(0.5) {
                let x = rng.gen_range(0..size);
                mu[x] = pick(&mut rng);
            }
            mu
        } else if roll < 90 {
            let k = rng.gen_range(2..=3);
            let values: Vec<IntervalValue> = (0..k).map(|_| pick(&mut rng)).collect();
            (0..size).map(|_| *values.choose(&mut rng).expect("nonempty")).collect()
        } else {
            vec![pick(&mut rng); size]
        };
        out.push(IVFuzzySet::new(mu)?);
    }
    Ok(out)
}

fn random_interval(rng: &mut ChaCha8Rng, q: i64) -> IntervalValue {
    let (a, b) = (rng.gen_range(0..=q), rng.gen_range(0..=q));
    grid_value(a.min(b), a.max(b), q)
}

fn grid_value(lo: i64, hi: i64, q: i64) -> IntervalValue {
    IntervalValue::new(Rational::new(lo, q), Rational::new(hi, q)).expect("grid value is well formed")
}

/// A maximal monotone lattice path from `[0,0]` to `[1,1]` on the `1/q`
/// grid. Every point is comparable with `[0.5,0.5]`, so the path never
/// straddles the half.
pub fn random_chain(rng: &mut ChaCha8Rng, q: i64) -> Vec<IntervalValue> {
    let allowed = |i: i64, j: i64| i <= j && j <= q && !(2 * i < q && 2 * j > q);
    let (mut i, mut j) = (0, 0);
    let mut path = vec![grid_value(0, 0, q)];
    while (i, j) != (q, q) {
        let moves: Vec<(i64, i64)> =
            [(i + 1, j), (i, j + 1), (i + 1, j + 1)].into_iter().filter(|&(a, b)| allowed(a, b)).collect();
        let &(a, b) = moves.choose(rng).expect("diagonal step is always allowed");
        (i, j) = (a, b);
        path.push(grid_value(i, j, q));
    }
    path
}

/// A random strictly increasing chain of hyperideals ending at the carrier.
fn ideal_chain(rng: &mut ChaCha8Rng, ideals: &[ElementSet]) -> Vec<ElementSet> {
    let top = *ideals.last().expect("the carrier is a hyperideal");
    let mut chain = vec![ideals[0]];
    loop {
        let cur = *chain.last().expect("nonempty");
        if cur == top {
            return chain;
        }
        let above: Vec<ElementSet> =
            ideals.iter().copied().filter(|s| *s != cur && cur.is_subset(s)).collect();
        let next = if rng.gen_bool(0.3) { top } else { *above.choose(rng).expect("carrier lies above") };
        chain.push(next);
    }
}
