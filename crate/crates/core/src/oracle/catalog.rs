//! Vetted structures used by the theorem suite.

use crate::error::{Error, Result};
use crate::hyperstructure::{ElementSet, HyperOpTable, KrasnerHyperring, NaryOpTable};

/// The (2,4)-hyperring on `{0,1,2,3}` with `A = {0,1}`, `B = {2,3}` and
/// `g = 2` on `B⁴`, `0` elsewhere.
pub fn paper_24_unvalidated() -> KrasnerHyperring {
    let a: ElementSet = [0, 1].into_iter().collect();
    let b: ElementSet = [2, 3].into_iter().collect();
    let s = ElementSet::singleton;
    #[rustfmt::skip]
    let rows = [
        [s(0), s(1), s(2), s(3)],
        [s(1), a,    s(3), b   ],
        [s(2), s(3), s(0), s(1)],
        [s(3), b,    s(1), a   ],
    ];
    let f = HyperOpTable::from_fn(2, 4, |t| rows[t[0]][t[1]]).expect("well-formed table");
    let g = NaryOpTable::from_fn(4, 4, |t| if t.iter().all(|&x| x >= 2) { 2 } else { 0 }).expect("well-formed table");
    KrasnerHyperring::new(f, g, 0).expect("well-formed structure")
}

pub fn paper_24() -> KrasnerHyperring {
    paper_24_unvalidated().validated().expect("paper_24 is a Krasner hyperring")
}

/// `Z_k` with m-ary addition as a singleton-valued hyperoperation and
/// n-ary multiplication.
pub fn zmod_unvalidated(k: usize, m: usize, n: usize) -> Result<KrasnerHyperring> {
    if !(2..=crate::hyperstructure::MAX_CARRIER).contains(&k) {
        return Err(Error::InvalidStructure(format!("zmod modulus {k} out of range")));
    }
    let f = HyperOpTable::from_fn(m, k, |t| ElementSet::singleton(t.iter().sum::<usize>() % k))?;
    let g = NaryOpTable::from_fn(n, k, |t| t.iter().fold(1, |acc, &x| acc * x % k))?;
    KrasnerHyperring::new(f, g, 0)
}

pub fn zmod(k: usize, m: usize, n: usize) -> Result<KrasnerHyperring> {
    zmod_unvalidated(k, m, n)?.validated()
}

/// A named catalog entry.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub structure: KrasnerHyperring,
}

const ZMOD_SHAPES: &[(usize, usize, usize)] = &[
    (2, 2, 2),
    (3, 2, 2),
    (4, 2, 2),
    (5, 2, 2),
    (6, 2, 2),
    (4, 2, 4),
    (5, 2, 4),
    (5, 3, 2),
    (3, 3, 3),
];

/// Every catalog structure, validated on construction.
pub fn catalog() -> Result<Vec<Entry>> {
    let mut out = vec![Entry { name: "paper_24".into(), structure: paper_24_unvalidated().validated()? }];
    for &(k, m, n) in ZMOD_SHAPES {
        out.push(Entry { name: format!("zmod({k},{m},{n})"), structure: zmod(k, m, n)? });
    }
    Ok(out)
}

/// Looks up `paper_24` or `zmod(k,m,n)` by name.
pub fn by_name(name: &str) -> Result<KrasnerHyperring> {
    let name = name.trim();
    if name == "paper_24" {
        return Ok(paper_24());
    }
    let inner = name
        .strip_prefix("zmod(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unknown catalog structure {name:?}")))?;
    let parts: Vec<usize> = inner
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad zmod parameters in {name:?}")))?;
    match parts.as_slice() {
        [k, m, n] => zmod(*k, *m, *n),
        _ => Err(Error::Parse(format!("zmod needs three parameters, got {name:?}"))),
    }
}
