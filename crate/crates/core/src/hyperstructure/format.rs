//! JSON structure files.
//!
//! ```json
//! { "m": 2, "n": 4, "size": 4, "zero": 0,
//!   "f": [{"args": [1, 1], "out": [0, 1]}, ...],
//!   "g": {"default": 0, "exceptions": [{"args": [2, 2, 2, 2], "out": 2}, ...]} }
//! ```
//!
//! Either table may be a plain list of entries or a `default` plus
//! `exceptions`. For `f`, an entry also fills every permutation of its
//! arguments that is not listed itself, so commutative tables only need one
//! line per multiset.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{tuples, Element, ElementSet, HyperOpTable, KrasnerHyperring, NaryOpTable};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry<T> {
    pub args: Vec<Element>,
    pub out: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableSpec<T> {
    List(Vec<TableEntry<T>>),
    Sparse {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        default: Option<T>,
        #[serde(default)]
        exceptions: Vec<TableEntry<T>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub m: usize,
    pub n: usize,
    pub size: usize,
    pub zero: Element,
    pub f: TableSpec<ElementSet>,
    pub g: TableSpec<Element>,
}

impl StructureFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Builds the (unvalidated) structure described by the file.
    pub fn build(&self) -> Result<KrasnerHyperring> {
        if self.size == 0 || self.size > super::MAX_CARRIER {
            return Err(Error::InvalidStructure(format!("carrier size {} outside 1..={}", self.size, super::MAX_CARRIER)));
        }
        for (name, arity) in [("m", self.m), ("n", self.n)] {
            if arity < 2 {
                return Err(Error::InvalidStructure(format!("{name} = {arity} is below 2")));
            }
        }
        let f_cells = fill(&self.f, "f", self.m, self.size, true)?;
        let g_cells = fill(&self.g, "g", self.n, self.size, false)?;
        let f = HyperOpTable::new(self.m, self.size, f_cells)?;
        let g = NaryOpTable::new(self.n, self.size, g_cells)?;
        KrasnerHyperring::new(f, g, self.zero)
    }

    /// Dense `f` listing and a sparse `g` whose default is its most frequent value.
    pub fn from_structure(r: &KrasnerHyperring) -> Self {
        let f = tuples(r.size(), r.m()).map(|args| TableEntry { out: r.f(&args), args }).collect();
        let mut counts: HashMap<Element, usize> = HashMap::new();
        for t in tuples(r.size(), r.n()) {
            *counts.entry(r.g(&t)).or_default() += 1;
        }
        let default = counts.iter().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(*v))).map(|(v, _)| *v).unwrap_or(0);
        let exceptions = tuples(r.size(), r.n())
            .filter(|t| r.g(t) != default)
            .map(|args| TableEntry { out: r.g(&args), args })
            .collect();
        StructureFile {
            m: r.m(),
            n: r.n(),
            size: r.size(),
            zero: r.zero(),
            f: TableSpec::List(f),
            g: TableSpec::Sparse { default: Some(default), exceptions },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structure file serializes")
    }
}

fn fill<T: Copy + PartialEq>(
    spec: &TableSpec<T>,
    name: &str,
    arity: usize,
    size: usize,
    complete_orbits: bool,
) -> Result<Vec<T>> {
    let (default, entries) = match spec {
        TableSpec::List(entries) => (None, entries),
        TableSpec::Sparse { default, exceptions } => (*default, exceptions),
    };
    let total = super::pow(size, arity);
    let mut cells: Vec<Option<T>> = vec![None; total];
    let index = |args: &[Element]| args.iter().fold(0, |acc, &a| acc * size + a);

    for e in entries {
        if e.args.len() != arity {
            return Err(Error::InvalidStructure(format!(
                "{name} entry {:?} has {} arguments, expected {arity}",
                e.args,
                e.args.len()
            )));
        }
        if let Some(&a) = e.args.iter().find(|&&a| a >= size) {
            return Err(Error::ElementOutOfRange { elem: a, size });
        }
        let i = index(&e.args);
        if cells[i].is_some() {
            return Err(Error::InvalidStructure(format!("{name} entry {:?} listed twice", e.args)));
        }
        cells[i] = Some(e.out);
    }
    if complete_orbits {
        let explicit = cells.clone();
        for e in entries {
            for p in permutations(&e.args) {
                let i = index(&p);
                if explicit[i].is_none() && cells[i].is_none() {
                    cells[i] = Some(e.out);
                }
            }
        }
    }
    cells
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.or(default).ok_or_else(|| {
                let args: Vec<Element> = tuples(size, arity).nth(i).unwrap_or_default();
                Error::InvalidStructure(format!("{name} has no entry for {args:?} and no default"))
            })
        })
        .collect()
}

/// Distinct permutations of `args`.
fn permutations(args: &[Element]) -> Vec<Vec<Element>> {
    fn go(rest: &mut Vec<Element>, cur: &mut Vec<Element>, out: &mut Vec<Vec<Element>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        let mut seen = Vec::new();
        for i in 0..rest.len() {
            if seen.contains(&rest[i]) {
                continue;
            }
            seen.push(rest[i]);
            let a = rest.remove(i);
            cur.push(a);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, a);
        }
    }
    let mut out = Vec::new();
    go(&mut args.to_vec(), &mut Vec::new(), &mut out);
    out
}
