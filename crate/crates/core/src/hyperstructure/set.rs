use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest carrier the bitset representation supports.
pub const MAX_CARRIER: usize = 64;

/// A subset of a carrier of at most [`MAX_CARRIER`] elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn singleton(a: usize) -> Self {
        ElementSet(1 << a)
    }

    pub fn full(size: usize) -> Self {
        if size >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << size) - 1)
        }
    }

    pub fn insert(&mut self, a: usize) {
        self.0 |= 1 << a;
    }

    pub fn contains(&self, a: usize) -> bool {
        a < 64 && self.0 & (1 << a) != 0
    }

    pub fn union(&self, other: &Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..64).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order used in reports: by size, then lexicographically.
    pub fn canonical_key(&self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        if let Some(bad) = v.iter().find(|&&a| a >= MAX_CARRIER) {
            return Err(serde::de::Error::custom(format!("element {bad} exceeds carrier limit")));
        }
        Ok(v.into_iter().collect())
    }
}
