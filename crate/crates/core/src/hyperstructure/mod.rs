//! Finite Krasner (m,n)-hyperrings.
//!
//! The additive part is an m-ary hyperoperation `f` stored as a dense table
//! of element sets; the multiplicative part is an n-ary operation `g`.
//! Tuples are indexed in mixed radix with the first argument most
//! significant, so walking indices in order walks tuples lexicographically.

mod axioms;
mod format;
mod ideals;
mod set;

pub use axioms::{AxiomCheck, AxiomReport, ValidationOptions};
pub use format::{StructureFile, TableEntry, TableSpec};
pub use ideals::{enumerate_hyperideals, is_hyperideal, IdealEnumeration, IdealViolation, DEFAULT_SUBSET_CAP};
pub use set::{ElementSet, MAX_CARRIER};

use crate::error::{Error, Result};

/// Index of a carrier element.
pub type Element = usize;

/// Default cap on the number of table lookups an exhaustive check may do.
pub const DEFAULT_MAX_ATOMIC: u128 = 1_000_000_000;

/// Lookup cap, overridable through `HYPERLAB_MAX_ATOMIC`.
pub fn max_atomic() -> u128 {
    std::env::var("HYPERLAB_MAX_ATOMIC")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ATOMIC)
}

pub(crate) fn pow(base: usize, exp: usize) -> usize {
    base.checked_pow(exp as u32).expect("table size overflow")
}

/// Iterates all `len`-tuples over `0..size` in lexicographic order.
pub(crate) fn tuples(size: usize, len: usize) -> impl Iterator<Item = Vec<Element>> {
    let total = pow(size, len);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; len];
        for slot in t.iter_mut().rev() {
            *slot = idx % size;
            idx /= size;
        }
        t
    })
}

/// An m-ary hyperoperation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperOpTable {
    arity: usize,
    size: usize,
    entries: Vec<ElementSet>,
}

impl HyperOpTable {
    pub fn new(arity: usize, size: usize, entries: Vec<ElementSet>) -> Result<Self> {
        check_shape(arity, size, entries.len())?;
        let full = ElementSet::full(size);
        for (idx, e) in entries.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::InvalidStructure(format!("hyperoperation entry #{idx} is empty")));
            }
            if !e.is_subset(&full) {
                return Err(Error::InvalidStructure(format!("hyperoperation entry #{idx} leaves the carrier")));
            }
        }
        Ok(HyperOpTable { arity, size, entries })
    }

    pub fn from_fn(arity: usize, size: usize, mut f: impl FnMut(&[Element]) -> ElementSet) -> Result<Self> {
        let entries = tuples(size, arity).map(|t| f(&t)).collect();
        Self::new(arity, size, entries)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, args: &[Element]) -> ElementSet {
        self.entries[index(self.size, args)]
    }

    pub fn set(&mut self, args: &[Element], out: ElementSet) {
        let i = index(self.size, args);
        self.entries[i] = out;
    }
}

/// An n-ary operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaryOpTable {
    arity: usize,
    size: usize,
    entries: Vec<Element>,
}

impl NaryOpTable {
    pub fn new(arity: usize, size: usize, entries: Vec<Element>) -> Result<Self> {
        check_shape(arity, size, entries.len())?;
        if let Some(idx) = entries.iter().position(|&e| e >= size) {
            return Err(Error::InvalidStructure(format!("operation entry #{idx} leaves the carrier")));
        }
        Ok(NaryOpTable { arity, size, entries })
    }

    pub fn from_fn(arity: usize, size: usize, mut g: impl FnMut(&[Element]) -> Element) -> Result<Self> {
        let entries = tuples(size, arity).map(|t| g(&t)).collect();
        Self::new(arity, size, entries)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, args: &[Element]) -> Element {
        self.entries[index(self.size, args)]
    }

    pub fn set(&mut self, args: &[Element], out: Element) {
        let i = index(self.size, args);
        self.entries[i] = out;
    }
}

fn check_shape(arity: usize, size: usize, len: usize) -> Result<()> {
    if arity < 2 {
        return Err(Error::InvalidStructure(format!("arity {arity} is below 2")));
    }
    if size == 0 || size > MAX_CARRIER {
        return Err(Error::InvalidStructure(format!("carrier size {size} outside 1..={MAX_CARRIER}")));
    }
    let expected = size
        .checked_pow(arity as u32)
        .ok_or_else(|| Error::InvalidStructure("table too large".into()))?;
    if len != expected {
        return Err(Error::InvalidStructure(format!("table has {len} entries, expected {expected}")));
    }
    Ok(())
}

fn index(size: usize, args: &[Element]) -> usize {
    args.iter().fold(0, |acc, &a| acc * size + a)
}

/// A finite Krasner (m,n)-hyperring `(R, f, g)` with a designated zero.
///
/// Construction only checks table shapes. [`KrasnerHyperring::validated`]
/// runs the axiom checks and records the neutral element and inverses;
/// the classifiers refuse structures that have not been through it.
#[derive(Clone, Debug)]
pub struct KrasnerHyperring {
    size: usize,
    zero: Element,
    f: HyperOpTable,
    g: NaryOpTable,
    inverses: Option<Vec<Element>>,
}

impl KrasnerHyperring {
    pub fn new(f: HyperOpTable, g: NaryOpTable, zero: Element) -> Result<Self> {
        if f.size != g.size {
            return Err(Error::InvalidStructure("f and g tables disagree on carrier size".into()));
        }
        if zero >= f.size {
            return Err(Error::ElementOutOfRange { elem: zero, size: f.size });
        }
        Ok(KrasnerHyperring { size: f.size, zero, f, g, inverses: None })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn m(&self) -> usize {
        self.f.arity
    }

    pub fn n(&self) -> usize {
        self.g.arity
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn f_table(&self) -> &HyperOpTable {
        &self.f
    }

    pub fn g_table(&self) -> &NaryOpTable {
        &self.g
    }

    pub fn is_validated(&self) -> bool {
        self.inverses.is_some()
    }

    /// `f(a_1, ..., a_m)`.
    pub fn f(&self, args: &[Element]) -> ElementSet {
        self.f.get(args)
    }

    /// `g(b_1, ..., b_n)`.
    pub fn g(&self, args: &[Element]) -> Element {
        self.g.get(args)
    }

    /// Runs every axiom check; on success the structure is marked validated.
    pub fn validated(self) -> Result<Self> {
        self.validated_with(&ValidationOptions::default())
    }

    pub fn validated_with(mut self, opts: &ValidationOptions) -> Result<Self> {
        let report = self.validate_with(opts)?;
        if !report.all_hold() {
            return Err(Error::AxiomFailure(report.summary()));
        }
        self.inverses = report.inverses.clone();
        Ok(self)
    }

    pub fn validate(&self) -> Result<AxiomReport> {
        self.validate_with(&ValidationOptions::default())
    }

    pub fn validate_with(&self, opts: &ValidationOptions) -> Result<AxiomReport> {
        axioms::validate(self, opts)
    }

    pub fn inverse(&self, a: Element) -> Result<Element> {
        let inv = self.inverses.as_ref().ok_or(Error::NotValidated)?;
        inv.get(a).copied().ok_or(Error::ElementOutOfRange { elem: a, size: self.size })
    }

    /// `-b`; only meaningful on validated structures.
    pub(crate) fn neg(&self, b: Element) -> Element {
        self.inverses.as_ref().expect("validated structure")[b]
    }

    pub(crate) fn require_validated(&self) -> Result<()> {
        if self.is_validated() {
            Ok(())
        } else {
            Err(Error::NotValidated)
        }
    }

    /// `f` extended to sets: the union of `f` over the Cartesian product.
    pub fn f_ext(&self, sets: &[ElementSet]) -> Result<ElementSet> {
        if sets.len() != self.m() {
            return Err(Error::ArityMismatch { expected: self.m(), got: sets.len() });
        }
        if let Some(i) = sets.iter().position(|s| s.is_empty()) {
            return Err(Error::EmptyArgumentSet(i));
        }
        let full = self.carrier();
        if let Some(s) = sets.iter().find(|s| !s.is_subset(&full)) {
            let elem = s.iter().find(|&a| a >= self.size).unwrap_or(self.size);
            return Err(Error::ElementOutOfRange { elem, size: self.size });
        }
        Ok(self.f_ext_unchecked(sets))
    }

    pub(crate) fn f_ext_unchecked(&self, sets: &[ElementSet]) -> ElementSet {
        let members: Vec<Vec<Element>> = sets.iter().map(|s| s.to_vec()).collect();
        let mut out = ElementSet::EMPTY;
        let mut args = vec![0; members.len()];
        product_each(&members, 0, &mut args, &mut |t| out = out.union(&self.f(t)));
        out
    }

    /// The iterated hyperoperation `f_(l)` on `l(m-1)+1` arguments,
    /// bracketed to the left.
    pub fn f_iter(&self, l: usize, args: &[Element]) -> Result<ElementSet> {
        let m = self.m();
        let expected = l * (m - 1) + 1;
        if l == 0 || args.len() != expected {
            return Err(Error::ArityMismatch { expected, got: args.len() });
        }
        if let Some(&a) = args.iter().find(|&&a| a >= self.size) {
            return Err(Error::ElementOutOfRange { elem: a, size: self.size });
        }
        let mut acc = self.f(&args[..m]);
        for chunk in args[m..].chunks(m - 1) {
            let mut sets = Vec::with_capacity(m);
            sets.push(acc);
            sets.extend(chunk.iter().map(|&a| ElementSet::singleton(a)));
            acc = self.f_ext_unchecked(&sets);
        }
        Ok(acc)
    }
}

pub(crate) fn product_each(members: &[Vec<Element>], depth: usize, args: &mut Vec<Element>, visit: &mut impl FnMut(&[Element])) {
    if depth == members.len() {
        visit(args);
        return;
    }
    for &a in &members[depth] {
        args[depth] = a;
        product_each(members, depth + 1, args, visit);
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
    fn tuple_order_is_lexicographic() {
        let ts: Vec<_> = tuples(3, 2).collect();
        assert_eq!(ts[0], vec![0, 0]);
        assert_eq!(ts[1], vec![0, 1]);
        assert_eq!(ts[3], vec![1, 0]);
        assert_eq!(ts.len(), 9);
    }

    #[test]
    fn extended_hyperoperation() {
        let r = paper_24();
        assert_eq!(r.f_ext(&[set(&[1]), set(&[3])]).unwrap(), r.f(&[1, 3]));
        assert_eq!(r.f_ext(&[set(&[1]), set(&[1])]).unwrap(), set(&[0, 1]));
        assert_eq!(r.f_ext(&[set(&[1]), set(&[2, 3])]).unwrap(), set(&[2, 3]));
        assert_eq!(r.f_ext(&[set(&[1]), ElementSet::EMPTY]), Err(Error::EmptyArgumentSet(1)));
        assert!(matches!(r.f_ext(&[set(&[1])]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn iterated_hyperoperation() {
        let r = paper_24();
        assert_eq!(r.f_iter(1, &[1, 3]).unwrap(), r.f(&[1, 3]));
        assert_eq!(r.f_iter(2, &[1, 1, 2]).unwrap(), set(&[2, 3]));
        assert_eq!(r.f_iter(3, &[2, 2, 2, 2]).unwrap(), set(&[0]));
        assert_eq!(r.f_iter(2, &[1, 2]), Err(Error::ArityMismatch { expected: 3, got: 2 }));
        let z = zmod(5, 3, 2).unwrap();
        assert_eq!(z.f_iter(2, &[1, 2, 3, 4, 4]).unwrap(), set(&[4]));
    }

    #[test]
    fn inverses_require_validation() {
        let r = paper_24();
        assert_eq!(r.inverse(0).unwrap(), 0);
        assert_eq!(r.inverse(1).unwrap(), 1);
        assert_eq!(r.inverse(2).unwrap(), 2);
        let raw = KrasnerHyperring::new(r.f_table().clone(), r.g_table().clone(), 0).unwrap();
        assert_eq!(raw.inverse(1), Err(Error::NotValidated));
    }

    #[test]
    fn table_shape_errors() {
        assert!(HyperOpTable::new(2, 2, vec![ElementSet::singleton(0); 3]).is_err());
        assert!(HyperOpTable::new(2, 2, vec![ElementSet::EMPTY; 4]).is_err());
        assert!(NaryOpTable::new(2, 2, vec![0, 1, 2, 0]).is_err());
        assert!(NaryOpTable::new(1, 2, vec![0, 1]).is_err());
    }

    #[test]
    fn left_bracketing_matches_right_bracketing() {
        let r = paper_24();
        for t in tuples(4, 3) {
            let left = r.f_iter(2, &t).unwrap();
            let inner = r.f(&t[1..]);
            let right = r.f_ext_unchecked(&[ElementSet::singleton(t[0]), inner]);
            assert_eq!(left, right, "tuple {t:?}");
        }
    }
}
