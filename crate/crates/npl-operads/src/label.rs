//! Labels, finite labelled sets, and bijections between them.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// An atom of a ground set. Small nonnegative integers throughout the kernel;
/// the total order is only used for canonical serialization, never for
/// semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u32);

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Label {
    fn from(v: u32) -> Self {
        Label(v)
    }
}

/// A duplicate-free finite set of labels, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSet(Vec<Label>);

impl FinSet {
    pub fn new(labels: impl IntoIterator<Item = Label>) -> Self {
        let mut v: Vec<Label> = labels.into_iter().collect();
        v.sort();
        v.dedup();
        FinSet(v)
    }

    pub fn from_u32s(labels: impl IntoIterator<Item = u32>) -> Self {
        Self::new(labels.into_iter().map(Label))
    }

    /// The segment `{1, …, n}`.
    pub fn segment(n: u32) -> Self {
        Self::from_u32s(1..=n)
    }

    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    pub fn singleton(l: Label) -> Self {
        FinSet(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: Label) -> bool {
        self.0.binary_search(&l).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    pub fn min_label(&self) -> Option<Label> {
        self.0.first().copied()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        FinSet::new(self.iter().chain(other.iter()))
    }

    pub fn minus(&self, other: &FinSet) -> FinSet {
        FinSet(self.iter().filter(|l| !other.contains(*l)).collect())
    }

    pub fn remove(&self, l: Label) -> FinSet {
        FinSet(self.iter().filter(|&m| m != l).collect())
    }

    pub fn is_disjoint(&self, other: &FinSet) -> bool {
        self.iter().all(|l| !other.contains(l))
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.iter().all(|l| other.contains(l))
    }

    /// `S ⊔_s T`: removes `s` from `self` and adjoins the disjoint set `T`.
    pub fn graft(&self, s: Label, t: &FinSet) -> Result<FinSet> {
        if !self.contains(s) {
            return Err(Error::LabelNotInSet(s.to_string(), self.to_string()));
        }
        let rest = self.remove(s);
        if !rest.is_disjoint(t) {
            return Err(Error::Overlap(rest.to_string(), t.to_string()));
        }
        Ok(rest.union(t))
    }

    /// All nonempty subsets, in a deterministic order.
    pub fn nonempty_subsets(&self) -> Vec<FinSet> {
        let n = self.0.len();
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << n) {
            out.push(FinSet(
                (0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect(),
            ));
        }
        out
    }
}

impl FromIterator<Label> for FinSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        FinSet::new(iter)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// A bijection between two finite label sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    map: BTreeMap<Label, Label>,
}

impl Bijection {
    /// Builds from pairs; fails unless the mapping is injective.
    pub fn new(pairs: impl IntoIterator<Item = (Label, Label)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut seen = FinSet::empty();
        for (a, b) in pairs {
            if map.insert(a, b).is_some() {
                return Err(Error::invalid("bijection", format!("duplicate source {a}")));
            }
            if seen.contains(b) {
                return Err(Error::invalid("bijection", format!("duplicate target {b}")));
            }
            seen = seen.union(&FinSet::singleton(b));
        }
        Ok(Bijection { map })
    }

    pub fn identity(set: &FinSet) -> Self {
        Bijection { map: set.iter().map(|l| (l, l)).collect() }
    }

    pub fn source(&self) -> FinSet {
        FinSet::new(self.map.keys().copied())
    }

    pub fn target(&self) -> FinSet {
        FinSet::new(self.map.values().copied())
    }

    pub fn apply(&self, l: Label) -> Result<Label> {
        self.map
            .get(&l)
            .copied()
            .ok_or_else(|| Error::LabelNotInSet(l.to_string(), self.source().to_string()))
    }

    pub fn apply_set(&self, s: &FinSet) -> Result<FinSet> {
        s.iter().map(|l| self.apply(l)).collect::<Result<_>>()
    }

    /// Restriction to a subset of the source.
    pub fn restrict(&self, s: &FinSet) -> Result<Bijection> {
        if !s.is_subset(&self.source()) {
            return Err(Error::LabelNotInSet(s.to_string(), self.source().to_string()));
        }
        Ok(Bijection { map: s.iter().map(|l| (l, self.map[&l])).collect() })
    }

    /// `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &Bijection) -> Result<Bijection> {
        let pairs: Result<Vec<_>> =
            self.map.iter().map(|(&a, &b)| other.apply(b).map(|c| (a, c))).collect();
        Bijection::new(pairs?)
    }

    /// Union of two bijections with disjoint sources and targets.
    pub fn disjoint_union(&self, other: &Bijection) -> Result<Bijection> {
        if !self.source().is_disjoint(&other.source()) {
            return Err(Error::Overlap(self.source().to_string(), other.source().to_string()));
        }
        Bijection::new(self.map.iter().chain(other.map.iter()).map(|(&a, &b)| (a, b)))
    }
}
