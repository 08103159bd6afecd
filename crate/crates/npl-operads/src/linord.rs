//! Linear orders (words without repeated letters), shuffles, and linear set
//! partitions.

use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use crate::partition::SetPartition;
use std::fmt;

/// A linear order on its ground set, written as a duplicate-free word.
/// The empty word is the unique order on the empty set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LinearOrder {
    word: Vec<Label>,
}

impl LinearOrder {
    pub fn new(word: impl IntoIterator<Item = Label>) -> Result<Self> {
        let word: Vec<Label> = word.into_iter().collect();
        let as_set = FinSet::new(word.iter().copied());
        if as_set.len() != word.len() {
            return Err(Error::invalid("linear order", "repeated letter"));
        }
        Ok(LinearOrder { word })
    }

    pub fn from_u32s(word: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(word.into_iter().map(Label))
    }

    pub fn empty() -> Self {
        LinearOrder { word: Vec::new() }
    }

    pub fn word(&self) -> &[Label] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn ground_set(&self) -> FinSet {
        FinSet::new(self.word.iter().copied())
    }

    /// Subword on `s`, keeping relative order. Requires `s ⊆` ground set.
    pub fn restrict(&self, s: &FinSet) -> Result<LinearOrder> {
        if !s.is_subset(&self.ground_set()) {
            return Err(Error::LabelNotInSet(s.to_string(), self.ground_set().to_string()));
        }
        Ok(LinearOrder { word: self.word.iter().copied().filter(|l| s.contains(*l)).collect() })
    }

    /// Concatenation on disjoint ground sets.
    pub fn concat(&self, other: &LinearOrder) -> Result<LinearOrder> {
        if !self.ground_set().is_disjoint(&other.ground_set()) {
            return Err(Error::Overlap(
                self.ground_set().to_string(),
                other.ground_set().to_string(),
            ));
        }
        Ok(LinearOrder { word: self.word.iter().chain(other.word.iter()).copied().collect() })
    }

    /// Splits as `left | s | right`. Requires `s` in the ground set.
    pub fn split_at(&self, s: Label) -> Result<(LinearOrder, LinearOrder)> {
        let pos = self
            .word
            .iter()
            .position(|&l| l == s)
            .ok_or_else(|| Error::LabelNotInSet(s.to_string(), self.ground_set().to_string()))?;
        Ok((
            LinearOrder { word: self.word[..pos].to_vec() },
            LinearOrder { word: self.word[pos + 1..].to_vec() },
        ))
    }

    pub fn relabel(&self, sigma: &Bijection) -> Result<LinearOrder> {
        Ok(LinearOrder {
            word: self.word.iter().map(|&l| sigma.apply(l)).collect::<Result<_>>()?,
        })
    }

    /// All linear orders on `ground`, in a deterministic order.
    pub fn enumerate(ground: &FinSet) -> Vec<LinearOrder> {
        let labels: Vec<Label> = ground.iter().collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; labels.len()];
        fn go(
            labels: &[Label],
            used: &mut Vec<bool>,
            cur: &mut Vec<Label>,
            out: &mut Vec<LinearOrder>,
        ) {
            if cur.len() == labels.len() {
                out.push(LinearOrder { word: cur.clone() });
                return;
            }
            for i in 0..labels.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(labels[i]);
                    go(labels, used, cur, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        go(&labels, &mut used, &mut cur, &mut out);
        out
    }
}

/// All interleavings of two disjoint orders, preserving both relative orders.
/// `|shuffles(a, b)| = C(|a|+|b|, |a|)`.
pub fn shuffles(a: &LinearOrder, b: &LinearOrder) -> Result<Vec<LinearOrder>> {
    if !a.ground_set().is_disjoint(&b.ground_set()) {
        return Err(Error::Overlap(a.ground_set().to_string(), b.ground_set().to_string()));
    }
    fn go(a: &[Label], b: &[Label], cur: &mut Vec<Label>, out: &mut Vec<LinearOrder>) {
        if a.is_empty() && b.is_empty() {
            out.push(LinearOrder { word: cur.clone() });
            return;
        }
        if let Some((&h, t)) = a.split_first() {
            cur.push(h);
            go(t, b, cur, out);
            cur.pop();
        }
        if let Some((&h, t)) = b.split_first() {
            cur.push(h);
            go(a, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(a.word(), b.word(), &mut Vec::new(), &mut out);
    Ok(out)
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "ε");
        }
        for (i, l) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A set partition with a linear order on each block. Canonical form sorts
/// the chains by their minimum label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearSetPartition {
    chains: Vec<LinearOrder>,
}

impl LinearSetPartition {
    pub fn new(chains: impl IntoIterator<Item = LinearOrder>) -> Result<Self> {
        let mut chains: Vec<LinearOrder> = chains.into_iter().collect();
        if chains.iter().any(LinearOrder::is_empty) {
            return Err(Error::invalid("linear set partition", "empty chain"));
        }
        // underlying word-sets must form a partition
        SetPartition::new(chains.iter().map(|c| c.ground_set()))?;
        chains.sort_by_key(|c| c.ground_set().min_label());
        Ok(LinearSetPartition { chains })
    }

    pub fn chains(&self) -> &[LinearOrder] {
        &self.chains
    }

    pub fn ground_set(&self) -> FinSet {
        self.chains.iter().fold(FinSet::empty(), |acc, c| acc.union(&c.ground_set()))
    }

    pub fn underlying_partition(&self) -> SetPartition {
        SetPartition::new(self.chains.iter().map(|c| c.ground_set()))
            .expect("chains are disjoint by construction")
    }

    pub fn chain_containing(&self, l: Label) -> Option<&LinearOrder> {
        self.chains.iter().find(|c| c.ground_set().contains(l))
    }

    pub fn relabel(&self, sigma: &Bijection) -> Result<LinearSetPartition> {
        LinearSetPartition::new(
            self.chains.iter().map(|c| c.relabel(sigma)).collect::<Result<Vec<_>>>()?,
        )
    }

    /// All linear set partitions of `ground` (every partition, every order on
    /// each block).
    pub fn enumerate(ground: &FinSet) -> Vec<LinearSetPartition> {
        let mut out = Vec::new();
        for p in SetPartition::enumerate(ground) {
            let per_block: Vec<Vec<LinearOrder>> =
                p.blocks().iter().map(LinearOrder::enumerate).collect();
            let mut choices: Vec<Vec<LinearOrder>> = vec![Vec::new()];
            for orders in &per_block {
                let mut next = Vec::with_capacity(choices.len() * orders.len());
                for c in &choices {
                    for o in orders {
                        let mut c = c.clone();
                        c.push(o.clone());
                        next.push(c);
                    }
                }
                choices = next;
            }
            for c in choices {
                out.push(LinearSetPartition::new(c).expect("valid by construction"));
            }
        }
        out
    }
}

impl fmt::Display for LinearSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.chains.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(v: &[u32]) -> LinearOrder {
        LinearOrder::from_u32s(v.iter().copied()).unwrap()
    }

    fn set(v: &[u32]) -> FinSet {
        FinSet::from_u32s(v.iter().copied())
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(ord(&[1, 3, 2, 4]).restrict(&set(&[2, 3])).unwrap(), ord(&[3, 2]));
        assert_eq!(ord(&[1, 2]).restrict(&set(&[])).unwrap(), LinearOrder::empty());
        assert_eq!(ord(&[5, 1, 4]).restrict(&set(&[5, 1, 4])).unwrap(), ord(&[5, 1, 4]));
        assert!(ord(&[1, 2]).restrict(&set(&[3])).is_err());
    }

    #[test]
    fn shuffle_examples() {
        let got = shuffles(&ord(&[1, 2]), &ord(&[3])).unwrap();
        let expect: Vec<LinearOrder> =
            vec![ord(&[1, 2, 3]), ord(&[1, 3, 2]), ord(&[3, 1, 2])];
        assert_eq!(got.len(), 3);
        for e in &expect {
            assert!(got.contains(e));
        }

        assert_eq!(shuffles(&ord(&[1]), &LinearOrder::empty()).unwrap(), vec![ord(&[1])]);

        // |Sh(3|4|2, 1)| = 4
        let got = shuffles(&ord(&[3, 4, 2]), &ord(&[1])).unwrap();
        let expect =
            [ord(&[3, 4, 2, 1]), ord(&[3, 4, 1, 2]), ord(&[3, 1, 4, 2]), ord(&[1, 3, 4, 2])];
        assert_eq!(got.len(), 4);
        for e in &expect {
            assert!(got.contains(e));
        }

        assert!(shuffles(&ord(&[1]), &ord(&[1])).is_err());
    }

    #[test]
    fn shuffle_count_symmetry_and_restriction() {
        // exhaustive up to |a|+|b| = 6 over segments
        fn binom(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for na in 0..=3usize {
            for nb in 0..=3usize {
                let a = ord(&(1..=na as u32).collect::<Vec<_>>());
                let b = ord(&(10..10 + nb as u32).collect::<Vec<_>>());
                let sh = shuffles(&a, &b).unwrap();
                assert_eq!(sh.len(), binom(na + nb, na));
                for l in &sh {
                    assert_eq!(l.restrict(&a.ground_set()).unwrap(), a);
                    assert_eq!(l.restrict(&b.ground_set()).unwrap(), b);
                }
                let mut sh_rev = shuffles(&b, &a).unwrap();
                let mut sh_sorted = sh.clone();
                sh_sorted.sort();
                sh_rev.sort();
                assert_eq!(sh_sorted, sh_rev);
            }
        }
    }

    #[test]
    fn linear_set_partition_canonicalizes() {
        let lsp = LinearSetPartition::new([ord(&[7, 9, 8]), ord(&[3, 1])]).unwrap();
        assert_eq!(lsp.chains()[0], ord(&[3, 1]));
        assert_eq!(lsp.chains()[1], ord(&[7, 9, 8]));
        assert!(LinearSetPartition::new([ord(&[1, 2]), ord(&[2, 3])]).is_err());
    }

    #[test]
    fn enumerate_counts_sets_of_lists() {
        // numbers of partitions into linearly ordered blocks
        let counts = [1usize, 1, 3, 13, 73];
        for n in 0..=4u32 {
            assert_eq!(
                LinearSetPartition::enumerate(&FinSet::segment(n)).len(),
                counts[n as usize]
            );
        }
    }
}
