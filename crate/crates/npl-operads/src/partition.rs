//! Set partitions and the refinement lattice: refinement tests, coinduced
//! partitions, the canonical surjection between comparable partitions, and
//! the enumeration of its sections.

use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use std::fmt;

/// A partition of a finite ground set into nonempty, pairwise disjoint
/// blocks. Canonical form: each block sorted, blocks sorted by minimum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<FinSet>,
}

impl SetPartition {
    pub fn new(blocks: impl IntoIterator<Item = FinSet>) -> Result<Self> {
        let mut blocks: Vec<FinSet> = blocks.into_iter().collect();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::invalid("partition", "empty block"));
            }
        }
        blocks.sort();
        for w in blocks.windows(2) {
            if !w[0].is_disjoint(&w[1]) {
                return Err(Error::Overlap(w[0].to_string(), w[1].to_string()));
            }
        }
        // sorted FinSets on disjoint blocks are ordered by minimum already
        Ok(SetPartition { blocks })
    }

    /// The partition of `ground` into singletons.
    pub fn singletons(ground: &FinSet) -> Self {
        SetPartition { blocks: ground.iter().map(FinSet::singleton).collect() }
    }

    /// The one-block partition `{ground}` (nonempty ground set).
    pub fn single_block(ground: &FinSet) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::EmptyGround);
        }
        Ok(SetPartition { blocks: vec![ground.clone()] })
    }

    pub fn blocks(&self) -> &[FinSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_set(&self) -> FinSet {
        FinSet::new(self.blocks.iter().flat_map(|b| b.iter()))
    }

    pub fn block_containing(&self, l: Label) -> Option<&FinSet> {
        self.blocks.iter().find(|b| b.contains(l))
    }

    /// True iff every block of `self` is contained in some block of `pi`
    /// (so `self` is the finer partition). Requires equal ground sets.
    pub fn refines(&self, pi: &SetPartition) -> Result<bool> {
        if self.ground_set() != pi.ground_set() {
            return Err(Error::GroundSetMismatch(
                self.ground_set().to_string(),
                pi.ground_set().to_string(),
            ));
        }
        Ok(self
            .blocks
            .iter()
            .all(|b| pi.block_containing(b.min_label().unwrap()).is_some_and(|c| b.is_subset(c))))
    }

    /// Merges blocks of `self` according to a partition `tau` of its blocks:
    /// each group of blocks is replaced by the union of its members.
    pub fn induced(&self, tau: &[Vec<FinSet>]) -> Result<SetPartition> {
        let mut seen: Vec<&FinSet> = Vec::new();
        for group in tau {
            for b in group {
                if !self.blocks.contains(b) {
                    return Err(Error::NotABlockPartition(self.to_string(), b.to_string()));
                }
                if seen.contains(&b) {
                    return Err(Error::NotABlockPartition(
                        self.to_string(),
                        format!("block {b} listed twice"),
                    ));
                }
                seen.push(b);
            }
        }
        if seen.len() != self.blocks.len() {
            return Err(Error::NotABlockPartition(self.to_string(), "missing blocks".into()));
        }
        SetPartition::new(tau.iter().map(|group| {
            group.iter().fold(FinSet::empty(), |acc, b| acc.union(b))
        }))
    }

    /// For refining `self ≤ pi`: maps each block of `self` to the unique
    /// block of `pi` containing it.
    pub fn canonical_surjection(&self, pi: &SetPartition) -> Result<Vec<(FinSet, FinSet)>> {
        if !self.refines(pi)? {
            return Err(Error::NotARefinement(self.to_string(), pi.to_string()));
        }
        Ok(self
            .blocks
            .iter()
            .map(|b| (b.clone(), pi.block_containing(b.min_label().unwrap()).unwrap().clone()))
            .collect())
    }

    /// All right inverses of [`Self::canonical_surjection`]: assignments of
    /// one `self`-block inside each `pi`-block. Enumerated lexicographically
    /// in the canonical block order.
    pub fn sections(&self, pi: &SetPartition) -> Result<Vec<Vec<(FinSet, FinSet)>>> {
        if !self.refines(pi)? {
            return Err(Error::NotARefinement(self.to_string(), pi.to_string()));
        }
        let fibers: Vec<(FinSet, Vec<FinSet>)> = pi
            .blocks
            .iter()
            .map(|c| {
                let fiber: Vec<FinSet> =
                    self.blocks.iter().filter(|b| b.is_subset(c)).cloned().collect();
                (c.clone(), fiber)
            })
            .collect();
        let mut out = vec![Vec::new()];
        for (c, fiber) in fibers {
            let mut next = Vec::with_capacity(out.len() * fiber.len());
            for partial in &out {
                for choice in &fiber {
                    let mut p = partial.clone();
                    p.push((c.clone(), choice.clone()));
                    next.push(p);
                }
            }
            out = next;
        }
        Ok(out)
    }

    pub fn relabel(&self, sigma: &Bijection) -> Result<SetPartition> {
        SetPartition::new(
            self.blocks.iter().map(|b| sigma.apply_set(b)).collect::<Result<Vec<_>>>()?,
        )
    }

    /// All partitions of `ground`, by recursive block insertion; the order is
    /// deterministic.
    pub fn enumerate(ground: &FinSet) -> Vec<SetPartition> {
        let labels: Vec<Label> = ground.iter().collect();
        let mut out = Vec::new();
        let mut blocks: Vec<Vec<Label>> = Vec::new();
        fn go(labels: &[Label], i: usize, blocks: &mut Vec<Vec<Label>>, out: &mut Vec<SetPartition>) {
            if i == labels.len() {
                out.push(
                    SetPartition::new(blocks.iter().map(|b| FinSet::new(b.iter().copied())))
                        .expect("blocks are disjoint by construction"),
                );
                return;
            }
            for k in 0..blocks.len() {
                blocks[k].push(labels[i]);
                go(labels, i + 1, blocks, out);
                blocks[k].pop();
            }
            blocks.push(vec![labels[i]]);
            go(labels, i + 1, blocks, out);
            blocks.pop();
        }
        if labels.is_empty() {
            return vec![SetPartition { blocks: vec![] }];
        }
        go(&labels, 0, &mut blocks, &mut out);
        out
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> FinSet {
        FinSet::from_u32s(v.iter().copied())
    }

    fn part(blocks: &[&[u32]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| set(b))).unwrap()
    }

    #[test]
    fn refinement_examples() {
        let fine = part(&[&[1], &[2], &[3]]);
        let coarse = part(&[&[1, 2], &[3]]);
        assert!(fine.refines(&coarse).unwrap());
        let p = part(&[&[1, 2, 3]]);
        assert!(p.refines(&p).unwrap());
        assert!(!part(&[&[1, 2], &[3]]).refines(&part(&[&[1, 3], &[2]])).unwrap());
        assert!(part(&[&[1]]).refines(&part(&[&[2]])).is_err());
    }

    #[test]
    fn refinement_is_a_partial_order_small() {
        // exhaustive on ground sets of size <= 5, including bottom/top
        for n in 1..=5u32 {
            let ground = FinSet::segment(n);
            let all = SetPartition::enumerate(&ground);
            let ones = SetPartition::singletons(&ground);
            let zero = SetPartition::single_block(&ground).unwrap();
            for p in &all {
                assert!(p.refines(p).unwrap());
                assert!(ones.refines(p).unwrap());
                assert!(p.refines(&zero).unwrap());
                for q in &all {
                    let pq = p.refines(q).unwrap();
                    let qp = q.refines(p).unwrap();
                    if pq && qp {
                        assert_eq!(p, q);
                    }
                    for r in &all {
                        if pq && q.refines(r).unwrap() {
                            assert!(p.refines(r).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn induced_examples() {
        let p = part(&[&[1], &[2], &[3]]);
        let tau = vec![vec![set(&[1]), set(&[2])], vec![set(&[3])]];
        assert_eq!(p.induced(&tau).unwrap(), part(&[&[1, 2], &[3]]));

        let p = part(&[&[1, 2], &[3, 4]]);
        let tau = vec![vec![set(&[1, 2]), set(&[3, 4])]];
        assert_eq!(p.induced(&tau).unwrap(), part(&[&[1, 2, 3, 4]]));

        let p = part(&[&[1, 2], &[3], &[4, 5]]);
        let tau = vec![vec![set(&[1, 2]), set(&[4, 5])], vec![set(&[3])]];
        assert_eq!(p.induced(&tau).unwrap(), part(&[&[1, 2, 4, 5], &[3]]));

        // identity and total merges
        let p = part(&[&[1, 2], &[3]]);
        let id_tau: Vec<Vec<FinSet>> = p.blocks().iter().map(|b| vec![b.clone()]).collect();
        assert_eq!(p.induced(&id_tau).unwrap(), p);
        let tot: Vec<Vec<FinSet>> = vec![p.blocks().to_vec()];
        assert_eq!(p.induced(&tot).unwrap(), part(&[&[1, 2, 3]]));

        assert!(p.induced(&[vec![set(&[9])]]).is_err());
    }

    #[test]
    fn surjection_examples() {
        let rho = part(&[&[1], &[2], &[3]]);
        let pi = part(&[&[1, 2], &[3]]);
        let sur = rho.canonical_surjection(&pi).unwrap();
        assert_eq!(
            sur,
            vec![
                (set(&[1]), set(&[1, 2])),
                (set(&[2]), set(&[1, 2])),
                (set(&[3]), set(&[3]))
            ]
        );

        let p = part(&[&[1, 2], &[3]]);
        let id = p.canonical_surjection(&p).unwrap();
        assert!(id.iter().all(|(a, b)| a == b));

        let rho = part(&[&[1], &[2], &[3], &[4]]);
        let pi = part(&[&[1, 2], &[3, 4]]);
        let sur = rho.canonical_surjection(&pi).unwrap();
        assert_eq!(sur[0].1, set(&[1, 2]));
        assert_eq!(sur[3].1, set(&[3, 4]));

        assert!(part(&[&[1, 3], &[2]])
            .canonical_surjection(&part(&[&[1, 2], &[3]]))
            .is_err());
    }

    #[test]
    fn sections_examples() {
        let rho = part(&[&[1], &[2], &[3]]);
        let pi = part(&[&[1, 2], &[3]]);
        let secs = rho.sections(&pi).unwrap();
        assert_eq!(secs.len(), 2);

        let p = part(&[&[1, 2], &[3]]);
        assert_eq!(p.sections(&p).unwrap().len(), 1);

        let rho = part(&[&[1], &[2], &[3], &[4]]);
        let pi = part(&[&[1, 2], &[3, 4]]);
        assert_eq!(rho.sections(&pi).unwrap().len(), 4);
    }

    #[test]
    fn section_count_is_product_of_fiber_sizes() {
        for n in 1..=5u32 {
            let ground = FinSet::segment(n);
            let all = SetPartition::enumerate(&ground);
            for pi in &all {
                for rho in &all {
                    if rho.refines(pi).unwrap() {
                        let secs = rho.sections(pi).unwrap();
                        let expected: usize = pi
                            .blocks()
                            .iter()
                            .map(|c| rho.blocks().iter().filter(|b| b.is_subset(c)).count())
                            .product();
                        assert_eq!(secs.len(), expected);
                        // every section is a genuine right inverse
                        for s in &secs {
                            for (c, b) in s {
                                assert!(b.is_subset(c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for n in 0..=5u32 {
            assert_eq!(SetPartition::enumerate(&FinSet::segment(n)).len(), bell[n as usize]);
        }
    }

    #[test]
    fn induced_top_and_bottom() {
        for n in 1..=4u32 {
            let ground = FinSet::segment(n);
            for p in SetPartition::enumerate(&ground) {
                let fine: Vec<Vec<FinSet>> = p.blocks().iter().map(|b| vec![b.clone()]).collect();
                assert_eq!(p.induced(&fine).unwrap(), p);
                let total = vec![p.blocks().to_vec()];
                assert_eq!(p.induced(&total).unwrap(), SetPartition::single_block(&ground).unwrap());
            }
        }
    }
}
