//! Cycles and permutations of finite labelled sets, with the passages between
//! cycles and linear orders.

use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use crate::lincomb::LinComb;
use crate::linord::LinearOrder;
use crate::partition::SetPartition;
use std::fmt;

/// A cyclic bijection `i₁ ↦ i₂ ↦ … ↦ iₙ ↦ i₁` on a nonempty ground set,
/// stored rotated so the minimum label comes first. Two rotations of one
/// sequence are therefore equal as values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    rotation: Vec<Label>,
}

impl Cycle {
    pub fn new(rotation: impl IntoIterator<Item = Label>) -> Result<Self> {
        let word: Vec<Label> = rotation.into_iter().collect();
        if word.is_empty() {
            return Err(Error::EmptyGround);
        }
        let as_set = FinSet::new(word.iter().copied());
        if as_set.len() != word.len() {
            return Err(Error::invalid("cycle", "repeated label"));
        }
        let pos = word
            .iter()
            .position(|&l| Some(l) == as_set.min_label())
            .expect("nonempty");
        let rotation = word[pos..].iter().chain(word[..pos].iter()).copied().collect();
        Ok(Cycle { rotation })
    }

    pub fn from_u32s(rotation: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::new(rotation.into_iter().map(Label))
    }

    pub fn rotation(&self) -> &[Label] {
        &self.rotation
    }

    pub fn len(&self) -> usize {
        self.rotation.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ground_set(&self) -> FinSet {
        FinSet::new(self.rotation.iter().copied())
    }

    /// The image of `l` under the cycle.
    pub fn apply(&self, l: Label) -> Result<Label> {
        let pos = self
            .rotation
            .iter()
            .position(|&m| m == l)
            .ok_or_else(|| Error::LabelNotInSet(l.to_string(), self.ground_set().to_string()))?;
        Ok(self.rotation[(pos + 1) % self.rotation.len()])
    }

    /// The word `i | c(i) | … | c^{n-1}(i)` starting at `i`.
    pub fn order_from(&self, start: Label) -> Result<LinearOrder> {
        let pos = self
            .rotation
            .iter()
            .position(|&m| m == start)
            .ok_or_else(|| Error::LabelNotInSet(start.to_string(), self.ground_set().to_string()))?;
        LinearOrder::new(
            self.rotation[pos..].iter().chain(self.rotation[..pos].iter()).copied(),
        )
    }

    pub fn relabel(&self, sigma: &Bijection) -> Result<Cycle> {
        Cycle::new(self.rotation.iter().map(|&l| sigma.apply(l)).collect::<Result<Vec<_>>>()?)
    }

    /// All cycles on `ground`: `(n-1)!` of them.
    pub fn enumerate(ground: &FinSet) -> Vec<Cycle> {
        if ground.is_empty() {
            return Vec::new();
        }
        let min = ground.min_label().unwrap();
        let rest = ground.remove(min);
        LinearOrder::enumerate(&rest)
            .into_iter()
            .map(|tail| {
                Cycle::new(std::iter::once(min).chain(tail.word().iter().copied()))
                    .expect("distinct labels")
            })
            .collect()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.rotation.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// `lin`: the formal sum of the `|I|` linearizations of a cycle, one per
/// starting point.
pub fn cycle_lin(c: &Cycle) -> LinComb<LinearOrder> {
    let mut out = LinComb::zero();
    for start in c.ground_set().iter() {
        out.add_term(c.order_from(start).expect("start lies in the cycle"), crate::rational::rat_int(1));
    }
    out
}

/// `cyc`: closes a nonempty word into a cycle.
pub fn cycle_cyc(l: &LinearOrder) -> Result<Cycle> {
    Cycle::new(l.word().iter().copied())
}

/// A permutation presented as its commuting product of disjoint cycles
/// (fixed points are 1-cycles). Cycles are kept sorted by minimum label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    cycles: Vec<Cycle>,
}

impl Permutation {
    pub fn new(cycles: impl IntoIterator<Item = Cycle>) -> Result<Self> {
        let mut cycles: Vec<Cycle> = cycles.into_iter().collect();
        // disjointness via the partition constructor
        SetPartition::new(cycles.iter().map(|c| c.ground_set()))?;
        cycles.sort_by_key(|c| c.ground_set().min_label());
        Ok(Permutation { cycles })
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn ground_set(&self) -> FinSet {
        self.cycles.iter().fold(FinSet::empty(), |acc, c| acc.union(&c.ground_set()))
    }

    pub fn cycle_containing(&self, l: Label) -> Option<&Cycle> {
        self.cycles.iter().find(|c| c.ground_set().contains(l))
    }

    /// The permutation with one cycle removed.
    pub fn without_cycle(&self, c: &Cycle) -> Permutation {
        Permutation { cycles: self.cycles.iter().filter(|d| *d != c).cloned().collect() }
    }

    pub fn relabel(&self, sigma: &Bijection) -> Result<Permutation> {
        Permutation::new(
            self.cycles.iter().map(|c| c.relabel(sigma)).collect::<Result<Vec<_>>>()?,
        )
    }

    /// All permutations of `ground` via cycle assignments: `n!` of them.
    pub fn enumerate(ground: &FinSet) -> Vec<Permutation> {
        let mut out = Vec::new();
        for p in SetPartition::enumerate(ground) {
            let per_block: Vec<Vec<Cycle>> = p.blocks().iter().map(Cycle::enumerate).collect();
            let mut choices: Vec<Vec<Cycle>> = vec![Vec::new()];
            for cycles in &per_block {
                let mut next = Vec::with_capacity(choices.len() * cycles.len());
                for c in &choices {
                    for cy in cycles {
                        let mut c = c.clone();
                        c.push(cy.clone());
                        next.push(c);
                    }
                }
                choices = next;
            }
            for c in choices {
                out.push(Permutation::new(c).expect("blocks are disjoint"));
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &self.cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
