//! The free commutative twisted algebra on a structure: monomials over set
//! partitions, the square composition, the nested pre-Lie composition, and
//! the global composition over sections of the partition lattice.

use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use crate::lincomb::{extend_bilinear, LinComb};
use crate::partition::SetPartition;
use crate::species::{compose_lin, mu_lin, Product, Structure, Term};
use std::collections::BTreeMap;
use std::fmt;

/// A commutative monomial: one structure term per block of a set partition.
/// Keyed by canonical block, so no tensor-factor order ever exists in
/// memory.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial<T: Term> {
    factors: BTreeMap<FinSet, T>,
}

impl<T: Term> Monomial<T> {
    pub fn new(factors: impl IntoIterator<Item = T>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for t in factors {
            let b = t.ground_set();
            if b.is_empty() {
                return Err(Error::EmptyGround);
            }
            if map.insert(b.clone(), t).is_some() {
                return Err(Error::invalid("monomial", format!("duplicate block {b}")));
            }
        }
        let m = Monomial { factors: map };
        // blocks must be pairwise disjoint
        m.partition()?;
        Ok(m)
    }

    /// The monomial with a single factor.
    pub fn single(t: T) -> Result<Self> {
        Self::new([t])
    }

    pub fn factors(&self) -> impl Iterator<Item = (&FinSet, &T)> {
        self.factors.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = &T> {
        self.factors.values()
    }

    pub fn block_count(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn partition(&self) -> Result<SetPartition> {
        SetPartition::new(self.factors.keys().cloned())
    }

    pub fn block_term(&self, block: &FinSet) -> Option<&T> {
        self.factors.get(block)
    }

    pub fn block_containing(&self, l: Label) -> Option<(&FinSet, &T)> {
        self.factors.iter().find(|(b, _)| b.contains(l))
    }

    /// The monomial without one named block.
    pub fn without_block(&self, block: &FinSet) -> Monomial<T> {
        Monomial {
            factors: self
                .factors
                .iter()
                .filter(|(b, _)| *b != block)
                .map(|(b, t)| (b.clone(), t.clone()))
                .collect(),
        }
    }

    /// Disjoint union of factor assignments.
    pub fn union(&self, other: &Monomial<T>) -> Result<Monomial<T>> {
        Monomial::new(self.terms().chain(other.terms()).cloned())
    }

    /// Adjoins one factor.
    pub fn with_term(&self, t: T) -> Result<Monomial<T>> {
        Monomial::new(self.terms().cloned().chain([t]))
    }
}

impl<T: Term> Term for Monomial<T> {
    fn ground_set(&self) -> FinSet {
        self.factors.keys().fold(FinSet::empty(), |acc, b| acc.union(b))
    }

    fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        Monomial::new(self.terms().map(|t| t.relabel(sigma)).collect::<Result<Vec<_>>>()?)
    }
}

impl<T: Term> fmt::Display for Monomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "}}")
    }
}

/// An element of the free commutative algebra: a formal combination of
/// monomials (all sharing one ground set in well-formed use).
pub type FreeCommElement<T> = LinComb<Monomial<T>>;

/// The twisted product on monomial elements: disjoint union of assignments,
/// extended bilinearly.
pub fn twisted_product<T: Term>(
    a: &FreeCommElement<T>,
    b: &FreeCommElement<T>,
) -> Result<FreeCommElement<T>> {
    extend_bilinear(|x: &Monomial<T>, y: &Monomial<T>| Ok(LinComb::single(x.union(y)?)), a, b)
}

/// The union product as a [`Product`] instance over monomials.
#[derive(Debug, Clone, Default)]
pub struct UnionProduct<T: Term>(std::marker::PhantomData<T>);

impl<T: Term> UnionProduct<T> {
    pub fn new() -> Self {
        UnionProduct(std::marker::PhantomData)
    }
}

impl<T: Term> Product for UnionProduct<T> {
    type T = Monomial<T>;

    fn name(&self) -> String {
        "union".into()
    }

    fn mu(&self, x: &Monomial<T>, y: &Monomial<T>) -> Result<LinComb<Monomial<T>>> {
        Ok(LinComb::single(x.union(y)?))
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// Folds a twisted product over all factors of a nonempty monomial, in
/// canonical block order, producing a combination of single terms on the
/// whole ground set.
pub fn mu_fold<M: Product>(mu: &M, m: &Monomial<M::T>) -> Result<LinComb<M::T>> {
    let mut terms = m.terms();
    let first = terms.next().ok_or(Error::EmptyGround)?;
    let mut acc = LinComb::single(first.clone());
    for t in terms {
        acc = mu_lin(mu, &acc, &LinComb::single(t.clone()))?;
    }
    Ok(acc)
}

fn block_of<T: Term>(m: &Monomial<T>, s: Label) -> Result<(FinSet, T)> {
    m.block_containing(s)
        .map(|(b, t)| (b.clone(), t.clone()))
        .ok_or_else(|| Error::LabelNotInSet(s.to_string(), m.ground_set().to_string()))
}

/// The square composition: fold the right monomial through the product,
/// compose the result into the block containing `s`, and carry the other
/// blocks along untouched.
///
/// Callers are responsible for pairing a structure with a compatible
/// product; [`crate::axioms::run_mu_compat`] verifies that pairing.
pub fn square_compose<Q, M>(
    q: &Q,
    mu: &M,
    alpha: &Monomial<Q::T>,
    s: Label,
    beta: &Monomial<Q::T>,
) -> Result<FreeCommElement<Q::T>>
where
    Q: Structure,
    M: Product<T = Q::T>,
{
    let (bs, alpha_s) = block_of(alpha, s)?;
    let rest = alpha.without_block(&bs);
    let folded = mu_fold(mu, beta)?;
    let composed = compose_lin(q, &LinComb::single(alpha_s), s, &folded)?;
    composed.extend_linear(|t| Ok(LinComb::single(rest.with_term(t.clone())?)))
}

/// The nested pre-Lie composition: one summand per block of the right
/// monomial, composing that block's term into the block containing `s` and
/// carrying every other block of both sides along.
pub fn npl_compose<Q: Structure>(
    q: &Q,
    alpha: &Monomial<Q::T>,
    s: Label,
    beta: &Monomial<Q::T>,
) -> Result<FreeCommElement<Q::T>> {
    let (bs, alpha_s) = block_of(alpha, s)?;
    let alpha_rest = alpha.without_block(&bs);
    let mut out = LinComb::zero();
    for (c, beta_c) in beta.factors() {
        let beta_rest = beta.without_block(c);
        let composed = q.compose(&alpha_s, s, beta_c)?;
        for (t, coeff) in composed.iter() {
            let monomial = alpha_rest.union(&beta_rest)?.with_term(t.clone())?;
            out.add_term(monomial, coeff.clone());
        }
    }
    Ok(out)
}

/// A two-level element of the free algebra over itself: partitions
/// `tau ≤ pi ≤ rho` in refinement order, outer structure terms on the blocks
/// of `pi` grouped per block of `tau` (labelled by the minimum of each
/// `pi`-block), and inner structure terms on the blocks of `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedElement<T: Term> {
    pub tau: SetPartition,
    pub pi: SetPartition,
    pub rho: SetPartition,
    pub outer: BTreeMap<FinSet, T>,
    pub inner: BTreeMap<FinSet, T>,
}

/// Representative label of a block: its minimum.
pub fn block_rep(b: &FinSet) -> Label {
    b.min_label().expect("blocks are nonempty")
}

impl<T: Term> NestedElement<T> {
    pub fn new(
        tau: SetPartition,
        pi: SetPartition,
        rho: SetPartition,
        outer: impl IntoIterator<Item = T>,
        inner: impl IntoIterator<Item = T>,
    ) -> Result<Self> {
        if !rho.refines(&pi)? || !pi.refines(&tau)? {
            return Err(Error::MalformedNesting(format!(
                "want tau ≤ pi ≤ rho in refinement order, got tau={tau}, pi={pi}, rho={rho}"
            )));
        }
        let mut outer_map = BTreeMap::new();
        for t in outer {
            let reps = t.ground_set();
            // the outer term on a tau-block lives on the minima of the
            // pi-blocks inside it
            let tau_block = reps
                .min_label()
                .and_then(|m| tau.block_containing(m))
                .ok_or_else(|| Error::MalformedNesting(format!("outer term {t} has no home block")))?
                .clone();
            let expected: FinSet = pi
                .blocks()
                .iter()
                .filter(|b| b.is_subset(&tau_block))
                .map(block_rep)
                .collect();
            if reps != expected {
                return Err(Error::MalformedNesting(format!(
                    "outer term on {reps} does not match pi-block representatives {expected} of tau-block {tau_block}"
                )));
            }
            if outer_map.insert(tau_block.clone(), t).is_some() {
                return Err(Error::MalformedNesting(format!("two outer terms on {tau_block}")));
            }
        }
        if outer_map.len() != tau.len() {
            return Err(Error::MalformedNesting("missing outer terms".into()));
        }
        let mut inner_map = BTreeMap::new();
        for t in inner {
            let b = t.ground_set();
            if !rho.blocks().contains(&b) {
                return Err(Error::MalformedNesting(format!(
                    "inner term on {b} is not on a rho-block"
                )));
            }
            if inner_map.insert(b.clone(), t).is_some() {
                return Err(Error::MalformedNesting("two inner terms on a block".into()));
            }
        }
        if inner_map.len() != rho.len() {
            return Err(Error::MalformedNesting("missing inner terms".into()));
        }
        Ok(NestedElement { tau, pi, rho, outer: outer_map, inner: inner_map })
    }
}

/// Iterated partial composition of `x` with one combination per composition
/// point, in the given order.
fn gamma_iterated<Q: Structure>(
    q: &Q,
    x: LinComb<Q::T>,
    subs: &[(Label, LinComb<Q::T>)],
) -> Result<LinComb<Q::T>> {
    let mut acc = x;
    for (point, arg) in subs {
        acc = compose_lin(q, &acc, *point, arg)?;
    }
    Ok(acc)
}

/// The global composition of the square structure: fold each inner element
/// through the product per `pi`-block, then compose the outer terms with the
/// folded blocks. The result is a combination of monomials over `tau`.
pub fn operadic_global<Q, M>(
    q: &Q,
    mu: &M,
    nested: &NestedElement<Q::T>,
) -> Result<FreeCommElement<Q::T>>
where
    Q: Structure,
    M: Product<T = Q::T>,
{
    // chi: fold the inner blocks of each pi-block into one combination
    let mut folded: BTreeMap<FinSet, LinComb<Q::T>> = BTreeMap::new();
    for b in nested.pi.blocks() {
        let inner_terms: Vec<Q::T> = nested
            .inner
            .iter()
            .filter(|(c, _)| c.is_subset(b))
            .map(|(_, t)| t.clone())
            .collect();
        folded.insert(b.clone(), mu_fold(mu, &Monomial::new(inner_terms)?)?);
    }
    // per tau-block, substitute the folded blocks into the outer term
    let mut acc: FreeCommElement<Q::T> = LinComb::single(Monomial::new([])?);
    for (tau_block, outer) in &nested.outer {
        let subs: Vec<(Label, LinComb<Q::T>)> = nested
            .pi
            .blocks()
            .iter()
            .filter(|b| b.is_subset(tau_block))
            .map(|b| (block_rep(b), folded[b].clone()))
            .collect();
        let composed = gamma_iterated(q, LinComb::single(outer.clone()), &subs)?;
        let as_monomials = composed.extend_linear(|t| Ok(LinComb::single(Monomial::single(t.clone())?)))?;
        acc = twisted_product(&acc, &as_monomials)?;
    }
    Ok(acc)
}

/// The global nested pre-Lie composition: a sum over all sections of the
/// canonical surjection from `rho` onto `pi`. Each section transports the
/// outer terms onto its selected `rho`-blocks, composes them with the
/// selected inner structures, and carries the untouched inner structures
/// along as extra factors.
pub fn global_gamma<Q: Structure>(
    q: &Q,
    nested: &NestedElement<Q::T>,
) -> Result<FreeCommElement<Q::T>> {
    let sections = nested.rho.sections(&nested.pi)?;
    let mut out: FreeCommElement<Q::T> = LinComb::zero();
    for section in sections {
        let assign: BTreeMap<&FinSet, &FinSet> =
            section.iter().map(|(pi_b, rho_b)| (pi_b, rho_b)).collect();
        let selected: Vec<&FinSet> = section.iter().map(|(_, rho_b)| rho_b).collect();
        let mut summand: FreeCommElement<Q::T> = LinComb::single(Monomial::new(
            nested
                .inner
                .iter()
                .filter(|(c, _)| !selected.contains(c))
                .map(|(_, t)| t.clone()),
        )?);
        for (tau_block, outer) in &nested.outer {
            let pi_blocks: Vec<&FinSet> =
                nested.pi.blocks().iter().filter(|b| b.is_subset(tau_block)).collect();
            // transport the outer term along rep(T) ↦ rep(S(T))
            let sigma = Bijection::new(
                pi_blocks.iter().map(|b| (block_rep(b), block_rep(assign[*b]))),
            )?;
            let transported = outer.relabel(&sigma)?;
            let subs: Vec<(Label, LinComb<Q::T>)> = pi_blocks
                .iter()
                .map(|b| {
                    let rho_b = assign[*b];
                    (block_rep(rho_b), LinComb::single(nested.inner[rho_b].clone()))
                })
                .collect();
            let composed = gamma_iterated(q, LinComb::single(transported), &subs)?;
            let as_monomials =
                composed.extend_linear(|t| Ok(LinComb::single(Monomial::single(t.clone())?)))?;
            summand = twisted_product(&summand, &as_monomials)?;
        }
        out = out.add(&summand);
    }
    Ok(out)
}

/// The square structure on monomials over a compatible pair.
#[derive(Debug, Clone)]
pub struct SquareStructure<Q, M> {
    pub q: Q,
    pub mu: M,
}

impl<Q, M> SquareStructure<Q, M>
where
    Q: Structure,
    M: Product<T = Q::T>,
{
    pub fn new(q: Q, mu: M) -> Self {
        SquareStructure { q, mu }
    }
}

fn monomial_basis<Q: Structure>(q: &Q, ground: &FinSet) -> Vec<Monomial<Q::T>> {
    if ground.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for p in SetPartition::enumerate(ground) {
        let per_block: Vec<Vec<Q::T>> = p.blocks().iter().map(|b| q.basis(b)).collect();
        if per_block.iter().any(Vec::is_empty) {
            continue;
        }
        let mut choices: Vec<Vec<Q::T>> = vec![Vec::new()];
        for terms in &per_block {
            let mut next = Vec::with_capacity(choices.len() * terms.len());
            for c in &choices {
                for t in terms {
                    let mut c = c.clone();
                    c.push(t.clone());
                    next.push(c);
                }
            }
            choices = next;
        }
        for c in choices {
            out.push(Monomial::new(c).expect("valid by construction"));
        }
    }
    out
}

fn unit_monomial<Q: Structure>(q: &Q, s: Label) -> Option<LinComb<Monomial<Q::T>>> {
    let u = q.unit(s)?;
    u.extend_linear(|t| Ok(LinComb::single(Monomial::single(t.clone())?))).ok()
}

impl<Q, M> Structure for SquareStructure<Q, M>
where
    Q: Structure,
    M: Product<T = Q::T>,
{
    type T = Monomial<Q::T>;

    fn name(&self) -> String {
        format!("square[{}, {}]", self.q.name(), self.mu.name())
    }

    fn basis(&self, ground: &FinSet) -> Vec<Monomial<Q::T>> {
        monomial_basis(&self.q, ground)
    }

    fn compose(
        &self,
        x: &Monomial<Q::T>,
        s: Label,
        y: &Monomial<Q::T>,
    ) -> Result<LinComb<Monomial<Q::T>>> {
        square_compose(&self.q, &self.mu, x, s, y)
    }

    fn unit(&self, s: Label) -> Option<LinComb<Monomial<Q::T>>> {
        unit_monomial(&self.q, s)
    }

    fn is_operad(&self) -> bool {
        true
    }
}

/// The nested pre-Lie structure on monomials over any structure.
#[derive(Debug, Clone)]
pub struct NplFreeStructure<Q> {
    pub q: Q,
}

impl<Q: Structure> NplFreeStructure<Q> {
    pub fn new(q: Q) -> Self {
        NplFreeStructure { q }
    }
}

impl<Q: Structure> Structure for NplFreeStructure<Q> {
    type T = Monomial<Q::T>;

    fn name(&self) -> String {
        format!("npl[{}]", self.q.name())
    }

    fn basis(&self, ground: &FinSet) -> Vec<Monomial<Q::T>> {
        monomial_basis(&self.q, ground)
    }

    fn compose(
        &self,
        x: &Monomial<Q::T>,
        s: Label,
        y: &Monomial<Q::T>,
    ) -> Result<LinComb<Monomial<Q::T>>> {
        npl_compose(&self.q, x, s, y)
    }

    fn unit(&self, s: Label) -> Option<LinComb<Monomial<Q::T>>> {
        unit_monomial(&self.q, s)
    }

    fn is_operad(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{com_plus, concat_product_e, identity_operad, EStar, Star};
    use crate::rational::rat_int;

    fn set(v: &[u32]) -> FinSet {
        FinSet::from_u32s(v.iter().copied())
    }

    fn star_monomial(blocks: &[&[u32]]) -> Monomial<EStar> {
        Monomial::new(blocks.iter().map(|b| EStar(set(b)))).unwrap()
    }

    #[test]
    fn twisted_product_examples() {
        let a = LinComb::single(star_monomial(&[&[1, 2]]));
        let b = LinComb::single(star_monomial(&[&[3]]));
        assert_eq!(
            twisted_product(&a, &b).unwrap(),
            LinComb::single(star_monomial(&[&[1, 2], &[3]]))
        );
        // commutativity is forced by the unordered assignment
        assert_eq!(twisted_product(&a, &b).unwrap(), twisted_product(&b, &a).unwrap());

        // bilinearity
        let x = LinComb::single(star_monomial(&[&[1, 2]]));
        let y = LinComb::single(star_monomial(&[&[1], &[2]]));
        let z = LinComb::single(star_monomial(&[&[3]]));
        assert_eq!(
            twisted_product(&x.add(&y), &z).unwrap(),
            twisted_product(&x, &z).unwrap().add(&twisted_product(&y, &z).unwrap())
        );

        let overlap = LinComb::single(star_monomial(&[&[1]]));
        assert!(twisted_product(&a, &overlap).unwrap_err().to_string().contains("overlap"));
    }

    #[test]
    fn mu_fold_examples() {
        let ce = concat_product_e();
        let single = star_monomial(&[&[1, 2]]);
        assert_eq!(mu_fold(&ce, &single).unwrap(), LinComb::single(EStar(set(&[1, 2]))));

        let two = star_monomial(&[&[1], &[2, 3]]);
        assert_eq!(mu_fold(&ce, &two).unwrap(), LinComb::single(EStar(set(&[1, 2, 3]))));

        assert!(mu_fold(&ce, &Monomial::<EStar>::new([]).unwrap()).is_err());
    }

    #[test]
    fn mu_fold_shuffle_reproduces_shuffle_set() {
        use crate::kernel::shuffle_product_l;
        use crate::linord::LinearOrder;
        let m = Monomial::new([
            LinearOrder::from_u32s([3, 4, 2]).unwrap(),
            LinearOrder::from_u32s([1]).unwrap(),
        ])
        .unwrap();
        let folded = mu_fold(&shuffle_product_l(), &m).unwrap();
        let expect: Vec<LinearOrder> = [
            vec![3, 4, 2, 1],
            vec![3, 4, 1, 2],
            vec![3, 1, 4, 2],
            vec![1, 3, 4, 2],
        ]
        .into_iter()
        .map(|w| LinearOrder::from_u32s(w).unwrap())
        .collect();
        assert_eq!(folded.len(), 4);
        for l in expect {
            assert_eq!(folded.coeff(&l), rat_int(1));
        }
    }

    #[test]
    fn square_compose_partition_example() {
        let q = com_plus();
        let mu = concat_product_e();
        let alpha = star_monomial(&[&[1, 2], &[3]]);
        let beta = star_monomial(&[&[4], &[5]]);
        let got = square_compose(&q, &mu, &alpha, Label(1), &beta).unwrap();
        assert_eq!(got, LinComb::single(star_monomial(&[&[2, 4, 5], &[3]])));

        // single blocks on both sides reduce to the base composition
        let got =
            square_compose(&q, &mu, &star_monomial(&[&[1, 2]]), Label(1), &star_monomial(&[&[3, 4]]))
                .unwrap();
        assert_eq!(got, LinComb::single(star_monomial(&[&[2, 3, 4]])));

        // right unit
        let u = star_monomial(&[&[1]]);
        let got = square_compose(&q, &mu, &alpha, Label(1), &u).unwrap();
        assert_eq!(got, LinComb::single(alpha.clone()));

        assert!(square_compose(&q, &mu, &alpha, Label(9), &beta).is_err());
    }

    #[test]
    fn npl_compose_partition_example() {
        let q = com_plus();
        let alpha = star_monomial(&[&[1, 2], &[3]]);
        let beta = star_monomial(&[&[4], &[5]]);
        let got = npl_compose(&q, &alpha, Label(1), &beta).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(star_monomial(&[&[2, 4], &[3], &[5]]), rat_int(1));
        expect.add_term(star_monomial(&[&[2, 5], &[3], &[4]]), rat_int(1));
        assert_eq!(got, expect);

        // one-block right side agrees with the square composition
        let single = star_monomial(&[&[4, 5]]);
        let via_npl = npl_compose(&q, &alpha, Label(1), &single).unwrap();
        let via_square =
            square_compose(&q, &concat_product_e(), &alpha, Label(1), &single).unwrap();
        assert_eq!(via_npl, via_square);

        // the composition point must lie in the left ground set
        assert!(matches!(
            npl_compose(&q, &alpha, Label(9), &beta),
            Err(Error::LabelNotInSet(..))
        ));
    }

    #[test]
    fn exp_npl_coefficient_is_right_size() {
        // on monomials of one-point structures the composition multiplies by
        // the number of right-hand blocks
        let q = identity_operad();
        let alpha = Monomial::new([Star(Label(1)), Star(Label(2))]).unwrap();
        let beta = Monomial::new([Star(Label(3)), Star(Label(4)), Star(Label(5))]).unwrap();
        let got = npl_compose(&q, &alpha, Label(1), &beta).unwrap();
        let expect_term =
            Monomial::new([Star(Label(2)), Star(Label(3)), Star(Label(4)), Star(Label(5))])
                .unwrap();
        assert_eq!(got, LinComb::with_coeff(expect_term, rat_int(3)));
    }

    #[test]
    fn nested_element_validation() {
        let tau = SetPartition::new([set(&[1, 2, 3])]).unwrap();
        let pi = SetPartition::new([set(&[1, 2]), set(&[3])]).unwrap();
        let rho = SetPartition::singletons(&set(&[1, 2, 3]));
        // outer term on representatives {1, 3}
        let nested = NestedElement::new(
            tau.clone(),
            pi.clone(),
            rho.clone(),
            [EStar(set(&[1, 3]))],
            [EStar(set(&[1])), EStar(set(&[2])), EStar(set(&[3]))],
        );
        assert!(nested.is_ok());

        // wrong representative set
        let bad = NestedElement::new(
            tau.clone(),
            pi.clone(),
            rho.clone(),
            [EStar(set(&[1, 2]))],
            [EStar(set(&[1])), EStar(set(&[2])), EStar(set(&[3]))],
        );
        assert!(bad.is_err());

        // tau must be coarser than pi
        let bad = NestedElement::new(
            SetPartition::singletons(&set(&[1, 2, 3])),
            SetPartition::new([set(&[1, 2]), set(&[3])]).unwrap(),
            rho,
            [EStar(set(&[1]))],
            [EStar(set(&[1]))],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn operadic_global_on_partitions_is_coinduction() {
        // substituting partitions into a partition of blocks merges blocks
        let q = com_plus();
        let mu = concat_product_e();
        let ground = set(&[1, 2, 3, 4]);
        let pi = SetPartition::new([set(&[1, 2]), set(&[3]), set(&[4])]).unwrap();
        // tau groups {1,2},{3} together and {4} alone
        let tau = SetPartition::new([set(&[1, 2, 3]), set(&[4])]).unwrap();
        let rho = SetPartition::new([set(&[1]), set(&[2]), set(&[3]), set(&[4])]).unwrap();
        let nested = NestedElement::new(
            tau.clone(),
            pi,
            rho,
            [EStar(set(&[1, 3])), EStar(set(&[4]))],
            ground.iter().map(|l| EStar(FinSet::singleton(l))),
        )
        .unwrap();
        let got = operadic_global(&q, &mu, &nested).unwrap();
        let expect = Monomial::new([EStar(set(&[1, 2, 3])), EStar(set(&[4]))]).unwrap();
        assert_eq!(got, LinComb::single(expect));
    }

    #[test]
    fn operadic_global_single_blocks_is_plain_composition() {
        // one block at every level reduces to the base composition
        let q = com_plus();
        let mu = concat_product_e();
        let ground = set(&[1, 2, 3]);
        let pi = SetPartition::new([set(&[1, 2]), set(&[3])]).unwrap();
        let tau = SetPartition::single_block(&ground).unwrap();
        let rho = pi.clone();
        let nested = NestedElement::new(
            tau,
            pi,
            rho,
            [EStar(set(&[1, 3]))],
            [EStar(set(&[1, 2])), EStar(set(&[3]))],
        )
        .unwrap();
        let got = operadic_global(&q, &mu, &nested).unwrap();
        // gamma of *_{1,3} with *_{1,2} at 1 and *_{3} at 3
        assert_eq!(got, LinComb::single(star_monomial(&[&[1, 2, 3]])));
    }

    #[test]
    fn global_gamma_counts_sections_for_points() {
        // with one-point structures everywhere the global composition counts
        // sections
        let q = identity_operad();
        let ground = set(&[1, 2, 3, 4]);
        let pi = SetPartition::new([set(&[1, 2]), set(&[3, 4])]).unwrap();
        let tau = pi.clone();
        let rho = SetPartition::singletons(&ground);
        let nested = NestedElement::new(
            tau,
            pi,
            rho,
            [Star(Label(1)), Star(Label(3))],
            ground.iter().map(Star),
        )
        .unwrap();
        let got = global_gamma(&q, &nested).unwrap();
        // every section picks one point per pi-block: 2 * 2 = 4 sections,
        // each yielding the all-singleton monomial
        let expect = Monomial::new(ground.iter().map(Star)).unwrap();
        assert_eq!(got, LinComb::with_coeff(expect, rat_int(4)));
    }

    #[test]
    fn global_gamma_on_partitions_merges_chosen_singletons() {
        let q = com_plus();
        let ground = set(&[1, 2, 3]);
        let pi = SetPartition::new([set(&[1, 2]), set(&[3])]).unwrap();
        let tau = SetPartition::new([set(&[1, 2, 3])]).unwrap();
        let rho = SetPartition::singletons(&ground);
        let nested = NestedElement::new(
            tau,
            pi,
            rho,
            [EStar(set(&[1, 3]))],
            ground.iter().map(|l| EStar(FinSet::singleton(l))),
        )
        .unwrap();
        let got = global_gamma(&q, &nested).unwrap();
        // sections pick one singleton from {1,2} (two ways) and {3}; each
        // merges the chosen elements into one block
        let mut expect = LinComb::zero();
        expect.add_term(star_monomial(&[&[1, 3], &[2]]), rat_int(1));
        expect.add_term(star_monomial(&[&[2, 3], &[1]]), rat_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn trivial_nesting_is_identity_like() {
        // singleton blocks everywhere: one section, composition through units
        let q = com_plus();
        let ground = set(&[1, 2]);
        let pi = SetPartition::singletons(&ground);
        let nested = NestedElement::new(
            pi.clone(),
            pi.clone(),
            pi,
            [EStar(set(&[1])), EStar(set(&[2]))],
            [EStar(set(&[1])), EStar(set(&[2]))],
        )
        .unwrap();
        let got = global_gamma(&q, &nested).unwrap();
        assert_eq!(got, LinComb::single(star_monomial(&[&[1], &[2]])));
    }
}
