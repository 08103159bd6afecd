//! The concrete kernel structures: the one-point structure, the commutative
//! structure on sets, the associative structure on linear orders, the
//! nested pre-Lie structure on cycles, and the three twisted products
//! (set union, shuffle, concatenation).

use crate::cycle::{cycle_cyc, cycle_lin, Cycle};
use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use crate::lincomb::LinComb;
use crate::linord::{shuffles, LinearOrder};
use crate::species::{Product, Structure, Term};
use std::fmt;

/// Basis term of the one-point structure: a single marked point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Star(pub Label);

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

impl Term for Star {
    fn ground_set(&self) -> FinSet {
        FinSet::singleton(self.0)
    }

    fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        Ok(Star(sigma.apply(self.0)?))
    }
}

/// Basis term of the exponential species: one structure per nonempty set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EStar(pub FinSet);

impl fmt::Display for EStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}", self.0)
    }
}

impl Term for EStar {
    fn ground_set(&self) -> FinSet {
        self.0.clone()
    }

    fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        Ok(EStar(sigma.apply_set(&self.0)?))
    }
}

impl Term for LinearOrder {
    fn ground_set(&self) -> FinSet {
        LinearOrder::ground_set(self)
    }

    fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        LinearOrder::relabel(self, sigma)
    }
}

impl Term for Cycle {
    fn ground_set(&self) -> FinSet {
        Cycle::ground_set(self)
    }

    fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        Cycle::relabel(self, sigma)
    }
}

fn check_compose_pre<T: Term>(x: &T, s: Label, y: &T) -> Result<()> {
    let gx = x.ground_set();
    if !gx.contains(s) {
        return Err(Error::LabelNotInSet(s.to_string(), gx.to_string()));
    }
    if !gx.remove(s).is_disjoint(&y.ground_set()) {
        return Err(Error::Overlap(gx.remove(s).to_string(), y.ground_set().to_string()));
    }
    Ok(())
}

/// The unit structure for substitution: one point on each singleton, with
/// the only composition `@a ∘ₐ @b = @b`.
#[derive(Debug, Clone, Default)]
pub struct IdentityOperad;

/// The unit structure for substitution.
pub fn identity_operad() -> IdentityOperad {
    IdentityOperad
}

impl Structure for IdentityOperad {
    type T = Star;

    fn name(&self) -> String {
        "identity".into()
    }

    fn basis(&self, ground: &FinSet) -> Vec<Star> {
        if ground.len() == 1 {
            vec![Star(ground.min_label().unwrap())]
        } else {
            Vec::new()
        }
    }

    fn compose(&self, x: &Star, s: Label, y: &Star) -> Result<LinComb<Star>> {
        check_compose_pre(x, s, y)?;
        Ok(LinComb::single(y.clone()))
    }

    fn unit(&self, s: Label) -> Option<LinComb<Star>> {
        Some(LinComb::single(Star(s)))
    }

    fn is_operad(&self) -> bool {
        true
    }
}

/// The commutative structure on the exponential species:
/// `*_S ∘ₐ *_T = *_{S ⊔ₐ T}`.
#[derive(Debug, Clone, Default)]
pub struct ComPlus;

/// The commutative structure on nonempty sets.
pub fn com_plus() -> ComPlus {
    ComPlus
}

impl Structure for ComPlus {
    type T = EStar;

    fn name(&self) -> String {
        "com+".into()
    }

    fn basis(&self, ground: &FinSet) -> Vec<EStar> {
        if ground.is_empty() {
            Vec::new()
        } else {
            vec![EStar(ground.clone())]
        }
    }

    fn compose(&self, x: &EStar, s: Label, y: &EStar) -> Result<LinComb<EStar>> {
        if y.0.is_empty() {
            return Err(Error::EmptyGround);
        }
        check_compose_pre(x, s, y)?;
        Ok(LinComb::single(EStar(x.0.graft(s, &y.0)?)))
    }

    fn unit(&self, s: Label) -> Option<LinComb<EStar>> {
        Some(LinComb::single(EStar(FinSet::singleton(s))))
    }

    fn is_operad(&self) -> bool {
        true
    }
}

/// The associative structure on linear orders: splice the inner word into
/// the position of the composition point, `ℓ₁|s|ℓ₂ ∘ₛ ℓ = ℓ₁|ℓ|ℓ₂`.
#[derive(Debug, Clone, Default)]
pub struct AsPlus;

/// The associative structure on nonempty linear orders.
pub fn as_plus() -> AsPlus {
    AsPlus
}

impl Structure for AsPlus {
    type T = LinearOrder;

    fn name(&self) -> String {
        "as+".into()
    }

    fn basis(&self, ground: &FinSet) -> Vec<LinearOrder> {
        if ground.is_empty() {
            Vec::new()
        } else {
            LinearOrder::enumerate(ground)
        }
    }

    fn compose(&self, x: &LinearOrder, s: Label, y: &LinearOrder) -> Result<LinComb<LinearOrder>> {
        if y.is_empty() {
            return Err(Error::EmptyGround);
        }
        check_compose_pre(x, s, y)?;
        let (left, right) = x.split_at(s)?;
        Ok(LinComb::single(left.concat(y)?.concat(&right)?))
    }

    fn unit(&self, s: Label) -> Option<LinComb<LinearOrder>> {
        Some(LinComb::single(LinearOrder::new([s]).expect("one letter")))
    }

    fn is_operad(&self) -> bool {
        true
    }
}

/// The nested pre-Lie structure on cycles: linearize the outer cycle at the
/// composition point, splice in the linearizations of the inner cycle, and
/// close up again.
#[derive(Debug, Clone, Default)]
pub struct CyclesNpl;

/// The nested pre-Lie structure on cycles.
pub fn cycles_npl() -> CyclesNpl {
    CyclesNpl
}

impl Structure for CyclesNpl {
    type T = Cycle;

    fn name(&self) -> String {
        "cycles".into()
    }

    fn basis(&self, ground: &FinSet) -> Vec<Cycle> {
        Cycle::enumerate(ground)
    }

    fn compose(&self, x: &Cycle, s: Label, y: &Cycle) -> Result<LinComb<Cycle>> {
        check_compose_pre(x, s, y)?;
        let spine = x.order_from(s)?;
        let as_plus = AsPlus;
        let spliced = cycle_lin(y)
            .extend_linear(|l| as_plus.compose(&spine, s, l))?;
        spliced.extend_linear(|l| Ok(LinComb::single(cycle_cyc(l)?)))
    }

    fn unit(&self, s: Label) -> Option<LinComb<Cycle>> {
        Some(LinComb::single(Cycle::new([s]).expect("one label")))
    }

    fn is_operad(&self) -> bool {
        false
    }
}

/// Set-union product on the exponential species: `*_S ∙ *_T = *_{S∪T}`.
#[derive(Debug, Clone, Default)]
pub struct ConcatE;

/// The union product on sets.
pub fn concat_product_e() -> ConcatE {
    ConcatE
}

impl Product for ConcatE {
    type T = EStar;

    fn name(&self) -> String {
        "concat-e".into()
    }

    fn mu(&self, x: &EStar, y: &EStar) -> Result<LinComb<EStar>> {
        if !x.0.is_disjoint(&y.0) {
            return Err(Error::Overlap(x.0.to_string(), y.0.to_string()));
        }
        Ok(LinComb::single(EStar(x.0.union(&y.0))))
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// Shuffle product on linear orders: the sum of all interleavings.
#[derive(Debug, Clone, Default)]
pub struct ShuffleL;

/// The shuffle product on linear orders.
pub fn shuffle_product_l() -> ShuffleL {
    ShuffleL
}

impl Product for ShuffleL {
    type T = LinearOrder;

    fn name(&self) -> String {
        "shuffle-l".into()
    }

    fn mu(&self, x: &LinearOrder, y: &LinearOrder) -> Result<LinComb<LinearOrder>> {
        Ok(LinComb::from_terms(
            shuffles(x, y)?.into_iter().map(|l| (l, crate::rational::rat_int(1))),
        ))
    }

    fn is_commutative(&self) -> bool {
        true
    }
}

/// Concatenation product on linear orders. Noncommutative; kept around as
/// the standard counterexample for the compatibility checker.
#[derive(Debug, Clone, Default)]
pub struct ConcatL;

/// The concatenation product on linear orders.
pub fn concat_product_l() -> ConcatL {
    ConcatL
}

impl Product for ConcatL {
    type T = LinearOrder;

    fn name(&self) -> String {
        "concat-l".into()
    }

    fn mu(&self, x: &LinearOrder, y: &LinearOrder) -> Result<LinComb<LinearOrder>> {
        Ok(LinComb::single(x.concat(y)?))
    }

    fn is_commutative(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::extend_bilinear;
    use crate::rational::rat_int;
    use crate::species::mu_lin;

    fn set(v: &[u32]) -> FinSet {
        FinSet::from_u32s(v.iter().copied())
    }

    fn ord(v: &[u32]) -> LinearOrder {
        LinearOrder::from_u32s(v.iter().copied()).unwrap()
    }

    #[test]
    fn identity_structure() {
        let id = identity_operad();
        assert_eq!(id.basis(&set(&[7])), vec![Star(Label(7))]);
        assert!(id.basis(&set(&[1, 2])).is_empty());
        assert_eq!(
            id.compose(&Star(Label(1)), Label(1), &Star(Label(2))).unwrap(),
            LinComb::single(Star(Label(2)))
        );
    }

    #[test]
    fn com_plus_examples() {
        let com = com_plus();
        assert_eq!(
            com.compose(&EStar(set(&[1, 2])), Label(1), &EStar(set(&[3, 4]))).unwrap(),
            LinComb::single(EStar(set(&[2, 3, 4])))
        );
        assert_eq!(
            com.compose(&EStar(set(&[5])), Label(5), &EStar(set(&[6]))).unwrap(),
            LinComb::single(EStar(set(&[6])))
        );
        // unit law on the right
        let u = com.unit(Label(2)).unwrap();
        let x = LinComb::single(EStar(set(&[1, 2])));
        assert_eq!(
            extend_bilinear(|a, b| com.compose(a, Label(2), b), &x, &u).unwrap(),
            x
        );
        assert!(com.compose(&EStar(set(&[1, 2])), Label(1), &EStar(FinSet::empty())).is_err());
    }

    #[test]
    fn as_plus_examples() {
        let asp = as_plus();
        assert_eq!(
            asp.compose(&ord(&[1, 2, 3]), Label(2), &ord(&[4, 5])).unwrap(),
            LinComb::single(ord(&[1, 4, 5, 3]))
        );
        assert_eq!(
            asp.compose(&ord(&[1]), Label(1), &ord(&[2, 3])).unwrap(),
            LinComb::single(ord(&[2, 3]))
        );
        assert_eq!(
            asp.compose(&ord(&[1, 2]), Label(2), &ord(&[3])).unwrap(),
            LinComb::single(ord(&[1, 3]))
        );
        // positive species: nothing lives on the empty set
        assert!(asp.compose(&ord(&[1, 2]), Label(2), &LinearOrder::empty()).is_err());
        assert!(asp.basis(&FinSet::empty()).is_empty());
    }

    #[test]
    fn products() {
        let ce = concat_product_e();
        assert_eq!(
            ce.mu(&EStar(set(&[1])), &EStar(set(&[2, 3]))).unwrap(),
            LinComb::single(EStar(set(&[1, 2, 3])))
        );

        let sh = shuffle_product_l();
        let got = sh.mu(&ord(&[1, 2]), &ord(&[3])).unwrap();
        assert_eq!(got.len(), 3);
        assert_eq!(got.coeff(&ord(&[3, 1, 2])), rat_int(1));
        assert_eq!(got.coeff(&ord(&[1, 3, 2])), rat_int(1));
        assert_eq!(got.coeff(&ord(&[1, 2, 3])), rat_int(1));

        // the empty order is the shuffle unit
        assert_eq!(
            sh.mu(&ord(&[4, 1]), &LinearOrder::empty()).unwrap(),
            LinComb::single(ord(&[4, 1]))
        );

        let cl = concat_product_l();
        assert_eq!(cl.mu(&ord(&[1]), &ord(&[2])).unwrap(), LinComb::single(ord(&[1, 2])));
        assert!(cl.mu(&ord(&[1]), &ord(&[1])).is_err());
    }

    #[test]
    fn shuffle_product_commutative_associative_small() {
        // exhaustive over segment splits with |S|+|T|+|R| <= 6
        let sh = shuffle_product_l();
        for a in 0..=2usize {
            for b in 0..=2usize {
                for c in 0..=2usize {
                    if a + b + c > 6 || a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let sa = FinSet::from_u32s(1..=a as u32);
                    let sb = FinSet::from_u32s(a as u32 + 1..=(a + b) as u32);
                    let sc = FinSet::from_u32s((a + b) as u32 + 1..=(a + b + c) as u32);
                    for x in LinearOrder::enumerate(&sa) {
                        for y in LinearOrder::enumerate(&sb) {
                            assert_eq!(sh.mu(&x, &y).unwrap(), sh.mu(&y, &x).unwrap());
                            for z in LinearOrder::enumerate(&sc) {
                                let left =
                                    mu_lin(&sh, &sh.mu(&x, &y).unwrap(), &LinComb::single(z.clone()))
                                        .unwrap();
                                let right =
                                    mu_lin(&sh, &LinComb::single(x.clone()), &sh.mu(&y, &z).unwrap())
                                        .unwrap();
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cycles_compose_examples() {
        let cy = cycles_npl();
        let c = Cycle::from_u32s([1, 2]).unwrap();
        let d = Cycle::from_u32s([3, 4]).unwrap();
        let got = cy.compose(&c, Label(1), &d).unwrap();
        // (3 4 2) + (4 3 2), in min-rotated form (2 3 4) + (2 4 3)
        assert_eq!(got.coeff(&Cycle::from_u32s([3, 4, 2]).unwrap()), rat_int(1));
        assert_eq!(got.coeff(&Cycle::from_u32s([4, 3, 2]).unwrap()), rat_int(1));
        assert_eq!(got.len(), 2);

        let single = cy
            .compose(&c, Label(1), &Cycle::from_u32s([3]).unwrap())
            .unwrap();
        assert_eq!(single, LinComb::single(Cycle::from_u32s([3, 2]).unwrap()));

        // the two starting points give rotations of one and the same cycle
        let got = cy
            .compose(&Cycle::from_u32s([1]).unwrap(), Label(1), &Cycle::from_u32s([2, 3]).unwrap())
            .unwrap();
        assert_eq!(got, LinComb::with_coeff(Cycle::from_u32s([2, 3]).unwrap(), rat_int(2)));
    }

    #[test]
    fn cycles_compose_matches_expanded_sum() {
        // second route: the expansion as a sum over starting points of the
        // inner cycle, with the outer spine appended
        let cy = cycles_npl();
        for ns in 1..=3u32 {
            for nt in 1..=3u32 {
                let s_ground = FinSet::segment(ns);
                let t_ground = FinSet::from_u32s(10..10 + nt);
                for c in Cycle::enumerate(&s_ground) {
                    for d in Cycle::enumerate(&t_ground) {
                        for s in s_ground.iter() {
                            let got = cy.compose(&c, s, &d).unwrap();
                            let mut expect = LinComb::zero();
                            for t in t_ground.iter() {
                                let dt = d.order_from(t).unwrap();
                                let cs = c.order_from(s).unwrap();
                                let tail: Vec<Label> = cs.word()[1..].to_vec();
                                let word: Vec<Label> =
                                    dt.word().iter().copied().chain(tail).collect();
                                expect.add_term(Cycle::new(word).unwrap(), rat_int(1));
                            }
                            assert_eq!(got, expect, "c={c} s={s} d={d}");
                        }
                    }
                }
            }
        }
    }
}
