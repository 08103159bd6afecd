//! Formal rational linear combinations over canonical basis terms.
//!
//! Terms must expose a canonical total order (`Ord`) so that combinations
//! serialize deterministically; zero coefficients are never stored, so
//! structural equality is value equality.

use crate::error::Result;
use crate::rational::{format_rational, Rational};
use num::traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<T: Ord> {
    terms: BTreeMap<T, Rational>,
}

impl<T: Ord> Default for LinComb<T> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> LinComb<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis term `t` with coefficient one.
    pub fn single(t: T) -> Self {
        Self::with_coeff(t, Rational::from_integer(1.into()))
    }

    pub fn with_coeff(t: T, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(t, c);
        }
        LinComb { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (T, Rational)>) -> Self {
        let mut out = Self::zero();
        for (t, c) in pairs {
            out.add_term(t, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &T) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, t: T, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in other.iter() {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(t, k)| (t.clone(), k * c)).collect() }
    }

    /// Applies a term-level map and re-collects (coefficients carried along).
    pub fn map_terms<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> U) -> LinComb<U> {
        let mut out = LinComb::zero();
        for (t, c) in self.iter() {
            out.add_term(f(t), c.clone());
        }
        out
    }

    /// Linear extension of a term-level map into combinations.
    pub fn extend_linear<U: Ord + Clone>(
        &self,
        mut f: impl FnMut(&T) -> Result<LinComb<U>>,
    ) -> Result<LinComb<U>> {
        let mut out = LinComb::zero();
        for (t, c) in self.iter() {
            for (u, k) in f(t)?.iter() {
                out.add_term(u.clone(), k * c);
            }
        }
        Ok(out)
    }
}

/// Bilinear extension of a map defined on basis-term pairs.
pub fn extend_bilinear<T: Ord + Clone, U: Ord + Clone, V: Ord + Clone>(
    mut f: impl FnMut(&T, &U) -> Result<LinComb<V>>,
    a: &LinComb<T>,
    b: &LinComb<U>,
) -> Result<LinComb<V>> {
    let mut out = LinComb::zero();
    for (t, ct) in a.iter() {
        for (u, cu) in b.iter() {
            for (v, cv) in f(t, u)?.iter() {
                out.add_term(v.clone(), cv * ct * cu);
            }
        }
    }
    Ok(out)
}

impl<T: Ord + fmt::Display> fmt::Display for LinComb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &Rational::from_integer(1.into()) {
                write!(f, "{t}")?;
            } else {
                write!(f, "{}·{t}", format_rational(c))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    #[test]
    fn add_merges_and_cancels() {
        let two_x = LinComb::with_coeff("x", rat_int(2));
        let three_x = LinComb::with_coeff("x", rat_int(3));
        assert_eq!(two_x.add(&three_x), LinComb::with_coeff("x", rat_int(5)));

        let x = LinComb::single("x");
        let minus_x = LinComb::with_coeff("x", rat_int(-1));
        assert!(x.add(&minus_x).is_zero());

        let mixed = LinComb::with_coeff("x", rat(1, 2)).add(&LinComb::with_coeff("y", rat(1, 3)));
        assert_eq!(mixed.coeff(&"x"), rat(1, 2));
        assert_eq!(mixed.coeff(&"y"), rat(1, 3));
    }

    #[test]
    fn scale_examples() {
        let xy = LinComb::single("x").add(&LinComb::single("y"));
        assert!(xy.scale(&rat_int(0)).is_zero());
        assert_eq!(
            LinComb::with_coeff("x", rat_int(2)).scale(&rat(1, 2)),
            LinComb::single("x")
        );
        assert_eq!(LinComb::single("x").scale(&rat_int(-1)).coeff(&"x"), rat_int(-1));
    }

    #[test]
    fn bilinear_on_singles_and_zero() {
        let concat = |s: &&str, t: &&str| Ok(LinComb::single(format!("{s}{t}")));
        let x = LinComb::single("x");
        let y = LinComb::single("y");
        assert_eq!(
            extend_bilinear(concat, &x, &y).unwrap(),
            LinComb::single("xy".to_string())
        );
        assert!(extend_bilinear(concat, &LinComb::zero(), &y).unwrap().is_zero());

        let xy = x.add(&y);
        let z = LinComb::single("z");
        let got = extend_bilinear(concat, &xy, &z).unwrap();
        assert_eq!(
            got,
            LinComb::single("xz".to_string()).add(&LinComb::single("yz".to_string()))
        );
    }

    fn arb_comb() -> impl Strategy<Value = LinComb<u8>> {
        proptest::collection::vec((0u8..6, -10i64..=10, 1i64..=10), 0..6)
            .prop_map(|v| LinComb::from_terms(v.into_iter().map(|(t, n, d)| (t, rat(n, d)))))
    }

    proptest! {
        #[test]
        fn add_assoc_comm_unit(a in arb_comb(), b in arb_comb(), c in arb_comb()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.add(&LinComb::zero()), a);
        }

        #[test]
        fn scale_distributes(a in arb_comb(), b in arb_comb(), n in -10i64..=10, d in 1i64..=10) {
            let c = rat(n, d);
            prop_assert_eq!(a.add(&b).scale(&c), a.scale(&c).add(&b.scale(&c)));
        }

        #[test]
        fn bilinear_matches_manual_expansion(a in arb_comb(), b in arb_comb()) {
            // pairing into a product term; compare against the hand expansion
            let f = |t: &u8, u: &u8| Ok(LinComb::single((*t, *u)));
            let got = extend_bilinear(f, &a, &b).unwrap();
            let mut expect = LinComb::zero();
            for (t, ct) in a.iter() {
                for (u, cu) in b.iter() {
                    expect.add_term((*t, *u), ct * cu);
                }
            }
            prop_assert_eq!(got, expect);
        }
    }
}
