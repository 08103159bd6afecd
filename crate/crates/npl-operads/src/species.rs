//! The pluggable interfaces: species terms with transport, structures with
//! partial compositions, and twisted products.
//!
//! All structures here are *positive* (no basis terms on the empty set) and
//! expose bounded basis enumeration so the axiom engine can quantify
//! exhaustively. Transport is implemented covariantly on relabelings; the
//! contravariant convention found in parts of the literature only reverses
//! the direction of the arrows, not the content of the naturality checks.

use crate::error::Result;
use crate::label::{Bijection, FinSet, Label};
use crate::lincomb::{extend_bilinear, LinComb};
use std::fmt::{Debug, Display};

/// A canonical basis term of a species: it knows its ground set and can be
/// transported along a bijection.
pub trait Term: Clone + Eq + Ord + Debug + Display + Send + Sync {
    fn ground_set(&self) -> FinSet;

    /// Transport along a bijection whose source contains the ground set.
    fn relabel(&self, sigma: &Bijection) -> Result<Self>;
}

/// A species with partial compositions `x ∘ₛ y` (a full operad, or a nested
/// pre-Lie structure when only the weaker axiom set holds).
pub trait Structure: Send + Sync {
    type T: Term;

    fn name(&self) -> String;

    /// All basis terms on the given ground set. Empty for the empty set.
    fn basis(&self, ground: &FinSet) -> Vec<Self::T>;

    /// Partial composition at `s`; the output terms live on `graft(S, s, T)`.
    fn compose(&self, x: &Self::T, s: Label, y: &Self::T) -> Result<LinComb<Self::T>>;

    /// The unit basis element on `{s}`, when the structure has units.
    fn unit(&self, s: Label) -> Option<LinComb<Self::T>>;

    /// Whether the structure claims the full operad axioms (as opposed to
    /// only the nested pre-Lie set).
    fn is_operad(&self) -> bool;
}

/// Bilinear extension of a structure's partial composition.
pub fn compose_lin<S: Structure>(
    st: &S,
    a: &LinComb<S::T>,
    s: Label,
    b: &LinComb<S::T>,
) -> Result<LinComb<S::T>> {
    extend_bilinear(|x, y| st.compose(x, s, y), a, b)
}

/// A twisted-algebra product `μ : a[S] ⊗ a[T] → a[S ⊔ T]` on disjoint ground
/// sets, natural in relabelings.
pub trait Product: Send + Sync {
    type T: Term;

    fn name(&self) -> String;

    fn mu(&self, x: &Self::T, y: &Self::T) -> Result<LinComb<Self::T>>;

    /// Whether the product is commutative (concatenation of orders is not).
    fn is_commutative(&self) -> bool;
}

/// Bilinear extension of a twisted product.
pub fn mu_lin<M: Product>(
    m: &M,
    a: &LinComb<M::T>,
    b: &LinComb<M::T>,
) -> Result<LinComb<M::T>> {
    extend_bilinear(|x, y| m.mu(x, y), a, b)
}

/// Transport of a whole combination.
pub fn relabel_lin<T: Term>(a: &LinComb<T>, sigma: &Bijection) -> Result<LinComb<T>> {
    a.extend_linear(|t| Ok(LinComb::single(t.relabel(sigma)?)))
}
