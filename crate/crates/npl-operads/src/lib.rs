//! Exact symbolic computation with operads and nested pre-Lie (NPL) structures
//! on vector species: set partitions, linear orders, cycles, permutations and
//! polynomial vector fields, all over arbitrary-precision rationals.
//!
//! The crate is organised in layers:
//!
//! * [`label`], [`partition`], [`linord`], [`cycle`] — the combinatorial ground
//!   floor: finite labelled sets, bijections, set partitions and the refinement
//!   lattice, linear orders and shuffles, cycles and permutations.
//! * [`lincomb`] — formal rational linear combinations over canonical basis
//!   terms; every algebraic operation below is extended bilinearly from basis
//!   terms.
//! * [`species`], [`kernel`] — the pluggable partial-composition and
//!   twisted-product interfaces together with the concrete structures: the
//!   one-point structure, the commutative and associative operads, and the
//!   concatenation/shuffle products.
//! * [`freecomm`] — monomials over set partitions, the free commutative
//!   twisted algebra on a structure, its square composition, its nested
//!   pre-Lie composition, and the global composition over sections of the
//!   partition lattice.
//! * [`instances`] — the named structures: partitions, linear set partitions,
//!   cycles, permutations, and the exponential structure.
//! * [`polymap`] — polynomial maps between powers of a finite-dimensional
//!   space, the vector-field pre-Lie product, the averaged partial composition
//!   and multilinear composition.
//! * [`axioms`], [`registry`] — the exhaustive axiom-verification engine and
//!   the name-keyed registry the command line uses.

pub mod axioms;
pub mod cycle;
pub mod error;
pub mod freecomm;
pub mod instances;
pub mod kernel;
pub mod label;
pub mod lincomb;
pub mod linord;
pub mod partition;
pub mod polymap;
pub mod rational;
pub mod registry;
pub mod species;

pub use error::{Error, Result};
pub use label::{Bijection, FinSet, Label};
pub use lincomb::LinComb;
pub use rational::Rational;
