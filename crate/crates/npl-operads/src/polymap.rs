//! Polynomial maps `V^⊗A → V` over exact rationals: sparse multivariate
//! polynomials in variables indexed by (input slot, coordinate), the
//! vector-field pre-Lie product, partial evaluation, the averaged partial
//! composition, and multilinear composition.

use crate::axioms::{Bounds, CheckReport, Failure};
use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use crate::lincomb::LinComb;
use crate::rational::{format_rational, rat_int, Rational};
use crate::species::{Structure, Term};
use num::traits::Zero;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

/// A variable: coordinate `1` of input slot `3` is `(Label(3), 1)`.
pub type Var = (Label, usize);

/// A monomial: exponent map with positive exponents only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct PolyMono(BTreeMap<Var, u32>);

impl PolyMono {
    pub fn one() -> Self {
        PolyMono(BTreeMap::new())
    }

    pub fn var(v: Var) -> Self {
        PolyMono([(v, 1)].into())
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (Var, u32)>) -> Self {
        PolyMono(exps.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Var, &u32)> {
        self.0.iter()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn degree_in_slot(&self, slot: Label) -> u32 {
        self.0.iter().filter(|((s, _), _)| *s == slot).map(|(_, e)| *e).sum()
    }

    fn mul(&self, other: &PolyMono) -> PolyMono {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            *out.entry(v).or_insert(0) += e;
        }
        PolyMono(out)
    }
}

impl fmt::Display for PolyMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, ((slot, coord), e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "x[{slot}.{coord}]")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A sparse polynomial with rational coefficients; no zero coefficients are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Poly(BTreeMap<PolyMono, Rational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(PolyMono::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.add_term(PolyMono::var(v), rat_int(1));
        p
    }

    pub fn monomial(m: PolyMono, c: Rational) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PolyMono, &Rational)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, m: PolyMono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(m);
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

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|(m, k)| (m.clone(), k * c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Formal partial derivative with respect to one variable.
    pub fn diff(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            if let Some(&e) = m.0.get(&v) {
                let mut exps = m.0.clone();
                if e == 1 {
                    exps.remove(&v);
                } else {
                    exps.insert(v, e - 1);
                }
                out.add_term(PolyMono(exps), c * rat_int(e as i64));
            }
        }
        out
    }

    /// Renames every variable of slot `from` to slot `to` (same coordinate).
    pub fn rename_slot(&self, from: Label, to: Label) -> Poly {
        if from == to {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let exps = m.0.iter().map(|(&(s, i), &e)| {
                if s == from {
                    ((to, i), e)
                } else {
                    ((s, i), e)
                }
            });
            out.add_term(PolyMono::from_exponents(exps), c.clone());
        }
        out
    }

    /// Substitutes rational values for a subset of the variables.
    pub fn substitute(&self, vals: &BTreeMap<Var, Rational>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mut coeff = c.clone();
            let mut exps: Vec<(Var, u32)> = Vec::new();
            for (&v, &e) in &m.0 {
                match vals.get(&v) {
                    Some(val) => {
                        for _ in 0..e {
                            coeff *= val;
                        }
                    }
                    None => exps.push((v, e)),
                }
            }
            out.add_term(PolyMono::from_exponents(exps), coeff);
        }
        out
    }

    /// Evaluates with every variable assigned.
    pub fn eval(&self, vals: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let res = self.substitute(vals);
        match res.0.len() {
            0 => Ok(Rational::zero()),
            1 if res.0.keys().next().unwrap().0.is_empty() => {
                Ok(res.0.values().next().unwrap().clone())
            }
            _ => Err(Error::Other("evaluation left free variables".into())),
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.keys().flat_map(|m| m.0.keys().copied())
    }

    pub fn max_degree(&self) -> u32 {
        self.0.keys().map(PolyMono::degree).max().unwrap_or(0)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.0.is_empty() {
                write!(f, "{}", format_rational(c))?;
            } else if c == &rat_int(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}·{m}", format_rational(c))?;
            }
        }
        Ok(())
    }
}

/// A polynomial function `V^⊗A → V`: one polynomial per output coordinate,
/// in variables `(slot, coordinate)` with slots drawn from the arity set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolynomialMap {
    slots: FinSet,
    dim: usize,
    components: Vec<Poly>,
}

/// A polynomial map with a single input slot.
pub type VectorField = PolynomialMap;

impl PolynomialMap {
    pub fn new(slots: FinSet, dim: usize, components: Vec<Poly>) -> Result<Self> {
        if dim == 0 || components.len() != dim {
            return Err(Error::DimensionMismatch(components.len(), dim));
        }
        for p in &components {
            for (slot, coord) in p.vars() {
                if !slots.contains(slot) {
                    return Err(Error::LabelNotInSet(slot.to_string(), slots.to_string()));
                }
                if coord >= dim {
                    return Err(Error::DimensionMismatch(coord + 1, dim));
                }
            }
        }
        Ok(PolynomialMap { slots, dim, components })
    }

    pub fn zero(slots: FinSet, dim: usize) -> Self {
        PolynomialMap { slots, dim, components: vec![Poly::zero(); dim] }
    }

    /// The identity map on one slot.
    pub fn identity(slot: Label, dim: usize) -> Self {
        PolynomialMap {
            slots: FinSet::singleton(slot),
            dim,
            components: (0..dim).map(|i| Poly::var((slot, i))).collect(),
        }
    }

    pub fn slots(&self) -> &FinSet {
        &self.slots
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    pub fn add(&self, other: &PolynomialMap) -> Result<PolynomialMap> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.slots != other.slots {
            return Err(Error::GroundSetMismatch(self.slots.to_string(), other.slots.to_string()));
        }
        Ok(PolynomialMap {
            slots: self.slots.clone(),
            dim: self.dim,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> PolynomialMap {
        PolynomialMap {
            slots: self.slots.clone(),
            dim: self.dim,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Transport: renames input slots along a bijection.
    pub fn relabel_slots(&self, sigma: &Bijection) -> Result<PolynomialMap> {
        let mut components = self.components.clone();
        // two-phase rename through fresh temporaries to dodge collisions
        let tmp_base = self
            .slots
            .max_label()
            .map(|l| l.0 + 1)
            .unwrap_or(0)
            .max(sigma.target().max_label().map(|l| l.0 + 1).unwrap_or(0));
        let slots_in: Vec<Label> = self.slots.iter().collect();
        for (i, &s) in slots_in.iter().enumerate() {
            components =
                components.iter().map(|p| p.rename_slot(s, Label(tmp_base + i as u32))).collect();
        }
        for (i, &s) in slots_in.iter().enumerate() {
            let target = sigma.apply(s)?;
            components =
                components.iter().map(|p| p.rename_slot(Label(tmp_base + i as u32), target)).collect();
        }
        PolynomialMap::new(sigma.apply_set(&self.slots)?, self.dim, components)
    }

    /// Substitutes concrete coordinate vectors for a subset of the slots.
    pub fn partial_evaluate(
        &self,
        fixed: &BTreeMap<Label, Vec<Rational>>,
    ) -> Result<PolynomialMap> {
        let mut vals: BTreeMap<Var, Rational> = BTreeMap::new();
        for (&slot, vector) in fixed {
            if !self.slots.contains(slot) {
                return Err(Error::LabelNotInSet(slot.to_string(), self.slots.to_string()));
            }
            if vector.len() != self.dim {
                return Err(Error::DimensionMismatch(vector.len(), self.dim));
            }
            for (i, v) in vector.iter().enumerate() {
                vals.insert((slot, i), v.clone());
            }
        }
        let remaining =
            self.slots.minus(&FinSet::new(fixed.keys().copied()));
        PolynomialMap::new(
            remaining,
            self.dim,
            self.components.iter().map(|p| p.substitute(&vals)).collect(),
        )
    }

    /// Evaluates at a full point, one coordinate vector per slot.
    pub fn evaluate(&self, point: &BTreeMap<Label, Vec<Rational>>) -> Result<Vec<Rational>> {
        let fixed = self.partial_evaluate(point)?;
        if !fixed.slots.is_empty() {
            return Err(Error::Other(format!("missing values for slots {}", fixed.slots)));
        }
        fixed
            .components
            .iter()
            .map(|p| p.eval(&BTreeMap::new()))
            .collect()
    }

    /// True when every monomial of every component is degree one in each
    /// input slot (one coordinate per slot, exponent one).
    pub fn is_multilinear(&self) -> bool {
        self.components.iter().all(|p| {
            p.terms().all(|(m, _)| {
                self.slots.iter().all(|s| m.degree_in_slot(s) == 1)
                    && m.degree() == self.slots.len() as u32
            })
        })
    }
}

impl fmt::Display for PolynomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// The pre-Lie product of two vector fields on the same slot:
/// the first field differentiates the second, coordinate by coordinate.
pub fn prelie(f: &PolynomialMap, g: &PolynomialMap) -> Result<PolynomialMap> {
    if f.dim != g.dim {
        return Err(Error::DimensionMismatch(f.dim, g.dim));
    }
    if f.slots.len() != 1 || f.slots != g.slots {
        return Err(Error::GroundSetMismatch(f.slots.to_string(), g.slots.to_string()));
    }
    let slot = f.slots.min_label().unwrap();
    let components = (0..f.dim)
        .map(|j| {
            let mut acc = Poly::zero();
            for i in 0..f.dim {
                acc = acc.add(&f.components[i].mul(&g.components[j].diff((slot, i))));
            }
            acc
        })
        .collect();
    PolynomialMap::new(f.slots.clone(), f.dim, components)
}

/// The averaged partial composition on polynomial maps,
/// `g ▷_b f` for `g` on slots `B` (at `b`) and `f` on slots `C`:
/// for each slot `k` of `C`, move `g`'s slot `b` onto `k` and contract with
/// the derivative of `f` in slot `k`, then average over `k`.
pub fn npl_partial(g: &PolynomialMap, b: Label, f: &PolynomialMap) -> Result<PolynomialMap> {
    if g.dim != f.dim {
        return Err(Error::DimensionMismatch(g.dim, f.dim));
    }
    if !g.slots.contains(b) {
        return Err(Error::LabelNotInSet(b.to_string(), g.slots.to_string()));
    }
    if f.slots.is_empty() {
        return Err(Error::EmptyGround);
    }
    let rest = g.slots.remove(b);
    if !rest.is_disjoint(&f.slots) {
        return Err(Error::Overlap(rest.to_string(), f.slots.to_string()));
    }
    let out_slots = rest.union(&f.slots);
    let inv_size = Rational::new(1.into(), (f.slots.len() as i64).into());
    let components = (0..g.dim)
        .map(|j| {
            let mut acc = Poly::zero();
            for k in f.slots.iter() {
                for i in 0..g.dim {
                    let g_i = g.components[i].rename_slot(b, k);
                    acc = acc.add(&g_i.mul(&f.components[j].diff((k, i))));
                }
            }
            acc.scale(&inv_size)
        })
        .collect();
    PolynomialMap::new(out_slots, g.dim, components)
}

/// Composition of multilinear maps: substitute the output of `f` into input
/// slot `b` of `g`.
pub fn end_compose(g: &PolynomialMap, b: Label, f: &PolynomialMap) -> Result<PolynomialMap> {
    if g.dim != f.dim {
        return Err(Error::DimensionMismatch(g.dim, f.dim));
    }
    if !g.is_multilinear() {
        return Err(Error::NotMultilinear(g.to_string()));
    }
    if !f.is_multilinear() {
        return Err(Error::NotMultilinear(f.to_string()));
    }
    if !g.slots.contains(b) {
        return Err(Error::LabelNotInSet(b.to_string(), g.slots.to_string()));
    }
    let rest = g.slots.remove(b);
    if !rest.is_disjoint(&f.slots) {
        return Err(Error::Overlap(rest.to_string(), f.slots.to_string()));
    }
    let out_slots = rest.union(&f.slots);
    let components = (0..g.dim)
        .map(|j| {
            let mut acc = Poly::zero();
            for i in 0..g.dim {
                acc = acc.add(&g.components[j].diff((b, i)).mul(&f.components[i]));
            }
            acc
        })
        .collect();
    PolynomialMap::new(out_slots, g.dim, components)
}

/// A standard basis element of the multilinear maps `V^⊗B → V`: pick one
/// coordinate per input slot and one output coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EndTerm {
    pub coords: BTreeMap<Label, usize>,
    pub out: usize,
}

impl fmt::Display for EndTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[")?;
        for (i, (s, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}:{c}")?;
        }
        write!(f, "]->{}", self.out)
    }
}

impl Term for EndTerm {
    fn ground_set(&self) -> FinSet {
        FinSet::new(self.coords.keys().copied())
    }

    fn relabel(&self, sigma: &Bijection) -> Result<Self> {
        Ok(EndTerm {
            coords: self
                .coords
                .iter()
                .map(|(&s, &c)| sigma.apply(s).map(|t| (t, c)))
                .collect::<Result<_>>()?,
            out: self.out,
        })
    }
}

/// The multilinear maps of a fixed dimension, with the standard basis and
/// substitution composition.
#[derive(Debug, Clone)]
pub struct EndBasis {
    pub dim: usize,
}

impl Structure for EndBasis {
    type T = EndTerm;

    fn name(&self) -> String {
        format!("end(dim={})", self.dim)
    }

    fn basis(&self, ground: &FinSet) -> Vec<EndTerm> {
        if ground.is_empty() {
            return Vec::new();
        }
        let slots: Vec<Label> = ground.iter().collect();
        let mut assignments: Vec<BTreeMap<Label, usize>> = vec![BTreeMap::new()];
        for &s in &slots {
            let mut next = Vec::with_capacity(assignments.len() * self.dim);
            for a in &assignments {
                for c in 0..self.dim {
                    let mut a = a.clone();
                    a.insert(s, c);
                    next.push(a);
                }
            }
            assignments = next;
        }
        let mut out = Vec::new();
        for a in assignments {
            for o in 0..self.dim {
                out.push(EndTerm { coords: a.clone(), out: o });
            }
        }
        out
    }

    fn compose(&self, x: &EndTerm, s: Label, y: &EndTerm) -> Result<LinComb<EndTerm>> {
        let sx = x.ground_set();
        if !sx.contains(s) {
            return Err(Error::LabelNotInSet(s.to_string(), sx.to_string()));
        }
        if !sx.remove(s).is_disjoint(&y.ground_set()) {
            return Err(Error::Overlap(sx.remove(s).to_string(), y.ground_set().to_string()));
        }
        if x.coords[&s] != y.out {
            return Ok(LinComb::zero());
        }
        let mut coords = x.coords.clone();
        coords.remove(&s);
        coords.extend(y.coords.iter().map(|(&k, &v)| (k, v)));
        Ok(LinComb::single(EndTerm { coords, out: x.out }))
    }

    fn unit(&self, s: Label) -> Option<LinComb<EndTerm>> {
        let mut u = LinComb::zero();
        for i in 0..self.dim {
            u.add_term(EndTerm { coords: [(s, i)].into(), out: i }, rat_int(1));
        }
        Some(u)
    }

    fn is_operad(&self) -> bool {
        true
    }
}

/// The polynomial map realizing a standard multilinear basis element.
pub fn end_term_to_map(t: &EndTerm, dim: usize) -> PolynomialMap {
    let slots = t.ground_set();
    let mono = PolyMono::from_exponents(t.coords.iter().map(|(&s, &c)| ((s, c), 1)));
    let components = (0..dim)
        .map(|j| if j == t.out { Poly::monomial(mono.clone(), rat_int(1)) } else { Poly::zero() })
        .collect();
    PolynomialMap::new(slots, dim, components).expect("standard basis maps are well formed")
}

/// Verifies that a term-level map into polynomial maps respects both the
/// composition (`Ψ(x ∘ₛ y) = Ψ(x) ▷ₛ Ψ(y)`) and transport, over the bounded
/// basis enumeration. Failures are collected with a description of the
/// offending instance.
pub fn check_palgebra_morphism<S: Structure>(
    p: &S,
    dim: usize,
    psi: &dyn Fn(&S::T) -> Result<PolynomialMap>,
    bounds: &Bounds,
) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut instances = 0usize;
    let mut truncated = false;

    let psi_lin = |comb: &LinComb<S::T>, slots: &FinSet| -> Result<PolynomialMap> {
        let mut acc = PolynomialMap::zero(slots.clone(), dim);
        for (t, c) in comb.iter() {
            acc = acc.add(&psi(t)?.scale(c))?;
        }
        Ok(acc)
    };

    'outer: for a in 1..=bounds.max_total.saturating_sub(1) {
        for b in 1..=bounds.max_total.saturating_sub(a) {
            let s_ground = FinSet::segment(a as u32);
            let t_ground = FinSet::from_u32s(a as u32 + 1..=(a + b) as u32);
            for x in p.basis(&s_ground) {
                for y in p.basis(&t_ground) {
                    for s in s_ground.iter() {
                        if instances >= bounds.cap {
                            truncated = true;
                            break 'outer;
                        }
                        instances += 1;
                        let composed = p.compose(&x, s, &y)?;
                        let out_slots = s_ground.remove(s).union(&t_ground);
                        let lhs = psi_lin(&composed, &out_slots)?;
                        let rhs = npl_partial(&psi(&x)?, s, &psi(&y)?)?;
                        if lhs != rhs {
                            failures.push(Failure {
                                total_size: a + b,
                                description: format!("Ψ({x} ∘_{s} {y}) vs Ψ({x}) ▷_{s} Ψ({y})"),
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                                difference: lhs.add(&rhs.scale(&rat_int(-1)))?.to_string(),
                            });
                        }
                    }
                }
            }
        }
    }

    // transport equivariance on shifted relabelings
    let shift = 50u32;
    for a in 1..=bounds.max_total {
        let s_ground = FinSet::segment(a as u32);
        let sigma = Bijection::new(s_ground.iter().map(|l| (l, Label(l.0 + shift))))?;
        for x in p.basis(&s_ground) {
            instances += 1;
            let lhs = psi(&x.relabel(&sigma)?)?;
            let rhs = psi(&x)?.relabel_slots(&sigma)?;
            if lhs != rhs {
                failures.push(Failure {
                    total_size: a,
                    description: format!("Ψ(σ·{x}) vs σ·Ψ({x})"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    difference: lhs.add(&rhs.scale(&rat_int(-1)))?.to_string(),
                });
            }
        }
    }

    Ok(CheckReport {
        target: format!("morphism {} -> polynomial maps (dim {dim})", p.name()),
        axiom: crate::axioms::AxiomName::Morphism,
        instances,
        truncated,
        failures,
    })
}

/// Deterministic pseudo-random polynomial map with small rational
/// coefficients; used by the randomized sweeps.
pub fn random_map<R: Rng>(
    rng: &mut R,
    slots: &FinSet,
    dim: usize,
    max_degree: u32,
    terms: usize,
) -> PolynomialMap {
    let vars: Vec<Var> = slots.iter().flat_map(|s| (0..dim).map(move |c| (s, c))).collect();
    let components = (0..dim)
        .map(|_| {
            let mut p = Poly::zero();
            for _ in 0..terms {
                let deg = rng.gen_range(0..=max_degree);
                let mut mono = PolyMono::one();
                for _ in 0..deg {
                    if vars.is_empty() {
                        break;
                    }
                    let v = vars[rng.gen_range(0..vars.len())];
                    mono = mono.mul(&PolyMono::var(v));
                }
                let num = rng.gen_range(-3i64..=3);
                let den = rng.gen_range(1i64..=2);
                p.add_term(mono, Rational::new(num.into(), den.into()));
            }
            p
        })
        .collect();
    PolynomialMap::new(slots.clone(), dim, components).expect("random map is well formed")
}
