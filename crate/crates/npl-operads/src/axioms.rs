//! The reusable property engine: enumerate instances over bounded label
//! universes, evaluate each axiom as an exact identity of linear
//! combinations, and report pass/fail with minimal counterexamples.
//!
//! Ground sets are drawn as consecutive segments of the canonical universe
//! `{1..n}`; naturality is checked separately with random bijections into a
//! disjoint alphabet, which makes segment representatives sufficient for the
//! exhaustive sweeps. Instances are evaluated in parallel and merged in
//! enumeration order, so identical bounds always produce identical reports.

use crate::error::{Error, Result};
use crate::label::{Bijection, FinSet, Label};
use crate::lincomb::LinComb;
use crate::partition::SetPartition;
use crate::rational::rat_int;
use crate::species::{compose_lin, mu_lin, relabel_lin, Product, Structure, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

/// The axioms the engine knows how to quantify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomName {
    /// Parallel associativity: `(x∘ₛy)∘ₛ'z = (x∘ₛ'z)∘ₛy`.
    A1,
    /// Nested associativity: `(x∘ₛy)∘ₜz = x∘ₛ(y∘ₜz)`.
    A2,
    /// Nested pre-Lie: the two nested associators agree after swapping the
    /// first two arguments.
    Npl,
    /// Transport commutes with composition.
    N1,
    /// Units transport to units.
    N2,
    /// Left unit law.
    U1,
    /// Right unit law.
    U2,
    /// Compatibility of a composition with a twisted product.
    MuCompat,
    /// Structure-map property of a morphism into polynomial maps.
    Morphism,
}

impl fmt::Display for AxiomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomName::A1 => "A1",
            AxiomName::A2 => "A2",
            AxiomName::Npl => "NPL",
            AxiomName::N1 => "N1",
            AxiomName::N2 => "N2",
            AxiomName::U1 => "U1",
            AxiomName::U2 => "U2",
            AxiomName::MuCompat => "MU-COMPAT",
            AxiomName::Morphism => "MORPHISM",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for AxiomName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_uppercase().as_str() {
            "A1" => AxiomName::A1,
            "A2" => AxiomName::A2,
            "NPL" => AxiomName::Npl,
            "N1" => AxiomName::N1,
            "N2" => AxiomName::N2,
            "U1" => AxiomName::U1,
            "U2" => AxiomName::U2,
            "MU-COMPAT" | "MUCOMPAT" => AxiomName::MuCompat,
            "MORPHISM" => AxiomName::Morphism,
            other => return Err(Error::invalid("axiom", other.to_string())),
        })
    }
}

/// Size limits and sampling parameters for one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Total ground-set size over all arguments of an instance.
    pub max_total: usize,
    /// Optional per-argument size bound.
    pub max_part: Option<usize>,
    /// Evaluation cap; reports past it are flagged truncated.
    pub cap: usize,
    /// Sample count for the randomized naturality checks.
    pub naturality_samples: usize,
    /// Seed for every randomized part; fixed for reproducibility.
    pub seed: u64,
    /// Outer ground-set bound for compatibility sweeps.
    pub mu_max_outer: usize,
    /// Inner ground-set bound for compatibility sweeps.
    pub mu_max_inner: usize,
    /// Partition block-count bound for compatibility sweeps.
    pub mu_max_blocks: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_total: 5,
            max_part: None,
            cap: 1_000_000,
            naturality_samples: 100,
            seed: 0x5eed,
            mu_max_outer: 4,
            mu_max_inner: 3,
            mu_max_blocks: 3,
        }
    }
}

impl Bounds {
    pub fn with_max_total(total: usize) -> Self {
        Bounds { max_total: total, ..Bounds::default() }
    }

    pub fn with_parts(total: usize, part: usize) -> Self {
        Bounds { max_total: total, max_part: Some(part), ..Bounds::default() }
    }
}

/// Optional restriction on the third argument of the ternary axioms.
pub type ZFilter<'a, T> = Option<&'a (dyn Fn(&T) -> bool + Sync)>;

/// One violated instance, with both sides and their difference rendered in
/// canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub total_size: usize,
    pub description: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub target: String,
    pub axiom: AxiomName,
    pub instances: usize,
    pub truncated: bool,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The failure of smallest total ground-set size, ties broken by the
    /// instance description.
    pub fn minimal_counterexample(&self) -> Result<&Failure> {
        self.failures
            .iter()
            .min_by(|a, b| {
                a.total_size.cmp(&b.total_size).then_with(|| a.description.cmp(&b.description))
            })
            .ok_or(Error::NoFailures)
    }

    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "pass" } else { "FAIL" };
        let trunc = if self.truncated { ", truncated" } else { "" };
        match self.minimal_counterexample() {
            Ok(f) => format!(
                "{} on {}: {status} ({} instances{trunc}; {} failures; minimal: {})",
                self.axiom,
                self.target,
                self.instances,
                self.failures.len(),
                f.description
            ),
            Err(_) => {
                format!("{} on {}: {status} ({} instances{trunc})", self.axiom, self.target, self.instances)
            }
        }
    }
}

fn segment_after(start: u32, len: usize) -> FinSet {
    FinSet::from_u32s(start + 1..=start + len as u32)
}

fn size_ok(bounds: &Bounds, parts: &[usize]) -> bool {
    parts.iter().sum::<usize>() <= bounds.max_total
        && bounds.max_part.is_none_or(|m| parts.iter().all(|&p| p <= m))
}

/// Deterministic parallel sweep: evaluates at most `cap` instances and
/// merges failures in enumeration order.
fn sweep<I: Send + Sync>(
    bounds: &Bounds,
    mut items: Vec<I>,
    eval: impl Fn(&I) -> Result<Option<Failure>> + Sync,
) -> (usize, bool, Vec<Failure>) {
    let truncated = items.len() > bounds.cap;
    items.truncate(bounds.cap);
    let evaluated: Vec<Option<Failure>> = items
        .par_iter()
        .map(|i| match eval(i) {
            Ok(f) => f,
            Err(e) => Some(Failure {
                total_size: usize::MAX,
                description: format!("evaluation error: {e}"),
                lhs: String::new(),
                rhs: String::new(),
                difference: String::new(),
            }),
        })
        .collect();
    (items.len(), truncated, evaluated.into_iter().flatten().collect())
}

fn diff_string<T: crate::species::Term>(lhs: &LinComb<T>, rhs: &LinComb<T>) -> String {
    lhs.sub(rhs).to_string()
}

type Triple<T> = (T, T, T, Label, Label, usize);

fn triple_instances<S: Structure>(
    s: &S,
    bounds: &Bounds,
    first_points_in_x: bool,
) -> Vec<Triple<S::T>> {
    // ordered size compositions (a, b, c); arguments on the segments
    // {1..a}, {a+1..a+b}, {a+b+1..a+b+c}
    let mut out = Vec::new();
    for a in 1..=bounds.max_total {
        for b in 1..=bounds.max_total {
            for c in 1..=bounds.max_total {
                if !size_ok(bounds, &[a, b, c]) {
                    continue;
                }
                let sa = segment_after(0, a);
                let sb = segment_after(a as u32, b);
                let sc = segment_after((a + b) as u32, c);
                for x in s.basis(&sa) {
                    for y in s.basis(&sb) {
                        for z in s.basis(&sc) {
                            for p in sa.iter() {
                                if first_points_in_x {
                                    // second point also in x, distinct
                                    for q in sa.iter().filter(|&q| q != p) {
                                        out.push((x.clone(), y.clone(), z.clone(), p, q, a + b + c));
                                    }
                                } else {
                                    for q in sb.iter() {
                                        out.push((x.clone(), y.clone(), z.clone(), p, q, a + b + c));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn run_a1<S: Structure>(s: &S, bounds: &Bounds) -> (usize, bool, Vec<Failure>) {
    let items = triple_instances(s, bounds, true);
    sweep(bounds, items, |(x, y, z, p, q, total)| {
        let lhs = compose_lin(s, &s.compose(x, *p, y)?, *q, &LinComb::single(z.clone()))?;
        let rhs = compose_lin(s, &s.compose(x, *q, z)?, *p, &LinComb::single(y.clone()))?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: *total,
                description: format!("({x} ∘_{p} {y}) ∘_{q} {z} vs ({x} ∘_{q} {z}) ∘_{p} {y}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    })
}

fn run_a2<S: Structure>(
    s: &S,
    bounds: &Bounds,
    z_filter: ZFilter<S::T>,
) -> (usize, bool, Vec<Failure>) {
    let mut items = triple_instances(s, bounds, false);
    if let Some(f) = z_filter {
        items.retain(|(_, _, z, _, _, _)| f(z));
    }
    sweep(bounds, items, |(x, y, z, p, t, total)| {
        let lhs = compose_lin(s, &s.compose(x, *p, y)?, *t, &LinComb::single(z.clone()))?;
        let rhs = compose_lin(s, &LinComb::single(x.clone()), *p, &s.compose(y, *t, z)?)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: *total,
                description: format!("({x} ∘_{p} {y}) ∘_{t} {z} vs {x} ∘_{p} ({y} ∘_{t} {z})"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    })
}

fn run_npl<S: Structure>(s: &S, bounds: &Bounds) -> (usize, bool, Vec<Failure>) {
    let items = triple_instances(s, bounds, false);
    sweep(bounds, items, |(x, y, z, p, t, total)| {
        let xz = |a: &S::T, pa: Label, b: &S::T, pb: Label| -> Result<LinComb<S::T>> {
            // a ∘_pa (b ∘_pb z) − (a ∘_pa b) ∘_pb z
            let nested = compose_lin(s, &LinComb::single(a.clone()), pa, &s.compose(b, pb, z)?)?;
            let iterated = compose_lin(s, &s.compose(a, pa, b)?, pb, &LinComb::single(z.clone()))?;
            Ok(nested.sub(&iterated))
        };
        let lhs = xz(x, *p, y, *t)?;
        let rhs = xz(y, *t, x, *p)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: *total,
                description: format!(
                    "assoc defect of ({x}; ∘_{p}) against ({y}; ∘_{t}) on {z} is not symmetric"
                ),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    })
}

fn run_u1<S: Structure>(s: &S, bounds: &Bounds) -> (usize, bool, Vec<Failure>) {
    let mut items = Vec::new();
    for a in 1..=bounds.max_total {
        if !size_ok(bounds, &[a]) {
            continue;
        }
        let ground = segment_after(0, a);
        let star = Label(a as u32 + 1);
        for x in s.basis(&ground) {
            items.push((star, x, a));
        }
    }
    sweep(bounds, items, |(star, x, total)| {
        let Some(u) = s.unit(*star) else { return Ok(None) };
        let lhs = compose_lin(s, &u, *star, &LinComb::single(x.clone()))?;
        let rhs = LinComb::single(x.clone());
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: *total,
                description: format!("u_{star} ∘_{star} {x}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    })
}

fn run_u2<S: Structure>(s: &S, bounds: &Bounds) -> (usize, bool, Vec<Failure>) {
    let mut items = Vec::new();
    for a in 1..=bounds.max_total {
        if !size_ok(bounds, &[a]) {
            continue;
        }
        let ground = segment_after(0, a);
        for x in s.basis(&ground) {
            for p in ground.iter() {
                items.push((x.clone(), p, a));
            }
        }
    }
    sweep(bounds, items, |(x, p, total)| {
        let Some(u) = s.unit(*p) else { return Ok(None) };
        let lhs = compose_lin(s, &LinComb::single(x.clone()), *p, &u)?;
        let rhs = LinComb::single(x.clone());
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: *total,
                description: format!("{x} ∘_{p} u_{p}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    })
}

/// Random bijection from `source` into fresh labels above `base`, drawn
/// without replacement.
fn random_bijection<R: Rng>(rng: &mut R, source: &FinSet, base: u32) -> Bijection {
    let mut pool: Vec<u32> = (base..base + 40).collect();
    pool.shuffle(rng);
    Bijection::new(source.iter().zip(pool).map(|(l, t)| (l, Label(t))))
        .expect("fresh labels are distinct")
}

fn run_n1<S: Structure>(s: &S, bounds: &Bounds) -> (usize, bool, Vec<Failure>) {
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let mut items = Vec::new();
    let mut attempts = 0;
    while items.len() < bounds.naturality_samples && attempts < bounds.naturality_samples * 50 {
        attempts += 1;
        let max = bounds.max_total.max(2);
        let a = rng.gen_range(1..max);
        let b = rng.gen_range(1..=(max - a).max(1));
        if !size_ok(bounds, &[a, b]) {
            continue;
        }
        let sa = segment_after(0, a);
        let sb = segment_after(a as u32, b);
        let bx = s.basis(&sa);
        let by = s.basis(&sb);
        if bx.is_empty() || by.is_empty() {
            continue;
        }
        let x = bx[rng.gen_range(0..bx.len())].clone();
        let y = by[rng.gen_range(0..by.len())].clone();
        let points: Vec<Label> = sa.iter().collect();
        let p = points[rng.gen_range(0..points.len())];
        let sigma1 = random_bijection(&mut rng, &sa, 101);
        let sigma2 = random_bijection(&mut rng, &sb, 201);
        items.push((x, y, p, sigma1, sigma2, a + b));
    }
    sweep(bounds, items, |(x, y, p, sigma1, sigma2, total)| {
        let sigma = sigma1
            .restrict(&x.ground_set().remove(*p))?
            .disjoint_union(sigma2)?;
        let lhs = relabel_lin(&s.compose(x, *p, y)?, &sigma)?;
        let rhs = s.compose(&x.relabel(sigma1)?, sigma1.apply(*p)?, &y.relabel(sigma2)?)?;
        if lhs == rhs {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: *total,
                description: format!("σ({x} ∘_{p} {y}) vs σ₁{x} ∘_σ({p}) σ₂{y}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    })
}

fn run_n2<S: Structure>(s: &S, bounds: &Bounds) -> (usize, bool, Vec<Failure>) {
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed.wrapping_add(1));
    let mut items = Vec::new();
    for _ in 0..bounds.naturality_samples {
        let s1 = Label(rng.gen_range(1..=40));
        let s2 = Label(rng.gen_range(41..=80));
        items.push((s1, s2));
    }
    sweep(bounds, items, |(s1, s2)| {
        let (Some(u1), Some(u2)) = (s.unit(*s1), s.unit(*s2)) else {
            return Ok(None);
        };
        let sigma = Bijection::new([(*s1, *s2)])?;
        let lhs = relabel_lin(&u1, &sigma)?;
        if lhs == u2 {
            Ok(None)
        } else {
            Ok(Some(Failure {
                total_size: 1,
                description: format!("σ(u_{s1}) vs u_{s2}"),
                lhs: lhs.to_string(),
                rhs: u2.to_string(),
                difference: diff_string(&lhs, &u2),
            }))
        }
    })
}

/// Runs one axiom of a structure at the given bounds.
pub fn run_axiom<S: Structure>(s: &S, axiom: AxiomName, bounds: &Bounds) -> CheckReport {
    run_axiom_filtered(s, axiom, bounds, None)
}

/// Like [`run_axiom`], with an optional filter restricting the third
/// argument of the ternary axioms.
pub fn run_axiom_filtered<S: Structure>(
    s: &S,
    axiom: AxiomName,
    bounds: &Bounds,
    z_filter: ZFilter<S::T>,
) -> CheckReport {
    let (instances, truncated, failures) = match axiom {
        AxiomName::A1 => run_a1(s, bounds),
        AxiomName::A2 => run_a2(s, bounds, z_filter),
        AxiomName::Npl => run_npl(s, bounds),
        AxiomName::N1 => run_n1(s, bounds),
        AxiomName::N2 => run_n2(s, bounds),
        AxiomName::U1 => run_u1(s, bounds),
        AxiomName::U2 => run_u2(s, bounds),
        AxiomName::MuCompat | AxiomName::Morphism => (
            0,
            false,
            vec![Failure {
                total_size: 0,
                description: format!("{axiom} requires a dedicated runner"),
                lhs: String::new(),
                rhs: String::new(),
                difference: String::new(),
            }],
        ),
    };
    CheckReport { target: s.name(), axiom, instances, truncated, failures }
}

/// Verifies compatibility of a structure's composition with a twisted
/// product: composing into a product of blocks only touches the block
/// holding the composition point.
pub fn run_mu_compat<Q, M>(q: &Q, mu: &M, bounds: &Bounds) -> CheckReport
where
    Q: Structure,
    M: Product<T = Q::T>,
{
    type MuItem<T> = (Vec<T>, usize, Label, T, usize);
    let mut items: Vec<MuItem<Q::T>> = Vec::new();
    for a in 1..=bounds.mu_max_outer {
        let ground = segment_after(0, a);
        for pi in SetPartition::enumerate(&ground) {
            if pi.len() > bounds.mu_max_blocks {
                continue;
            }
            // every assignment of basis terms to the blocks of pi
            let per_block: Vec<Vec<Q::T>> = pi.blocks().iter().map(|b| q.basis(b)).collect();
            if per_block.iter().any(Vec::is_empty) {
                continue;
            }
            let mut assignments: Vec<Vec<Q::T>> = vec![Vec::new()];
            for terms in &per_block {
                let mut next = Vec::with_capacity(assignments.len() * terms.len());
                for asg in &assignments {
                    for t in terms {
                        let mut asg = asg.clone();
                        asg.push(t.clone());
                        next.push(asg);
                    }
                }
                assignments = next;
            }
            for asg in assignments {
                for p in ground.iter() {
                    let holder = pi
                        .blocks()
                        .iter()
                        .position(|b| b.contains(p))
                        .expect("point lies in some block");
                    for t_len in 1..=bounds.mu_max_inner {
                        let t_ground = segment_after(a as u32, t_len);
                        for beta in q.basis(&t_ground) {
                            items.push((asg.clone(), holder, p, beta.clone(), a + t_len));
                        }
                    }
                }
            }
        }
    }
    let (instances, truncated, failures) = sweep(bounds, items, |(asg, holder, p, beta, total)| {
        // left: fold all blocks through the product, then compose
        let mut folded = LinComb::single(asg[0].clone());
        for t in &asg[1..] {
            folded = mu_lin(mu, &folded, &LinComb::single(t.clone()))?;
        }
        let lhs = compose_lin(q, &folded, *p, &LinComb::single(beta.clone()))?;
        // right: compose into the holding block, then fold with the rest
        let mut rhs = q.compose(&asg[*holder], *p, beta)?;
        for (i, t) in asg.iter().enumerate() {
            if i != *holder {
                rhs = mu_lin(mu, &rhs, &LinComb::single(t.clone()))?;
            }
        }
        if lhs == rhs {
            Ok(None)
        } else {
            let desc_terms: Vec<String> = asg.iter().map(|t| t.to_string()).collect();
            Ok(Some(Failure {
                total_size: *total,
                description: format!(
                    "({}) ∘_{p} {beta} under μ={}",
                    desc_terms.join(" • "),
                    mu.name()
                ),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                difference: diff_string(&lhs, &rhs),
            }))
        }
    });
    CheckReport {
        target: format!("({}, {})", q.name(), mu.name()),
        axiom: AxiomName::MuCompat,
        instances,
        truncated,
        failures,
    }
}

/// Convenience wrapper: the structure-level compatibility checker.
pub fn check_mu_compatibility<Q, M>(q: &Q, mu: &M, bounds: &Bounds) -> CheckReport
where
    Q: Structure,
    M: Product<T = Q::T>,
{
    run_mu_compat(q, mu, bounds)
}

/// Exact defect of nested associativity on one instance (used by the
/// targeted coefficient checks).
pub fn a2_defect<S: Structure>(
    s: &S,
    x: &S::T,
    p: Label,
    y: &S::T,
    t: Label,
    z: &S::T,
) -> Result<LinComb<S::T>> {
    let nested = compose_lin(s, &LinComb::single(x.clone()), p, &s.compose(y, t, z)?)?;
    let iterated = compose_lin(s, &s.compose(x, p, y)?, t, &LinComb::single(z.clone()))?;
    Ok(nested.sub(&iterated))
}

/// Scales a combination by an integer; shorthand for the coefficient checks.
pub fn int_multiple<T: crate::species::Term>(n: i64, t: &T) -> LinComb<T> {
    LinComb::with_coeff(t.clone(), rat_int(n))
}
