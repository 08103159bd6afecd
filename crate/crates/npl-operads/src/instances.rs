//! The named structures: set partitions, linear set partitions, the
//! exponential structure, cycles, and permutations, together with the
//! conversions between their native presentations and monomials.

use crate::cycle::{Cycle, Permutation};
use crate::error::{Error, Result};
use crate::freecomm::{
    npl_compose, operadic_global, square_compose, Monomial, NestedElement, NplFreeStructure,
    SquareStructure,
};
use crate::kernel::{
    as_plus, com_plus, concat_product_e, cycles_npl, identity_operad, shuffle_product_l, AsPlus,
    ComPlus, ConcatE, CyclesNpl, EStar, IdentityOperad, ShuffleL, Star,
};
use crate::label::{FinSet, Label};
use crate::lincomb::LinComb;
use crate::linord::{LinearOrder, LinearSetPartition};
use crate::partition::SetPartition;
use crate::species::Term;

impl Term for SetPartition {
    fn ground_set(&self) -> FinSet {
        SetPartition::ground_set(self)
    }

    fn relabel(&self, sigma: &crate::label::Bijection) -> Result<Self> {
        SetPartition::relabel(self, sigma)
    }
}

impl Term for LinearSetPartition {
    fn ground_set(&self) -> FinSet {
        LinearSetPartition::ground_set(self)
    }

    fn relabel(&self, sigma: &crate::label::Bijection) -> Result<Self> {
        LinearSetPartition::relabel(self, sigma)
    }
}

impl Term for Permutation {
    fn ground_set(&self) -> FinSet {
        Permutation::ground_set(self)
    }

    fn relabel(&self, sigma: &crate::label::Bijection) -> Result<Self> {
        Permutation::relabel(self, sigma)
    }
}

// conversions between native presentations and monomials

pub fn partition_to_monomial(p: &SetPartition) -> Monomial<EStar> {
    Monomial::new(p.blocks().iter().map(|b| EStar(b.clone()))).expect("blocks are disjoint")
}

pub fn monomial_to_partition(m: &Monomial<EStar>) -> SetPartition {
    m.partition().expect("monomial blocks form a partition")
}

pub fn lsp_to_monomial(p: &LinearSetPartition) -> Monomial<LinearOrder> {
    Monomial::new(p.chains().to_vec()).expect("chains are disjoint")
}

pub fn monomial_to_lsp(m: &Monomial<LinearOrder>) -> LinearSetPartition {
    LinearSetPartition::new(m.terms().cloned()).expect("monomial chains form a partition")
}

pub fn perm_to_monomial(f: &Permutation) -> Monomial<Cycle> {
    Monomial::new(f.cycles().to_vec()).expect("cycles are disjoint")
}

pub fn monomial_to_perm(m: &Monomial<Cycle>) -> Permutation {
    Permutation::new(m.terms().cloned()).expect("monomial cycles are disjoint")
}

pub fn finset_to_point_monomial(s: &FinSet) -> Monomial<Star> {
    Monomial::new(s.iter().map(Star)).expect("singletons are disjoint")
}

pub fn point_monomial_to_finset(m: &Monomial<Star>) -> FinSet {
    FinSet::new(m.terms().map(|t| t.0))
}

/// Square composition on set partitions: replace the block containing `s`
/// by that block with `s` swapped for the whole right-hand ground set.
pub fn pi_square(pi: &SetPartition, s: Label, rho: &SetPartition) -> Result<SetPartition> {
    let got = square_compose(
        &com_plus(),
        &concat_product_e(),
        &partition_to_monomial(pi),
        s,
        &partition_to_monomial(rho),
    )?;
    let (m, _) = got.iter().next().ok_or(Error::EmptyGround)?;
    debug_assert_eq!(got.len(), 1);
    Ok(monomial_to_partition(m))
}

/// Nested pre-Lie composition on set partitions: one summand per right-hand
/// block.
pub fn pi_npl(pi: &SetPartition, s: Label, rho: &SetPartition) -> Result<LinComb<SetPartition>> {
    let got = npl_compose(&com_plus(), &partition_to_monomial(pi), s, &partition_to_monomial(rho))?;
    Ok(got.map_terms(monomial_to_partition))
}

/// Square composition on linear set partitions: splice each shuffle of the
/// right side into the chain containing `s`.
pub fn arrowpi_square(
    pi: &LinearSetPartition,
    s: Label,
    tau: &LinearSetPartition,
) -> Result<LinComb<LinearSetPartition>> {
    let got = square_compose(
        &as_plus(),
        &shuffle_product_l(),
        &lsp_to_monomial(pi),
        s,
        &lsp_to_monomial(tau),
    )?;
    Ok(got.map_terms(monomial_to_lsp))
}

/// Nested pre-Lie composition on linear set partitions.
pub fn arrowpi_npl(
    pi: &LinearSetPartition,
    s: Label,
    tau: &LinearSetPartition,
) -> Result<LinComb<LinearSetPartition>> {
    let got = npl_compose(&as_plus(), &lsp_to_monomial(pi), s, &lsp_to_monomial(tau))?;
    Ok(got.map_terms(monomial_to_lsp))
}

/// The global composition on linear set partitions: `tau` is a linear set
/// partition of the blocks of `pi` (chains of blocks, outermost first), and
/// `rho` assigns a linear set partition to each block of `pi`. Each block
/// contributes one shuffle of its chains, and the chains of `tau`
/// concatenate the chosen shuffles.
pub fn arrowpi_global(
    pi: &SetPartition,
    tau: &[Vec<FinSet>],
    rho: &[(FinSet, LinearSetPartition)],
) -> Result<LinComb<LinearSetPartition>> {
    // validate the shapes and assemble the nested element over chains
    let tau_groups: Vec<Vec<FinSet>> = tau.to_vec();
    let tau_partition = pi.induced(&tau_groups)?;
    let mut inner_chains: Vec<LinearOrder> = Vec::new();
    let mut rho_blocks: Vec<FinSet> = Vec::new();
    for (block, lsp) in rho {
        if !pi.blocks().contains(block) {
            return Err(Error::NotABlockPartition(pi.to_string(), block.to_string()));
        }
        if &lsp.ground_set() != block {
            return Err(Error::GroundSetMismatch(
                lsp.ground_set().to_string(),
                block.to_string(),
            ));
        }
        rho_blocks.extend(lsp.chains().iter().map(|c| c.ground_set()));
        inner_chains.extend(lsp.chains().iter().cloned());
    }
    if rho.len() != pi.len() {
        return Err(Error::MalformedNesting("one inner element per block is required".into()));
    }
    let rho_partition = SetPartition::new(rho_blocks)?;
    // outer terms: each tau-chain becomes a word in the block representatives
    let outer: Vec<LinearOrder> = tau
        .iter()
        .map(|chain| LinearOrder::new(chain.iter().map(crate::freecomm::block_rep)))
        .collect::<Result<Vec<_>>>()?;
    let nested = NestedElement::new(tau_partition, pi.clone(), rho_partition, outer, inner_chains)?;
    let got = operadic_global(&as_plus(), &shuffle_product_l(), &nested)?;
    Ok(got.map_terms(monomial_to_lsp))
}

/// Nested pre-Lie composition on cycles.
pub fn cycle_npl(c: &Cycle, s: Label, d: &Cycle) -> Result<LinComb<Cycle>> {
    crate::species::Structure::compose(&cycles_npl(), c, s, d)
}

/// Nested pre-Lie composition on permutations: sum over the cycles of the
/// right-hand permutation, composing each into the cycle containing `s`.
pub fn perm_npl(f: &Permutation, s: Label, g: &Permutation) -> Result<LinComb<Permutation>> {
    let got = npl_compose(&cycles_npl(), &perm_to_monomial(f), s, &perm_to_monomial(g))?;
    Ok(got.map_terms(monomial_to_perm))
}

/// Nested pre-Lie composition on the exponential structure (sets).
pub fn exp_npl(s_term: &FinSet, s: Label, t_term: &FinSet) -> Result<LinComb<FinSet>> {
    let got = npl_compose(
        &identity_operad(),
        &finset_to_point_monomial(s_term),
        s,
        &finset_to_point_monomial(t_term),
    )?;
    Ok(got.map_terms(point_monomial_to_finset))
}

impl Term for FinSet {
    fn ground_set(&self) -> FinSet {
        self.clone()
    }

    fn relabel(&self, sigma: &crate::label::Bijection) -> Result<Self> {
        sigma.apply_set(self)
    }
}

// ready-made structure values for the registry and the axiom engine

pub fn pi_square_structure() -> SquareStructure<ComPlus, ConcatE> {
    SquareStructure::new(com_plus(), concat_product_e())
}

pub fn pi_npl_structure() -> NplFreeStructure<ComPlus> {
    NplFreeStructure::new(com_plus())
}

pub fn arrowpi_square_structure() -> SquareStructure<AsPlus, ShuffleL> {
    SquareStructure::new(as_plus(), shuffle_product_l())
}

pub fn arrowpi_npl_structure() -> NplFreeStructure<AsPlus> {
    NplFreeStructure::new(as_plus())
}

pub fn exp_npl_structure() -> NplFreeStructure<IdentityOperad> {
    NplFreeStructure::new(identity_operad())
}

pub fn perm_npl_structure() -> NplFreeStructure<CyclesNpl> {
    NplFreeStructure::new(cycles_npl())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn set(v: &[u32]) -> FinSet {
        FinSet::from_u32s(v.iter().copied())
    }

    fn part(blocks: &[&[u32]]) -> SetPartition {
        SetPartition::new(blocks.iter().map(|b| set(b))).unwrap()
    }

    fn lsp(chains: &[&[u32]]) -> LinearSetPartition {
        LinearSetPartition::new(
            chains.iter().map(|c| LinearOrder::from_u32s(c.iter().copied()).unwrap()),
        )
        .unwrap()
    }

    fn cyc(v: &[u32]) -> Cycle {
        Cycle::from_u32s(v.iter().copied()).unwrap()
    }

    fn perm(cycles: &[&[u32]]) -> Permutation {
        Permutation::new(cycles.iter().map(|c| cyc(c))).unwrap()
    }

    #[test]
    fn pi_square_examples() {
        assert_eq!(
            pi_square(&part(&[&[1, 2], &[3]]), Label(1), &part(&[&[4], &[5]])).unwrap(),
            part(&[&[2, 4, 5], &[3]])
        );
        assert_eq!(
            pi_square(&part(&[&[1]]), Label(1), &part(&[&[2, 3]])).unwrap(),
            part(&[&[2, 3]])
        );
        assert_eq!(
            pi_square(&part(&[&[1, 2, 3]]), Label(2), &part(&[&[4]])).unwrap(),
            part(&[&[1, 3, 4]])
        );
    }

    #[test]
    fn pi_npl_examples() {
        let got = pi_npl(&part(&[&[1, 2], &[3]]), Label(1), &part(&[&[4], &[5]])).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(part(&[&[2, 4], &[3], &[5]]), rat_int(1));
        expect.add_term(part(&[&[2, 5], &[3], &[4]]), rat_int(1));
        assert_eq!(got, expect);

        // single-block right side equals the square composition
        let single = part(&[&[4, 5]]);
        assert_eq!(
            pi_npl(&part(&[&[1, 2], &[3]]), Label(1), &single).unwrap(),
            LinComb::single(pi_square(&part(&[&[1, 2], &[3]]), Label(1), &single).unwrap())
        );

        // one-block left side against all-singleton right side: one merge
        // per right-hand point
        let got = pi_npl(&part(&[&[1, 2]]), Label(1), &part(&[&[3], &[4]])).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(part(&[&[2, 3], &[4]]), rat_int(1));
        expect.add_term(part(&[&[2, 4], &[3]]), rat_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn arrowpi_npl_example() {
        let got = arrowpi_npl(&lsp(&[&[1, 2]]), Label(2), &lsp(&[&[3], &[4, 5]])).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(lsp(&[&[1, 3], &[4, 5]]), rat_int(1));
        expect.add_term(lsp(&[&[1, 4, 5], &[3]]), rat_int(1));
        assert_eq!(got, expect);

        // single chain on the right reduces to a splice
        let got = arrowpi_npl(&lsp(&[&[1, 2]]), Label(1), &lsp(&[&[3, 4]])).unwrap();
        assert_eq!(got, LinComb::single(lsp(&[&[3, 4, 2]])));
    }

    #[test]
    fn cycle_npl_examples() {
        let got = cycle_npl(&cyc(&[1, 2]), Label(1), &cyc(&[3, 4])).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(cyc(&[3, 4, 2]), rat_int(1));
        expect.add_term(cyc(&[4, 3, 2]), rat_int(1));
        assert_eq!(got, expect);

        assert_eq!(
            cycle_npl(&cyc(&[1, 2]), Label(1), &cyc(&[3])).unwrap(),
            LinComb::single(cyc(&[3, 2]))
        );

        let got = cycle_npl(&cyc(&[1]), Label(1), &cyc(&[2, 3])).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(cyc(&[2, 3]), rat_int(1));
        expect.add_term(cyc(&[3, 2]), rat_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn cycle_npl_defect_matches_double_sum() {
        // audited instance of the nested pre-Lie defect: it equals the
        // double sum over r in R and a proper split point m of cycles
        //   ( c(s) … c^{|S|-1}(s) r e(r) … e^m(r) d(t) … d^{|T|-1}(t)
        //     e^{m+1}(r) … e^{|R|-1}(r) ),
        // |R|(|R|-1) terms in all; the sum is symmetric in (c,s) <-> (d,t)
        // via (r, m) -> (e^{m+1}(r), |R|-2-m)
        use crate::axioms::a2_defect;
        use crate::kernel::cycles_npl;
        let c = cyc(&[1, 2]);
        let d = cyc(&[3, 4]);
        let e = cyc(&[5, 6, 7]);
        let s = Label(1);
        let t = Label(3);
        let defect = a2_defect(&cycles_npl(), &c, s, &d, t, &e).unwrap();

        let mut expect = LinComb::zero();
        let r_ground = e.ground_set();
        let n_r = r_ground.len();
        for r in r_ground.iter() {
            let e_word = e.order_from(r).unwrap();
            for m in 0..n_r - 1 {
                let mut word: Vec<Label> = Vec::new();
                word.extend(&c.order_from(s).unwrap().word()[1..]);
                word.extend(&e_word.word()[..=m]);
                word.extend(&d.order_from(t).unwrap().word()[1..]);
                word.extend(&e_word.word()[m + 1..]);
                expect.add_term(Cycle::new(word).unwrap(), rat_int(1));
            }
        }
        assert_eq!(defect.len(), n_r * (n_r - 1));
        assert_eq!(defect, expect);

        // the mirrored defect is identical, as the symmetry demands
        let mirrored = a2_defect(&cycles_npl(), &d, t, &c, s, &e).unwrap();
        assert_eq!(defect, mirrored);
    }

    #[test]
    fn perm_npl_examples() {
        let got = perm_npl(&perm(&[&[1, 2]]), Label(1), &perm(&[&[3], &[4]])).unwrap();
        let mut expect = LinComb::zero();
        expect.add_term(perm(&[&[3, 2], &[4]]), rat_int(1));
        expect.add_term(perm(&[&[4, 2], &[3]]), rat_int(1));
        assert_eq!(got, expect);

        // single cycle on the right gives a single product term
        let got = perm_npl(&perm(&[&[1, 2]]), Label(2), &perm(&[&[3]])).unwrap();
        assert_eq!(got, LinComb::single(perm(&[&[1, 3]])));

        // rotations merge: both summands are the same permutation
        let got = perm_npl(&perm(&[&[1], &[2]]), Label(1), &perm(&[&[3, 4]])).unwrap();
        assert_eq!(got, LinComb::with_coeff(perm(&[&[3, 4], &[2]]), rat_int(2)));
    }

    #[test]
    fn exp_npl_counts_right_side() {
        let got = exp_npl(&set(&[1, 2]), Label(1), &set(&[3, 4, 5])).unwrap();
        assert_eq!(got, LinComb::with_coeff(set(&[2, 3, 4, 5]), rat_int(3)));
    }

    #[test]
    fn arrowpi_global_twelve_terms() {
        // the worked two-level composition on nine points
        let pi = part(&[&[1, 2, 3, 4], &[5, 6], &[7, 8, 9]]);
        let tau = vec![
            vec![set(&[1, 2, 3, 4])],
            vec![set(&[7, 8, 9]), set(&[5, 6])],
        ];
        let rho = vec![
            (set(&[1, 2, 3, 4]), lsp(&[&[3, 4, 2], &[1]])),
            (set(&[5, 6]), lsp(&[&[6, 5]])),
            (set(&[7, 8, 9]), lsp(&[&[7, 9], &[8]])),
        ];
        let got = arrowpi_global(&pi, &tau, &rho).unwrap();
        assert_eq!(got.len(), 12);
        let first_chains: [&[u32]; 2] = [&[3, 4, 2, 1], &[7, 9, 8, 6, 5]];
        assert_eq!(got.coeff(&lsp(&first_chains)), rat_int(1));
        let heads: [&[u32]; 4] = [&[3, 4, 2, 1], &[3, 4, 1, 2], &[3, 1, 4, 2], &[1, 3, 4, 2]];
        let tails: [&[u32]; 3] = [&[7, 9, 8, 6, 5], &[7, 8, 9, 6, 5], &[8, 7, 9, 6, 5]];
        for h in heads {
            for t in tails {
                assert_eq!(got.coeff(&lsp(&[h, t])), rat_int(1), "missing {{{h:?}, {t:?}}}");
            }
        }
    }

    #[test]
    fn arrowpi_global_trivial_shapes() {
        // all blocks singleton chains, trivial grouping: identity reassembly
        let pi = part(&[&[1], &[2]]);
        let tau = vec![vec![set(&[1])], vec![set(&[2])]];
        let rho = vec![(set(&[1]), lsp(&[&[1]])), (set(&[2]), lsp(&[&[2]]))];
        let got = arrowpi_global(&pi, &tau, &rho).unwrap();
        assert_eq!(got, LinComb::single(lsp(&[&[1], &[2]])));

        // one block whose inner element is a single chain: unchanged
        let pi = part(&[&[1, 2, 3]]);
        let tau = vec![vec![set(&[1, 2, 3])]];
        let rho = vec![(set(&[1, 2, 3]), lsp(&[&[3, 1, 2]]))];
        let got = arrowpi_global(&pi, &tau, &rho).unwrap();
        assert_eq!(got, LinComb::single(lsp(&[&[3, 1, 2]])));
    }

    #[test]
    fn arrowpi_global_term_count_is_product_of_shuffle_counts() {
        let pi = part(&[&[1, 2, 3, 4], &[5, 6], &[7, 8, 9]]);
        let tau = vec![
            vec![set(&[1, 2, 3, 4])],
            vec![set(&[7, 8, 9]), set(&[5, 6])],
        ];
        let rho = vec![
            (set(&[1, 2, 3, 4]), lsp(&[&[3, 4, 2], &[1]])),
            (set(&[5, 6]), lsp(&[&[6, 5]])),
            (set(&[7, 8, 9]), lsp(&[&[7, 9], &[8]])),
        ];
        let got = arrowpi_global(&pi, &tau, &rho).unwrap();
        let expected: usize = rho
            .iter()
            .map(|(_, l)| {
                crate::freecomm::mu_fold(&shuffle_product_l(), &lsp_to_monomial(l)).unwrap().len()
            })
            .product();
        assert_eq!(got.len(), expected);
        assert!(got.iter().all(|(_, c)| c == &rat_int(1)));
    }
}
