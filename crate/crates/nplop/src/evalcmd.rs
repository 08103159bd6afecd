//! The `eval` command: parse the input document against the named structure,
//! apply the named operation, and print the exact result with terms in
//! canonical order.

use crate::grammar::*;
use anyhow::{anyhow, bail, Result};
use npl_operads::cycle::{cycle_cyc, cycle_lin};
use npl_operads::freecomm::{mu_fold, twisted_product};
use npl_operads::instances::{
    arrowpi_global, arrowpi_npl, arrowpi_square, cycle_npl, exp_npl, lsp_to_monomial,
    partition_to_monomial, perm_npl, pi_npl, pi_square,
};
use npl_operads::kernel::{
    as_plus, com_plus, concat_product_e, concat_product_l, identity_operad, shuffle_product_l,
    EStar, Star,
};
use npl_operads::label::{FinSet, Label};
use npl_operads::lincomb::LinComb;
use npl_operads::linord::{shuffles, LinearSetPartition};
use npl_operads::partition::SetPartition;
use npl_operads::polymap::{end_compose, npl_partial, prelie};
use npl_operads::rational::Rational;
use npl_operads::species::Structure;
use serde_json::{json, Value};
use std::collections::BTreeMap;

fn args_of(input: &Value, n: usize) -> Result<&[Value]> {
    let args = input
        .get("args")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("input document needs an \"args\" array"))?;
    if args.len() != n {
        bail!("operation takes {n} argument(s), found {}", args.len());
    }
    Ok(args)
}

fn need_at(at: Option<Label>) -> Result<Label> {
    at.ok_or_else(|| anyhow!("this operation needs a composition point: pass --at <label>"))
}

/// Evaluates one operation; returns the result document.
pub fn evaluate(structure: &str, op: &str, at: Option<Label>, input: &Value) -> Result<Value> {
    let result = match (structure, op) {
        // base compositions
        ("identity", "compose") => {
            let a = args_of(input, 2)?;
            let x = Star(parse_label(&a[0])?);
            let y = Star(parse_label(&a[1])?);
            let got = identity_operad().compose(&x, need_at(at)?, &y)?;
            print_lincomb(&got, |t| print_label(t.0))
        }
        ("com+", "compose") => {
            let a = args_of(input, 2)?;
            let got = com_plus().compose(
                &EStar(parse_set(&a[0])?),
                need_at(at)?,
                &EStar(parse_set(&a[1])?),
            )?;
            print_lincomb(&got, |t| print_set(&t.0))
        }
        ("as+", "compose") => {
            let a = args_of(input, 2)?;
            let got =
                as_plus().compose(&parse_order(&a[0])?, need_at(at)?, &parse_order(&a[1])?)?;
            print_lincomb(&got, print_order)
        }
        ("cycles", "compose" | "npl") => {
            let a = args_of(input, 2)?;
            let got = cycle_npl(&parse_cycle(&a[0])?, need_at(at)?, &parse_cycle(&a[1])?)?;
            print_lincomb(&got, print_cycle)
        }
        ("cycles", "lin") => {
            let a = args_of(input, 1)?;
            print_lincomb(&cycle_lin(&parse_cycle(&a[0])?), print_order)
        }
        ("cycles", "cyc") => {
            let a = args_of(input, 1)?;
            print_lincomb(&LinComb::single(cycle_cyc(&parse_order(&a[0])?)?), print_cycle)
        }

        // free structures
        ("exp", "npl") => {
            let a = args_of(input, 2)?;
            let got = exp_npl(&parse_set(&a[0])?, need_at(at)?, &parse_set(&a[1])?)?;
            print_lincomb(&got, print_set)
        }
        ("pi", "npl") => {
            let a = args_of(input, 2)?;
            let got = pi_npl(&parse_partition(&a[0])?, need_at(at)?, &parse_partition(&a[1])?)?;
            print_lincomb(&got, print_partition)
        }
        ("pi", "square") => {
            let a = args_of(input, 2)?;
            let got =
                pi_square(&parse_partition(&a[0])?, need_at(at)?, &parse_partition(&a[1])?)?;
            print_lincomb(&LinComb::single(got), print_partition)
        }
        ("pi", "mu") => {
            let a = args_of(input, 2)?;
            let x = LinComb::single(partition_to_monomial(&parse_partition(&a[0])?));
            let y = LinComb::single(partition_to_monomial(&parse_partition(&a[1])?));
            let got = twisted_product(&x, &y)?
                .map_terms(npl_operads::instances::monomial_to_partition);
            print_lincomb(&got, print_partition)
        }
        ("pi", "mu-fold") => {
            let a = args_of(input, 1)?;
            let m = partition_to_monomial(&parse_partition(&a[0])?);
            let got = mu_fold(&concat_product_e(), &m)?;
            print_lincomb(&got, |t| print_set(&t.0))
        }
        ("pi", "global") => pi_global(input)?,
        ("arrow-pi", "npl") => {
            let a = args_of(input, 2)?;
            let got = arrowpi_npl(&parse_lsp(&a[0])?, need_at(at)?, &parse_lsp(&a[1])?)?;
            print_lincomb(&got, print_lsp)
        }
        ("arrow-pi", "square") => {
            let a = args_of(input, 2)?;
            let got = arrowpi_square(&parse_lsp(&a[0])?, need_at(at)?, &parse_lsp(&a[1])?)?;
            print_lincomb(&got, print_lsp)
        }
        ("arrow-pi", "mu") => {
            let a = args_of(input, 2)?;
            let x = LinComb::single(lsp_to_monomial(&parse_lsp(&a[0])?));
            let y = LinComb::single(lsp_to_monomial(&parse_lsp(&a[1])?));
            let got =
                twisted_product(&x, &y)?.map_terms(npl_operads::instances::monomial_to_lsp);
            print_lincomb(&got, print_lsp)
        }
        ("arrow-pi", "mu-fold") => {
            let a = args_of(input, 1)?;
            let m = lsp_to_monomial(&parse_lsp(&a[0])?);
            let got = mu_fold(&shuffle_product_l(), &m)?;
            print_lincomb(&got, print_order)
        }
        ("arrow-pi", "global") => arrowpi_global_cmd(input)?,
        ("permutations", "npl") => {
            let a = args_of(input, 2)?;
            let got =
                perm_npl(&parse_permutation(&a[0])?, need_at(at)?, &parse_permutation(&a[1])?)?;
            print_lincomb(&got, print_permutation)
        }

        // twisted products on their own
        ("concat-e", "mu") => {
            let a = args_of(input, 2)?;
            let got = npl_operads::species::Product::mu(
                &concat_product_e(),
                &EStar(parse_set(&a[0])?),
                &EStar(parse_set(&a[1])?),
            )?;
            print_lincomb(&got, |t| print_set(&t.0))
        }
        ("shuffle-l", "mu") => {
            let a = args_of(input, 2)?;
            let got = npl_operads::species::Product::mu(
                &shuffle_product_l(),
                &parse_order(&a[0])?,
                &parse_order(&a[1])?,
            )?;
            print_lincomb(&got, print_order)
        }
        ("concat-l", "mu") => {
            let a = args_of(input, 2)?;
            let got = npl_operads::species::Product::mu(
                &concat_product_l(),
                &parse_order(&a[0])?,
                &parse_order(&a[1])?,
            )?;
            print_lincomb(&got, print_order)
        }

        // ground-floor set and lattice operations
        ("sets", "graft") => {
            let a = args_of(input, 2)?;
            let got = parse_set(&a[0])?.graft(need_at(at)?, &parse_set(&a[1])?)?;
            json!({"result": print_set(&got)})
        }
        ("sets", "shuffles") => {
            let a = args_of(input, 2)?;
            let got = shuffles(&parse_order(&a[0])?, &parse_order(&a[1])?)?;
            json!({"result": got.iter().map(print_order).collect::<Vec<_>>()})
        }
        ("sets", "restrict") => {
            let a = args_of(input, 2)?;
            let got = parse_order(&a[0])?.restrict(&parse_set(&a[1])?)?;
            json!({"result": print_order(&got)})
        }
        ("sets", "refines") => {
            let a = args_of(input, 2)?;
            let got = parse_partition(&a[0])?.refines(&parse_partition(&a[1])?)?;
            json!({ "result": got })
        }
        ("sets", "induced") => {
            let a = args_of(input, 2)?;
            let pi = parse_partition(&a[0])?;
            let tau = parse_block_groups(&a[1])?;
            json!({"result": print_partition(&pi.induced(&tau)?)})
        }
        ("sets", "surjection") => {
            let a = args_of(input, 2)?;
            let got = parse_partition(&a[0])?.canonical_surjection(&parse_partition(&a[1])?)?;
            json!({"result": got.iter().map(|(b, c)| json!([print_set(b), print_set(c)])).collect::<Vec<_>>()})
        }
        ("sets", "sections") => {
            let a = args_of(input, 2)?;
            let got = parse_partition(&a[0])?.sections(&parse_partition(&a[1])?)?;
            json!({"result": got
                .iter()
                .map(|sec| sec.iter().map(|(c, b)| json!([print_set(c), print_set(b)])).collect::<Vec<_>>())
                .collect::<Vec<_>>()})
        }

        // polynomial maps
        ("polymap", "prelie") => {
            let a = args_of(input, 2)?;
            let got = prelie(&parse_polymap(&a[0])?, &parse_polymap(&a[1])?)?;
            json!({"result": print_polymap(&got)})
        }
        ("polymap", "npl") => {
            let a = args_of(input, 2)?;
            let got = npl_partial(&parse_polymap(&a[0])?, need_at(at)?, &parse_polymap(&a[1])?)?;
            json!({"result": print_polymap(&got)})
        }
        ("polymap", "end-compose") => {
            let a = args_of(input, 2)?;
            let got = end_compose(&parse_polymap(&a[0])?, need_at(at)?, &parse_polymap(&a[1])?)?;
            json!({"result": print_polymap(&got)})
        }
        ("polymap", "partial-eval") => {
            let a = args_of(input, 1)?;
            let m = parse_polymap(&a[0])?;
            let fix = input
                .get("fix")
                .and_then(Value::as_object)
                .ok_or_else(|| anyhow!("partial-eval needs a \"fix\" object: slot -> vector"))?;
            let mut fixed: BTreeMap<Label, Vec<Rational>> = BTreeMap::new();
            for (slot, vector) in fix {
                let slot: u32 = slot.parse().map_err(|_| anyhow!("bad slot {slot:?}"))?;
                let vector = vector
                    .as_array()
                    .ok_or_else(|| anyhow!("fixed vector must be an array"))?
                    .iter()
                    .map(parse_coeff)
                    .collect::<Result<Vec<_>>>()?;
                fixed.insert(Label(slot), vector);
            }
            json!({"result": print_polymap(&m.partial_evaluate(&fixed)?)})
        }

        (s, o) => bail!("unknown structure/operation pair: {s} {o}"),
    };
    Ok(json!({"structure": structure, "op": op, "result": result}))
}

/// `tau` for the partition global composition: an array of groups of blocks.
fn parse_block_groups(v: &Value) -> Result<Vec<Vec<FinSet>>> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected an array of groups of blocks"))?;
    arr.iter()
        .map(|g| {
            g.as_array()
                .ok_or_else(|| anyhow!("each group must be an array of blocks"))?
                .iter()
                .map(parse_set)
                .collect()
        })
        .collect()
}

fn pi_global(input: &Value) -> Result<Value> {
    let pi = parse_partition(input.get("pi").ok_or_else(|| anyhow!("global needs \"pi\""))?)?;
    let tau = parse_block_groups(input.get("tau").ok_or_else(|| anyhow!("global needs \"tau\""))?)?;
    let rho_v = input
        .get("rho")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("global needs \"rho\": one inner partition per block, in canonical block order"))?;
    if rho_v.len() != pi.len() {
        bail!("\"rho\" must list one inner element per block of pi");
    }
    // assemble the nested element and run the fold-then-substitute global map
    let mut inner: Vec<EStar> = Vec::new();
    let mut rho_blocks: Vec<FinSet> = Vec::new();
    for (block, inner_v) in pi.blocks().iter().zip(rho_v) {
        let p = parse_partition(inner_v)?;
        if &p.ground_set() != block {
            bail!("inner partition {inner_v} is not a partition of the block {block}");
        }
        rho_blocks.extend(p.blocks().iter().cloned());
        inner.extend(p.blocks().iter().map(|b| EStar(b.clone())));
    }
    let tau_partition = pi.induced(&tau)?;
    let outer: Vec<EStar> = tau
        .iter()
        .map(|group| {
            EStar(FinSet::new(
                group.iter().map(|b| npl_operads::freecomm::block_rep(b)),
            ))
        })
        .collect();
    let nested = npl_operads::freecomm::NestedElement::new(
        tau_partition,
        pi.clone(),
        SetPartition::new(rho_blocks)?,
        outer,
        inner,
    )?;
    let got = npl_operads::freecomm::operadic_global(&com_plus(), &concat_product_e(), &nested)?;
    let got = got.map_terms(npl_operads::instances::monomial_to_partition);
    Ok(print_lincomb(&got, print_partition))
}

fn arrowpi_global_cmd(input: &Value) -> Result<Value> {
    let pi = parse_partition(input.get("pi").ok_or_else(|| anyhow!("global needs \"pi\""))?)?;
    let tau_v = input
        .get("tau")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("global needs \"tau\": an array of chains of blocks"))?;
    let tau: Vec<Vec<FinSet>> = tau_v
        .iter()
        .map(|chain| {
            chain
                .as_array()
                .ok_or_else(|| anyhow!("each chain of tau must be an array of blocks"))?
                .iter()
                .map(parse_set)
                .collect()
        })
        .collect::<Result<_>>()?;
    let rho_v = input
        .get("rho")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("global needs \"rho\": one linear set partition per block, in canonical block order"))?;
    if rho_v.len() != pi.len() {
        bail!("\"rho\" must list one inner element per block of pi");
    }
    let rho: Vec<(FinSet, LinearSetPartition)> = pi
        .blocks()
        .iter()
        .zip(rho_v)
        .map(|(b, v)| parse_lsp(v).map(|l| (b.clone(), l)))
        .collect::<Result<_>>()?;
    let got = arrowpi_global(&pi, &tau, &rho)?;
    Ok(print_lincomb(&got, print_lsp))
}
