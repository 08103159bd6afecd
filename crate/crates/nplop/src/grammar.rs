//! One JSON document grammar for every species term, tagged by structure
//! name. Sets serialize as sorted arrays, partitions as arrays of arrays,
//! linear orders as arrays with significant order, cycles as min-rotated
//! arrays, and coefficients as `"p/q"` strings (just `"p"` when `q` is one).

use anyhow::{anyhow, bail, Context, Result};
use npl_operads::cycle::{Cycle, Permutation};
use npl_operads::label::{FinSet, Label};
use npl_operads::lincomb::LinComb;
use npl_operads::linord::{LinearOrder, LinearSetPartition};
use npl_operads::partition::SetPartition;
use npl_operads::polymap::{Poly, PolyMono, PolynomialMap};
use npl_operads::rational::{format_rational, parse_rational, Rational};
use serde_json::{json, Map, Value};

pub fn parse_label(v: &Value) -> Result<Label> {
    // integers, or strings that spell integers, act as label aliases
    match v {
        Value::Number(n) => {
            let u = n.as_u64().ok_or_else(|| anyhow!("label must be a nonnegative integer"))?;
            Ok(Label(u32::try_from(u).context("label out of range")?))
        }
        Value::String(s) => {
            let u: u32 = s.parse().map_err(|_| anyhow!("label alias {s:?} is not an integer"))?;
            Ok(Label(u))
        }
        other => bail!("expected a label, found {other}"),
    }
}

pub fn print_label(l: Label) -> Value {
    json!(l.0)
}

pub fn parse_set(v: &Value) -> Result<FinSet> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected a set (array of labels)"))?;
    let labels: Result<Vec<Label>> = arr.iter().map(parse_label).collect();
    let labels = labels?;
    let set = FinSet::new(labels.iter().copied());
    if set.len() != labels.len() {
        bail!("duplicate labels in set {v}");
    }
    Ok(set)
}

pub fn print_set(s: &FinSet) -> Value {
    Value::Array(s.iter().map(print_label).collect())
}

pub fn parse_order(v: &Value) -> Result<LinearOrder> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected a linear order (array of labels)"))?;
    let labels: Result<Vec<Label>> = arr.iter().map(parse_label).collect();
    Ok(LinearOrder::new(labels?)?)
}

pub fn print_order(o: &LinearOrder) -> Value {
    Value::Array(o.word().iter().map(|&l| print_label(l)).collect())
}

pub fn parse_partition(v: &Value) -> Result<SetPartition> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected a partition (array of blocks)"))?;
    let blocks: Result<Vec<FinSet>> = arr.iter().map(parse_set).collect();
    Ok(SetPartition::new(blocks?)?)
}

pub fn print_partition(p: &SetPartition) -> Value {
    Value::Array(p.blocks().iter().map(print_set).collect())
}

pub fn parse_lsp(v: &Value) -> Result<LinearSetPartition> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected a linear set partition (array of chains)"))?;
    let chains: Result<Vec<LinearOrder>> = arr.iter().map(parse_order).collect();
    Ok(LinearSetPartition::new(chains?)?)
}

pub fn print_lsp(p: &LinearSetPartition) -> Value {
    Value::Array(p.chains().iter().map(print_order).collect())
}

pub fn parse_cycle(v: &Value) -> Result<Cycle> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected a cycle (array of labels)"))?;
    let labels: Result<Vec<Label>> = arr.iter().map(parse_label).collect();
    Ok(Cycle::new(labels?)?)
}

pub fn print_cycle(c: &Cycle) -> Value {
    Value::Array(c.rotation().iter().map(|&l| print_label(l)).collect())
}

pub fn parse_permutation(v: &Value) -> Result<Permutation> {
    let arr = v.as_array().ok_or_else(|| anyhow!("expected a permutation (array of cycles)"))?;
    let cycles: Result<Vec<Cycle>> = arr.iter().map(parse_cycle).collect();
    Ok(Permutation::new(cycles?)?)
}

pub fn print_permutation(p: &Permutation) -> Value {
    Value::Array(p.cycles().iter().map(print_cycle).collect())
}

pub fn parse_coeff(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| anyhow!("coefficient must be integral or \"p/q\""))?;
            Ok(Rational::from_integer(i.into()))
        }
        other => bail!("expected a coefficient, found {other}"),
    }
}

pub fn print_coeff(c: &Rational) -> Value {
    json!(format_rational(c))
}

pub fn parse_polymap(v: &Value) -> Result<PolynomialMap> {
    let obj = v.as_object().ok_or_else(|| anyhow!("expected a polynomial map object"))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("polynomial map needs a positive \"dim\""))? as usize;
    let slots = parse_set(obj.get("slots").ok_or_else(|| anyhow!("polynomial map needs \"slots\""))?)?;
    let comps_v = obj
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("polynomial map needs \"components\""))?;
    let mut components = Vec::with_capacity(comps_v.len());
    for comp in comps_v {
        let terms = comp.as_array().ok_or_else(|| anyhow!("component must be an array of terms"))?;
        let mut poly = Poly::zero();
        for term in terms {
            let term = term.as_object().ok_or_else(|| anyhow!("polynomial term must be an object"))?;
            let coeff = parse_coeff(
                term.get("coeff").ok_or_else(|| anyhow!("polynomial term needs \"coeff\""))?,
            )?;
            let mut exps = Vec::new();
            if let Some(e) = term.get("exponents") {
                let e = e.as_object().ok_or_else(|| anyhow!("\"exponents\" must be an object"))?;
                for (key, power) in e {
                    let (slot, coord) = key
                        .split_once('.')
                        .ok_or_else(|| anyhow!("exponent key {key:?} is not \"slot.coord\""))?;
                    let slot: u32 = slot.parse().context("bad slot in exponent key")?;
                    let coord: usize = coord.parse().context("bad coordinate in exponent key")?;
                    let power =
                        power.as_u64().ok_or_else(|| anyhow!("exponent must be a nonnegative integer"))?;
                    exps.push(((Label(slot), coord), power as u32));
                }
            }
            poly.add_term(PolyMono::from_exponents(exps), coeff);
        }
        components.push(poly);
    }
    Ok(PolynomialMap::new(slots, dim, components)?)
}

pub fn print_polymap(m: &PolynomialMap) -> Value {
    let comps: Vec<Value> = m
        .components()
        .iter()
        .map(|p| {
            Value::Array(
                p.terms()
                    .map(|(mono, c)| {
                        let mut exps = Map::new();
                        for ((slot, coord), e) in mono.exponents() {
                            exps.insert(format!("{}.{}", slot.0, coord), json!(e));
                        }
                        let mut term = Map::new();
                        term.insert("coeff".into(), print_coeff(c));
                        term.insert("exponents".into(), Value::Object(exps));
                        Value::Object(term)
                    })
                    .collect(),
            )
        })
        .collect();
    json!({"dim": m.dim(), "slots": print_set(m.slots()), "components": comps})
}

/// Renders a combination with a term printer; terms are already in
/// canonical order inside the combination.
pub fn print_lincomb<T: Ord + Clone>(
    comb: &LinComb<T>,
    print_term: impl Fn(&T) -> Value,
) -> Value {
    let terms: Vec<Value> = comb
        .iter()
        .map(|(t, c)| json!({"coeff": print_coeff(c), "term": print_term(t)}))
        .collect();
    json!({ "terms": terms })
}
