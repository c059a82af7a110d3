//! `ncp`, `ncp product` and `goursat`.

use crate::io::{self, CliError, CliResult, Output};
use crate::{NcpArgs, NcpCmd};
use fieldtower::groups::{goursat_check, has_ncp, product_ncp_test, FiniteGroup};
use serde_json::{json, Value};

pub fn ncp(a: NcpArgs) -> CliResult<Output> {
    match a.sub {
        None => {
            let spec = a.group.ok_or_else(|| CliError::usage("ncp needs --group"))?;
            let g = FiniteGroup::from_spec(&spec)?;
            let mut v = has_ncp(&g)?.to_json(&g);
            v["group"] = json!(spec);
            v["order"] = json!(g.order());
            Ok(Output::ok(v))
        }
        Some(NcpCmd::Product { g, h }) => {
            let gg = FiniteGroup::from_spec(&g)?;
            let hh = FiniteGroup::from_spec(&h)?;
            let gh = FiniteGroup::direct_product(&gg, &hh)?;
            let r = product_ncp_test(&gg, &hh)?;
            Ok(Output::ok(json!({
                "G": { "group": g, "verdict": r.g.to_json(&gg) },
                "H": { "group": h, "verdict": r.h.to_json(&hh) },
                "product": { "order": gh.order(), "verdict": r.product.to_json(&gh) },
                "violation": r.violation(),
            })))
        }
    }
}

fn element(g: &FiniteGroup, v: &Value) -> CliResult<usize> {
    match v {
        Value::String(s) => g
            .element(s)
            .ok_or_else(|| CliError::usage(format!("unknown group element {s}"))),
        Value::Number(n) => n
            .as_u64()
            .map(|n| n as usize)
            .filter(|&n| n < g.order())
            .ok_or_else(|| CliError::usage(format!("element index {n} out of range"))),
        other => Err(CliError::usage(format!("invalid group element {other}"))),
    }
}

pub fn goursat(g1: &str, g2: &str, subgroup: &str) -> CliResult<Output> {
    let a = FiniteGroup::from_spec(g1)?;
    let b = FiniteGroup::from_spec(g2)?;
    let pairs: Vec<(Value, Value)> = io::load_json(subgroup, "subgroup")?;
    let h = pairs
        .iter()
        .map(|(x, y)| Ok(FiniteGroup::pair_index(b.order(), element(&a, x)?, element(&b, y)?)))
        .collect::<CliResult<Vec<_>>>()?;
    let r = goursat_check(&a, &b, &h)?;
    Ok(Output::ok(r.to_json(&a, &b)))
}
