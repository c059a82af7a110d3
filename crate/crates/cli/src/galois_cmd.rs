//! `galois`, `galois chain`, `galois fixed` and `galois incompatible`.

use crate::io::{self, CliError, CliResult, Output};
use crate::{GaloisArgs, GaloisCmd};
use fieldtower::galois::{self, GaloisData};
use fieldtower::groups::FiniteGroup;
use fieldtower::tower::Tower;
use serde_json::{json, Value};

fn actions(g: &GaloisData) -> Value {
    let t = g.tower();
    let group = g.group();
    let entries: Vec<Value> = (0..group.order())
        .map(|i| {
            let images: serde_json::Map<String, Value> = t
                .generators()
                .iter()
                .zip(g.action(i))
                .skip(g.base_level())
                .map(|(gen, x)| (gen.name().to_string(), json!(t.format_element(x))))
                .collect();
            json!({ "element": group.label(i), "images": images })
        })
        .collect();
    Value::Array(entries)
}

pub fn galois_json(g: &GaloisData) -> Value {
    let t = g.tower();
    let group = g.group();
    let base = fieldtower::embed::prefix_tower(t, g.base_level());
    let mut v = json!({
        "field": t.describe(),
        "base": base.describe(),
        "order": group.order(),
        "labels": (0..group.order()).map(|i| group.label(i)).collect::<Vec<_>>(),
        "table": group.table(),
        "action": actions(g),
        "primitive": t.format_element(g.primitive()),
        "minpoly": t.format_poly(g.minpoly()),
        "abelian": group.is_abelian(),
        "exponent": group.exponent(),
    });
    if group.order() <= 8 {
        v["isomorphism_type"] = json!(group.isomorphism_label());
    }
    v
}

fn subgroup_labels(group: &FiniteGroup, arg: &str) -> CliResult<Vec<usize>> {
    let labels: Vec<Value> = io::load_json(arg, "subgroup")?;
    let mut out = labels
        .iter()
        .map(|l| match l {
            Value::String(s) => group
                .element(s)
                .ok_or_else(|| CliError::usage(format!("unknown group element {s}"))),
            Value::Number(n) => n
                .as_u64()
                .map(|n| n as usize)
                .filter(|&n| n < group.order())
                .ok_or_else(|| CliError::usage(format!("element index {n} out of range"))),
            other => Err(CliError::usage(format!("invalid group element {other}"))),
        })
        .collect::<CliResult<Vec<_>>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn elements(t: &Tower, arg: &str) -> CliResult<Vec<fieldtower::tower::TowerElement>> {
    io::load_elements(arg, t, None)
}

pub fn run(a: GaloisArgs) -> CliResult<Output> {
    match a.sub {
        None => {
            let tower = a.tower.ok_or_else(|| CliError::usage("galois needs --tower"))?;
            let t = io::load_tower(&tower)?;
            if a.base_level > t.num_generators() {
                return Err(CliError::usage(format!(
                    "base level {} exceeds the {} generators of the tower",
                    a.base_level,
                    t.num_generators()
                )));
            }
            let g = galois::galois_group(&t, a.base_level)?;
            Ok(Output::ok(galois_json(&g)))
        }
        Some(GaloisCmd::Chain { tower, adjoin }) => {
            let t = io::load_tower(&tower)?;
            let f = t.parse_poly(&adjoin)?;
            let chain = galois::normal_chain(&t, &f)?;
            let e = chain.tower();
            let group = chain.galois.group();
            let mut fields = vec![json!({
                "degree": t.degree(),
                "field": t.describe(),
            })];
            for (y, m) in &chain.fields {
                fields.push(json!({
                    "degree": m.degree().unwrap_or(0),
                    "primitive": e.format_element(y),
                    "minpoly": e.format_poly(m),
                }));
            }
            Ok(Output::ok(json!({
                "closure": e.descriptor(),
                "field": e.describe(),
                "root": e.format_element(&chain.root),
                "group_order": group.order(),
                "subgroups": chain.subgroups.iter().map(|h| group.format_set(h)).collect::<Vec<_>>(),
                "fields": fields,
            })))
        }
        Some(GaloisCmd::Fixed { tower, subgroup }) => {
            let t = io::load_tower(&tower)?;
            let g = galois::galois_group(&t, 0)?;
            let h = subgroup_labels(g.group(), &subgroup)?;
            let gens = g.fixed_field(&h)?;
            let dim = t.subfield(&gens).dim();
            Ok(Output::ok(json!({
                "subgroup": g.group().format_set(&h),
                "generators": io::format_elements(&t, &gens),
                "degree": dim,
                "normal": g.group().is_normal(&h),
            })))
        }
        Some(GaloisCmd::Incompatible { tower, k1, sigma, k2, tau }) => {
            let t = io::load_tower(&tower)?;
            let (k1, sigma, k2, tau) = (
                elements(&t, &k1)?,
                elements(&t, &sigma)?,
                elements(&t, &k2)?,
                elements(&t, &tau)?,
            );
            let s = galois::incompatible_extension(&t, &k1, &sigma, &k2, &tau)?;
            let group = s.galois.group();
            let mut v = json!({
                "found": s.alpha.is_some(),
                "M": group.format_set(&s.m),
                "N": group.format_set(&s.n),
                "NM": group.format_set(&s.nm),
                "g1": group.label(s.g1),
                "g2": group.label(s.g2),
            });
            match s.alpha_images() {
                Some(images) => {
                    v["alpha"] = json!(io::format_elements(&t, images));
                    v["alpha_element"] = json!(group.label(s.alpha.expect("images come from alpha")));
                    Ok(Output::ok(v))
                }
                None => Ok(Output::failed(v)),
            }
        }
    }
}
