//! `difference check`, `difference embeds` and `difference extend`.

use crate::io::{self, CliError, CliResult, Output};
use crate::session;
use crate::DiffCmd;
use fieldtower::difference::{check_automorphism, dcf_embedding_criterion, difference_embeds, DifferenceField};
use serde_json::{json, Value};

fn load_df(arg: &str) -> CliResult<DifferenceField> {
    let d = io::load_json(arg, "difference field")?;
    Ok(DifferenceField::from_descriptor(&d)?)
}

pub fn run(cmd: DiffCmd) -> CliResult<Output> {
    match cmd {
        DiffCmd::Check { tower, sigma } => {
            let t = io::load_tower(&tower)?;
            let s = io::load_elements(&sigma, &t, Some(&t))?;
            let ok = check_automorphism(&t, &s)?;
            Ok(Output::ok(json!({
                "field": t.describe(),
                "sigma": io::format_elements(&t, &s),
                "automorphism": ok,
            })))
        }
        DiffCmd::Embeds { sub, sup } => {
            let a = load_df(&sub)?;
            let b = load_df(&sup)?;
            let found = difference_embeds(&a, &b)?;
            let iota = found.map(|xs| {
                a.tower()
                    .generators()
                    .iter()
                    .zip(&xs)
                    .map(|(g, x)| (g.name().to_string(), json!(b.tower().format_element(x))))
                    .collect::<serde_json::Map<String, Value>>()
            });
            Ok(Output::ok(json!({
                "embeds": iota.is_some(),
                "iota": iota,
            })))
        }
        DiffCmd::Extend { df, session, adjoin, query } => {
            if query.is_empty() && adjoin.is_empty() {
                return Err(CliError::usage("difference extend needs --adjoin or --query"));
            }
            let d = load_df(&df)?;
            let closure = session::read(&session)?.closure()?;
            let mut tau = dcf_embedding_criterion(&d, closure)?;
            let mut adjoined = Vec::new();
            for p in &adjoin {
                let f = tau.source().parse_poly(p)?;
                let r = tau.source_mut().adjoin_root(&f)?;
                adjoined.push(tau.source().tower().format_element(&r));
            }
            let mut answers = Vec::new();
            for q in &query {
                let x = tau.source().parse_element(q)?;
                let y = tau.image(&x)?;
                let t = tau.source().tower();
                answers.push(json!({ "query": t.format_element(&x), "image": t.format_element(&y) }));
            }
            Ok(Output::ok(json!({
                "field": tau.source().tower().describe(),
                "adjoined": adjoined,
                "queries": answers,
                "log": serde_json::to_value(tau.log()).expect("assignments serialize"),
            })))
        }
    }
}
