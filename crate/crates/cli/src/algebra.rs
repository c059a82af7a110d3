//! `factor`, `closure` and `extend`.

use crate::io::{self, CliError, CliResult, Output};
use crate::session::{self, entry_json, LockedSession, Op, Session};
use crate::{ClosureCmd, ExtendArgs};
use fieldtower::arith::BaseField;
use fieldtower::closure::Closure;
use fieldtower::embed::{Assignment, LazyFieldMap};
use fieldtower::factor::{self, Caps};
use serde_json::{json, Value};

pub fn factor(field: &str, poly: &str) -> CliResult<Output> {
    let t = io::load_tower(field)?;
    let f = t.parse_poly(poly)?;
    let fac = factor::factor_with(&f, &t, &Caps::from_env())?;
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .map(|(g, m)| json!({ "poly": t.format_poly(g), "mult": m }))
        .collect();
    Ok(Output::ok(json!({
        "field": t.describe(),
        "unit": t.format_element(&fac.unit),
        "factors": factors,
    })))
}

pub fn parse_base(s: &str) -> CliResult<BaseField> {
    let s = s.trim();
    let num = |rest: &str| {
        rest.parse::<u64>()
            .map_err(|_| CliError::usage(format!("invalid characteristic in base {s:?}")))
    };
    let base = if s == "Q" {
        BaseField::rationals()
    } else if let Some(p) = s.strip_prefix("FpT:") {
        BaseField::rational_functions(num(p)?)?
    } else if let Some(p) = s.strip_prefix("Fp:") {
        BaseField::prime(num(p)?)?
    } else {
        return Err(CliError::usage(format!("unknown base {s:?}; expected Q, Fp:<p> or FpT:<p>")));
    };
    Ok(base)
}

fn summary(c: &Closure) -> Value {
    json!({
        "field": c.tower().describe(),
        "degree": c.degree(),
    })
}

fn with_summary(mut v: Value, c: &Closure) -> Value {
    if let (Value::Object(m), Value::Object(s)) = (&mut v, summary(c)) {
        m.extend(s);
    }
    v
}

pub fn closure(cmd: ClosureCmd) -> CliResult<Output> {
    match cmd {
        ClosureCmd::Init { session, base, tower } => {
            let s = match (base, tower) {
                (_, Some(t)) => Session::new(io::load_tower(&t)?),
                (Some(b), None) => Session::over(parse_base(&b)?),
                (None, None) => Session::over(BaseField::rationals()),
            };
            let c = s.closure()?;
            let mut locked = LockedSession::create(&session, s)?;
            locked.save()?;
            Ok(Output::ok(summary(&c)))
        }
        ClosureCmd::Adjoin { session, poly } => mutate(&session, Op::Adjoin(&poly)),
        ClosureCmd::Roots { session, poly } => mutate(&session, Op::Roots(&poly)),
        ClosureCmd::PkRoot { session, element, k } => mutate(&session, Op::PkRoot(&element, k)),
        ClosureCmd::Show { session } => {
            let s = session::read(&session)?;
            let c = s.closure()?;
            let v = serde_json::to_value(&s).expect("sessions serialize");
            Ok(Output::ok(with_summary(v, &c)))
        }
        ClosureCmd::Replay { session, out } => {
            let s = session::read(&session)?;
            let fresh = s.replay()?;
            let identical = fresh.to_text() == s.to_text();
            if let Some(path) = out {
                std::fs::write(&path, fresh.to_text())
                    .map_err(|e| CliError::usage(format!("cannot write {path}: {e}")))?;
            }
            let v = json!({ "identical": identical, "entries": s.log.len() });
            Ok(if identical { Output::ok(v) } else { Output::failed(v) })
        }
    }
}

fn mutate(path: &str, op: Op<'_>) -> CliResult<Output> {
    let mut locked = LockedSession::open(path)?;
    let mut c = locked.session.closure()?;
    let entry = locked.session.apply(&mut c, op)?;
    locked.save()?;
    Ok(Output::ok(with_summary(entry_json(&entry), &c)))
}

fn load_log(arg: &str) -> CliResult<Vec<Assignment>> {
    let v: Value = io::load_json(arg, "assignment log")?;
    let list = match v {
        Value::Object(mut m) => m.remove("log").ok_or_else(|| CliError::usage("assignment log object has no \"log\" field"))?,
        other => other,
    };
    serde_json::from_value(list).map_err(|e| CliError::usage(format!("invalid assignment log: {e}")))
}

pub fn extend(a: ExtendArgs) -> CliResult<Output> {
    let t = io::load_tower(&a.tower)?;
    let target = session::read(&a.target)?.closure()?;
    let alpha = io::load_elements(&a.map, target.tower(), Some(&t))?;
    let mut map = LazyFieldMap::extend_embedding(t, alpha, target)?;
    let mut adjoined = Vec::new();
    for p in &a.adjoin {
        let f = map.source().parse_poly(p)?;
        let r = map.source_mut().adjoin_root(&f)?;
        adjoined.push(map.source().tower().format_element(&r));
    }
    let mut out = serde_json::Map::new();
    if let Some(path) = &a.replay {
        let log = load_log(path)?;
        map.replay(&log)?;
        out.insert("replayed".into(), json!(log.len()));
    }
    if let Some(q) = &a.query {
        let x = map.source().parse_element(q)?;
        let y = map.image(&x)?;
        out.insert("query".into(), json!(map.source().tower().format_element(&x)));
        out.insert("image".into(), json!(map.target().tower().format_element(&y)));
    }
    out.insert("adjoined".into(), json!(adjoined));
    out.insert("source".into(), json!(map.source().tower().describe()));
    out.insert("target".into(), json!(map.target().tower().describe()));
    out.insert("log".into(), serde_json::to_value(map.log()).expect("assignments serialize"));
    Ok(Output::ok(Value::Object(out)))
}
