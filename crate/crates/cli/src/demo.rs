//! Worked examples as executable commands.

use crate::io::{CliError, CliResult, Output};
use crate::DemoCmd;
use fieldtower::arith::{BaseField, Field, PolyRing};
use fieldtower::closure::Closure;
use fieldtower::difference::{dcf_embedding_criterion, DifferenceField};
use fieldtower::factor;
use fieldtower::galois::galois_group;
use fieldtower::groups::{has_ncp, verify_counterexample, FiniteGroup};
use fieldtower::tower::{GeneratorDescriptor, Tower, TowerDescriptor};
use serde_json::{json, Value};

pub fn run(cmd: DemoCmd) -> CliResult<Output> {
    match cmd {
        DemoCmd::Shadow { primes, swap } => shadow(&primes, &swap),
        DemoCmd::Discriminants { count } => discriminants(count),
        DemoCmd::Groups => groups(),
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `Q(sqrt p : p in primes)` with `sigma` negating the square roots of the
/// primes in `swap`. Every automorphism of the closure extending `sigma`
/// fixes `sqrt p` exactly when `p` is not swapped, whatever roots the
/// closure picked.
fn shadow(primes: &[u64], swap: &[u64]) -> CliResult<Output> {
    if primes.is_empty() || primes.iter().any(|&p| !is_prime(p)) {
        return Err(CliError::usage("--primes must list primes"));
    }
    if let Some(p) = swap.iter().find(|p| !primes.contains(p)) {
        return Err(CliError::usage(format!("swapped prime {p} is not among --primes")));
    }
    let d = TowerDescriptor {
        base: BaseField::rationals(),
        gens: primes
            .iter()
            .map(|p| GeneratorDescriptor {
                name: format!("r{p}"),
                minpoly: format!("x^2 - {p}"),
                insep_exp: None,
            })
            .collect(),
    };
    let t = Tower::from_descriptor(&d)?;
    let sigma = primes
        .iter()
        .enumerate()
        .map(|(i, p)| if swap.contains(p) { t.top().neg(&t.gen(i)) } else { t.gen(i) })
        .collect();
    let df = DifferenceField::new(t.clone(), sigma)?;
    let mut tau = dcf_embedding_criterion(&df, Closure::new(BaseField::rationals()))?;
    let mut rows = Vec::new();
    let mut agrees = true;
    for (i, p) in primes.iter().enumerate() {
        let r = t.gen(i);
        let img = tau.image(&r)?;
        let fixed = img == r;
        agrees &= fixed != swap.contains(p);
        rows.push(json!({
            "prime": p,
            "root": t.format_element(&r),
            "image": tau.source().tower().format_element(&img),
            "fixed": fixed,
        }));
    }
    let v = json!({
        "field": t.describe(),
        "swap": swap,
        "roots": rows,
        "fixed_set_is_complement": agrees,
        "log": serde_json::to_value(tau.log()).expect("assignments serialize"),
    });
    Ok(if agrees { Output::ok(v) } else { Output::failed(v) })
}

/// The first `count` values `a >= 1` with `4a + 27` prime: the splitting
/// field of `x^3 + a x + a` has Galois group `S3` and the fixed field of
/// `A3` is `Q(sqrt D)` with `D = -4a^3 - 27a^2 = -a^2 (4a + 27)`.
fn discriminants(count: usize) -> CliResult<Output> {
    let mut rows = Vec::new();
    let mut all = true;
    for a in (1i64..).filter(|a| is_prime((4 * a + 27) as u64)).take(count) {
        let q = 4 * a + 27;
        let disc = -4 * a.pow(3) - 27 * a.pow(2);
        let mut c = Closure::new(BaseField::rationals());
        let f = c.parse_poly(&format!("x^3 + {a}*x + {a}"))?;
        let roots = c.roots(&f)?;
        let e = c.tower().clone();
        let g = galois_group(&e, 0)?;
        let group = g.group();
        let a3: Vec<usize> = (0..group.order()).filter(|&i| group.element_order(i) != 2).collect();
        // a square root of D inside the splitting field
        let top = e.top();
        let ring = PolyRing::new(&top);
        let sq = ring.sub(&ring.monomial(top.one(), 2), &ring.constant(e.from_int(disc)));
        let fac = factor::factor(&sq, &e)?;
        let delta = fac
            .factors
            .iter()
            .find(|(h, _)| h.degree() == Some(1))
            .map(|(h, _)| top.neg(&h.coeffs()[0]));
        let fixed_by = |x: &fieldtower::tower::TowerElement| -> Vec<usize> {
            (0..group.order()).filter(|&s| g.apply(s, x) == *x).collect()
        };
        let sqrt_fixer = delta.as_ref().map(fixed_by);
        let ok = group.order() == 6
            && !group.is_abelian()
            && disc == -a * a * q
            && sqrt_fixer.as_deref() == Some(&a3[..])
            && group.is_normal(&a3);
        all &= ok;
        rows.push(json!({
            "a": a,
            "q": q,
            "discriminant": disc,
            "roots": roots.iter().map(|(r, _)| e.format_element(r)).collect::<Vec<_>>(),
            "splitting_field": e.describe(),
            "group_order": group.order(),
            "isomorphism_type": group.isomorphism_label(),
            "sqrt_discriminant": delta.as_ref().map(|d| e.format_element(d)),
            "sqrt_fixed_by": sqrt_fixer.map(|h: Vec<usize>| group.format_set(&h)),
            "A3": group.format_set(&a3),
            "ok": ok,
        }));
    }
    let v = json!({ "cases": rows, "all_ok": all });
    Ok(if all { Output::ok(v) } else { Output::failed(v) })
}

/// Verdicts for the small groups discussed alongside the non-covering
/// property, next to the verdict stated for each in the literature.
fn groups() -> CliResult<Output> {
    let stated = [
        ("C2", true),
        ("C3", true),
        ("C4", true),
        ("C2xC2", true),
        ("C6", true),
        ("Q8", true),
        ("A5", true),
        ("S3", false),
        ("D8", false),
        ("A4", false),
    ];
    let mut rows = Vec::new();
    for (spec, expected) in stated {
        let g = FiniteGroup::from_spec(spec)?;
        let verdict = has_ncp(&g)?;
        let mut row: Value = verdict.to_json(&g);
        row["group"] = json!(spec);
        row["order"] = json!(g.order());
        row["stated"] = json!(expected);
        row["agrees"] = json!(verdict.holds() == expected);
        if let Some(c) = &verdict.counterexample {
            row["counterexample_verified"] = json!(verify_counterexample(&g, c));
        }
        rows.push(row);
    }
    Ok(Output::ok(json!({ "groups": rows })))
}
