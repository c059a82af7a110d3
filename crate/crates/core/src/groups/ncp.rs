//! The non-covering property, checked straight from its definition: for all
//! normal `M ⊊ N` and every `g` there is `h ∈ gN` whose conjugacy class
//! misses `gM`.

use super::{check_budget, FiniteGroup};
use crate::error::Result;
use serde_json::{json, Value};

/// A triple `(M, N, g)` for which every `h ∈ gN` has a conjugate in `gM`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    pub g: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcpVerdict {
    pub counterexample: Option<Counterexample>,
}

impl NcpVerdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self, group: &FiniteGroup) -> Value {
        match &self.counterexample {
            None => json!({ "holds": true }),
            Some(c) => json!({
                "holds": false,
                "counterexample": {
                    "M": group.format_set(&c.m),
                    "N": group.format_set(&c.n),
                    "g": group.label(c.g),
                }
            }),
        }
    }
}

/// Exhaustive check. Pairs are visited with `M` and then `N` in the order
/// of [`FiniteGroup::normal_subgroups`], and `g` by index, so the reported
/// counterexample is the first one in that order.
pub fn has_ncp(group: &FiniteGroup) -> Result<NcpVerdict> {
    check_budget(group.order())?;
    let normals = group.normal_subgroups()?;
    let class = group.class_index();
    let nclasses = class.iter().max().map_or(0, |m| m + 1);
    let n = group.order();
    for m in &normals {
        for big in &normals {
            if big.len() <= m.len() || !m.iter().all(|x| big.binary_search(x).is_ok()) {
                continue;
            }
            // cosets gM are visited once, through their smallest element
            let mut seen = vec![false; n];
            for g in 0..n {
                if seen[g] {
                    continue;
                }
                let gm = group.coset(g, m);
                for &x in &gm {
                    seen[x] = true;
                }
                let mut hit = vec![false; nclasses];
                for &x in &gm {
                    hit[class[x]] = true;
                }
                let witness = big.iter().any(|&k| !hit[class[group.mul(g, k)]]);
                if !witness {
                    return Ok(NcpVerdict {
                        counterexample: Some(Counterexample {
                            m: m.clone(),
                            n: big.clone(),
                            g,
                        }),
                    });
                }
            }
        }
    }
    Ok(NcpVerdict { counterexample: None })
}

/// Re-checks a counterexample by brute force over all `h` and `x`.
pub fn verify_counterexample(group: &FiniteGroup, c: &Counterexample) -> bool {
    let (m, n) = (&c.m, &c.n);
    let subset = m.iter().all(|x| n.binary_search(x).is_ok());
    if !group.is_normal(m) || !group.is_normal(n) || !subset || m.len() == n.len() {
        return false;
    }
    let gm = group.coset(c.g, m);
    group
        .coset(c.g, n)
        .iter()
        .all(|&h| (0..group.order()).any(|x| gm.binary_search(&group.conjugate(h, x)).is_ok()))
}

/// Verdicts for `G`, `H` and `G x H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductReport {
    pub g: NcpVerdict,
    pub h: NcpVerdict,
    pub product: NcpVerdict,
}

impl ProductReport {
    /// Both factors have the property but the product does not.
    pub fn violation(&self) -> bool {
        self.g.holds() && self.h.holds() && !self.product.holds()
    }
}

pub fn product_ncp_test(g: &FiniteGroup, h: &FiniteGroup) -> Result<ProductReport> {
    check_budget(g.order() * h.order())?;
    let gh = FiniteGroup::direct_product(g, h)?;
    Ok(ProductReport {
        g: has_ncp(g)?,
        h: has_ncp(h)?,
        product: has_ncp(&gh)?,
    })
}
