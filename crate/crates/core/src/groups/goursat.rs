//! Goursat data of a subgroup of a direct product.

use super::FiniteGroup;
use crate::error::{Error, Result};
use serde_json::{json, Value};

/// For `H ≤ G1 x G2` with surjective projections: the kernels `N1`, `N2` of
/// the opposite projections and the isomorphism `G1/N1 -> G2/N2` whose graph
/// is the image of `H`, as pairs of cosets sorted by the first coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoursatReport {
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
    pub pairing: Vec<(Vec<usize>, Vec<usize>)>,
}

impl GoursatReport {
    pub fn to_json(&self, g1: &FiniteGroup, g2: &FiniteGroup) -> Value {
        json!({
            "N1": g1.format_set(&self.n1),
            "N2": g2.format_set(&self.n2),
            "isomorphism": self
                .pairing
                .iter()
                .map(|(a, b)| json!([g1.format_set(a), g2.format_set(b)]))
                .collect::<Vec<_>>(),
        })
    }
}

/// `h` lists elements of `G1 x G2` by index `a |G2| + b`.
pub fn goursat_check(g1: &FiniteGroup, g2: &FiniteGroup, h: &[usize]) -> Result<GoursatReport> {
    let n = g2.order();
    let product = FiniteGroup::direct_product(g1, g2)?;
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    if !product.is_subgroup(&h) {
        return Err(Error::InvalidInput("the given elements do not form a subgroup of G1 x G2".into()));
    }
    let pairs: Vec<(usize, usize)> = h.iter().map(|&p| (p / n, p % n)).collect();
    let mut hit1 = vec![false; g1.order()];
    let mut hit2 = vec![false; n];
    for &(a, b) in &pairs {
        hit1[a] = true;
        hit2[b] = true;
    }
    if !hit1.iter().all(|&x| x) || !hit2.iter().all(|&x| x) {
        return Err(Error::InvalidInput("projections of the subgroup are not surjective".into()));
    }
    let mut n1: Vec<usize> = pairs.iter().filter(|p| p.1 == g2.identity()).map(|p| p.0).collect();
    let mut n2: Vec<usize> = pairs.iter().filter(|p| p.0 == g1.identity()).map(|p| p.1).collect();
    n1.sort_unstable();
    n2.sort_unstable();
    let fail = |what: &str| Err(Error::Verification(format!("image is not the graph of an isomorphism: {what}")));
    let mut pairing: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for &(a, b) in &pairs {
        let (ca, cb) = (g1.coset(a, &n1), g2.coset(b, &n2));
        match pairing.iter().find(|(x, _)| *x == ca) {
            Some((_, y)) if *y != cb => return fail("a coset of N1 meets two cosets of N2"),
            Some(_) => {}
            None => {
                if pairing.iter().any(|(_, y)| *y == cb) {
                    return fail("a coset of N2 meets two cosets of N1");
                }
                pairing.push((ca, cb));
            }
        }
    }
    pairing.sort();
    if pairing.len() * n1.len() != g1.order() || pairing.len() * n2.len() != n {
        return fail("the pairing does not cover both quotients");
    }
    for (a, b) in &pairing {
        for (c, d) in &pairing {
            let ac = g1.coset(g1.mul(a[0], c[0]), &n1);
            let bd = g2.coset(g2.mul(b[0], d[0]), &n2);
            if !pairing.iter().any(|(x, y)| *x == ac && *y == bd) {
                return fail("the pairing is not multiplicative");
            }
        }
    }
    Ok(GoursatReport { n1, n2, pairing })
}
