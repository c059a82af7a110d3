//! Factorization over `F_p(t)` by exhaustive search for divisors in
//! `F_p[t][x]` with bounded `t`-degree (Gauss's lemma bounds the search).

use crate::arith::{Field, Poly, PolyRing, RatFunc, RatFuncField};

/// All monic divisors of a nonzero `a` in `F_p[t]`.
fn monic_divisors(k: &RatFuncField, a: &Poly<u64>) -> Vec<Poly<u64>> {
    let r = k.poly_ring();
    let p = k.characteristic();
    let n = a.degree().expect("nonzero");
    let mut out = Vec::new();
    for d in 0..=n {
        for code in 0..p.pow(d as u32) {
            let mut v = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                v.push(c % p);
                c /= p;
            }
            v.push(1);
            let cand = r.from_coeffs(v);
            if r.divides(&cand, a) {
                out.push(cand);
            }
        }
    }
    out
}

/// All polynomials in `F_p[t]` of degree at most `b` (zero included).
fn bounded_polys(k: &RatFuncField, b: usize) -> Vec<Poly<u64>> {
    let r = k.poly_ring();
    let p = k.characteristic();
    (0..p.pow(b as u32 + 1))
        .map(|code| {
            let mut v = Vec::with_capacity(b + 1);
            let mut c = code;
            for _ in 0..=b {
                v.push(c % p);
                c /= p;
            }
            r.from_coeffs(v)
        })
        .collect()
}

/// Primitive representative in `F_p[t][x]` of a nonzero polynomial over
/// `F_p(t)`.
fn primitive_part(k: &RatFuncField, f: &Poly<RatFunc>) -> Vec<Poly<u64>> {
    let r = k.poly_ring();
    let mut l = r.one();
    for c in f.coeffs() {
        let g = r.gcd(&l, c.den());
        l = r.div_exact(&r.mul(&l, c.den()), &g).expect("lcm");
    }
    let polys: Vec<Poly<u64>> = f
        .coeffs()
        .iter()
        .map(|c| {
            let scale = r.div_exact(&l, c.den()).expect("denominator divides lcm");
            r.mul(c.num(), &scale)
        })
        .collect();
    let content = polys.iter().fold(r.zero(), |acc, c| r.gcd(&acc, c));
    polys
        .iter()
        .map(|c| r.div_exact(c, &content).expect("content divides"))
        .collect()
}

/// Monic irreducible factors over `F_p(t)` of a monic squarefree `f`.
pub(crate) fn factor_ratfunc(k: &RatFuncField, f: &Poly<RatFunc>) -> Vec<Poly<RatFunc>> {
    let ring = PolyRing::new(k);
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return vec![f.clone()];
    }
    if k.is_zero(&f.coeffs()[0]) {
        let x = ring.x();
        let rest = ring.div_exact(f, &x).expect("x divides");
        let mut out = vec![x];
        out.extend(factor_ratfunc(k, &rest));
        return out;
    }
    let prim = primitive_part(k, f);
    let bound = prim.iter().map(|c| c.degree().unwrap_or(0)).max().unwrap_or(0);
    let leads = monic_divisors(k, &prim[n]);
    let consts: Vec<Poly<u64>> = {
        let pr = k.poly_ring();
        let mut v = Vec::new();
        for c in 1..k.characteristic() {
            for d in monic_divisors(k, &prim[0]) {
                v.push(pr.scale(&c, &d));
            }
        }
        v
    };
    let middles = bounded_polys(k, bound);
    for d in 1..=n / 2 {
        let mut idx = vec![0usize; d.saturating_sub(1)];
        loop {
            for lead in &leads {
                for c0 in &consts {
                    let mut coeffs = vec![k.from_poly(c0.clone())];
                    coeffs.extend(idx.iter().map(|&i| k.from_poly(middles[i].clone())));
                    coeffs.push(k.from_poly(lead.clone()));
                    let g = ring.monic(&ring.from_coeffs(coeffs));
                    if let Some(q) = ring.div_exact(f, &g) {
                        let mut out = vec![g];
                        out.extend(factor_ratfunc(k, &q));
                        return out;
                    }
                }
            }
            // odometer over the middle coefficients
            let Some(pos) = idx.iter().position(|&i| i + 1 < middles.len()) else {
                break;
            };
            idx[pos] += 1;
            for j in idx.iter_mut().take(pos) {
                *j = 0;
            }
        }
    }
    vec![f.clone()]
}
