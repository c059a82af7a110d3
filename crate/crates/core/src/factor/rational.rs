//! Factorization over Q: reduction to a monic integer polynomial, factoring
//! modulo a well-chosen prime, quadratic Hensel lifting past a Mignotte
//! coefficient bound, and recombination of modular factors by exhaustive
//! subset search with trial division over Z.

use super::finite::{count_factors, cz_factor};
use crate::arith::{Field, is_prime_u64, Poly, PolyRing, PrimeField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

type ZPoly = Vec<BigInt>;

/// Prime candidates examined when choosing the modulus; the one giving the
/// fewest modular factors wins.
const PRIME_TRIALS: usize = 6;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(r)
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n)
        .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
        .collect())
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect())
}

/// Coefficients reduced into `[0, m)`.
fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients reduced into `(-m/2, m/2]`.
fn zsym(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect())
}

/// Division by a monic polynomial, exact over Z.
fn zdivrem_monic(a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn to_fp(f: &PrimeField, a: &[BigInt]) -> Poly<u64> {
    PolyRing::new(f).from_coeffs(a.iter().map(|c| f.reduce_big(c)).collect())
}

fn from_fp(a: &Poly<u64>) -> ZPoly {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// Monic irreducible factors over Q of a monic squarefree `f`.
pub(crate) fn factor_rational(f: &[BigRational]) -> Vec<Vec<BigRational>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // g(x) = D^n f(x / D) is monic with integer coefficients.
    let d = f
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut g = Vec::with_capacity(n + 1);
    let mut dpow = BigInt::one();
    for i in (0..=n).rev() {
        let c = &f[i] * BigRational::from_integer(dpow.clone());
        debug_assert!(c.is_integer());
        g.push(c.to_integer());
        dpow *= &d;
    }
    g.reverse();
    factor_monic_integer(&g)
        .into_iter()
        .map(|h| {
            // back-substitute x -> D x and normalize
            let m = h.len() - 1;
            let mut dpow = BigInt::one();
            let mut out: Vec<BigRational> = Vec::with_capacity(m + 1);
            for c in &h {
                out.push(BigRational::new(c * &dpow, BigInt::one()));
                dpow *= &d;
            }
            let lc = out[m].clone();
            out.into_iter().map(|c| c / &lc).collect()
        })
        .collect()
}

/// Sufficient test for squarefreeness of a monic rational polynomial: it
/// reduces to a squarefree polynomial modulo one of a few word-sized primes.
pub(crate) fn squarefree_mod_primes(f: &[BigRational]) -> bool {
    let mut p = 1_000_000_000u64;
    let mut tried = 0;
    while tried < 3 {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let fp = PrimeField::new(p);
        let m = BigInt::from(p);
        if f.iter().any(|c| (c.denom() % &m).is_zero()) {
            continue;
        }
        tried += 1;
        let ring = PolyRing::new(&fp);
        let g = ring.from_coeffs(
            f.iter()
                .map(|c| {
                    let d = fp.reduce_big(c.denom());
                    fp.mul(&fp.reduce_big(c.numer()), &fp.inv(&d).expect("unit"))
                })
                .collect(),
        );
        if ring.gcd(&g, &ring.derivative(&g)).degree() == Some(0) {
            return true;
        }
    }
    false
}

fn choose_prime(g: &[BigInt]) -> u64 {
    let mut best: Option<(usize, u64)> = None;
    let mut found = 0;
    let mut p = 2u64;
    while found < PRIME_TRIALS {
        p += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let fp = PrimeField::new(p);
        let ring = PolyRing::new(&fp);
        let gp = to_fp(&fp, g);
        if ring.gcd(&gp, &ring.derivative(&gp)).degree() != Some(0) {
            continue;
        }
        found += 1;
        let r = count_factors(&fp, &gp);
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, p));
        }
        if r == 1 {
            break;
        }
    }
    best.expect("a good prime exists").1
}

fn factor_monic_integer(g: &[BigInt]) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.to_vec()];
    }
    let p = choose_prime(g);
    let fp = PrimeField::new(p);
    let modular = cz_factor(&fp, &to_fp(&fp, g), |rng| rng.gen_range(0..p));
    if modular.len() == 1 {
        return vec![g.to_vec()];
    }
    // Mignotte: every coefficient of a factor is at most 2^n |g|_2.
    let norm2: BigInt = g.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut a = 1u32;
    while modulus <= &bound * 2u32 {
        modulus *= &pb;
        a += 1;
    }
    let lifted = multi_lift(g, &modular, &fp, a);
    recombine(g, lifted, &modulus)
}

/// Lifts a factorization `g = prod(parts) mod p` to `mod p^a`.
fn multi_lift(g: &[BigInt], parts: &[Poly<u64>], fp: &PrimeField, a: u32) -> Vec<ZPoly> {
    let target = BigInt::from(fp.modulus()).pow(a);
    if parts.len() == 1 {
        return vec![zmod(g, &target)];
    }
    let ring = PolyRing::new(fp);
    let mid = parts.len() / 2;
    let prod = |ps: &[Poly<u64>]| ps.iter().fold(ring.one(), |acc, q| ring.mul(&acc, q));
    let (u, v) = (prod(&parts[..mid]), prod(&parts[mid..]));
    let (_, s, t) = ring.xgcd(&u, &v);
    let (u, v) = hensel_pair(g, from_fp(&u), from_fp(&v), from_fp(&s), from_fp(&t), fp.modulus(), &target);
    let mut out = multi_lift(&u, &parts[..mid], fp, a);
    out.extend(multi_lift(&v, &parts[mid..], fp, a));
    out
}

/// Quadratic Hensel lifting of `g = u v mod p` (both monic, `s u + t v = 1`)
/// until the modulus reaches `target`.
fn hensel_pair(
    g: &[BigInt],
    mut u: ZPoly,
    mut v: ZPoly,
    mut s: ZPoly,
    mut t: ZPoly,
    p: u64,
    target: &BigInt,
) -> (ZPoly, ZPoly) {
    let mut m = BigInt::from(p);
    while &m < target {
        m = &m * &m;
        // lift the factors
        let e = zmod(&zsub(g, &zmul(&u, &v)), &m);
        let (q, r) = zdivrem_monic(&zmod(&zmul(&s, &e), &m), &v);
        let u2 = zmod(&zadd(&zadd(&u, &zmul(&t, &e)), &zmul(&q, &u)), &m);
        let v2 = zmod(&zadd(&v, &r), &m);
        // lift the Bezout coefficients
        let b = zmod(&zsub(&zadd(&zmul(&s, &u2), &zmul(&t, &v2)), &[BigInt::one()]), &m);
        let (c, d) = zdivrem_monic(&zmod(&zmul(&s, &b), &m), &v2);
        s = zmod(&zsub(&s, &d), &m);
        t = zmod(&zsub(&zsub(&t, &zmul(&t, &b)), &zmul(&c, &u2)), &m);
        u = u2;
        v = v2;
    }
    (zmod(&u, target), zmod(&v, target))
}

fn recombine(g: &[BigInt], mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut g = g.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut progressed = false;
        for subset in subsets(lifted.len(), size) {
            let cand = subset
                .iter()
                .fold(vec![BigInt::one()], |acc, &i| zmod(&zmul(&acc, &lifted[i]), m));
            let cand = zsym(&cand, m);
            if !constant_divides(&cand, &g) {
                continue;
            }
            let (q, r) = zdivrem_monic(&g, &cand);
            if r.is_empty() {
                found.push(cand);
                g = q;
                let mut keep = Vec::new();
                for (i, h) in lifted.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(h);
                    }
                }
                lifted = keep;
                progressed = true;
                break;
            }
        }
        if !progressed {
            size += 1;
        }
    }
    found.push(g);
    found
}

fn constant_divides(cand: &[BigInt], g: &[BigInt]) -> bool {
    let zero = BigInt::zero();
    let (c0, g0) = (cand.first().unwrap_or(&zero), g.first().unwrap_or(&zero));
    if g0.is_zero() {
        true
    } else if c0.is_zero() {
        false
    } else {
        (g0 % c0).is_zero()
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
