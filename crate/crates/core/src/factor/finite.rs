//! Cantor–Zassenhaus factorization over any finite field: distinct-degree
//! splitting followed by randomized equal-degree splitting. The random source
//! is a fixed-seed generator, so results are reproducible.

use crate::arith::{Field, Poly, PolyRing};
use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Monic irreducible factors of a monic squarefree `f`.
pub(crate) fn cz_factor<F: Field>(
    field: &F,
    f: &Poly<F::Elem>,
    sample: impl Fn(&mut ChaCha8Rng) -> F::Elem,
) -> Vec<Poly<F::Elem>> {
    let ring = PolyRing::new(field);
    let q = field.size().expect("finite field");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&ring, f, &q) {
        equal_degree(&ring, &g, d, &q, &sample, &mut rng, &mut out);
    }
    out
}

/// Number of irreducible factors of a monic squarefree `f`, from the
/// distinct-degree split alone.
pub(crate) fn count_factors<F: Field>(field: &F, f: &Poly<F::Elem>) -> usize {
    let ring = PolyRing::new(field);
    let q = field.size().expect("finite field");
    distinct_degree(&ring, f, &q)
        .iter()
        .map(|(g, d)| g.degree().unwrap_or(0) / d)
        .sum()
}

fn distinct_degree<F: Field>(
    ring: &PolyRing<'_, F>,
    f: &Poly<F::Elem>,
    q: &BigUint,
) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ring.x();
    let mut h = ring.rem(&x, &rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = ring.pow_mod(&h, q, &rest);
        let g = ring.gcd(&ring.sub(&h, &x), &rest);
        if g.degree().unwrap_or(0) > 0 {
            rest = ring.div_exact(&rest, &g).expect("gcd divides");
            h = ring.rem(&h, &rest);
            out.push((g, d));
        }
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

fn equal_degree<F: Field>(
    ring: &PolyRing<'_, F>,
    g: &Poly<F::Elem>,
    d: usize,
    q: &BigUint,
    sample: &impl Fn(&mut ChaCha8Rng) -> F::Elem,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly<F::Elem>>,
) {
    let n = g.degree().expect("nonzero");
    if n == d {
        out.push(g.clone());
        return;
    }
    let field_char = BigUint::from(2u32);
    let qd = q.pow(d as u32);
    loop {
        let a = ring.from_coeffs((0..n).map(|_| sample(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % &field_char == BigUint::from(0u32) {
            // absolute trace to F_2 of the algebra F_{q^d}
            let steps = (qd.bits() - 1) as usize;
            let mut acc = a.clone();
            let mut pw = a.clone();
            for _ in 1..steps {
                pw = ring.mul_mod(&pw, &pw, g);
                acc = ring.add(&acc, &pw);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) >> 1;
            ring.sub(&ring.pow_mod(&a, &e, g), &ring.one())
        };
        let h = ring.gcd(&b, g);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            let rest = ring.div_exact(g, &h).expect("gcd divides");
            equal_degree(ring, &h, d, q, sample, rng, out);
            equal_degree(ring, &rest, d, q, sample, rng, out);
            return;
        }
    }
}
