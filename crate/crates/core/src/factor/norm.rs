//! Reduction of factoring over a tower level to the level below it.
//!
//! For a separable generator `a` (minimal polynomial of degree `n`) this is
//! Trager's method: the norm `N(x) = Res_y(m(y), f(x - s y))` is computed by
//! evaluating determinants of multiplication matrices at `n deg f + 1` points
//! and interpolating; once `N` is squarefree its factors over the lower level
//! pull back to factors of `f` through gcds. For a purely inseparable
//! generator (`a^q = c`) the map `f -> f^(q)` (coefficients raised to the
//! `q`-th power) is a bijection on irreducible factors, and
//! `gcd(f, h(x^q))` recovers the factor of `f` over `h`.

use super::factor_separable;
use crate::arith::{det, det_rational, BaseField, Field, Poly, PolyRing, Scalar};
use crate::tower::{Tower, TowerElement};

/// Interpolating polynomial through `(xs[i], ys[i])`, Newton form.
fn interpolate<F: Field>(field: &F, xs: &[F::Elem], ys: &[F::Elem]) -> Poly<F::Elem> {
    let ring = PolyRing::new(field);
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = field.sub(&dd[i], &dd[i - 1]);
            let den = field.sub(&xs[i], &xs[i - j]);
            dd[i] = field.div(&num, &den).expect("distinct nodes");
        }
    }
    let mut acc = ring.constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        acc = ring.mul(&acc, &ring.linear(&xs[i]));
        acc = ring.add(&acc, &ring.constant(dd[i].clone()));
    }
    acc
}

/// Distinct elements of the base, starting `0, 1, 2, ...`.
fn sample_points(tower: &Tower, count: usize) -> Vec<TowerElement> {
    let mut out = vec![tower.from_int(0)];
    out.extend(
        tower
            .base()
            .small_elements(count.saturating_sub(1))
            .into_iter()
            .map(|s| tower.scalar(s)),
    );
    out
}

/// Norm from level `k` down to level `k - 1` of `g`.
fn norm(tower: &Tower, k: usize, g: &Poly<TowerElement>) -> Poly<TowerElement> {
    let upper = tower.level(k);
    let lower = tower.level(k - 1);
    let up_ring = PolyRing::new(&upper);
    let n = tower.generators()[k - 1].degree();
    let a = tower.gen(k - 1);
    let count = n * g.degree().expect("nonzero") + 1;
    let xs = sample_points(tower, count);
    let ys: Vec<TowerElement> = xs
        .iter()
        .map(|c| {
            let v = up_ring.eval(g, c);
            let mut cols = Vec::with_capacity(n);
            let mut w = v;
            for _ in 0..n {
                cols.push(tower.generator_coeffs(&w, k));
                w = upper.mul(&w, &a);
            }
            // rows of the matrix are transposed columns; the determinant is
            // the same either way
            det(&lower, cols)
        })
        .collect();
    interpolate(&lower, &xs, &ys)
}

/// Irreducible factors of a monic squarefree separable `f` over level `k`,
/// whose top generator is separable.
pub(super) fn factor_by_norm(tower: &Tower, k: usize, f: &Poly<TowerElement>) -> Vec<Poly<TowerElement>> {
    let upper = tower.level(k);
    let lower = tower.level(k - 1);
    let up_ring = PolyRing::new(&upper);
    let low_ring = PolyRing::new(&lower);
    let a = tower.gen(k - 1);
    let mut shifts = sample_points(tower, 1);
    let mut s_index = 0;
    loop {
        if s_index == shifts.len() {
            shifts = sample_points(tower, 2 * shifts.len());
        }
        let s = shifts[s_index].clone();
        s_index += 1;
        let sa = upper.mul(&s, &a);
        // g(x) = f(x - s a)
        let g = up_ring.compose(f, &up_ring.linear(&sa));
        let big_n = norm(tower, k, &g);
        let dn = low_ring.derivative(&big_n);
        if low_ring.gcd(&big_n, &dn).degree() != Some(0) {
            continue;
        }
        let parts = factor_separable(tower, k - 1, &big_n);
        if parts.len() == 1 {
            return vec![f.clone()];
        }
        let back = up_ring.from_coeffs(vec![sa, upper.one()]);
        return parts
            .iter()
            .map(|nj| {
                let h = up_ring.gcd(&g, nj);
                up_ring.compose(&h, &back)
            })
            .collect();
    }
}

/// Norm from level `k` straight down to the base of `g`.
fn absolute_norm(tower: &Tower, k: usize, g: &Poly<TowerElement>) -> Poly<TowerElement> {
    let upper = tower.level(k);
    let base = tower.base();
    let up_ring = PolyRing::new(&upper);
    let dim = tower.level_degree(k);
    let count = dim * g.degree().expect("nonzero") + 1;
    let xs = sample_points(tower, count);
    let xs_base: Vec<Scalar> = xs.iter().map(|c| tower.as_scalar(c).expect("scalar")).collect();
    let basis: Vec<TowerElement> = (0..dim)
        .map(|i| {
            let mut v = vec![base.zero(); i + 1];
            v[i] = base.one();
            tower.from_coeffs(v)
        })
        .collect();
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|c| {
            let v = up_ring.eval(g, c);
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|b| {
                    let w = upper.mul(&v, b);
                    let mut col = w.coeffs().to_vec();
                    col.resize(dim, base.zero());
                    col
                })
                .collect();
            if let BaseField::Rationals = base {
                let rows = cols
                    .into_iter()
                    .map(|col| {
                        col.into_iter()
                            .map(|x| match x {
                                Scalar::Q(r) => r,
                                _ => unreachable!("rational coordinate"),
                            })
                            .collect()
                    })
                    .collect();
                Scalar::Q(det_rational(rows))
            } else {
                det(base, cols)
            }
        })
        .collect();
    let n = interpolate(base, &xs_base, &ys);
    PolyRing::new(&upper).from_coeffs(n.coeffs().iter().map(|c| tower.scalar(c.clone())).collect())
}

/// Shift element `c a_k + c^2 a_(k-1) + c^3 a_(k-2) + ...` for level `k`.
fn shift_element(tower: &Tower, k: usize, c: i64) -> TowerElement {
    let upper = tower.level(k);
    let mut acc = upper.zero();
    let cc = tower.from_int(c);
    let mut w = cc.clone();
    for j in (0..k).rev() {
        acc = upper.add(&acc, &upper.mul(&w, &tower.gen(j)));
        w = upper.mul(&w, &cc);
    }
    acc
}

/// Irreducible factors of a monic squarefree `f` over level `k` of a tower
/// whose generators are all separable, through a single norm to the base.
pub(super) fn factor_by_absolute_norm(tower: &Tower, k: usize, f: &Poly<TowerElement>) -> Vec<Poly<TowerElement>> {
    let upper = tower.level(k);
    let up_ring = PolyRing::new(&upper);
    for c in 0i64.. {
        let sa = shift_element(tower, k, c);
        let g = up_ring.compose(f, &up_ring.linear(&sa));
        let big_n = absolute_norm(tower, k, &g);
        let rational: Vec<_> = big_n
            .coeffs()
            .iter()
            .map(|c| match tower.as_scalar(c) {
                Some(Scalar::Q(r)) => r,
                _ => unreachable!("rational coefficient"),
            })
            .collect();
        if !super::rational::squarefree_mod_primes(&rational) {
            continue;
        }
        let parts = factor_separable(tower, 0, &big_n);
        if parts.len() == 1 {
            return vec![f.clone()];
        }
        let back = up_ring.from_coeffs(vec![sa, upper.one()]);
        return parts
            .iter()
            .filter_map(|nj| {
                let r = up_ring.rem(nj, &g);
                let h = up_ring.gcd(&g, &r);
                (h.degree() != Some(0)).then(|| up_ring.compose(&h, &back))
            })
            .collect();
    }
    unreachable!()
}

/// Irreducible factors of a monic squarefree separable `f` over level `k`,
/// whose top generator is a root of `y^q - c`.
pub(super) fn factor_inseparable(
    tower: &Tower,
    k: usize,
    q: u64,
    f: &Poly<TowerElement>,
) -> Vec<Poly<TowerElement>> {
    let upper = tower.level(k);
    let up_ring = PolyRing::new(&upper);
    let powered = up_ring.from_coeffs(f.coeffs().iter().map(|c| upper.pow_u64(c, q)).collect());
    debug_assert!(powered.coeffs().iter().all(|c| tower.level_of(c) < k));
    let parts = factor_separable(tower, k - 1, &powered);
    if parts.len() == 1 {
        return vec![f.clone()];
    }
    parts
        .iter()
        .map(|h| up_ring.gcd(f, &up_ring.inflate(h, q as usize)))
        .collect()
}
