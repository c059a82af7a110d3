use super::Field;
use num_bigint::BigUint;

/// Dense univariate polynomial, constant term first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and has no degree at all
/// ([`Poly::degree`] returns `None`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }
}

/// Arithmetic on `Poly<F::Elem>`, borrowing the coefficient field.
#[derive(Clone, Copy, Debug)]
pub struct PolyRing<'a, F: Field> {
    pub field: &'a F,
}

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        PolyRing { field }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); k];
        v.push(c);
        self.from_coeffs(v)
    }

    /// `x - a`
    pub fn linear(&self, a: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![self.field.neg(a), self.field.one()])
    }

    pub fn is_monic(&self, f: &Poly<F::Elem>) -> bool {
        f.lc().is_some_and(|c| self.field.is_one(c))
    }

    pub fn add(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = f.len().max(g.len());
        let zero = self.field.zero();
        let v = (0..n)
            .map(|i| {
                let a = f.coeffs.get(i).unwrap_or(&zero);
                let b = g.coeffs.get(i).unwrap_or(&zero);
                self.field.add(a, b)
            })
            .collect();
        self.from_coeffs(v)
    }

    pub fn neg(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: f.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(f, &self.neg(g))
    }

    pub fn scale(&self, c: &F::Elem, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(f.coeffs.iter().map(|a| self.field.mul(c, a)).collect())
    }

    pub fn mul(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.field.zero(); f.len() + g.len() - 1];
        for (i, a) in f.coeffs.iter().enumerate() {
            if self.field.is_zero(a) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                v[i + j] = self.field.add(&v[i + j], &self.field.mul(a, b));
            }
        }
        self.from_coeffs(v)
    }

    pub fn pow(&self, f: &Poly<F::Elem>, n: u32) -> Poly<F::Elem> {
        let mut r = self.one();
        for _ in 0..n {
            r = self.mul(&r, f);
        }
        r
    }

    /// Euclidean division; `None` when `g` is zero.
    pub fn divrem(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
    ) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        let dg = g.degree()?;
        let lc_inv = self.field.inv(g.lc()?)?;
        let mut r = f.coeffs.clone();
        if r.len() <= dg {
            return Some((self.zero(), self.from_coeffs(r)));
        }
        let mut q = vec![self.field.zero(); r.len() - dg];
        for k in (0..q.len()).rev() {
            let c = self.field.mul(&r[k + dg], &lc_inv);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate() {
                r[k + j] = self.field.sub(&r[k + j], &self.field.mul(&c, b));
            }
            q[k] = c;
        }
        r.truncate(dg);
        Some((self.from_coeffs(q), self.from_coeffs(r)))
    }

    pub fn rem(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divrem(f, g).expect("division by zero polynomial").1
    }

    /// Quotient when `g` divides `f` exactly.
    pub fn div_exact(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (q, r) = self.divrem(f, g)?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, g: &Poly<F::Elem>, f: &Poly<F::Elem>) -> bool {
        self.div_exact(f, g).is_some()
    }

    pub fn monic(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        match f.lc() {
            None => self.zero(),
            Some(c) => {
                let ci = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&ci, f)
            }
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(d, s, t)` with `s*f + t*g = d`, `d` the monic gcd.
    pub fn xgcd(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1).expect("nonzero divisor");
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        match r0.lc() {
            None => (r0, s0, t0),
            Some(c) => {
                let ci = self.field.inv(c).expect("nonzero");
                (self.scale(&ci, &r0), self.scale(&ci, &s0), self.scale(&ci, &t0))
            }
        }
    }

    pub fn derivative(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let v = f
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(&self.field.from_usize(i), c))
            .collect();
        self.from_coeffs(v)
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &Poly<F::Elem>, a: &F::Elem) -> F::Elem {
        let mut acc = self.field.zero();
        for c in f.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, a), c);
        }
        acc
    }

    /// `f(g(x))`
    pub fn compose(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.zero();
        for c in f.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, g), &self.constant(c.clone()));
        }
        acc
    }

    /// `f(x^k)`
    pub fn inflate(&self, f: &Poly<F::Elem>, k: usize) -> Poly<F::Elem> {
        if f.is_zero() {
            return self.zero();
        }
        let mut v = vec![self.field.zero(); (f.len() - 1) * k + 1];
        for (i, c) in f.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        self.from_coeffs(v)
    }

    pub fn mul_mod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
        m: &Poly<F::Elem>,
    ) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut result = self.rem(&self.one(), m);
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            result = self.mul_mod(&result, &result, m);
            if e.bit(i) {
                result = self.mul_mod(&result, &base, m);
            }
        }
        result
    }

    pub fn map_from<G: Field>(
        &self,
        f: &Poly<G::Elem>,
        mut map: impl FnMut(&G::Elem) -> F::Elem,
    ) -> Poly<F::Elem> {
        self.from_coeffs(f.coeffs().iter().map(&mut map).collect())
    }
}
