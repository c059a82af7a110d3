use super::{Field, Poly, PolyRing, PrimeField};
use num_bigint::BigUint;
use std::cmp::Ordering;

/// An element of `F_p(t)`: `num / den` with `gcd(num, den) = 1` and `den`
/// monic. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly<u64>,
    den: Poly<u64>,
}

impl RatFunc {
    pub fn num(&self) -> &Poly<u64> {
        &self.num
    }
    pub fn den(&self) -> &Poly<u64> {
        &self.den
    }
    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }
}

fn poly_cmp(a: &Poly<u64>, b: &Poly<u64>) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order: denominator first, then numerator, each by degree and
/// then coefficients from the top down.
impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        poly_cmp(&self.den, &other.den).then_with(|| poly_cmp(&self.num, &other.num))
    }
}

/// The rational function field `F_p(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RatFuncField {
    fp: PrimeField,
}

impl RatFuncField {
    pub fn new(p: u64) -> Self {
        RatFuncField {
            fp: PrimeField::new(p),
        }
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.fp
    }

    pub fn poly_ring(&self) -> PolyRing<'_, PrimeField> {
        PolyRing::new(&self.fp)
    }

    /// Builds `num / den` in lowest terms; `None` if `den` is zero.
    pub fn make(&self, num: Poly<u64>, den: Poly<u64>) -> Option<RatFunc> {
        let r = self.poly_ring();
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(self.zero());
        }
        let g = r.gcd(&num, &den);
        let num = r.div_exact(&num, &g).expect("gcd divides");
        let den = r.div_exact(&den, &g).expect("gcd divides");
        let lc_inv = self.fp.inv(den.lc().expect("nonzero")).expect("unit");
        Some(RatFunc {
            num: r.scale(&lc_inv, &num),
            den: r.scale(&lc_inv, &den),
        })
    }

    pub fn from_poly(&self, num: Poly<u64>) -> RatFunc {
        self.make(num, self.poly_ring().one()).expect("unit denominator")
    }

    /// The transcendental `t`.
    pub fn t(&self) -> RatFunc {
        self.from_poly(self.poly_ring().x())
    }

    pub fn constant(&self, c: u64) -> RatFunc {
        self.from_poly(self.poly_ring().constant(c % self.fp.modulus()))
    }

    /// Substitutes `t -> t^p`, the p-th power map on `F_p(t)`.
    pub fn frobenius(&self, a: &RatFunc) -> RatFunc {
        let r = self.poly_ring();
        let p = self.fp.modulus() as usize;
        self.make(r.inflate(&a.num, p), r.inflate(&a.den, p))
            .expect("nonzero denominator")
    }

    /// Writes `a = sum_{i<p} t^i * r_i(t^p)` and returns the `r_i` (with
    /// `t^p` renamed to `t`). `F_p(t)` has basis `1, t, .., t^(p-1)` over
    /// `F_p(t^p)`.
    pub fn frobenius_components(&self, a: &RatFunc) -> Vec<RatFunc> {
        let r = self.poly_ring();
        let p = self.fp.modulus() as usize;
        // a = n d^(p-1) / d(t^p)
        let d_pow = r.pow(&a.den, (p - 1) as u32);
        let n = r.mul(&a.num, &d_pow);
        (0..p)
            .map(|i| {
                let coeffs: Vec<u64> = n.coeffs().iter().skip(i).step_by(p).copied().collect();
                self.make(r.from_coeffs(coeffs), a.den.clone())
                    .expect("nonzero denominator")
            })
            .collect()
    }

    /// Total degree measure `max(deg num, deg den)`.
    pub fn height(&self, a: &RatFunc) -> usize {
        a.num.degree().unwrap_or(0).max(a.den.degree().unwrap_or(0))
    }
}

impl Field for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc {
            num: self.poly_ring().zero(),
            den: self.poly_ring().one(),
        }
    }
    fn one(&self) -> RatFunc {
        RatFunc {
            num: self.poly_ring().one(),
            den: self.poly_ring().one(),
        }
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = self.poly_ring();
        if a.den == b.den {
            return self.make(r.add(&a.num, &b.num), a.den.clone()).expect("den");
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.make(num, r.mul(&a.den, &b.den)).expect("den")
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.poly_ring().neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = self.poly_ring();
        self.make(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
            .expect("den")
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.num.is_zero() {
            return None;
        }
        self.make(a.den.clone(), a.num.clone())
    }
    fn from_int(&self, n: i64) -> RatFunc {
        self.from_poly(self.poly_ring().constant(self.fp.from_int(n)))
    }
    fn characteristic(&self) -> u64 {
        self.fp.modulus()
    }
    fn size(&self) -> Option<BigUint> {
        None
    }
}
