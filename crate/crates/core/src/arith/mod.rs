//! Exact scalar arithmetic.
//!
//! Every algorithm in this crate is written against the [`Field`] trait, which
//! follows the "context object" style: the field is a value that knows how to
//! combine element values, so that runtime data (a prime modulus, a tower of
//! minimal polynomials) never has to live inside each element.

mod linalg;
mod poly;
mod prime;
mod ratfunc;
mod rational;
mod scalar;

pub use linalg::{det, det_rational, solve, solve_rational, SpanBasis};
pub use poly::{Poly, PolyRing};
pub use prime::PrimeField;
pub use ratfunc::{RatFunc, RatFuncField};
pub use rational::Rationals;
pub use scalar::{BaseField, Scalar};

use num_bigint::BigUint;
use num_traits::One;
use std::fmt::Debug;

/// A computable field whose elements are plain values.
pub trait Field {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of an integer under the unique ring map from Z.
    fn from_int(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when the field is infinite.
    fn size(&self) -> Option<BigUint>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut result = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    fn pow_u64(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow(a, &BigUint::from(e))
    }

    /// Sum of `n` copies of one, reduced by the characteristic.
    fn from_usize(&self, n: usize) -> Self::Elem {
        self.from_int(n as i64)
    }
}

/// `p^k` as a `BigUint`.
pub(crate) fn big_pow(p: u64, k: u32) -> BigUint {
    let mut r = BigUint::one();
    for _ in 0..k {
        r *= p;
    }
    r
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
