use super::{Field, PrimeField, RatFunc, RatFuncField, Rationals};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// One of the three supported prime-field-over bases: `Q`, `F_p`, `F_p(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BaseDescriptor", into = "BaseDescriptor")]
pub enum BaseField {
    Rationals,
    Prime(PrimeField),
    RatFunc(RatFuncField),
}

/// JSON spelling of a base: `"Q"`, `{"Fp": p}` or `{"FpT": p}`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
enum BaseDescriptor {
    Q,
    Fp(u64),
    #[serde(rename = "FpT")]
    FpT(u64),
}

impl TryFrom<BaseDescriptor> for BaseField {
    type Error = Error;
    fn try_from(d: BaseDescriptor) -> Result<Self> {
        match d {
            BaseDescriptor::Q => Ok(BaseField::Rationals),
            BaseDescriptor::Fp(p) => BaseField::prime(p),
            BaseDescriptor::FpT(p) => BaseField::rational_functions(p),
        }
    }
}

impl From<BaseField> for BaseDescriptor {
    fn from(b: BaseField) -> Self {
        match b {
            BaseField::Rationals => BaseDescriptor::Q,
            BaseField::Prime(f) => BaseDescriptor::Fp(f.modulus()),
            BaseField::RatFunc(f) => BaseDescriptor::FpT(f.characteristic()),
        }
    }
}

/// An element of a [`BaseField`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
    FpT(RatFunc),
}

impl BaseField {
    pub fn rationals() -> Self {
        BaseField::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !super::is_prime_u64(p) || p > u32::MAX as u64 {
            return Err(Error::InvalidInput(format!(
                "{p} is not a supported prime modulus (prime below 2^32 required)"
            )));
        }
        Ok(BaseField::Prime(PrimeField::new(p)))
    }

    pub fn rational_functions(p: u64) -> Result<Self> {
        if !super::is_prime_u64(p) || p > 1 << 16 {
            return Err(Error::InvalidInput(format!(
                "{p} is not a supported prime for F_p(t) (prime below 2^16 required)"
            )));
        }
        Ok(BaseField::RatFunc(RatFuncField::new(p)))
    }

    /// Short human name: `Q`, `F_5`, `F_2(t)`.
    pub fn name(&self) -> String {
        match self {
            BaseField::Rationals => "Q".into(),
            BaseField::Prime(f) => format!("F_{}", f.modulus()),
            BaseField::RatFunc(f) => format!("F_{}(t)", f.characteristic()),
        }
    }

    pub fn is_perfect(&self) -> bool {
        !matches!(self, BaseField::RatFunc(_))
    }

    pub fn rational(&self, n: BigInt, d: BigInt) -> Result<Scalar> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            BaseField::Rationals => Ok(Scalar::Q(BigRational::new(n, d))),
            BaseField::Prime(f) => {
                let den = f.reduce_big(&d);
                let inv = f.inv(&den).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Fp(f.mul(&f.reduce_big(&n), &inv)))
            }
            BaseField::RatFunc(f) => {
                let fp = f.prime_field();
                let den = fp.reduce_big(&d);
                let inv = fp.inv(&den).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::FpT(f.constant(fp.mul(&fp.reduce_big(&n), &inv))))
            }
        }
    }

    /// The transcendental `t` of `F_p(t)`.
    pub fn t(&self) -> Option<Scalar> {
        match self {
            BaseField::RatFunc(f) => Some(Scalar::FpT(f.t())),
            _ => None,
        }
    }

    /// Splits a scalar into (is-negative, magnitude text, needs parentheses
    /// when used as a factor).
    pub fn format_parts(&self, s: &Scalar) -> (bool, String, bool) {
        match s {
            Scalar::Q(r) => (r.is_negative(), r.abs().to_string(), false),
            Scalar::Fp(v) => (false, v.to_string(), false),
            Scalar::FpT(rf) => {
                let num = format_t_poly(rf.num().coeffs());
                if rf.is_polynomial() {
                    let terms = rf.num().coeffs().iter().filter(|c| **c != 0).count();
                    (false, num, terms > 1)
                } else {
                    let den = format_t_poly(rf.den().coeffs());
                    (false, format!("({num})/({den})"), false)
                }
            }
        }
    }

    pub fn format(&self, s: &Scalar) -> String {
        let (neg, body, _) = self.format_parts(s);
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Small nonzero "integers" of the base used by deterministic searches:
    /// 1, 2, 3, ... over Q; nonzero residues then polynomials in `t` over
    /// `F_p(t)`; nonzero residues over `F_p` (finitely many).
    pub fn small_elements(&self, count: usize) -> Vec<Scalar> {
        match self {
            BaseField::Rationals => (1..=count as i64).map(|n| self.from_int(n)).collect(),
            BaseField::Prime(f) => (1..f.modulus()).take(count).map(Scalar::Fp).collect(),
            BaseField::RatFunc(f) => {
                let p = f.characteristic();
                let r = f.poly_ring();
                let mut out = Vec::new();
                let mut code: u64 = 1;
                while out.len() < count {
                    let mut v = Vec::new();
                    let mut c = code;
                    while c > 0 {
                        v.push(c % p);
                        c /= p;
                    }
                    out.push(Scalar::FpT(f.from_poly(r.from_coeffs(v))));
                    code += 1;
                }
                out
            }
        }
    }
}

pub(crate) fn format_t_poly(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if *c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        parts.push(match (k, *c) {
            (0, c) => c.to_string(),
            (_, 1) => mono,
            (_, c) => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

macro_rules! mismatch {
    () => {
        panic!("scalar does not belong to this base field")
    };
}

impl Field for BaseField {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Q(BigRational::zero()),
            BaseField::Prime(_) => Scalar::Fp(0),
            BaseField::RatFunc(f) => Scalar::FpT(f.zero()),
        }
    }
    fn one(&self) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Q(BigRational::one()),
            BaseField::Prime(f) => Scalar::Fp(f.one()),
            BaseField::RatFunc(f) => Scalar::FpT(f.one()),
        }
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
            Scalar::FpT(rf) => rf.num().is_zero(),
        }
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (BaseField::Prime(f), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(f.add(x, y)),
            (BaseField::RatFunc(f), Scalar::FpT(x), Scalar::FpT(y)) => Scalar::FpT(f.add(x, y)),
            _ => mismatch!(),
        }
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            (BaseField::Prime(f), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(f.sub(x, y)),
            (BaseField::RatFunc(f), Scalar::FpT(x), Scalar::FpT(y)) => Scalar::FpT(f.sub(x, y)),
            _ => mismatch!(),
        }
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (BaseField::Rationals, Scalar::Q(x)) => Scalar::Q(-x),
            (BaseField::Prime(f), Scalar::Fp(x)) => Scalar::Fp(f.neg(x)),
            (BaseField::RatFunc(f), Scalar::FpT(x)) => Scalar::FpT(f.neg(x)),
            _ => mismatch!(),
        }
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (BaseField::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (BaseField::Prime(f), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(f.mul(x, y)),
            (BaseField::RatFunc(f), Scalar::FpT(x), Scalar::FpT(y)) => Scalar::FpT(f.mul(x, y)),
            _ => mismatch!(),
        }
    }
    fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (BaseField::Rationals, Scalar::Q(x)) => Rationals.inv(x).map(Scalar::Q),
            (BaseField::Prime(f), Scalar::Fp(x)) => f.inv(x).map(Scalar::Fp),
            (BaseField::RatFunc(f), Scalar::FpT(x)) => f.inv(x).map(Scalar::FpT),
            _ => mismatch!(),
        }
    }
    fn from_int(&self, n: i64) -> Scalar {
        match self {
            BaseField::Rationals => Scalar::Q(Rationals.from_int(n)),
            BaseField::Prime(f) => Scalar::Fp(f.from_int(n)),
            BaseField::RatFunc(f) => Scalar::FpT(f.from_int(n)),
        }
    }
    fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(f) => f.modulus(),
            BaseField::RatFunc(f) => f.characteristic(),
        }
    }
    fn size(&self) -> Option<BigUint> {
        match self {
            BaseField::Prime(f) => f.size(),
            _ => None,
        }
    }
}
