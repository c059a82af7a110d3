//! Field towers: a base field (`Q`, `F_p` or `F_p(t)`) followed by a chain of
//! simple algebraic extensions, each given by a monic irreducible minimal
//! polynomial over the tower below it.
//!
//! Elements use a flat mixed-radix representation. The monomial
//! `a_1^e_1 * ... * a_n^e_n` (with `e_i < deg m_i`) sits at index
//! `e_1 + d_1 e_2 + d_1 d_2 e_3 + ...`, so the first generator varies fastest.
//! Trailing zero coefficients are trimmed. As a consequence an element of a
//! lower level has literally the same representation at every higher level,
//! and a tower that only ever grows never has to rewrite old elements.

mod descriptor;
mod subfield;
mod text;

pub use descriptor::{GeneratorDescriptor, TowerDescriptor};
pub use subfield::{Subfield, SubfieldExpr};

use crate::arith::{solve_rational, BaseField, Field, Poly, PolyRing, Scalar, SpanBasis};
use num_rational::BigRational;
use num_traits::{One, Zero};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use std::cmp::Ordering;

/// Canonical residue of a tower element: coefficients over the base in the
/// monomial basis, trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerElement(Vec<Scalar>);

impl TowerElement {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

fn scalar_zero_like(s: &Scalar) -> Scalar {
    match s {
        Scalar::Q(_) => Scalar::Q(num_rational::BigRational::from_integer(0.into())),
        Scalar::Fp(_) => Scalar::Fp(0),
        // 0/1 does not depend on the characteristic
        Scalar::FpT(_) => Scalar::FpT(crate::arith::RatFuncField::new(2).zero()),
    }
}

impl PartialOrd for TowerElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: elements involving higher monomials come later; among
/// elements of the same length, coefficients are compared from the highest
/// monomial down. Base scalars (length 0 or 1) compare by value.
impl Ord for TowerElement {
    fn cmp(&self, other: &Self) -> Ordering {
        let (la, lb) = (self.0.len().max(1), other.0.len().max(1));
        if la != lb {
            return la.cmp(&lb);
        }
        for i in (0..la).rev() {
            let ord = match (self.0.get(i), other.0.get(i)) {
                (Some(a), Some(b)) => a.cmp(b),
                (Some(a), None) => a.cmp(&scalar_zero_like(a)),
                (None, Some(b)) => scalar_zero_like(b).cmp(b),
                (None, None) => Ordering::Equal,
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

/// Total order on polynomials used for canonical factor lists: degree first,
/// then coefficients from the leading one down.
pub fn poly_cmp(f: &Poly<TowerElement>, g: &Poly<TowerElement>) -> Ordering {
    f.len()
        .cmp(&g.len())
        .then_with(|| f.coeffs().iter().rev().cmp(g.coeffs().iter().rev()))
}

/// One step of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    name: String,
    minpoly: Poly<TowerElement>,
    insep_exp: Option<u32>,
}

impl Generator {
    pub fn name(&self) -> &str {
        &self.name
    }
    /// Minimal polynomial over the tower below this generator.
    pub fn minpoly(&self) -> &Poly<TowerElement> {
        &self.minpoly
    }
    /// `Some(k)` when the minimal polynomial is `X^(p^k) - c`.
    pub fn insep_exp(&self) -> Option<u32> {
        self.insep_exp
    }
    pub fn degree(&self) -> usize {
        self.minpoly.degree().expect("nonzero minimal polynomial")
    }
}

/// A finite tower of simple algebraic extensions over a [`BaseField`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower {
    base: BaseField,
    gens: Vec<Generator>,
    /// `strides[k]` = degree of level `k` over the base.
    strides: Vec<usize>,
}

/// Field view of the first `k` generators of a tower.
#[derive(Clone, Copy, Debug)]
pub struct Level<'t> {
    tower: &'t Tower,
    k: usize,
}

impl Tower {
    pub fn new(base: BaseField) -> Self {
        Tower {
            base,
            gens: Vec::new(),
            strides: vec![1],
        }
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// `[level k : base]`
    pub fn level_degree(&self, k: usize) -> usize {
        self.strides[k]
    }

    /// `[tower : base]`, the product of the generator degrees.
    pub fn degree(&self) -> usize {
        *self.strides.last().expect("level 0 exists")
    }

    pub fn level(&self, k: usize) -> Level<'_> {
        assert!(k <= self.gens.len(), "level {k} beyond tower height");
        Level { tower: self, k }
    }

    pub fn top(&self) -> Level<'_> {
        self.level(self.gens.len())
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// The `i`-th generator (0-based) as an element.
    pub fn gen(&self, i: usize) -> TowerElement {
        let mut v = vec![self.base.zero(); self.strides[i] + 1];
        v[self.strides[i]] = self.base.one();
        TowerElement(v)
    }

    pub fn scalar(&self, s: Scalar) -> TowerElement {
        self.from_coeffs(vec![s])
    }

    pub fn from_int(&self, n: i64) -> TowerElement {
        self.scalar(self.base.from_int(n))
    }

    pub fn from_coeffs(&self, mut v: Vec<Scalar>) -> TowerElement {
        while v.last().is_some_and(|c| self.base.is_zero(c)) {
            v.pop();
        }
        TowerElement(v)
    }

    /// Smallest level containing `x`.
    pub fn level_of(&self, x: &TowerElement) -> usize {
        self.strides
            .iter()
            .position(|&s| x.0.len() <= s)
            .expect("element belongs to the tower")
    }

    pub fn contains(&self, x: &TowerElement) -> bool {
        x.0.len() <= self.degree()
    }

    /// Scalar value of an element lying in the base.
    pub fn as_scalar(&self, x: &TowerElement) -> Option<Scalar> {
        match x.0.len() {
            0 => Some(self.base.zero()),
            1 => Some(x.0[0].clone()),
            _ => None,
        }
    }

    /// Exponent vector of the monomial at flat index `idx`.
    pub fn monomial_exponents(&self, idx: usize) -> Vec<usize> {
        self.gens
            .iter()
            .enumerate()
            .map(|(i, g)| (idx / self.strides[i]) % g.degree())
            .collect()
    }

    /// Coefficients of `x` (an element of level `k`) as a polynomial in
    /// generator `k - 1` over level `k - 1`, padded to the generator degree.
    pub fn generator_coeffs(&self, x: &TowerElement, k: usize) -> Vec<TowerElement> {
        debug_assert!(k >= 1 && self.level_of(x) <= k);
        let blk = self.strides[k - 1];
        let n = self.gens[k - 1].degree();
        (0..n)
            .map(|i| {
                let lo = (i * blk).min(x.0.len());
                let hi = ((i + 1) * blk).min(x.0.len());
                self.from_coeffs(x.0[lo..hi].to_vec())
            })
            .collect()
    }

    /// Appends a generator without any irreducibility check. Used after the
    /// caller has certified the minimal polynomial by factorization.
    pub(crate) fn push_unchecked(
        &mut self,
        name: String,
        minpoly: Poly<TowerElement>,
        insep_exp: Option<u32>,
    ) {
        let d = minpoly.degree().expect("nonconstant minimal polynomial");
        debug_assert!(d >= 1);
        let last = self.degree();
        self.gens.push(Generator {
            name,
            minpoly,
            insep_exp,
        });
        self.strides.push(last * d);
    }

    /// Extends the tower by a root of `minpoly`, which must be monic,
    /// nonlinear-or-linear irreducible over the current tower. With
    /// `insep_exp = Some(k)` the polynomial must be `X^(p^k) - c`.
    pub fn extend(
        &self,
        name: &str,
        minpoly: Poly<TowerElement>,
        insep_exp: Option<u32>,
    ) -> Result<Tower> {
        self.check_new_name(name)?;
        let top = self.top();
        let ring = PolyRing::new(&top);
        let shown = self.format_poly(&minpoly);
        match minpoly.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => {
                return Err(Error::InvalidInput(format!(
                    "minimal polynomial {shown} is constant"
                )))
            }
            _ => {}
        }
        if !ring.is_monic(&minpoly) {
            return Err(Error::NotMonic(shown));
        }
        if minpoly.coeffs().iter().any(|c| !self.contains(c)) {
            return Err(Error::DomainMismatch(format!(
                "coefficients of {shown} lie outside the tower"
            )));
        }
        let insep_exp = match insep_exp {
            Some(k) => {
                self.check_purely_inseparable(&minpoly, k)?;
                Some(k)
            }
            None if ring.derivative(&minpoly).is_zero() => {
                match self.purely_inseparable_exponent(&minpoly) {
                    Some(k) => Some(k),
                    None => {
                        return Err(Error::Unsupported(format!(
                            "inseparable generator {shown} is not of the form X^(p^k) - c"
                        )))
                    }
                }
            }
            None => None,
        };
        if crate::factor::is_reducible_uncapped(&minpoly, self)? {
            return Err(Error::Reducible(format!(
                "{shown} over {}",
                self.describe()
            )));
        }
        let mut t = self.clone();
        t.push_unchecked(name.to_string(), minpoly, insep_exp);
        Ok(t)
    }

    fn check_new_name(&self, name: &str) -> Result<()> {
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || name == "x" || name == "t" {
            return Err(Error::InvalidInput(format!(
                "generator name {name:?} must be an identifier other than x and t"
            )));
        }
        if self.gen_index(name).is_some() {
            return Err(Error::InvalidInput(format!(
                "generator name {name:?} already used"
            )));
        }
        Ok(())
    }

    /// `k` when `m = X^(p^k) - c` with `k >= 1`.
    pub(crate) fn purely_inseparable_exponent(&self, m: &Poly<TowerElement>) -> Option<u32> {
        let p = self.base.characteristic();
        let n = m.degree()? as u64;
        if p == 0 || n < p || m.coeffs()[1..n as usize].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut k = 0;
        let mut q = 1u64;
        while q < n {
            q *= p;
            k += 1;
        }
        (q == n).then_some(k)
    }

    fn check_purely_inseparable(&self, m: &Poly<TowerElement>, k: u32) -> Result<()> {
        let p = self.base.characteristic();
        let shown = self.format_poly(m);
        if p == 0 {
            return Err(Error::InvalidInput(format!(
                "purely inseparable generator {shown} needs positive characteristic"
            )));
        }
        let q = crate::arith::big_pow(p, k);
        let ok = BigUint::from(m.degree().unwrap_or(0)) == q
            && m.coeffs()[1..m.len() - 1].iter().all(|c| c.is_zero());
        if !ok {
            return Err(Error::InvalidInput(format!(
                "{shown} is not of the form X^({p}^{k}) - c"
            )));
        }
        Ok(())
    }

    /// Short description such as `Q(a1, a2)`.
    pub fn describe(&self) -> String {
        if self.gens.is_empty() {
            self.base.name()
        } else {
            let names: Vec<&str> = self.gens.iter().map(|g| g.name.as_str()).collect();
            format!("{}({})", self.base.name(), names.join(", "))
        }
    }

    /// Applies the homomorphism fixing the base and sending generator `i` to
    /// `images[i]` (elements of `target`). Only the generators that `x`
    /// actually involves need images.
    pub fn map_element(
        &self,
        x: &TowerElement,
        target: &Tower,
        images: &[TowerElement],
    ) -> TowerElement {
        let k = self.level_of(x);
        assert!(images.len() >= k, "missing generator images");
        self.map_rec(&x.0, k, target, images)
    }

    fn map_rec(
        &self,
        x: &[Scalar],
        k: usize,
        target: &Tower,
        images: &[TowerElement],
    ) -> TowerElement {
        if x.is_empty() {
            return target.from_coeffs(Vec::new());
        }
        if k == 0 {
            return target.scalar(x[0].clone());
        }
        let blk = self.strides[k - 1];
        let tf = target.top();
        let mut acc = tf.zero();
        let blocks: Vec<&[Scalar]> = x.chunks(blk).collect();
        for b in blocks.iter().rev() {
            acc = tf.mul(&acc, &images[k - 1]);
            let img = self.map_rec(b, k - 1, target, images);
            acc = tf.add(&acc, &img);
        }
        acc
    }

    /// Maps every coefficient of `f` with [`Tower::map_element`].
    pub fn map_poly(
        &self,
        f: &Poly<TowerElement>,
        target: &Tower,
        images: &[TowerElement],
    ) -> Poly<TowerElement> {
        let tf = target.top();
        PolyRing::new(&tf).from_coeffs(
            f.coeffs()
                .iter()
                .map(|c| self.map_element(c, target, images))
                .collect(),
        )
    }

    /// Unique `y` with `y^p = a`, if it exists in the tower (characteristic
    /// `p > 0`).
    pub fn pth_root(&self, a: &TowerElement) -> Option<TowerElement> {
        self.pth_root_in(a, self.num_generators())
    }

    /// As [`Tower::pth_root`], but the root must lie in level `k`, which
    /// must contain `a`.
    pub fn pth_root_in(&self, a: &TowerElement, k: usize) -> Option<TowerElement> {
        let p = self.base.characteristic();
        assert!(p > 0, "p-th roots need positive characteristic");
        assert!(self.level_of(a) <= k, "element outside the level");
        let level = self.level(k);
        let dim = self.level_degree(k);
        match self.base {
            BaseField::Prime(_) => {
                // inverse Frobenius on a field of size p^D is x -> x^(p^(D-1))
                let e = crate::arith::big_pow(p, dim as u32 - 1);
                Some(level.pow(a, &e))
            }
            BaseField::RatFunc(fpt) => {
                // Semilinear system: y^p = sum_j w_j^p b_j^p. Coordinates are
                // taken over K^p with basis t^i b_l, which turns it into a
                // linear system for the w_j.
                let coords = |e: &TowerElement| -> Vec<Scalar> {
                    let mut out = Vec::with_capacity(dim * p as usize);
                    for l in 0..dim {
                        let c = match e.0.get(l) {
                            Some(Scalar::FpT(r)) => r.clone(),
                            Some(_) => unreachable!("F_p(t) tower holds F_p(t) scalars"),
                            None => fpt.zero(),
                        };
                        out.extend(fpt.frobenius_components(&c).into_iter().map(Scalar::FpT));
                    }
                    out
                };
                let mut span = SpanBasis::new(&self.base);
                for j in 0..dim {
                    let mut b = vec![self.base.zero(); j + 1];
                    b[j] = self.base.one();
                    let bj = self.from_coeffs(b);
                    let accepted = span.insert(&coords(&level.pow_u64(&bj, p)));
                    debug_assert!(accepted, "Frobenius images of a basis stay independent");
                }
                let w = span.express(&coords(a))?;
                Some(self.from_coeffs(w))
            }
            BaseField::Rationals => unreachable!(),
        }
    }

    fn blocks<'a>(&self, x: &'a [Scalar], k: usize) -> Vec<&'a [Scalar]> {
        if x.is_empty() {
            return Vec::new();
        }
        x.chunks(self.strides[k - 1]).collect()
    }

    fn add_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = a.len().max(b.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (a.get(i), b.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        while v.last().is_some_and(|c| self.base.is_zero(c)) {
            v.pop();
        }
        v
    }

    fn sub_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let nb: Vec<Scalar> = b.iter().map(|c| self.base.neg(c)).collect();
        self.add_vec(a, &nb)
    }

    fn mul_vec(&self, a: &[Scalar], b: &[Scalar], k: usize) -> Vec<Scalar> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        if k == 0 {
            let c = self.base.mul(&a[0], &b[0]);
            return if self.base.is_zero(&c) { Vec::new() } else { vec![c] };
        }
        let blk = self.strides[k - 1];
        // fast paths: one operand lies in the level below
        if a.len() <= blk {
            let out: Vec<Vec<Scalar>> = self
                .blocks(b, k)
                .iter()
                .map(|bb| self.mul_vec(a, bb, k - 1))
                .collect();
            return self.concat_blocks(out, blk);
        }
        if b.len() <= blk {
            return self.mul_vec(b, a, k);
        }
        let d = self.gens[k - 1].degree();
        let ab = self.blocks(a, k);
        let bb = self.blocks(b, k);
        let mut prod: Vec<Vec<Scalar>> = vec![Vec::new(); ab.len() + bb.len() - 1];
        for (i, x) in ab.iter().enumerate() {
            if x.is_empty() || x.iter().all(|c| self.base.is_zero(c)) {
                continue;
            }
            for (j, y) in bb.iter().enumerate() {
                let m = self.mul_vec(x, y, k - 1);
                if !m.is_empty() {
                    prod[i + j] = self.add_vec(&prod[i + j], &m);
                }
            }
        }
        let minpoly = &self.gens[k - 1].minpoly;
        for top in (d..prod.len()).rev() {
            if prod[top].is_empty() {
                continue;
            }
            let c = std::mem::take(&mut prod[top]);
            for (j, mj) in minpoly.coeffs()[..d].iter().enumerate() {
                if mj.is_zero() {
                    continue;
                }
                let sub = self.mul_vec(&c, &mj.0, k - 1);
                prod[top - d + j] = self.sub_vec(&prod[top - d + j], &sub);
            }
        }
        prod.truncate(d);
        self.concat_blocks(prod, blk)
    }

    fn concat_blocks(&self, blocks: Vec<Vec<Scalar>>, blk: usize) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(blocks.len() * blk);
        for mut b in blocks {
            b.resize(blk, self.base.zero());
            v.extend(b);
        }
        while v.last().is_some_and(|c| self.base.is_zero(c)) {
            v.pop();
        }
        v
    }

    fn inv_vec(&self, a: &[Scalar], k: usize) -> Option<Vec<Scalar>> {
        if a.is_empty() {
            return None;
        }
        if k == 0 {
            return self.base.inv(&a[0]).map(|c| vec![c]);
        }
        let blk = self.strides[k - 1];
        if a.len() <= blk {
            return self.inv_vec(a, k - 1);
        }
        if let BaseField::Rationals = self.base {
            if k >= 2 {
                return self.inv_vec_rational(a, k);
            }
        }
        let below = self.level(k - 1);
        let ring = PolyRing::new(&below);
        let f = ring.from_coeffs(
            self.blocks(a, k)
                .iter()
                .map(|b| self.from_coeffs(b.to_vec()))
                .collect(),
        );
        let (g, s, _) = ring.xgcd(&f, &self.gens[k - 1].minpoly);
        debug_assert!(g.degree() == Some(0), "minimal polynomial is irreducible");
        Some(self.concat_blocks(s.into_coeffs().into_iter().map(|e| e.0).collect(), blk))
    }
}

impl Tower {
    /// Inverse over a rational base by solving `a y = 1` with the
    /// multiplication matrix of `a`; this keeps intermediate numbers much
    /// smaller than nested extended gcds.
    fn inv_vec_rational(&self, a: &[Scalar], k: usize) -> Option<Vec<Scalar>> {
        let dim = self.strides[k];
        let q = |s: &Scalar| match s {
            Scalar::Q(r) => r.clone(),
            _ => unreachable!("rational coordinate"),
        };
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut e = vec![self.base.zero(); i + 1];
            e[i] = self.base.one();
            let mut col: Vec<BigRational> = self.mul_vec(a, &e, k).iter().map(q).collect();
            col.resize(dim, BigRational::zero());
            cols.push(col);
        }
        let rows: Vec<Vec<BigRational>> =
            (0..dim).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); dim];
        rhs[0] = BigRational::one();
        let y = solve_rational(&rows, &rhs)?;
        let mut out: Vec<Scalar> = y.into_iter().map(Scalar::Q).collect();
        while out.last().is_some_and(|c| self.base.is_zero(c)) {
            out.pop();
        }
        Some(out)
    }
}

impl Level<'_> {
    pub fn tower(&self) -> &Tower {
        self.tower
    }
    pub fn height(&self) -> usize {
        self.k
    }
    pub fn degree(&self) -> usize {
        self.tower.strides[self.k]
    }
    pub fn contains(&self, x: &TowerElement) -> bool {
        x.0.len() <= self.degree()
    }
}

impl Field for Level<'_> {
    type Elem = TowerElement;

    fn zero(&self) -> TowerElement {
        TowerElement(Vec::new())
    }
    fn one(&self) -> TowerElement {
        self.tower.from_int(1)
    }
    fn is_zero(&self, a: &TowerElement) -> bool {
        a.0.is_empty()
    }
    fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        TowerElement(self.tower.add_vec(&a.0, &b.0))
    }
    fn sub(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        TowerElement(self.tower.sub_vec(&a.0, &b.0))
    }
    fn neg(&self, a: &TowerElement) -> TowerElement {
        TowerElement(a.0.iter().map(|c| self.tower.base.neg(c)).collect())
    }
    fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        TowerElement(self.tower.mul_vec(&a.0, &b.0, self.k))
    }
    fn inv(&self, a: &TowerElement) -> Option<TowerElement> {
        self.tower.inv_vec(&a.0, self.k).map(TowerElement)
    }
    fn from_int(&self, n: i64) -> TowerElement {
        self.tower.from_int(n)
    }
    fn characteristic(&self) -> u64 {
        self.tower.base.characteristic()
    }
    fn size(&self) -> Option<BigUint> {
        self.tower
            .base
            .size()
            .map(|q| q.pow(self.tower.strides[self.k] as u32))
    }
}

#[cfg(test)]
mod tests;
