//! A presentation of the algebraic closure of a base field: an append-only
//! tower that grows whenever a root is requested that it does not contain
//! yet, with a registry recording the roots handed out for each polynomial.
//!
//! Root choice is deterministic. `adjoin_root` returns the first registered
//! root of the (monic) polynomial if there is one; otherwise it factors over
//! the current tower and returns the root of the canonically first linear
//! factor, or extends the tower by the canonically first nonlinear factor.
//! Because tower elements never change representation when the tower grows,
//! every element handed out stays valid and equal forever.

use crate::arith::{BaseField, Field, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::factor::{self, Factorization};
use crate::tower::{Tower, TowerDescriptor, TowerElement};
use serde::{Deserialize, Serialize};

/// Known roots of one polynomial, in the order they were discovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegistryEntry {
    pub poly: Poly<TowerElement>,
    pub roots: Vec<TowerElement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    tower: Tower,
    registry: Vec<RegistryEntry>,
}

/// JSON form of a closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureState {
    pub tower: TowerDescriptor,
    pub registry: Vec<RegistryState>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryState {
    pub poly: String,
    pub roots: Vec<String>,
}

impl Closure {
    pub fn new(base: BaseField) -> Closure {
        Closure::from_tower(Tower::new(base))
    }

    /// A closure whose initial tower is `tower`; each generator is registered
    /// as the first root of its minimal polynomial.
    pub fn from_tower(tower: Tower) -> Closure {
        let mut c = Closure {
            tower,
            registry: Vec::new(),
        };
        for i in 0..c.tower.num_generators() {
            let m = c.tower.generators()[i].minpoly().clone();
            c.record(&m, &[c.tower.gen(i)]);
        }
        c
    }

    /// Replaces the tower of a closure that has no generators yet by
    /// `tower` (over the same base), keeping the registry.
    pub fn rebase(&mut self, tower: Tower) -> Result<()> {
        if self.tower.num_generators() > 0 {
            return Err(Error::InvalidInput(
                "only a closure without generators can be rebased".into(),
            ));
        }
        if tower.base() != self.tower.base() {
            return Err(Error::DomainMismatch("closure and tower bases differ".into()));
        }
        let registry = std::mem::take(&mut self.registry);
        *self = Closure::from_tower(tower);
        for e in registry {
            self.record(&e.poly, &e.roots);
        }
        Ok(())
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn base(&self) -> &BaseField {
        self.tower.base()
    }

    pub fn degree(&self) -> usize {
        self.tower.degree()
    }

    pub fn registry(&self) -> &[RegistryEntry] {
        &self.registry
    }

    fn monic_input(&self, f: &Poly<TowerElement>) -> Result<Poly<TowerElement>> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.degree() == Some(0) {
            return Err(Error::InvalidInput("constant polynomial has no roots".into()));
        }
        if f.coeffs().iter().any(|c| !self.tower.contains(c)) {
            return Err(Error::DomainMismatch(
                "coefficients lie outside the closure".into(),
            ));
        }
        let top = self.tower.top();
        Ok(PolyRing::new(&top).monic(f))
    }

    fn lookup(&self, f: &Poly<TowerElement>) -> Option<&RegistryEntry> {
        self.registry.iter().find(|e| e.poly == *f)
    }

    fn record(&mut self, f: &Poly<TowerElement>, roots: &[TowerElement]) {
        let idx = match self.registry.iter().position(|e| e.poly == *f) {
            Some(i) => i,
            None => {
                self.registry.push(RegistryEntry {
                    poly: f.clone(),
                    roots: Vec::new(),
                });
                self.registry.len() - 1
            }
        };
        for r in roots {
            if !self.registry[idx].roots.contains(r) {
                self.registry[idx].roots.push(r.clone());
            }
        }
    }

    fn fresh_name(&self) -> String {
        let mut n = self.tower.num_generators() + 1;
        loop {
            let name = format!("a{n}");
            if self.tower.gen_index(&name).is_none() {
                return name;
            }
            n += 1;
        }
    }

    /// Adds a root of the monic irreducible `g` to the tower and returns it.
    /// A purely inseparable `g = X^(p^k) - c` gets the inseparable flag; any
    /// other `g(x) = h(x^(p^e))` is adjoined in two steps, a root `b` of the
    /// separable `h` and then the `p^e`-th root of `b`.
    fn grow(&mut self, g: &Poly<TowerElement>) -> Result<TowerElement> {
        let top = self.tower.top();
        let ring = PolyRing::new(&top);
        let p = self.tower.base().characteristic() as usize;
        if p > 0 && ring.derivative(g).is_zero() {
            if let Some(k) = self.tower.purely_inseparable_exponent(g) {
                return self.push(g.clone(), Some(k));
            }
            let mut q = p;
            while g.coeffs().iter().enumerate().all(|(i, c)| c.is_zero() || i % (q * p) == 0) {
                q *= p;
            }
            let h = ring.from_coeffs(g.coeffs().iter().step_by(q).cloned().collect());
            let b = self.push(h, None)?;
            let top = self.tower.top();
            let ring = PolyRing::new(&top);
            let m = ring.sub(&ring.monomial(top.one(), q), &ring.constant(b));
            let mut k = 0;
            let mut r = q;
            while r > 1 {
                r /= p;
                k += 1;
            }
            return self.push(m, Some(k));
        }
        self.push(g.clone(), None)
    }

    fn push(&mut self, g: Poly<TowerElement>, insep: Option<u32>) -> Result<TowerElement> {
        let name = self.fresh_name();
        self.tower.push_unchecked(name, g.clone(), insep);
        let r = self.tower.gen(self.tower.num_generators() - 1);
        self.record(&g, std::slice::from_ref(&r));
        Ok(r)
    }

    fn factor_here(&self, f: &Poly<TowerElement>) -> Result<Factorization> {
        factor::factor(f, &self.tower)
    }

    /// A root of `f`, growing the tower if necessary.
    pub fn adjoin_root(&mut self, f: &Poly<TowerElement>) -> Result<TowerElement> {
        let f = self.monic_input(f)?;
        if let Some(r) = self.lookup(&f).and_then(|e| e.roots.first()) {
            return Ok(r.clone());
        }
        let fac = self.factor_here(&f)?;
        let top = self.tower.top();
        let root = match fac.factors.iter().find(|(g, _)| g.degree() == Some(1)) {
            Some((g, _)) => top.neg(&g.coeffs()[0]),
            None => {
                let g = fac.factors[0].0.clone();
                self.grow(&g)?
            }
        };
        self.record(&f, std::slice::from_ref(&root));
        Ok(root)
    }

    /// All roots of `f` with multiplicities, after growing the tower until
    /// `f` splits. Previously registered roots of `f` come first, in
    /// registry order; new ones follow in canonical factor order.
    pub fn roots(&mut self, f: &Poly<TowerElement>) -> Result<Vec<(TowerElement, u32)>> {
        let f = self.monic_input(f)?;
        let fac = loop {
            let fac = self.factor_here(&f)?;
            match fac.factors.iter().find(|(g, _)| g.degree() != Some(1)) {
                Some((g, _)) => {
                    let g = g.clone();
                    self.grow(&g)?;
                }
                None => break fac,
            }
        };
        let top = self.tower.top();
        let mut found: Vec<(TowerElement, u32)> = fac
            .factors
            .iter()
            .map(|(g, m)| (top.neg(&g.coeffs()[0]), *m))
            .collect();
        let known = self.lookup(&f).map(|e| e.roots.clone()).unwrap_or_default();
        let mut out = Vec::with_capacity(found.len());
        for r in &known {
            if let Some(i) = found.iter().position(|(x, _)| x == r) {
                out.push(found.remove(i));
            }
        }
        out.extend(found);
        let list: Vec<TowerElement> = out.iter().map(|(r, _)| r.clone()).collect();
        self.record(&f, &list);
        Ok(out)
    }

    /// The unique `x` with `x^(p^k) = a`.
    pub fn pk_root(&mut self, a: &TowerElement, k: u32) -> Result<TowerElement> {
        let p = self.tower.base().characteristic();
        if p == 0 {
            return Err(Error::Unsupported(
                "p^k-th roots need positive characteristic".into(),
            ));
        }
        if k == 0 {
            return Ok(a.clone());
        }
        let q = crate::arith::big_pow(p, k);
        let q: usize = q
            .try_into()
            .map_err(|_| Error::CapExceeded("p^k too large".into()))?;
        let top = self.tower.top();
        let ring = PolyRing::new(&top);
        let f = ring.sub(&ring.monomial(top.one(), q), &ring.constant(a.clone()));
        let roots = self.roots(&f)?;
        debug_assert_eq!(roots.len(), 1, "purely inseparable polynomials have one root");
        Ok(roots[0].0.clone())
    }

    /// Roots in the closure of the minimal polynomial of `x` over the
    /// subfield generated by `gens`, with `x` first.
    pub fn conjugates(&mut self, x: &TowerElement, gens: &[TowerElement]) -> Result<Vec<TowerElement>> {
        let m = self.tower.minpoly(x, gens);
        let roots = self.roots(&m)?;
        let mut out = vec![x.clone()];
        out.extend(roots.into_iter().map(|(r, _)| r).filter(|r| r != x));
        Ok(out)
    }

    pub fn parse_poly(&self, s: &str) -> Result<Poly<TowerElement>> {
        self.tower.parse_poly(s)
    }

    pub fn parse_element(&self, s: &str) -> Result<TowerElement> {
        self.tower.parse_element(s)
    }

    pub fn state(&self) -> ClosureState {
        ClosureState {
            tower: self.tower.descriptor(),
            registry: self
                .registry
                .iter()
                .map(|e| RegistryState {
                    poly: self.tower.format_poly(&e.poly),
                    roots: e.roots.iter().map(|r| self.tower.format_element(r)).collect(),
                })
                .collect(),
        }
    }

    /// Restores a closure saved by [`Closure::state`].
    pub fn from_state(s: &ClosureState) -> Result<Closure> {
        let tower = Tower::from_descriptor_trusted(&s.tower)?;
        let mut registry = Vec::new();
        for e in &s.registry {
            registry.push(RegistryEntry {
                poly: tower.parse_poly(&e.poly)?,
                roots: e
                    .roots
                    .iter()
                    .map(|r| tower.parse_element(r))
                    .collect::<Result<_>>()?,
            });
        }
        Ok(Closure { tower, registry })
    }
}
