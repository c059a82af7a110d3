//! Galois groups of finite normal separable extensions, computed from a
//! primitive element: every automorphism is fixed by the root of the
//! primitive element's minimal polynomial it sends that element to.
//!
//! The extension is a tower `E` over the field `F` spanned by its first
//! `base_level` generators. Group element 0 is the identity; the others
//! follow the canonical order of the linear factors of the minimal
//! polynomial of the primitive element over `E`.

mod chain;
mod incompatible;

pub use chain::{normal_chain, NormalChain};
pub use incompatible::{incompatible_extension, IncompatibleSearch};

use crate::arith::{solve, BaseField, Field, Poly, PolyRing, Scalar};
use crate::error::{Error, Result};
use crate::factor::{self, Caps};
use crate::groups::FiniteGroup;
use crate::tower::{poly_cmp, Tower, TowerElement};

/// `Gal(E/F)` with its action on the generators of `E`.
#[derive(Clone, Debug)]
pub struct GaloisData {
    tower: Tower,
    base_level: usize,
    primitive: TowerElement,
    minpoly: Poly<TowerElement>,
    group: FiniteGroup,
    action: Vec<Vec<TowerElement>>,
}

fn base_gens(tower: &Tower, k: usize) -> Vec<TowerElement> {
    (0..k).map(|i| tower.gen(i)).collect()
}

/// `y = g_1 + c g_2 + c^2 g_3 + ...` for the given `c`.
fn combination(tower: &Tower, gens: &[TowerElement], c: &Scalar) -> TowerElement {
    let top = tower.top();
    let c = tower.scalar(c.clone());
    let mut acc = top.zero();
    let mut w = top.one();
    for g in gens {
        acc = top.add(&acc, &top.mul(&w, g));
        w = top.mul(&w, &c);
    }
    acc
}

/// The `i`-th coefficient tried in primitive element searches (`1, 2, 3,
/// ...`), or `None` once a finite base is exhausted.
fn search_coefficient(base: &BaseField, i: usize) -> Option<Scalar> {
    match base {
        BaseField::Rationals => Some(base.from_int(i as i64 + 1)),
        BaseField::Prime(f) => ((i as u64) + 1 < f.modulus()).then(|| base.from_int(i as i64 + 1)),
        BaseField::RatFunc(_) => base.small_elements(i + 1).pop(),
    }
}

/// An element generating the same field over level `base_level` as
/// `gens`, with its minimal polynomial over that level. `dim` is the degree
/// of the generated field over the level.
fn primitive_of(
    tower: &Tower,
    gens: &[TowerElement],
    base_level: usize,
    dim: usize,
) -> Option<(TowerElement, Poly<TowerElement>)> {
    let below = base_gens(tower, base_level);
    let accept = |y: TowerElement| {
        let m = tower.minpoly(&y, &below);
        (m.degree() == Some(dim)).then_some((y, m))
    };
    if gens.is_empty() {
        return accept(tower.from_int(0));
    }
    if gens.len() == 1 {
        return accept(gens[0].clone());
    }
    let mut i = 0;
    while let Some(c) = search_coefficient(tower.base(), i) {
        if let Some(found) = accept(combination(tower, gens, &c)) {
            return Some(found);
        }
        i += 1;
    }
    // a finite field is simple over every subfield: enumerate the elements
    let p = tower.base().characteristic();
    let n = tower.degree();
    let sub = tower.subfield(gens);
    let mut code: u64 = 1;
    loop {
        let mut digits = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            digits.push(tower.base().from_int((c % p) as i64));
            c /= p;
        }
        if c > 0 {
            return None;
        }
        let z = tower.from_coeffs(digits);
        if sub.contains(&z) {
            if let Some(found) = accept(z) {
                return Some(found);
            }
        }
        code += 1;
    }
}

fn check_separable(tower: &Tower, base_level: usize) -> Result<()> {
    let below = base_gens(tower, base_level);
    for i in base_level..tower.num_generators() {
        if !factor::is_separable_element(tower, &tower.gen(i), &below) {
            return Err(Error::InvalidInput(format!(
                "the extension is not separable: {} is inseparable over the base",
                tower.generators()[i].name()
            )));
        }
    }
    Ok(())
}

fn check_level(tower: &Tower, base_level: usize) -> Result<()> {
    if base_level > tower.num_generators() {
        return Err(Error::InvalidInput(format!(
            "base level {base_level} exceeds the {} generators of the tower",
            tower.num_generators()
        )));
    }
    Ok(())
}

/// A primitive element of the tower over the field of its first
/// `base_level` generators, tried as `a + c b + c^2 d + ...` over the
/// remaining generators for `c = 1, 2, 3, ...`.
pub fn primitive_element(tower: &Tower, base_level: usize) -> Result<(TowerElement, Poly<TowerElement>)> {
    check_level(tower, base_level)?;
    check_separable(tower, base_level)?;
    let gens: Vec<TowerElement> = (base_level..tower.num_generators()).map(|i| tower.gen(i)).collect();
    let dim = tower.degree() / tower.level_degree(base_level);
    primitive_of(tower, &gens, base_level, dim)
        .ok_or_else(|| Error::Verification("no primitive element found".into()))
}

/// A primitive element over the base of the subfield generated by `gens`,
/// with its minimal polynomial over the base.
pub fn subfield_primitive(tower: &Tower, gens: &[TowerElement]) -> Result<(TowerElement, Poly<TowerElement>)> {
    let dim = tower.subfield(gens).dim();
    primitive_of(tower, gens, 0, dim).ok_or_else(|| Error::Verification("no primitive element found".into()))
}

/// The subfield generated by `gens` as a tower with the single generator
/// `name`, together with the element of `tower` that `name` stands for.
pub fn subfield_tower(tower: &Tower, gens: &[TowerElement], name: &str) -> Result<(Tower, TowerElement)> {
    let (y, m) = subfield_primitive(tower, gens)?;
    let mut t = Tower::new(*tower.base());
    if m.degree() == Some(1) {
        return Ok((t, y));
    }
    let coeffs = m
        .coeffs()
        .iter()
        .map(|c| tower.as_scalar(c).map(|s| t.scalar(s)))
        .collect::<Option<Vec<_>>>()
        .expect("minimal polynomial over the base");
    let top = t.top();
    let m = PolyRing::new(&top).from_coeffs(coeffs);
    t = t.extend(name, m, None)?;
    Ok((t, y))
}

/// `Gal(E/F)` for `E = tower` and `F` its first `base_level` generators.
/// Normality is certified by splitting the minimal polynomial of every
/// generator over `F` inside `E`.
pub fn galois_group(tower: &Tower, base_level: usize) -> Result<GaloisData> {
    galois_group_with(tower, base_level, &Caps::from_env())
}

pub fn galois_group_with(tower: &Tower, base_level: usize, caps: &Caps) -> Result<GaloisData> {
    check_level(tower, base_level)?;
    let (y, m) = primitive_element(tower, base_level)?;
    let below = base_gens(tower, base_level);
    for i in base_level..tower.num_generators() {
        let g = tower.minpoly(&tower.gen(i), &below);
        let f = factor::factor_with(&g, tower, caps)?;
        if f.factors.iter().any(|(h, _)| h.degree() != Some(1)) {
            return Err(Error::Verification(format!(
                "the extension is not normal: {} does not split",
                tower.format_poly(&g)
            )));
        }
    }
    // Every automorphism is found by sending each generator in turn to a
    // root in E of its minimal polynomial transported through the images
    // already chosen; the roots of m in E are then the images of y.
    let mut found: Vec<Vec<TowerElement>> = Vec::new();
    let mut partial = below.clone();
    embeddings(tower, caps, &mut partial, &mut found)?;
    if found.len() != tower.degree() / tower.level_degree(base_level) {
        return Err(Error::Verification(format!(
            "found {} automorphisms for an extension of degree {}",
            found.len(),
            tower.degree() / tower.level_degree(base_level)
        )));
    }
    let top = tower.top();
    let ring = PolyRing::new(&top);
    let mut action: Vec<(Poly<TowerElement>, Vec<TowerElement>)> = found
        .into_iter()
        .map(|images| {
            let r = tower.map_element(&y, tower, &images);
            (ring.linear(&r), images)
        })
        .collect();
    for (lin, _) in &action {
        if !ring.divides(lin, &m) {
            return Err(Error::Verification("an automorphism does not map y to a root of its minimal polynomial".into()));
        }
    }
    // canonical factor order of the linear factors x - r, identity first
    action.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    let pos = action.iter().position(|(_, a)| *a == (0..tower.num_generators()).map(|i| tower.gen(i)).collect::<Vec<_>>()).expect("identity");
    let id = action.remove(pos);
    action.insert(0, id);
    let action: Vec<Vec<TowerElement>> = action.into_iter().map(|(_, a)| a).collect();
    let n = action.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let composed: Vec<TowerElement> =
                action[j].iter().map(|z| tower.map_element(z, tower, &action[i])).collect();
            table[i][j] = action
                .iter()
                .position(|a| *a == composed)
                .ok_or_else(|| Error::Verification("automorphisms are not closed under composition".into()))?;
        }
    }
    let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect();
    let group = FiniteGroup::from_table(table, Some(labels))?;
    Ok(GaloisData {
        tower: tower.clone(),
        base_level,
        primitive: y,
        minpoly: m,
        group,
        action,
    })
}

impl GaloisData {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn base_level(&self) -> usize {
        self.base_level
    }

    pub fn primitive(&self) -> &TowerElement {
        &self.primitive
    }

    /// Minimal polynomial of the primitive element over the base.
    pub fn minpoly(&self) -> &Poly<TowerElement> {
        &self.minpoly
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Images of all generators of the tower under element `g`.
    pub fn action(&self, g: usize) -> &[TowerElement] {
        &self.action[g]
    }

    pub fn apply(&self, g: usize, x: &TowerElement) -> TowerElement {
        self.tower.map_element(x, &self.tower, &self.action[g])
    }

    /// The element acting on the generators as `images` does, if any.
    pub fn element_with_action(&self, images: &[TowerElement]) -> Option<usize> {
        self.action.iter().position(|a| a == images)
    }

    /// Elements fixing every element of `gens`.
    pub fn fixing_subgroup(&self, gens: &[TowerElement]) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| gens.iter().all(|z| self.apply(g, z) == *z))
            .collect()
    }

    /// Elements agreeing with `images` on `gens`.
    pub fn elements_extending(&self, gens: &[TowerElement], images: &[TowerElement]) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| gens.iter().zip(images).all(|(z, w)| self.apply(g, z) == *w))
            .collect()
    }

    /// Whether the field generated over the base by `gens` is mapped into
    /// itself by every automorphism.
    pub fn is_normal_subfield(&self, gens: &[TowerElement]) -> bool {
        let mut all = base_gens(&self.tower, self.base_level);
        all.extend(gens.iter().cloned());
        let sub = self.tower.subfield(&all);
        (0..self.group.order()).all(|g| gens.iter().all(|z| sub.contains(&self.apply(g, z))))
    }

    /// Generators over the base of the field fixed by the subgroup `h`,
    /// found as the kernel of `sigma - 1` for `sigma` in `h` over the
    /// monomial basis. Each generator has its average over the group
    /// subtracted when the characteristic allows, so a quadratic fixed field
    /// is generated by a square root.
    pub fn fixed_field(&self, h: &[usize]) -> Result<Vec<TowerElement>> {
        let mut h = h.to_vec();
        h.sort_unstable();
        h.dedup();
        if !self.group.is_subgroup(&h) {
            return Err(Error::InvalidInput("the given elements do not form a subgroup".into()));
        }
        let t = &self.tower;
        let base = t.base();
        let n = t.degree();
        let unit = |idx: usize| {
            let mut v = vec![base.zero(); idx + 1];
            v[idx] = base.one();
            t.from_coeffs(v)
        };
        let coords = |x: &TowerElement| {
            let mut v = x.coeffs().to_vec();
            v.resize(n, base.zero());
            v
        };
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for &g in h.iter().filter(|&&g| g != self.group.identity()) {
            let cols: Vec<Vec<Scalar>> = (0..n).map(|c| coords(&self.apply(g, &unit(c)))).collect();
            for r in 0..n {
                rows.push(
                    (0..n)
                        .map(|c| if r == c { base.sub(&cols[c][r], &base.one()) } else { cols[c][r].clone() })
                        .collect(),
                );
            }
        }
        let kernel = solve(base, &rows, n);
        if kernel.len() * h.len() != n {
            return Err(Error::Verification(format!(
                "fixed field has dimension {} but the subgroup has index {}",
                kernel.len(),
                n / h.len()
            )));
        }
        let order = self.group.order() as u64;
        let p = base.characteristic();
        let top = t.top();
        let scale = if p == 0 || !order.is_multiple_of(p) {
            Some(t.scalar(base.inv(&base.from_int(order as i64)).expect("order is invertible")))
        } else {
            None
        };
        let target = n / h.len();
        let mut gens = base_gens(t, self.base_level);
        let first = gens.len();
        for v in kernel {
            if t.subfield(&gens).dim() == target {
                break;
            }
            let z = t.from_coeffs(v);
            if t.subfield(&gens).contains(&z) {
                continue;
            }
            let z = match &scale {
                Some(s) => {
                    let mut sum = top.zero();
                    for g in 0..self.group.order() {
                        sum = top.add(&sum, &self.apply(g, &z));
                    }
                    top.sub(&z, &top.mul(s, &sum))
                }
                None => z,
            };
            gens.push(z);
        }
        let gens = gens.split_off(first);
        if self.group.is_normal(&h) && !self.is_normal_subfield(&gens) {
            return Err(Error::Verification("fixed field of a normal subgroup is not normal".into()));
        }
        Ok(gens)
    }
}

fn embeddings(
    tower: &Tower,
    caps: &Caps,
    partial: &mut Vec<TowerElement>,
    found: &mut Vec<Vec<TowerElement>>,
) -> Result<()> {
    let i = partial.len();
    if i == tower.num_generators() {
        found.push(partial.clone());
        return Ok(());
    }
    let m = tower.map_poly(tower.generators()[i].minpoly(), tower, partial);
    let top = tower.top();
    for (h, _) in factor::factor_with(&m, tower, caps)?.factors {
        if h.degree() == Some(1) {
            partial.push(top.neg(&h.coeffs()[0]));
            embeddings(tower, caps, partial, found)?;
            partial.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
