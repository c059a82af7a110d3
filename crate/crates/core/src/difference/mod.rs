//! Difference fields at finite scale: a tower with an endomorphism fixing
//! the base, given by the images of the generators.
//!
//! No model of a difference closed field is built. The witness for
//! embeddability of `(F, sigma)` into one is an automorphism `tau` of the
//! algebraic closure with `tau` restricted to `F` equal to `sigma`, returned
//! by [`dcf_embedding_criterion`] as a lazily extended map.

use crate::arith::{BaseField, Field, PolyRing, SpanBasis};
use crate::closure::Closure;
use crate::embed::{certify_normal, LazyFieldMap};
use crate::error::{Error, Result};
use crate::factor::{self, Caps};
use crate::tower::{Tower, TowerDescriptor, TowerElement};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceField {
    tower: Tower,
    sigma: Vec<TowerElement>,
    inversive: bool,
}

/// JSON form: a tower and the images of its generators, written over it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceFieldDescriptor {
    pub tower: TowerDescriptor,
    pub sigma: Vec<String>,
}

fn check_images(tower: &Tower, sigma: &[TowerElement]) -> Result<()> {
    if sigma.len() != tower.num_generators() {
        return Err(Error::InvalidInput(format!(
            "expected {} generator images, got {}",
            tower.num_generators(),
            sigma.len()
        )));
    }
    if let Some(i) = sigma.iter().position(|s| !tower.contains(s)) {
        return Err(Error::DomainMismatch(format!(
            "image of {} lies outside the field",
            tower.generators()[i].name()
        )));
    }
    Ok(())
}

/// Whether every image is a root of its generator's minimal polynomial with
/// the coefficients mapped by the images before it.
fn respects_minpolys(tower: &Tower, sigma: &[TowerElement]) -> bool {
    let top = tower.top();
    let ring = PolyRing::new(&top);
    (0..tower.num_generators()).all(|i| {
        let m = tower.map_poly(tower.generators()[i].minpoly(), tower, sigma);
        top.is_zero(&ring.eval(&m, &sigma[i]))
    })
}

/// Whether the images of the monomial basis span the tower over the base.
fn is_surjective(tower: &Tower, sigma: &[TowerElement]) -> bool {
    let base: &BaseField = tower.base();
    let mut span = SpanBasis::new(base);
    for idx in 0..tower.degree() {
        let mut v = vec![base.zero(); idx + 1];
        v[idx] = base.one();
        let x = tower.map_element(&tower.from_coeffs(v), tower, sigma);
        span.insert(x.coeffs());
    }
    span.len() == tower.degree()
}

/// True iff the generator images extend to an automorphism of the tower
/// fixing the base.
pub fn check_automorphism(tower: &Tower, sigma: &[TowerElement]) -> Result<bool> {
    check_images(tower, sigma)?;
    Ok(respects_minpolys(tower, sigma) && is_surjective(tower, sigma))
}

impl DifferenceField {
    /// Verifies that `sigma` defines an endomorphism; the inversive flag
    /// records surjectivity.
    pub fn new(tower: Tower, sigma: Vec<TowerElement>) -> Result<DifferenceField> {
        check_images(&tower, &sigma)?;
        if !respects_minpolys(&tower, &sigma) {
            return Err(Error::Verification(
                "sigma does not respect the minimal polynomials of the generators".into(),
            ));
        }
        let inversive = is_surjective(&tower, &sigma);
        Ok(DifferenceField {
            tower,
            sigma,
            inversive,
        })
    }

    /// The identity on `tower`.
    pub fn identity(tower: Tower) -> DifferenceField {
        let sigma = (0..tower.num_generators()).map(|i| tower.gen(i)).collect();
        DifferenceField {
            tower,
            sigma,
            inversive: true,
        }
    }

    pub fn from_descriptor(d: &DifferenceFieldDescriptor) -> Result<DifferenceField> {
        let tower = Tower::from_descriptor(&d.tower)?;
        let sigma = d
            .sigma
            .iter()
            .map(|s| tower.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        DifferenceField::new(tower, sigma)
    }

    pub fn from_json(s: &str) -> Result<DifferenceField> {
        let d: DifferenceFieldDescriptor =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("difference field JSON: {e}")))?;
        DifferenceField::from_descriptor(&d)
    }

    pub fn descriptor(&self) -> DifferenceFieldDescriptor {
        DifferenceFieldDescriptor {
            tower: self.tower.descriptor(),
            sigma: self.sigma.iter().map(|s| self.tower.format_element(s)).collect(),
        }
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn sigma(&self) -> &[TowerElement] {
        &self.sigma
    }

    pub fn is_inversive(&self) -> bool {
        self.inversive
    }

    pub fn apply(&self, x: &TowerElement) -> TowerElement {
        self.tower.map_element(x, &self.tower, &self.sigma)
    }

    /// Preimages of the generators, when `sigma` is onto.
    pub fn generator_preimages(&self) -> Option<Vec<TowerElement>> {
        if !self.inversive {
            return None;
        }
        let t = &self.tower;
        let base = t.base();
        let n = t.degree();
        let images: Vec<Vec<_>> = (0..n)
            .map(|idx| {
                let mut v = vec![base.zero(); idx + 1];
                v[idx] = base.one();
                let mut w = self.apply(&t.from_coeffs(v)).coeffs().to_vec();
                w.resize(n, base.zero());
                w
            })
            .collect();
        (0..t.num_generators())
            .map(|i| {
                // solve sum_j c_j images[j] = a_i as the kernel of [images | -a_i]
                let mut target = t.gen(i).coeffs().to_vec();
                target.resize(n, base.zero());
                let rows: Vec<Vec<_>> = (0..n)
                    .map(|r| {
                        let mut row: Vec<_> = (0..n).map(|j| images[j][r].clone()).collect();
                        row.push(base.neg(&target[r]));
                        row
                    })
                    .collect();
                let kernel = crate::arith::solve(base, &rows, n + 1);
                let v = kernel.into_iter().find(|v| !base.is_zero(&v[n]))?;
                let s = base.inv(&v[n])?;
                Some(t.from_coeffs(v[..n].iter().map(|c| base.mul(c, &s)).collect()))
            })
            .collect()
    }
}

/// The first field embedding `iota` of `sub` into `sup` over the base with
/// `beta(iota(a)) = iota(alpha(a))` on every generator, searching generator
/// by generator through the roots of the transported minimal polynomials in
/// canonical factor order. Returns the images of `sub`'s generators.
pub fn difference_embeds(sub: &DifferenceField, sup: &DifferenceField) -> Result<Option<Vec<TowerElement>>> {
    difference_embeds_with(sub, sup, &Caps::from_env())
}

pub fn difference_embeds_with(
    sub: &DifferenceField,
    sup: &DifferenceField,
    caps: &Caps,
) -> Result<Option<Vec<TowerElement>>> {
    if sub.tower.base() != sup.tower.base() {
        return Err(Error::DomainMismatch("the two difference fields have different bases".into()));
    }
    if sub.tower.degree() > sup.tower.degree() {
        return Err(Error::InvalidInput(format!(
            "the field of degree {} cannot embed into one of degree {}",
            sub.tower.degree(),
            sup.tower.degree()
        )));
    }
    let mut images = Vec::new();
    search(sub, sup, caps, &mut images)
}

fn commutes_on(sub: &DifferenceField, sup: &DifferenceField, images: &[TowerElement], i: usize) -> bool {
    let lhs = sup.apply(&images[i]);
    let rhs = sub.tower.map_element(&sub.sigma[i], &sup.tower, images);
    lhs == rhs
}

fn search(
    sub: &DifferenceField,
    sup: &DifferenceField,
    caps: &Caps,
    images: &mut Vec<TowerElement>,
) -> Result<Option<Vec<TowerElement>>> {
    let i = images.len();
    if i == sub.tower.num_generators() {
        return Ok(Some(images.clone()));
    }
    let m = sub.tower.map_poly(sub.tower.generators()[i].minpoly(), &sup.tower, images);
    let top = sup.tower.top();
    let roots: Vec<TowerElement> = factor::factor_with(&m, &sup.tower, caps)?
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| top.neg(&g.coeffs()[0]))
        .collect();
    for r in roots {
        images.push(r);
        // generators whose sigma-image involves only assigned generators can
        // be checked now
        let ok = (0..images.len())
            .filter(|&j| sub.tower.level_of(&sub.sigma[j]) <= images.len())
            .all(|j| commutes_on(sub, sup, images, j));
        if ok {
            if let Some(found) = search(sub, sup, caps, images)? {
                return Ok(Some(found));
            }
        }
        images.pop();
    }
    Ok(None)
}

/// The witness that `(F, sigma)` embeds into a difference closed field: an
/// automorphism `tau` of the closure extending `sigma`. The closure's tower
/// must start with the generators of `F` (a closure without generators is
/// rebased onto `F` first). When `F` is normal over the base the map is
/// built by [`LazyFieldMap::extend_automorphism`], otherwise as the lazy
/// extension of `sigma` viewed as an embedding of `F` into the closure.
pub fn dcf_embedding_criterion(d: &DifferenceField, mut closure: Closure) -> Result<LazyFieldMap> {
    if !check_automorphism(&d.tower, &d.sigma)? {
        return Err(Error::Verification("sigma is not an automorphism".into()));
    }
    if d.tower.base() != closure.base() {
        return Err(Error::DomainMismatch("difference field and closure bases differ".into()));
    }
    if closure.tower().num_generators() == 0 {
        closure.rebase(d.tower.clone())?;
    }
    let n = d.tower.num_generators();
    let ct = closure.tower();
    let prefix = n <= ct.num_generators()
        && (0..n).all(|i| {
            let (a, b) = (&ct.generators()[i], &d.tower.generators()[i]);
            a.minpoly() == b.minpoly() && a.insep_exp() == b.insep_exp()
        });
    if !prefix {
        return Err(Error::InvalidInput(
            "the closure tower must start with the generators of the difference field".into(),
        ));
    }
    if certify_normal(&d.tower).is_ok() {
        LazyFieldMap::extend_automorphism(closure, d.sigma.clone())
    } else {
        LazyFieldMap::self_map(closure, d.sigma.clone())
    }
}
