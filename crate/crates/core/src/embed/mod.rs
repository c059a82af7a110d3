//! Lazy extension of field embeddings to the algebraic closure.
//!
//! A [`LazyFieldMap`] starts from the images of the declared generators of a
//! field `F` and assigns images to further generators of its closure only
//! when a query needs them, in generator order. A separable generator is sent
//! to the first root, in the target closure's root order, of its minimal
//! polynomial transported through the images assigned so far. A purely
//! inseparable generator (root of `X^(p^k) - c`) has exactly one admissible
//! image, the `p^k`-th root of the image of `c`, and no choice is made.
//! Assignments are never revised, so answers to queries are permanent.

use crate::arith::{Field, Poly, PolyRing};
use crate::closure::Closure;
use crate::error::{Error, Result};
use crate::factor;
use crate::tower::{Tower, TowerElement};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    /// Image given as part of the initial data.
    Initial,
    Separable,
    Inseparable,
}

/// One logged assignment of a generator image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub generator: String,
    pub image: String,
    pub stage: Stage,
    /// No choice was available: the transported minimal polynomial had a
    /// single distinct root.
    pub forced: bool,
    /// Number of distinct admissible images.
    pub candidates: usize,
    /// Whether the generator is separable over the declared field.
    pub in_separable_closure: bool,
}

/// A partial field homomorphism from a source closure into a target
/// closure (or into itself), grown on demand.
#[derive(Clone, Debug)]
pub struct LazyFieldMap {
    source: Closure,
    target: Option<Closure>,
    declared: usize,
    images: Vec<TowerElement>,
    log: Vec<Assignment>,
}

impl LazyFieldMap {
    /// Extends `alpha` (images in `target` of the generators of `field`) to
    /// the closure of `field`.
    pub fn extend_embedding(field: Tower, alpha: Vec<TowerElement>, target: Closure) -> Result<Self> {
        if field.base() != target.base() {
            return Err(Error::DomainMismatch("source and target bases differ".into()));
        }
        let declared = field.num_generators();
        let mut m = LazyFieldMap {
            source: Closure::from_tower(field),
            target: Some(target),
            declared,
            images: Vec::new(),
            log: Vec::new(),
        };
        m.set_initial(alpha)?;
        Ok(m)
    }

    /// The endomorphism of `closure` that sends its first `sigma.len()`
    /// generators to `sigma` and extends lazily.
    pub fn self_map(closure: Closure, sigma: Vec<TowerElement>) -> Result<Self> {
        let declared = sigma.len();
        if declared > closure.tower().num_generators() {
            return Err(Error::InvalidInput("more images than generators".into()));
        }
        let mut m = LazyFieldMap {
            source: closure,
            target: None,
            declared,
            images: Vec::new(),
            log: Vec::new(),
        };
        m.set_initial(sigma)?;
        Ok(m)
    }

    /// Extends an automorphism `sigma` of the field `E` spanned by the first
    /// `sigma.len()` generators of `closure` (which must be normal over the
    /// base) to the whole closure.
    pub fn extend_automorphism(closure: Closure, sigma: Vec<TowerElement>) -> Result<Self> {
        let e = prefix_tower(closure.tower(), sigma.len());
        certify_normal(&e)?;
        if sigma.iter().any(|s| closure.tower().level_of(s) > sigma.len()) {
            return Err(Error::Verification(
                "sigma does not map the field into itself".into(),
            ));
        }
        LazyFieldMap::self_map(closure, sigma)
    }

    fn set_initial(&mut self, alpha: Vec<TowerElement>) -> Result<()> {
        if alpha.len() != self.declared {
            return Err(Error::InvalidInput(format!(
                "expected {} generator images, got {}",
                self.declared,
                alpha.len()
            )));
        }
        for (i, a) in alpha.into_iter().enumerate() {
            let gen = &self.source.tower().generators()[i];
            if !self.target().tower().contains(&a) {
                return Err(Error::DomainMismatch(format!(
                    "image of {} lies outside the target",
                    gen.name()
                )));
            }
            let m = self.transported_minpoly(i);
            let tt = self.target().tower().top();
            if !tt.is_zero(&PolyRing::new(&tt).eval(&m, &a)) {
                return Err(Error::Verification(format!(
                    "the image of {} is not a root of its transported minimal polynomial",
                    gen.name()
                )));
            }
            let name = gen.name().to_string();
            let image = self.target().tower().format_element(&a);
            self.images.push(a);
            self.log.push(Assignment {
                generator: name,
                image,
                stage: Stage::Initial,
                forced: false,
                candidates: 1,
                in_separable_closure: true,
            });
        }
        Ok(())
    }

    pub fn source(&self) -> &Closure {
        &self.source
    }

    /// Mutable access to the source closure, for adjoining elements that
    /// will later be queried.
    pub fn source_mut(&mut self) -> &mut Closure {
        &mut self.source
    }

    pub fn target(&self) -> &Closure {
        self.target.as_ref().unwrap_or(&self.source)
    }

    fn target_mut(&mut self) -> &mut Closure {
        self.target.as_mut().unwrap_or(&mut self.source)
    }

    pub fn is_self_map(&self) -> bool {
        self.target.is_none()
    }

    pub fn declared(&self) -> usize {
        self.declared
    }

    pub fn images(&self) -> &[TowerElement] {
        &self.images
    }

    pub fn log(&self) -> &[Assignment] {
        &self.log
    }

    fn transported_minpoly(&self, i: usize) -> Poly<TowerElement> {
        let m = self.source.tower().generators()[i].minpoly();
        self.source.tower().map_poly(m, self.target().tower(), &self.images)
    }

    fn assign_next(&mut self) -> Result<()> {
        let i = self.images.len();
        let gen = self.source.tower().generators()[i].clone();
        let transported = self.transported_minpoly(i);
        let in_sep = factor::sep_closure_member(
            self.source.tower(),
            &self.source.tower().gen(i),
            self.declared,
        );
        let (image, stage, candidates) = match gen.insep_exp() {
            Some(k) => {
                let c = self.target().tower().top().neg(&transported.coeffs()[0]);
                let r = self.target_mut().pk_root(&c, k)?;
                (r, Stage::Inseparable, 1)
            }
            None => {
                let roots = self.target_mut().roots(&transported)?;
                let n = roots.len();
                let pick = roots
                    .into_iter()
                    .map(|(r, _)| r)
                    .find(|r| !self.images.contains(r))
                    .ok_or_else(|| {
                        Error::Verification(format!(
                            "no admissible image for {} keeps the map injective",
                            gen.name()
                        ))
                    })?;
                (pick, Stage::Separable, n)
            }
        };
        self.log.push(Assignment {
            generator: gen.name().to_string(),
            image: self.target().tower().format_element(&image),
            stage,
            forced: candidates == 1,
            candidates,
            in_separable_closure: in_sep,
        });
        self.images.push(image);
        Ok(())
    }

    /// Image of an element of the source closure.
    pub fn image(&mut self, x: &TowerElement) -> Result<TowerElement> {
        if !self.source.tower().contains(x) {
            return Err(Error::DomainMismatch("element outside the source closure".into()));
        }
        let k = self.source.tower().level_of(x);
        while self.images.len() < k {
            self.assign_next()?;
        }
        Ok(self
            .source
            .tower()
            .map_element(x, self.target().tower(), &self.images[..k]))
    }

    /// Image of every coefficient of `f`.
    pub fn image_poly(&mut self, f: &Poly<TowerElement>) -> Result<Poly<TowerElement>> {
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| self.image(c))
            .collect::<Result<Vec<_>>>()?;
        let tt = self.target().tower().top();
        Ok(PolyRing::new(&tt).from_coeffs(coeffs))
    }

    /// Checks that the assignments made so far agree with a previously
    /// recorded log, assigning further generators as needed.
    pub fn replay(&mut self, log: &[Assignment]) -> Result<()> {
        for (i, want) in log.iter().enumerate() {
            if i == self.log.len() {
                if i >= self.source.tower().num_generators() {
                    return Err(Error::Verification(format!(
                        "log mentions generator {} which the source does not have",
                        want.generator
                    )));
                }
                self.assign_next()?;
            }
            if self.log[i] != *want {
                return Err(Error::Verification(format!(
                    "replay diverges at generator {}: {} instead of {}",
                    want.generator, self.log[i].image, want.image
                )));
            }
        }
        Ok(())
    }
}

/// The tower of the first `k` generators.
pub fn prefix_tower(t: &Tower, k: usize) -> Tower {
    let mut d = t.descriptor();
    d.gens.truncate(k);
    Tower::from_descriptor_trusted(&d).expect("prefix of a valid tower")
}

/// Normality: the minimal polynomial over the base of every generator splits
/// into linear factors over the tower.
pub fn certify_normal(e: &Tower) -> Result<()> {
    for i in 0..e.num_generators() {
        let m = e.minpoly(&e.gen(i), &[]);
        let f = factor::factor_with(&m, e, &factor::Caps::unlimited())?;
        if f.factors.iter().any(|(g, _)| g.degree() != Some(1)) {
            return Err(Error::Verification(format!(
                "{} is not normal: the minimal polynomial {} of {} does not split",
                e.describe(),
                e.format_poly(&m),
                e.generators()[i].name()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
