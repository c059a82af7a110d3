//! Automorphisms of a normal extension that extend a given automorphism of
//! one normal subfield and admit no compatible embedding of another
//! difference subfield.
//!
//! With `N` fixing `K1`, `M` fixing `K2`, `g1` extending `sigma` and `g2`
//! extending `tau`, the embeddings of `K2` into `E` are the restrictions of
//! the group elements `z`, and such an embedding commutes `h` with `tau`
//! exactly when `z^-1 h z ∈ g2 M`. The search runs over `h ∈ g1 N`.

use super::{galois_group, subfield_tower, GaloisData};
use crate::difference::{difference_embeds, DifferenceField};
use crate::error::{Error, Result};
use crate::tower::{Tower, TowerElement};

#[derive(Clone, Debug)]
pub struct IncompatibleSearch {
    pub galois: GaloisData,
    /// Fixer of `K2`.
    pub m: Vec<usize>,
    /// Fixer of `K1`.
    pub n: Vec<usize>,
    /// `NM`, the fixer of `K1 ∩ K2`.
    pub nm: Vec<usize>,
    pub g1: usize,
    pub g2: usize,
    /// The automorphism found, if any.
    pub alpha: Option<usize>,
}

impl IncompatibleSearch {
    /// Images of the generators of `E` under the automorphism found.
    pub fn alpha_images(&self) -> Option<&[TowerElement]> {
        self.alpha.map(|a| self.galois.action(a))
    }
}

/// Searches for `alpha` as described in the module documentation. `k1` and
/// `k2` generate normal subfields of `e` over the base with `K2 ⊄ K1`;
/// `sigma` and `tau` are the images of those generators. When an `alpha` is
/// found, the absence of a difference embedding of `(K2, tau)` into
/// `(E, alpha)` is re-checked by exhaustive search over field embeddings.
pub fn incompatible_extension(
    e: &Tower,
    k1: &[TowerElement],
    sigma: &[TowerElement],
    k2: &[TowerElement],
    tau: &[TowerElement],
) -> Result<IncompatibleSearch> {
    for (gens, images, name) in [(k1, sigma, "K1"), (k2, tau, "K2")] {
        if gens.len() != images.len() {
            return Err(Error::InvalidInput(format!(
                "{name} has {} generators but {} images",
                gens.len(),
                images.len()
            )));
        }
        if gens.iter().chain(images).any(|x| !e.contains(x)) {
            return Err(Error::DomainMismatch(format!("{name} data lies outside E")));
        }
    }
    let galois = galois_group(e, 0)?;
    let group = galois.group();
    let n = galois.fixing_subgroup(k1);
    let m = galois.fixing_subgroup(k2);
    for (sub, name) in [(&n, "K1"), (&m, "K2")] {
        if !group.is_normal(sub) {
            return Err(Error::InvalidInput(format!("{name} is not normal over the base")));
        }
    }
    if n.iter().all(|a| m.binary_search(a).is_ok()) {
        return Err(Error::InvalidInput("K2 is contained in K1".into()));
    }
    let g1 = *galois
        .elements_extending(k1, sigma)
        .first()
        .ok_or_else(|| Error::InvalidInput("sigma is not an automorphism of K1 over the base".into()))?;
    let g2 = *galois
        .elements_extending(k2, tau)
        .first()
        .ok_or_else(|| Error::InvalidInput("tau is not an automorphism of K2 over the base".into()))?;
    let mut both = n.clone();
    both.extend(&m);
    let nm = group.generated(&both);
    let g2m = group.coset(g2, &m);
    let alpha = group
        .coset(g1, &n)
        .into_iter()
        .find(|&h| (0..group.order()).all(|x| g2m.binary_search(&group.conjugate(h, x)).is_err()));
    let search = IncompatibleSearch {
        galois,
        m,
        n,
        nm,
        g1,
        g2,
        alpha,
    };
    if let Some(a) = search.alpha {
        let tau_k2 = if e.subfield(k2).dim() == e.degree() {
            DifferenceField::new(e.clone(), search.galois.action(g2).to_vec())?
        } else {
            let (kt, y) = subfield_tower(e, k2, "b")?;
            let ty = search.galois.apply(g2, &y);
            let expr = e
                .subfield(std::slice::from_ref(&y))
                .express(&ty)
                .expect("tau maps K2 into itself");
            DifferenceField::new(kt.clone(), vec![expr.evaluate(&kt, &[kt.gen(0)])])?
        };
        let e_alpha = DifferenceField::new(e.clone(), search.galois.action(a).to_vec())?;
        if difference_embeds(&tau_k2, &e_alpha)?.is_some() {
            return Err(Error::Verification(
                "the automorphism found admits a difference embedding of (K2, tau)".into(),
            ));
        }
    }
    Ok(search)
}
