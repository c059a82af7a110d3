//! Maximal chains of normal extensions between a normal field and the
//! normal closure of a new element over it.

use super::{galois_group, subfield_primitive, GaloisData};
use crate::closure::Closure;
use crate::embed::certify_normal;
use crate::error::Result;
use crate::arith::Poly;
use crate::tower::{Tower, TowerElement};

/// `T = K_0 ⊊ K_1 ⊊ ... ⊊ K_m = E` with every `K_i` normal over the base
/// and no normal extension of the base strictly between neighbours.
#[derive(Clone, Debug)]
pub struct NormalChain {
    /// `Gal(E/base)`, with `E` the tower of the grown closure.
    pub galois: GaloisData,
    /// The root of the input polynomial adjoined to `T`.
    pub root: TowerElement,
    /// `Gal(E/K_i)` for `i = 0..=m`.
    pub subgroups: Vec<Vec<usize>>,
    /// A primitive element of `K_i` over the base and its minimal
    /// polynomial, for `i = 1..=m`.
    pub fields: Vec<(TowerElement, Poly<TowerElement>)>,
}

impl NormalChain {
    pub fn tower(&self) -> &Tower {
        self.galois.tower()
    }
}

/// Adjoins a root `x` of `f` to the normal tower `t`, then all conjugates
/// of `x` over the base, and reads a maximal chain of normal subgroups of
/// the resulting Galois group off its normal subgroup lattice, taking the
/// largest (then lexicographically first) maximal normal subgroup at each
/// step.
pub fn normal_chain(t: &Tower, f: &Poly<TowerElement>) -> Result<NormalChain> {
    certify_normal(t)?;
    let mut closure = Closure::from_tower(t.clone());
    let x = closure.adjoin_root(f)?;
    let m = closure.tower().minpoly(&x, &[]);
    closure.roots(&m)?;
    let e = closure.tower().clone();
    let galois = galois_group(&e, 0)?;
    let group = galois.group();
    let t_gens: Vec<TowerElement> = (0..t.num_generators()).map(|i| e.gen(i)).collect();
    let top_group = galois.fixing_subgroup(&t_gens);
    let normals = group.normal_subgroups()?;
    let mut subgroups = vec![top_group];
    loop {
        let current = subgroups.last().expect("chain starts with Gal(E/T)");
        if current.len() == 1 {
            break;
        }
        let next = normals
            .iter()
            .filter(|n| n.len() < current.len() && n.iter().all(|a| current.binary_search(a).is_ok()))
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
            .expect("the trivial subgroup is normal")
            .clone();
        subgroups.push(next);
    }
    let mut fields = Vec::new();
    for h in &subgroups[1..] {
        let mut gens = t_gens.clone();
        gens.extend(galois.fixed_field(h)?);
        fields.push(subfield_primitive(&e, &gens)?);
    }
    Ok(NormalChain {
        galois,
        root: x,
        subgroups,
        fields,
    })
}
