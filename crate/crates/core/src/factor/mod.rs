//! Splitting algorithms: complete factorization over `Q`, `F_p`, `F_p(t)`
//! and over towers of these, reducibility, and separability.
//!
//! A polynomial is first made monic and split into a separable squarefree
//! part (`f / gcd(f, f')`), whose multiplicities are found by repeated
//! division, and a remainder with zero derivative. The remainder is `g(x^p)`;
//! each irreducible `h` of `g` gives either the irreducible `h(x^p)` or, when
//! every coefficient of `h` is a `p`-th power, `r^p` with `r` the
//! coefficientwise `p`-th root.
//!
//! Separable squarefree parts are factored by Zassenhaus's method over `Q`,
//! by Cantor–Zassenhaus over any finite field (including finite towers), by
//! divisor search over `F_p(t)`, and over a tower level by reduction to the
//! level below (see `norm`).

mod finite;
mod norm;
mod ratfunc;
mod rational;

use crate::arith::{BaseField, Field, Poly, PolyRing, Scalar};
use crate::error::{Error, Result};
use crate::tower::{poly_cmp, Tower, TowerElement};
use rand::Rng;

/// `unit * prod(factor^mult)`, factors monic irreducible, pairwise distinct,
/// sorted by degree and then coefficients from the leading one down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: TowerElement,
    pub factors: Vec<(Poly<TowerElement>, u32)>,
}

impl Factorization {
    /// True for a single irreducible factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiplies the factorization back out.
    pub fn expand(&self, tower: &Tower) -> Poly<TowerElement> {
        let top = tower.top();
        let ring = PolyRing::new(&top);
        self.factors.iter().fold(ring.constant(self.unit.clone()), |acc, (f, m)| {
            ring.mul(&acc, &ring.pow(f, *m))
        })
    }
}

/// Degree caps applied to public factorization requests. Internal
/// reductions (norms, certification of minimal polynomials) are uncapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Over `Q` or `F_p` itself.
    pub base_degree: usize,
    /// Over a tower with at least one generator.
    pub tower_degree: usize,
    /// `x`-degree over `F_p(t)`.
    pub ratfunc_x_degree: usize,
    /// `t`-degree (numerator or denominator) of coefficients over `F_p(t)`.
    pub ratfunc_t_degree: usize,
}

pub const BASE_DEGREE_CAP_VAR: &str = "FIELDTOWER_BASE_DEGREE_CAP";
pub const TOWER_DEGREE_CAP_VAR: &str = "FIELDTOWER_TOWER_DEGREE_CAP";

impl Default for Caps {
    fn default() -> Self {
        Caps {
            base_degree: 24,
            tower_degree: 8,
            ratfunc_x_degree: 3,
            ratfunc_t_degree: 3,
        }
    }
}

impl Caps {
    /// Defaults, with the base and tower degree caps overridable through
    /// `FIELDTOWER_BASE_DEGREE_CAP` and `FIELDTOWER_TOWER_DEGREE_CAP`.
    pub fn from_env() -> Caps {
        let read = |var: &str, default: usize| {
            std::env::var(var)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        let d = Caps::default();
        Caps {
            base_degree: read(BASE_DEGREE_CAP_VAR, d.base_degree),
            tower_degree: read(TOWER_DEGREE_CAP_VAR, d.tower_degree),
            ..d
        }
    }

    pub fn unlimited() -> Caps {
        Caps {
            base_degree: usize::MAX,
            tower_degree: usize::MAX,
            ratfunc_x_degree: usize::MAX,
            ratfunc_t_degree: usize::MAX,
        }
    }

    fn check(&self, f: &Poly<TowerElement>, tower: &Tower) -> Result<()> {
        let n = f.degree().unwrap_or(0);
        let exceeded = |what: String| Err(Error::CapExceeded(what));
        if tower.num_generators() > 0 {
            if n > self.tower_degree {
                return exceeded(format!(
                    "degree {n} exceeds the tower cap {}",
                    self.tower_degree
                ));
            }
            return Ok(());
        }
        match tower.base() {
            BaseField::RatFunc(k) => {
                if n > self.ratfunc_x_degree {
                    return exceeded(format!(
                        "x-degree {n} exceeds the F_p(t) cap {}",
                        self.ratfunc_x_degree
                    ));
                }
                let height = f
                    .coeffs()
                    .iter()
                    .filter_map(|c| match tower.as_scalar(c) {
                        Some(Scalar::FpT(r)) => Some(k.height(&r)),
                        _ => None,
                    })
                    .max()
                    .unwrap_or(0);
                if height > self.ratfunc_t_degree {
                    return exceeded(format!(
                        "t-degree {height} exceeds the F_p(t) cap {}",
                        self.ratfunc_t_degree
                    ));
                }
                Ok(())
            }
            _ if n > self.base_degree => exceeded(format!(
                "degree {n} exceeds the base cap {}",
                self.base_degree
            )),
            _ => Ok(()),
        }
    }
}

fn check_domain(f: &Poly<TowerElement>, tower: &Tower) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.coeffs().iter().any(|c| !tower.contains(c)) {
        return Err(Error::DomainMismatch(
            "coefficients lie outside the tower".into(),
        ));
    }
    Ok(())
}

/// Complete factorization over the whole tower, under [`Caps::from_env`].
pub fn factor(f: &Poly<TowerElement>, tower: &Tower) -> Result<Factorization> {
    factor_with(f, tower, &Caps::from_env())
}

pub fn factor_with(f: &Poly<TowerElement>, tower: &Tower, caps: &Caps) -> Result<Factorization> {
    check_domain(f, tower)?;
    caps.check(f, tower)?;
    Ok(factor_level(tower, tower.num_generators(), f))
}

/// Whether `f` (degree at least one) factors nontrivially over the tower.
pub fn is_reducible(f: &Poly<TowerElement>, tower: &Tower) -> Result<bool> {
    reducible_with(f, tower, &Caps::from_env())
}

pub(crate) fn is_reducible_uncapped(f: &Poly<TowerElement>, tower: &Tower) -> Result<bool> {
    reducible_with(f, tower, &Caps::unlimited())
}

fn reducible_with(f: &Poly<TowerElement>, tower: &Tower, caps: &Caps) -> Result<bool> {
    check_domain(f, tower)?;
    if f.degree() == Some(0) {
        return Err(Error::InvalidInput(
            "reducibility is asked of a constant polynomial".into(),
        ));
    }
    Ok(!factor_with(f, tower, caps)?.is_irreducible())
}

/// `gcd(f, f') = 1`.
pub fn is_separable(f: &Poly<TowerElement>, tower: &Tower) -> Result<bool> {
    check_domain(f, tower)?;
    let top = tower.top();
    let ring = PolyRing::new(&top);
    Ok(ring.gcd(f, &ring.derivative(f)).degree() == Some(0))
}

/// Whether `p'(x) != 0` for `p` the minimal polynomial of `x` over the
/// subfield generated by `gens`.
pub fn is_separable_element(tower: &Tower, x: &TowerElement, gens: &[TowerElement]) -> bool {
    let top = tower.top();
    let ring = PolyRing::new(&top);
    let p = tower.minpoly(x, gens);
    !top.is_zero(&ring.eval(&ring.derivative(&p), x))
}

/// Whether `x` lies in the separable closure of level `base_level` (the
/// field generated by the first `base_level` generators).
pub fn sep_closure_member(tower: &Tower, x: &TowerElement, base_level: usize) -> bool {
    let gens: Vec<TowerElement> = (0..base_level).map(|i| tower.gen(i)).collect();
    is_separable_element(tower, x, &gens)
}

/// Uncapped factorization over level `k` of a nonzero `f`.
pub(crate) fn factor_level(tower: &Tower, k: usize, f: &Poly<TowerElement>) -> Factorization {
    let lv = tower.level(k);
    let ring = PolyRing::new(&lv);
    let unit = f.lc().expect("nonzero").clone();
    let g = ring.monic(f);
    let mut factors = factor_monic(tower, k, &g);
    factors.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    Factorization { unit, factors }
}

fn factor_monic(tower: &Tower, k: usize, g: &Poly<TowerElement>) -> Vec<(Poly<TowerElement>, u32)> {
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let lv = tower.level(k);
    let ring = PolyRing::new(&lv);
    let dg = ring.derivative(g);
    if dg.is_zero() {
        let p = tower.base().characteristic() as usize;
        let h = ring.from_coeffs(g.coeffs().iter().step_by(p).cloned().collect());
        return factor_monic(tower, k, &h)
            .into_iter()
            .map(|(hi, mi)| {
                let roots: Option<Vec<TowerElement>> = hi
                    .coeffs()
                    .iter()
                    .map(|c| tower.pth_root_in(c, k))
                    .collect();
                match roots {
                    Some(r) => (ring.from_coeffs(r), mi * p as u32),
                    None => (ring.inflate(&hi, p), mi),
                }
            })
            .collect();
    }
    let sep = ring.div_exact(g, &ring.gcd(g, &dg)).expect("gcd divides");
    let mut rest = g.clone();
    let mut out = Vec::new();
    for q in factor_separable(tower, k, &sep) {
        let mut m = 0;
        while let Some(next) = ring.div_exact(&rest, &q) {
            rest = next;
            m += 1;
        }
        out.push((q, m));
    }
    out.extend(factor_monic(tower, k, &rest));
    out
}

/// Monic irreducible factors over level `k` of a monic squarefree separable
/// `f`, in no particular order.
fn factor_separable(tower: &Tower, k: usize, f: &Poly<TowerElement>) -> Vec<Poly<TowerElement>> {
    match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.clone()],
        _ => {}
    }
    let lv = tower.level(k);
    let ring = PolyRing::new(&lv);
    match tower.base() {
        BaseField::Prime(fp) if k == 0 => {
            let fp = *fp;
            let pr = PolyRing::new(&fp);
            let g = pr.from_coeffs(f.coeffs().iter().map(|c| scalar_fp(tower, c)).collect());
            let p = fp.modulus();
            finite::cz_factor(&fp, &g, |rng| rng.gen_range(0..p))
                .into_iter()
                .map(|h| {
                    ring.from_coeffs(h.coeffs().iter().map(|&c| tower.scalar(Scalar::Fp(c))).collect())
                })
                .collect()
        }
        BaseField::Prime(_) => {
            let p = tower.base().characteristic();
            let dim = tower.level_degree(k);
            finite::cz_factor(&lv, f, |rng| {
                tower.from_coeffs((0..dim).map(|_| Scalar::Fp(rng.gen_range(0..p))).collect())
            })
        }
        BaseField::Rationals if k == 0 => {
            let coeffs: Vec<_> = f
                .coeffs()
                .iter()
                .map(|c| match tower.as_scalar(c) {
                    Some(Scalar::Q(r)) => r,
                    _ => unreachable!("rational coefficient"),
                })
                .collect();
            rational::factor_rational(&coeffs)
                .into_iter()
                .map(|h| ring.from_coeffs(h.into_iter().map(|c| tower.scalar(Scalar::Q(c))).collect()))
                .collect()
        }
        BaseField::RatFunc(kf) if k == 0 => {
            let kf = *kf;
            let rr = PolyRing::new(&kf);
            let g = rr.from_coeffs(
                f.coeffs()
                    .iter()
                    .map(|c| match tower.as_scalar(c) {
                        Some(Scalar::FpT(r)) => r,
                        _ => unreachable!("F_p(t) coefficient"),
                    })
                    .collect(),
            );
            ratfunc::factor_ratfunc(&kf, &g)
                .into_iter()
                .map(|h| ring.from_coeffs(h.coeffs().iter().map(|c| tower.scalar(Scalar::FpT(c.clone()))).collect()))
                .collect()
        }
        BaseField::Rationals => norm::factor_by_absolute_norm(tower, k, f),
        _ => {
            let gen = &tower.generators()[k - 1];
            match gen.insep_exp() {
                Some(e) => {
                    let q = tower.base().characteristic().pow(e);
                    norm::factor_inseparable(tower, k, q, f)
                }
                None => norm::factor_by_norm(tower, k, f),
            }
        }
    }
}

fn scalar_fp(tower: &Tower, c: &TowerElement) -> u64 {
    match tower.as_scalar(c) {
        Some(Scalar::Fp(v)) => v,
        _ => unreachable!("F_p coefficient"),
    }
}
