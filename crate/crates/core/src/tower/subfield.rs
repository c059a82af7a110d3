//! Subfields generated by finite sets of elements: bases, minimal polynomials
//! and membership, all by exact linear algebra over the base field.

use super::{Tower, TowerElement};
use crate::arith::{BaseField, Field, Poly, PolyRing, Scalar, SpanBasis};

/// The subfield `base(S)` of a tower generated by elements `S`, with a basis
/// of monomials in `S`.
pub struct Subfield<'t> {
    tower: &'t Tower,
    gens: Vec<TowerElement>,
    basis: Vec<TowerElement>,
    exponents: Vec<Vec<u32>>,
    span: SpanBasis<'t, BaseField>,
}

/// `x = sum coeff * S^exponents`, an explicit polynomial expression of an
/// element in the generators of a subfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldExpr {
    pub terms: Vec<(Scalar, Vec<u32>)>,
}

impl<'t> Subfield<'t> {
    pub fn generators(&self) -> &[TowerElement] {
        &self.gens
    }

    /// Degree over the base.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TowerElement] {
        &self.basis
    }

    pub fn contains(&self, x: &TowerElement) -> bool {
        self.span.contains(x.coeffs())
    }

    /// Coordinates of `x` in [`Subfield::basis`].
    pub fn coordinates(&self, x: &TowerElement) -> Option<Vec<Scalar>> {
        self.span.express(x.coeffs())
    }

    pub fn express(&self, x: &TowerElement) -> Option<SubfieldExpr> {
        let coords = self.coordinates(x)?;
        let base = self.tower.base();
        let terms = coords
            .into_iter()
            .zip(&self.exponents)
            .filter(|(c, _)| !base.is_zero(c))
            .map(|(c, e)| (c, e.clone()))
            .collect();
        Some(SubfieldExpr { terms })
    }
}

impl SubfieldExpr {
    pub fn evaluate(&self, tower: &Tower, gens: &[TowerElement]) -> TowerElement {
        let top = tower.top();
        let mut acc = top.zero();
        for (c, e) in &self.terms {
            let mut term = tower.scalar(c.clone());
            for (g, &k) in gens.iter().zip(e) {
                term = top.mul(&term, &top.pow_u64(g, k as u64));
            }
            acc = top.add(&acc, &term);
        }
        acc
    }

    /// Renders the expression with the given names for the generators.
    pub fn format(&self, base: &BaseField, names: &[&str]) -> String {
        let terms = self
            .terms
            .iter()
            .map(|(c, e)| {
                let mono: Vec<String> = names
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(n, &k)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                super::text::Term::new(base, c, mono.join("*"))
            })
            .collect::<Vec<_>>();
        super::text::join_terms(&terms)
    }
}

impl Tower {
    fn is_generator_prefix(&self, gens: &[TowerElement]) -> bool {
        gens.len() <= self.num_generators()
            && gens.iter().enumerate().all(|(i, g)| *g == self.gen(i))
    }

    /// Basis of the subfield generated by `gens` over the base.
    pub fn subfield(&self, gens: &[TowerElement]) -> Subfield<'_> {
        let mut span = SpanBasis::new(self.base());
        let mut basis = Vec::new();
        let mut exponents = Vec::new();
        if self.is_generator_prefix(gens) {
            for idx in 0..self.level_degree(gens.len()) {
                let mut v = vec![self.base().zero(); idx + 1];
                v[idx] = self.base().one();
                let e = self.from_coeffs(v);
                span.insert(e.coeffs());
                basis.push(e);
                exponents.push(
                    self.monomial_exponents(idx)[..gens.len()]
                        .iter()
                        .map(|&k| k as u32)
                        .collect(),
                );
            }
        } else {
            let top = self.top();
            let one = top.one();
            span.insert(one.coeffs());
            basis.push(one);
            exponents.push(vec![0u32; gens.len()]);
            let mut cursor = 0;
            while cursor < basis.len() {
                let (b, e) = (basis[cursor].clone(), exponents[cursor].clone());
                for (i, g) in gens.iter().enumerate() {
                    let w = top.mul(&b, g);
                    if span.insert(w.coeffs()) {
                        let mut e2 = e.clone();
                        e2[i] += 1;
                        basis.push(w);
                        exponents.push(e2);
                    }
                }
                cursor += 1;
            }
        }
        Subfield {
            tower: self,
            gens: gens.to_vec(),
            basis,
            exponents,
            span,
        }
    }

    /// Monic minimal polynomial of `x` over the subfield generated by `gens`;
    /// its coefficients are elements of that subfield.
    pub fn minpoly(&self, x: &TowerElement, gens: &[TowerElement]) -> Poly<TowerElement> {
        let sub = self.subfield(gens);
        self.minpoly_over(x, &sub)
    }

    pub fn minpoly_over(&self, x: &TowerElement, sub: &Subfield<'_>) -> Poly<TowerElement> {
        let top = self.top();
        let ring = PolyRing::new(&top);
        let mut span = SpanBasis::new(self.base());
        let mut labels: Vec<(usize, usize)> = Vec::new();
        let mut power = top.one();
        for n in 0..=self.degree() {
            if n > 0 {
                if let Some(coeffs) = span.express(power.coeffs()) {
                    let mut c = vec![top.zero(); n + 1];
                    for (lambda, &(i, j)) in coeffs.iter().zip(&labels) {
                        let term = top.mul(&self.scalar(lambda.clone()), &sub.basis[j]);
                        c[i] = top.sub(&c[i], &term);
                    }
                    c[n] = top.one();
                    return ring.from_coeffs(c);
                }
            }
            for (j, b) in sub.basis.iter().enumerate() {
                if span.insert(top.mul(b, &power).coeffs()) {
                    labels.push((n, j));
                }
            }
            power = top.mul(&power, x);
        }
        unreachable!("tower degree bounds the minimal polynomial degree")
    }

    /// Explicit expression of `x` in `gens` when `x` lies in the subfield they
    /// generate.
    pub fn subfield_member(&self, x: &TowerElement, gens: &[TowerElement]) -> Option<SubfieldExpr> {
        self.subfield(gens).express(x)
    }
}
