use super::*;
use crate::closure::Closure;
use crate::difference::check_automorphism;
use num_bigint::BigInt;
use num_rational::BigRational;

fn tower(json: &str) -> Tower {
    Tower::from_json(json).unwrap()
}

const R2: &str = r#"{"base":"Q","gens":[{"name":"r","minpoly":"x^2 - 2"}]}"#;
const R23: &str = r#"{"base":"Q","gens":[{"name":"a","minpoly":"x^2 - 2"},{"name":"b","minpoly":"x^2 - 3"}]}"#;
const F4: &str = r#"{"base":{"Fp":2},"gens":[{"name":"u","minpoly":"x^2 + x + 1"}]}"#;

fn el(t: &Tower, s: &str) -> TowerElement {
    t.parse_element(s).unwrap()
}

/// The splitting field of `x^3 + a x + a` over `Q`.
fn s3_field(a: i64) -> Tower {
    let mut c = Closure::new(BaseField::rationals());
    let f = c.parse_poly(&format!("x^3 + {a}*x + {a}")).unwrap();
    c.roots(&f).unwrap();
    c.tower().clone()
}

fn as_rational(t: &Tower, x: &TowerElement) -> BigRational {
    match t.as_scalar(x) {
        Some(Scalar::Q(q)) => q,
        other => panic!("not rational: {other:?}"),
    }
}

fn is_rational_square(q: &BigRational) -> bool {
    let (n, d) = (q.numer(), q.denom());
    if n < &BigInt::from(0) {
        return false;
    }
    let (rn, rd) = (n.sqrt(), d.sqrt());
    &(&rn * &rn) == n && &(&rd * &rd) == d
}

#[test]
fn primitive_elements() {
    let t = tower(R23);
    let (y, m) = primitive_element(&t, 0).unwrap();
    assert_eq!(y, el(&t, "a + b"));
    assert_eq!(t.format_poly(&m), "x^4 - 10*x^2 + 1");
    let t = tower(R2);
    assert_eq!(primitive_element(&t, 0).unwrap().0, t.gen(0));
    let t = tower(F4);
    assert_eq!(primitive_element(&t, 0).unwrap().0, t.gen(0));
    // over the first generator only the second one is needed
    let t = tower(R23);
    let (y, m) = primitive_element(&t, 1).unwrap();
    assert_eq!(y, t.gen(1));
    assert_eq!(m.degree(), Some(2));
}

#[test]
fn primitive_element_rejects_inseparable_extensions() {
    let t = tower(r#"{"base":{"FpT":2},"gens":[{"name":"u","minpoly":"x^2 - t","insep_exp":1}]}"#);
    assert!(matches!(primitive_element(&t, 0), Err(Error::InvalidInput(_))));
}

#[test]
fn klein_four() {
    let t = tower(R23);
    let d = galois_group(&t, 0).unwrap();
    let g = d.group();
    assert_eq!((g.order(), g.exponent()), (4, 2));
    assert_eq!(g.isomorphism_label().as_deref(), Some("C2xC2"));
    // oracle: the four sign patterns on (a, b) are automorphisms and are
    // exactly the computed actions
    let mut expected = Vec::new();
    for sa in ["a", "-a"] {
        for sb in ["b", "-b"] {
            let images = vec![el(&t, sa), el(&t, sb)];
            assert!(check_automorphism(&t, &images).unwrap());
            expected.push(images);
        }
    }
    let mut actual: Vec<Vec<TowerElement>> = (0..4).map(|i| d.action(i).to_vec()).collect();
    expected.sort();
    actual.sort();
    assert_eq!(actual, expected);
    assert_eq!(d.action(0), [t.gen(0), t.gen(1)]);
    // composition in the table matches composition of the maps
    let x = el(&t, "1 + 2*a - a*b + 5*b");
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(d.apply(g.mul(i, j), &x), d.apply(i, &d.apply(j, &x)));
        }
    }
}

#[test]
fn cubic_with_discriminant_minus_31() {
    let t = s3_field(1);
    assert_eq!(t.degree(), 6);
    let d = galois_group(&t, 0).unwrap();
    let g = d.group();
    assert_eq!(g.order(), 6);
    assert!(!g.is_abelian());
    assert_eq!(g.isomorphism_label().as_deref(), Some("S3"));
    let a3 = g.normal_subgroups().unwrap().into_iter().find(|n| n.len() == 3).unwrap();
    let fixed = d.fixed_field(&a3).unwrap();
    assert_eq!(fixed.len(), 1);
    let top = t.top();
    let z = &fixed[0];
    let sq = as_rational(&t, &top.mul(z, z));
    // oracle: D = -4 a^3 - 27 a^2 at a = 1
    let disc = BigRational::from_integer(BigInt::from(-4 - 27));
    assert_eq!(disc, BigRational::from_integer(BigInt::from(-31)));
    assert!(is_rational_square(&(sq / disc)));
}

#[test]
fn frobenius_group() {
    let t = tower(F4);
    let d = galois_group(&t, 0).unwrap();
    assert_eq!(d.group().order(), 2);
    let u = t.gen(0);
    let top = t.top();
    assert_eq!(d.action(1), [top.mul(&u, &u)]);
    let t8 = tower(r#"{"base":{"Fp":2},"gens":[{"name":"w","minpoly":"x^3 + x + 1"}]}"#);
    let d = galois_group(&t8, 0).unwrap();
    assert_eq!(d.group().isomorphism_label().as_deref(), Some("C3"));
}

#[test]
fn order_equals_degree() {
    for json in [
        R2,
        R23,
        F4,
        r#"{"base":"Q","gens":[{"name":"i","minpoly":"x^2 + 1"}]}"#,
        r#"{"base":"Q","gens":[{"name":"z","minpoly":"x^4 + x^3 + x^2 + x + 1"}]}"#,
        r#"{"base":"Q","gens":[{"name":"a","minpoly":"x^2 - 2"},{"name":"b","minpoly":"x^2 - 3"},{"name":"c","minpoly":"x^2 - 5"}]}"#,
        r#"{"base":{"Fp":3},"gens":[{"name":"v","minpoly":"x^2 + 1"},{"name":"w","minpoly":"x^3 - x - 1"}]}"#,
    ] {
        let t = tower(json);
        assert_eq!(galois_group(&t, 0).unwrap().group().order(), t.degree(), "{json}");
    }
    let d = galois_group(&tower(r#"{"base":"Q","gens":[{"name":"z","minpoly":"x^4 + x^3 + x^2 + x + 1"}]}"#), 0).unwrap();
    assert_eq!(d.group().isomorphism_label().as_deref(), Some("C4"));
    // relative group over the first generator
    let d = galois_group(&tower(R23), 1).unwrap();
    assert_eq!(d.group().order(), 2);
}

#[test]
fn non_normal_extensions_are_rejected() {
    let t = tower(r#"{"base":"Q","gens":[{"name":"c","minpoly":"x^3 - 2"}]}"#);
    assert!(matches!(galois_group(&t, 0), Err(Error::Verification(_))));
}

#[test]
fn fixed_fields() {
    let t = tower(R23);
    let d = galois_group(&t, 0).unwrap();
    let fix_a = d.fixing_subgroup(&[t.gen(0)]);
    assert_eq!(fix_a.len(), 2);
    let k = d.fixed_field(&fix_a).unwrap();
    assert_eq!(k.len(), 1);
    // generates Q(a): same subfield
    assert_eq!(t.subfield(&k).dim(), 2);
    assert!(t.subfield(&k).contains(&t.gen(0)));
    let whole: Vec<usize> = (0..4).collect();
    assert!(d.fixed_field(&whole).unwrap().is_empty());
    assert_eq!(t.subfield(&d.fixed_field(&[0]).unwrap()).dim(), 4);
    assert!(matches!(d.fixed_field(&[0, 1, 2]), Err(Error::InvalidInput(_))));
}

#[test]
fn galois_correspondence_round_trip() {
    for t in [tower(R23), s3_field(1), tower(F4)] {
        let d = galois_group(&t, 0).unwrap();
        for h in d.group().subgroups().unwrap() {
            let k = d.fixed_field(&h).unwrap();
            assert_eq!(d.fixing_subgroup(&k), h);
            assert_eq!(t.subfield(&k).dim() * h.len(), t.degree());
            assert_eq!(d.is_normal_subfield(&k), d.group().is_normal(&h));
        }
    }
}

#[test]
fn chain_of_a_square_root() {
    let q = Tower::new(BaseField::rationals());
    let f = q.parse_poly("x^2 - 2").unwrap();
    let c = normal_chain(&q, &f).unwrap();
    assert_eq!(c.fields.len(), 1);
    assert_eq!(c.fields[0].1.degree(), Some(2));
}

#[test]
fn chain_of_a_cube_root() {
    let q = Tower::new(BaseField::rationals());
    let f = q.parse_poly("x^3 - 2").unwrap();
    let c = normal_chain(&q, &f).unwrap();
    let e = c.tower();
    assert_eq!(e.degree(), 6);
    let g = c.galois.group();
    assert_eq!(g.isomorphism_label().as_deref(), Some("S3"));
    let sizes: Vec<usize> = c.subgroups.iter().map(Vec::len).collect();
    assert_eq!(sizes, [6, 3, 1]);
    let degrees: Vec<Option<usize>> = c.fields.iter().map(|(_, m)| m.degree()).collect();
    assert_eq!(degrees, [Some(2), Some(6)]);
    // oracle: the quadratic step is Q(sqrt(-3)); the generator's minimal
    // polynomial has discriminant -3 times a square
    let m = &c.fields[0].1;
    let coeff = |i: usize| as_rational(e, &m.coeffs()[i]);
    let disc = coeff(1) * coeff(1) - BigRational::from_integer(BigInt::from(4)) * coeff(0);
    assert!(is_rational_square(&(disc / BigRational::from_integer(BigInt::from(-3)))));
    // each field is normal over Q and nothing normal lies in between
    let normals = g.normal_subgroups().unwrap();
    for w in c.subgroups.windows(2) {
        assert!(g.is_normal(&w[1]));
        assert!(!normals.iter().any(|n| n.len() > w[1].len()
            && n.len() < w[0].len()
            && w[1].iter().all(|a| n.contains(a))
            && n.iter().all(|a| w[0].contains(a))));
    }
    let top = e.top();
    assert!(top.is_zero(&PolyRing::new(&top).eval(&e.parse_poly("x^3 - 2").unwrap(), &c.root)));
}

#[test]
fn chain_over_a_quadratic_field() {
    let t = tower(R2);
    let f = t.parse_poly("x^2 - 3").unwrap();
    let c = normal_chain(&t, &f).unwrap();
    assert_eq!(c.galois.group().isomorphism_label().as_deref(), Some("C2xC2"));
    let sizes: Vec<usize> = c.subgroups.iter().map(Vec::len).collect();
    assert_eq!(sizes, [2, 1]);
    assert_eq!(c.fields.len(), 1);
    assert_eq!(c.fields[0].1.degree(), Some(4));
}

#[test]
fn incompatible_extension_over_klein_four() {
    let t = tower(R23);
    let (a, b) = (t.gen(0), t.gen(1));
    let r = incompatible_extension(&t, &[a.clone()], &[el(&t, "-a")], &[b.clone()], &[b.clone()]).unwrap();
    assert_eq!(r.alpha_images().unwrap(), [el(&t, "-a"), el(&t, "-b")]);
    // oracle: with alpha fixed, both embeddings b -> b, b -> -b of Q(b) fail
    // to commute with the identity on Q(b)
    let alpha = r.galois.action(r.alpha.unwrap()).to_vec();
    for img in ["b", "-b"] {
        let w = el(&t, img);
        assert_ne!(t.map_element(&w, &t, &alpha), w);
    }
    let e = tower(R2);
    let r2 = e.gen(0);
    let r = incompatible_extension(&e, &[], &[], &[r2.clone()], &[r2]).unwrap();
    assert_eq!(r.alpha_images().unwrap(), [el(&e, "-r")]);
}

#[test]
fn incompatible_extension_preconditions() {
    let t = tower(R23);
    let (a, b) = (t.gen(0), t.gen(1));
    // K2 inside K1
    assert!(matches!(
        incompatible_extension(&t, &[a.clone(), b.clone()], &[a.clone(), b.clone()], &[b.clone()], &[b.clone()]),
        Err(Error::InvalidInput(_))
    ));
    // sigma not an automorphism
    assert!(matches!(
        incompatible_extension(&t, &[a.clone()], &[el(&t, "a + 1")], &[b.clone()], &[b.clone()]),
        Err(Error::InvalidInput(_))
    ));
    let s3 = s3_field(1);
    let cubic_root = s3.gen(0);
    assert!(matches!(
        incompatible_extension(&s3, &[], &[], &[cubic_root.clone()], &[cubic_root]),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn incompatible_extension_fails_for_s3() {
    let t = s3_field(1);
    let d = galois_group(&t, 0).unwrap();
    let g = d.group();
    let a3 = g.normal_subgroups().unwrap().into_iter().find(|n| n.len() == 3).unwrap();
    let k1 = d.fixed_field(&a3).unwrap();
    let odd = (0..6).find(|&x| a3.binary_search(&x).is_err()).unwrap();
    let sigma: Vec<TowerElement> = k1.iter().map(|z| d.apply(odd, z)).collect();
    let k2: Vec<TowerElement> = (0..2).map(|i| t.gen(i)).collect();
    let mut failures = 0;
    for tau_el in 0..6 {
        let tau: Vec<TowerElement> = k2.iter().map(|z| d.apply(tau_el, z)).collect();
        let r = incompatible_extension(&t, &k1, &sigma, &k2, &tau).unwrap();
        // oracle: alpha exists iff some odd h is not conjugate to tau_el
        let expected = (0..6).any(|h| {
            a3.binary_search(&h).is_err() && (0..6).all(|x| g.conjugate(h, x) != tau_el)
        });
        assert_eq!(r.alpha.is_some(), expected, "tau = {tau_el}");
        if r.alpha.is_none() {
            failures += 1;
            assert_eq!((r.m.len(), r.nm.len()), (1, 3));
            assert!(crate::groups::verify_counterexample(
                g,
                &crate::groups::Counterexample { m: r.m.clone(), n: r.nm.clone(), g: r.g2 }
            ));
        }
    }
    assert_eq!(failures, 3);
}
