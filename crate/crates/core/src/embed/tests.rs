use super::*;
use crate::arith::BaseField;
use proptest::prelude::*;

fn tower(json: &str) -> Tower {
    Tower::from_json(json).unwrap()
}

const R2: &str = r#"{"base":"Q","gens":[{"name":"r","minpoly":"x^2 - 2"}]}"#;
const R235: &str = r#"{"base":"Q","gens":[{"name":"a","minpoly":"x^2 - 2"},{"name":"b","minpoly":"x^2 - 3"},{"name":"c","minpoly":"x^2 - 5"}]}"#;

#[test]
fn fourth_root_under_conjugation() {
    let f = tower(R2);
    let target = Closure::from_tower(tower(R2));
    let minus = target.parse_element("-r").unwrap();
    let mut m = LazyFieldMap::extend_embedding(f, vec![minus.clone()], target).unwrap();
    let q4 = m.source().parse_poly("x^4 - 2").unwrap();
    let s = m.source_mut().adjoin_root(&q4).unwrap();
    let img = m.image(&s).unwrap();
    // oracle: squaring the image gives the logged image of r
    let tt = m.target().tower().top();
    assert_eq!(tt.mul(&img, &img), minus);
    assert_eq!(m.log()[0].image, "-r");
    assert_eq!(m.log()[1].stage, Stage::Separable);
    // stability, also after unrelated growth of both sides
    let again = m.image(&s).unwrap();
    assert_eq!(again, img);
    let other = m.source().parse_poly("x^2 - 3").unwrap();
    let w = m.source_mut().adjoin_root(&other).unwrap();
    m.image(&w).unwrap();
    assert_eq!(m.image(&s).unwrap(), img);
}

#[test]
fn rejects_non_homomorphisms() {
    let target = Closure::from_tower(tower(R2));
    let bad = target.parse_element("1 + r").unwrap();
    assert!(matches!(
        LazyFieldMap::extend_embedding(tower(R2), vec![bad], target),
        Err(Error::Verification(_))
    ));
}

#[test]
fn identity_case_is_the_inclusion() {
    let mut m = LazyFieldMap::extend_embedding(
        Tower::new(BaseField::rationals()),
        vec![],
        Closure::new(BaseField::rationals()),
    )
    .unwrap();
    let f = m.source().parse_poly("x^3 - x - 1").unwrap();
    let r = m.source_mut().adjoin_root(&f).unwrap();
    let img = m.image(&r).unwrap();
    assert_eq!(m.target().tower().format_element(&img), "a1");
    let zero = m.source().tower().from_int(0);
    let one = m.source().tower().from_int(1);
    assert_eq!(m.image(&zero).unwrap(), zero);
    assert_eq!(m.image(&one).unwrap(), one);
}

#[test]
fn purely_inseparable_image_is_forced() {
    let f = tower(r#"{"base":{"FpT":2},"gens":[{"name":"u","minpoly":"x^2 + t","insep_exp":1}]}"#);
    let base = Tower::new(f.base().clone());
    // alpha is the identity on F_2(t); the generator u is assigned lazily
    let mut m = LazyFieldMap::extend_embedding(base, vec![], Closure::new(*f.base())).unwrap();
    let u = m.source_mut().adjoin_root(&f.parse_poly("x^2 - t").unwrap()).unwrap();
    let img = m.image(&u).unwrap();
    let tt = m.target().tower().top();
    assert_eq!(tt.mul(&img, &img), m.target().parse_element("t").unwrap());
    let entry = &m.log()[0];
    assert_eq!(entry.stage, Stage::Inseparable);
    assert!(entry.forced);
    assert_eq!(entry.candidates, 1);
    assert!(!entry.in_separable_closure);
}

#[test]
fn automorphism_of_biquadratic_field() {
    let e = tower(r#"{"base":"Q","gens":[{"name":"a","minpoly":"x^2 - 2"},{"name":"b","minpoly":"x^2 - 3"}]}"#);
    let c = Closure::from_tower(e);
    let sigma = vec![c.parse_element("-a").unwrap(), c.parse_element("b").unwrap()];
    let mut m = LazyFieldMap::extend_automorphism(c, sigma).unwrap();
    let six = m.source().parse_element("a*b").unwrap();
    assert_eq!(m.image(&six).unwrap(), m.source().parse_element("-a*b").unwrap());
    let a = m.source().parse_element("a").unwrap();
    assert_eq!(m.image(&a).unwrap(), m.source().parse_element("-a").unwrap());
}

#[test]
fn identity_automorphism_fixes_the_field() {
    let c = Closure::from_tower(tower(R235));
    let sigma: Vec<_> = (0..3).map(|i| c.tower().gen(i)).collect();
    let mut m = LazyFieldMap::extend_automorphism(c, sigma).unwrap();
    for s in ["a + b*c", "a*b*c - 7/3", "c^-1"] {
        let x = m.source().parse_element(s).unwrap();
        assert_eq!(m.image(&x).unwrap(), x);
    }
}

#[test]
fn non_normal_fields_are_rejected() {
    let e = tower(r#"{"base":"Q","gens":[{"name":"c","minpoly":"x^3 - 2"}]}"#);
    let c = Closure::from_tower(e);
    let g = c.tower().gen(0);
    assert!(matches!(
        LazyFieldMap::extend_automorphism(c, vec![g]),
        Err(Error::Verification(_))
    ));
}

#[test]
fn frobenius_on_f4_extends_to_f16() {
    let e = tower(r#"{"base":{"Fp":2},"gens":[{"name":"u","minpoly":"x^2 + x + 1"}]}"#);
    let c = Closure::from_tower(e);
    let u = c.tower().gen(0);
    let frob = c.tower().top().mul(&u, &u);
    let mut m = LazyFieldMap::extend_automorphism(c, vec![frob.clone()]).unwrap();
    let q = m.source().parse_poly("x^2 + x + u").unwrap();
    let w = m.source_mut().adjoin_root(&q).unwrap();
    assert_eq!(m.source().degree(), 4);
    for s in ["a2", "a2 + u", "u*a2 + 1", "u"] {
        let x = m.source().parse_element(s).unwrap();
        let img = m.image(&x).unwrap();
        // oracle: the image is a root of the minimal polynomial of x over F_2
        let t = m.source().tower();
        let mp = t.minpoly(&x, &[]);
        let top = t.top();
        assert!(top.is_zero(&PolyRing::new(&top).eval(&mp, &img)), "{s}");
    }
    assert_eq!(m.image(&u).unwrap(), frob);
    let _ = w;
}

#[test]
fn replay_reproduces_the_log() {
    let build = || {
        let c = Closure::from_tower(tower(R2));
        let mut m = LazyFieldMap::self_map(c, vec![tower(R2).parse_element("-r").unwrap()]).unwrap();
        let f = m.source().parse_poly("x^4 - 2").unwrap();
        m.source_mut().adjoin_root(&f).unwrap();
        m
    };
    let mut m = build();
    let s = m.source().tower().gen(1);
    m.image(&s).unwrap();
    let log = m.log().to_vec();
    let mut fresh = build();
    fresh.replay(&log).unwrap();
    assert_eq!(fresh.log(), &log[..]);
    let mut tampered = log.clone();
    tampered[1].image = "0".into();
    assert!(build().replay(&tampered).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn lazy_maps_are_homomorphisms(x in prop::collection::vec(-3i64..4, 0..8),
                                   y in prop::collection::vec(-3i64..4, 0..8)) {
        let c = Closure::from_tower(tower(R235));
        let t = c.tower().clone();
        let sigma = vec![t.parse_element("a").unwrap(), t.parse_element("-b").unwrap(), t.parse_element("-c").unwrap()];
        let mut m = LazyFieldMap::extend_automorphism(c, sigma).unwrap();
        let f = m.source().parse_poly("x^4 - 2").unwrap();
        let r = m.source_mut().adjoin_root(&f).unwrap();
        let t = m.source().tower().clone();
        let top = t.top();
        let el = |v: &[i64]| {
            let base = t.from_coeffs(v.iter().map(|&c| t.base().from_int(c)).collect());
            top.add(&base, &top.mul(&r, &t.from_int(v.len() as i64)))
        };
        let (x, y) = (el(&x), el(&y));
        let (ix, iy) = (m.image(&x).unwrap(), m.image(&y).unwrap());
        let (sum, prod) = (top.add(&x, &y), top.mul(&x, &y));
        let (isum, iprod) = (m.image(&sum).unwrap(), m.image(&prod).unwrap());
        let now = m.source().tower().clone();
        let top = now.top();
        prop_assert_eq!(isum, top.add(&ix, &iy));
        prop_assert_eq!(iprod, top.mul(&ix, &iy));
    }
}
