use super::*;
use proptest::prelude::*;

fn q_tower(gens: &[(&str, &str)]) -> Tower {
    let mut t = Tower::new(BaseField::rationals());
    for (name, m) in gens {
        let p = t.parse_poly(m).unwrap();
        t = t.extend(name, p, None).unwrap();
    }
    t
}

fn el(t: &Tower, s: &str) -> TowerElement {
    t.parse_element(s).unwrap()
}

#[test]
fn defining_relation_and_inverse() {
    let t = q_tower(&[("a", "x^2 - 2")]);
    let f = t.top();
    let a = el(&t, "a");
    assert_eq!(f.mul(&a, &a), t.from_int(2));
    let inv = f.inv(&el(&t, "1 + a")).unwrap();
    assert_eq!(inv, el(&t, "-1 + a"));
    assert_eq!(t.format_element(&inv), "a - 1");
    assert!(f.inv(&t.from_int(0)).is_none());
}

#[test]
fn extension_degrees_and_errors() {
    let t = q_tower(&[("a", "x^2 - 2")]);
    assert_eq!(t.degree(), 2);
    let m = t.parse_poly("x^2 - 2").unwrap();
    assert!(matches!(t.extend("b", m, None), Err(Error::Reducible(_))));
    let m = t.parse_poly("2*x^2 - 3").unwrap();
    assert!(matches!(t.extend("b", m, None), Err(Error::NotMonic(_))));
    let m = t.parse_poly("x^2 - 3").unwrap();
    assert!(t.extend("a", m.clone(), None).is_err());
    assert!(t.extend("x", m, None).is_err());
}

#[test]
fn purely_inseparable_square_root_of_t() {
    let t = Tower::new(BaseField::rational_functions(2).unwrap());
    let m = t.parse_poly("x^2 - t").unwrap();
    let u = t.extend("u", m.clone(), Some(1)).unwrap();
    assert_eq!(u.degree(), 2);
    let g = u.gen(0);
    assert_eq!(u.top().mul(&g, &g), el(&u, "t"));
    // t^2 is a square, so x^2 - t^2 is not a valid minimal polynomial
    let m2 = t.parse_poly("x^2 - t^2").unwrap();
    assert!(t.extend("v", m2, Some(1)).is_err());
    // the inseparable flag needs the X^(p^k) - c shape and positive characteristic
    let m3 = t.parse_poly("x^2 + x + t").unwrap();
    assert!(t.extend("w", m3, Some(1)).is_err());
    let q = Tower::new(BaseField::rationals());
    let m4 = q.parse_poly("x^2 - 2").unwrap();
    assert!(q.extend("w", m4, Some(1)).is_err());
}

/// Expands `(a + b)^k` by the binomial theorem using only the defining
/// relations `a^2 = 2`, `b^2 = 3`, tracking coordinates on `1, a, b, ab`.
fn binomial_powers(max: usize) -> Vec<[i64; 4]> {
    let mut out = vec![[1, 0, 0, 0]];
    for _ in 0..max {
        let [c, ca, cb, cab] = *out.last().unwrap();
        // multiply by (a + b)
        let next = [2 * ca + 3 * cb, c + 3 * cab, c + 2 * cab, ca + cb];
        out.push(next);
    }
    out
}

#[test]
fn minpoly_of_sqrt2_plus_sqrt3() {
    let t = q_tower(&[("a", "x^2 - 2"), ("b", "x^2 - 3")]);
    let y = el(&t, "a + b");
    let m = t.minpoly(&y, &[]);
    assert_eq!(t.format_poly(&m), "x^4 - 10*x^2 + 1");
    // oracle: the integer kernel vector of the power table
    let p = binomial_powers(4);
    for i in 0..4 {
        assert_eq!(p[4][i] - 10 * p[2][i] + p[0][i], 0);
    }
    // no nonzero combination of lower powers vanishes: the 4x4 table has
    // nonzero determinant
    let rows: Vec<Vec<num_rational::BigRational>> = (0..4)
        .map(|k| p[k].iter().map(|&v| Rationals.from_int(v)).collect())
        .collect();
    assert_ne!(crate::arith::det(&Rationals, rows), Rationals.from_int(0));
    // irreducibility oracle: no monic integer factor of degree <= 2 with
    // coefficients bounded by 11
    for c1 in -11..=11i64 {
        for c0 in -11..=11i64 {
            let q = q_poly(&[c0, c1, 1]);
            let l = q_poly(&[c0, 1]);
            let target = q_poly(&[1, 0, -10, 0, 1]);
            let top = Tower::new(BaseField::rationals());
            let lv = top.top();
            let ring = PolyRing::new(&lv);
            assert!(!ring.divides(&q, &target));
            assert!(!ring.divides(&l, &target));
        }
    }
}

fn q_poly(c: &[i64]) -> Poly<TowerElement> {
    let t = Tower::new(BaseField::rationals());
    let lv = t.top();
    PolyRing::new(&lv).from_coeffs(c.iter().map(|&v| t.from_int(v)).collect())
}

use crate::arith::Rationals;

#[test]
fn minpoly_over_subfields() {
    let t = q_tower(&[("a", "x^2 - 2")]);
    let a = t.gen(0);
    assert_eq!(t.format_poly(&t.minpoly(&a, &[a.clone()])), "x - a");
    let f4 = Tower::new(BaseField::prime(2).unwrap());
    let m = f4.parse_poly("x^2 + x + 1").unwrap();
    let f4 = f4.extend("u", m, None).unwrap();
    assert_eq!(f4.format_poly(&f4.minpoly(&f4.gen(0), &[])), "x^2 + x + 1");
}

#[test]
fn subfield_membership() {
    let t = q_tower(&[("a", "x^2 - 2"), ("b", "x^2 - 3"), ("c", "x^2 - 5")]);
    let (a, b) = (t.gen(0), t.gen(1));
    let six = el(&t, "a*b");
    let e = t.subfield_member(&six, &[a.clone(), b.clone()]).unwrap();
    assert_eq!(e.format(t.base(), &["a", "b"]), "a*b");
    assert_eq!(e.evaluate(&t, &[a.clone(), b.clone()]), six);
    assert!(t.subfield_member(&t.gen(2), &[a.clone(), b.clone()]).is_none());
    let r = el(&t, "3/4");
    let e = t.subfield_member(&r, &[]).unwrap();
    assert_eq!(e.format(t.base(), &[]), "3/4");
    // non-prefix generators go through the monomial closure
    let ab = el(&t, "a + b");
    let e = t.subfield_member(&six, &[ab.clone()]).unwrap();
    assert_eq!(e.evaluate(&t, &[ab.clone()]), six);
    assert_eq!(t.subfield(&[ab]).dim(), 4);
}

#[test]
fn printing_and_parsing_round_trip() {
    let t = q_tower(&[("a", "x^2 - 2"), ("b", "x^3 - a")]);
    for s in [
        "x^4 - 10*x^2 + 1",
        "(a + 1)*x^2 - 2*a*x - 1/3",
        "a*b^2*x + a*b - 7/2",
        "-x",
        "0",
    ] {
        let f = t.parse_poly(s).unwrap();
        assert_eq!(t.format_poly(&f), s);
    }
    assert!(t.parse_poly("x/(x+1)").is_err());
    assert!(t.parse_poly("1/0").is_err());
    assert!(t.parse_poly("y + 1").is_err());
    assert!(t.parse_element("x + 1").is_err());
    assert!(t.parse_poly("(x + 1").is_err());
    assert_eq!(t.format_element(&el(&t, "a^-1")), "1/2*a");
    let ft = Tower::new(BaseField::rational_functions(3).unwrap());
    for s in ["x^3 - t", "x^2 + (t + 1)*x + 2*t^2", "(t)/(t + 1)*x + 1"] {
        let f = ft.parse_poly(s).unwrap();
        let printed = ft.format_poly(&f);
        assert_eq!(ft.parse_poly(&printed).unwrap(), f, "{s} -> {printed}");
    }
}

#[test]
fn descriptor_round_trip() {
    let json = r#"{"base":"Q","gens":[{"name":"a","minpoly":"x^2 - 2"},{"name":"b","minpoly":"x^2 - a"}]}"#;
    let t = Tower::from_json(json).unwrap();
    assert_eq!(t.degree(), 4);
    assert_eq!(serde_json::to_string(&t.descriptor()).unwrap(), json);
    let bad = r#"{"base":"Q","gens":[{"name":"a","minpoly":"x^2 - 4"}]}"#;
    assert!(matches!(Tower::from_json(bad), Err(Error::Reducible(_))));
    let insep = r#"{"base":{"FpT":2},"gens":[{"name":"u","minpoly":"x^2 + t","insep_exp":1}]}"#;
    let t = Tower::from_json(insep).unwrap();
    assert_eq!(serde_json::to_string(&t.descriptor()).unwrap(), insep);
}

#[test]
fn pth_roots_in_characteristic_p() {
    let f9 = Tower::from_json(r#"{"base":{"Fp":3},"gens":[{"name":"c","minpoly":"x^2 + 1"}]}"#).unwrap();
    let c = el(&f9, "c + 2");
    let r = f9.pth_root(&c).unwrap();
    assert_eq!(f9.top().pow_u64(&r, 3), c);
    assert_eq!(r, f9.top().pow_u64(&c, 3));
    let u = Tower::from_json(r#"{"base":{"FpT":3},"gens":[{"name":"u","minpoly":"x^3 - t","insep_exp":1}]}"#).unwrap();
    let t = el(&u, "t");
    assert_eq!(u.pth_root(&t), Some(u.gen(0)));
    assert_eq!(u.pth_root_in(&t, 0), None);
    let x = el(&u, "t^2*u + (t + 1)/(t^2 + 2)");
    let x3 = u.top().pow_u64(&x, 3);
    assert_eq!(u.pth_root(&x3), Some(x));
}

#[test]
fn maps_between_towers() {
    let t = q_tower(&[("a", "x^2 - 2"), ("b", "x^2 - 3")]);
    let images = vec![el(&t, "-a"), el(&t, "b")];
    let x = el(&t, "1 + a*b + 2*b");
    assert_eq!(t.map_element(&x, &t, &images), el(&t, "1 - a*b + 2*b"));
}

fn tower_strategy() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (
        prop::collection::vec(-5i64..6, 0..9),
        prop::collection::vec(-5i64..6, 0..9),
    )
}

fn from_ints(t: &Tower, v: &[i64]) -> TowerElement {
    t.from_coeffs(v.iter().map(|&c| t.base().from_int(c)).collect())
}

proptest! {
    #[test]
    fn canonical_form_is_equality((x, y) in tower_strategy()) {
        let t = q_tower(&[("a", "x^2 - 2"), ("b", "x^2 - a"), ("c", "x^2 - 3")]);
        let f = t.top();
        let (x, y) = (from_ints(&t, &x), from_ints(&t, &y));
        prop_assert_eq!(f.is_zero(&f.sub(&x, &y)), x == y);
        // field axioms spot checks
        let z = f.mul(&x, &y);
        prop_assert_eq!(z.clone(), f.mul(&y, &x));
        if !f.is_zero(&y) {
            prop_assert_eq!(f.mul(&f.div(&z, &y).unwrap(), &y), z);
        }
    }

    #[test]
    fn minpoly_is_minimal_and_membership_consistent((x, _) in tower_strategy()) {
        let t = q_tower(&[("a", "x^2 - 2"), ("b", "x^2 - 3"), ("c", "x^2 - 5")]);
        prop_assert_eq!(t.degree(), 8);
        prop_assert_eq!(t.subfield(&[t.gen(0), t.gen(1), t.gen(2)]).dim(), 8);
        let f = t.top();
        let ring = PolyRing::new(&f);
        let x = from_ints(&t, &x);
        let sub = [t.gen(0)];
        let m = t.minpoly(&x, &sub);
        prop_assert!(f.is_zero(&ring.eval(&m, &x)));
        // minimality: the powers 1, x, ..., x^(d-1) are independent over Q(a)
        let d = m.degree().unwrap();
        let s = t.subfield(&sub);
        let mut span = crate::arith::SpanBasis::new(t.base());
        let mut pw = f.one();
        for _ in 0..d {
            for b in s.basis() {
                prop_assert!(span.insert(f.mul(b, &pw).coeffs()));
            }
            pw = f.mul(&pw, &x);
        }
        if let Some(e) = t.subfield_member(&x, &sub) {
            prop_assert_eq!(d, 1);
            prop_assert_eq!(e.evaluate(&t, &sub), x);
        } else {
            prop_assert!(d > 1);
        }
    }
}
