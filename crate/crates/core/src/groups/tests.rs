use super::*;
use crate::error::Error;

fn g(spec: &str) -> FiniteGroup {
    FiniteGroup::from_spec(spec).unwrap()
}

fn labels(group: &FiniteGroup, set: &[usize]) -> Vec<String> {
    group.format_set(set)
}

// oracle: every subset containing the identity, filtered by the definitions
fn naive_normal_subgroups(group: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let others: Vec<usize> = (0..n).filter(|&x| x != group.identity()).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut set = vec![group.identity()];
        set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
        set.sort_unstable();
        let closed = set
            .iter()
            .all(|&a| set.iter().all(|&b| set.binary_search(&group.mul(a, b)).is_ok()));
        let conj = set
            .iter()
            .all(|&h| (0..n).all(|x| set.binary_search(&group.conjugate(h, x)).is_ok()));
        if closed && conj {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

// oracle: the definition with h and x quantified directly
fn naive_ncp(group: &FiniteGroup) -> bool {
    let normals = naive_normal_subgroups(group);
    let n = group.order();
    for m in &normals {
        for big in &normals {
            if big.len() <= m.len() || !m.iter().all(|x| big.contains(x)) {
                continue;
            }
            for gg in 0..n {
                let gm = group.coset(gg, m);
                let ok = group
                    .coset(gg, big)
                    .iter()
                    .any(|&h| (0..n).all(|x| !gm.contains(&group.conjugate(h, x))));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn constructions() {
    let q = FiniteGroup::quaternion();
    assert_eq!(q.order(), 8);
    assert_eq!(q.labels().unwrap(), ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]);
    let el = |s| q.element(s).unwrap();
    assert_eq!(q.mul(el("i"), el("j")), el("k"));
    assert_eq!(q.mul(el("j"), el("i")), el("-k"));
    assert_eq!(q.mul(el("i"), el("i")), el("-1"));
    assert_eq!(g("S3").order(), 6);
    let v = g("C2xC2");
    assert_eq!((v.order(), v.exponent()), (4, 2));
    assert_eq!(g("A5").order(), 60);
    assert_eq!(g("C2xQ8").order(), 16);
    let d = g("D8");
    let (a, x) = (d.element("a").unwrap(), d.element("x").unwrap());
    assert_eq!(d.conjugate(a, x), d.element("a^3").unwrap());
    assert_eq!(d.label(d.mul(a, x)), "ax");
    let s = g("S3");
    assert_eq!(s.labels().unwrap(), ["e", "(2,3)", "(1,2)", "(1,2,3)", "(1,3,2)", "(1,3)"]);
}

#[test]
fn tables_are_validated() {
    let bad = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
    assert!(matches!(FiniteGroup::from_table(bad, None), Err(Error::InvalidInput(_))));
    // a Latin square with identity that is not associative
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    assert!(FiniteGroup::from_table(loop5, None).is_err());
    let dup = Some(vec!["a".to_string(), "a".to_string()]);
    assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], dup).is_err());
    let c3 = g("C3");
    let json = serde_json::to_string(&c3.to_table()).unwrap();
    assert_eq!(FiniteGroup::from_json(&json).unwrap(), c3);
    assert!(matches!(FiniteGroup::from_spec("Z7"), Err(Error::Parse(_))));
    assert!(matches!(FiniteGroup::cyclic(513), Err(Error::BudgetExceeded(_))));
}

#[test]
fn quaternion_normal_subgroups() {
    let q = FiniteGroup::quaternion();
    let ns: Vec<Vec<String>> = q.normal_subgroups().unwrap().iter().map(|s| labels(&q, s)).collect();
    let expect: Vec<Vec<&str>> = vec![
        vec!["1"],
        vec!["1", "-1"],
        vec!["1", "-1", "i", "-i"],
        vec!["1", "-1", "j", "-j"],
        vec!["1", "-1", "k", "-k"],
        vec!["1", "-1", "i", "-i", "j", "-j", "k", "-k"],
    ];
    assert_eq!(ns, expect);
    let classes: Vec<Vec<String>> = q.conjugacy_classes().iter().map(|c| labels(&q, c)).collect();
    assert_eq!(classes, [vec!["1"], vec!["-1"], vec!["i", "-i"], vec!["j", "-j"], vec!["k", "-k"]]);
}

#[test]
fn normal_subgroups_match_the_naive_filter() {
    for spec in [
        "C1", "C4", "C2xC2", "S3", "C6", "D8", "Q8", "C2xC2xC2", "A4", "D12", "C2xS3", "C4xC4", "D16", "C2xQ8",
    ] {
        let group = g(spec);
        assert_eq!(group.normal_subgroups().unwrap(), naive_normal_subgroups(&group), "{spec}");
    }
    let s3 = g("S3");
    let ns: Vec<usize> = s3.normal_subgroups().unwrap().iter().map(Vec::len).collect();
    assert_eq!(ns, [1, 3, 6]);
    assert_eq!(g("C4").normal_subgroups().unwrap().len(), 3);
}

#[test]
fn verdict_table() {
    for spec in ["C2", "C3", "C4", "C2xC2", "C6", "A5", "C5", "C7", "C2xC4"] {
        assert!(has_ncp(&g(spec)).unwrap().holds(), "{spec}");
    }
    for spec in ["S3", "D8", "A4", "Q8"] {
        let group = g(spec);
        let verdict = has_ncp(&group).unwrap();
        let c = verdict.counterexample.expect(spec);
        assert!(verify_counterexample(&group, &c), "{spec}");
    }
    let s3 = g("S3");
    let c = has_ncp(&s3).unwrap().counterexample.unwrap();
    assert_eq!(labels(&s3, &c.m), ["e"]);
    assert_eq!(labels(&s3, &c.n), ["e", "(1,2,3)", "(1,3,2)"]);
    assert_eq!(s3.element_order(c.g), 2);
    let d8 = g("D8");
    let c = has_ncp(&d8).unwrap().counterexample.unwrap();
    assert_eq!((labels(&d8, &c.m), labels(&d8, &c.n), d8.label(c.g)), (vec!["e".to_string()], vec!["e".to_string(), "a^2".to_string()], "a".to_string()));
    let a4 = g("A4");
    let c = has_ncp(&a4).unwrap().counterexample.unwrap();
    assert_eq!(c.m.len(), 1);
    assert_eq!(c.n.len(), 4);
    assert_eq!(a4.element_order(c.g), 3);
    // the center {1, -1} is covered the same way as in D8: i and -i are
    // conjugate
    let q8 = FiniteGroup::quaternion();
    let c = has_ncp(&q8).unwrap().counterexample.unwrap();
    assert_eq!((labels(&q8, &c.m), labels(&q8, &c.n), q8.label(c.g)), (vec!["1".to_string()], vec!["1".to_string(), "-1".to_string()], "i".to_string()));
}

#[test]
fn verdicts_match_the_definition() {
    for spec in ["C4", "C2xC2", "S3", "C6", "D8", "Q8", "A4", "D12", "C2xS3", "D10", "C2xQ8"] {
        let group = g(spec);
        assert_eq!(has_ncp(&group).unwrap().holds(), naive_ncp(&group), "{spec}");
    }
}

#[test]
fn products() {
    for (a, b) in [("C2", "C2"), ("C3", "C4"), ("A5", "C2")] {
        let r = product_ncp_test(&g(a), &g(b)).unwrap();
        assert!(r.g.holds() && r.h.holds() && r.product.holds(), "{a} x {b}");
        assert!(!r.violation());
    }
    for (a, b) in [("Q8", "C3"), ("Q8", "Q8")] {
        let r = product_ncp_test(&g(a), &g(b)).unwrap();
        assert!(!r.g.holds() && !r.product.holds(), "{a} x {b}");
        assert!(!r.violation());
    }
    let r = product_ncp_test(&g("S3"), &g("C2")).unwrap();
    assert!(!r.g.holds() && !r.violation());
}

#[test]
fn goursat() {
    let c2 = g("C2");
    let diag = [FiniteGroup::pair_index(2, 0, 0), FiniteGroup::pair_index(2, 1, 1)];
    let r = goursat_check(&c2, &c2, &diag).unwrap();
    assert_eq!((r.n1.clone(), r.n2.clone()), (vec![0], vec![0]));
    assert_eq!(r.pairing, [(vec![0], vec![0]), (vec![1], vec![1])]);

    let whole: Vec<usize> = (0..4).collect();
    let r = goursat_check(&c2, &c2, &whole).unwrap();
    assert_eq!(r.pairing, [(vec![0, 1], vec![0, 1])]);

    let c3 = g("C3");
    let graph: Vec<usize> = (0..3).map(|a| FiniteGroup::pair_index(3, a, c3.inv(a))).collect();
    let r = goursat_check(&c3, &c3, &graph).unwrap();
    // oracle: the 3 elements of the graph give a bijection a -> a^-1
    let mut images: Vec<usize> = graph.iter().map(|p| p % 3).collect();
    images.sort_unstable();
    assert_eq!(images, [0, 1, 2]);
    for (a, b) in &r.pairing {
        assert_eq!(b, &vec![c3.inv(a[0])]);
    }

    let left = [FiniteGroup::pair_index(2, 0, 0), FiniteGroup::pair_index(2, 1, 0)];
    assert!(matches!(goursat_check(&c2, &c2, &left), Err(Error::InvalidInput(_))));
    assert!(goursat_check(&c2, &c2, &[1]).is_err());
}

#[test]
fn isomorphism_labels() {
    for (spec, name) in [
        ("C1", "C1"),
        ("C4", "C4"),
        ("C2xC2", "C2xC2"),
        ("S3", "S3"),
        ("C6", "C6"),
        ("D8", "D8"),
        ("Q8", "Q8"),
        ("C2xC4", "C4xC2"),
        ("C2xC2xC2", "C2xC2xC2"),
    ] {
        assert_eq!(g(spec).isomorphism_label().as_deref(), Some(name), "{spec}");
    }
    assert_eq!(g("A4").isomorphism_label(), None);
}

#[test]
fn subgroup_lattices() {
    // oracle: the subset filter without the normality condition
    for (spec, count) in [("C1", 1), ("C4", 3), ("C2xC2", 5), ("S3", 6), ("D8", 10), ("Q8", 6), ("A4", 10)] {
        let group = g(spec);
        let subs = group.subgroups().unwrap();
        assert_eq!(subs.len(), count, "{spec}");
        let n = group.order();
        let others: Vec<usize> = (0..n).filter(|&x| x != group.identity()).collect();
        let mut naive = Vec::new();
        for mask in 0u32..(1 << others.len()) {
            let mut set = vec![group.identity()];
            set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
            set.sort_unstable();
            if group.is_subgroup(&set) {
                naive.push(set);
            }
        }
        naive.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        assert_eq!(subs, naive, "{spec}");
    }
}
