//! Constructors for the standard small groups and the group spec grammar.

use super::FiniteGroup;
use crate::error::{Error, Result};
use std::collections::HashMap;

fn power_label(i: usize) -> String {
    match i {
        0 => String::new(),
        1 => "a".into(),
        _ => format!("a^{i}"),
    }
}

fn verified(table: Vec<Vec<usize>>, labels: Vec<String>) -> FiniteGroup {
    FiniteGroup::from_table(table, Some(labels)).expect("standard construction is a group")
}

/// Cycle notation with points numbered from 1; `e` for the identity.
fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cyc.push((i + 1).to_string());
            i = p[i];
        }
        out.push_str(&format!("({})", cyc.join(",")));
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// Group of the given permutations (assumed closed), multiplied as maps:
/// `(p q)(i) = p(q(i))`.
fn permutation_group(perms: Vec<Vec<usize>>) -> FiniteGroup {
    let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index[&q.iter().map(|&i| p[i]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    verified(table, labels)
}

impl FiniteGroup {
    /// `C_n` with elements `e, a, a^2, ...`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group order must be positive".into()));
        }
        super::check_budget(n)?;
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n)
            .map(|i| if i == 0 { "e".into() } else { power_label(i) })
            .collect();
        Ok(verified(table, labels))
    }

    /// The dihedral group of the given order `2n`, elements `a^i x^j` at
    /// index `i + n j`, with `x a x^-1 = a^-1`.
    pub fn dihedral(order: usize) -> Result<FiniteGroup> {
        if order < 2 || !order.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "dihedral group order must be even and at least 2, got {order}"
            )));
        }
        super::check_budget(order)?;
        let n = order / 2;
        let table = (0..order)
            .map(|p| {
                let (i, j) = (p % n, p / n);
                (0..order)
                    .map(|q| {
                        let (k, l) = (q % n, q / n);
                        let r = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                        r + n * ((j + l) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..order)
            .map(|p| {
                let (i, j) = (p % n, p / n);
                match (i, j) {
                    (0, 0) => "e".into(),
                    (_, 0) => power_label(i),
                    _ => format!("{}x", power_label(i)),
                }
            })
            .collect();
        Ok(verified(table, labels))
    }

    /// `S_n` for `n <= 5`, permutations in lexicographic order.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidInput(format!("symmetric group degree must be 1..=5, got {n}")));
        }
        Ok(permutation_group(permutations(n)))
    }

    /// `A_n` for `n <= 5`, even permutations in lexicographic order.
    pub fn alternating(n: usize) -> Result<FiniteGroup> {
        if !(1..=5).contains(&n) {
            return Err(Error::InvalidInput(format!("alternating group degree must be 1..=5, got {n}")));
        }
        Ok(permutation_group(permutations(n).into_iter().filter(|p| is_even(p)).collect()))
    }

    /// The quaternion group, elements `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> FiniteGroup {
        // unit k at index 2 * basis + sign, basis 0..4 = 1, i, j, k
        let basis_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 3) => (1, false),
                (3, 1) => (2, false),
                (2, 1) => (3, true),
                (3, 2) => (1, true),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|p| {
                (0..8)
                    .map(|q| {
                        let (c, neg) = basis_mul(p / 2, q / 2);
                        let sign = (p % 2) ^ (q % 2) ^ usize::from(neg);
                        2 * c + sign
                    })
                    .collect()
            })
            .collect();
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
        verified(table, labels)
    }

    /// `G x H` with `(g, h)` at index `g |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
        let (m, n) = (g.order(), h.order());
        super::check_budget(m * n)?;
        let table = (0..m * n)
            .map(|p| {
                (0..m * n)
                    .map(|q| g.mul(p / n, q / n) * n + h.mul(p % n, q % n))
                    .collect()
            })
            .collect();
        let labels = (0..m * n).map(|p| format!("({},{})", g.label(p / n), h.label(p % n))).collect();
        Ok(verified(table, labels))
    }

    /// The embedding `(a, b)` of a pair into `G x H` built by
    /// [`FiniteGroup::direct_product`].
    pub fn pair_index(h_order: usize, a: usize, b: usize) -> usize {
        a * h_order + b
    }

    /// Parses a group spec: `C4`, `S3`, `A4`, `D8`, `Q8`, products such as
    /// `C2xQ8`, or `table:<file.json>` for an explicit table.
    pub fn from_spec(spec: &str) -> Result<FiniteGroup> {
        let spec = spec.trim();
        if let Some(path) = spec.strip_prefix("table:") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read group table {path}: {e}")))?;
            return FiniteGroup::from_json(&text);
        }
        let mut acc: Option<FiniteGroup> = None;
        for part in spec.split('x') {
            let g = parse_atom(part)?;
            acc = Some(match acc {
                None => g,
                Some(a) => FiniteGroup::direct_product(&a, &g)?,
            });
        }
        acc.ok_or_else(|| Error::Parse(format!("empty group spec {spec:?}")))
    }
}

fn parse_atom(s: &str) -> Result<FiniteGroup> {
    let bad = || Error::Parse(format!("unknown group {s:?}; expected C<n>, D<2n>, S<n>, A<n> or Q8"));
    let mut chars = s.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let n: usize = chars.as_str().parse().map_err(|_| bad())?;
    match kind {
        'C' => FiniteGroup::cyclic(n),
        'D' => FiniteGroup::dihedral(n),
        'S' => FiniteGroup::symmetric(n),
        'A' => FiniteGroup::alternating(n),
        'Q' if n == 8 => Ok(FiniteGroup::quaternion()),
        _ => Err(bad()),
    }
}
