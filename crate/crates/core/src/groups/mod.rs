//! Finite groups given by multiplication tables, with exhaustive structure
//! queries: conjugacy classes, normal subgroups, the non-covering property
//! and Goursat data for subgroups of direct products.
//!
//! Elements are indices `0..n`. Subgroups and other element sets are sorted
//! index vectors.

mod construct;
mod goursat;
mod ncp;

pub use goursat::{goursat_check, GoursatReport};
pub use ncp::{has_ncp, product_ncp_test, verify_counterexample, Counterexample, NcpVerdict, ProductReport};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Largest group order accepted by the exhaustive queries.
pub const GROUP_BUDGET: usize = 512;

/// Environment variable overriding [`GROUP_BUDGET`].
pub const GROUP_BUDGET_VAR: &str = "FIELDTOWER_GROUP_BUDGET";

/// The budget in effect: [`GROUP_BUDGET`] unless overridden by the
/// environment.
pub fn budget() -> usize {
    std::env::var(GROUP_BUDGET_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(GROUP_BUDGET)
}

pub(crate) fn check_budget(n: usize) -> Result<()> {
    let b = budget();
    if n > b {
        return Err(Error::BudgetExceeded(format!(
            "group order {n} exceeds the exhaustive search budget {b}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// JSON form of a group: the table and optional labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds a group from its table, checking closure, identity, inverses
    /// and associativity. Associativity is checked with Light's test on a
    /// generating set, which is equivalent to the full check.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<FiniteGroup> {
        let n = table.len();
        let bad = |what: &str| Err(Error::InvalidInput(format!("table is not a group: {what}")));
        if n == 0 {
            return bad("empty table");
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table must be square with entries below its size");
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return bad("one label per element is required");
            }
            if l.iter().collect::<BTreeSet<_>>().len() != n {
                return bad("labels must be distinct");
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return bad("no identity element");
        };
        let mut inverses = vec![0; n];
        for (x, inv) in inverses.iter_mut().enumerate() {
            match (0..n).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => *inv = y,
                None => return bad("an element has no inverse"),
            }
        }
        let g = FiniteGroup {
            table,
            identity,
            inverses,
            labels,
        };
        for s in g.generating_set() {
            for x in 0..n {
                for y in 0..n {
                    if g.mul(g.mul(x, s), y) != g.mul(x, g.mul(s, y)) {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn from_json(json: &str) -> Result<FiniteGroup> {
        let t: GroupTable = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        FiniteGroup::from_table(t.table, t.labels)
    }

    pub fn to_table(&self) -> GroupTable {
        GroupTable {
            table: self.table.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x^-1 h x`.
    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), h), x)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The label of `a`, or its index when the group is unlabeled.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|s| s == label),
            None => label.parse().ok().filter(|&i| i < self.order()),
        }
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A generating set, chosen greedily by index.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for a in 0..self.order() {
            if span.binary_search(&a).is_err() {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// The subgroup generated by `set`.
    pub fn generated(&self, set: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[self.identity] = true;
        let mut out = vec![self.identity];
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            i += 1;
            for &s in set {
                let b = self.mul(a, s);
                if !seen[b] {
                    seen[b] = true;
                    out.push(b);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut mark = vec![false; self.order()];
        for &a in set {
            if a >= self.order() {
                return false;
            }
            mark[a] = true;
        }
        mark[self.identity] && set.iter().all(|&a| set.iter().all(|&b| mark[self.mul(a, self.inv(b))]))
    }

    pub fn is_normal(&self, set: &[usize]) -> bool {
        let mut mark = vec![false; self.order()];
        for &a in set {
            mark[a] = true;
        }
        self.is_subgroup(set) && set.iter().all(|&h| (0..self.order()).all(|x| mark[self.conjugate(h, x)]))
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut cls: Vec<usize> = (0..n).map(|x| self.conjugate(a, x)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                class_of[c] = id;
            }
            out.push(cls);
        }
        out
    }

    /// Index of the conjugacy class of each element, numbered as in
    /// [`FiniteGroup::conjugacy_classes`].
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        for (i, cls) in self.conjugacy_classes().iter().enumerate() {
            for &c in cls {
                idx[c] = i;
            }
        }
        idx
    }

    /// All normal subgroups, sorted by size and then lexicographically.
    ///
    /// Every normal subgroup is a union of conjugacy classes, and is reached
    /// from the trivial subgroup by repeatedly adding one class and closing
    /// under multiplication.
    pub fn normal_subgroups(&self) -> Result<Vec<Vec<usize>>> {
        check_budget(self.order())?;
        let classes = self.conjugacy_classes();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![vec![self.identity]];
        found.insert(vec![self.identity]);
        while let Some(n) = queue.pop() {
            for cls in &classes {
                if n.binary_search(&cls[0]).is_ok() {
                    continue;
                }
                let mut set = n.clone();
                set.extend(cls);
                let m = self.generated(&set);
                if found.insert(m.clone()) {
                    queue.push(m);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// All subgroups, sorted by size and then lexicographically. Each is
    /// reached from the trivial subgroup by adding one element at a time.
    pub fn subgroups(&self) -> Result<Vec<Vec<usize>>> {
        check_budget(self.order())?;
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = vec![vec![self.identity]];
        found.insert(vec![self.identity]);
        while let Some(h) = queue.pop() {
            for a in 0..self.order() {
                if h.binary_search(&a).is_ok() {
                    continue;
                }
                let mut set = h.clone();
                set.push(a);
                let k = self.generated(&set);
                if found.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The left coset `g S`, sorted.
    pub fn coset(&self, g: usize, set: &[usize]) -> Vec<usize> {
        let mut c: Vec<usize> = set.iter().map(|&s| self.mul(g, s)).collect();
        c.sort_unstable();
        c
    }

    pub fn format_set(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&a| self.label(a)).collect()
    }

    /// Conventional name of the isomorphism type for orders up to 8.
    pub fn isomorphism_label(&self) -> Option<String> {
        let n = self.order();
        let count = |k: usize| (0..n).filter(|&a| self.element_order(a) == k).count();
        let name = match n {
            1 => "C1".to_string(),
            2 | 3 | 5 | 7 => format!("C{n}"),
            4 if count(4) > 0 => "C4".into(),
            4 => "C2xC2".into(),
            6 if self.is_abelian() => "C6".into(),
            6 => "S3".into(),
            8 if count(8) > 0 => "C8".into(),
            8 if self.is_abelian() && count(4) > 0 => "C4xC2".into(),
            8 if self.is_abelian() => "C2xC2xC2".into(),
            8 if count(2) == 1 => "Q8".into(),
            8 => "D8".into(),
            _ => return None,
        };
        Some(name)
    }
}

#[cfg(test)]
mod tests;
