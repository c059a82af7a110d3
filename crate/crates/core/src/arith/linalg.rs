//! Exact Gaussian elimination over any [`Field`].

use super::Field;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

struct Row<E> {
    pivot: usize,
    vec: Vec<E>,
    combo: Vec<E>,
}

/// Incrementally maintained span of vectors, kept in reduced echelon form.
///
/// Every echelon row remembers how it is written in terms of the vectors that
/// were accepted by [`SpanBasis::insert`], so membership queries return the
/// explicit coefficients.
pub struct SpanBasis<'a, F: Field> {
    field: &'a F,
    rows: Vec<Row<F::Elem>>,
    accepted: usize,
}

impl<'a, F: Field> SpanBasis<'a, F> {
    pub fn new(field: &'a F) -> Self {
        SpanBasis {
            field,
            rows: Vec::new(),
            accepted: 0,
        }
    }

    /// Number of accepted (independent) vectors.
    pub fn len(&self) -> usize {
        self.accepted
    }

    pub fn is_empty(&self) -> bool {
        self.accepted == 0
    }

    fn get<'v>(&self, v: &'v [F::Elem], i: usize, zero: &'v F::Elem) -> &'v F::Elem {
        v.get(i).unwrap_or(zero)
    }

    /// Subtracts `c * src` from `dst`, growing `dst` as needed.
    fn axpy(&self, dst: &mut Vec<F::Elem>, c: &F::Elem, src: &[F::Elem]) {
        if dst.len() < src.len() {
            dst.resize(src.len(), self.field.zero());
        }
        for (d, s) in dst.iter_mut().zip(src) {
            if !self.field.is_zero(s) {
                *d = self.field.sub(d, &self.field.mul(c, s));
            }
        }
    }

    /// Returns the residual of `v` and the combination (over accepted vectors)
    /// that was subtracted.
    fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let zero = self.field.zero();
        let mut residual = v.to_vec();
        let mut combo = vec![self.field.zero(); self.accepted];
        for row in &self.rows {
            let c = self.get(&residual, row.pivot, &zero).clone();
            if self.field.is_zero(&c) {
                continue;
            }
            self.axpy(&mut residual, &c, &row.vec);
            let neg = self.field.neg(&c);
            self.axpy(&mut combo, &neg, &row.combo);
        }
        (residual, combo)
    }

    /// Coefficients `c` with `v = sum c_i * accepted_i`, if `v` is in the span.
    pub fn express(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let (residual, combo) = self.reduce(v);
        residual
            .iter()
            .all(|x| self.field.is_zero(x))
            .then_some(combo)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.express(v).is_some()
    }

    /// Adds `v` if it is independent of the current span; returns whether it
    /// was accepted.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let (residual, combo) = self.reduce(v);
        let Some(pivot) = residual.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let lead_inv = self.field.inv(&residual[pivot]).expect("nonzero pivot");
        // new row = (v - combo) / lead, so its combination is (e_new - combo) / lead
        let mut row_combo: Vec<F::Elem> = combo.iter().map(|c| self.field.neg(c)).collect();
        row_combo.push(self.field.one());
        let row_combo: Vec<F::Elem> = row_combo
            .iter()
            .map(|c| self.field.mul(c, &lead_inv))
            .collect();
        let row_vec: Vec<F::Elem> = residual
            .iter()
            .map(|c| self.field.mul(c, &lead_inv))
            .collect();
        self.accepted += 1;
        let zero = self.field.zero();
        let mut rows = std::mem::take(&mut self.rows);
        for row in rows.iter_mut() {
            row.combo.resize(self.accepted, self.field.zero());
            let c = self.get(&row.vec, pivot, &zero).clone();
            if !self.field.is_zero(&c) {
                self.axpy(&mut row.vec, &c, &row_vec);
                self.axpy(&mut row.combo, &c, &row_combo);
            }
        }
        rows.push(Row {
            pivot,
            vec: row_vec,
            combo: row_combo,
        });
        self.rows = rows;
        true
    }
}

/// Determinant of a square matrix given as rows.
pub fn det<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    let mut result = field.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !field.is_zero(&m[r][col])) else {
            return field.zero();
        };
        if piv != col {
            m.swap(piv, col);
            result = field.neg(&result);
        }
        let p = m[col][col].clone();
        result = field.mul(&result, &p);
        let p_inv = field.inv(&p).expect("nonzero pivot");
        for r in col + 1..n {
            if field.is_zero(&m[r][col]) {
                continue;
            }
            let factor = field.mul(&m[r][col], &p_inv);
            for c in col..n {
                let sub = field.mul(&factor, &m[col][c]);
                m[r][c] = field.sub(&m[r][c], &sub);
            }
        }
    }
    result
}

/// Determinant of a rational matrix by fraction-free (Bareiss) elimination
/// after clearing the denominators of each row.
pub fn det_rational(m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .into_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigRational::one();
    }
    BigRational::new(sign * &a[n - 1][n - 1], scale)
}

/// Solution of the nonsingular rational system `m y = rhs`, by fraction-free
/// elimination followed by back substitution. `None` when `m` is singular.
pub fn solve_rational(m: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let l = row.iter().chain([b]).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().chain([b]).map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let piv = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(piv, k);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut y = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &y[j];
        }
        y[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Some(y)
}

/// Basis of the right kernel `{v : A v = 0}` of a matrix given as rows with
/// `ncols` columns.
pub fn solve<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m: Vec<Vec<F::Elem>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, field.zero());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(piv, rank);
        let inv = field.inv(&m[rank][col]).expect("nonzero pivot");
        for c in 0..ncols {
            m[rank][c] = field.mul(&m[rank][c], &inv);
        }
        for r in 0..m.len() {
            if r != rank && !field.is_zero(&m[r][col]) {
                let factor = m[r][col].clone();
                for c in 0..ncols {
                    let sub = field.mul(&factor, &m[rank][c]);
                    m[r][c] = field.sub(&m[r][c], &sub);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); ncols];
            v[f] = field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&m[i][f]);
            }
            v
        })
        .collect()
}
