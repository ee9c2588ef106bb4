//! Dense matrices over a [`Field`] and exact row reduction.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { field, rows: r, cols, data }
    }

    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.int(v)).collect()).collect();
        Matrix::from_rows(field, rows, cols)
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let i = r * self.cols + c;
        self.data[i] = &self.data[i] + v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `self` on top of `o`.
    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Places `o` to the right of `self`.
    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..o.cols {
                m.set(r, self.cols + c, o.get(r, c).clone());
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv();
            if !inv.is_one() {
                for j in c..m.cols {
                    let v = m.get(r, j) * &inv;
                    m.set(r, j, v);
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.get(r, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) - &(&f * b);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rref().pivots.len()
}

/// Basis of the right kernel, one vector per free column.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let Rref { matrix: r, pivots } = m.rref();
    let field = m.field;
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free);
        }
        out.push(v);
    }
    out
}

/// Some `x` with `m x = b`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows, "right-hand side has wrong length");
    let field = m.field;
    let bcol = Matrix::from_cols(field, m.rows, &[b.to_vec()]);
    let Rref { matrix: r, pivots } = m.hstack(&bcol).rref();
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r.get(i, m.cols).clone();
    }
    Some(x)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows, m.cols, "inverse of a non-square matrix");
    let n = m.rows;
    let Rref { matrix: r, pivots } = m.hstack(&Matrix::identity(m.field, n)).rref();
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(r.select_cols(&cols))
}

/// Incremental span membership: keeps an echelon basis of the vectors inserted so far.
#[derive(Clone)]
pub struct SpanBuilder {
    len: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanBuilder {
    pub fn new(len: usize) -> SpanBuilder {
        SpanBuilder { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let f = w[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, r) in row.iter().enumerate() {
                if !r.is_zero() {
                    w[j] = &w[j] - &(&f * r);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Inserts `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.len);
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].inv();
        let w: Vec<Scalar> = w.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if !f.is_zero() {
                for j in 0..row.len() {
                    if !w[j].is_zero() {
                        row[j] = &row[j] - &(&f * &w[j]);
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::identity(Q, 2)), 2);
        assert_eq!(rank(&Matrix::zeros(Q, 3, 4)), 0);
        assert_eq!(rank(&Matrix::from_ints(Q, &[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(Q, 3)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(Q, 2, 3)).len(), 3);
        let k = kernel_basis(&Matrix::from_ints(Q, &[vec![1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0] + &k[0][1], Q.zero());
        assert!(!k[0][0].is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = vec![Q.int(3), Q.int(-1)];
        assert_eq!(solve(&Matrix::identity(Q, 2), &b), Some(b.clone()));
        let m = Matrix::from_ints(Q, &[vec![1, 1]]);
        let x = solve(&m, &[Q.int(1)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![Q.int(1)]);
        let m = Matrix::from_ints(Q, &[vec![1], vec![1]]);
        assert!(solve(&m, &[Q.int(1), Q.int(2)]).is_none());
    }

    #[test]
    fn prime_field_rank_differs_only_when_it_should() {
        let m = Matrix::from_ints(Field::Prime(2), &[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&m), 1);
        let m = Matrix::from_ints(Q, &[vec![1, 1], vec![1, -1]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(Q, &[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(inverse(&Matrix::from_ints(Q, &[vec![1, 2], vec![2, 4]])).is_none());
    }

    #[test]
    fn span_builder_tracks_rank() {
        let mut s = SpanBuilder::new(3);
        assert!(s.insert(&[Q.int(1), Q.int(2), Q.int(0)]));
        assert!(s.insert(&[Q.int(0), Q.int(1), Q.int(1)]));
        assert!(!s.insert(&[Q.int(1), Q.int(3), Q.int(1)]));
        assert!(s.contains(&[Q.int(2), Q.int(5), Q.int(1)]));
        assert_eq!(s.dim(), 2);
    }
}
