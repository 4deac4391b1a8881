//! Dense exact linear algebra over a [`Field`].

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row of length {} (expected {cols})", r.len())));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [E] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.rows, cols: cols.len(), data }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.cols * rows.len());
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { rows: rows.len(), cols: self.cols, data }
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(cols: usize, parts: &[Matrix<E>]) -> Result<Self> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::ShapeMismatch("vstack column mismatch".into()));
            }
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|e| field.is_zero(e))
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Matrix<E>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                let neg_a = field.neg(a);
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !field.is_zero(b) {
                        field.sub_mul_assign(&mut out.data[i * other.cols + j], &neg_a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Result<Vec<E>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|r| dot(field, self.row(r), v)).collect())
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, s: &E) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| field.mul(e, s)).collect() }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Matrix<E>) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("matrix sum of different shapes".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| field.add(a, b)).collect(),
        })
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !field.is_zero(x) && !field.is_zero(y) {
            acc = field.add(&acc, &field.mul(x, y));
        }
    }
    acc
}

/// Reduced row echelon form with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<E> {
    /// Nonzero rows only, ordered by pivot column.
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

impl<E: Clone> Rref<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` modulo the row space: the result vanishes on every pivot column.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &mut [E]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if field.is_zero(&v[p]) {
                continue;
            }
            let factor = v[p].clone();
            let row = self.matrix.row(r);
            for (c, x) in row.iter().enumerate().skip(p) {
                if !field.is_zero(x) {
                    field.sub_mul_assign(&mut v[c], &factor, x);
                }
            }
        }
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.matrix.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.matrix.cols()).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Incremental row-echelon builder; rows are kept fully reduced against each
/// other so [`EchelonBasis::finish`] yields a true RREF.
#[derive(Debug, Clone)]
pub struct EchelonBasis<F: Field> {
    field: F,
    cols: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: F, cols: usize) -> Self {
        EchelonBasis { field, cols, rows: Vec::new(), pivots: Vec::new(), pivot_of_col: vec![None; cols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Inserts a row; returns whether it enlarged the span.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> Result<bool> {
        if row.len() != self.cols {
            return Err(Error::ShapeMismatch(format!("row of length {} (expected {})", row.len(), self.cols)));
        }
        let f = &self.field;
        for c in 0..self.cols {
            if f.is_zero(&row[c]) {
                continue;
            }
            if let Some(r) = self.pivot_of_col[c] {
                let factor = row[c].clone();
                let basis_row = &self.rows[r];
                for k in c..self.cols {
                    if !f.is_zero(&basis_row[k]) {
                        f.sub_mul_assign(&mut row[k], &factor, &basis_row[k]);
                    }
                }
            }
        }
        let Some(p) = row.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        let inv = f.inv(&row[p]).ok_or(Error::DivisionByZero)?;
        for x in row.iter_mut().skip(p) {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        // Back-substitute so earlier rows vanish on the new pivot.
        for other in self.rows.iter_mut() {
            if f.is_zero(&other[p]) {
                continue;
            }
            let factor = other[p].clone();
            for k in p..self.cols {
                if !f.is_zero(&row[k]) {
                    f.sub_mul_assign(&mut other[k], &factor, &row[k]);
                }
            }
        }
        self.push(row, p);
        Ok(true)
    }

    fn push(&mut self, row: Vec<F::Elem>, pivot: usize) {
        self.pivot_of_col[pivot] = Some(self.rows.len());
        self.rows.push(row);
        self.pivots.push(pivot);
    }

    pub fn finish(self) -> Rref<F::Elem> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.pivots[r]);
        let pivots: Vec<usize> = order.iter().map(|&r| self.pivots[r]).collect();
        let mut data = Vec::with_capacity(order.len() * self.cols);
        let mut rows: Vec<Option<Vec<F::Elem>>> = self.rows.into_iter().map(Some).collect();
        let f = &self.field;
        for &r in &order {
            let row = rows[r].take().expect("each row used once");
            let inv = f.inv(&row[self.pivots[r]]).expect("pivot is nonzero");
            if f.is_one(&inv) {
                data.extend(row);
            } else {
                data.extend(row.iter().map(|x| if f.is_zero(x) { f.zero() } else { f.mul(x, &inv) }));
            }
        }
        Rref { matrix: Matrix { rows: order.len(), cols: self.cols, data }, pivots }
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                a.data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = field.inv(a.get(r, c)).expect("pivot is nonzero");
        for k in c..cols {
            let v = field.mul(a.get(r, k), &inv);
            a.set(r, k, v);
        }
        let pivot_row: Vec<F::Elem> = a.row(r)[c..].to_vec();
        for i in 0..rows {
            if i == r || field.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            let row = a.row_mut(i);
            for (k, pv) in pivot_row.iter().enumerate() {
                if !field.is_zero(pv) {
                    field.sub_mul_assign(&mut row[c + k], &factor, pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.data.truncate(r * cols);
    a.rows = r;
    Rref { matrix: a, pivots }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    if m.rows <= m.cols {
        rref(field, m).rank()
    } else {
        rref(field, &m.transpose()).rank()
    }
}

/// Basis of the right kernel `{x : Mx = 0}`, returned as the columns of a
/// `cols x k` matrix.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let red = rref(field, m);
    let free = red.free_columns();
    let n = m.cols;
    let mut out = Matrix::zeros(field, n, free.len());
    for (j, &fc) in free.iter().enumerate() {
        out.set(fc, j, field.one());
        for (r, &p) in red.pivots.iter().enumerate() {
            let v = red.matrix.get(r, fc);
            if !field.is_zero(v) {
                out.set(p, j, field.neg(v));
            }
        }
    }
    out
}

/// Some solution of `Mx = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    if b.len() != m.rows {
        return Err(Error::ShapeMismatch(format!("right-hand side of length {} for {} rows", b.len(), m.rows)));
    }
    let mut data = Vec::with_capacity(m.rows * (m.cols + 1));
    for (r, rhs) in b.iter().enumerate() {
        data.extend_from_slice(m.row(r));
        data.push(rhs.clone());
    }
    let aug = Matrix { rows: m.rows, cols: m.cols + 1, data };
    let red = rref(field, &aug);
    if red.pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); m.cols];
    for (r, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix.get(r, m.cols).clone();
    }
    Ok(Some(x))
}

/// Determinant by fraction-free (Bareiss) elimination. Over Q with integer
/// input every intermediate stays an integer minor.
pub fn det<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<F::Elem> {
    if m.rows != m.cols {
        return Err(Error::ShapeMismatch(format!("determinant of a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(field.one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = field.one();
    for k in 0..n - 1 {
        if field.is_zero(a.get(k, k)) {
            let Some(swap) = (k + 1..n).find(|&i| !field.is_zero(a.get(i, k))) else {
                return Ok(field.zero());
            };
            for c in 0..n {
                a.data.swap(k * n + c, swap * n + c);
            }
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = field.sub(&field.mul(a.get(i, j), &pivot), &field.mul(a.get(i, k), a.get(k, j)));
                let v = field.div(&num, &prev)?;
                a.set(i, j, v);
            }
            a.set(i, k, field.zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { field.neg(&d) } else { d })
}

pub fn random_vector<F: Field, R: Rng + ?Sized>(field: &F, len: usize, rng: &mut R) -> Vec<F::Elem> {
    (0..len).map(|_| field.random(rng)).collect()
}

pub fn random_matrix<F: Field, R: Rng + ?Sized>(field: &F, rows: usize, cols: usize, rng: &mut R) -> Matrix<F::Elem> {
    Matrix { rows, cols, data: random_vector(field, rows * cols, rng) }
}

type SparseRow<E> = Vec<(usize, E)>;

/// Rank of a sparse matrix given as rows of `(column, value)` pairs sorted by
/// column. Used for boundary matrices, which stay sparse under elimination.
pub fn sparse_rank<F: Field>(field: &F, ncols: usize, rows: Vec<Vec<(usize, F::Elem)>>) -> usize {
    let mut pivot_rows: Vec<Option<SparseRow<F::Elem>>> = vec![None; ncols];
    let mut rank = 0;
    for mut row in rows {
        row.retain(|(_, v)| !field.is_zero(v));
        while let Some((lead, lead_val)) = row.first().cloned() {
            match &pivot_rows[lead] {
                None => {
                    let inv = field.inv(&lead_val).expect("nonzero lead");
                    let normalized = row.into_iter().map(|(c, v)| (c, field.mul(&v, &inv))).collect();
                    pivot_rows[lead] = Some(normalized);
                    rank += 1;
                    break;
                }
                Some(prow) => {
                    row = sparse_axpy(field, &row, &lead_val, prow);
                }
            }
        }
    }
    rank
}

/// `a - s * b` for sorted sparse rows.
fn sparse_axpy<F: Field>(
    field: &F,
    a: &[(usize, F::Elem)],
    s: &F::Elem,
    b: &[(usize, F::Elem)],
) -> Vec<(usize, F::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, field.neg(&field.mul(s, &b[j].1))));
            j += 1;
        } else {
            let mut v = a[i].1.clone();
            field.sub_mul_assign(&mut v, s, &b[j].1);
            if !field.is_zero(&v) {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
