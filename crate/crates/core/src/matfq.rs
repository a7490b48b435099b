//! Dense matrices over a [`Field`] with exact elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(e) = data.iter().find(|e| e.0 >= field.q()) {
            return Err(Error::ElementOutOfRange { value: e.0 as u64, q: field.q() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from integer-encoded rows. All rows must share a length.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, rows: &[R]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r.iter().map(|&v| Elem(v)));
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// The 0x0 matrix; its determinant is 1.
    pub fn empty(field: &Field) -> Matrix {
        Matrix::zeros(field, 0, 0)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(|r| r.iter().map(|e| e.0).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for i in 0..self.cols {
                let a = self.get(r, i);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(i, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise `x -> x^base_q`.
    pub fn conjugate(&self, base_q: u32) -> Result<Matrix> {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e = self.field.conjugate(*e, base_q)?;
        }
        Ok(out)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    /// Column `i` of the result is column `idx[i]` of `self`.
    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for r in 0..self.rows {
            data.extend(idx.iter().map(|&c| self.get(r, c)));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: idx.len(), data }
    }

    /// Multiplies column `j` by `scale[j]`.
    pub fn scale_cols(&self, scale: &[Elem]) -> Result<Matrix> {
        if scale.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{} scalars for {} columns",
                scale.len(),
                self.cols
            )));
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            for (c, &s) in scale.iter().enumerate() {
                out.set(r, c, self.field.mul(self.get(r, c), s));
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let mut data = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols + other.cols, data })
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols, data })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `row[dst] += factor * row[src]`
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: Elem, from_col: usize) {
        let f = &self.field;
        for c in from_col..self.cols {
            let s = self.data[src * self.cols + c];
            if !s.is_zero() {
                let d = &mut self.data[dst * self.cols + c];
                *d = f.add(*d, f.mul(factor, s));
            }
        }
    }

    fn scale_row(&mut self, r: usize, factor: Elem) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let e = &mut self.data[r * self.cols + c];
            *e = f.mul(*e, factor);
        }
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let v = m.get(i, c);
                if i != r && !v.is_zero() {
                    m.add_row_multiple(i, r, f.neg(v), c);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, rank: r, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant by elimination. The 0x0 matrix has determinant 1.
    pub fn det(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Elem::ONE;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if p != c {
                m.swap_rows(c, p);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("pivot is nonzero");
            for i in c + 1..n {
                let v = m.get(i, c);
                if !v.is_zero() {
                    m.add_row_multiple(i, c, f.neg(f.mul(v, inv)), c);
                }
            }
        }
        Ok(det)
    }

    /// Basis (as rows) of the left kernel `{x : x * M = 0}`.
    pub fn left_kernel(&self) -> Matrix {
        let t = self.transpose().rref();
        let f = &self.field;
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !t.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), n);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Elem::ONE);
            for (r, &pc) in t.pivots.iter().enumerate() {
                out.set(i, pc, f.neg(t.matrix.get(r, fc)));
            }
        }
        out
    }

    /// Basis (as rows) of the right kernel `{x : M * x^T = 0}`.
    pub fn right_kernel(&self) -> Matrix {
        self.transpose().left_kernel()
    }

    /// `G * G^T`
    pub fn gram_euclidean(&self) -> Matrix {
        let f = &self.field;
        let k = self.rows;
        let mut out = Matrix::zeros(f, k, k);
        for i in 0..k {
            for j in i..k {
                let v = dot(f, self.row(i), self.row(j));
                out.set(i, j, v);
                out.set(j, i, v);
            }
        }
        out
    }

    /// `G * conj(G)^T` over `F_{base_q^2}`.
    pub fn gram_hermitian(&self, base_q: u32) -> Result<Matrix> {
        let bar = self.conjugate(base_q)?;
        let f = &self.field;
        let k = self.rows;
        let mut out = Matrix::zeros(f, k, k);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, dot(f, self.row(i), bar.row(j)));
            }
        }
        Ok(out)
    }

    /// Deletes the rows and columns listed in `deleted` (0-based).
    pub fn principal_delete(&self, deleted: &[usize]) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if let Some(&i) = deleted.iter().find(|&&i| i >= self.rows) {
            return Err(Error::IndexOutOfRange { index: i + 1, len: self.rows });
        }
        let keep: Vec<usize> = (0..self.rows).filter(|i| !deleted.contains(i)).collect();
        Ok(self.select_rows(&keep).select_cols(&keep))
    }

    /// `M + diag(u)`
    pub fn diag_add(&self, u: &[Elem]) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "diagonal of length {} for a {}x{} matrix",
                u.len(),
                self.rows,
                self.rows
            )));
        }
        let mut out = self.clone();
        for (i, &x) in u.iter().enumerate() {
            out.set(i, i, self.field.add(self.get(i, i), x));
        }
        Ok(out)
    }

    /// True when both matrices have the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let (a, b) = (self.rref(), other.rref());
        a.rank == b.rank && a.matrix.select_rows(&(0..a.rank).collect::<Vec<_>>())
            == b.matrix.select_rows(&(0..b.rank).collect::<Vec<_>>())
    }
}

pub(crate) fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}
