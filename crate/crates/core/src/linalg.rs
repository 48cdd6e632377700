//! Dense exact matrix algebra over a finite field.
//!
//! Row-major storage, plain Gaussian elimination with first-nonzero pivoting
//! (exact arithmetic needs no pivot heuristics, and the fixed strategy keeps
//! golden outputs stable). The Kronecker product uses left-major pair
//! ordering: index (i,k) of `kron(A, B)` flattens to `i * rows(B) + k`.

use crate::field::{Field, FieldElement, FieldError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.literal())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.field.format_element(self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer entries (reduced into the prime field).
    pub fn from_ints(field: &Field, entries: &[&[i64]]) -> Matrix {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows, cols, |i, j| field.from_int(entries[i][j]))
    }

    /// Permutation matrix: column `j` has a one in row `images[j]`,
    /// so `M e_j = e_{images[j]}`.
    pub fn permutation(field: &Field, images: &[usize]) -> Matrix {
        let n = images.len();
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in images.iter().enumerate() {
            m.set(i, j, field.one());
        }
        m
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
    pub fn at(&self, i: usize, j: usize) -> &FieldElement {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.field.is_zero(e))
    }

    fn same_field(&self, other: &Matrix) {
        assert!(self.field == other.field, "matrices over different fields");
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "add: shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "sub: shape mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.cols, other.rows, "mul: inner dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = f.mul(a, other.at(k, j));
                    let idx = i * out.cols + j;
                    f.add_assign(&mut out.data[idx], &t);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn trace(&self) -> FieldElement {
        assert!(self.is_square(), "trace of non-square matrix");
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows {
            acc = f.add(&acc, self.at(i, i));
        }
        acc
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        Matrix::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.at(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.at(i, j).clone());
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, 1, |i, _| self.at(i, j).clone())
    }

    pub fn row(&self, i: usize) -> Matrix {
        Matrix::from_fn(&self.field, 1, self.cols, |_, j| self.at(i, j).clone())
    }

    pub fn select_columns(&self, sel: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, sel.len(), |i, j| {
            self.at(i, sel[j]).clone()
        })
    }

    pub fn select_rows(&self, sel: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, sel.len(), self.cols, |i, j| {
            self.at(sel[i], j).clone()
        })
    }

    /// Entry-wise image of the matrix under a field embedding.
    pub fn map_entries(&self, emb: &crate::field::Embedding) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(emb.apply(e));
        }
        Matrix {
            field: emb.target().clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product with left-major pair ordering:
    /// `out[(i*rB + k), (j*cB + l)] = A[i,j] * B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        let f = &self.field;
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Matrix::zeros(f, ra * rb, ca * cb);
        for i in 0..ra {
            for j in 0..ca {
                let a = self.at(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        out.set(i * rb + k, j * cb + l, f.mul(a, other.at(k, l)));
                    }
                }
            }
        }
        out
    }

    /// Adds `c * kron(self_block, other)` into `acc` without materializing the
    /// Kronecker product; used by the transport sum over the whole group.
    pub fn kron_add_into(acc: &mut Matrix, a: &Matrix, b: &Matrix) {
        let f = acc.field.clone();
        let (rb, cb) = (b.rows, b.cols);
        assert_eq!(acc.rows, a.rows * rb);
        assert_eq!(acc.cols, a.cols * cb);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let av = a.at(i, j);
                if f.is_zero(av) {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let t = f.mul(av, b.at(k, l));
                        let idx = (i * rb + k) * acc.cols + (j * cb + l);
                        f.add_assign(&mut acc.data[idx], &t);
                    }
                }
            }
        }
    }

    /// Reduced row echelon form with transform record: `transform * self`
    /// equals the returned echelon matrix.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut t = Matrix::identity(&f, self.rows);
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            // first nonzero entry in column order
            let mut pivot_row = None;
            for i in r..m.rows {
                if !f.is_zero(m.at(i, c)) {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
                for j in 0..t.cols {
                    t.data.swap(pr * t.cols + j, r * t.cols + j);
                }
            }
            let inv = f.inv(m.at(r, c)).unwrap();
            if !f.is_one(&inv) {
                for j in 0..m.cols {
                    let v = f.mul(m.at(r, j), &inv);
                    m.set(r, j, v);
                }
                for j in 0..t.cols {
                    let v = f.mul(t.at(r, j), &inv);
                    t.set(r, j, v);
                }
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.at(i, c)) {
                    continue;
                }
                let factor = m.at(i, c).clone();
                for j in 0..m.cols {
                    let s = f.mul(&factor, m.at(r, j));
                    let v = f.sub(m.at(i, j), &s);
                    m.set(i, j, v);
                }
                for j in 0..t.cols {
                    let s = f.mul(&factor, t.at(r, j));
                    let v = f.sub(t.at(i, j), &s);
                    t.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
            transform: t,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel {v : Av = 0}, one basis vector per column,
    /// ordered by free column index.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let r = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, f.one());
            for (row, &pc) in r.pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(r.matrix.at(row, fc)));
            }
        }
        basis
    }

    /// Solves AX = B exactly; `None` when some column of B is outside the
    /// column space of A. Free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if self.field != b.field {
            return Err(LinalgError::ShapeMismatch("field mismatch".into()));
        }
        if self.rows != b.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "solve: {}x{} vs {}x{}",
                self.rows, self.cols, b.rows, b.cols
            )));
        }
        let f = &self.field;
        let r = self.rref();
        let rb = r.transform.mul(b);
        // consistency: rows beyond the rank must be zero in the reduced rhs
        for i in r.rank..self.rows {
            for j in 0..b.cols {
                if !f.is_zero(rb.at(i, j)) {
                    return Ok(None);
                }
            }
        }
        let mut x = Matrix::zeros(f, self.cols, b.cols);
        for (row, &pc) in r.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, rb.at(row, j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let r = self.rref();
        if r.rank < self.rows {
            return None;
        }
        Some(r.transform)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> FieldElement {
        assert!(self.is_square(), "det of non-square matrix");
        let f = self.field.clone();
        let mut m = self.clone();
        let n = m.rows;
        let mut det = f.one();
        for c in 0..n {
            let mut pivot_row = None;
            for i in c..n {
                if !f.is_zero(m.at(i, c)) {
                    pivot_row = Some(i);
                    break;
                }
            }
            let Some(pr) = pivot_row else {
                return f.zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = f.neg(&det);
            }
            let piv = m.at(c, c).clone();
            det = f.mul(&det, &piv);
            let inv = f.inv(&piv).unwrap();
            for i in (c + 1)..n {
                if f.is_zero(m.at(i, c)) {
                    continue;
                }
                let factor = f.mul(m.at(i, c), &inv);
                for j in c..n {
                    let s = f.mul(&factor, m.at(c, j));
                    let v = f.sub(m.at(i, j), &s);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Flattens to a column vector in row-major order, matching the kron
    /// pair-index convention.
    pub fn vec(&self) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows * self.cols,
            cols: 1,
            data: self.data.clone(),
        }
    }

    /// Inverse of [`Matrix::vec`] for the given shape.
    pub fn unvec(v: &Matrix, rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.cols, 1);
        assert_eq!(v.rows, rows * cols);
        Matrix {
            field: v.field.clone(),
            rows,
            cols,
            data: v.data.clone(),
        }
    }

    /// Matrix literal: JSON array-of-arrays of element strings.
    pub fn to_literal(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                let row: Vec<serde_json::Value> = (0..self.cols)
                    .map(|j| serde_json::Value::String(self.field.format_element(self.at(i, j))))
                    .collect();
                serde_json::Value::Array(row)
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    pub fn from_literal(field: &Field, v: &serde_json::Value) -> Result<Matrix, FieldError> {
        let rows = v
            .as_array()
            .ok_or_else(|| FieldError::BadLiteral("matrix literal must be an array".into()))?;
        let mut entries: Vec<Vec<FieldElement>> = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| FieldError::BadLiteral("matrix row must be an array".into()))?;
            let mut out = Vec::with_capacity(row.len());
            for cell in row {
                let s = cell
                    .as_str()
                    .ok_or_else(|| FieldError::BadLiteral("matrix entry must be a string".into()))?;
                out.push(field.parse_element(s)?);
            }
            entries.push(out);
        }
        let r = entries.len();
        let c = entries.first().map_or(0, |r| r.len());
        if entries.iter().any(|row| row.len() != c) {
            return Err(FieldError::BadLiteral("ragged matrix literal".into()));
        }
        Ok(Matrix::from_fn(field, r, c, |i, j| entries[i][j].clone()))
    }
}

/// Result of row reduction: echelon form, rank, pivot columns and the
/// invertible transform with `transform * input = matrix`.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub transform: Matrix,
}

/// Basis of the intertwiner space {T : T * A_i = B_i * T for all i}.
///
/// `dims = (r, c)`: T is r x c, each A_i is c x c and each B_i is r x r.
/// With no constraints the answer is the full matrix space.
pub fn intertwiner_space(field: &Field, dims: (usize, usize), pairs: &[(Matrix, Matrix)]) -> Vec<Matrix> {
    let (r, c) = dims;
    let unknowns = r * c;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut system = Matrix::zeros(field, 0, unknowns);
    for (a, b) in pairs {
        assert_eq!(a.rows(), c);
        assert_eq!(a.cols(), c);
        assert_eq!(b.rows(), r);
        assert_eq!(b.cols(), r);
        // T*A - B*T = 0  <=>  (kron(I, A^T) - kron(B, I)) vec(T) = 0
        let lhs = Matrix::identity(field, r).kron(&a.transpose());
        let rhs = b.kron(&Matrix::identity(field, c));
        system = system.vstack(&lhs.sub(&rhs));
    }
    if system.rows() == 0 {
        system = Matrix::zeros(field, 1, unknowns);
    }
    let ns = system.nullspace();
    (0..ns.cols())
        .map(|j| Matrix::unvec(&ns.column(j), r, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn gf3() -> Field {
        Field::prime(3).unwrap()
    }

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn rref_identity() {
        let f = gf3();
        let i3 = Matrix::identity(&f, 3);
        let r = i3.rref();
        assert_eq!(r.matrix, i3);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let f = gf3();
        let z = Matrix::zeros(&f, 2, 2);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        // second row is 2 * first over GF(3)
        let f = gf3();
        let m = Matrix::from_ints(&f, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.transform.mul(&m), r.matrix);
    }

    #[test]
    fn nullspace_identity_empty() {
        let f = gf3();
        assert_eq!(Matrix::identity(&f, 3).nullspace().cols(), 0);
    }

    #[test]
    fn nullspace_zero_full() {
        let f = gf3();
        let ns = Matrix::zeros(&f, 2, 2).nullspace();
        assert_eq!(ns.cols(), 2);
    }

    #[test]
    fn nullspace_gf2_line() {
        let f = gf2();
        let m = Matrix::from_ints(&f, &[&[1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 1);
        assert_eq!(ns.at(0, 0), &f.one());
        assert_eq!(ns.at(1, 0), &f.one());
        assert!(m.mul(&ns).is_zero());
    }

    #[test]
    fn solve_identity() {
        let f = gf3();
        let b = Matrix::from_ints(&f, &[&[1, 2], &[0, 1]]);
        let x = Matrix::identity(&f, 2).solve(&b).unwrap().unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn solve_inconsistent() {
        let f = gf3();
        let a = Matrix::zeros(&f, 2, 2);
        let b = Matrix::from_ints(&f, &[&[1], &[0]]);
        assert!(a.solve(&b).unwrap().is_none());
    }

    #[test]
    fn solve_upper_triangular() {
        let f = gf3();
        let a = Matrix::from_ints(&f, &[&[1, 2], &[0, 1]]);
        let x = a.solve(&Matrix::identity(&f, 2)).unwrap().unwrap();
        assert_eq!(x, Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]));
        assert_eq!(a.mul(&x), Matrix::identity(&f, 2));
    }

    #[test]
    fn kron_identities() {
        let f = gf3();
        let i2 = Matrix::identity(&f, 2);
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i2.kron(&i3), Matrix::identity(&f, 6));
        let a = Matrix::from_ints(&f, &[&[1, 2], &[0, 1]]);
        let one = Matrix::identity(&f, 1);
        assert_eq!(a.kron(&one), a);
    }

    #[test]
    fn kron_swap_times_scalar() {
        let f = gf3();
        let swap = Matrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        let two = Matrix::from_ints(&f, &[&[2]]);
        assert_eq!(
            swap.kron(&two),
            Matrix::from_ints(&f, &[&[0, 2], &[2, 0]])
        );
    }

    #[test]
    fn kron_mixed_product() {
        let f = gf3();
        let a = Matrix::from_ints(&f, &[&[1, 2], &[2, 0]]);
        let b = Matrix::from_ints(&f, &[&[1, 1, 0], &[0, 2, 1], &[1, 0, 1]]);
        let c = Matrix::from_ints(&f, &[&[2, 1], &[1, 1]]);
        let d = Matrix::from_ints(&f, &[&[1, 0, 2], &[2, 2, 0], &[0, 1, 1]]);
        assert_eq!(
            a.kron(&b).mul(&c.kron(&d)),
            a.mul(&c).kron(&b.mul(&d))
        );
    }

    #[test]
    fn det_multiplicative() {
        let f = gf3();
        let a = Matrix::from_ints(&f, &[&[1, 2, 0], &[2, 1, 1], &[0, 1, 1]]);
        let b = Matrix::from_ints(&f, &[&[2, 0, 1], &[1, 1, 0], &[0, 2, 2]]);
        assert_eq!(a.mul(&b).det(), f.mul(&a.det(), &b.det()));
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf3();
        let a = Matrix::from_ints(&f, &[&[1, 2], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(&f, 2));
        let singular = Matrix::from_ints(&f, &[&[1, 2], &[2, 1]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn intertwiner_space_unconstrained_is_full() {
        let f = gf2();
        let basis = intertwiner_space(&f, (2, 2), &[]);
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn matrix_literal_roundtrip() {
        let f = Field::make(3, 2, None).unwrap();
        let x = f.gen();
        let m = Matrix::from_fn(&f, 2, 2, |i, j| if i == j { x.clone() } else { f.one() });
        let lit = m.to_literal();
        let back = Matrix::from_literal(&f, &lit).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn kron_add_into_accumulates() {
        let f = gf3();
        let a = Matrix::from_ints(&f, &[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&f, &[&[2, 1], &[1, 0]]);
        let mut acc = Matrix::zeros(&f, 4, 4);
        Matrix::kron_add_into(&mut acc, &a, &b);
        Matrix::kron_add_into(&mut acc, &a, &b);
        assert_eq!(acc, a.kron(&b).scale(&f.from_int(2)));
    }
}
