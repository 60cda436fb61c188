use super::{AlgebraError, Field, Permutation};
use serde::{Deserialize, Serialize};

/// A dense row-major matrix over one field. Dimensions are fixed at
/// construction; entries are element encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Output of `Matrix::rref`: `r = u * m` with `u` invertible and `r` in
/// reduced row-echelon form; `pivots` lists the pivot columns.
pub struct RrefResult {
    pub r: Matrix,
    pub u: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<u64>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for x in &row {
                assert!(field.contains(*x), "entry out of range");
            }
            data.extend(row);
        }
        Matrix { field: field.clone(), rows: r, cols: c, data }
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

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(self.field.contains(v));
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Columns indexed by `idx`, in the given order.
    pub fn columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.get(i, j));
            }
        }
        m
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        let mut m = Matrix::zeros(&self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut rows = self.row_vecs();
        rows.extend(other.row_vecs());
        Matrix::from_rows(&self.field, rows)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "mixed fields");
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix: x * M.
    pub fn row_mul(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.rows, "dimension mismatch");
        let f = &self.field;
        let mut out = vec![0u64; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = self.row(i);
            for (j, &m) in row.iter().enumerate() {
                if m != 0 {
                    out[j] = f.add(out[j], f.mul(xi, m));
                }
            }
        }
        out
    }

    /// Matrix times column vector: M * y^T, returned as a plain vector.
    pub fn mul_col(&self, y: &[u64]) -> Vec<u64> {
        assert_eq!(y.len(), self.cols, "dimension mismatch");
        (0..self.rows).map(|i| self.field.dot(self.row(i), y)).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        assert_eq!(self.field, other.field);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Reduced row-echelon form together with the transformation matrix.
    pub fn rref(&self) -> RrefResult {
        let f = self.field.clone();
        let mut r = self.clone();
        let mut u = Matrix::identity(&f, self.rows);
        let mut pivots = Vec::new();
        let mut pr = 0usize;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            // find a pivot in column pc at row >= pr
            let Some(pi) = (pr..self.rows).find(|&i| r.get(i, pc) != 0) else {
                continue;
            };
            if pi != pr {
                for j in 0..self.cols {
                    let (a, b) = (r.get(pr, j), r.get(pi, j));
                    r.set(pr, j, b);
                    r.set(pi, j, a);
                }
                for j in 0..self.rows {
                    let (a, b) = (u.get(pr, j), u.get(pi, j));
                    u.set(pr, j, b);
                    u.set(pi, j, a);
                }
            }
            let inv = f.inv(r.get(pr, pc)).expect("pivot nonzero");
            if inv != 1 {
                for j in 0..self.cols {
                    r.set(pr, j, f.mul(inv, r.get(pr, j)));
                }
                for j in 0..self.rows {
                    u.set(pr, j, f.mul(inv, u.get(pr, j)));
                }
            }
            for i in 0..self.rows {
                if i == pr {
                    continue;
                }
                let c = r.get(i, pc);
                if c == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = f.sub(r.get(i, j), f.mul(c, r.get(pr, j)));
                    r.set(i, j, v);
                }
                for j in 0..self.rows {
                    let v = f.sub(u.get(i, j), f.mul(c, u.get(pr, j)));
                    u.set(i, j, v);
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        RrefResult { r, u, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let res = self.rref();
        if res.pivots.len() == self.rows {
            Some(res.u)
        } else {
            None
        }
    }

    /// Basis of the right kernel {v : M v^T = 0}, one vector per row.
    /// Returns a 0 x cols matrix for a full-column-rank input.
    pub fn kernel_basis(&self) -> Matrix {
        let res = self.rref();
        let pivots = &res.pivots;
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let f = &self.field;
        let mut rows = Vec::new();
        for &fc in &free {
            let mut v = vec![0u64; self.cols];
            v[fc] = 1;
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(res.r.get(pi, fc));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            Matrix::zeros(f, 0, self.cols)
        } else {
            Matrix::from_rows(f, rows)
        }
    }

    /// Solve x * M = b for a row vector x, if a solution exists.
    pub fn solve_row(&self, b: &[u64]) -> Result<Vec<u64>, AlgebraError> {
        if b.len() != self.cols {
            return Err(AlgebraError::Dim(format!(
                "rhs length {} != {} columns",
                b.len(),
                self.cols
            )));
        }
        // x * M = b  <=>  M^T x^T = b^T
        let t = self.transpose();
        let res = t.rref();
        let tb = res.u.mul_col(b);
        let mut x = vec![0u64; self.rows];
        for (pi, &pc) in res.pivots.iter().enumerate() {
            x[pc] = tb[pi];
        }
        for (i, &v) in tb.iter().enumerate() {
            if i >= res.pivots.len() && v != 0 {
                return Err(AlgebraError::NoSolution);
            }
        }
        Ok(x)
    }

    /// Equality of row spaces.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.cols != other.cols || self.field != other.field {
            return false;
        }
        let a = self.rref();
        let b = other.rref();
        let ra: Vec<_> = a.r.row_vecs().into_iter().take(a.pivots.len()).collect();
        let rb: Vec<_> = b.r.row_vecs().into_iter().take(b.pivots.len()).collect();
        ra == rb
    }
}

/// Is `i_set` an information set for the code with parity-check matrix `h`?
/// True iff the columns of `h` indexed by the complement are invertible.
pub fn is_information_set(h: &Matrix, i_set: &[usize]) -> Result<bool, AlgebraError> {
    let n = h.cols();
    let k = n - h.rows();
    if i_set.len() != k {
        return Err(AlgebraError::BadSetSize { expected: k, got: i_set.len() });
    }
    let comp: Vec<usize> = (0..n).filter(|j| !i_set.contains(j)).collect();
    Ok(h.columns(&comp).inverse().is_some())
}

/// Bring a parity-check matrix into the systematic form belonging to the
/// information set `i_set`: returns `(u, perm)` with `u * h` carrying the
/// identity block on the complement columns (in ascending order) and
/// `u * h * perm.as_matrix()` equal to (B | Id), the I-columns gathered in
/// front. The permutation is reported explicitly because both block
/// conventions are in circulation.
pub fn systematic_form(
    h: &Matrix,
    i_set: &[usize],
) -> Result<(Matrix, Permutation), AlgebraError> {
    let n = h.cols();
    let k = n - h.rows();
    if i_set.len() != k {
        return Err(AlgebraError::BadSetSize { expected: k, got: i_set.len() });
    }
    let mut i_sorted = i_set.to_vec();
    i_sorted.sort_unstable();
    let comp: Vec<usize> = (0..n).filter(|j| !i_sorted.contains(j)).collect();
    let u = h
        .columns(&comp)
        .inverse()
        .ok_or(AlgebraError::NotInformationSet)?;
    // perm sends old position -> new position: I-columns first, then the
    // complement, both ascending.
    let mut image = vec![0usize; n];
    for (new, &old) in i_sorted.iter().chain(comp.iter()).enumerate() {
        image[old] = new;
    }
    Ok((u, Permutation::new(image)?))
}
