//! Exact dense linear algebra over the rationals.
//!
//! Row reduction, rank, kernels, one-sided solves and subspace arithmetic,
//! all with arbitrary-precision rational entries. There is no floating point
//! and no pivot heuristics: the pivot is always the first nonzero entry in
//! column order, so the reduced row echelon form is canonical and two
//! subspaces over the same coordinate frame are equal exactly when their
//! stored bases are entrywise equal.

use num::{BigRational, One, Zero};
use thiserror::Error;

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("frame mismatch: ambient dimensions {0} and {1} differ")]
    FrameMismatch(usize, usize),
}

/// Dense matrix with exact rational entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Result of a row reduction: the reduced matrix, its pivot columns and rank.
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row in matrix construction");
            entries.extend(r);
        }
        RationalMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn stack_below(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column count mismatch in stack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch in matmul");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = self.at(i, k);
                if !a.is_zero() {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
            }
            acc
        })
    }

    /// v . M for a row vector v of length `rows`.
    pub fn row_vector_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.rows, "row vector length mismatch");
        let mut out = vec![Rational::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() {
                    out[j] += vi * a;
                }
            }
        }
        out
    }

    /// M . v for a column vector v of length `cols`.
    pub fn col_vector_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "column vector length mismatch");
        let mut out = vec![Rational::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Rational::zero();
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let a = self.at(i, j);
                if !a.is_zero() {
                    acc += a * vj;
                }
            }
            out[i] = acc;
        }
        out
    }

    /// Reduced row echelon form with deterministic pivoting (first nonzero
    /// entry in column order), together with pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = m.at(pivot_row, col).recip();
            m.scale_row(pivot_row, &inv);
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m.at(r2, col).is_zero() {
                    let factor = m.at(r2, col).clone();
                    m.sub_scaled_row(r2, pivot_row, &factor);
                }
            }
            pivot_columns.push(col);
            pivot_row += 1;
        }
        let rank = pivot_columns.len();
        Rref {
            matrix: m,
            pivot_columns,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space { v : M v = 0 }.
    pub fn kernel_basis(&self) -> Subspace {
        let Rref {
            matrix, pivot_columns, ..
        } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivot_columns.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut vectors = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &pc) in pivot_columns.iter().enumerate() {
                v[pc] = -matrix.at(i, free).clone();
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.cols, vectors)
    }

    /// Solve a . M = b for a row vector a; `None` when the system is
    /// incompatible. Free unknowns are set to zero after row-reducing the
    /// transposed system, so the returned solution is canonical.
    pub fn solve_left(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinError> {
        if b.len() != self.cols {
            return Err(LinError::DimensionMismatch(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.cols
            )));
        }
        // Augment the transpose with b as an extra column and reduce.
        let mut aug = RationalMatrix::from_fn(self.cols, self.rows + 1, |i, j| {
            if j < self.rows {
                self.at(j, i).clone()
            } else {
                b[i].clone()
            }
        });
        aug = aug.rref().matrix;
        let mut solution = vec![Rational::zero(); self.rows];
        for i in 0..aug.rows {
            let lead = (0..aug.cols).find(|&j| !aug.at(i, j).is_zero());
            match lead {
                None => continue,
                Some(j) if j == self.rows => return Ok(None),
                Some(j) => solution[j] = aug.at(i, self.rows).clone(),
            }
        }
        Ok(Some(solution))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for j in 0..self.cols {
            let e = self.at_mut(r, j);
            if !e.is_zero() {
                *e *= factor;
            }
        }
    }

    /// row r -= factor * row src
    fn sub_scaled_row(&mut self, r: usize, src: usize, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.at(src, j).clone();
            if !v.is_zero() {
                *self.at_mut(r, j) -= factor * v;
            }
        }
    }
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A vector subspace of Q^n held in canonical form: the stored basis is the
/// reduced row echelon form of any spanning set, so equality of subspaces is
/// entrywise equality of bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
    pivot_columns: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::zeros(0, ambient_dim),
            pivot_columns: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: RationalMatrix::identity(ambient_dim),
            pivot_columns: (0..ambient_dim).collect(),
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length differs from ambient");
        }
        let m = RationalMatrix::from_rows(vectors, ambient_dim);
        Self::from_spanning_matrix(&m)
    }

    /// Rows of `m` span the subspace; zero rows are discarded.
    pub fn from_spanning_matrix(m: &RationalMatrix) -> Self {
        let Rref {
            matrix,
            pivot_columns,
            rank,
        } = m.rref();
        let rows = (0..rank).map(|i| matrix.row_vec(i)).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: RationalMatrix::from_rows(rows, m.cols()),
            pivot_columns,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_columns
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Exact membership test.
    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinError> {
        if v.len() != self.ambient_dim {
            return Err(LinError::FrameMismatch(self.ambient_dim, v.len()));
        }
        Ok(self.reduce(v).iter().all(|e| e.is_zero()))
    }

    /// Remainder of v after eliminating all pivot coordinates of the basis.
    /// Zero exactly when v lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (i, &pc) in self.pivot_columns.iter().enumerate() {
            if w[pc].is_zero() {
                continue;
            }
            let factor = w[pc].clone();
            for j in 0..self.ambient_dim {
                let b = self.basis.at(i, j);
                if !b.is_zero() {
                    w[j] -= &factor * b;
                }
            }
        }
        w
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinError::FrameMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(Self::from_spanning_matrix(
            &self.basis.stack_below(&other.basis),
        ))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinError::FrameMismatch(self.ambient_dim, other.ambient_dim));
        }
        // (c, d) in the left kernel of [U; W] gives c.U = -d.W, a vector of
        // the intersection; all intersection vectors arise this way.
        let stacked = self.basis.stack_below(&other.basis);
        let left_kernel = stacked.transpose().kernel_basis();
        let mut vectors = Vec::new();
        for i in 0..left_kernel.dim() {
            let cd = left_kernel.basis().row(i);
            let v = self.basis.row_vector_mul(&cd[..self.dim()]);
            vectors.push(v);
        }
        let inter = Self::from_vectors(self.ambient_dim, vectors);
        debug_assert_eq!(
            self.sum(other)?.dim() + inter.dim(),
            self.dim() + other.dim(),
            "Grassmann dimension identity violated"
        );
        Ok(inter)
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinError::FrameMismatch(self.ambient_dim, other.ambient_dim));
        }
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A matrix K with ker K = self, i.e. v lies in the subspace iff K v = 0.
    /// Rows of K are a basis of { w : B w = 0 } for the stored basis B.
    pub fn kernel_description(&self) -> RationalMatrix {
        let ker = self.basis.kernel_basis();
        ker.basis().clone()
    }
}

/// Convenience constructors for integer-valued test data.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
