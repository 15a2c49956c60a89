//! Exact linear algebra over the rationals.
//!
//! Every Hom/Ext computation in the crate bottoms out here: ranks, kernels,
//! solving, spans and quotient dimensions, all with arbitrary-precision
//! rational arithmetic. There are no tolerances anywhere; elimination uses the
//! first nonzero pivot in column order so results are deterministic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. `BigRational` keeps a canonical reduced form with a
/// positive denominator, which is exactly the invariant we need.
pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Build from integer entries, row-major.
    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must match shape");
        Matrix { rows, cols, entries: data.iter().map(|&n| scalar(n)).collect() }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for r in 0..self.rows {
            self[(r, c)] = v[r].clone();
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zero(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            m.set_column(c, col);
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(r, c)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() && !v[c].is_zero() {
                        acc += &self[(r, c)] * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(rhs.entries.iter())
            .map(|(a, b)| a + b)
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hcat");
        let mut out = Matrix::zero(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..rhs.cols {
                out[(r, self.cols + c)] = rhs[(r, c)].clone();
            }
        }
        out
    }
}

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon {
    pub mat: Matrix,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination. Pivot selection is the first nonzero entry in
/// column order, so the result is independent of the values' magnitudes.
pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let pivot_row = (row..a.rows).find(|&r| !a[(r, col)].is_zero());
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => continue,
        };
        if pivot_row != row {
            for c in 0..a.cols {
                let tmp = a[(pivot_row, c)].clone();
                a[(pivot_row, c)] = a[(row, c)].clone();
                a[(row, c)] = tmp;
            }
        }
        let inv = {
            let p = a[(row, col)].clone();
            Scalar::one() / p
        };
        for c in col..a.cols {
            let v = &a[(row, c)] * &inv;
            a[(row, c)] = v;
        }
        for r in 0..a.rows {
            if r != row && !a[(r, col)].is_zero() {
                let factor = a[(r, col)].clone();
                for c in col..a.cols {
                    let v = &a[(row, c)] * &factor;
                    a[(r, c)] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    Echelon { mat: a, pivots }
}

/// Exact rank.
pub fn rank(m: &Matrix) -> usize {
    rref(m).pivots.len()
}

/// Basis of the null space, one column per basis vector.
///
/// Columns are produced in order of the free columns of the echelon form, so
/// the basis is deterministic. `cols(m) = rank(m) + kernel columns` always.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let ech = rref(m);
    let pivot_set: Vec<usize> = ech.pivots.clone();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Matrix::zero(m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        basis[(fc, k)] = Scalar::one();
        for (r, &pc) in pivot_set.iter().enumerate() {
            let v = -ech.mat[(r, fc)].clone();
            basis[(pc, k)] = v;
        }
    }
    basis
}

/// Dimension of the span of a family of equal-length vectors.
pub fn span_dim(vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].len();
    assert!(
        vectors.iter().all(|v| v.len() == n),
        "span_dim: ambient dimension mismatch"
    );
    let mut m = Matrix::zero(vectors.len(), n);
    for (r, v) in vectors.iter().enumerate() {
        for (c, x) in v.iter().enumerate() {
            m[(r, c)] = x.clone();
        }
    }
    rank(&m)
}

/// Solve `m x = b` exactly. Returns `None` when inconsistent; when solvable,
/// returns the solution with all free variables set to zero.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(m.rows, b.len(), "solve: rhs length mismatch");
    let mut aug = Matrix::zero(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug[(r, c)] = m[(r, c)].clone();
        }
        aug[(r, m.cols)] = b[r].clone();
    }
    let ech = rref(&aug);
    if ech.pivots.contains(&m.cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![Scalar::zero(); m.cols];
    for (r, &pc) in ech.pivots.iter().enumerate() {
        x[pc] = ech.mat[(r, m.cols)].clone();
    }
    Some(x)
}

/// Solve `m X = B` columnwise. Returns `None` when any column is inconsistent.
pub fn solve_matrix(m: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows, b.rows, "solve_matrix: row mismatch");
    let mut out = Matrix::zero(m.cols, b.cols);
    for c in 0..b.cols {
        let col = solve(m, &b.column(c))?;
        out.set_column(c, &col);
    }
    Some(out)
}

/// Given a spanned subspace (columns of `inside`) contained in the span of all
/// columns of `ambient_basis ++ inside`, pick the subset of `candidates`
/// columns that extends `inside` to a basis of the joint span. Returns indices
/// of the chosen candidates, in increasing order.
pub fn extend_to_basis(inside: &Matrix, candidates: &Matrix) -> Vec<usize> {
    assert_eq!(inside.rows, candidates.rows);
    let mut chosen = Vec::new();
    let mut current = inside.clone();
    let mut current_rank = rank(&current);
    for c in 0..candidates.cols {
        let cand = Matrix::from_columns(candidates.rows, &[candidates.column(c)]);
        let joined = current.hcat(&cand);
        let r = rank(&joined);
        if r > current_rank {
            chosen.push(c);
            current = joined;
            current_rank = r;
        }
    }
    chosen
}

/// Is the square matrix invertible?
pub fn is_invertible(m: &Matrix) -> bool {
    m.rows == m.cols && rank(m) == m.rows
}

/// Inverse of a square invertible matrix. Panics if singular.
pub fn inverse(m: &Matrix) -> Matrix {
    assert_eq!(m.rows, m.cols, "inverse of non-square matrix");
    let aug = m.hcat(&Matrix::identity(m.rows));
    let ech = rref(&aug);
    assert_eq!(ech.pivots.len(), m.rows, "inverse of singular matrix");
    let mut inv = Matrix::zero(m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            inv[(r, c)] = ech.mat[(r, m.cols + c)].clone();
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_identity() {
        assert_eq!(rank(&Matrix::identity(3)), 3);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(rank(&Matrix::zero(2, 3)), 0);
    }

    #[test]
    fn rank_proportional_rows() {
        let m = Matrix::from_ints(2, 2, &[1, 2, 2, 4]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let k = kernel_basis(&Matrix::identity(2));
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = kernel_basis(&Matrix::zero(2, 2));
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn kernel_of_row_vector() {
        let m = Matrix::from_ints(1, 2, &[1, 1]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        // the basis vector is (x, y) with x + y = 0 and not both zero
        let v = k.column(0);
        assert_eq!(&v[0] + &v[1], scalar(0));
        assert!(!v[0].is_zero());
    }

    #[test]
    fn span_dim_examples() {
        let e1 = vec![scalar(1), scalar(0)];
        let e2 = vec![scalar(0), scalar(1)];
        assert_eq!(span_dim(&[e1.clone(), e2]), 2);
        let v = vec![scalar(1), scalar(1)];
        let w = vec![scalar(2), scalar(2)];
        assert_eq!(span_dim(&[v, w]), 1);
        assert_eq!(span_dim(&[]), 0);
    }

    #[test]
    fn solve_simple_system() {
        let m = Matrix::from_ints(2, 2, &[1, 1, 0, 1]);
        let x = solve(&m, &[scalar(3), scalar(1)]).unwrap();
        assert_eq!(x, vec![scalar(2), scalar(1)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_ints(2, 1, &[1, 1]);
        assert!(solve(&m, &[scalar(0), scalar(1)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(2, 2, &[1, 2, 3, 5]);
        let inv = inverse(&m);
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        ((1usize..5, 1usize..5)).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..5, r * c)
                .prop_map(move |data| Matrix::from_ints(r, c, &data))
        })
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(m in small_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(m.cols(), rank(&m) + k.cols());
            // every kernel column really is in the kernel
            for c in 0..k.cols() {
                let v = m.mul_vec(&k.column(c));
                prop_assert!(v.iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn rank_bounded(m in small_matrix()) {
            prop_assert!(rank(&m) <= m.rows().min(m.cols()));
        }
    }
}
