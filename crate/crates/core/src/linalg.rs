//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Everything here uses arbitrary-precision arithmetic. Integer kernels are
//! computed with unimodular row operations, so the returned basis spans the
//! full lattice `ker(A) ∩ Z^n` rather than a finite-index sublattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<T>], rows: usize) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)] == T::one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

pub fn to_rational(m: &Matrix<Int>) -> Matrix<Rat> {
    m.map(|v| Rat::from_integer(v.clone()))
}

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<Int> {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
        cols,
    )
}

pub fn rat_matrix(rows: &[&[i64]]) -> Matrix<Rat> {
    to_rational(&int_matrix(rows))
}

/// Replaces rows `a` and `b` by the unimodular combination that puts the
/// gcd of their `col` entries in row `a` and zero in row `b`.
fn gcd_combine(rows: &mut [Vec<Int>], a: usize, b: usize, col: usize) {
    let x = rows[a][col].clone();
    let y = rows[b][col].clone();
    let egcd = x.extended_gcd(&y);
    let (g, s, t) = (egcd.gcd, egcd.x, egcd.y);
    let xg = &x / &g;
    let yg = &y / &g;
    let width = rows[a].len();
    for k in 0..width {
        let ra = rows[a][k].clone();
        let rb = rows[b][k].clone();
        rows[a][k] = &s * &ra + &t * &rb;
        rows[b][k] = &xg * &rb - &yg * &ra;
    }
}

/// Brings `rows` into Hermite normal form using unimodular row operations,
/// searching for pivots only among the first `pivot_cols` columns.
///
/// Pivots are positive, entries above a pivot are reduced into
/// `[0, pivot)`, and rows below the returned rank vanish on the pivot
/// columns. Returns the rank of the leading `pivot_cols` block.
pub fn hermite_rows(rows: &mut [Vec<Int>], pivot_cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..pivot_cols {
        if rank == n {
            break;
        }
        for r in rank + 1..n {
            if !rows[r][col].is_zero() {
                gcd_combine(rows, rank, r, col);
            }
        }
        if rows[rank][col].is_zero() {
            continue;
        }
        if rows[rank][col].is_negative() {
            for v in rows[rank].iter_mut() {
                *v = -v.clone();
            }
        }
        pivots.push(col);
        rank += 1;
    }
    for (p, &col) in pivots.iter().enumerate() {
        let pivot = rows[p][col].clone();
        for r in 0..p {
            let q = rows[r][col].div_floor(&pivot);
            if q.is_zero() {
                continue;
            }
            for k in 0..rows[r].len() {
                let delta = &q * &rows[p][k];
                rows[r][k] -= delta;
            }
        }
    }
    rank
}

/// Lattice basis of `{v ∈ Z^n : A v = 0}` for an `m × n` integer matrix,
/// in Hermite normal form.
pub fn integer_kernel(a: &Matrix<Int>) -> Vec<Vec<Int>> {
    let (m, n) = (a.rows(), a.cols());
    // Row j is (column j of A | e_j); row operations on this block track a
    // unimodular transform of the domain.
    let mut rows: Vec<Vec<Int>> = (0..n)
        .map(|j| {
            let mut row = a.column(j);
            row.extend((0..n).map(|k| if k == j { Int::one() } else { Int::zero() }));
            row
        })
        .collect();
    let rank = hermite_rows(&mut rows, m);
    let mut kernel: Vec<Vec<Int>> = rows[rank..].iter().map(|r| r[m..].to_vec()).collect();
    let krank = hermite_rows(&mut kernel, n);
    kernel.truncate(krank);
    kernel
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Matrix<Rat>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(p) = (r..m.rows()).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..m.cols() {
                let tmp = m[(p, k)].clone();
                m[(p, k)] = m[(r, k)].clone();
                m[(r, k)] = tmp;
            }
        }
        let inv = m[(r, c)].recip();
        for k in 0..m.cols() {
            m[(r, k)] = &m[(r, k)] * &inv;
        }
        for i in 0..m.rows() {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for k in 0..m.cols() {
                let delta = &f * &m[(r, k)];
                m[(i, k)] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix<Rat>) -> usize {
    rref(&mut m.clone()).len()
}

/// Some rational solution of `a · x = b`, or `None` when `b` is outside
/// the column space. Free variables are set to zero.
pub fn solve(a: &Matrix<Rat>, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let mut aug = Matrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, n)].clone();
    }
    Some(x)
}

/// Inertia `(positive, negative, zero)` of a symmetric rational matrix,
/// computed by congruence diagonalization.
pub fn inertia(form: &Matrix<Rat>) -> (usize, usize, usize) {
    assert!(form.is_symmetric(), "inertia of a non-symmetric matrix");
    let n = form.rows();
    let mut s = form.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !s[(i, i)].is_zero()) {
            swap_sym(&mut s, k, p);
        } else {
            // Zero diagonal on the trailing block: fold in a partner so the
            // pivot becomes 2·s[k][j] ≠ 0.
            let partner = (k..n).find_map(|i| (i + 1..n).find(|&j| !s[(i, j)].is_zero()).map(|j| (i, j)));
            let Some((i, j)) = partner else { break };
            add_sym(&mut s, i, j);
            swap_sym(&mut s, k, i);
        }
        let pivot = s[(k, k)].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if s[(i, k)].is_zero() {
                continue;
            }
            let f = &s[(i, k)] / &pivot;
            for c in k..n {
                let delta = &f * &s[(k, c)];
                s[(i, c)] -= delta;
            }
            for r in k..n {
                let delta = &f * &s[(r, k)];
                s[(r, i)] -= delta;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

pub fn signature(form: &Matrix<Rat>) -> i64 {
    let (p, n, _) = inertia(form);
    p as i64 - n as i64
}

fn swap_sym(s: &mut Matrix<Rat>, a: usize, b: usize) {
    if a == b {
        return;
    }
    let n = s.rows();
    for c in 0..n {
        let tmp = s[(a, c)].clone();
        s[(a, c)] = s[(b, c)].clone();
        s[(b, c)] = tmp;
    }
    for r in 0..n {
        let tmp = s[(r, a)].clone();
        s[(r, a)] = s[(r, b)].clone();
        s[(r, b)] = tmp;
    }
}

/// Congruence by `e_a ↦ e_a + e_b`.
fn add_sym(s: &mut Matrix<Rat>, a: usize, b: usize) {
    let n = s.rows();
    for c in 0..n {
        let v = s[(b, c)].clone();
        s[(a, c)] += v;
    }
    for r in 0..n {
        let v = s[(r, b)].clone();
        s[(r, a)] += v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn kernel_of_zero_width_matrix_is_empty() {
        let a: Matrix<Int> = Matrix::zeros(3, 0);
        assert!(integer_kernel(&a).is_empty());
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 has kernel generated by (2,-1), not (4,-2).
        let a = int_matrix(&[&[2, 4]]);
        let k = integer_kernel(&a);
        assert_eq!(k, vec![ints(&[2, -1])]);
    }

    #[test]
    fn kernel_of_zero_matrix_is_standard_basis() {
        let a: Matrix<Int> = Matrix::zeros(2, 3);
        let k = integer_kernel(&a);
        assert_eq!(k, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])]);
    }

    #[test]
    fn hermite_form_is_reduced() {
        let mut rows = vec![ints(&[4, 6, 2]), ints(&[6, 9, 4]), ints(&[2, 5, 7])];
        let r = hermite_rows(&mut rows, 3);
        assert_eq!(r, 3);
        for i in 0..3 {
            let p = rows[i].iter().position(|v| !v.is_zero()).unwrap();
            assert!(rows[i][p].is_positive());
            for above in rows.iter().take(i) {
                assert!(!above[p].is_negative() && above[p] < rows[i][p]);
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = rat_matrix(&[&[1, 1], &[2, 2]]);
        let x = solve(&a, &[rat_int(3), rat_int(6)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat_int(3), rat_int(6)]);
        assert!(solve(&a, &[rat_int(1), rat_int(1)]).is_none());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&Matrix::<Rat>::identity(4)), 4);
        assert_eq!(signature(&Matrix::<Rat>::zeros(0, 0)), 0);
        assert_eq!(signature(&rat_matrix(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]])), 0);
        assert_eq!(signature(&rat_matrix(&[&[0, 1], &[1, 0]])), 0);
        assert_eq!(inertia(&rat_matrix(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(inertia(&rat_matrix(&[&[1, 2], &[2, 4]])), (1, 0, 1));
        // E8-like negative-definite-ish block pieces
        assert_eq!(signature(&rat_matrix(&[&[-2, 1], &[1, -2]])), -2);
    }

    #[test]
    fn zero_diagonal_blocks() {
        let m = rat_matrix(&[&[0, 0, 1], &[0, 0, 1], &[1, 1, 0]]);
        // eigenvalues ±√2, 0
        assert_eq!(inertia(&m), (1, 1, 1));
    }
}
