//! Dense exact linear algebra: matrices, third-order tensors, row reduction.
//!
//! Matrices act on column vectors; column `j` holds the image of `e_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Vector<S> = Vec<S>;

pub fn zero_vector<S: Scalar>(n: usize) -> Vector<S> {
    vec![S::zero(); n]
}

pub fn unit_vector<S: Scalar>(n: usize, i: usize) -> Vector<S> {
    let mut v = zero_vector(n);
    v[i] = S::one();
    v
}

pub fn is_zero_vector<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors<S: Scalar>(a: &[S], b: &[S]) -> Vector<S> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vectors<S: Scalar>(a: &[S], b: &[S]) -> Vector<S> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vector<S: Scalar>(c: &S, v: &[S]) -> Vector<S> {
    v.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `acc += c * v`
pub fn axpy<S: Scalar>(acc: &mut [S], c: &S, v: &[S]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + c.clone() * x.clone();
        }
    }
}

/// Concatenation `(a, b)` in a direct sum.
pub fn concat<S: Scalar>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter().chain(b).cloned().collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn scalar(n: usize, c: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: &[S]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    /// Builds from row vectors. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from the images of the basis vectors.
    pub fn from_columns(rows: usize, columns: &[Vector<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
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

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: S) {
        let idx = i * self.cols + j;
        self.data[idx] = self.data[idx].clone() + v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<Matrix<T>> {
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Option<_>>()?,
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[S]) -> Vector<S> {
        assert_eq!(v.len(), self.cols, "apply: vector length");
        let mut out: Vector<S> = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o = o.clone() + a.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Matrix<S>) -> Result<Matrix<S>> {
        if self.cols != rhs.rows {
            return Err(Error::dims(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, a.clone() * b.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product `self · rhs`; panics on incompatible shapes.
    pub fn mul(&self, rhs: &Matrix<S>) -> Matrix<S> {
        self.try_mul(rhs).expect("matrix product shapes")
    }

    pub fn add(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vectors(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vectors(&self.data, &rhs.data),
        }
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vector(c, &self.data),
        }
    }

    /// Commutator `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Matrix<S>) -> Matrix<S> {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn commutes_with(&self, rhs: &Matrix<S>) -> bool {
        self.mul(rhs) == rhs.mul(self)
    }

    pub fn pow(&self, e: u32) -> Matrix<S> {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Integer power; negative exponents use the exact inverse.
    pub fn pow_signed(&self, e: i32) -> Result<Matrix<S>> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(invert(self)?.pow(e.unsigned_abs()))
        }
    }

    /// Block-diagonal sum `self ⊕ rhs`.
    pub fn block_diag(&self, rhs: &Matrix<S>) -> Matrix<S> {
        let mut out = Matrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form with pivot columns in increasing order.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).inv().expect("pivot is nonzero");
        for j in c..cols {
            let v = a.get(r, j).clone() * inv.clone();
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let pivot_entry = a.get(r, j).clone();
                if !pivot_entry.is_zero() {
                    let v = a.get(i, j).clone() - f.clone() * pivot_entry;
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Kernel basis: one vector per free column, in increasing column order.
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Vector<S>> {
    let (r, pivots) = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = zero_vector(cols);
            v[f] = S::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    m.rank()
}

pub fn invert<S: Scalar>(m: &Matrix<S>) -> Result<Matrix<S>> {
    if !m.is_square() {
        return Err(Error::dims(format!("cannot invert {}x{}", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, S::one());
    }
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

/// One solution of `m·x = b` (free variables set to zero), if consistent.
pub fn solve<S: Scalar>(m: &Matrix<S>, b: &[S]) -> Result<Option<Vector<S>>> {
    if b.len() != m.rows {
        return Err(Error::dims("right-hand side length"));
    }
    let cols = m.cols;
    let mut aug = Matrix::zeros(m.rows, cols + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, cols, bi.clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = zero_vector(cols);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, cols).clone();
    }
    Ok(Some(x))
}

/// Rank of a list of vectors.
pub fn rank_of<S: Scalar>(vectors: &[Vector<S>], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(dim, vectors).rank()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span<S: Scalar>(basis: &[Vector<S>], v: &[S]) -> bool {
    if is_zero_vector(v) {
        return true;
    }
    let dim = v.len();
    let r = rank_of(basis, dim);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank_of(&ext, dim) == r
}

/// A basis of the span of the given vectors (pivot columns of the stacked matrix).
pub fn span_basis<S: Scalar>(vectors: &[Vector<S>], dim: usize) -> Vec<Vector<S>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_columns(dim, vectors);
    let (_, pivots) = rref(&m);
    pivots.into_iter().map(|j| vectors[j].clone()).collect()
}

/// Dense tensor of structure constants: `e_i ∗ e_j = Σ_k T[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3<S> {
    dims: (usize, usize, usize),
    data: Vec<S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            dims: (d1, d2, d3),
            data: vec![S::zero(); d1 * d2 * d3],
        }
    }

    /// Square tensor `n × n → n`.
    pub fn square(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    pub fn from_fn(
        d1: usize,
        d2: usize,
        d3: usize,
        mut f: impl FnMut(usize, usize, usize) -> S,
    ) -> Self {
        let mut t = Self::zeros(d1, d2, d3);
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d3 {
                    t.data[(i * d2 + j) * d3 + k] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Tensor of a bilinear map given by its values on basis pairs.
    pub fn from_pairs(d1: usize, d2: usize, d3: usize, mut f: impl FnMut(usize, usize) -> Vector<S>) -> Self {
        let mut t = Self::zeros(d1, d2, d3);
        for i in 0..d1 {
            for j in 0..d2 {
                let v = f(i, j);
                assert_eq!(v.len(), d3);
                t.set_row(i, j, v);
            }
        }
        t
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        let (d1, d2, d3) = self.dims;
        assert!(i < d1 && j < d2 && k < d3, "tensor index out of bounds");
        (i * d2 + j) * d3 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.data[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: S) {
        let idx = self.index(i, j, k);
        self.data[idx] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: S) {
        let idx = self.index(i, j, k);
        self.data[idx] = self.data[idx].clone() + v;
    }

    /// The vector `e_i ∗ e_j`.
    pub fn row(&self, i: usize, j: usize) -> &[S] {
        let start = self.index(i, j, 0);
        &self.data[start..start + self.dims.2]
    }

    pub fn set_row(&mut self, i: usize, j: usize, v: Vector<S>) {
        let start = self.index(i, j, 0);
        for (k, x) in v.into_iter().enumerate() {
            self.data[start + k] = x;
        }
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor3<T> {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Option<T>) -> Option<Tensor3<T>> {
        Some(Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(f).collect::<Option<_>>()?,
        })
    }

    pub fn add(&self, rhs: &Tensor3<S>) -> Tensor3<S> {
        assert_eq!(self.dims, rhs.dims);
        Tensor3 {
            dims: self.dims,
            data: add_vectors(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Tensor3<S>) -> Tensor3<S> {
        assert_eq!(self.dims, rhs.dims);
        Tensor3 {
            dims: self.dims,
            data: sub_vectors(&self.data, &rhs.data),
        }
    }

    pub fn scale(&self, c: &S) -> Tensor3<S> {
        Tensor3 {
            dims: self.dims,
            data: scale_vector(c, &self.data),
        }
    }

    /// Bilinear evaluation `Σ_{i,j} x_i y_j T[i][j][·]`.
    pub fn contract(&self, x: &[S], y: &[S]) -> Vector<S> {
        let (d1, d2, d3) = self.dims;
        assert_eq!(x.len(), d1, "contract: left argument length");
        assert_eq!(y.len(), d2, "contract: right argument length");
        let mut out = zero_vector(d3);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.clone() * yj.clone();
                axpy(&mut out, &c, self.row(i, j));
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Debug for Tensor3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d1, d2, d3) = self.dims;
        write!(f, "Tensor3{:?}{{", self.dims)?;
        let mut first = true;
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d3 {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        if !first {
                            write!(f, ", ")?;
                        }
                        first = false;
                        write!(f, "({},{},{})={}", i + 1, j + 1, k + 1, v)?;
                    }
                }
            }
        }
        write!(f, "}}")
    }
}

/// `result_k = Σ_{i,j} x_i y_j T_{ijk}`, checking shapes.
pub fn contract_product<S: Scalar>(t: &Tensor3<S>, x: &[S], y: &[S]) -> Result<Vector<S>> {
    let (d1, d2, _) = t.dims();
    if x.len() != d1 || y.len() != d2 {
        return Err(Error::dims(format!(
            "tensor {:?} with arguments of length {} and {}",
            t.dims(),
            x.len(),
            y.len()
        )));
    }
    Ok(t.contract(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi, Gf2, Q};
    use proptest::prelude::*;

    fn mq(rows: Vec<Vec<i64>>) -> Matrix<Q> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(qi).collect()).collect())
    }

    #[test]
    fn nullspace_of_identity_is_empty() {
        assert!(nullspace(&Matrix::<Q>::identity(3)).is_empty());
    }

    #[test]
    fn nullspace_of_zero_is_standard_basis() {
        let ns = nullspace(&Matrix::<Q>::zeros(2, 3));
        assert_eq!(ns, (0..3).map(|i| unit_vector::<Q>(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn nullspace_rank_one() {
        // hand elimination: x + 2y = 0 → (−2, 1)
        let ns = nullspace(&mq(vec![vec![1, 2], vec![2, 4]]));
        assert_eq!(ns, vec![vec![qi(-2), qi(1)]]);
    }

    #[test]
    fn empty_matrix_nullspace() {
        let ns = nullspace(&Matrix::<Q>::zeros(0, 2));
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn inverse_examples() {
        let id = Matrix::<Q>::identity(3);
        assert_eq!(invert(&id).unwrap(), id);
        let d = Matrix::diagonal(&[qi(2), q(1, 2)]);
        assert_eq!(invert(&d).unwrap(), Matrix::diagonal(&[q(1, 2), qi(2)]));
        let nil = mq(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(invert(&nil), Err(Error::SingularMatrix));
        assert!(matches!(
            invert(&Matrix::<Q>::zeros(2, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn contraction_examples() {
        let mut t = Tensor3::<Q>::square(2);
        t.set(0, 1, 0, qi(1));
        let e1 = unit_vector::<Q>(2, 0);
        let e2 = unit_vector::<Q>(2, 1);
        assert_eq!(contract_product(&t, &e1, &e2).unwrap(), e1);
        assert_eq!(contract_product(&t, &zero_vector(2), &e2).unwrap(), zero_vector::<Q>(2));
        assert!(contract_product(&t, &zero_vector(3), &e2).is_err());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = mq(vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&m, &[qi(1), qi(2)]).unwrap(), Some(vec![qi(1), qi(0)]));
        assert_eq!(solve(&m, &[qi(1), qi(3)]).unwrap(), None);
    }

    #[test]
    fn gf2_kernel() {
        let m = Matrix::from_rows(vec![vec![Gf2::new(1), Gf2::new(1)]]);
        assert_eq!(nullspace(&m), vec![vec![Gf2::new(1), Gf2::new(1)]]);
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix<Q>> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_fn(r, c, |i, j| qi(v[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix(5)) {
            let ns = nullspace(&m);
            prop_assert_eq!(ns.len() + m.rank(), m.cols());
            for v in &ns {
                prop_assert!(is_zero_vector(&m.apply(v)));
            }
            prop_assert_eq!(rank_of(&ns, m.cols()), ns.len());
        }

        #[test]
        fn inverse_both_sides(v in prop::collection::vec(-4i64..=4, 9)) {
            let m = Matrix::from_fn(3, 3, |i, j| qi(v[i * 3 + j]));
            match invert(&m) {
                Ok(inv) => {
                    prop_assert!(m.mul(&inv).is_identity());
                    prop_assert!(inv.mul(&m).is_identity());
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::SingularMatrix);
                    prop_assert!(m.rank() < 3);
                }
            }
        }

        #[test]
        fn contraction_is_bilinear(
            t in prop::collection::vec(-3i64..=3, 8),
            x in prop::collection::vec(-3i64..=3, 2),
            x2 in prop::collection::vec(-3i64..=3, 2),
            y in prop::collection::vec(-3i64..=3, 2),
            a in (-5i64..=5, 1i64..=4),
            b in (-5i64..=5, 1i64..=4),
        ) {
            let t = Tensor3::from_fn(2, 2, 2, |i, j, k| qi(t[(i * 2 + j) * 2 + k]));
            let x: Vec<Q> = x.into_iter().map(qi).collect();
            let x2: Vec<Q> = x2.into_iter().map(qi).collect();
            let y: Vec<Q> = y.into_iter().map(qi).collect();
            let (a, b) = (q(a.0, a.1), q(b.0, b.1));
            let lhs = t.contract(&add_vectors(&scale_vector(&a, &x), &scale_vector(&b, &x2)), &y);
            let rhs = add_vectors(&scale_vector(&a, &t.contract(&x, &y)), &scale_vector(&b, &t.contract(&x2, &y)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
