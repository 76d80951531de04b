//! Dense matrices over an exact ring, sized for small Lie-theoretic work.

use crate::poly::Poly;
use crate::rat::Rat;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Minimal ring interface for matrix entries.
pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by a rational scalar (both our rings embed `Rat`).
    fn scale(&self, s: &Rat) -> Self;
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn scale(&self, s: &Rat) -> Self {
        self * s
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn scale(&self, s: &Rat) -> Self {
        Poly::scale(self, s)
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Mat<T>) -> Mat<T> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].add(&other[(i, j)])
        })
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].sub(&other[(i, j)])
        })
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(|x| x.neg())
    }

    pub fn scale(&self, s: &Rat) -> Mat<T> {
        self.map(|x| x.scale(s))
    }

    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Mat<T>) -> Mat<T> {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: usize) -> Mat<T> {
        assert_eq!(self.rows, self.cols);
        let mut out = Mat::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn flatten(&self) -> &[T] {
        &self.data
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat<T> {
        Mat::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }
}

impl<T> core::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> core::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Matrix-vector product.
pub fn mat_vec<T: Ring>(m: &Mat<T>, v: &[T]) -> Vec<T> {
    assert_eq!(m.cols, v.len());
    (0..m.rows)
        .map(|i| {
            let mut acc = T::zero();
            for j in 0..m.cols {
                if !m[(i, j)].is_zero() && !v[j].is_zero() {
                    acc = acc.add(&m[(i, j)].mul(&v[j]));
                }
            }
            acc
        })
        .collect()
}

/// Characteristic coefficients `det(I + tM) = sum_j e_j(M) t^j` via Newton's
/// identities in the power sums `tr(M^k)`; no eigenvalue extraction.
pub fn char_coefficients<T: Ring>(m: &Mat<T>, up_to: usize) -> Vec<T> {
    assert_eq!(m.rows, m.cols);
    let jmax = up_to.min(m.rows);
    let mut power = Mat::<T>::identity(m.rows);
    let mut psums: Vec<T> = Vec::with_capacity(jmax + 1);
    psums.push(T::zero()); // p_0 unused
    for _ in 1..=jmax {
        power = power.mul(m);
        psums.push(power.trace());
    }
    let mut e: Vec<T> = vec![T::zero(); up_to + 1];
    e[0] = T::one();
    for k in 1..=jmax {
        // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        let mut acc = T::zero();
        for i in 1..=k {
            let term = e[k - i].mul(&psums[i]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        e[k] = acc.scale(&Rat::new(1.into(), (k as i64).into()));
    }
    e
}

/// Complete homogeneous symmetric function `h_m` of the eigenvalues, through
/// Newton's identities in the power sums (`m h_m = sum h_{m-i} p_i`).
pub fn complete_homogeneous<T: Ring>(m: &Mat<T>, up_to: usize) -> Vec<T> {
    assert_eq!(m.rows, m.cols);
    let mut power = Mat::<T>::identity(m.rows);
    let mut psums: Vec<T> = Vec::with_capacity(up_to + 1);
    psums.push(T::zero());
    for _ in 1..=up_to {
        power = power.mul(m);
        psums.push(power.trace());
    }
    let mut h: Vec<T> = vec![T::zero(); up_to + 1];
    h[0] = T::one();
    for k in 1..=up_to {
        let mut acc = T::zero();
        for i in 1..=k {
            acc = acc.add(&h[k - i].mul(&psums[i]));
        }
        h[k] = acc.scale(&Rat::new(1.into(), (k as i64).into()));
    }
    h
}

// ---------------------------------------------------------------------------
// Exact rational linear algebra.
// ---------------------------------------------------------------------------

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Mat<Rat>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        for j in 0..m.cols {
            let tmp = m[(pr, j)].clone();
            m[(pr, j)] = m[(r, j)].clone();
            m[(r, j)] = tmp;
        }
        let inv = m[(r, c)].clone().recip();
        for j in 0..m.cols {
            m[(r, j)] = &m[(r, j)] * &inv;
        }
        for i in 0..m.rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in 0..m.cols {
                    let sub = &m[(r, j)] * &f;
                    m[(i, j)] = &m[(i, j)] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Mat<Rat>) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

/// Basis of the right null space of `m` (columns as vectors).
pub fn kernel_basis(m: &Mat<Rat>) -> Vec<Vec<Rat>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let mut basis = Vec::new();
    let pivot_of_col: Vec<Option<usize>> = {
        let mut v = vec![None; m.cols];
        for (row, &c) in pivots.iter().enumerate() {
            v[c] = Some(row);
        }
        v
    };
    for free in 0..m.cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut vec_ = vec![Rat::zero(); m.cols];
        vec_[free] = Rat::one();
        for (c, p) in pivot_of_col.iter().enumerate() {
            if let Some(row) = p {
                vec_[c] = -r[(*row, free)].clone();
            }
        }
        basis.push(vec_);
    }
    basis
}

/// Exact determinant by fraction-producing Gaussian elimination.
pub fn det_rat(m: &Mat<Rat>) -> Rat {
    assert_eq!(m.rows, m.cols);
    let mut a = m.clone();
    let n = a.rows;
    let mut det = Rat::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Rat::zero();
        };
        if pr != c {
            for j in 0..n {
                let tmp = a[(pr, j)].clone();
                a[(pr, j)] = a[(c, j)].clone();
                a[(c, j)] = tmp;
            }
            det = -det;
        }
        det *= a[(c, c)].clone();
        let inv = a[(c, c)].clone().recip();
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = &a[(i, c)] * &inv;
            for j in c..n {
                let sub = &a[(c, j)] * &f;
                a[(i, j)] = &a[(i, j)] - &sub;
            }
        }
    }
    det
}

/// Inverse of a nonsingular rational matrix.
pub fn invert(m: &Mat<Rat>) -> Option<Mat<Rat>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut aug = Mat::zero(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = Rat::one();
    }
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
        return None;
    }
    Some(Mat::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
}

/// Solves `M x = b` exactly, if consistent and `M` has full column rank.
pub fn solve(m: &Mat<Rat>, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Mat::zero(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let pivots = rref(&mut aug);
    if pivots.contains(&m.cols) {
        return None; // inconsistent
    }
    if pivots.len() < m.cols {
        return None; // underdetermined; callers here always want a unique solution
    }
    let mut x = vec![Rat::zero(); m.cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[(row, m.cols)].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn kernel_and_rank() {
        // [[1,2,3],[2,4,6]] has rank 1, kernel dim 2
        let m = Mat::from_fn(2, 3, |i, j| rat(((i + 1) * (j + 1)) as i64));
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            let prod = mat_vec(&m, v);
            assert!(prod.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn char_coeffs_of_diag() {
        // det(I + t diag(1,2)) = 1 + 3t + 2t^2
        let mut m = Mat::<Rat>::zero(2, 2);
        m[(0, 0)] = rat(1);
        m[(1, 1)] = rat(2);
        let e = char_coefficients(&m, 2);
        assert_eq!(e, alloc::vec![rat(1), rat(3), rat(2)]);
        let h = complete_homogeneous(&m, 2);
        // h_1 = 3, h_2 = 1 + 2 + 4 = 7
        assert_eq!(h[1], rat(3));
        assert_eq!(h[2], rat(7));
    }

    #[test]
    fn det_and_inverse() {
        let m = Mat::from_fn(3, 3, |i, j| {
            if i == j {
                rat(2)
            } else if i + 1 == j {
                rat(1)
            } else {
                rat(0)
            }
        });
        assert_eq!(det_rat(&m), rat(8));
        let inv = invert(&m).unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
    }
}
