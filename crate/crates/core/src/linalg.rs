//! Exact dense linear algebra over the rationals.
//!
//! Everything here is fraction-exact: entries are [`Rational`]s backed by
//! arbitrary precision integers, and no operation ever touches floating point.
//! Subspaces are stored in reduced row-echelon form, so two subspaces are equal
//! exactly when their [`Subspace`] values compare equal.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

/// A coordinate vector in some fixed basis.
pub type Vector = Vec<Rational>;

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scaled(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

/// Result of Gauss-Jordan elimination.
struct Echelon {
    reduced: Matrix,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`; an empty
    /// row list yields a `0 x cols` matrix.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integers (used heavily in tests).
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
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

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| c * x).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vec_add(&self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: vec_sub(&self.entries, &other.entries),
        })
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), v)).collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let x = &m[(row, c)] * &inv;
                m[(row, c)] = x;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[(row, c)];
                    m[(r, c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    /// Reduced row-echelon form.
    pub fn rref(&self) -> Matrix {
        self.echelon().reduced
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Canonical basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = unit_vector(self.cols, f);
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(r, f)].clone();
                }
                v
            })
            .collect();
        Subspace::from_independent(self.cols, vectors)
    }

    /// Some solution of `M x = b`: the echelon particular solution with every
    /// free variable set to zero, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pivot;
                for c in col..n {
                    let delta = &factor * &m[(col, c)];
                    m[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = reduced[(r, n + c)].clone();
            }
        }
        Ok(Some(inv))
    }

    /// Sylvester's criterion: every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        for k in 1..=self.rows {
            if !self.leading_minor(k)?.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn leading_minor(&self, k: usize) -> Result<Rational> {
        let mut sub = Matrix::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                sub[(r, c)] = self[(r, c)].clone();
            }
        }
        sub.determinant()
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix, computed by
    /// exact congruence diagonalization.
    pub fn inertia(&self) -> Result<(usize, usize, usize)> {
        if !self.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut diag = Vec::with_capacity(n);
        let mut k = 0;
        while k < n {
            if m[(k, k)].is_zero() {
                // Bring a nonzero diagonal entry to position k, or manufacture
                // one from an off-diagonal entry: e_k <- e_k + e_j.
                if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                    m.swap_rows(k, j);
                    m = m.transpose();
                    m.swap_rows(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                    for c in 0..n {
                        let x = m[(j, c)].clone();
                        m[(k, c)] += x;
                    }
                    for r in 0..n {
                        let x = m[(r, j)].clone();
                        m[(r, k)] += x;
                    }
                } else {
                    diag.push(Rational::zero());
                    k += 1;
                    continue;
                }
            }
            let pivot = m[(k, k)].clone();
            for r in k + 1..n {
                if m[(r, k)].is_zero() {
                    continue;
                }
                let factor = &m[(r, k)] / &pivot;
                for c in k..n {
                    let delta = &factor * &m[(k, c)];
                    m[(r, c)] -= delta;
                }
                for rr in k..n {
                    let delta = &factor * &m[(rr, k)];
                    m[(rr, r)] -= delta;
                }
            }
            diag.push(pivot);
            k += 1;
        }
        let pos = diag.iter().filter(|d| d.is_positive()).count();
        let neg = diag.iter().filter(|d| d.is_negative()).count();
        Ok((pos, neg, n - pos - neg))
    }

    /// Characteristic polynomial `det(tI - M)`, coefficients from the constant
    /// term upwards (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Result<Vec<Rational>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut acc = Matrix::zeros(n, n);
        for k in 1..=n {
            // acc_k = M (acc_{k-1} + c_{n-k+1} I)
            let mut shifted = acc.clone();
            for i in 0..n {
                shifted[(i, i)] += &coeffs[n - k + 1];
            }
            acc = self.mul(&shifted)?;
            coeffs[n - k] = -acc.trace() / int(k as i64);
        }
        Ok(coeffs)
    }

    /// Degree of the minimal polynomial: the least `k` with `M^k` in the span
    /// of `I, M, ..., M^{k-1}`.
    pub fn minimal_poly_degree(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut powers = vec![Matrix::identity(n).entries.clone()];
        let mut current = Matrix::identity(n);
        for k in 1..=n {
            current = current.mul(self)?;
            powers.push(current.entries.clone());
            let stacked = Matrix::from_rows(n * n, powers.clone())?;
            if stacked.rank() < powers.len() {
                return Ok(k);
            }
        }
        Ok(n)
    }
}

/// A linear subspace of `Q^n`, stored as the nonzero rows of a reduced
/// row-echelon matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| unit_vector(ambient_dim, i))
                .collect(),
        }
    }

    /// Span of arbitrary vectors (dependent or zero vectors allowed).
    pub fn span(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        Ok(Self::from_independent(ambient_dim, vectors))
    }

    fn from_independent(ambient_dim: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let m = Matrix::from_rows(ambient_dim, vectors).expect("checked lengths");
        let Echelon { reduced, pivots } = m.echelon();
        let basis = (0..pivots.len()).map(|r| reduced.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        if is_zero_vector(v) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(self.ambient_dim, rows)
            .map(|m| m.rank() == self.dim())
            .unwrap_or(false)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, vectors)
    }

    /// Linear functionals vanishing on the subspace, as a subspace of the dual.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        let m = Matrix::from_rows(self.ambient_dim, self.basis.clone()).expect("checked lengths");
        m.kernel_basis()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        self.annihilator()
            .sum(&other.annihilator())
            .map(|s| s.annihilator())
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vector>> {
        let m = Matrix::from_columns(self.ambient_dim, &self.basis)?;
        m.solve(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(4, 4).rank(), 0);
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_zero());
        assert_eq!(Matrix::zeros(2, 3).kernel_basis(), Subspace::full(3));

        let k = Matrix::from_i64(&[&[1, 1, 0]]).kernel_basis();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&v(&[1, -1, 0])));
        assert_eq!(k.basis()[0], v(&[1, -1, 0]));
    }

    #[test]
    fn solve_examples() {
        let b = v(&[3, -1, 7]);
        assert_eq!(Matrix::identity(3).solve(&b).unwrap(), Some(b));
        assert_eq!(
            Matrix::from_i64(&[&[1, 1]]).solve(&v(&[2])).unwrap(),
            Some(v(&[2, 0]))
        );
        assert_eq!(Matrix::from_i64(&[&[0]]).solve(&v(&[1])).unwrap(), None);
        assert!(Matrix::identity(2).solve(&v(&[1])).is_err());
    }

    #[test]
    fn positive_definite_examples() {
        assert!(Matrix::identity(4).is_positive_definite().unwrap());
        assert!(!Matrix::from_i64(&[&[1, 0], &[0, -1]])
            .is_positive_definite()
            .unwrap());
        assert!(Matrix::from_i64(&[&[2, 1], &[1, 2]])
            .is_positive_definite()
            .unwrap());
        assert!(matches!(
            Matrix::from_i64(&[&[1, 2], &[0, 1]]).is_positive_definite(),
            Err(Error::NonSymmetric)
        ));
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        // Hyperbolic plane: x*y form.
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.inertia().unwrap(), (1, 1, 0));
        let m = Matrix::from_i64(&[
            &[-2, 0, 0, 0],
            &[0, -2, 0, 0],
            &[0, 0, -2, 0],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(m.inertia().unwrap(), (0, 3, 1));
    }

    #[test]
    fn char_poly_and_minimal_poly() {
        // diag(-2, 1, 1): (t+2)(t-1)^2 = t^3 - 3t + 2
        let m = Matrix::diagonal(&[int(-2), int(1), int(1)]);
        assert_eq!(m.char_poly().unwrap(), v(&[2, -3, 0, 1]));
        assert_eq!(m.minimal_poly_degree().unwrap(), 2);
        let j = Matrix::from_i64(&[&[-2, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert_eq!(j.char_poly().unwrap(), v(&[2, -3, 0, 1]));
        assert_eq!(j.minimal_poly_degree().unwrap(), 3);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), int(1));
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(
            Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().unwrap(),
            None
        );
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(a.intersection(&b).unwrap().basis(), &[v(&[0, 1, 0])]);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(3));
        // Same span, different generators.
        let c = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[1, -1, 0]), v(&[2, 0, 0])]).unwrap();
        assert_eq!(a, c);
        assert_eq!(a.annihilator().basis(), &[v(&[0, 0, 1])]);
    }
}
