//! Dense linear algebra over the rationals: reduced row-echelon forms,
//! kernels, inverses and canonical subspaces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number used throughout the crate.
pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on a zero denominator.
pub fn frac(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(QMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Option<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn scaled(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rref(self.to_rows()).pivots.len()
    }

    /// Basis of `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        kernel(&self.to_rows(), self.cols)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vec(n, r));
                row
            })
            .collect();
        let red = rref(aug);
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return None;
        }
        let rows = red.rows.into_iter().map(|r| r[n..].to_vec()).collect();
        QMatrix::from_rows(rows)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let mut a = self.to_rows();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det *= &piv;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &piv;
                let (top, bottom) = a.split_at_mut(r);
                add_scaled(&mut bottom[0][c..], &-f, &top[c][c..]);
            }
        }
        det
    }
}

/// Result of a reduced row-echelon computation.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Nonzero rows of the reduced form.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form by Gauss-Jordan elimination.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> Rref {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -row[c].clone();
                add_scaled(&mut row[c..], &f, &pivot_row[c..]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Rref { rows, pivots }
}

pub fn rank_of(rows: &[Vec<Rational>]) -> usize {
    rref(rows.to_vec()).pivots.len()
}

/// Null space basis of the matrix given by `rows` (each of length `cols`).
pub fn kernel(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let red = rref(rows.to_vec());
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = zero_vec(cols);
        v[free] = Rational::one();
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// A linear subspace of `Q^n`, stored as its canonical reduced row-echelon
/// basis. Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vec(ambient, i)))
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<_> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector outside ambient space"))
            .filter(|v| !is_zero_vec(v))
            .collect();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let red = rref(rows);
        Subspace {
            ambient,
            basis: red.rows,
            pivots: red.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                add_scaled(&mut r, &f, row);
            }
        }
        is_zero_vec(&r)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // a in U, b in W with a = b: kernel of [U^T | -W^T].
        let (du, dw) = (self.dim(), other.dim());
        if du == 0 || dw == 0 {
            return Self::zero(self.ambient);
        }
        let rows: Vec<Vec<Rational>> = (0..self.ambient)
            .map(|k| {
                self.basis
                    .iter()
                    .map(|u| u[k].clone())
                    .chain(other.basis.iter().map(|w| -w[k].clone()))
                    .collect()
            })
            .collect();
        let vectors = kernel(&rows, du + dw).into_iter().map(|coef| {
            let mut v = zero_vec(self.ambient);
            for (c, u) in coef[..du].iter().zip(&self.basis) {
                add_scaled(&mut v, c, u);
            }
            v
        });
        Self::span(self.ambient, vectors)
    }
}
