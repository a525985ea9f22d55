//! Finite-dimensional Lie algebras over the rationals, given by structure
//! constants, and their classical structural invariants.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{add_scaled, is_zero_vec, kernel, unit_vec, zero_vec, QMatrix, Rational, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("cannot declare the bracket of basis element {0} with itself")]
    SelfBracket(usize),
    #[error("{} basis labels given for dimension {dim}", labels)]
    LabelCount { labels: usize, dim: usize },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("Jacobi identity fails on {} triple(s), first ({}, {}, {})", .0.len(), .0[0].triple.0 + 1, .0[0].triple.1 + 1, .0[0].triple.2 + 1)]
    Jacobi(Vec<JacobiViolation>),
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("change-of-basis matrix is singular or has the wrong shape")]
    BadBasisChange,
}

/// A Lie algebra given by structure constants `[X_i, X_j] = sum_k C_ij^k X_k`.
///
/// Only pairs `i < j` are stored; the opposite order is synthesized.
/// Indices are 0-based internally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    constants: BTreeMap<(usize, usize), Vec<Rational>>,
}

/// One failing triple of the Jacobi check with its residual vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl LieAlgebra {
    /// The abelian algebra of the given dimension with labels `X1..Xn`.
    pub fn abelian(dim: usize) -> Self {
        Self::with_labels((1..=dim).map(|i| format!("X{i}")).collect())
    }

    /// An abelian algebra carrying the given basis labels.
    pub fn with_labels(labels: Vec<String>) -> Self {
        LieAlgebra {
            dim: labels.len(),
            labels,
            constants: BTreeMap::new(),
        }
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self, AlgebraError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self::with_labels(labels))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), AlgebraError> {
        if labels.len() != self.dim {
            return Err(AlgebraError::LabelCount {
                labels: labels.len(),
                dim: self.dim,
            });
        }
        let checked = Self::from_labels(&labels)?;
        self.labels = checked.labels;
        Ok(())
    }

    /// Sets `[X_i, X_j] = value`; `i > j` stores the negated value under `(j, i)`.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<Rational>) -> Result<(), AlgebraError> {
        for idx in [i, j] {
            if idx >= self.dim {
                return Err(AlgebraError::IndexOutOfRange { index: idx, dim: self.dim });
            }
        }
        if value.len() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim,
                got: value.len(),
            });
        }
        if i == j {
            return if is_zero_vec(&value) {
                Ok(())
            } else {
                Err(AlgebraError::SelfBracket(i))
            };
        }
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.into_iter().map(|x| -x).collect())
        };
        if is_zero_vec(&value) {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, value);
        }
        Ok(())
    }

    /// Convenience for integer brackets given as `(k, c)` pairs meaning `c X_k`.
    pub fn set_bracket_terms(&mut self, i: usize, j: usize, terms: &[(usize, i64)]) -> Result<(), AlgebraError> {
        let mut v = zero_vec(self.dim);
        for &(k, c) in terms {
            if k >= self.dim {
                return Err(AlgebraError::IndexOutOfRange { index: k, dim: self.dim });
            }
            v[k] += crate::linalg::q(c);
        }
        self.set_bracket(i, j, v)
    }

    /// Stored constants, keyed by `(i, j)` with `i < j`.
    pub fn constants(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.constants
    }

    /// `C_ij^k`, with antisymmetry applied.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.constants.get(&(i, j)).map_or_else(Rational::zero, |v| v[k].clone()),
            std::cmp::Ordering::Greater => self.constants.get(&(j, i)).map_or_else(Rational::zero, |v| -v[k].clone()),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// `[X_i, X_j]` as a coefficient vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        if i < j {
            self.constants.get(&(i, j)).cloned().unwrap_or_else(|| zero_vec(self.dim))
        } else if i > j {
            self.constants
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x.clone()).collect())
                .unwrap_or_else(|| zero_vec(self.dim))
        } else {
            zero_vec(self.dim)
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// Bilinear bracket of two coefficient vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>, AlgebraError> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    got: w.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (&(i, j), c) in &self.constants {
            // u_i v_j - u_j v_i
            let coef = &u[i] * &v[j] - &u[j] * &v[i];
            add_scaled(&mut out, &coef, c);
        }
        out
    }

    /// Checks the Jacobi identity on every triple `i < j < k`.
    pub fn check_jacobi(&self) -> JacobiReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                    let mut r = self.bracket_unchecked(&self.basis_bracket(i, j), &xk);
                    let t2 = self.bracket_unchecked(&self.basis_bracket(j, k), &xi);
                    let t3 = self.bracket_unchecked(&self.basis_bracket(k, i), &xj);
                    for ((a, b), c) in r.iter_mut().zip(t2).zip(t3) {
                        *a += b + c;
                    }
                    if !is_zero_vec(&r) {
                        violations.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    /// Returns `self` if the Jacobi identity holds, else the violations.
    pub fn validated(self) -> Result<Self, AlgebraError> {
        let report = self.check_jacobi();
        if report.holds() {
            Ok(self)
        } else {
            Err(AlgebraError::Jacobi(report.violations))
        }
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// `[U, W]` as a subspace.
    pub fn bracket_subspaces(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in u.basis() {
            for b in w.basis() {
                vs.push(self.bracket_unchecked(a, b));
            }
        }
        Subspace::span(self.dim, vs)
    }

    fn iterate_series(&self, next: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let n = next(last);
            if &n == last {
                break;
            }
            series.push(n);
        }
        series
    }

    /// `D^0 = g, D^{i+1} = [D^i, D^i]`, stopping at zero or when stationary.
    /// A stationary term is not repeated.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.iterate_series(|d| self.bracket_subspaces(d, d))
    }

    /// `C^0 = g, C^{i+1} = [g, C^i]`, stopping at zero or when stationary.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let g = self.whole();
        self.iterate_series(|c| self.bracket_subspaces(&g, c))
    }

    pub fn derived_algebra(&self) -> Subspace {
        let g = self.whole();
        self.bracket_subspaces(&g, &g)
    }

    /// Kernel of `v -> ([v, X_1], ..., [v, X_n])`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // Row (j, k) of the system: sum_i v_i C_ij^k = 0.
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                let row: Vec<Rational> = (0..n).map(|i| self.structure_constant(i, j, k)).collect();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return self.whole();
        }
        Subspace::span(n, kernel(&rows, n))
    }

    /// `dim g - dim [g, g]`.
    pub fn betti1(&self) -> usize {
        self.dim - self.derived_algebra().dim()
    }

    /// Lowest-index-first basis vectors whose classes span `g / [g, g]`.
    pub fn minimal_generators(&self) -> Vec<usize> {
        let mut span = self.derived_algebra();
        let mut gens = Vec::new();
        for i in 0..self.dim {
            let e = unit_vec(self.dim, i);
            if !span.contains(&e) {
                span = span.sum(&Subspace::span(self.dim, [e]));
                gens.push(i);
            }
        }
        gens
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    /// Smallest `j` with `D^j = 0`, if any.
    pub fn solvability_index(&self) -> Option<usize> {
        let s = self.derived_series();
        s.last().unwrap().is_zero().then(|| s.len() - 1)
    }

    pub fn series_report(&self) -> SeriesReport {
        let derived = self.derived_series();
        let lower = self.lower_central_series();
        let derived_dims: Vec<usize> = derived.iter().map(Subspace::dim).collect();
        let lower_central_dims: Vec<usize> = lower.iter().map(Subspace::dim).collect();
        let solvable = derived_dims.last() == Some(&0);
        SeriesReport {
            b1: self.dim - derived_dims.get(1).copied().unwrap_or(self.dim),
            solvability_index: solvable.then(|| derived_dims.len() - 1),
            solvable,
            nilpotent: lower_central_dims.last() == Some(&0),
            center_dim: self.center().dim(),
            derived_dims,
            lower_central_dims,
        }
    }

    /// Re-expresses the algebra in a new basis. Column `a` of `p` holds the
    /// old coordinates of the new basis vector `Y_a`. Labels become `Y1..Yn`.
    pub fn change_basis(&self, p: &QMatrix) -> Result<LieAlgebra, AlgebraError> {
        if !p.is_square() || p.rows() != self.dim {
            return Err(AlgebraError::BadBasisChange);
        }
        let inv = p.inverse().ok_or(AlgebraError::BadBasisChange)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|a| p.column(a)).collect();
        let mut out = LieAlgebra::with_labels((1..=self.dim).map(|i| format!("Y{i}")).collect());
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let old = self.bracket_unchecked(&cols[a], &cols[b]);
                out.set_bracket(a, b, inv.mul_vec(&old))?;
            }
        }
        Ok(out)
    }

    /// Reorders the basis: new basis element `a` is old element `perm[a]`.
    /// Labels travel with their vectors.
    pub fn permute(&self, perm: &[usize]) -> Result<LieAlgebra, AlgebraError> {
        let mut seen = vec![false; self.dim];
        if perm.len() != self.dim || perm.iter().any(|&p| p >= self.dim || std::mem::replace(&mut seen[p], true)) {
            return Err(AlgebraError::BadBasisChange);
        }
        let mut p = QMatrix::zeros(self.dim, self.dim);
        for (a, &old) in perm.iter().enumerate() {
            p.set(old, a, crate::linalg::q(1));
        }
        let mut out = self.change_basis(&p)?;
        out.labels = perm.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(out)
    }

    /// Equality of structure constants, ignoring labels.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.constants == other.constants
    }

    /// Whether the linear map with matrix `m` (columns are images of the
    /// basis of `self`) preserves brackets into `target`.
    pub fn is_homomorphism(&self, target: &LieAlgebra, m: &QMatrix) -> bool {
        if m.cols() != self.dim || m.rows() != target.dim {
            return false;
        }
        let images: Vec<Vec<Rational>> = (0..self.dim).map(|a| m.column(a)).collect();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let lhs = m.mul_vec(&self.basis_bracket(a, b));
                if lhs != target.bracket_unchecked(&images[a], &images[b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the graph joining `i`, `j` and `k` whenever `C_ij^k != 0` is
    /// connected. A disconnected graph exhibits a splitting into
    /// coordinate ideals.
    pub fn basis_graph_connected(&self) -> bool {
        if self.dim == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.dim).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (&(i, j), v) in &self.constants {
            let a = find(&mut parent, i);
            let b = find(&mut parent, j);
            parent[a] = b;
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let a = find(&mut parent, k);
                    let b = find(&mut parent, j);
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        (0..self.dim).all(|x| find(&mut parent, x) == root)
    }

    /// Adjoint matrix of a basis element: column `j` is `[X_i, X_j]`.
    pub fn ad(&self, i: usize) -> QMatrix {
        let n = self.dim;
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.basis_bracket(i, j).into_iter().enumerate() {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Renders a coefficient vector with this algebra's labels, e.g. `X1 + 2*X3`.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        crate::io::format_combination(v.iter().zip(&self.labels).map(|(c, l)| (c, l.as_str())))
    }
}

/// Outcome of [`LieAlgebra::check_jacobi`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Dimensions of the derived and lower central series together with the
/// center, the first Betti number and the solvability data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub derived_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub center_dim: usize,
    pub b1: usize,
    pub solvable: bool,
    pub solvability_index: Option<usize>,
    pub nilpotent: bool,
}

impl SeriesReport {
    /// `dim D^i`, continuing a stationary tail past the stored terms.
    pub fn derived_dim(&self, i: usize) -> usize {
        *self.derived_dims.get(i).unwrap_or_else(|| self.derived_dims.last().unwrap())
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::emit_algebra(self))
    }
}
