//! Sparse multivariate polynomials with exact rational coefficients, and
//! fraction-free rank computation for matrices of them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

use crate::lcg::Lcg64;
use crate::linalg::{q, rank_of, QMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live over different variable lists")]
    RingMismatch,
    #[error("evaluation point has {got} values for {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    InexactDivision,
}

/// An ordered list of named indeterminates shared between polynomials.
///
/// The empty list is the ring of constants; constants combine with
/// polynomials over any list.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Vars(names.into_iter().map(Into::into).collect())
    }

    /// `prefix1 .. prefixN`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn constants() -> Self {
        Vars(Arc::from(Vec::<String>::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    fn unify(&self, other: &Vars) -> Result<Vars, PolyError> {
        if Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0 || other.is_empty() {
            Ok(self.clone())
        } else if self.is_empty() {
            Ok(other.clone())
        } else {
            Err(PolyError::RingMismatch)
        }
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

/// A power product stored sparsely as `(variable, exponent)` pairs sorted
/// by variable. Ordered graded-lexicographically with `x1 > x2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: SmallVec<[(u16, u16); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        Monomial {
            degree: 1,
            factors: smallvec::smallvec![(i as u16, 1)],
        }
    }

    /// From a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let factors: SmallVec<_> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i as u16, e as u16))
            .collect();
        Monomial {
            degree: exps.iter().sum(),
            factors,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.factors
            .iter()
            .find(|(v, _)| *v as usize == var)
            .map_or(0, |&(_, e)| u32::from(e))
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.factors.iter().map(|&(v, e)| (v as usize, u32::from(e)))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.factors.last().map(|&(v, _)| v as usize)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        factors.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        factors.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        factors.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&f), None) => {
                    factors.push(f);
                    a.next();
                }
                (None, Some(&&f)) => {
                    factors.push(f);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            degree: self.degree + other.degree,
            factors,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.degree > self.degree {
            return None;
        }
        let mut factors = SmallVec::new();
        let mut b = other.factors.iter().peekable();
        for &(va, ea) in &self.factors {
            match b.peek() {
                Some(&&(vb, eb)) if vb == va => {
                    if eb > ea {
                        return None;
                    }
                    if ea > eb {
                        factors.push((va, ea - eb));
                    }
                    b.next();
                }
                Some(&&(vb, _)) if vb < va => return None,
                _ => factors.push((va, ea)),
            }
        }
        if b.next().is_some() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            factors,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            // Lex on dense exponent vectors: the first variable where the
            // exponents differ decides.
            for (&(va, ea), &(vb, eb)) in self.factors.iter().zip(&other.factors) {
                match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {}
                        o => return o,
                    },
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial over the rationals. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.vars.unify(&other.vars).is_ok() && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    /// A rational number as a polynomial over the constant ring.
    pub fn from_rational(c: Rational) -> Self {
        Self::constant(&Vars::constants(), c)
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Self::term(vars, Monomial::var(i), Rational::one())
    }

    pub fn term(vars: &Vars, m: Monomial, c: Rational) -> Self {
        if let Some(v) = m.max_var() {
            assert!(v < vars.len(), "monomial uses an undeclared variable");
        }
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// The same polynomial viewed over `vars`; fails if a used variable
    /// index does not exist there.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self, PolyError> {
        if self.terms.keys().any(|m| m.max_var().is_some_and(|v| v >= vars.len())) {
            return Err(PolyError::RingMismatch);
        }
        Ok(Polynomial {
            vars: vars.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let vars = self.vars.unify(&other.vars)?;
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Polynomial {
            vars,
            terms: big.terms.clone(),
        };
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let vars = self.vars.unify(&other.vars)?;
        let mut out = Polynomial {
            vars,
            terms: self.terms.clone(),
        };
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let vars = self.vars.unify(&other.vars)?;
        let mut out = Polynomial::zero(&vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) -> Result<(), PolyError> {
        self.vars = self.vars.unify(&other.vars)?;
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
        Ok(())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `point[i]` for variable `i`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::PointLength {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`; errors if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Self, PolyError> {
        let vars = self.vars.unify(&d.vars)?;
        let Some((lm_d, lc_d)) = d.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        if d.terms.len() == 1 {
            let inv = lc_d.recip();
            let mut out = Polynomial::zero(&vars);
            for (m, c) in &self.terms {
                let m = m.div(lm_d).ok_or(PolyError::InexactDivision)?;
                out.terms.insert(m, c * &inv);
            }
            return Ok(out);
        }
        let mut rem = Polynomial {
            vars: vars.clone(),
            terms: self.terms.clone(),
        };
        let mut quot = Polynomial::zero(&vars);
        while let Some((lm, lc)) = rem.terms.iter().next_back() {
            let m = lm.div(lm_d).ok_or(PolyError::InexactDivision)?;
            let c = lc / lc_d;
            for (md, cd) in &d.terms {
                rem.add_term(md.mul(&m), -(&c * cd));
            }
            quot.terms.insert(m, c);
        }
        Ok(quot)
    }

    /// Gcd of the numerators over lcm of the denominators, made positive.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::zero()
        } else {
            Rational::new(num, den)
        }
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        let sign = if self.leading_term().unwrap().1.is_negative() { -q(1) } else { q(1) };
        self.scale(&(sign / c))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if m.is_one() || !abs.is_one() {
                parts.push(fmt_rational(&abs));
            }
            for (v, e) in m.factors() {
                let name = if v < self.vars.len() {
                    self.vars.name(v).to_string()
                } else {
                    format!("v{}", v + 1)
                };
                parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// Dense matrix of polynomials over a shared variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Vars,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, vars: &Vars) -> Self {
        PolyMatrix {
            rows,
            cols,
            vars: vars.clone(),
            entries: vec![Polynomial::zero(vars); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) -> Result<(), PolyError> {
        let p = p.with_vars(&self.vars)?;
        self.entries[r * self.cols + c] = p;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// `M = -M^T`.
    pub fn is_skew_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn eval(&self, point: &[Rational]) -> Result<QMatrix, PolyError> {
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).eval(point)?);
            }
        }
        Ok(m)
    }

    /// Rank over the field of rational functions, by fraction-free (Bareiss)
    /// elimination.
    ///
    /// Pivot: the first column with a nonzero entry at or below the current
    /// row; within it the entry of least total degree, then fewest terms,
    /// then lowest row. Every division by the previous pivot is exact; an
    /// inexact one would mean an arithmetic bug and panics.
    pub fn symbolic_rank(&self) -> usize {
        let mut a: Vec<Vec<Polynomial>> = (0..self.rows)
            .map(|r| self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut prev = Polynomial::one(&self.vars);
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows)
                .filter(|&r| !a[r][c].is_zero())
                .min_by_key(|&r| (a[r][c].degree(), a[r][c].nterms(), r))
            else {
                continue;
            };
            a.swap(rank, p);
            let (top, bottom) = a.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            let pivot = &pivot_row[c];
            for row in bottom.iter_mut() {
                let factor = std::mem::replace(&mut row[c], Polynomial::zero(&self.vars));
                for j in c + 1..self.cols {
                    let mut v = pivot * &row[j];
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v = &v - &(&factor * &pivot_row[j]);
                    }
                    row[j] = v
                        .exact_div(&prev)
                        .expect("fraction-free elimination produced an inexact division");
                }
            }
            prev = pivot.clone();
            rank += 1;
        }
        rank
    }

    /// Largest exact rank over `trials` pseudo-random integer points with
    /// coordinates in `[-1000, 1000]`. Never exceeds [`Self::symbolic_rank`].
    pub fn certified_random_rank(&self, trials: usize, seed: u64) -> usize {
        assert!(trials >= 1, "need at least one trial");
        let mut rng = Lcg64::new(seed);
        let mut best = 0;
        for _ in 0..trials {
            let point: Vec<Rational> = (0..self.vars.len()).map(|_| q(rng.range_i64(-1000, 1000))).collect();
            let m = self.eval(&point).expect("point length matches variable list");
            best = best.max(rank_of(&m.to_rows()));
        }
        best
    }
}
