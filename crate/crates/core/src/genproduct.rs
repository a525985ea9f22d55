//! The generator product `g1 ⊗ g2`: the central extension of `g1 ⊕ g2` by
//! one central element `Z_ik` per pair of minimal generators, with cocycle
//! `φ(u, v) = sum_ik π_i(u) π'_k(v) Z_ik` where `π`, `π'` are coordinates of
//! classes modulo the derived algebras.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra};
use crate::catalog::{self, CatalogError};
use crate::linalg::{q, zero_vec, QMatrix, Rational, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("factor {0}: {1}")]
    Factor(usize, AlgebraError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("solvability index requires solvable factors")]
    NotSolvable,
}

/// One adjoined central element: `φ(X_left, X'_right) = Z` where `left` and
/// `right` index the factor bases and `central` indexes the product basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CocyclePair {
    pub left: usize,
    pub right: usize,
    pub central: usize,
}

#[derive(Clone, Debug)]
pub struct GeneratorProduct {
    pub algebra: LieAlgebra,
    /// Product index of each basis vector of the first factor.
    pub embed1: Vec<usize>,
    /// Product index of each basis vector of the second factor.
    pub embed2: Vec<usize>,
    /// Product indices of `Z_1 .. Z_{m1 m2}`.
    pub centrals: Vec<usize>,
    pub cocycle_support: Vec<CocyclePair>,
    pub generators1: Vec<usize>,
    pub generators2: Vec<usize>,
    pub warnings: Vec<String>,
}

impl GeneratorProduct {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn m1(&self) -> usize {
        self.generators1.len()
    }

    pub fn m2(&self) -> usize {
        self.generators2.len()
    }
}

fn unique_label(base: String, taken: &[String]) -> String {
    let mut l = base;
    while taken.contains(&l) {
        l.push('\'');
    }
    l
}

/// Coordinates of each basis vector's class in `g / D^1 g` with respect to
/// the classes of the minimal generators: row `a` is `π(X_a)`.
pub fn class_coordinates(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let gens = g.minimal_generators();
    let d1 = g.derived_algebra();
    let mut cols: Vec<Vec<Rational>> = gens.iter().map(|&i| crate::linalg::unit_vec(n, i)).collect();
    cols.extend(d1.basis().iter().cloned());
    let mut b = QMatrix::zeros(n, n);
    for (c, v) in cols.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            b.set(r, c, x.clone());
        }
    }
    let inv = b.inverse().expect("generators complement the derived algebra");
    (0..n)
        .map(|a| inv.column(a)[..gens.len()].to_vec())
        .collect()
}

/// Builds `g1 ⊗ g2` on the basis `[g1, g2, Z_1 .. Z_{m1 m2}]` with
/// `Z_{(a-1) m2 + b}` paired with the a-th generator of `g1` and the b-th
/// of `g2`. Labels of `g2` get a `'` suffix.
pub fn generator_product(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<GeneratorProduct, ProductError> {
    let report1 = g1.check_jacobi();
    if !report1.holds() {
        return Err(ProductError::Factor(1, AlgebraError::Jacobi(report1.violations)));
    }
    let report2 = g2.check_jacobi();
    if !report2.holds() {
        return Err(ProductError::Factor(2, AlgebraError::Jacobi(report2.violations)));
    }
    let mut warnings = Vec::new();
    for (k, g) in [(1, g1), (2, g2)] {
        if !g.is_solvable() {
            warnings.push(format!("factor {k} is not solvable; the dimension identities are not claimed"));
        }
    }
    let (d1, d2) = (g1.dim(), g2.dim());
    let gens1 = g1.minimal_generators();
    let gens2 = g2.minimal_generators();
    let (m1, m2) = (gens1.len(), gens2.len());
    let n = d1 + d2 + m1 * m2;

    let mut labels: Vec<String> = g1.labels().to_vec();
    for l in g2.labels() {
        let l = unique_label(format!("{l}'"), &labels);
        labels.push(l);
    }
    for k in 1..=m1 * m2 {
        let l = unique_label(format!("Z{k}"), &labels);
        labels.push(l);
    }
    let mut e = LieAlgebra::with_labels(labels);
    let embed1: Vec<usize> = (0..d1).collect();
    let embed2: Vec<usize> = (d1..d1 + d2).collect();
    let centrals: Vec<usize> = (d1 + d2..n).collect();

    let lift = |v: &[Rational], offset: usize| {
        let mut out = zero_vec(n);
        for (k, c) in v.iter().enumerate() {
            out[offset + k] = c.clone();
        }
        out
    };
    for (&(i, j), v) in g1.constants() {
        e.set_bracket(i, j, lift(v, 0)).expect("valid indices");
    }
    for (&(i, j), v) in g2.constants() {
        e.set_bracket(d1 + i, d1 + j, lift(v, d1)).expect("valid indices");
    }
    let pi1 = class_coordinates(g1);
    let pi2 = class_coordinates(g2);
    for a in 0..d1 {
        for b in 0..d2 {
            let mut v = zero_vec(n);
            for s in 0..m1 {
                for t in 0..m2 {
                    v[d1 + d2 + s * m2 + t] = &pi1[a][s] * &pi2[b][t];
                }
            }
            e.set_bracket(a, d1 + b, v).expect("valid indices");
        }
    }
    let mut cocycle_support = Vec::with_capacity(m1 * m2);
    for (s, &i) in gens1.iter().enumerate() {
        for (t, &k) in gens2.iter().enumerate() {
            cocycle_support.push(CocyclePair {
                left: i,
                right: k,
                central: d1 + d2 + s * m2 + t,
            });
        }
    }
    let algebra = e.validated().map_err(|err| ProductError::Factor(0, err))?;
    Ok(GeneratorProduct {
        algebra,
        embed1,
        embed2,
        centrals,
        cocycle_support,
        generators1: gens1,
        generators2: gens2,
        warnings,
    })
}

/// The signed permutation carrying `g1 ⊗ g2` onto `g2 ⊗ g1`: factors trade
/// places and `Z_ik` goes to `-Z_ki`. Column `a` is the image of basis
/// vector `a`.
pub fn swap_isomorphism(gp12: &GeneratorProduct, gp21: &GeneratorProduct) -> QMatrix {
    let n = gp12.dim();
    let mut m = QMatrix::zeros(n, n);
    for (a, &src) in gp12.embed1.iter().enumerate() {
        m.set(gp21.embed2[a], src, q(1));
    }
    for (b, &src) in gp12.embed2.iter().enumerate() {
        m.set(gp21.embed1[b], src, q(1));
    }
    let (m1, m2) = (gp12.m1(), gp12.m2());
    for s in 0..m1 {
        for t in 0..m2 {
            m.set(gp21.centrals[t * m1 + s], gp12.centrals[s * m2 + t], q(-1));
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

/// A numeric identity or bound with both sides computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: usize,
    pub relation: Relation,
    pub rhs: usize,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: usize, relation: Relation, rhs: usize) -> Self {
        Check {
            name: name.into(),
            lhs,
            relation,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Eq => self.lhs == self.rhs,
            Relation::Le => self.lhs <= self.rhs,
            Relation::Ge => self.lhs >= self.rhs,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Eq => "==",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        };
        let verdict = if self.holds() { "ok" } else { "FAILS" };
        write!(f, "{}: {} {rel} {} {verdict}", self.name, self.lhs, self.rhs)
    }
}

/// The four dimension identities for `e = g1 ⊗ g2`, plus the center
/// formula that holds without assuming `Z(g_i) ⊆ D^1 g_i`.
#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub b1: Check,
    pub derived1: Check,
    pub higher_derived: Vec<Check>,
    pub center: Check,
    pub center_exact: Check,
    pub warnings: Vec<String>,
}

impl Theorem1Report {
    /// The four stated identities.
    pub fn stated(&self) -> Vec<&Check> {
        let mut v = vec![&self.b1, &self.derived1];
        v.extend(self.higher_derived.iter());
        v.push(&self.center);
        v
    }

    pub fn all_stated_hold(&self) -> bool {
        self.stated().iter().all(|c| c.holds())
    }

    pub fn items_hold(&self) -> [bool; 4] {
        [
            self.b1.holds(),
            self.derived1.holds(),
            self.higher_derived.iter().all(Check::holds),
            self.center.holds(),
        ]
    }
}

pub fn verify_theorem1(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<Theorem1Report, ProductError> {
    let gp = generator_product(g1, g2)?;
    Ok(theorem1_for(g1, g2, &gp))
}

pub fn theorem1_for(g1: &LieAlgebra, g2: &LieAlgebra, gp: &GeneratorProduct) -> Theorem1Report {
    let (s1, s2, se) = (g1.series_report(), g2.series_report(), gp.algebra.series_report());
    let m1m2 = s1.b1 * s2.b1;
    let depth = s1.derived_dims.len().max(s2.derived_dims.len()).max(se.derived_dims.len());
    let higher_derived = (2..=depth)
        .map(|i| {
            Check::new(
                format!("dim D^{i}(e) = dim D^{i}(g1) + dim D^{i}(g2)"),
                se.derived_dim(i),
                Relation::Eq,
                s1.derived_dim(i) + s2.derived_dim(i),
            )
        })
        .collect();
    let central_derived = |g: &LieAlgebra| g.center().intersection(&g.derived_algebra()).dim();
    Theorem1Report {
        b1: Check::new("b1(e) = b1(g1) + b1(g2)", se.b1, Relation::Eq, s1.b1 + s2.b1),
        derived1: Check::new(
            "dim D^1(e) = dim D^1(g1) + dim D^1(g2) + m1 m2",
            se.derived_dim(1),
            Relation::Eq,
            s1.derived_dim(1) + s2.derived_dim(1) + m1m2,
        ),
        higher_derived,
        center: Check::new(
            "dim Z(e) = dim Z(g1) + dim Z(g2) + m1 m2",
            se.center_dim,
            Relation::Eq,
            s1.center_dim + s2.center_dim + m1m2,
        ),
        center_exact: Check::new(
            "dim Z(e) = dim(Z(g1) cap D^1 g1) + dim(Z(g2) cap D^1 g2) + m1 m2",
            se.center_dim,
            Relation::Eq,
            central_derived(g1) + central_derived(g2) + m1m2,
        ),
        warnings: gp.warnings.clone(),
    }
}

/// Bounds satisfied by every generator product.
#[derive(Clone, Debug)]
pub struct Prop4Report {
    pub derived: Check,
    pub center: Check,
    pub dim: Check,
}

impl Prop4Report {
    pub fn holds(&self) -> bool {
        self.derived.holds() && self.center.holds() && self.dim.holds()
    }
}

pub fn verify_prop4(gp: &GeneratorProduct) -> Prop4Report {
    let g = &gp.algebra;
    let n = g.dim();
    Prop4Report {
        derived: Check::new("dim [g, g] <= dim g - 2", g.derived_algebra().dim(), Relation::Le, n.saturating_sub(2)),
        center: Check::new("dim Z(g) >= 1", g.center().dim(), Relation::Ge, 1),
        dim: Check::new("dim g >= 3", n, Relation::Ge, 3),
    }
}

/// Observed solvability index of the product next to `max(j1, j2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolvabilityIndex {
    pub observed: usize,
    pub claimed: usize,
}

impl SolvabilityIndex {
    pub fn matches_claim(&self) -> bool {
        self.observed == self.claimed
    }
}

pub fn solvability_index_product(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<SolvabilityIndex, ProductError> {
    let (Some(j1), Some(j2)) = (g1.solvability_index(), g2.solvability_index()) else {
        return Err(ProductError::NotSolvable);
    };
    let gp = generator_product(g1, g2)?;
    let observed = gp.algebra.solvability_index().ok_or(ProductError::NotSolvable)?;
    Ok(SolvabilityIndex {
        observed,
        claimed: j1.max(j2),
    })
}

/// `r_n` on `X1..X_{n-2}`.
pub fn build_rn(n: usize) -> Result<LieAlgebra, ProductError> {
    Ok(catalog::rn(n)?)
}

/// `r_n ⊗ L1`, an `n`-dimensional solvable non-nilpotent algebra with `b1 = 2`.
pub fn prop3_construct(n: usize) -> Result<GeneratorProduct, ProductError> {
    generator_product(&build_rn(n)?, &catalog::abelian(1))
}

/// `(dim g1, b1 g1; dim g2, b1 g2)` of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecompositionType {
    pub d1: usize,
    pub m1: usize,
    pub d2: usize,
    pub m2: usize,
}

impl DecompositionType {
    pub fn product_dim(&self) -> usize {
        self.d1 + self.d2 + self.m1 * self.m2
    }

    /// Both factors abelian, so the product is nilpotent.
    pub fn nilpotent(&self) -> bool {
        self.m1 == self.d1 && self.m2 == self.d2
    }
}

impl fmt::Display for DecompositionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.d1, self.m1, self.d2, self.m2)
    }
}

/// Unordered types with `d1 + d2 + m1 m2 = n`, written with
/// `(d1, m1) >= (d2, m2)`, ordered by `m1 + m2`, then decreasing `d1`, then
/// decreasing `m1`.
pub fn enumerate_types(n: usize) -> Vec<DecompositionType> {
    let mut out = Vec::new();
    for d1 in 1..=n {
        for m1 in 1..=d1 {
            for d2 in 1..=n {
                for m2 in 1..=d2 {
                    let t = DecompositionType { d1, m1, d2, m2 };
                    if t.product_dim() == n && (d1, m1) >= (d2, m2) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out.sort_by_key(|t| (t.m1 + t.m2, std::cmp::Reverse(t.d1), std::cmp::Reverse(t.m1)));
    out
}

pub fn enumerate_dim7_types() -> Vec<DecompositionType> {
    enumerate_types(7)
}

/// Subspace spanned by the adjoined central elements.
pub fn central_span(gp: &GeneratorProduct) -> Subspace {
    let n = gp.dim();
    Subspace::span(n, gp.centrals.iter().map(|&k| crate::linalg::unit_vec(n, k)))
}

/// Checks that every `[X_i, X'_k]` between generators is the matching `Z`.
pub fn cocycle_is_normalized(gp: &GeneratorProduct) -> bool {
    let n = gp.dim();
    gp.cocycle_support.iter().all(|p| {
        let v = gp.algebra.basis_bracket(gp.embed1[p.left], gp.embed2[p.right]);
        v.iter().enumerate().all(|(k, c)| if k == p.central { c.is_one() } else { c.is_zero() }) && v.len() == n
    })
}
