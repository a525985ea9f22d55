//! Product structures: involutions `E != ±id` satisfying
//! `E[X,Y] = [EX,Y] + [X,EY] - E[EX,EY]`, their extension to generator
//! products, and paracomplex structures (equal eigenspace dimensions).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::genproduct::{generator_product, CocyclePair, GeneratorProduct, ProductError};
use crate::linalg::{q, unit_vec, QMatrix, Rational, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("matrix is {rows}x{cols}, algebra has dimension {dim}")]
    Shape { rows: usize, cols: usize, dim: usize },
    #[error("structure must be diagonal with entries +1 or -1 in the given basis")]
    NotDiagonal,
    #[error("{got} sign choices given for {expected} free pairs")]
    ChoiceCount { expected: usize, got: usize },
    #[error("sign choices must be +1 or -1")]
    BadSign,
    #[error("{0} free pairs exceed the enumeration limit of 20")]
    TooManyFreePairs(usize),
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Each condition of the definition, evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub involutive: bool,
    pub nontrivial: bool,
    pub automorphism: bool,
    pub integrable: bool,
    pub plus: Subspace,
    pub minus: Subspace,
    pub plus_closed: bool,
    pub minus_closed: bool,
}

impl StructureReport {
    /// Involutive, not `±id`, and integrable.
    pub fn valid(&self) -> bool {
        self.involutive && self.nontrivial && self.integrable
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.plus.dim(), self.minus.dim())
    }

    /// Equal eigenspace dimensions.
    pub fn balanced(&self) -> bool {
        self.plus.dim() == self.minus.dim()
    }
}

/// A validated product structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductStructure {
    pub map: QMatrix,
    pub plus: Subspace,
    pub minus: Subspace,
}

impl ProductStructure {
    pub fn dims(&self) -> (usize, usize) {
        (self.plus.dim(), self.minus.dim())
    }
}

fn eigenspace(e: &QMatrix, lambda: i64) -> Subspace {
    let n = e.rows();
    let shifted = {
        let mut m = e.clone();
        for i in 0..n {
            let v = m.get(i, i) - q(lambda);
            m.set(i, i, v);
        }
        m
    };
    Subspace::span(n, shifted.kernel())
}

fn closed(g: &LieAlgebra, s: &Subspace) -> bool {
    s.contains_subspace(&g.bracket_subspaces(s, s))
}

pub fn check_product_structure(g: &LieAlgebra, e: &QMatrix) -> Result<StructureReport, StructureError> {
    let n = g.dim();
    if e.rows() != n || e.cols() != n {
        return Err(StructureError::Shape {
            rows: e.rows(),
            cols: e.cols(),
            dim: n,
        });
    }
    let involutive = e.mul(e).is_identity();
    let nontrivial = !e.is_identity() && !e.scaled(&q(-1)).is_identity();
    let automorphism = g.is_homomorphism(g, e);
    let images: Vec<Vec<Rational>> = (0..n).map(|a| e.column(a)).collect();
    let mut integrable = true;
    'pairs: for a in 0..n {
        for b in a + 1..n {
            let lhs = e.mul_vec(&g.basis_bracket(a, b));
            let ua = unit_vec(n, a);
            let ub = unit_vec(n, b);
            let t1 = g.bracket_unchecked(&images[a], &ub);
            let t2 = g.bracket_unchecked(&ua, &images[b]);
            let t3 = e.mul_vec(&g.bracket_unchecked(&images[a], &images[b]));
            let rhs: Vec<Rational> = (0..n).map(|k| &t1[k] + &t2[k] - &t3[k]).collect();
            if lhs != rhs {
                integrable = false;
                break 'pairs;
            }
        }
    }
    let plus = eigenspace(e, 1);
    let minus = eigenspace(e, -1);
    Ok(StructureReport {
        involutive,
        nontrivial,
        automorphism,
        integrable,
        plus_closed: closed(g, &plus),
        minus_closed: closed(g, &minus),
        plus,
        minus,
    })
}

/// The validated structure, if every condition but the automorphism one holds.
pub fn product_structure(g: &LieAlgebra, e: &QMatrix) -> Result<Option<ProductStructure>, StructureError> {
    let r = check_product_structure(g, e)?;
    Ok(r.valid().then(|| ProductStructure {
        map: e.clone(),
        plus: r.plus,
        minus: r.minus,
    }))
}

/// `(g_+, g_-)` and whether each is a subalgebra.
pub fn eigensplit(g: &LieAlgebra, ps: &ProductStructure) -> (Subspace, Subspace, bool, bool) {
    (ps.plus.clone(), ps.minus.clone(), closed(g, &ps.plus), closed(g, &ps.minus))
}

pub fn is_paracomplex(ps: &ProductStructure) -> bool {
    ps.plus.dim() == ps.minus.dim()
}

/// Signs `ε_j = ±1` of a structure diagonal in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSigns(pub Vec<i8>);

impl DiagonalSigns {
    pub fn new(signs: Vec<i8>) -> Result<Self, StructureError> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(StructureError::BadSign);
        }
        Ok(DiagonalSigns(signs))
    }

    pub fn from_matrix(e: &QMatrix) -> Result<Self, StructureError> {
        if !e.is_square() || !e.is_diagonal() {
            return Err(StructureError::NotDiagonal);
        }
        let mut signs = Vec::with_capacity(e.rows());
        for i in 0..e.rows() {
            let d = e.get(i, i);
            if d.is_one() {
                signs.push(1);
            } else if *d == q(-1) {
                signs.push(-1);
            } else {
                return Err(StructureError::NotDiagonal);
            }
        }
        Ok(DiagonalSigns(signs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn matrix(&self) -> QMatrix {
        QMatrix::diagonal(&self.0.iter().map(|&s| q(s.into())).collect::<Vec<_>>())
    }
}

/// One sign choice on a generator product and its verdicts.
#[derive(Clone, Debug)]
pub struct Extension {
    /// `λ` for each free pair, in cocycle order.
    pub choice: Vec<i8>,
    pub map: QMatrix,
    pub report: StructureReport,
}

impl Extension {
    pub fn dims(&self) -> (usize, usize) {
        self.report.dims()
    }

    pub fn is_paracomplex(&self) -> bool {
        self.report.balanced()
    }

    pub fn structure(&self) -> Option<ProductStructure> {
        self.report.valid().then(|| ProductStructure {
            map: self.map.clone(),
            plus: self.report.plus.clone(),
            minus: self.report.minus.clone(),
        })
    }
}

fn check_signs(gp: &GeneratorProduct, e1: &DiagonalSigns, e2: &DiagonalSigns) -> Result<(), StructureError> {
    for (e, embed) in [(e1, &gp.embed1), (e2, &gp.embed2)] {
        if e.len() != embed.len() {
            return Err(StructureError::Shape {
                rows: e.len(),
                cols: e.len(),
                dim: embed.len(),
            });
        }
    }
    Ok(())
}

/// Pairs `(i, k)` with `ε_i != ε_k`, whose sign `λ_ik` is free.
pub fn free_pairs(gp: &GeneratorProduct, e1: &DiagonalSigns, e2: &DiagonalSigns) -> Vec<CocyclePair> {
    gp.cocycle_support
        .iter()
        .copied()
        .filter(|p| e1.0[p.left] != e2.0[p.right])
        .collect()
}

/// `E = E1` on the first factor, `E2` on the second, `E(Z_ik) = ε_i Z_ik`
/// when `ε_i = ε_k`, and `E(Z_ik) = λ_ik Z_ik` with `λ` from `choice`
/// otherwise.
pub fn extend_to_product(
    gp: &GeneratorProduct,
    e1: &DiagonalSigns,
    e2: &DiagonalSigns,
    choice: &[i8],
) -> Result<Extension, StructureError> {
    check_signs(gp, e1, e2)?;
    let free = free_pairs(gp, e1, e2);
    if choice.len() != free.len() {
        return Err(StructureError::ChoiceCount {
            expected: free.len(),
            got: choice.len(),
        });
    }
    if choice.iter().any(|&s| s != 1 && s != -1) {
        return Err(StructureError::BadSign);
    }
    let n = gp.dim();
    let mut diag = vec![q(1); n];
    for (a, &i) in gp.embed1.iter().enumerate() {
        diag[i] = q(e1.0[a].into());
    }
    for (b, &i) in gp.embed2.iter().enumerate() {
        diag[i] = q(e2.0[b].into());
    }
    let mut next_free = choice.iter();
    for p in &gp.cocycle_support {
        let (ei, ek) = (e1.0[p.left], e2.0[p.right]);
        let lambda = if ei == ek { ei } else { *next_free.next().expect("counted") };
        diag[p.central] = q(lambda.into());
    }
    let map = QMatrix::diagonal(&diag);
    let report = check_product_structure(&gp.algebra, &map)?;
    Ok(Extension {
        choice: choice.to_vec(),
        map,
        report,
    })
}

pub const MAX_FREE_PAIRS: usize = 20;

/// Every sign choice, `+1` before `-1`, first free pair most significant.
pub fn enumerate_extensions(gp: &GeneratorProduct, e1: &DiagonalSigns, e2: &DiagonalSigns) -> Result<Vec<Extension>, StructureError> {
    check_signs(gp, e1, e2)?;
    let k = free_pairs(gp, e1, e2).len();
    if k > MAX_FREE_PAIRS {
        return Err(StructureError::TooManyFreePairs(k));
    }
    (0..1u32 << k)
        .map(|bits| {
            let choice: Vec<i8> = (0..k).map(|i| if bits >> (k - 1 - i) & 1 == 0 { 1 } else { -1 }).collect();
            extend_to_product(gp, e1, e2, &choice)
        })
        .collect()
}

/// `r4 ⊗ r4_0` as written on `X0..X9`: only the pairs `(X0, X4)` and
/// `(X0, X7)` are adjoined, as `X8` and `X9`.
pub fn example_10d_product() -> GeneratorProduct {
    GeneratorProduct {
        algebra: crate::catalog::paper_example_10d(),
        embed1: (0..4).collect(),
        embed2: (4..8).collect(),
        centrals: vec![8, 9],
        cocycle_support: vec![
            CocyclePair { left: 0, right: 0, central: 8 },
            CocyclePair { left: 0, right: 3, central: 9 },
        ],
        generators1: vec![0],
        generators2: vec![0, 3],
        warnings: vec!["literal 10-dimensional algebra; the full product of these factors has dimension 11".into()],
    }
}

/// `E1 = diag(1,1,-1,-1)` on `r4` and `E2 = diag(1,1,-1,-1)` on `r4_0`.
pub fn example_10d_signs() -> (DiagonalSigns, DiagonalSigns) {
    (DiagonalSigns(vec![1, 1, -1, -1]), DiagonalSigns(vec![1, 1, -1, -1]))
}

/// `E = +id` on `g_plus`, `-id` on `g_minus`, and the first `2m^2` of the
/// `4m^2` adjoined elements sent to themselves, the rest negated.
pub fn corollary2_construct(g_plus: &LieAlgebra, g_minus: &LieAlgebra, m: usize) -> Result<(GeneratorProduct, Extension), StructureError> {
    if m == 0 {
        return Err(StructureError::Precondition("m must be positive".into()));
    }
    for (name, g) in [("g_plus", g_plus), ("g_minus", g_minus)] {
        if g.betti1() != 2 * m {
            return Err(StructureError::Precondition(format!("b1({name}) = {} but 2m = {}", g.betti1(), 2 * m)));
        }
    }
    if g_plus.dim() != g_minus.dim() {
        return Err(StructureError::Precondition(format!(
            "dimensions differ ({} vs {})",
            g_plus.dim(),
            g_minus.dim()
        )));
    }
    let gp = generator_product(g_plus, g_minus)?;
    let e1 = DiagonalSigns(vec![1; g_plus.dim()]);
    let e2 = DiagonalSigns(vec![-1; g_minus.dim()]);
    let free = free_pairs(&gp, &e1, &e2).len();
    let choice: Vec<i8> = (0..free).map(|i| if i < 2 * m * m { 1 } else { -1 }).collect();
    let ext = extend_to_product(&gp, &e1, &e2, &choice)?;
    Ok((gp, ext))
}

/// Whether `E(Z_ik) = ε_i Z_ik` for every pair with `ε_i = ε_k`.
pub fn forced_signs_respected(gp: &GeneratorProduct, e1: &DiagonalSigns, e2: &DiagonalSigns, map: &QMatrix) -> bool {
    gp.cocycle_support.iter().all(|p| {
        let (ei, ek) = (e1.0[p.left], e2.0[p.right]);
        ei != ek || {
            let col = map.column(p.central);
            col.iter()
                .enumerate()
                .all(|(r, c)| if r == p.central { *c == q(ei.into()) } else { c.is_zero() })
        }
    })
}
