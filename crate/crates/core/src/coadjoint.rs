//! Counting invariants of the coadjoint representation.
//!
//! Two routes: `N(g) = dim g - rank A(g)` for the skew matrix
//! `A(g)_ij = sum_k C_ij^k x_k`, and `N(g) = dim g - 2 j0(g)` where `j0(g)`
//! is the largest `j` with `θ^j != 0` for the generic element
//! `θ = sum a_i dw_i`.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::exterior::{combine_differentials, generic_differential, maurer_cartan, Form};
use crate::genproduct::{generator_product, GeneratorProduct, ProductError};
use crate::lcg::Lcg64;
use crate::linalg::{q, unit_vec, QMatrix, Rational};
use crate::poly::{PolyMatrix, Polynomial, Vars};

/// `A(g)` over the coordinates `x1..xn`.
pub fn coadjoint_matrix(g: &LieAlgebra) -> PolyMatrix {
    let n = g.dim();
    let vars = Vars::indexed("x", n);
    let mut m = PolyMatrix::zeros(n, n, &vars);
    for (&(i, j), v) in g.constants() {
        let mut p = Polynomial::zero(&vars);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &Polynomial::var(&vars, k).scale(c);
            }
        }
        m.set(j, i, -&p).expect("shared variables");
        m.set(i, j, p).expect("shared variables");
    }
    m
}

pub fn coadjoint_rank(g: &LieAlgebra) -> usize {
    coadjoint_matrix(g).symbolic_rank()
}

pub fn invariant_count_rank(g: &LieAlgebra) -> usize {
    g.dim() - coadjoint_rank(g)
}

/// The wedge-power order of the generic element together with its last
/// nonvanishing power.
pub fn generic_order(g: &LieAlgebra) -> (usize, Form) {
    let theta = generic_differential(g);
    let mut power = Form::unit(g.dim(), theta.vars());
    let mut j = 0;
    loop {
        let next = power.wedge(&theta).expect("same ambient space");
        if next.is_zero() {
            return (j, power);
        }
        power = next;
        j += 1;
    }
}

/// `j0(g)` with a certificate and a rational witness.
#[derive(Clone, Debug)]
pub struct GenericJ0 {
    pub j0: usize,
    /// Indices of the colexicographically first monomial of `θ^{j0}` with a
    /// nonzero coefficient.
    pub certificate_monomial: Vec<usize>,
    /// That coefficient, a polynomial in `a1..an`.
    pub certificate: Polynomial,
    /// Coefficients `c` of the witness `sum c_i dw_i`.
    pub witness_coeffs: Vec<Rational>,
    pub witness: Form,
}

/// Rank of the 2-form `sum c_k dw_k`, via its skew matrix.
fn combination_rank(mats: &[QMatrix], coeffs: &[(usize, Rational)], n: usize) -> usize {
    let mut m = QMatrix::zeros(n, n);
    for (k, c) in coeffs {
        for r in 0..n {
            for s in 0..n {
                let e = mats[*k].get(r, s);
                if !e.is_zero() {
                    let v = m.get(r, s) + e * c;
                    m.set(r, s, v);
                }
            }
        }
    }
    m.rank()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

const WITNESS_VALUES: [i64; 4] = [1, -1, 2, -2];
const WITNESS_BUDGET: usize = 50_000;
const SCREEN_SEED: u64 = 0x5eed_0f_c0ad;

/// First rational combination of the nonzero differentials whose rank is
/// `2 * j0`: smaller supports first, supports in lexicographic order, values
/// drawn from `1, -1, 2, -2` in that order. Verified by wedge powers.
pub fn find_witness(g: &LieAlgebra, j0: usize) -> (Vec<Rational>, Form) {
    let n = g.dim();
    let mc = maurer_cartan(g);
    let zero = vec![Rational::zero(); n];
    if j0 == 0 {
        return (zero.clone(), combine_differentials(&mc, &zero));
    }
    let target = 2 * j0;
    let mats: Vec<QMatrix> = mc
        .iter()
        .map(|f| f.to_matrix().expect("2-form").expect("constant coefficients"))
        .collect();
    let active: Vec<usize> = (0..n).filter(|&k| !mc[k].is_zero()).collect();
    let verify = |coeffs: &[Rational]| {
        let w = combine_differentials(&mc, coeffs);
        let ok = !w.wedge_power(j0).expect("2-form").is_zero() && w.wedge_power(j0 + 1).expect("2-form").is_zero();
        ok.then_some(w)
    };
    let mut screen = Lcg64::new(SCREEN_SEED);
    let mut spent = 0usize;
    for size in 1..=active.len() {
        for support in combinations(active.len(), size) {
            let ks: Vec<usize> = support.iter().map(|&s| active[s]).collect();
            spent += 1;
            let probe: Vec<(usize, Rational)> = ks.iter().map(|&k| (k, q(screen.range_i64(-1000, 1000)))).collect();
            if combination_rank(&mats, &probe, n) < target {
                continue;
            }
            let mut digits = vec![0usize; size];
            loop {
                spent += 1;
                if spent > WITNESS_BUDGET {
                    return random_witness(&mats, &active, j0, n, &verify);
                }
                let coeffs: Vec<(usize, Rational)> = ks.iter().zip(&digits).map(|(&k, &d)| (k, q(WITNESS_VALUES[d]))).collect();
                if combination_rank(&mats, &coeffs, n) == target {
                    let mut full = zero.clone();
                    for (k, c) in &coeffs {
                        full[*k] = c.clone();
                    }
                    if let Some(w) = verify(&full) {
                        return (full, w);
                    }
                }
                // next value tuple, last position fastest
                let mut exhausted = true;
                for pos in (0..size).rev() {
                    digits[pos] += 1;
                    if digits[pos] < WITNESS_VALUES.len() {
                        exhausted = false;
                        break;
                    }
                    digits[pos] = 0;
                }
                if exhausted {
                    break;
                }
            }
        }
    }
    random_witness(&mats, &active, j0, n, &verify)
}

fn random_witness(
    mats: &[QMatrix],
    active: &[usize],
    j0: usize,
    n: usize,
    verify: &dyn Fn(&[Rational]) -> Option<Form>,
) -> (Vec<Rational>, Form) {
    let mut rng = Lcg64::new(SCREEN_SEED ^ 0xffff);
    let mut range = 3;
    loop {
        for _ in 0..64 {
            let coeffs: Vec<(usize, Rational)> = active.iter().map(|&k| (k, q(rng.range_i64(-range, range)))).collect();
            if combination_rank(mats, &coeffs, n) == 2 * j0 {
                let mut full = vec![Rational::zero(); n];
                for (k, c) in &coeffs {
                    full[*k] = c.clone();
                }
                if let Some(w) = verify(&full) {
                    return (full, w);
                }
            }
        }
        range *= 4;
    }
}

pub fn generic_j0(g: &LieAlgebra) -> GenericJ0 {
    let (j0, power) = generic_order(g);
    let (certificate_monomial, certificate) = power
        .first_term()
        .map(|(idx, p)| (idx, p.clone()))
        .unwrap_or_else(|| (Vec::new(), Polynomial::one(power.vars())));
    let (witness_coeffs, witness) = find_witness(g, j0);
    GenericJ0 {
        j0,
        certificate_monomial,
        certificate,
        witness_coeffs,
        witness,
    }
}

pub fn invariant_count_wedge(g: &LieAlgebra) -> usize {
    g.dim() - 2 * generic_order(g).0
}

/// Both counting routes side by side.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub dim: usize,
    pub rank: usize,
    pub n_rank: usize,
    pub j0: usize,
    pub n_wedge: usize,
    pub witness_coeffs: Vec<Rational>,
    pub witness_form: Form,
    pub certificate_monomial: Vec<usize>,
    pub generic_certificate: Polynomial,
}

impl InvariantReport {
    pub fn consistent(&self) -> bool {
        self.n_rank == self.n_wedge && self.rank == 2 * self.j0
    }
}

pub fn invariant_report(g: &LieAlgebra) -> InvariantReport {
    let rank = coadjoint_rank(g);
    let gj = generic_j0(g);
    InvariantReport {
        dim: g.dim(),
        rank,
        n_rank: g.dim() - rank,
        j0: gj.j0,
        n_wedge: g.dim() - 2 * gj.j0,
        witness_coeffs: gj.witness_coeffs,
        witness_form: gj.witness,
        certificate_monomial: gj.certificate_monomial,
        generic_certificate: gj.certificate,
    }
}

/// Both sides of the product formula for `j0` and the two-sided bound on
/// `N(g1 ⊗ g2)`.
#[derive(Clone, Debug)]
pub struct ProductJ0Report {
    pub product: GeneratorProduct,
    /// `j0(g1 ⊗ g2)` computed directly.
    pub lhs: usize,
    /// `j0(g1) + j0(g2) + j0(ω)`.
    pub rhs: usize,
    pub j0_1: usize,
    pub j0_2: usize,
    pub j0_omega: usize,
    /// Generators of `g1` (factor indices) annihilating the witness of `g1`.
    pub f: Vec<usize>,
    pub f_prime: Vec<usize>,
    /// `sum_{α ∈ F, β ∈ F'} w_α ^ w'_β` on the product.
    pub omega: Form,
    pub n1: usize,
    pub n2: usize,
    pub n_product: usize,
    pub m1m2: usize,
}

impl ProductJ0Report {
    pub fn sandwich_lower(&self) -> bool {
        self.m1m2 <= self.n_product
    }

    /// `N <= N1 + N2 + (m1 m2 - 2 j0(ω))`.
    pub fn sandwich_upper(&self) -> bool {
        self.n_product + 2 * self.j0_omega <= self.n1 + self.n2 + self.m1m2
    }

    pub fn difference(&self) -> i64 {
        self.lhs as i64 - self.rhs as i64
    }
}

fn annihilating_generators(g: &LieAlgebra, witness: &Form) -> Vec<usize> {
    g.minimal_generators()
        .into_iter()
        .filter(|&a| {
            witness.is_zero() || witness.interior(&unit_vec(g.dim(), a)).expect("matching length").is_zero()
        })
        .collect()
}

pub fn product_j0_formula(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<ProductJ0Report, ProductError> {
    if !g1.is_solvable() || !g2.is_solvable() {
        return Err(ProductError::NotSolvable);
    }
    let product = generator_product(g1, g2)?;
    let n = product.dim();
    let w1 = generic_j0(g1);
    let w2 = generic_j0(g2);
    let f = annihilating_generators(g1, &w1.witness);
    let f_prime = annihilating_generators(g2, &w2.witness);
    let consts = Vars::constants();
    let sum_of = |idx: &[usize], embed: &[usize]| {
        idx.iter().fold(Form::zero(1, n, &consts), |acc, &a| acc.add(&Form::basis(n, embed[a])).expect("1-forms"))
    };
    let omega = sum_of(&f, &product.embed1)
        .wedge(&sum_of(&f_prime, &product.embed2))
        .expect("same space");
    let j0_omega = omega.j0().expect("2-form");
    let lhs = generic_order(&product.algebra).0;
    Ok(ProductJ0Report {
        lhs,
        rhs: w1.j0 + w2.j0 + j0_omega,
        j0_1: w1.j0,
        j0_2: w2.j0,
        j0_omega,
        f,
        f_prime,
        omega,
        n1: g1.dim() - 2 * w1.j0,
        n2: g2.dim() - 2 * w2.j0,
        n_product: n - 2 * lhs,
        m1m2: product.m1() * product.m2(),
        product,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corollary1 {
    /// One of the factors has invariants.
    NotApplicable { n1: usize, n2: usize },
    Holds { n: usize, m1m2: usize },
    Fails { n: usize, m1m2: usize },
}

/// If `N(g1) = N(g2) = 0` then `N(g1 ⊗ g2) = m1 m2`.
pub fn corollary1_check(g1: &LieAlgebra, g2: &LieAlgebra) -> Result<Corollary1, ProductError> {
    let (n1, n2) = (invariant_count_rank(g1), invariant_count_rank(g2));
    if n1 != 0 || n2 != 0 {
        return Ok(Corollary1::NotApplicable { n1, n2 });
    }
    let gp = generator_product(g1, g2)?;
    let n = invariant_count_rank(&gp.algebra);
    let m1m2 = gp.m1() * gp.m2();
    Ok(if n == m1m2 {
        Corollary1::Holds { n, m1m2 }
    } else {
        Corollary1::Fails { n, m1m2 }
    })
}
