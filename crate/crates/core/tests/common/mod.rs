//! Independent oracles for the integration suites. They read structure
//! constants only through `structure_constant` and redo all linear algebra
//! with a plain dense elimination.

#![allow(dead_code)]

use liegen::{LieAlgebra, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense `C[i][j][k]` for all `i, j`.
pub fn tensor(g: &LieAlgebra) -> Vec<Vec<Vec<Rational>>> {
    let n = g.dim();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| g.structure_constant(i, j, k)).collect()).collect())
        .collect()
}

/// Row echelon basis of the span of `rows`.
pub fn echelon(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for col in 0..width {
        let Some(p) = rows.iter().position(|r| !r[col].is_zero()) else { continue };
        let pivot = rows.swap_remove(p);
        let inv = Rational::one() / &pivot[col];
        let pivot: Vec<Rational> = pivot.iter().map(|x| x * &inv).collect();
        for r in rows.iter_mut() {
            if !r[col].is_zero() {
                let f = r[col].clone();
                for (a, b) in r.iter_mut().zip(&pivot) {
                    *a -= &f * b;
                }
            }
        }
        out.push(pivot);
    }
    out
}

pub fn rank(rows: Vec<Vec<Rational>>) -> usize {
    echelon(rows).len()
}

fn bracket(c: &[Vec<Vec<Rational>>], u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let n = u.len();
    let mut w = vec![Rational::zero(); n];
    for i in 0..n {
        if u[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if v[j].is_zero() {
                continue;
            }
            let s = &u[i] * &v[j];
            for k in 0..n {
                if !c[i][j][k].is_zero() {
                    w[k] += &s * &c[i][j][k];
                }
            }
        }
    }
    w
}

fn bracket_span(c: &[Vec<Vec<Rational>>], a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for u in a {
        for v in b {
            let w = bracket(c, u, v);
            if w.iter().any(|x| !x.is_zero()) {
                rows.push(w);
            }
        }
    }
    echelon(rows)
}

fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect()
}

/// Dimensions of the derived series, down to the first repeat or zero.
pub fn derived_dims(g: &LieAlgebra) -> Vec<usize> {
    let c = tensor(g);
    let mut cur = identity(g.dim());
    let mut dims = vec![cur.len()];
    loop {
        let next = bracket_span(&c, &cur, &cur);
        if next.len() == cur.len() {
            return dims;
        }
        dims.push(next.len());
        if next.is_empty() {
            return dims;
        }
        cur = next;
    }
}

pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    let c = tensor(g);
    let all = identity(g.dim());
    let mut cur = all.clone();
    loop {
        let next = bracket_span(&c, &all, &cur);
        if next.is_empty() {
            return true;
        }
        if next.len() == cur.len() {
            return false;
        }
        cur = next;
    }
}

/// `dim Z(g) = n - rank` of the system `sum_i x_i C_ij^k = 0`.
pub fn center_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let c = tensor(g);
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let row: Vec<Rational> = (0..n).map(|i| c[i][j][k].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    n - rank(rows)
}

pub fn betti1(g: &LieAlgebra) -> usize {
    let d = derived_dims(g);
    g.dim() - d.get(1).copied().unwrap_or(d[0])
}

/// Jacobi identity on basis triples, straight from the tensor.
pub fn jacobi_holds(g: &LieAlgebra) -> bool {
    let n = g.dim();
    let c = tensor(g);
    for i in 0..n {
        for j in 0..n {
            if c[i][j] != c[j][i].iter().map(|x| -x).collect::<Vec<_>>() {
                return false;
            }
            for k in 0..n {
                for m in 0..n {
                    let mut s = Rational::zero();
                    for l in 0..n {
                        s += &c[i][j][l] * &c[l][k][m] + &c[j][k][l] * &c[l][i][m] + &c[k][i][l] * &c[l][j][m];
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Tiny deterministic generator for evaluation points.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn small(&mut self) -> i64 {
        (self.next() % 2001) as i64 - 1000
    }
}

/// Generic rank of `A(g)_{ij} = sum_k C_ij^k x_k`: maximum of the rank at a
/// few random integer points.
pub fn coadjoint_rank(g: &LieAlgebra, seed: u64) -> usize {
    let n = g.dim();
    let c = tensor(g);
    let mut rng = SplitMix(seed);
    (0..6)
        .map(|_| {
            let x: Vec<Rational> = (0..n).map(|_| q(rng.small())).collect();
            let rows: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &c[i][j][k] * &x[k]))
                        .collect()
                })
                .collect();
            rank(rows)
        })
        .max()
        .unwrap_or(0)
}

/// Whether `m` (columns are images) preserves brackets from `g` to `h`.
pub fn is_homomorphism(g: &LieAlgebra, h: &LieAlgebra, m: &[Vec<Rational>]) -> bool {
    let (cg, ch) = (tensor(g), tensor(h));
    let image = |v: &[Rational]| -> Vec<Rational> {
        (0..h.dim())
            .map(|r| (0..g.dim()).fold(Rational::zero(), |acc, col| acc + &m[r][col] * &v[col]))
            .collect()
    };
    let unit = |i: usize| -> Vec<Rational> { (0..g.dim()).map(|k| if k == i { q(1) } else { q(0) }).collect() };
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let lhs = image(&bracket(&cg, &unit(i), &unit(j)));
            let rhs = bracket(&ch, &image(&unit(i)), &image(&unit(j)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Closure of the span of `basis` under brackets.
pub fn is_subalgebra(g: &LieAlgebra, basis: &[Vec<Rational>]) -> bool {
    let c = tensor(g);
    let base = echelon(basis.to_vec());
    for u in basis {
        for v in basis {
            let w = bracket(&c, u, v);
            let mut rows = base.clone();
            rows.push(w);
            if rank(rows) != base.len() {
                return false;
            }
        }
    }
    true
}
