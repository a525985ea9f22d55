//! Seeded random solvable algebras, built as iterated one-dimensional
//! extensions: either a semidirect product with a random derivation or a
//! central extension by a random 2-cocycle.

use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::lcg::Lcg64;
use crate::linalg::{kernel, q, zero_vec, QMatrix, Rational};

/// Basis of the derivation space; each vector is a matrix `D` flattened as
/// `D[l][i]` at `l * n + i`, column `i` being `D X_i`.
pub fn derivations(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = zero_vec(n * n);
                for l in 0..n {
                    // D[X_i, X_j] - [D X_i, X_j] - [X_i, D X_j]
                    row[k * n + l] += g.structure_constant(i, j, l);
                    row[l * n + i] -= g.structure_constant(l, j, k);
                    row[l * n + j] -= g.structure_constant(i, l, k);
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    kernel(&rows, n * n)
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    // position of (a, b), a < b, in row-major order of pairs
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Basis of the space of 2-cocycles `ω` with trivial coefficients,
/// flattened over pairs `a < b`.
pub fn cocycles(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let np = n * (n.saturating_sub(1)) / 2;
    let add = |row: &mut Vec<Rational>, u: &[Rational], z: usize, sign: i64| {
        // sign * ω(u, X_z)
        for (l, c) in u.iter().enumerate() {
            if c.is_zero() || l == z {
                continue;
            }
            let (idx, s) = if l < z { (pair_index(n, l, z), sign) } else { (pair_index(n, z, l), -sign) };
            row[idx] += c * q(s);
        }
    };
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = zero_vec(np);
                add(&mut row, &g.basis_bracket(i, j), k, 1);
                add(&mut row, &g.basis_bracket(j, k), i, 1);
                add(&mut row, &g.basis_bracket(k, i), j, 1);
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    kernel(&rows, np)
}

fn random_combination(rng: &mut Lcg64, basis: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut v = zero_vec(len);
    for b in basis {
        let c = q(rng.range_i64(-2, 2));
        if !c.is_zero() {
            crate::linalg::add_scaled(&mut v, &c, b);
        }
    }
    v
}

fn semidirect(g: &LieAlgebra, d: &[Rational]) -> LieAlgebra {
    let n = g.dim();
    let mut h = LieAlgebra::abelian(n + 1);
    for (&(i, j), v) in g.constants() {
        let mut w = v.clone();
        w.push(Rational::zero());
        h.set_bracket(i, j, w).expect("valid");
    }
    for i in 0..n {
        let mut w: Vec<Rational> = (0..n).map(|l| d[l * n + i].clone()).collect();
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        w.push(Rational::zero());
        // [T, X_i] = D X_i with T the new last element
        h.set_bracket(n, i, w).expect("valid");
    }
    h
}

fn central(g: &LieAlgebra, omega: &[Rational]) -> LieAlgebra {
    let n = g.dim();
    let mut h = LieAlgebra::abelian(n + 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut w = g.basis_bracket(i, j);
            w.push(omega[pair_index(n, i, j)].clone());
            if w.iter().any(|c| !c.is_zero()) {
                h.set_bracket(i, j, w).expect("valid");
            }
        }
    }
    h
}

/// A solvable algebra of the given dimension on `X1..Xn`, reproducible
/// from the seed.
pub fn random_solvable(seed: u64, dim: usize) -> LieAlgebra {
    assert!(dim >= 1, "dimension must be positive");
    let mut rng = Lcg64::new(seed);
    let mut g = LieAlgebra::abelian(1);
    while g.dim() < dim {
        let use_cocycle = g.dim() >= 2 && rng.chance(1, 2);
        g = if use_cocycle {
            let basis = cocycles(&g);
            let n = g.dim();
            central(&g, &random_combination(&mut rng, &basis, n * (n - 1) / 2))
        } else {
            let basis = derivations(&g);
            semidirect(&g, &random_combination(&mut rng, &basis, g.dim() * g.dim()))
        };
    }
    debug_assert!(g.check_jacobi().holds());
    g
}

/// A random integer matrix of determinant ±1: a shuffled identity
/// multiplied by elementary row operations with small multipliers.
pub fn random_unimodular(seed: u64, n: usize) -> QMatrix {
    let mut rng = Lcg64::new(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.below(i + 1));
    }
    let mut m = QMatrix::zeros(n, n);
    for (i, &p) in perm.iter().enumerate() {
        m.set(i, p, q(1));
    }
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let r = rng.below(n);
        let mut s = rng.below(n - 1);
        if s >= r {
            s += 1;
        }
        let c = q(rng.range_i64(-2, 2));
        for col in 0..n {
            let v = m.get(r, col) + &c * m.get(s, col);
            m.set(r, col, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn random_algebras_are_valid_and_solvable() {
        for seed in 0..60 {
            let n = 1 + (seed as usize % 7);
            let g = random_solvable(seed, n);
            assert_eq!(g.dim(), n);
            assert!(g.check_jacobi().holds(), "seed {seed}");
            assert!(g.is_solvable(), "seed {seed}");
        }
        assert_eq!(random_solvable(9, 6), random_solvable(9, 6));
    }

    #[test]
    fn derivation_spaces() {
        // Der(L2) = gl(2); Der(h1) has dimension 6
        assert_eq!(derivations(&catalog::abelian(2)).len(), 4);
        assert_eq!(derivations(&catalog::heisenberg_h1()).len(), 6);
        // ad(X) is always a derivation
        let g = catalog::remark_5d();
        let der = crate::linalg::Subspace::span(25, derivations(&g));
        for i in 0..5 {
            let ad = g.ad(i);
            let flat: Vec<Rational> = (0..5).flat_map(|l| ad.row(l).to_vec()).collect();
            assert!(der.contains(&flat));
        }
    }

    #[test]
    fn cocycle_spaces() {
        // Z^2(L2) is everything; Z^2(r2) = B^2(r2) is spanned by dw2
        assert_eq!(cocycles(&catalog::abelian(3)).len(), 3);
        assert_eq!(cocycles(&catalog::r2_aff()).len(), 1);
        // Z^2(h1) = all of Λ^2 (every 2-form on a 3-dim nilpotent algebra is closed)
        assert_eq!(cocycles(&catalog::heisenberg_h1()).len(), 3);
    }

    #[test]
    fn unimodular_matrices() {
        for seed in 0..20 {
            let m = random_unimodular(seed, 5);
            let d = m.determinant();
            assert!(d == q(1) || d == q(-1));
        }
    }
}
