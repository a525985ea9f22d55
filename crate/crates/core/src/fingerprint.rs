//! Basis-independent comparison record. Equal fingerprints are necessary,
//! not sufficient, for isomorphism.

use crate::algebra::{LieAlgebra, SeriesReport};
use crate::coadjoint::{generic_order, invariant_count_rank};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub series: SeriesReport,
    pub n_invariants: usize,
    pub j0: usize,
}

pub fn fingerprint(g: &LieAlgebra) -> Fingerprint {
    Fingerprint {
        dim: g.dim(),
        series: g.series_report(),
        n_invariants: invariant_count_rank(g),
        j0: generic_order(g).0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::genproduct::generator_product;
    use crate::random::{random_solvable, random_unimodular};

    #[test]
    fn l1_square_matches_heisenberg() {
        let p = generator_product(&abelian(1), &abelian(1)).unwrap();
        assert_eq!(fingerprint(&p.algebra), fingerprint(&heisenberg_h1()));
    }

    #[test]
    fn r2_and_l2_differ() {
        let (a, b) = (fingerprint(&r2_aff()), fingerprint(&abelian(2)));
        assert_ne!(a.series.derived_dims, b.series.derived_dims);
    }

    #[test]
    fn invariant_under_basis_change() {
        for seed in 0..40u64 {
            let n = 2 + (seed as usize % 5);
            let g = random_solvable(seed, n);
            let p = random_unimodular(seed.wrapping_mul(31) + 7, n);
            let h = g.change_basis(&p).unwrap();
            assert!(h.check_jacobi().holds());
            assert_eq!(fingerprint(&g), fingerprint(&h), "seed {seed}");
        }
        let g = remark_5d();
        assert_eq!(fingerprint(&g), fingerprint(&g.permute(&[4, 2, 0, 1, 3]).unwrap()));
    }
}
