//! Symbolic rank of the coadjoint matrix against random evaluation.

use liegen::coadjoint::coadjoint_matrix;
use liegen::random::random_solvable;

fn main() {
    for seed in 0..8 {
        let g = random_solvable(seed, 6);
        let a = coadjoint_matrix(&g);
        println!(
            "seed {seed}: symbolic rank {} random-point rank {} ({} nonzero entries)",
            a.symbolic_rank(),
            a.certified_random_rank(20, seed),
            (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).filter(|&(i, j)| !a.get(i, j).is_zero()).count()
        );
    }
}
