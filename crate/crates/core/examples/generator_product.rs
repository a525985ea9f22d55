//! Builds r2 x r2 and L1 x L1, prints their brackets, and checks the
//! dimension identities.

use liegen::catalog;
use liegen::genproduct::{generator_product, solvability_index_product, theorem1_for};
use liegen::io::emit_algebra;

fn main() {
    let r2 = catalog::r2_aff();
    let gp = generator_product(&r2, &r2).expect("solvable factors");
    print!("{}", emit_algebra(&gp.algebra));
    for c in theorem1_for(&r2, &r2, &gp).stated() {
        println!("  {c}");
    }

    let l1 = catalog::abelian(1);
    let h = generator_product(&l1, &l1).expect("solvable factors");
    println!("L1 x L1 has the brackets of h1: {}", h.algebra.same_structure(&catalog::heisenberg_h1()));
    let r = theorem1_for(&l1, &l1, &h);
    println!("  {}\n  {}", r.center, r.center_exact);
    let idx = solvability_index_product(&l1, &l1).expect("solvable");
    println!("  solvability index {} against max of factors {}", idx.observed, idx.claimed);
}
