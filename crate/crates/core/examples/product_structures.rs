//! Product structures: single checks, the 10-dimensional extension example,
//! and a paracomplex structure on L2 x L2.

use liegen::catalog;
use liegen::prodstruct::{check_product_structure, corollary2_construct, enumerate_extensions, example_10d_product, example_10d_signs};

fn main() {
    let (e1, e2) = example_10d_signs();
    for (name, g, e) in [("r4", catalog::r4_paper(), &e1), ("r4_0", catalog::r4_0_paper(), &e2)] {
        let r = check_product_structure(&g, &e.matrix()).expect("square");
        println!(
            "{name}: involutive {} automorphism {} integrable {} dims {:?}",
            r.involutive, r.automorphism, r.integrable, r.dims()
        );
    }

    let gp = example_10d_product();
    for x in enumerate_extensions(&gp, &e1, &e2).expect("few free pairs") {
        println!("choice {:?}: dims {:?} paracomplex {} valid {}", x.choice, x.dims(), x.is_paracomplex(), x.report.valid());
    }

    let l2 = catalog::abelian(2);
    let (gp, x) = corollary2_construct(&l2, &l2, 1).expect("b1 = 2");
    println!("L2 x L2 (dim {}): dims {:?} valid {}", gp.dim(), x.dims(), x.report.valid());
}
