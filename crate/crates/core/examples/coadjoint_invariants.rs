//! Counts coadjoint invariants of the 5-dimensional example algebra and of
//! its generator product with itself, by both routes.

use std::time::Instant;

use liegen::catalog;
use liegen::coadjoint::{invariant_report, product_j0_formula};
use liegen::exterior::{dual_names, FormStyle};
use liegen::generator_product;

fn main() {
    let g = catalog::remark_5d();
    let r = invariant_report(&g);
    let names = dual_names(&g, FormStyle::Unicode);
    println!("g: N_rank={} j0={} N_wedge={}", r.n_rank, r.j0, r.n_wedge);
    println!("   witness {}", r.witness_form.format_with(&names, FormStyle::Unicode));

    let start = Instant::now();
    let gp = generator_product(&g, &g).expect("valid factors");
    let r = invariant_report(&gp.algebra);
    let names = dual_names(&gp.algebra, FormStyle::Unicode);
    println!("g x g (dim {}): N_rank={} j0={} N_wedge={}", gp.dim(), r.n_rank, r.j0, r.n_wedge);
    let mono: Vec<&str> = r.certificate_monomial.iter().map(|&i| names[i].as_str()).collect();
    println!("   coefficient of {} in θ^{}: {}", mono.join("∧"), r.j0, r.generic_certificate);
    println!("   witness {}", r.witness_form.format_with(&names, FormStyle::Unicode));
    println!("   computed in {:.2?}", start.elapsed());

    let f = product_j0_formula(&g, &g).expect("solvable factors");
    let fl: Vec<&str> = f.f.iter().map(|&i| g.label(i)).collect();
    println!(
        "j0 formula: {} = {} + {} + {} (F = {:?}), bound {} <= {} <= {}",
        f.lhs,
        f.j0_1,
        f.j0_2,
        f.j0_omega,
        fl,
        f.m1m2,
        f.n_product,
        f.n1 + f.n2 + f.m1m2 - 2 * f.j0_omega
    );
}
