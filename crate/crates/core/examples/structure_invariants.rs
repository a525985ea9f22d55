//! Derived and lower central series, center and generators of the catalog
//! algebras.

use liegen::catalog;

fn main() {
    for e in catalog::listed() {
        let g = &e.algebra;
        let s = g.series_report();
        let gens: Vec<&str> = g.minimal_generators().iter().map(|&i| g.label(i)).collect();
        println!(
            "{:<18} dim {:<2} derived {:?} lcs {:?} center {} b1 {} generators {:?} nilpotent {}",
            e.name, g.dim(), s.derived_dims, s.lower_central_dims, s.center_dim, s.b1, gens, s.nilpotent
        );
    }
}
