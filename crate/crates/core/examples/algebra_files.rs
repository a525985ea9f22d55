//! Reading the text format, including error reporting.

use liegen::io::{emit_algebra, parse_algebra};

const INPUT: &str = "\
# the affine algebra of the line, twice, side by side
dim 4
basis A B C D
[A, B] = B
[C, D] = D
";

fn main() {
    let g = parse_algebra(INPUT).expect("valid input");
    print!("{}", emit_algebra(&g));
    println!("b1 = {}", g.betti1());

    for bad in ["dim 2\n[X1, X2] = X3", "dim 2\n[X1, X2] = X2\n[X2, X1] = X2", "dim 3\n[X1,X2]=X2\n[X1,X3]=X3\n[X2,X3]=X1"] {
        match parse_algebra(bad) {
            Ok(_) => println!("accepted"),
            Err(e) => println!("rejected: {e}"),
        }
    }
}
