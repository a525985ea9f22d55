//! Round trip between brackets and Maurer-Cartan equations.

use liegen::catalog;
use liegen::exterior::{format_mc_system, maurer_cartan, FormStyle};
use liegen::io::{emit_mc, mc_to_brackets, parse_algebra};

fn main() {
    let g = catalog::remark_5d();
    for line in format_mc_system(&g, FormStyle::Unicode) {
        println!("{line}");
    }
    let back = mc_to_brackets(&maurer_cartan(&g), Some(g.labels().to_vec())).expect("constant 2-forms");
    println!("brackets recovered: {}", back.same_structure(&g));

    let text = emit_mc(&g);
    let parsed = parse_algebra(&text).expect("own output parses");
    println!("text round trip: {}", parsed.same_structure(&g));
}
