//! Decomposition types of generator products in small dimensions.

use liegen::genproduct::enumerate_types;

fn main() {
    for n in 3..=8 {
        let types: Vec<String> = enumerate_types(n)
            .iter()
            .map(|t| if t.nilpotent() { format!("{t}*") } else { t.to_string() })
            .collect();
        println!("dim {n}: {}", types.join(" "));
    }
    println!("* nilpotent in every case");
}
