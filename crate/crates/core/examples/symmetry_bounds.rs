//! The α table and the resulting bounds on compact symmetry groups.
//!
//!     cargo run --example symmetry_bounds -- A3 G2 8

use torus_genus::theorems::{alpha, alpha_groups, simple_group, symmetry_bounds, SymmetryBoundInput};

fn main() -> torus_genus::Result<()> {
    for l in 1..=12 {
        println!("α({l:>2}) = {:>2}  {}", alpha(l)?, alpha_groups(l as u64));
    }

    // Group names followed by b₂, e.g. `A3 G2 8`.
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (names, b2) = match args.split_last() {
        Some((last, rest)) if last.parse::<u64>().is_ok() => (rest.to_vec(), last.parse().unwrap()),
        _ => (vec!["A3".to_string(), "G2".to_string()], 8),
    };
    let mut groups = Vec::new();
    for name in &names {
        match simple_group(name) {
            Some(g) => groups.push(g),
            None => eprintln!("unknown simple group {name}"),
        }
    }
    let (dim, bound) = symmetry_bounds(&SymmetryBoundInput { groups: groups.clone(), b2 })?;
    println!("{} with b₂ = {b2}: dim = {dim}, bound = {bound}", names.join(" × "));
    Ok(())
}
