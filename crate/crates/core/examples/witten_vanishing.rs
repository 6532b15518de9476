//! The Witten genus of (S²)ⁿ vanishes identically, already before the circle
//! character is set to 1. ℂP³ is spin too; there the vanishing is forced by
//! the dimension alone, and the equivariant index is rigid.
//!
//!     cargo run --example witten_vanishing

use torus_genus::genus::{equivariant_index, witten_genus, BundleSpec};
use torus_genus::polytope::QuasitoricManifold;

fn main() -> torus_genus::Result<()> {
    let order = 3;
    for n in 1..=3 {
        let m = QuasitoricManifold::sphere_product(n)?.with_gamma(vec![0; 2 * n])?;
        let xi = m.generic_circle(&[]);
        let eq = equivariant_index(&m, &xi, &BundleSpec::none(), order)?;
        println!(
            "(S²)^{n}: φ_W = {}, equivariant along {xi:?}: {}",
            witten_genus(&m, order)?.to_strings().join(", "),
            if eq.is_identically_zero() { "identically zero" } else { "nonzero" },
        );
    }

    let cp3 = QuasitoricManifold::projective_space(3)?.with_gamma(vec![0; 4])?;
    println!("CP³: φ_W = {}", witten_genus(&cp3, order)?.to_strings().join(", "));
    let eq = equivariant_index(&cp3, &[1, 2, 4], &BundleSpec::none(), 1)?;
    print!("CP³ along (1, 2, 4):\n{eq}");
    Ok(())
}
