//! Rational cohomology from the face ring: graded dimensions, characteristic
//! classes, and the connected-sum basis with its β coefficients.
//!
//!     cargo run --example face_ring

use torus_genus::cohomology::{beta_coefficients, build_face_ring, connected_sum_basis, pontryagin_p1, spinc_c1};
use torus_genus::exactalg::fmt_rational;
use torus_genus::polytope::{CharacteristicMatrix, QuasitoricManifold, SimplePolytope};

fn show(name: &str, m: &QuasitoricManifold) -> torus_genus::Result<()> {
    let ring = build_face_ring(m)?;
    println!("{name}: dims {:?}, {} generators", ring.dims(), ring.generator_count());
    let p1 = pontryagin_p1(&ring);
    let c1 = spinc_c1(&ring);
    println!("  c₁ = {c1}, p₁ = {p1}, ⟨c₁^n⟩ = {}", fmt_rational(&c1.pow(ring.top_degree() as u32).integrate_top()));
    match connected_sum_basis(&ring) {
        Ok(basis) => {
            let shown: Vec<String> = basis.iter().map(|b| b.to_string()).collect();
            let beta: Vec<String> = beta_coefficients(&ring)?.iter().map(fmt_rational).collect();
            println!("  connected-sum basis [{}], β = ({})", shown.join(", "), beta.join(", "));
        }
        Err(e) => println!("  not of connected-sum type: {e}"),
    }
    Ok(())
}

fn main() -> torus_genus::Result<()> {
    show("CP³", &QuasitoricManifold::projective_space(3)?)?;
    show("S²×S²", &QuasitoricManifold::sphere_product(2)?)?;

    // CP² # CP² (signature 2). In dimension 4 the degree-4 test cannot separate summands.
    let square = SimplePolytope::cube(2)?;
    let lambda = CharacteristicMatrix::from_columns(2, &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]])?;
    show("square, columns (1,0) (0,1) (1,1) (2,1)", &QuasitoricManifold::with_default_spinc(square, lambda)?)?;

    // Cutting a vertex of Δ³: a connected sum of two copies of ℂP³.
    let p = SimplePolytope::simplex(3)?.vertex_cut(&[0, 1, 2])?;
    let lambda = CharacteristicMatrix::from_columns(
        3,
        &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1], vec![1, 1, 1]],
    )?;
    show("Δ³ with a vertex cut", &QuasitoricManifold::with_default_spinc(p, lambda)?)?;
    Ok(())
}
