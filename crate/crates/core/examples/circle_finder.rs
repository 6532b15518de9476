//! Finding a circle along which the mixed part of an equivariant degree-4
//! class vanishes, and the integer I that decides vanishing of the index.
//!
//!     cargo run --example circle_finder

use torus_genus::exactalg::{fmt_rational, int, Rational};
use torus_genus::genus::{equivariant_index, BundleSpec};
use torus_genus::polytope::QuasitoricManifold;
use torus_genus::theorems::{find_circle, index_I, EquivariantDegree4Class};
use torus_genus::Error;

fn matrix(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

fn main() -> torus_genus::Result<()> {
    // Torus rank 3, b₂ = 2: the kernel of a22ᵀ is a line.
    let a = EquivariantDegree4Class::from_mixed(matrix(&[&[1, 0], &[0, 1], &[1, 1]]))?;
    let xi = find_circle(&a)?;
    let along = a.mixed_part_along(&xi.iter().map(|&x| x.into()).collect::<Vec<_>>());
    println!("circle {xi:?}, a22ᵀξ = {:?}", along.iter().map(fmt_rational).collect::<Vec<_>>());

    // Rank not larger than b₂: the hypothesis fails, a kernel may still exist.
    let b = EquivariantDegree4Class::from_mixed(matrix(&[&[2, -4], &[1, -2]]))?;
    match find_circle(&b) {
        Err(Error::Hypothesis { reason, kernel }) => println!("rejected ({reason}), kernel {kernel:?}"),
        other => println!("unexpected: {other:?}"),
    }

    // The defect p₁(V ⊕ W) - p₁(M) on ℂP³ with V = TM ⊕ ℂ (four copies of L(x)).
    let cp3 = QuasitoricManifold::projective_space(3)?;
    let tangent = BundleSpec::new((0..4).map(|i| (0..4).map(|j| (i == j) as i64).collect()).collect(), vec![]);
    let defect = EquivariantDegree4Class::pontryagin_defect(&cp3, &tangent)?;
    println!("CP³ defect: a04 vanishes = {}, b₂ = {}", defect.a04_vanishes, defect.b2());

    // On (S²)² with no bundles, I < 0 and the index vanishes along ξ.
    let s2s2 = QuasitoricManifold::sphere_product(2)?;
    let i = index_I(&s2s2, &[1, 1], &BundleSpec::none())?;
    let eq = equivariant_index(&s2s2, &[1, 1], &BundleSpec::none(), 3)?;
    println!("(S²)²: I = {i}, equivariant index identically zero: {}", eq.is_identically_zero());

    // A line bundle V = L(v₁) on S² breaks the constancy of I over the fixed points.
    let v = BundleSpec::new(vec![vec![1, 0]], vec![]);
    if let Err(e) = index_I(&QuasitoricManifold::two_sphere(), &[1], &v) {
        println!("S² with V = L(v₁): {e}");
    }
    Ok(())
}
