//! Independent oracles against the localization engine.

use num_traits::{Signed, Zero};

use torus_genus::cohomology::{build_face_ring, CohomologyClass, FaceRing};
use torus_genus::exactalg::{int, Rational};
use torus_genus::genus::{cohomological_index, equivariant_index, euler_characteristic, signature, BundleSpec};
use torus_genus::polytope::{enumerate_characteristic_matrices, QuasitoricManifold, SimplePolytope};

/// Signature of the middle-degree intersection form, by symmetric Gaussian
/// elimination (congruence to a diagonal form).
fn intersection_signature(ring: &FaceRing) -> i64 {
    let n = ring.top_degree();
    assert!(n % 2 == 0);
    let h = n / 2;
    let k = ring.dim(h);
    let basis: Vec<CohomologyClass> = (0..k)
        .map(|i| {
            let coords = (0..k).map(|j| int((i == j) as i64)).collect();
            CohomologyClass::from_coordinates(ring, h, coords).unwrap()
        })
        .collect();
    let mut q: Vec<Vec<Rational>> =
        basis.iter().map(|a| basis.iter().map(|b| a.mul(b).integrate_top()).collect()).collect();
    let mut sig = 0;
    let mut live: Vec<usize> = (0..k).collect();
    while let Some(&first) = live.first() {
        // Pivot on a nonzero diagonal entry; if none, mix in a partner row.
        let pivot = match live.iter().copied().find(|&i| !q[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let Some(j) = live.iter().copied().find(|&j| !q[first][j].is_zero()) else {
                    live.retain(|&i| i != first);
                    continue;
                };
                // e_first += e_j makes the diagonal 2·q[first][j] ≠ 0.
                for c in 0..k {
                    let v = q[j][c].clone();
                    q[first][c] += v;
                }
                for r in 0..k {
                    let v = q[r][j].clone();
                    q[r][first] += v;
                }
                first
            }
        };
        let d = q[pivot][pivot].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        live.retain(|&i| i != pivot);
        for &i in &live {
            let f = &q[i][pivot] / &d;
            for c in 0..k {
                let v = &f * &q[pivot][c];
                q[i][c] -= v;
            }
            for r in 0..k {
                let v = &f * &q[r][pivot];
                q[r][i] -= v;
            }
        }
    }
    sig
}

fn four_manifolds() -> Vec<QuasitoricManifold> {
    let mut out = Vec::new();
    for p in [SimplePolytope::cube(2).unwrap(), SimplePolytope::polygon(5).unwrap(), SimplePolytope::polygon(6).unwrap()] {
        out.extend(
            enumerate_characteristic_matrices(&p, 1)
                .step_by(7)
                .take(6)
                .map(|l| QuasitoricManifold::with_default_spinc(p.clone(), l).unwrap()),
        );
    }
    out.push(QuasitoricManifold::projective_space(2).unwrap());
    out.push(QuasitoricManifold::sphere_product(2).unwrap());
    out
}

#[test]
fn signature_matches_intersection_form_in_dimension_four() {
    let mut nonzero = 0;
    for m in four_manifolds() {
        let ring = build_face_ring(&m).unwrap();
        let expected = intersection_signature(&ring);
        nonzero += (expected != 0) as usize;
        assert_eq!(signature(&m).unwrap(), int(expected), "{:?}", m.lambda().rows());
    }
    assert!(nonzero >= 3, "oracle never sees a nonzero signature");
}

#[test]
fn signature_matches_intersection_form_in_dimension_eight() {
    let fours = four_manifolds();
    let cp4 = QuasitoricManifold::projective_space(4).unwrap();
    let mut cases = vec![cp4];
    cases.push(fours[0].product(&fours[fours.len() - 2]));
    cases.push(fours[7].product(&fours[13]));
    for m in cases {
        let ring = build_face_ring(&m).unwrap();
        assert_eq!(signature(&m).unwrap(), int(intersection_signature(&ring)));
    }
}

#[test]
fn signature_is_multiplicative() {
    let fours = four_manifolds();
    for (a, b) in [(0, 6), (6, 12), (12, fours.len() - 2)] {
        let (ma, mb) = (&fours[a], &fours[b]);
        let product = signature(&ma.product(mb)).unwrap();
        assert_eq!(product, signature(ma).unwrap() * signature(mb).unwrap());
    }
}

#[test]
fn euler_characteristic_counts_fixed_points() {
    for m in four_manifolds() {
        let chi = euler_characteristic(&m).unwrap();
        assert_eq!(chi, int(m.polytope().vertex_count() as i64));
        assert_eq!(chi, int(build_face_ring(&m).unwrap().total_dimension() as i64));
    }
}

#[test]
fn cp2_character_at_one_is_the_cohomological_value() {
    let m = QuasitoricManifold::projective_space(2).unwrap();
    let eq = equivariant_index(&m, &[1, 2], &BundleSpec::none(), 2).unwrap();
    assert!(!eq.series.coeff(0).is_empty());
    assert_eq!(eq.at_one(), cohomological_index(&m, &BundleSpec::none(), 2).unwrap());
}

#[test]
fn twisted_indices_agree_on_hirzebruch_surfaces() {
    // Hₖ: the square with columns (1,0), (0,1), (-1,k), (0,-1).
    for k in 0..=3 {
        let lambda = torus_genus::polytope::CharacteristicMatrix::from_columns(
            2,
            &[vec![1, 0], vec![0, 1], vec![-1, k], vec![0, -1]],
        )
        .unwrap();
        let m = QuasitoricManifold::with_default_spinc(SimplePolytope::cube(2).unwrap(), lambda).unwrap();
        for bundles in [
            BundleSpec::none(),
            BundleSpec::new(vec![vec![1, 0, 0, 0], vec![0, 1, 1, 0]], vec![]),
            BundleSpec::new(vec![], vec![vec![1, 1, 0, 0], vec![1, 1, 0, 0]]),
        ] {
            let local = torus_genus::genus::index(&m, &bundles, 3).unwrap();
            assert_eq!(local, cohomological_index(&m, &bundles, 3).unwrap(), "k = {k}, {bundles:?}");
        }
    }
}
