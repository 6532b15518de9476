//! Property tests over randomly chosen inputs.

use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use torus_genus::cli::{Manifest, PolytopeSpec};
use torus_genus::cohomology::{build_face_ring, CohomologyClass};
use torus_genus::exactalg::{int, interpolate_sqrt, sample_points, HalfLaurent, Rational, RationalQSeries};
use torus_genus::genus::{equivariant_index, BundleSpec};
use torus_genus::polytope::{enumerate_characteristic_matrices, CharacteristicMatrix, QuasitoricManifold, SimplePolytope};
use torus_genus::theorems::{find_circle, EquivariantDegree4Class};

fn series(v: &[i64]) -> RationalQSeries {
    RationalQSeries::from_i64(v)
}

/// Schoolbook convolution, truncated.
fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    (0..a.len()).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

struct Pool {
    polytope: SimplePolytope,
    spec: PolytopeSpec,
    lambdas: Vec<CharacteristicMatrix>,
}

/// Characteristic matrices with entries in [-1, 1] over a few small polytopes.
fn pools() -> &'static [Pool] {
    static POOLS: OnceLock<Vec<Pool>> = OnceLock::new();
    POOLS.get_or_init(|| {
        [PolytopeSpec::Polygon(5), PolytopeSpec::Cube(2), PolytopeSpec::Simplex(3), PolytopeSpec::Cube(3)]
            .into_iter()
            .map(|spec| {
                let polytope = spec.build().unwrap();
                let lambdas: Vec<_> = enumerate_characteristic_matrices(&polytope, 1).collect();
                assert!(!lambdas.is_empty());
                Pool { polytope, spec, lambdas }
            })
            .collect()
    })
}

fn manifold_strategy() -> impl Strategy<Value = (usize, usize)> {
    (0..pools().len()).prop_flat_map(|p| (Just(p), 0..pools()[p].lambdas.len()))
}

fn build((p, l): (usize, usize)) -> QuasitoricManifold {
    let pool = &pools()[p];
    QuasitoricManifold::with_default_spinc(pool.polytope.clone(), pool.lambdas[l].clone()).unwrap()
}

fn random_class(ring: &torus_genus::cohomology::FaceRing, seed: &[i64]) -> CohomologyClass {
    let mut it = seed.iter().cycle();
    (0..=ring.top_degree()).fold(CohomologyClass::zero(ring), |acc, d| {
        let coords: Vec<Rational> = (0..ring.dim(d)).map(|_| int(*it.next().unwrap())).collect();
        acc.add(&CohomologyClass::from_coordinates(ring, d, coords).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_product_matches_convolution(a in prop::collection::vec(-9i64..10, 6), b in prop::collection::vec(-9i64..10, 6)) {
        let prod = series(&a).try_mul(&series(&b)).unwrap();
        prop_assert_eq!(prod, series(&convolve(&a, &b)));
    }

    #[test]
    fn series_inverse_is_two_sided(a0 in prop::sample::select(vec![-3i64, -1, 1, 2, 5]), tail in prop::collection::vec(-9i64..10, 5)) {
        let mut v = vec![a0];
        v.extend(tail);
        let a = series(&v);
        let inv = a.try_invert().unwrap();
        let one = RationalQSeries::one(5, &Rational::zero());
        prop_assert_eq!(a.try_mul(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.try_mul(&a).unwrap(), one);
    }

    #[test]
    fn series_with_zero_constant_has_no_inverse(tail in prop::collection::vec(-9i64..10, 4)) {
        let mut v = vec![0];
        v.extend(tail);
        prop_assert!(series(&v).try_invert().is_err());
    }

    #[test]
    fn interpolation_recovers_laurent_polynomials(
        lo in -8i64..4,
        coeffs in prop::collection::vec(-20i64..21, 1..7),
        num in 1i64..4,
    ) {
        // Doubled exponents lo, lo+2, …; rational coefficients c/num.
        let f = HalfLaurent::from_terms(
            coeffs.iter().enumerate().map(|(j, &c)| (lo + 2 * j as i64, Rational::new(c.into(), num.into()))),
        );
        let hi = lo + 2 * (coeffs.len() as i64 - 1);
        let samples: Vec<_> = sample_points(coeffs.len() + 2).into_iter().map(|s| {
            let y = f.eval_sqrt(&s);
            (s, y)
        }).collect();
        prop_assert_eq!(interpolate_sqrt(&samples, lo, hi).unwrap(), f);
    }

    #[test]
    fn interpolation_rejects_inconsistent_samples(coeffs in prop::collection::vec(-20i64..21, 1..5), bump in 1i64..5) {
        let f = HalfLaurent::from_terms(coeffs.iter().enumerate().map(|(j, &c)| (2 * j as i64, int(c))));
        let mut samples: Vec<_> = sample_points(coeffs.len() + 2).into_iter().map(|s| {
            let y = f.eval_sqrt(&s);
            (s, y)
        }).collect();
        let last = samples.len() - 1;
        samples[last].1 += int(bump);
        prop_assert!(interpolate_sqrt(&samples, 0, 2 * (coeffs.len() as i64 - 1)).is_err());
    }

    #[test]
    fn fixed_point_weights_are_dual_bases(idx in manifold_strategy()) {
        let m = build(idx);
        prop_assert_eq!(m.fixed_points().len(), m.polytope().vertex_count());
        for fp in m.fixed_points() {
            for (k, w) in fp.weights.iter().enumerate() {
                for (l, &j) in fp.vertex.iter().enumerate() {
                    let col = m.lambda().column(j);
                    let dot: i64 = w.iter().zip(&col).map(|(a, b)| a * b).sum();
                    prop_assert_eq!(dot, (k == l) as i64);
                }
            }
            prop_assert!(fp.sign == 1 || fp.sign == -1);
        }
    }

    #[test]
    fn face_ring_dimensions(idx in manifold_strategy()) {
        let m = build(idx);
        let ring = build_face_ring(&m).unwrap();
        let n = m.dim();
        let dims = ring.dims();
        prop_assert_eq!(dims.len(), n + 1);
        prop_assert_eq!(dims[0], 1);
        prop_assert_eq!(dims[n], 1);
        prop_assert_eq!(dims[1], m.facet_count() - n);
        for d in 0..=n {
            prop_assert_eq!(dims[d], dims[n - d]);
        }
        // Betti numbers add up to the number of fixed points.
        prop_assert_eq!(ring.total_dimension(), m.fixed_points().len());
    }

    #[test]
    fn face_ring_is_a_commutative_ring(
        idx in manifold_strategy(),
        a in prop::collection::vec(-4i64..5, 8),
        b in prop::collection::vec(-4i64..5, 8),
        c in prop::collection::vec(-4i64..5, 8),
    ) {
        let ring = build_face_ring(&build(idx)).unwrap();
        let (a, b, c) = (random_class(&ring, &a), random_class(&ring, &b), random_class(&ring, &c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&CohomologyClass::one(&ring)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn units_invert(idx in manifold_strategy(), a in prop::collection::vec(-4i64..5, 8), c in 1i64..4) {
        let ring = build_face_ring(&build(idx)).unwrap();
        let nilpotent = random_class(&ring, &a).sub(&random_class(&ring, &a).part(0));
        let u = nilpotent.add(&CohomologyClass::constant(&ring, int(c)));
        let inv = u.inverse().unwrap();
        prop_assert_eq!(u.mul(&inv), CohomologyClass::one(&ring));
        prop_assert!(nilpotent.inverse().is_none());
    }

    #[test]
    fn manifest_round_trip(
        idx in manifold_strategy(),
        gamma_seed in prop::collection::vec(-2i64..3, 8),
        v_lines in prop::collection::vec(prop::collection::vec(-3i64..4, 8), 0..3),
        xi in prop::collection::vec(-5i64..6, 3),
    ) {
        let pool = &pools()[idx.0];
        let m = build(idx);
        let f = m.facet_count();
        let n = m.dim();
        let manifest = Manifest {
            polytope: pool.spec.clone(),
            lambda: pool.lambdas[idx.1].rows().to_vec(),
            gamma: Some(gamma_seed.iter().take(f).map(|g| 2 * g + 1).collect()),
            bundles: BundleSpec::new(v_lines.iter().map(|l| l[..f].to_vec()).collect(), vec![]),
            circle: Some(xi[..n].to_vec()).filter(|x| x.iter().any(|&c| c != 0)),
        };
        let text = manifest.serialize();
        let parsed = Manifest::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &manifest);
        let rebuilt = parsed.manifold().unwrap();
        prop_assert_eq!(rebuilt.lambda(), m.lambda());
    }

    #[test]
    fn found_circles_are_primitive_kernel_vectors(
        b2 in 1usize..4,
        extra in 1usize..3,
        entries in prop::collection::vec(-6i64..7, 20),
    ) {
        let n = b2 + extra;
        let a22: Vec<Vec<Rational>> = (0..n).map(|i| (0..b2).map(|j| int(entries[i * b2 + j])).collect()).collect();
        let a = EquivariantDegree4Class::from_mixed(a22.clone()).unwrap();
        let xi = find_circle(&a).unwrap();
        prop_assert_eq!(xi.len(), n);
        prop_assert_eq!(xi.iter().fold(0i64, |g, &x| g.gcd(&x)), 1);
        prop_assert!(*xi.iter().find(|&&x| x != 0).unwrap() > 0);
        for j in 0..b2 {
            let s: Rational = (0..n).map(|i| &a22[i][j] * int(xi[i])).sum();
            prop_assert!(s.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The non-equivariant index does not depend on the circle.
    #[test]
    fn index_is_independent_of_the_circle(idx in manifold_strategy(), pick in 0usize..4) {
        let m = build(idx);
        let f = m.facet_count();
        let bundles = BundleSpec::new(vec![(0..f).map(|j| (j == pick % f) as i64).collect()], vec![]);
        let xi1 = m.generic_circle(&[]);
        let xi2 = m.generic_circle(std::slice::from_ref(&xi1));
        let a = equivariant_index(&m, &xi1, &bundles, 1).unwrap().at_one();
        let b = equivariant_index(&m, &xi2, &bundles, 1).unwrap().at_one();
        prop_assert_eq!(a, b);
    }

    /// Each q-coefficient is a virtual representation: integer multiplicities.
    #[test]
    fn character_dimensions_are_integers(idx in manifold_strategy()) {
        let m = build(idx);
        let xi = m.generic_circle(&[]);
        let eq = equivariant_index(&m, &xi, &BundleSpec::none(), 2).unwrap();
        for c in eq.series.coeffs() {
            prop_assert!(c.at_one().is_integer());
            for (_, coeff) in c.terms() {
                prop_assert!(coeff.is_integer());
            }
        }
    }
}
