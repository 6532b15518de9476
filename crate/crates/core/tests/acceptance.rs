//! One PASS/FAIL line per acceptance criterion. Time limits are part of each
//! criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torus_genus::cohomology::{beta_coefficients, build_face_ring, CohomologyClass};
use torus_genus::exactalg::{int, Rational, RationalQSeries};
use torus_genus::genus::{
    a_hat_genus, cohomological_index, cohomological_index_in, equivariant_index, euler_characteristic, index,
    signature, witten_genus, BundleSpec,
};
use torus_genus::polytope::{enumerate_characteristic_matrices, CharacteristicMatrix, QuasitoricManifold, SimplePolytope};
use torus_genus::theorems::{
    alpha, find_circle, finiteness_census, index_I, synthetic_projective_ring, EquivariantDegree4Class,
    Lemma52Bundles,
};

fn unit(m: usize, i: usize) -> Vec<i64> {
    (0..m).map(|j| (j == i) as i64).collect()
}

/// `dim/rank` over the classical and exceptional families, written out
/// independently of the library's group table.
fn best_ratio(l: u64) -> u64 {
    let mut best = 0;
    for r in 1..=l {
        best = best.max((r * (r + 2)) / r); // A_r
        if r >= 2 {
            best = best.max((r * (2 * r + 1)) / r); // B_r, C_r
        }
        if r >= 4 {
            best = best.max((r * (2 * r - 1)) / r); // D_r
        }
    }
    for (rank, dim) in [(2, 14), (4, 52), (6, 78), (7, 133), (8, 248)] {
        if rank <= l {
            best = best.max(dim / rank);
        }
    }
    best
}

fn criterion_1() -> Duration {
    let start = Instant::now();
    for l in 1..=30u64 {
        assert_eq!(alpha(l as i64).unwrap(), best_ratio(l), "l = {l}");
    }
    let t = start.elapsed();
    assert!(t < Duration::from_millis(1), "{t:?}");
    t
}

fn criterion_2() -> Duration {
    let mut worst = Duration::ZERO;
    for n in 3..=6 {
        let start = Instant::now();
        let ring = synthetic_projective_ring(n).unwrap();
        let b = Lemma52Bundles::construct(&ring, 0).unwrap();
        assert_eq!(b.case, 1);
        let report = b.verify(0).unwrap();
        assert!(report.all_hold(), "{report:?}");
        let class = |c: &Vec<i64>| CohomologyClass::generator(&ring, 0).scale(&int(c[0]));
        let v: Vec<CohomologyClass> = b.v.iter().map(class).collect();
        let w: Vec<CohomologyClass> = b.w.iter().map(class).collect();
        let euler = v.iter().fold(CohomologyClass::one(&ring), |a, y| a.mul(y)).integrate().unwrap();
        let idx = cohomological_index_in(&ring, &v, &w, 0, 0).unwrap();
        assert_eq!(idx.coeff(0), &euler);
        assert_eq!(euler.abs(), int(2), "n = {n}");
        let t = start.elapsed();
        assert!(t < Duration::from_secs(1), "n = {n}: {t:?}");
        worst = worst.max(t);
    }
    worst
}

fn manifold(p: SimplePolytope, columns: &[Vec<i64>]) -> QuasitoricManifold {
    let n = p.dim();
    QuasitoricManifold::with_default_spinc(p, CharacteristicMatrix::from_columns(n, columns).unwrap()).unwrap()
}

/// ℂP² # ℂP² and ℂP² # (−ℂP²) on the square, and a pentagon model.
fn surfaces() -> Vec<QuasitoricManifold> {
    let square = SimplePolytope::cube(2).unwrap();
    vec![
        manifold(square.clone(), &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]),
        manifold(square, &[vec![1, 0], vec![0, 1], vec![-1, 1], vec![0, -1]]),
        manifold(
            SimplePolytope::polygon(5).unwrap(),
            &[vec![1, 0], vec![0, 1], vec![-1, 1], vec![-1, 0], vec![0, -1]],
        ),
    ]
}

fn random_models(rng: &mut ChaCha8Rng) -> Vec<QuasitoricManifold> {
    let mut out = Vec::new();
    for (p, count) in [(SimplePolytope::simplex(3).unwrap(), 5), (SimplePolytope::cube(3).unwrap(), 5)] {
        let mut all: Vec<_> = enumerate_characteristic_matrices(&p, 1).collect();
        all.shuffle(rng);
        assert!(all.len() >= count, "only {} matrices", all.len());
        out.extend(
            all.into_iter()
                .take(count)
                .map(|l| QuasitoricManifold::with_default_spinc(p.clone(), l).unwrap()),
        );
    }
    out
}

fn criterion_3() -> Duration {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut suite: Vec<QuasitoricManifold> = (1..=4).map(|n| QuasitoricManifold::projective_space(n).unwrap()).collect();
    suite.extend((1..=3).map(|n| QuasitoricManifold::sphere_product(n).unwrap()));
    suite.extend(surfaces());
    suite.extend(random_models(&mut rng));
    assert!(suite.len() >= 20);
    let order = 4;
    for (i, m) in suite.iter().enumerate() {
        let f = m.facet_count();
        let twisted = BundleSpec::new(vec![unit(f, 0)], vec![line_times(f, 1, 2)]);
        for bundles in [BundleSpec::none(), twisted] {
            let local = index(m, &bundles, order).unwrap();
            let coh = cohomological_index(m, &bundles, order).unwrap();
            assert_eq!(local, coh, "instance {i}, {bundles:?}");
        }
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(60), "{t:?}");
    t
}

fn line_times(m: usize, i: usize, c: i64) -> Vec<i64> {
    unit(m, i).into_iter().map(|x| x * c).collect()
}

fn criterion_4() -> Duration {
    let start = Instant::now();
    let mut cases = vec![(QuasitoricManifold::two_sphere(), vec![1])];
    for n in 1..=3 {
        cases.push((QuasitoricManifold::sphere_product(n).unwrap(), vec![1; n]));
    }
    for (m, xi) in &cases {
        let i = index_I(m, xi, &BundleSpec::none()).unwrap();
        assert!(i < 0, "I = {i}");
        let eq = equivariant_index(m, xi, &BundleSpec::none(), 3).unwrap();
        assert!(eq.is_identically_zero(), "{eq}");
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(30), "{t:?}");
    t
}

fn criterion_5() -> Duration {
    let start = Instant::now();
    for n in 1..=3 {
        let w = witten_genus(&QuasitoricManifold::sphere_product(n).unwrap(), 3).unwrap();
        assert!(w.coeffs().iter().all(Zero::is_zero), "n = {n}: {:?}", w.to_strings());
        assert_eq!(w.order(), 3);
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(30), "{t:?}");
    t
}

fn criterion_6() -> Duration {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let start = Instant::now();
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let b2 = rng.gen_range(1..n);
        let a22: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..b2).map(|_| Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into())).collect())
            .collect();
        let a = EquivariantDegree4Class::from_mixed(a22.clone()).unwrap();
        let xi = find_circle(&a).unwrap();
        assert!(xi.iter().any(|&x| x != 0));
        let g = xi.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
        assert_eq!(g, 1, "{xi:?}");
        for b in 0..b2 {
            let s: Rational = (0..n).map(|i| &a22[i][b] * int(xi[i])).sum();
            assert!(s.is_zero());
        }
    }
    let t = start.elapsed();
    assert!(t < Duration::from_secs(1), "{t:?}");
    t
}

fn criterion_7() -> Duration {
    let start = Instant::now();
    for n in 1..=4 {
        let m = QuasitoricManifold::projective_space(n).unwrap();
        assert_eq!(m.fixed_points().len(), n + 1);
        assert_eq!(euler_characteristic(&m).unwrap(), int(n as i64 + 1));
    }
    assert_eq!(signature(&QuasitoricManifold::projective_space(2).unwrap()).unwrap(), int(1));
    let cp3 = QuasitoricManifold::projective_space(3).unwrap();
    assert!(cp3.is_spin());
    assert_eq!(a_hat_genus(&cp3).unwrap(), int(0));
    assert_eq!(witten_genus(&cp3, 0).unwrap().coeff(0), &int(0));
    start.elapsed()
}

fn criterion_8() -> Duration {
    let start = Instant::now();
    for k in 1..=2 {
        for bound in 1..=2 {
            let r = finiteness_census(3, k, bound).unwrap();
            assert!(r.matched > 0);
            assert!(r.passed(), "{:?}", r.violations);
            for beta in &r.betas {
                assert_eq!(beta.len(), k);
                assert!(beta.iter().all(|b| b.is_positive() && *b <= int(4)), "{beta:?}");
            }
        }
    }
    // Independent recount for one model: β of ℂP³ straight from its ring.
    let ring = build_face_ring(&QuasitoricManifold::projective_space(3).unwrap()).unwrap();
    assert_eq!(beta_coefficients(&ring).unwrap(), vec![int(4)]);
    let t = start.elapsed();
    assert!(t < Duration::from_secs(300), "{t:?}");
    t
}

fn criterion_9() -> Duration {
    let start = Instant::now();
    let order = 3;
    let s2 = QuasitoricManifold::two_sphere();
    let cp1 = QuasitoricManifold::projective_space(1).unwrap();
    let on_s2 = BundleSpec::new(vec![vec![1, 0]], Vec::new());
    let on_cp1 = BundleSpec::new(vec![vec![0, 1]], vec![vec![2, 0]]);
    let left = index(&s2, &on_s2, order).unwrap();
    let right = index(&cp1, &on_cp1, order).unwrap();
    assert!(!left.is_zero() && !right.is_zero(), "{:?} {:?}", left.to_strings(), right.to_strings());
    let product = s2.product(&cp1);
    let mut bundles = on_s2.pull_back(0, 4);
    let lifted = on_cp1.pull_back(2, 4);
    bundles.v.extend(lifted.v);
    bundles.w.extend(lifted.w);
    let whole: RationalQSeries = index(&product, &bundles, order).unwrap();
    assert_eq!(whole, left.try_mul(&right).unwrap());
    assert_eq!(whole, cohomological_index(&product, &bundles, order).unwrap());
    start.elapsed()
}

type Criterion = (&'static str, fn() -> Duration);

// Runs without the libtest harness so the verdict lines are never captured.
fn main() {
    let criteria: [Criterion; 9] = [
        ("alpha table, l = 1..30", criterion_1),
        ("synthetic ℂPⁿ pairing ±2, n = 3..6", criterion_2),
        ("localization = cohomology on 20+ instances", criterion_3),
        ("I < 0 forces a vanishing equivariant index", criterion_4),
        ("Witten genus of (S²)ⁿ vanishes to q³", criterion_5),
        ("circle finder on 100 random matrices", criterion_6),
        ("χ(ℂPⁿ), signature(ℂP²), Â(ℂP³)", criterion_7),
        ("census β bounds, n = 3, k = 1, 2", criterion_8),
        ("product formula on S² × ℂP¹", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(t) => println!("criterion {} PASS ({t:.2?}): {name}", i + 1),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {} FAIL: {name}: {msg}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
